#include "doctest.h"
#include "support.hpp"

#include "mhol/error.hpp"

using namespace mhol;
using namespace testsupport;

TEST_CASE("evaluate and form constructors") {
  GroupSpec s = spec_zero(3, 2);
  BilinearForm p1 = power_form(s, 1);
  CHECK(evaluate(p1, {0, 0}, {1, 2}) == FpVec{0});
  CHECK(evaluate(BilinearForm(s), {1, 2}, {2, 1}) == FpVec{0});
  CHECK(evaluate(p1, {1, 0}, {0, 1}) == FpVec{1});
  CHECK(power_form(s, 0).is_zero());
  CHECK(p1.at(0, 1) == FpVec{1});
  CHECK(p1.at(1, 0) == FpVec{2});
  CHECK(power_form(s, -static_cast<std::int64_t>(s.field().half())) == p1);

  GroupSpec s3 = spec_zero(3, 3);
  PrimeField f(3);
  CHECK(sigma_form(SigmaEndo::from_sigma(s3, FpMatrix(f, 3, 3))).is_zero());
  CHECK(sigma_form(SigmaEndo::from_sigma(s3, FpMatrix::scalar(f, 3, 2))) == power_form(s3, 2));
  BilinearForm diag = sigma_form(SigmaEndo::from_sigma(s3, mat(3, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})));
  CHECK(diag.at(0, 1) == FpVec{1, 0, 0});
  CHECK(diag.at(0, 2) == FpVec{0, 0, 0});
}

TEST_CASE("antisym_to_sigma") {
  GroupSpec s = spec_zero(5, 3);
  CHECK(antisym_to_sigma(BilinearForm(s)).s.is_zero());
  CHECK(antisym_to_sigma(power_form(s, 3)).s == FpMatrix::scalar(s.field(), 3, 3));
  BilinearForm sym(s);
  sym.set(0, 1, {1, 0, 0});
  sym.set(1, 0, {1, 0, 0});
  CHECK_THROWS_WITH_AS(antisym_to_sigma(sym), doctest::Contains("NotAntiSymmetric"), Error);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    BilinearForm a = random_antisym(s, rng);
    CHECK(sigma_form(antisym_to_sigma(a)) == a);
  }
}

TEST_CASE("sym/antisym split") {
  std::mt19937_64 rng(5);
  GroupSpec s = spec_zero(3, 3);
  BilinearForm sym = random_sym(s, rng);
  auto split = sym_antisym_split(sym);
  CHECK(split.symmetric == sym);
  CHECK(split.antisymmetric.is_zero());
  auto p = sym_antisym_split(power_form(s, 2));
  CHECK(p.symmetric.is_zero());
  CHECK(p.antisymmetric == power_form(s, 2));
  for (GroupSpec sp : {spec_zero(3, 3), spec_zero(5, 2), spec_zero(7, 4)})
    for (int t = 0; t < 1000; ++t) {
      BilinearForm d = random_form(sp, rng);
      auto parts = sym_antisym_split(d);
      REQUIRE(parts.symmetric.is_symmetric());
      REQUIRE(parts.antisymmetric.is_antisymmetric());
      REQUIRE(parts.symmetric + parts.antisymmetric == d);
    }
}

TEST_CASE("forms under addition") {
  std::mt19937_64 rng(9);
  GroupSpec s = spec_zero(5, 3);
  for (int t = 0; t < 100; ++t) {
    BilinearForm x = random_form(s, rng), y = random_form(s, rng), z = random_form(s, rng);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + BilinearForm(s) == x);
    CHECK(x - x == BilinearForm(s));
  }
}

TEST_CASE("circle operation examples") {
  GroupSpec s = spec_zero(3, 2);
  std::mt19937_64 rng(13);
  GroupElement e1 = random_element(s, rng), e2 = random_element(s, rng);
  CHECK(circle_mul(BilinearForm(s), e1, e2) == multiply(s, e1, e2));
  CHECK(circle_mul(random_form(s, rng), e1, identity_element(s)) == e1);
  CHECK(circle_mul(power_form(s, 1), generator(s, 0), generator(s, 1)) == elem({1, 1}, {1}));

  CHECK(circle_inverse(random_form(s, rng), identity_element(s)) == identity_element(s));
  BilinearForm anti = power_form(s, 2);
  CHECK(circle_inverse(anti, e1) == inverse(s, e1));

  BilinearForm sym = random_sym(s, rng);
  CHECK(circle_commutator(sym, e1, e2) == commutator(s, e1, e2));
  CHECK(circle_commutator(random_form(s, rng), e1, e1) == identity_element(s));
}

TEST_CASE("circle group laws") {
  std::mt19937_64 rng(17);
  for (GroupSpec s : {spec_zero(3, 2), spec_with(3, 2, {{1}, {2}}), spec_with(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                      spec_zero(5, 2)}) {
    CayleyTable g(s);
    const auto& ix = g.indexer();
    for (int rep = 0; rep < 3; ++rep) {
      BilinearForm d = random_form(s, rng);
      FormTable t(d, ix);
      const std::uint32_t order = g.order();
      for (std::uint32_t x = 0; x < order; ++x) {
        CHECK(t.circ(g, x, 0) == x);
        GroupElement xe = ix.element(x);
        CHECK(ix.index(circle_mul(d, xe, circle_inverse(d, xe))) == 0);
        CHECK(ix.index(circle_mul(d, circle_inverse(d, xe), xe)) == 0);
      }
      bool assoc = true;
      if (order <= 729) {
        for (std::uint32_t x = 0; x < order && assoc; ++x)
          for (std::uint32_t y = 0; y < order && assoc; ++y)
            for (std::uint32_t z = 0; z < order && assoc; ++z)
              assoc = t.circ(g, t.circ(g, x, y), z) == t.circ(g, x, t.circ(g, y, z));
      }
      CHECK(assoc);
      for (std::uint32_t x = 0; x < order; x += 3)
        for (std::uint32_t y = 0; y < order; y += 5) {
          GroupElement xe = ix.element(x), ye = ix.element(y);
          CHECK(circle_commutator(d, xe, ye) == circle_commutator_by_definition(d, xe, ye));
          CHECK(ix.index(circle_mul(d, xe, ye)) == t.circ(g, x, y));
        }
    }
  }
}

TEST_CASE("sigma form circle commutators use tau") {
  std::mt19937_64 rng(19);
  GroupSpec s = spec_zero(5, 3);
  for (int t = 0; t < 100; ++t) {
    SigmaEndo se = SigmaEndo::from_sigma(s, random_matrix(s.field(), 3, 3, rng));
    BilinearForm d = sigma_form(se);
    GroupElement x = random_element(s, rng), y = random_element(s, rng);
    CHECK(circle_commutator(d, x, y).c == vec_mat(wedge(s, x.a, y.a), se.tau));
    CHECK(SigmaEndo::from_tau(s, se.tau).s == se.s);
  }
}

TEST_CASE("gamma maps") {
  GroupSpec s = spec_zero(3, 2);
  CayleyTable g(s);
  const auto& ix = g.indexer();
  GammaMap id = gamma_of(power_form(s, 1), g, identity_element(s));
  for (std::uint32_t x = 0; x < g.order(); ++x) CHECK(id.images[x] == x);
  CHECK(id.valid());
  GammaMap zero = gamma_of(BilinearForm(s), g, generator(s, 1));
  for (std::uint32_t x = 0; x < g.order(); ++x) CHECK(zero.images[x] == x);

  GammaMap gx2 = gamma_of(power_form(s, 1), g, generator(s, 1));
  CHECK(gx2.valid());
  CHECK(ix.element(gx2.images[ix.index(generator(s, 0))]) == elem({1, 0}, {1}));

  // Anti-homomorphism into Aut(G) along the circle operation, and the
  // defining relation x o y = x^gamma(y) y.
  std::mt19937_64 rng(23);
  for (GroupSpec sp : {spec_zero(3, 2), spec_with(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}) {
    CayleyTable h(sp);
    BilinearForm d = random_form(sp, rng);
    FormTable t(d, h.indexer());
    std::vector<GammaMap> gam;
    for (std::uint32_t y = 0; y < h.order(); ++y) gam.push_back(gamma_of(t, h, y));
    for (std::uint32_t y = 0; y < h.order(); y += 11) {
      CHECK(gam[y].valid());
      for (std::uint32_t x = 0; x < h.order(); x += 13) CHECK(t.circ(h, x, y) == h.mul(gam[y].images[x], y));
    }
    for (std::uint32_t x = 0; x < h.order(); x += 7)
      for (std::uint32_t y = 0; y < h.order(); y += 5) {
        const auto& gxy = gam[h.mul(x, y)];
        bool anti = true;
        for (std::uint32_t z = 0; z < h.order(); z += 3)
          anti = anti && gxy.images[z] == gam[x].images[gam[y].images[z]];
        CHECK(anti);
      }
  }
}

TEST_CASE("tampered tables are rejected") {
  GroupSpec s = spec_zero(3, 2);
  CayleyTable g(s);
  FormTable good(power_form(s, 1), g.indexer());
  std::mt19937_64 rng(29);
  CHECK(brace_compatibility_check(good, g, 0, rng));
  CHECK(brace_compatibility_check(FormTable(BilinearForm(s), g.indexer()), g, 0, rng));
  FormTable bad = good.with_entry(1, 1, (good.value(1, 1) + 1) % 3);
  CHECK_FALSE(brace_compatibility_check(bad, g, 0, rng));
  CHECK_FALSE(gamma_of(bad, g, g.indexer().compose(1, 0)).valid());
}

TEST_CASE("classify_antisym examples") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    GroupSpec s = spec_zero(p, 3);
    PrimeField f(p);
    auto ab = classify_antisym(power_form(s, -static_cast<std::int64_t>(f.half())));
    CHECK(ab.abelian);
    auto full = classify_antisym(sigma_form(SigmaEndo::from_sigma(s, FpMatrix::scalar(f, 3, 1))));
    if (p != 3) {
      CHECK(full.derived_full);
      CHECK(full.center_equal);
      CHECK_FALSE(full.abelian);
    }
    // S with I + 2S = diag(1, 1, 0), singular and nonzero.
    FpMatrix tau = mat(p, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    auto partial = classify_antisym(sigma_form(SigmaEndo::from_tau(s, tau)));
    CHECK_FALSE(partial.derived_full);
    CHECK_FALSE(partial.abelian);
  }
  GroupSpec s = spec_zero(3, 2);
  BilinearForm sym(s);
  sym.set(0, 0, {1});
  CHECK_THROWS_AS(classify_antisym(sym), Error);
}

TEST_CASE("equivariance") {
  GroupSpec s = spec_zero(3, 2);
  std::mt19937_64 rng(31);
  GeneratorImages identity{generator(s, 0), generator(s, 1)};
  CHECK(equivariance_check(random_form(s, rng), {identity}));
  GeneratorImages swap{generator(s, 1), generator(s, 0)};
  GeneratorImages scale{power(s, generator(s, 0), 2), generator(s, 1)};
  for (std::int64_t c = 0; c < 3; ++c) CHECK(equivariance_check(power_form(s, c), {identity, swap, scale}));
  BilinearForm generic(s);
  generic.set(0, 0, {1});
  CHECK_FALSE(equivariance_check(generic, {identity, swap, scale}));
}

TEST_CASE("isoclinism witness") {
  GroupSpec s3 = spec_zero(3, 3);
  auto triv = isoclinism_witness(SigmaEndo::from_sigma(s3, FpMatrix(s3.field(), 3, 3)));
  CHECK(triv.passed);
  CHECK(triv.psi == FpMatrix::identity(s3.field(), 3));
  CHECK_THROWS_WITH_AS(isoclinism_witness(SigmaEndo::from_sigma(s3, FpMatrix::identity(s3.field(), 3))),
                       doctest::Contains("TauSingular"), Error);
  GroupSpec s5 = spec_zero(5, 3);
  auto r = isoclinism_witness(SigmaEndo::from_sigma(s5, FpMatrix::identity(s5.field(), 3)));
  CHECK(r.passed);
  CHECK(r.psi == FpMatrix::scalar(s5.field(), 3, 3));
}
