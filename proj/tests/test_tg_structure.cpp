#include "doctest.h"
#include "support.hpp"

#include <chrono>
#include <set>

#include "mhol/error.hpp"
#include "mhol/tg_structure.hpp"

using namespace mhol;
using namespace testsupport;

namespace {

GroupSpec full_rank_n4() {
  FpMatrix d(PrimeField(3), 4, 6);
  d.place(0, 0, FpMatrix::identity(PrimeField(3), 4));
  d.set(0, 5, 2);
  d.set(2, 4, 1);
  return GroupSpec(PrimeField(3), 4, d);
}

GroupSpec random_spec(std::uint32_t p, std::size_t n, std::size_t target_rank, std::mt19937_64& rng) {
  PrimeField f(p);
  const std::size_t m = n * (n - 1) / 2;
  for (;;) {
    FpMatrix d = random_matrix(f, n, target_rank, rng) * random_matrix(f, target_rank, m, rng);
    if (target_rank == 0) d = FpMatrix(f, n, m);
    if (rank(d) == target_rank) return GroupSpec(f, n, d);
  }
}

/// Every (A, T) with both invertible and the criterion holding, by brute force.
std::set<std::pair<std::uint64_t, std::uint64_t>> brute_force_solutions(const GroupSpec& s) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> out;
  // Codes of D T^-1 for every T.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rhs;
  for_each_invertible(s.field(), s.m(), [&](const FpMatrix& t) {
    rhs.emplace_back((s.d() * mat_inv(t)).code(), t.code());
    return true;
  });
  for_each_invertible(s.field(), s.n(), [&](const FpMatrix& a) {
    const std::uint64_t lhs = (mat_inv(a) * s.d() * wedge_matrix(s, a)).code();
    for (const auto& [code, t] : rhs)
      if (code == lhs) out.insert({a.code(), t});
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("criterion examples") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 5; ++rep) {
    GroupSpec s = random_spec(5, 3, rep % 4, rng);
    const PrimeField& f = s.field();
    CHECK(criterion_holds(s, FpMatrix::identity(f, 3), FpMatrix::identity(f, 3)));
    for (std::int64_t c = 0; c < 5; ++c) {
      Residue two_c1 = f.reduce(2 * c + 1);
      if (two_c1 == 0) continue;
      Residue d = f.inv(two_c1);
      CHECK(criterion_holds(s, FpMatrix::scalar(f, 3, d), FpMatrix::scalar(f, 3, two_c1)));
    }
  }
  GroupSpec s = spec_zero(3, 2);
  CHECK_THROWS_WITH_AS(criterion_holds(s, mat(3, {{1, 1}, {1, 1}}), mat(3, {{1}})), doctest::Contains("SingularInput"),
                       Error);
}

TEST_CASE("solve_T_for_A matches brute force at (3,2), (5,2), (3,3)") {
  std::mt19937_64 rng(43);
  struct Case {
    std::uint32_t p;
    std::size_t n, r;
  };
  for (Case cs : {Case{3, 2, 0}, Case{3, 2, 1}, Case{5, 2, 0}, Case{5, 2, 1}, Case{3, 3, 3}, Case{3, 3, 2}}) {
    GroupSpec s = random_spec(cs.p, cs.n, cs.r, rng);
    auto expected = brute_force_solutions(s);
    std::set<std::pair<std::uint64_t, std::uint64_t>> got;
    mpz_class counted = 0;
    for_each_invertible(s.field(), s.n(), [&](const FpMatrix& a) {
      auto sols = solve_T_for_A(s, a);
      counted += sols.count();
      sols.for_each([&](const FpMatrix& t) {
        CHECK(criterion_holds(s, a, t));
        got.insert({a.code(), t.code()});
        return true;
      });
      return true;
    });
    CHECK(got == expected);
    CHECK(counted == expected.size());
  }
}

TEST_CASE("parametrized and affine enumerations agree for full-rank D") {
  std::mt19937_64 rng(47);
  GroupSpec s = random_spec(3, 3, 3, rng);
  for (int rep = 0; rep < 10; ++rep) {
    FpMatrix a = random_invertible(s.field(), 3, rng);
    auto sols = solve_T_for_A(s, a);
    REQUIRE(sols.full_rank());
    std::set<std::uint64_t> x, y;
    sols.for_each([&](const FpMatrix& t) { return x.insert(t.code()).second; });
    sols.for_each_affine([&](const FpMatrix& t) { return y.insert(t.code()).second; });
    CHECK(x == y);
    CHECK(x.size() == 1);  // m - n = 0: unique T per A
  }
  GroupSpec s4 = full_rank_n4();
  auto sols = solve_T_for_A(s4, FpMatrix::identity(s4.field(), 4));
  CHECK(sols.count() == mpz_class(6561 * 48));
}

TEST_CASE("reduced coordinates with D = [I | 0] and A = I") {
  PrimeField f(3);
  FpMatrix d(f, 4, 6);
  d.place(0, 0, FpMatrix::identity(f, 4));
  GroupSpec s(f, 4, d);
  std::size_t seen = 0;
  solve_T_for_A(s, FpMatrix::identity(f, 4)).for_each([&](const FpMatrix& t) {
    CHECK(t.block(0, 0, 4, 4) == FpMatrix::identity(f, 4));
    CHECK(t.block(0, 4, 4, 2).is_zero());
    CHECK(is_invertible(t.block(4, 4, 2, 2)));
    return ++seen < 500;
  });
  CHECK(seen == 500);
}

TEST_CASE("res group law") {
  std::mt19937_64 rng(53);
  for (GroupSpec s : {full_rank_n4(), random_spec(3, 3, 3, rng), random_spec(5, 4, 4, rng)}) {
    ResGroup rg(s);
    ResElement e = rg.identity();
    for (int t = 0; t < 200; ++t) {
      ResElement x = rg.random(rng), y = rg.random(rng), z = rg.random(rng);
      CHECK(rg.mul(e, x) == x);
      CHECK(rg.mul(x, e) == x);
      CHECK(rg.mul(x, rg.inverse(x)) == e);
      CHECK(rg.mul(rg.inverse(x), x) == e);
      CHECK(rg.mul(rg.mul(x, y), z) == rg.mul(x, rg.mul(y, z)));
      CHECK(rg.block(rg.mul(x, y)) == rg.block(x) * rg.block(y));
      CriterionSolution sol = rg.to_solution(x);
      CHECK(criterion_holds(s, sol.a, sol.t));
      CHECK(rg.from_solution(sol) == x);
      ResPair px = rg.to_pair(x), py = rg.to_pair(y), pxy = rg.to_pair(rg.mul(x, y));
      CHECK(pxy.alpha == px.alpha * py.alpha);
      CHECK(pxy.beta == px.beta * py.beta);
    }
    ResPair id = rg.to_pair(e);
    CHECK(id.alpha == FpMatrix::identity(s.field(), s.n()));
    CHECK(id.beta == FpMatrix::identity(s.field(), s.m()));
  }
}

TEST_CASE("orders") {
  CHECK(res_group_order(full_rank_n4()) == mpz_class(6561) * 24261120 * 48);
  CHECK(sym_part_order(full_rank_n4()) == mpz_class("42391158275216203514294433201"));  // 3^60
  CHECK(sym_part_order(spec_zero(3, 2)) == 27);
  mpz_class five18;
  mpz_ui_pow_ui(five18.get_mpz_t(), 5, 18);
  CHECK(sym_part_order(spec_zero(5, 3)) == five18);
  FpMatrix d3 = FpMatrix::identity(PrimeField(3), 3);
  CHECK(res_group_order(GroupSpec(PrimeField(3), 3, d3)) == 11232);
  CHECK_THROWS_WITH_AS(res_group_order(spec_with(3, 2, {{1}, {0}})), doctest::Contains("NotFullRank"), Error);
  CHECK_THROWS_AS(tg_order(spec_zero(3, 2), false), Error);

  mpz_class three68;
  mpz_ui_pow_ui(three68.get_mpz_t(), 3, 68);
  TGOrder o = tg_order(full_rank_n4(), false);
  CHECK(o.value == three68 * 24261120 * 48);
  CHECK_FALSE(o.unconditional);
  FpMatrix d5(PrimeField(5), 4, 6);
  d5.place(0, 0, FpMatrix::identity(PrimeField(5), 4));
  mpz_class five68;
  mpz_ui_pow_ui(five68.get_mpz_t(), 5, 68);
  CHECK(tg_order(GroupSpec(PrimeField(5), 4, d5), true).value == five68 * gl_order(4, 5) * gl_order(2, 5));
}

TEST_CASE("witness constructions") {
  GroupSpec s = spec_zero(3, 2);
  CayleyTable g(s);
  std::mt19937_64 rng(59);

  IsoWitness id = sym_isomorphism(s, BilinearForm(s));
  for (std::uint32_t x = 0; x < g.order(); ++x) CHECK(id(g.indexer().element(x)) == g.indexer().element(x));
  for (int rep = 0; rep < 10; ++rep) {
    IsoWitness w = sym_isomorphism(s, random_sym(s, rng));
    verify_exhaustive(w, g);
    CHECK(w.verified);
    CHECK(w.pairs_checked == 27u * 27u);
    ResPair r = induced_res(w);
    CHECK(r.alpha == FpMatrix::identity(s.field(), 2));
    CHECK(r.beta == FpMatrix::identity(s.field(), 1));
  }
  CHECK_THROWS_WITH_AS(sym_isomorphism(s, power_form(s, 1)), doctest::Contains("NotSymmetric"), Error);

  CHECK(theta_exponent(s, 0) == 1);
  CHECK_THROWS_WITH_AS(theta_d(s, 1), doctest::Contains("HalfExcluded"), Error);
  GroupSpec s5 = spec_zero(5, 2);
  CHECK(theta_exponent(s5, 1) == 2);
  IsoWitness t = theta_d(s5, 1);
  verify_exhaustive(t, CayleyTable(s5));
  CHECK(t.verified);

  // A corrupted map is rejected.
  IsoWitness bad = theta_d(s5, 1);
  auto inner = bad.map;
  bad.map = [inner](const GroupElement& x) {
    GroupElement r = inner(x);
    if (x.a == FpVec{1, 1}) r.c[0] = (r.c[0] + 1) % 5;
    return r;
  };
  verify_exhaustive(bad, CayleyTable(s5));
  CHECK_FALSE(bad.verified);
}

TEST_CASE("build_isomorphism") {
  std::mt19937_64 rng(61);
  GroupSpec s = spec_zero(3, 2);
  CayleyTable g(s);
  IsoWitness id = build_isomorphism(s, {FpMatrix::identity(s.field(), 2), FpMatrix::identity(s.field(), 1)});
  for (std::uint32_t x = 0; x < g.order(); ++x) CHECK(id(g.indexer().element(x)) == g.indexer().element(x));

  GroupSpec s5 = spec_with(5, 2, {{2}, {3}});
  CayleyTable g5(s5);
  const PrimeField& f = s5.field();
  for (std::int64_t c : {0, 1, 3, 4}) {
    Residue tc = f.reduce(2 * c + 1), d = f.inv(tc);
    IsoWitness w = build_isomorphism(s5, {FpMatrix::scalar(f, 2, d), FpMatrix::scalar(f, 1, tc)});
    verify_exhaustive(w, g5);
    CHECK(w.verified);
    IsoWitness td = theta_d(s5, c);
    verify_exhaustive(td, g5);
    CHECK(td.verified);
    CHECK(w.form == td.form);
    CHECK(induced_res(w) == induced_res(td));
  }
  CHECK_THROWS_WITH_AS(
      build_isomorphism(s5, {FpMatrix::identity(f, 2), FpMatrix::scalar(f, 1, 2)}), doctest::Contains("CriterionFails"),
      Error);

  GroupSpec s4 = full_rank_n4();
  ResGroup rg(s4);
  for (int rep = 0; rep < 3; ++rep) {
    CriterionSolution sol = rg.to_solution(rg.random(rng));
    IsoWitness w = build_isomorphism(s4, sol);
    verify_witness(w, 10'000, rng);
    CHECK(w.verified);
    CHECK_FALSE(w.exhaustive);
    CHECK(w.pairs_checked >= 10'000);
    ResPair r = induced_res(w);
    CHECK(r.alpha == sol.a);
    CHECK(r.beta == wedge_matrix(s4, sol.a) * sol.t);
  }
}

TEST_CASE("composition of witnesses") {
  std::mt19937_64 rng(67);
  GroupSpec s = spec_zero(3, 2);
  CayleyTable g(s);
  std::vector<IsoWitness> ws;
  for (int rep = 0; rep < 4; ++rep) ws.push_back(sym_isomorphism(s, random_sym(s, rng)));
  ws.push_back(theta_d(s, 0));
  ws.push_back(theta_d(s, 2));
  ws.push_back(build_isomorphism(s, {mat(3, {{0, 1}, {1, 0}}), mat(3, {{1}})}));
  ws.push_back(build_isomorphism(s, {mat(3, {{1, 1}, {0, 1}}), mat(3, {{2}})}));
  for (auto& w : ws) {
    verify_exhaustive(w, g);
    REQUIRE(w.verified);
  }
  for (const auto& w1 : ws)
    for (const auto& w2 : ws) {
      IsoWitness c = compose_witnesses(w1, w2);
      verify_exhaustive(c, g);
      CHECK(c.verified);
      CHECK(tg_from_witness(c) == compose_tg(tg_from_witness(w1), tg_from_witness(w2)));
    }
  TGElement e = tg_identity(s);
  TGElement t = tg_from_witness(ws[6]);
  CHECK(compose_tg(e, t) == t);
  CHECK(compose_tg(t, e) == t);
}

TEST_CASE("circle presentation matrix") {
  GroupSpec s = spec_with(3, 2, {{1}, {0}});
  auto id = circle_presentation_matrix(s, mat(3, {{1}}));
  CHECK(id.d_circ == s.d());
  CHECK(id.relations_hold);
  auto two = circle_presentation_matrix(s, mat(3, {{2}}));
  CHECK(two.d_circ == mat(3, {{2}, {0}}));
  CHECK(two.relations_hold);
  CHECK_THROWS_WITH_AS(circle_presentation_matrix(s, mat(3, {{0}})), doctest::Contains("SingularT"), Error);
  std::mt19937_64 rng(71);
  GroupSpec s4 = full_rank_n4();
  for (int rep = 0; rep < 20; ++rep) {
    FpMatrix t = random_invertible(s4.field(), 6, rng);
    auto pc = circle_presentation_matrix(s4, t);
    CHECK(pc.relations_hold);
  }
  auto scal = circle_presentation_matrix(s4, FpMatrix::scalar(s4.field(), 6, 2));
  CHECK(scal.d_circ == s4.d().scaled(2));
}

TEST_CASE("induced automorphism stabilizer") {
  std::mt19937_64 rng(73);
  auto zero = induced_aut_stabilizer(spec_zero(3, 2), 0, rng);
  CHECK(zero.exhaustive);
  CHECK(zero.members.size() == 48);
  auto d10 = induced_aut_stabilizer(spec_with(3, 2, {{1}, {0}}), 0, rng);
  CHECK(d10.exhaustive);
  CHECK(d10.scanned == 48);
  for (const auto& a : d10.members) CHECK(criterion_holds(spec_with(3, 2, {{1}, {0}}), a, mat(3, {{1}})));
  auto big = induced_aut_stabilizer(full_rank_n4(), 2000, rng);
  CHECK_FALSE(big.exhaustive);
  CHECK_FALSE(big.certifies_trivial());
  CHECK(big.scanned == 2000);
}
