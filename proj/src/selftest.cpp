#include <array>
#include <random>
#include <sstream>

#include "mhol/commands.hpp"
#include "mhol/holomorph_oracle.hpp"

namespace mhol {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }
  template <class F>
  void guarded(F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
  }
  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

GroupSpec random_spec(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  PrimeField f(p);
  return GroupSpec(f, n, random_matrix(f, n, n * (n - 1) / 2, rng));
}

GroupSpec full_rank_spec(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  for (;;) {
    GroupSpec s = random_spec(rng, p, n);
    if (omega1_in_derived(s)) return s;
  }
}

SuiteResult suite_linalg(const RunOptions& opt) {
  Tally t("ff_linalg");
  t.guarded([&] {
    std::mt19937_64 rng(opt.seed);
    const std::uint64_t reps = std::max<std::uint64_t>(opt.pairs / 20, 50);
    for (std::uint64_t k = 0; k < reps; ++k) {
      const std::uint32_t p = std::array<std::uint32_t, 3>{3, 5, 7}[k % 3];
      const PrimeField f(p);
      const std::size_t dim = 1 + k % 5;
      const FpMatrix a = random_matrix(f, dim, dim, rng), b = random_matrix(f, dim, dim, rng);
      t.check(det(a * b) == f.mul(det(a), det(b)), "det(AB) = det A det B");
      t.check(is_invertible(a) == (rank(a) == dim), "invertible iff full rank");
      if (is_invertible(a)) t.check(a * mat_inv(a) == FpMatrix::identity(f, dim), "A A^-1 = I");
      const FpMatrix g = random_invertible(f, dim, rng);
      t.check(rank(a * g) == rank(a), "rank invariant under GL");
    }
    for (std::uint32_t p : {3u, 5u})
      for (unsigned k = 0; k <= 2; ++k) {
        std::uint64_t count = 0;
        for_each_invertible(PrimeField(p), k, [&](const FpMatrix&) {
          ++count;
          return true;
        });
        t.check(gl_order(k, p) == count, "|GL_k| closed form equals enumeration");
      }
  });
  return t.result();
}

SuiteResult suite_group(const RunOptions& opt) {
  Tally t("class2_group");
  t.guarded([&] {
    std::mt19937_64 rng(opt.seed + 1);
    const std::uint64_t per_spec = std::max<std::uint64_t>(opt.pairs / 6, 100);
    for (std::uint32_t p : {3u, 5u})
      for (std::size_t n : {2u, 3u, 4u}) {
        const GroupSpec s = random_spec(rng, p, n);
        std::uniform_int_distribution<std::int64_t> dd(0, 3 * p);
        for (std::uint64_t k = 0; k < per_spec; ++k) {
          const GroupElement x = random_element(s, rng), y = random_element(s, rng), z = random_element(s, rng);
          t.check(multiply(s, multiply(s, x, y), z) == multiply(s, x, multiply(s, y, z)), "associativity");
          const std::int64_t d = dd(rng);
          const GroupElement lhs = power(s, multiply(s, x, y), d);
          const GroupElement rhs =
              multiply(s, multiply(s, power(s, x, d), power(s, y, d)), power(s, commutator(s, y, x), d * (d - 1) / 2));
          t.check(lhs == rhs, "(xy)^d = x^d y^d [y,x]^(d choose 2)");
          const GroupElement def = multiply(s, multiply(s, inverse(s, x), inverse(s, y)), multiply(s, x, y));
          t.check(commutator(s, x, y) == def, "commutator by wedge formula");
          t.check(power(s, x, p) == central_element(s, pth_power_map(s, x.a)), "x^p = a D");
        }
        const FpMatrix a = random_matrix(s.field(), n, n, rng), b = random_matrix(s.field(), n, n, rng);
        t.check(wedge_matrix(s, a * b) == wedge_matrix(s, a) * wedge_matrix(s, b), "wedge functoriality");
      }
  });
  return t.result();
}

SuiteResult suite_bilinear(const RunOptions& opt) {
  Tally t("bilinear");
  t.guarded([&] {
    std::mt19937_64 rng(opt.seed + 2);
    const std::uint64_t per_spec = std::max<std::uint64_t>(opt.pairs / 4, 100);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{3, 2}, {3, 3}, {5, 2}}) {
      const GroupSpec s = random_spec(rng, p, n);
      std::uniform_int_distribution<Residue> dist(0, p - 1);
      std::vector<FpVec> tensor(n * n, FpVec(s.m()));
      for (auto& v : tensor)
        for (auto& x : v) x = dist(rng);
      const BilinearForm form(s, tensor);
      for (std::uint64_t k = 0; k < per_spec; ++k) {
        const GroupElement x = random_element(s, rng), y = random_element(s, rng);
        t.check(circle_commutator(form, x, y) == circle_commutator_by_definition(form, x, y),
                "circle commutator closed form");
        t.check(circle_mul(form, x, circle_inverse(form, x)) == identity_element(s), "circle inverse");
      }
      const FormSplit parts = sym_antisym_split(form);
      t.check(parts.symmetric + parts.antisymmetric == form, "symmetric + anti-symmetric split");
      const CayleyTable g(s);
      t.check(brace_compatibility_check(FormTable(form, g.indexer()), g, opt.pairs, rng), "brace compatibility");
      const AntisymClass cls = classify_antisym(parts.antisymmetric);
      const CircleProfile prof = circle_profile(g, FormTable(parts.antisymmetric, g.indexer()));
      t.check(cls.abelian == prof.abelian && cls.derived_full == prof.derived_full &&
                  cls.center_equal == prof.center_equal,
              "classification agrees with the circle group");
    }
  });
  return t.result();
}

SuiteResult suite_tg(const RunOptions& opt) {
  Tally t("tg_structure");
  t.guarded([&] {
    std::mt19937_64 rng(opt.seed + 3);
    const GroupSpec s = full_rank_spec(rng, 3, 4);
    const ResGroup res(s);
    const std::uint64_t reps = std::max<std::uint64_t>(opt.pairs / 50, 50);
    for (std::uint64_t k = 0; k < reps; ++k) {
      const ResElement x = res.random(rng), y = res.random(rng), z = res.random(rng);
      t.check(res.mul(res.mul(x, y), z) == res.mul(x, res.mul(y, z)), "res associativity");
      t.check(res.mul(x, res.inverse(x)) == res.identity(), "res inverse");
      t.check(res.block(res.mul(x, y)) == res.block(x) * res.block(y), "res law is block multiplication");
      const CriterionSolution sol = res.to_solution(x);
      t.check(criterion_holds(s, sol.a, sol.t), "embedded triple satisfies the criterion");
      t.check(res.from_solution(sol) == x, "from_solution inverts to_solution");
    }
    // Witnesses at (5, 2) for random A with a solution T.
    const GroupSpec s5 = random_spec(rng, 5, 2);
    for (int k = 0; k < 5; ++k) {
      const FpMatrix a = random_invertible(s5.field(), 2, rng);
      const auto sols = solve_T_for_A(s5, a).to_vector(4);
      for (const auto& tm : sols) {
        IsoWitness w = build_isomorphism(s5, {a, tm});
        verify_witness(w, opt.pairs, rng);
        t.check(w.verified, "build_isomorphism witness verifies");
      }
    }
  });
  return t.result();
}

SuiteResult suite_exhaustive_small(const RunOptions& opt) {
  Tally t("exhaustive_small");
  t.guarded([&] {
    const PrimeField f3(3), f5(5);
    const std::vector<GroupSpec> specs{GroupSpec::with_zero_powers(f3, 2),
                                       GroupSpec(f3, 2, FpMatrix::from_rows(f3, {{1}, {0}}, 1)),
                                       GroupSpec::with_zero_powers(f5, 2)};
    for (const auto& s : specs) {
      const CayleyTable g(s);
      const auto& ix = g.indexer();
      for (std::uint32_t x = 0; x < g.order(); ++x)
        for (std::uint32_t y = 0; y < g.order(); ++y) {
          const auto ex = ix.element(x), ey = ix.element(y);
          for (std::uint32_t z = 0; z < g.order(); z += 7)
            t.check(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)), "table associativity");
          t.check(ix.index(multiply(s, ex, ey)) == g.mul(x, y), "table agrees with multiply");
        }
      for (std::uint32_t c = 0; c < s.p(); ++c) {
        if ((2 * c + 1) % s.p() == 0) continue;
        IsoWitness w = theta_d(s, c);
        verify_exhaustive(w, g);
        t.check(w.verified, "theta_d verifies exhaustively");
        t.check(conjugation_check(w, g), "theta_d conjugates rho(G) onto N");
      }
      const CorrespondenceReport cc = cross_check_correspondence(g);
      t.check(cc.bijection, "forms and subgroups correspond");
    }
  });
  (void)opt;
  return t.result();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const RunOptions& opt) {
  std::vector<SuiteResult> out{suite_linalg(opt), suite_group(opt), suite_bilinear(opt), suite_tg(opt)};
  if (opt.exhaustive_small) out.push_back(suite_exhaustive_small(opt));
  return out;
}

}  // namespace mhol
