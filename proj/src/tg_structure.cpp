#include "mhol/tg_structure.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "mhol/error.hpp"

namespace mhol {

namespace {

void require_square(const FpMatrix& x, std::size_t k, const char* name) {
  if (x.rows() != k || x.cols() != k)
    throw Error(ErrorKind::DimensionMismatch, std::string(name) + ": expected " + std::to_string(k) + "x" +
                                                  std::to_string(k) + ", got " + std::to_string(x.rows()) + "x" +
                                                  std::to_string(x.cols()));
}

mpz_class ipow(std::uint32_t p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

/// Calls fn on every rows x cols matrix over F_p.
void for_each_matrix(const PrimeField& f, std::size_t rows, std::size_t cols,
                     const std::function<bool(const FpMatrix&)>& fn) {
  const std::size_t cells = rows * cols;
  if (static_cast<double>(cells) * std::log2(static_cast<double>(f.p())) > 62.0)
    throw Error(ErrorKind::BoundExceeded, "too many matrices to enumerate");
  FpMatrix x(f, rows, cols);
  std::vector<Residue> digits(cells, 0);
  for (;;) {
    if (!fn(x)) return;
    std::size_t i = 0;
    for (; i < cells; ++i) {
      if (++digits[i] < f.p()) {
        x.set(i / cols, i % cols, digits[i]);
        break;
      }
      digits[i] = 0;
      x.set(i / cols, i % cols, 0);
    }
    if (i == cells) return;
  }
}

}  // namespace

bool criterion_holds(const GroupSpec& spec, const FpMatrix& a, const FpMatrix& t) {
  require_square(a, spec.n(), "A");
  require_square(t, spec.m(), "T");
  if (!is_invertible(a)) throw Error(ErrorKind::SingularInput, "A is singular");
  if (!is_invertible(t)) throw Error(ErrorKind::SingularInput, "T is singular");
  return mat_inv(a) * spec.d() * wedge_matrix(spec, a) == spec.d() * mat_inv(t);
}

TSolutionSet::TSolutionSet(const GroupSpec& spec, const FpMatrix& a) : spec_(spec), a_(a) {
  require_square(a, spec.n(), "A");
  if (!is_invertible(a)) throw Error(ErrorKind::SingularInput, "A is singular");
  full_rank_ = rank(spec.d()) == spec.n();
  // D W = A^-1 D wedge(A) with W = T^-1.
  try {
    w_space_ = solve_affine(spec.d(), mat_inv(a) * spec.d() * wedge_matrix(spec, a));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
  }
}

bool TSolutionSet::empty() const {
  if (!w_space_) return true;
  if (full_rank_) return false;
  bool found = false;
  for_each_affine([&](const FpMatrix&) {
    found = true;
    return false;
  });
  return !found;
}

mpz_class TSolutionSet::count() const {
  if (!w_space_) return 0;
  if (full_rank_) {
    const std::size_t k = spec_.m() - spec_.n();
    return ipow(spec_.p(), k * spec_.n()) * gl_order(static_cast<unsigned>(k), spec_.p());
  }
  mpz_class total = 0;
  for_each_affine([&](const FpMatrix&) {
    ++total;
    return true;
  });
  return total;
}

void TSolutionSet::for_each(const std::function<bool(const FpMatrix&)>& fn) const {
  if (!w_space_) return;
  if (!full_rank_) {
    for_each_affine(fn);
    return;
  }
  const ResGroup rg(spec_);
  const auto& red = rg.reduction();
  const PrimeField& f = spec_.field();
  const std::size_t n = spec_.n(), k = spec_.m() - n;
  const FpMatrix a_red = red.u * a_ * mat_inv(red.u);
  bool stop = false;
  for_each_matrix(f, k, n, [&](const FpMatrix& q) {
    for_each_invertible(f, k, [&](const FpMatrix& m) {
      if (!fn(rg.to_solution({q, a_red, m}).t)) stop = true;
      return !stop;
    });
    return !stop;
  });
}

void TSolutionSet::for_each_affine(const std::function<bool(const FpMatrix&)>& fn) const {
  if (!w_space_) return;
  const AffineSolution& ws = *w_space_;
  for_each_matrix(spec_.field(), ws.kernel.cols(), spec_.m(), [&](const FpMatrix& y) {
    FpMatrix w = ws.at(y);
    if (!is_invertible(w)) return true;
    return fn(mat_inv(w));
  });
}

std::vector<FpMatrix> TSolutionSet::to_vector(std::size_t limit) const {
  std::vector<FpMatrix> out;
  for_each([&](const FpMatrix& t) {
    if (out.size() >= limit) throw Error(ErrorKind::BoundExceeded, "more than " + std::to_string(limit) + " solutions");
    out.push_back(t);
    return true;
  });
  return out;
}

TSolutionSet solve_T_for_A(const GroupSpec& spec, const FpMatrix& a) { return {spec, a}; }

ResGroup::ResGroup(const GroupSpec& spec)
    : spec_(spec), red_(reduce_to_I0(spec.d())), u_inv_(mat_inv(red_.u)), v_inv_(mat_inv(red_.v)) {}

ResElement ResGroup::identity() const {
  const PrimeField& f = spec_.field();
  const std::size_t n = spec_.n(), k = spec_.m() - n;
  return {FpMatrix(f, k, n), FpMatrix::identity(f, n), FpMatrix::identity(f, k)};
}

ResElement ResGroup::mul(const ResElement& x, const ResElement& y) const {
  return {mat_inv(y.m) * x.q + y.q * mat_inv(x.a), x.a * y.a, x.m * y.m};
}

ResElement ResGroup::inverse(const ResElement& x) const {
  const FpMatrix mqa = x.m * x.q * x.a;
  return {mqa.scaled(spec_.field().neg(1)), mat_inv(x.a), mat_inv(x.m)};
}

FpMatrix ResGroup::block(const ResElement& x) const {
  const std::size_t n = spec_.n();
  FpMatrix b(spec_.field(), spec_.m(), spec_.m());
  b.place(0, 0, x.a);
  b.place(n, 0, x.m * x.q * x.a);
  b.place(n, n, x.m);
  return b;
}

CriterionSolution ResGroup::to_solution(const ResElement& x) const {
  const FpMatrix a = u_inv_ * x.a * red_.u;
  const FpMatrix beta = red_.v * block(x) * v_inv_;
  return {a, mat_inv(wedge_matrix(spec_, a)) * beta};
}

ResPair ResGroup::to_pair(const ResElement& x) const {
  return {u_inv_ * x.a * red_.u, red_.v * block(x) * v_inv_};
}

ResElement ResGroup::from_solution(const CriterionSolution& sol) const {
  if (!criterion_holds(spec_, sol.a, sol.t)) throw Error(ErrorKind::CriterionFails, "(A, T) violates the criterion");
  const std::size_t n = spec_.n(), k = spec_.m() - n;
  const FpMatrix a_red = red_.u * sol.a * u_inv_;
  const FpMatrix b = v_inv_ * wedge_matrix(spec_, sol.a) * sol.t * red_.v;
  const FpMatrix m = b.block(n, n, k, k);
  return {mat_inv(m) * b.block(n, 0, k, n) * mat_inv(a_red), a_red, m};
}

ResElement ResGroup::random(std::mt19937_64& rng) const {
  const PrimeField& f = spec_.field();
  const std::size_t n = spec_.n(), k = spec_.m() - n;
  FpMatrix q = random_matrix(f, k, n, rng);
  FpMatrix a = random_invertible(f, n, rng);
  return {std::move(q), std::move(a), random_invertible(f, k, rng)};
}

mpz_class res_group_order(const GroupSpec& spec) {
  const std::size_t r = rank(spec.d());
  if (r != spec.n())
    throw Error(ErrorKind::NotFullRank, "rank(D) = " + std::to_string(r) + " < n = " + std::to_string(spec.n()));
  const std::size_t n = spec.n(), k = spec.m() - n;
  return ipow(spec.p(), k * n) * gl_order(static_cast<unsigned>(n), spec.p()) *
         gl_order(static_cast<unsigned>(k), spec.p());
}

mpz_class sym_part_order(const GroupSpec& spec) { return ipow(spec.p(), spec.m() * (spec.n() * (spec.n() + 1) / 2)); }

TGOrder tg_order(const GroupSpec& spec, bool aut_c_verified) {
  return {sym_part_order(spec) * res_group_order(spec), aut_c_verified};
}

IsoWitness sym_isomorphism(const GroupSpec& spec, const BilinearForm& delta0) {
  if (!delta0.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "form is not symmetric");
  const Residue half = spec.field().half();
  auto map = [spec, delta0, half](const GroupElement& x) {
    GroupElement r = x;
    vec_axpy(spec.field(), half, evaluate(delta0, x.a, x.a), r.c);
    return r;
  };
  return {spec, delta0, map};
}

Residue theta_exponent(const GroupSpec& spec, std::int64_t c) {
  const PrimeField& f = spec.field();
  const Residue t = f.reduce(2 * f.reduce(c) + 1);
  if (t == 0)
    throw Error(ErrorKind::HalfExcluded, "2c+1 = 0 mod " + std::to_string(spec.p()) + " for c = " + std::to_string(c));
  return f.inv(t);
}

IsoWitness theta_d(const GroupSpec& spec, std::int64_t c) {
  const Residue d = theta_exponent(spec, c);
  auto map = [spec, d](const GroupElement& x) { return power(spec, x, d); };
  return {spec, power_form(spec, c), map};
}

IsoWitness build_isomorphism(const GroupSpec& spec, const CriterionSolution& sol) {
  bool ok = false;
  try {
    ok = criterion_holds(spec, sol.a, sol.t);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularInput) throw;
    throw Error(ErrorKind::CriterionFails, e.what());
  }
  if (!ok) throw Error(ErrorKind::CriterionFails, "A^-1 D wedge(A) != D T^-1");

  BilinearForm form = sigma_form(SigmaEndo::from_tau(spec, sol.t));
  struct Data {
    std::vector<std::vector<GroupElement>> powers;  // powers[i][k] = x~_i^{o k}
    FpMatrix derived;                               // wedge(A) T
  };
  auto data = std::make_shared<Data>();
  data->derived = wedge_matrix(spec, sol.a) * sol.t;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    GroupElement xi{sol.a.row_vec(i), FpVec(spec.m(), 0)};
    std::vector<GroupElement> pw{identity_element(spec)};
    for (std::uint32_t k = 1; k < spec.p(); ++k) pw.push_back(circle_mul(form, pw.back(), xi));
    data->powers.push_back(std::move(pw));
  }
  auto map = [spec, form, data](const GroupElement& x) {
    check_element(spec, x);
    GroupElement r = identity_element(spec);
    for (std::size_t i = 0; i < spec.n(); ++i)
      if (x.a[i]) r = circle_mul(form, r, data->powers[i][x.a[i]]);
    // Central elements o-multiply like ordinary ones.
    r.c = vec_add(spec.field(), r.c, vec_mat(x.c, data->derived));
    return r;
  };
  return {spec, form, map};
}

ResPair induced_res(const IsoWitness& w) {
  const GroupSpec& spec = w.spec;
  FpMatrix alpha(spec.field(), spec.n(), spec.n()), beta(spec.field(), spec.m(), spec.m());
  for (std::size_t i = 0; i < spec.n(); ++i) alpha.set_row(i, w(generator(spec, i)).a);
  for (std::size_t r = 0; r < spec.m(); ++r) {
    FpVec e(spec.m(), 0);
    e[r] = 1;
    GroupElement img = w(central_element(spec, e));
    if (!vec_is_zero(img.a)) throw Error(ErrorKind::VerificationFailed, "witness does not preserve G'");
    beta.set_row(r, img.c);
  }
  return {alpha, beta};
}

IsoWitness compose_witnesses(const IsoWitness& first, const IsoWitness& second) {
  if (!(first.spec == second.spec)) throw Error(ErrorKind::SpecMismatch, "witnesses for different groups");
  const ResPair r2 = induced_res(second);
  BilinearForm form = act(first.form, r2.alpha, r2.beta) + second.form;
  auto f1 = first.map, f2 = second.map;
  return {first.spec, form, [f1, f2](const GroupElement& x) { return f2(f1(x)); }};
}

void verify_exhaustive(IsoWitness& w, const CayleyTable& g) {
  if (!(g.spec() == w.spec)) throw Error(ErrorKind::SpecMismatch, "table belongs to a different group");
  const auto& ix = g.indexer();
  const std::uint32_t order = g.order(), pm = ix.derived_order();
  std::vector<std::uint32_t> theta(order);
  std::vector<char> hit(order, 0);
  bool ok = true;
  for (std::uint32_t x = 0; x < order; ++x) {
    theta[x] = ix.index(w(ix.element(x)));
    if (hit[theta[x]]) ok = false;
    hit[theta[x]] = 1;
  }
  const FormTable ft(w.form, ix);
  std::vector<std::uint32_t> a_of(order), c_of(order);
  for (std::uint32_t x = 0; x < order; ++x) {
    a_of[x] = ix.a_index(x);
    c_of[x] = ix.c_index(x);
  }
  std::uint64_t checked = 0;
  for (std::uint32_t x = 0; x < order && ok; ++x) {
    const std::uint32_t tx = theta[x], ax = a_of[tx];
    for (std::uint32_t y = 0; y < order; ++y) {
      const std::uint32_t ty = theta[y];
      const std::uint32_t prod = g.mul(tx, ty);
      const std::uint32_t circ = a_of[prod] * pm + g.add_codes(c_of[prod], ft.value(ax, a_of[ty]));
      if (theta[g.mul(x, y)] != circ) {
        ok = false;
        break;
      }
    }
    checked += order;
  }
  w.verified = ok;
  w.exhaustive = true;
  w.pairs_checked = checked;
}

void verify_witness(IsoWitness& w, std::uint64_t pairs, std::mt19937_64& rng) {
  const GroupSpec& spec = w.spec;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < spec.n() + spec.m() && order <= 729; ++i) order *= spec.p();
  if (order <= 729) {
    verify_exhaustive(w, CayleyTable(spec));
    return;
  }
  pairs = std::max<std::uint64_t>(pairs, 10'000);
  bool ok = true;
  try {
    const ResPair r = induced_res(w);
    ok = is_invertible(r.alpha) && is_invertible(r.beta);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::VerificationFailed) throw;
    ok = false;
  }
  std::uint64_t checked = 0;
  for (; checked < pairs && ok; ++checked) {
    GroupElement x = random_element(spec, rng), y = random_element(spec, rng);
    ok = w(multiply(spec, x, y)) == circle_mul(w.form, w(x), w(y));
  }
  w.verified = ok;
  w.exhaustive = false;
  w.pairs_checked = checked;
}

TGElement tg_identity(const GroupSpec& spec) {
  return {BilinearForm(spec),
          {FpMatrix::identity(spec.field(), spec.n()), FpMatrix::identity(spec.field(), spec.m())}};
}

TGElement tg_from_witness(const IsoWitness& w) { return {sym_antisym_split(w.form).symmetric, induced_res(w)}; }

TGElement compose_tg(const TGElement& t1, const TGElement& t2) {
  return {act(t1.sym, t2.res.alpha, t2.res.beta) + t2.sym,
          {t1.res.alpha * t2.res.alpha, t1.res.beta * t2.res.beta}};
}

PresentationCheck circle_presentation_matrix(const GroupSpec& spec, const FpMatrix& t) {
  require_square(t, spec.m(), "T");
  if (!is_invertible(t)) throw Error(ErrorKind::SingularT, "T is singular");
  PresentationCheck out{spec.d() * mat_inv(t), true};
  const BilinearForm form = sigma_form(SigmaEndo::from_tau(spec, t));
  std::vector<GroupElement> comms;
  for (std::size_t r = 0; r < spec.m(); ++r) {
    auto [j, k] = spec.pair_at(r);
    comms.push_back(circle_commutator_by_definition(form, generator(spec, j), generator(spec, k)));
  }
  for (std::size_t i = 0; i < spec.n(); ++i) {
    GroupElement lhs = circle_power(form, generator(spec, i), spec.p());
    GroupElement rhs = identity_element(spec);
    for (std::size_t r = 0; r < spec.m(); ++r) rhs = circle_mul(form, rhs, circle_power(form, comms[r], out.d_circ(i, r)));
    if (!(lhs == rhs)) out.relations_hold = false;
  }
  return out;
}

StabilizerResult induced_aut_stabilizer(const GroupSpec& spec, std::uint64_t budget, std::mt19937_64& rng,
                                        std::uint64_t exhaustive_limit) {
  const PrimeField& f = spec.field();
  const std::size_t n = spec.n();
  auto stabilizes = [&](const FpMatrix& a) { return spec.d() * wedge_matrix(spec, a) == a * spec.d(); };
  StabilizerResult out;
  if (gl_order(static_cast<unsigned>(n), spec.p()) <= exhaustive_limit) {
    out.exhaustive = true;
    for_each_invertible(f, n, [&](const FpMatrix& a) {
      ++out.scanned;
      if (stabilizes(a)) out.members.push_back(a);
      return true;
    });
    return out;
  }
  const FpMatrix id = FpMatrix::identity(f, n);
  out.members.push_back(id);
  for (std::uint64_t s = 0; s < budget; ++s) {
    FpMatrix a = random_invertible(f, n, rng);
    ++out.scanned;
    if (a == id || !stabilizes(a)) continue;
    if (std::find(out.members.begin(), out.members.end(), a) == out.members.end()) out.members.push_back(a);
  }
  return out;
}

}  // namespace mhol
