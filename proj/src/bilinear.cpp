#include "mhol/bilinear.hpp"

#include "mhol/error.hpp"

namespace mhol {

namespace {

FpVec unit(std::size_t len, std::size_t i) {
  FpVec v(len, 0);
  v[i] = 1;
  return v;
}

void check_same_spec(const BilinearForm& x, const BilinearForm& y) {
  if (!(x.spec() == y.spec())) throw Error(ErrorKind::SpecMismatch, "forms belong to different groups");
}

}  // namespace

BilinearForm::BilinearForm(const GroupSpec& spec)
    : spec_(spec), tensor_(spec.n() * spec.n(), FpVec(spec.m(), 0)) {}

BilinearForm::BilinearForm(const GroupSpec& spec, std::vector<FpVec> tensor) : spec_(spec), tensor_(std::move(tensor)) {
  if (tensor_.size() != spec.n() * spec.n())
    throw Error(ErrorKind::DimensionMismatch, "form tensor needs n*n entries, got " + std::to_string(tensor_.size()));
  for (auto& v : tensor_) {
    if (v.size() != spec.m())
      throw Error(ErrorKind::DimensionMismatch, "form values must have length m = " + std::to_string(spec.m()));
    for (auto& x : v) x %= spec.p();
  }
}

void BilinearForm::set(std::size_t i, std::size_t j, const FpVec& value) {
  if (value.size() != spec_.m()) throw Error(ErrorKind::DimensionMismatch, "form value has wrong length");
  FpVec v = value;
  for (auto& x : v) x %= spec_.p();
  tensor_.at(i * spec_.n() + j) = std::move(v);
}

bool BilinearForm::is_symmetric() const {
  for (std::size_t i = 0; i < spec_.n(); ++i)
    for (std::size_t j = i + 1; j < spec_.n(); ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool BilinearForm::is_antisymmetric() const {
  const PrimeField& f = spec_.field();
  for (std::size_t i = 0; i < spec_.n(); ++i) {
    if (!vec_is_zero(at(i, i))) return false;
    for (std::size_t j = i + 1; j < spec_.n(); ++j)
      if (!vec_is_zero(vec_add(f, at(i, j), at(j, i)))) return false;
  }
  return true;
}

bool BilinearForm::is_zero() const {
  for (const auto& v : tensor_)
    if (!vec_is_zero(v)) return false;
  return true;
}

BilinearForm operator+(const BilinearForm& x, const BilinearForm& y) {
  check_same_spec(x, y);
  std::vector<FpVec> t(x.tensor().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = vec_add(x.spec().field(), x.tensor()[i], y.tensor()[i]);
  return {x.spec(), std::move(t)};
}

BilinearForm operator-(const BilinearForm& x, const BilinearForm& y) {
  check_same_spec(x, y);
  std::vector<FpVec> t(x.tensor().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = vec_sub(x.spec().field(), x.tensor()[i], y.tensor()[i]);
  return {x.spec(), std::move(t)};
}

BilinearForm scaled(const BilinearForm& x, Residue k) {
  std::vector<FpVec> t(x.tensor().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = vec_scale(x.spec().field(), k, x.tensor()[i]);
  return {x.spec(), std::move(t)};
}

SigmaEndo SigmaEndo::from_sigma(const GroupSpec& spec, const FpMatrix& s) {
  if (s.rows() != spec.m() || s.cols() != spec.m())
    throw Error(ErrorKind::DimensionMismatch, "S: expected " + std::to_string(spec.m()) + "x" +
                                                  std::to_string(spec.m()));
  if (s.p() != spec.p()) throw Error(ErrorKind::ModulusMismatch, "S: modulus differs from p");
  return {spec, s, FpMatrix::identity(spec.field(), spec.m()) + s.scaled(2)};
}

SigmaEndo SigmaEndo::from_tau(const GroupSpec& spec, const FpMatrix& tau) {
  if (tau.rows() != spec.m() || tau.cols() != spec.m())
    throw Error(ErrorKind::DimensionMismatch, "T: expected " + std::to_string(spec.m()) + "x" +
                                                  std::to_string(spec.m()));
  if (tau.p() != spec.p()) throw Error(ErrorKind::ModulusMismatch, "T: modulus differs from p");
  FpMatrix s = (tau - FpMatrix::identity(spec.field(), spec.m())).scaled(spec.field().half());
  return {spec, s, tau};
}

FpVec evaluate(const BilinearForm& form, const FpVec& u, const FpVec& v) {
  const GroupSpec& spec = form.spec();
  const PrimeField& f = spec.field();
  if (u.size() != spec.n() || v.size() != spec.n())
    throw Error(ErrorKind::DimensionMismatch, "evaluate: arguments must have length n");
  FpVec out(spec.m(), 0);
  for (std::size_t i = 0; i < spec.n(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < spec.n(); ++j) {
      if (v[j] == 0) continue;
      vec_axpy(f, f.mul(u[i], v[j]), form.at(i, j), out);
    }
  }
  return out;
}

BilinearForm power_form(const GroupSpec& spec, std::int64_t c) {
  const Residue k = spec.field().reduce(c);
  BilinearForm form(spec);
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (std::size_t j = 0; j < spec.n(); ++j)
      form.set(i, j, vec_scale(spec.field(), k, wedge(spec, unit(spec.n(), i), unit(spec.n(), j))));
  return form;
}

BilinearForm sigma_form(const SigmaEndo& se) {
  const GroupSpec& spec = se.spec;
  BilinearForm form(spec);
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (std::size_t j = 0; j < spec.n(); ++j)
      form.set(i, j, vec_mat(wedge(spec, unit(spec.n(), i), unit(spec.n(), j)), se.s));
  return form;
}

SigmaEndo antisym_to_sigma(const BilinearForm& form) {
  if (!form.is_antisymmetric()) throw Error(ErrorKind::NotAntiSymmetric, "form is not anti-symmetric");
  const GroupSpec& spec = form.spec();
  FpMatrix s(spec.field(), spec.m(), spec.m());
  for (std::size_t r = 0; r < spec.m(); ++r) {
    auto [j, k] = spec.pair_at(r);
    s.set_row(r, form.at(j, k));
  }
  return SigmaEndo::from_sigma(spec, s);
}

FormSplit sym_antisym_split(const BilinearForm& form) {
  const GroupSpec& spec = form.spec();
  const PrimeField& f = spec.field();
  const Residue h = f.half();
  BilinearForm sym(spec), anti(spec);
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (std::size_t j = 0; j < spec.n(); ++j) {
      sym.set(i, j, vec_scale(f, h, vec_add(f, form.at(i, j), form.at(j, i))));
      anti.set(i, j, vec_scale(f, h, vec_sub(f, form.at(i, j), form.at(j, i))));
    }
  return {sym, anti};
}

BilinearForm act(const BilinearForm& form, const FpMatrix& alpha, const FpMatrix& beta) {
  const GroupSpec& spec = form.spec();
  if (alpha.rows() != spec.n() || alpha.cols() != spec.n() || beta.rows() != spec.m() || beta.cols() != spec.m())
    throw Error(ErrorKind::DimensionMismatch, "act: alpha must be n x n and beta m x m");
  const FpMatrix ainv = mat_inv(alpha);
  BilinearForm out(spec);
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (std::size_t j = 0; j < spec.n(); ++j)
      out.set(i, j, vec_mat(evaluate(form, ainv.row_vec(i), ainv.row_vec(j)), beta));
  return out;
}

GroupElement circle_mul(const BilinearForm& form, const GroupElement& e1, const GroupElement& e2) {
  const GroupSpec& spec = form.spec();
  GroupElement r = multiply(spec, e1, e2);
  r.c = vec_add(spec.field(), r.c, evaluate(form, e1.a, e2.a));
  return r;
}

GroupElement circle_inverse(const BilinearForm& form, const GroupElement& e) {
  const GroupSpec& spec = form.spec();
  GroupElement r = inverse(spec, e);
  r.c = vec_add(spec.field(), r.c, evaluate(form, e.a, e.a));
  return r;
}

GroupElement circle_power(const BilinearForm& form, const GroupElement& e, std::int64_t d) {
  GroupElement base = d < 0 ? circle_inverse(form, e) : e;
  std::uint64_t k = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  GroupElement result = identity_element(form.spec());
  while (k > 0) {
    if (k & 1u) result = circle_mul(form, result, base);
    k >>= 1;
    if (k) base = circle_mul(form, base, base);
  }
  return result;
}

GroupElement circle_commutator(const BilinearForm& form, const GroupElement& e1, const GroupElement& e2) {
  const GroupSpec& spec = form.spec();
  const PrimeField& f = spec.field();
  check_element(spec, e1);
  check_element(spec, e2);
  FpVec c = vec_add(f, wedge(spec, e1.a, e2.a), evaluate(form, e1.a, e2.a));
  return {FpVec(spec.n(), 0), vec_sub(f, c, evaluate(form, e2.a, e1.a))};
}

GroupElement circle_commutator_by_definition(const BilinearForm& form, const GroupElement& e1,
                                             const GroupElement& e2) {
  GroupElement r = circle_mul(form, circle_inverse(form, e1), circle_inverse(form, e2));
  r = circle_mul(form, r, e1);
  return circle_mul(form, r, e2);
}

FormTable::FormTable(const BilinearForm& form, const ElementIndexer& indexer) : pn_(indexer.quotient_order()) {
  std::vector<FpVec> avecs(pn_);
  for (std::uint32_t u = 0; u < pn_; ++u) avecs[u] = indexer.decode_a(u);
  values_.resize(static_cast<std::size_t>(pn_) * pn_);
  for (std::uint32_t u = 0; u < pn_; ++u)
    for (std::uint32_t v = 0; v < pn_; ++v)
      values_[static_cast<std::size_t>(u) * pn_ + v] = indexer.encode_vec(evaluate(form, avecs[u], avecs[v]));
}

FormTable FormTable::with_entry(std::uint32_t u_idx, std::uint32_t v_idx, std::uint32_t c_code) const {
  FormTable t = *this;
  t.values_.at(static_cast<std::size_t>(u_idx) * pn_ + v_idx) = c_code;
  return t;
}

GammaMap gamma_of(const FormTable& form, const CayleyTable& g, std::uint32_t y) {
  const auto& ix = g.indexer();
  const std::uint32_t order = g.order();
  GammaMap out;
  out.images.resize(order);
  for (std::uint32_t x = 0; x < order; ++x) out.images[x] = g.add_central(x, form.value(ix.a_index(x), ix.a_index(y)));

  std::vector<bool> hit(order, false);
  bool bijective = true;
  for (auto img : out.images) {
    if (hit[img]) bijective = false;
    hit[img] = true;
  }
  bool hom = bijective;
  for (std::uint32_t a = 0; a < order && hom; ++a)
    for (std::uint32_t b = 0; b < order && hom; ++b)
      hom = out.images[g.mul(a, b)] == g.mul(out.images[a], out.images[b]);
  out.is_automorphism = hom;

  const std::vector<std::uint32_t> center = center_elements(g);
  std::vector<bool> in_center(order, false);
  for (auto z : center) in_center[z] = true;
  out.identity_mod_center = true;
  for (std::uint32_t x = 0; x < order && out.identity_mod_center; ++x)
    out.identity_mod_center = in_center[g.mul(g.inv(x), out.images[x])];
  out.fixes_center = true;
  for (auto z : center)
    if (out.images[z] != z) out.fixes_center = false;
  return out;
}

GammaMap gamma_of(const BilinearForm& form, const CayleyTable& g, const GroupElement& y) {
  check_element(g.spec(), y);
  return gamma_of(FormTable(form, g.indexer()), g, g.indexer().index(y));
}

bool brace_compatibility_check(const FormTable& form, const CayleyTable& g, std::uint64_t samples,
                               std::mt19937_64& rng, std::uint32_t exhaustive_limit) {
  const std::uint32_t order = g.order();
  auto holds = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    std::uint32_t lhs = form.circ(g, g.mul(x, y), z);
    std::uint32_t rhs = g.mul(g.mul(form.circ(g, x, z), g.inv(z)), form.circ(g, y, z));
    return lhs == rhs;
  };
  if (order <= exhaustive_limit) {
    for (std::uint32_t x = 0; x < order; ++x)
      for (std::uint32_t y = 0; y < order; ++y)
        for (std::uint32_t z = 0; z < order; ++z)
          if (!holds(x, y, z)) return false;
    return true;
  }
  std::uniform_int_distribution<std::uint32_t> pick(0, order - 1);
  for (std::uint64_t s = 0; s < samples; ++s)
    if (!holds(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

AntisymClass classify_antisym(const BilinearForm& form) {
  if (!form.is_antisymmetric()) throw Error(ErrorKind::NotAntiSymmetric, "form is not anti-symmetric");
  const GroupSpec& spec = form.spec();
  const PrimeField& f = spec.field();
  const std::size_t n = spec.n(), m = spec.m();
  // B = Delta_[1/2] + Delta; (G, o) commutators are 2B.
  const BilinearForm b = power_form(spec, f.half()) + form;

  AntisymClass out;
  out.abelian = b.is_zero();

  FpMatrix values(f, m, m);
  for (std::size_t r = 0; r < m; ++r) {
    auto [i, j] = spec.pair_at(r);
    values.set_row(r, b.at(i, j));
  }
  out.derived_full = rank(values) == m;

  // u lies in the radical iff u * R = 0, where row i of R lists B(e_i, e_j) for all j.
  FpMatrix radical_map(f, n, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < m; ++c) radical_map.set(i, j * m + c, b.at(i, j)[c]);
  out.center_equal = rank(radical_map) == n;
  return out;
}

FpMatrix quotient_matrix(const GroupSpec& spec, const GeneratorImages& images) {
  if (images.size() != spec.n()) throw Error(ErrorKind::DimensionMismatch, "need one image per generator");
  FpMatrix a(spec.field(), spec.n(), spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i) {
    check_element(spec, images[i]);
    a.set_row(i, images[i].a);
  }
  return a;
}

bool equivariance_check(const BilinearForm& form, const std::vector<GeneratorImages>& auts) {
  const GroupSpec& spec = form.spec();
  for (const auto& images : auts) {
    const FpMatrix a = quotient_matrix(spec, images);
    const FpMatrix hat = wedge_matrix(spec, a);
    for (std::size_t i = 0; i < spec.n(); ++i)
      for (std::size_t j = 0; j < spec.n(); ++j)
        if (evaluate(form, a.row_vec(i), a.row_vec(j)) != vec_mat(form.at(i, j), hat)) return false;
  }
  return true;
}

IsoclinismReport isoclinism_witness(const SigmaEndo& se) {
  const GroupSpec& spec = se.spec;
  if (!is_invertible(se.tau)) throw Error(ErrorKind::TauSingular, "I + 2S is singular");
  const BilinearForm form = sigma_form(se);
  IsoclinismReport out;
  out.psi = se.tau;
  out.passed = true;
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (std::size_t j = 0; j < spec.n(); ++j) {
      const GroupElement xi = generator(spec, i), xj = generator(spec, j);
      const GroupElement lhs = circle_commutator_by_definition(form, xi, xj);
      const FpVec rhs = vec_mat(commutator(spec, xi, xj).c, out.psi);
      if (!vec_is_zero(lhs.a) || lhs.c != rhs) out.passed = false;
      ++out.pairs_checked;
    }
  return out;
}

}  // namespace mhol
