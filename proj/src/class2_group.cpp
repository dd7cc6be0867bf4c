#include "mhol/class2_group.hpp"

#include "mhol/error.hpp"

namespace mhol {

GroupSpec::GroupSpec(const PrimeField& field, std::size_t n, FpMatrix d)
    : field_(field), n_(n), m_(n * (n - 1) / 2), d_(std::move(d)) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "n: need at least 2 generators, got " + std::to_string(n));
  if (d_.p() != field.p()) throw Error(ErrorKind::ModulusMismatch, "D: modulus differs from p");
  if (d_.rows() != n_ || d_.cols() != m_)
    throw Error(ErrorKind::InvalidInput, "D: expected shape " + std::to_string(n_) + "x" + std::to_string(m_) +
                                             ", got " + std::to_string(d_.rows()) + "x" +
                                             std::to_string(d_.cols()));
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = j + 1; k < n_; ++k) pairs_.emplace_back(j, k);
}

GroupSpec GroupSpec::with_zero_powers(const PrimeField& field, std::size_t n) {
  return GroupSpec(field, n, FpMatrix(field, n, n * (n - 1) / 2));
}

std::size_t GroupSpec::pair_index(std::size_t j, std::size_t k) const {
  if (!(j < k && k < n_)) throw Error(ErrorKind::InvalidInput, "pair_index needs j < k < n");
  // Pairs (j, .) start after sum_{i<j} (n-1-i) entries.
  return j * (2 * n_ - j - 1) / 2 + (k - j - 1);
}

std::string GroupSpec::pair_order() const {
  std::string s;
  for (auto [j, k] : pairs_) {
    if (!s.empty()) s += ",";
    s += "(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
  }
  return s;
}

GroupElement identity_element(const GroupSpec& spec) { return {FpVec(spec.n(), 0), FpVec(spec.m(), 0)}; }

GroupElement generator(const GroupSpec& spec, std::size_t i) {
  GroupElement e = identity_element(spec);
  e.a.at(i) = 1;
  return e;
}

GroupElement central_element(const GroupSpec& spec, const FpVec& c) {
  GroupElement e = identity_element(spec);
  if (c.size() != spec.m()) throw Error(ErrorKind::SpecMismatch, "central_element: wrong length");
  for (std::size_t i = 0; i < c.size(); ++i) e.c[i] = c[i] % spec.p();
  return e;
}

void check_element(const GroupSpec& spec, const GroupElement& e) {
  if (e.a.size() != spec.n() || e.c.size() != spec.m())
    throw Error(ErrorKind::SpecMismatch, "element shape does not match the spec");
}

GroupElement multiply(const GroupSpec& spec, const GroupElement& e1, const GroupElement& e2) {
  check_element(spec, e1);
  check_element(spec, e2);
  const PrimeField& f = spec.field();
  const std::size_t n = spec.n();
  GroupElement r{FpVec(n), vec_add(f, e1.c, e2.c)};
  // Moving x_j^{b_j} left past x_k^{a_k} (j < k) contributes [x_j,x_k]^{-a_k b_j}.
  std::size_t idx = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k, ++idx) {
      Residue t = f.mul(e1.a[k], e2.a[j]);
      if (t) r.c[idx] = f.sub(r.c[idx], t);
    }
  for (std::size_t i = 0; i < n; ++i) {
    Residue s = e1.a[i] + e2.a[i];
    if (s >= spec.p()) {
      s -= spec.p();
      auto drow = spec.d().row(i);
      for (std::size_t c = 0; c < spec.m(); ++c) r.c[c] = f.add(r.c[c], drow[c]);
    }
    r.a[i] = s;
  }
  return r;
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& e) {
  check_element(spec, e);
  const PrimeField& f = spec.field();
  const std::size_t n = spec.n();
  GroupElement r{FpVec(n), FpVec(spec.m())};
  for (std::size_t i = 0; i < n; ++i) r.a[i] = f.neg(e.a[i]);
  // Solve e * r = 1: c' = -c + sum_{j<k} a_k a'_j - sum_{i : a_i != 0} D_i.
  for (std::size_t c = 0; c < spec.m(); ++c) r.c[c] = f.neg(e.c[c]);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k, ++idx) r.c[idx] = f.add(r.c[idx], f.mul(e.a[k], r.a[j]));
  for (std::size_t i = 0; i < n; ++i) {
    if (e.a[i] == 0) continue;
    auto drow = spec.d().row(i);
    for (std::size_t c = 0; c < spec.m(); ++c) r.c[c] = f.sub(r.c[c], drow[c]);
  }
  return r;
}

GroupElement power(const GroupSpec& spec, const GroupElement& e, std::int64_t d) {
  GroupElement base = d < 0 ? inverse(spec, e) : e;
  std::uint64_t k = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  GroupElement result = identity_element(spec);
  while (k > 0) {
    if (k & 1u) result = multiply(spec, result, base);
    k >>= 1;
    if (k) base = multiply(spec, base, base);
  }
  return result;
}

FpVec wedge(const GroupSpec& spec, const FpVec& u, const FpVec& v) {
  const PrimeField& f = spec.field();
  FpVec w(spec.m());
  std::size_t idx = 0;
  for (std::size_t j = 0; j < spec.n(); ++j)
    for (std::size_t k = j + 1; k < spec.n(); ++k, ++idx) w[idx] = f.sub(f.mul(u[j], v[k]), f.mul(u[k], v[j]));
  return w;
}

GroupElement commutator(const GroupSpec& spec, const GroupElement& e1, const GroupElement& e2) {
  check_element(spec, e1);
  check_element(spec, e2);
  return {FpVec(spec.n(), 0), wedge(spec, e1.a, e2.a)};
}

FpVec pth_power_map(const GroupSpec& spec, const FpVec& abar) { return vec_mat(abar, spec.d()); }

FpMatrix wedge_matrix(const GroupSpec& spec, const FpMatrix& a) {
  if (a.rows() != spec.n() || a.cols() != spec.n())
    throw Error(ErrorKind::DimensionMismatch, "wedge_matrix needs an n x n matrix");
  FpMatrix hat(spec.field(), spec.m(), spec.m());
  for (std::size_t r = 0; r < spec.m(); ++r) hat.set_row(r, wedge(spec, a.row_vec(spec.pair_at(r).first),
                                                                  a.row_vec(spec.pair_at(r).second)));
  return hat;
}

bool omega1_in_derived(const GroupSpec& spec) { return rank(spec.d()) == spec.n(); }

GroupElement random_element(const GroupSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> dist(0, spec.p() - 1);
  GroupElement e = identity_element(spec);
  for (auto& x : e.a) x = dist(rng);
  for (auto& x : e.c) x = dist(rng);
  return e;
}

ElementIndexer::ElementIndexer(const GroupSpec& spec, std::uint64_t bound)
    : p_(spec.p()), n_(spec.n()), m_(spec.m()), pn_(1), pm_(1), order_(1) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n_ + m_; ++i) {
    total *= p_;
    if (total > bound)
      throw Error(ErrorKind::BoundExceeded, "|G| = " + std::to_string(p_) + "^" + std::to_string(n_ + m_) +
                                                " exceeds the enumeration bound " + std::to_string(bound));
  }
  for (std::size_t i = 0; i < n_; ++i) pn_ *= p_;
  for (std::size_t i = 0; i < m_; ++i) pm_ *= p_;
  order_ = static_cast<std::uint32_t>(total);
}

std::uint32_t ElementIndexer::encode_vec(const FpVec& v) const {
  std::uint32_t code = 0;
  for (Residue x : v) code = code * p_ + x;
  return code;
}

std::uint32_t ElementIndexer::index(const GroupElement& e) const {
  return compose(encode_vec(e.a), encode_vec(e.c));
}

FpVec ElementIndexer::decode_a(std::uint32_t a_idx) const {
  FpVec v(n_);
  for (std::size_t i = n_; i-- > 0;) {
    v[i] = a_idx % p_;
    a_idx /= p_;
  }
  return v;
}

FpVec ElementIndexer::decode_c(std::uint32_t c_idx) const {
  FpVec v(m_);
  for (std::size_t i = m_; i-- > 0;) {
    v[i] = c_idx % p_;
    c_idx /= p_;
  }
  return v;
}

GroupElement ElementIndexer::element(std::uint32_t idx) const { return {decode_a(a_index(idx)), decode_c(c_index(idx))}; }

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec, std::uint64_t bound) {
  ElementIndexer indexer(spec, bound);
  std::vector<GroupElement> out;
  out.reserve(indexer.order());
  for (std::uint32_t i = 0; i < indexer.order(); ++i) out.push_back(indexer.element(i));
  return out;
}

CayleyTable::CayleyTable(const GroupSpec& spec, std::uint32_t max_order)
    : spec_(spec), indexer_(spec, max_order) {
  const std::uint32_t order = indexer_.order();
  const std::uint32_t pn = indexer_.quotient_order(), pm = indexer_.derived_order();
  const PrimeField& f = spec.field();
  std::vector<GroupElement> elems = enumerate_elements(spec, max_order);

  cadd_.resize(static_cast<std::size_t>(pm) * pm);
  std::vector<FpVec> cvecs(pm);
  for (std::uint32_t c = 0; c < pm; ++c) cvecs[c] = indexer_.decode_c(c);
  for (std::uint32_t c1 = 0; c1 < pm; ++c1)
    for (std::uint32_t c2 = 0; c2 < pm; ++c2)
      cadd_[static_cast<std::size_t>(c1) * pm + c2] = indexer_.encode_vec(vec_add(f, cvecs[c1], cvecs[c2]));

  // The product of (a1,c1)(a2,c2) is (a1,0)(a2,0) shifted by c1 + c2.
  std::vector<std::uint32_t> base(static_cast<std::size_t>(pn) * pn);
  for (std::uint32_t a1 = 0; a1 < pn; ++a1)
    for (std::uint32_t a2 = 0; a2 < pn; ++a2)
      base[static_cast<std::size_t>(a1) * pn + a2] =
          indexer_.index(multiply(spec, elems[indexer_.compose(a1, 0)], elems[indexer_.compose(a2, 0)]));

  table_.resize(static_cast<std::size_t>(order) * order);
  for (std::uint32_t x = 0; x < order; ++x)
    for (std::uint32_t y = 0; y < order; ++y) {
      std::uint32_t b = base[static_cast<std::size_t>(x / pm) * pn + y / pm];
      table_[static_cast<std::size_t>(x) * order + y] = add_central(b, add_codes(x % pm, y % pm));
    }

  inverse_.resize(order);
  for (std::uint32_t x = 0; x < order; ++x) inverse_[x] = indexer_.index(inverse(spec, elems[x]));
}

std::vector<std::uint32_t> center_elements(const CayleyTable& g) {
  std::vector<std::uint32_t> z;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::uint32_t y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

}  // namespace mhol
