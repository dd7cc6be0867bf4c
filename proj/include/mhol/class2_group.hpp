#pragma once

/**
 * @file class2_group.hpp
 * @brief Class-two p-groups given by power-commutator data (p, n, D).
 *
 * The group has generators x_1..x_n, central commutators [x_j, x_k] (j < k)
 * forming a basis of G' ~ F_p^m with m = n(n-1)/2, and power relations
 * x_i^p = prod_{j<k} [x_j, x_k]^{D(i, (j,k))}. Its order is p^(n+m).
 *
 * Commutator pairs are always indexed in lexicographic order
 * (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mhol/fp_matrix.hpp"
#include "mhol/prime_field.hpp"

namespace mhol {

class GroupSpec {
 public:
  /// Validates shape: n >= 2 and D is n x C(n,2) over F_p.
  GroupSpec(const PrimeField& field, std::size_t n, FpMatrix d);
  /// The spec with D = 0.
  static GroupSpec with_zero_powers(const PrimeField& field, std::size_t n);

  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] std::uint32_t p() const noexcept { return field_.p(); }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] const FpMatrix& d() const noexcept { return d_; }

  /// 0-based j < k  ->  column index.
  [[nodiscard]] std::size_t pair_index(std::size_t j, std::size_t k) const;
  /// Inverse of pair_index.
  [[nodiscard]] std::pair<std::size_t, std::size_t> pair_at(std::size_t idx) const { return pairs_[idx]; }
  /// "(1,2),(1,3),...", 1-based.
  [[nodiscard]] std::string pair_order() const;

  friend bool operator==(const GroupSpec& x, const GroupSpec& y) { return x.n_ == y.n_ && x.d_ == y.d_; }

 private:
  PrimeField field_;
  std::size_t n_;
  std::size_t m_;
  FpMatrix d_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Normal form prod x_i^{a_i} * prod [x_j,x_k]^{c_(j,k)}.
struct GroupElement {
  FpVec a;
  FpVec c;

  auto operator<=>(const GroupElement&) const = default;
};

GroupElement identity_element(const GroupSpec& spec);
/// x_i (0-based).
GroupElement generator(const GroupSpec& spec, std::size_t i);
/// The central element (0, c).
GroupElement central_element(const GroupSpec& spec, const FpVec& c);
/// Throws SpecMismatch when e's shape does not belong to spec.
void check_element(const GroupSpec& spec, const GroupElement& e);

GroupElement multiply(const GroupSpec& spec, const GroupElement& e1, const GroupElement& e2);
GroupElement inverse(const GroupSpec& spec, const GroupElement& e);
GroupElement power(const GroupSpec& spec, const GroupElement& e, std::int64_t d);
/// e1^-1 e2^-1 e1 e2 via the wedge formula.
GroupElement commutator(const GroupSpec& spec, const GroupElement& e1, const GroupElement& e2);

/// wedge(u, v)_(j,k) = u_j v_k - u_k v_j.
FpVec wedge(const GroupSpec& spec, const FpVec& u, const FpVec& v);
/// abar * D.
FpVec pth_power_map(const GroupSpec& spec, const FpVec& abar);
/// Matrix of the exterior-square map induced by A:
/// entry ((j,k),(s,t)) = a_js a_kt - a_jt a_ks.
FpMatrix wedge_matrix(const GroupSpec& spec, const FpMatrix& a);
/// Omega_1(G) <= G'  <=>  rank(D) = n.
bool omega1_in_derived(const GroupSpec& spec);

GroupElement random_element(const GroupSpec& spec, std::mt19937_64& rng);

/// Bijection between normal forms and [0, p^(n+m)), lexicographic on (a, c)
/// with the first coordinate most significant. Index 0 is the identity.
class ElementIndexer {
 public:
  /// Throws BoundExceeded when p^(n+m) > bound.
  explicit ElementIndexer(const GroupSpec& spec, std::uint64_t bound = 2'000'000);

  [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
  [[nodiscard]] std::uint32_t quotient_order() const noexcept { return pn_; }
  [[nodiscard]] std::uint32_t derived_order() const noexcept { return pm_; }

  [[nodiscard]] std::uint32_t index(const GroupElement& e) const;
  [[nodiscard]] GroupElement element(std::uint32_t idx) const;
  [[nodiscard]] std::uint32_t a_index(std::uint32_t idx) const noexcept { return idx / pm_; }
  [[nodiscard]] std::uint32_t c_index(std::uint32_t idx) const noexcept { return idx % pm_; }
  [[nodiscard]] std::uint32_t compose(std::uint32_t a_idx, std::uint32_t c_idx) const noexcept {
    return a_idx * pm_ + c_idx;
  }
  [[nodiscard]] std::uint32_t encode_vec(const FpVec& v) const;
  [[nodiscard]] FpVec decode_a(std::uint32_t a_idx) const;
  [[nodiscard]] FpVec decode_c(std::uint32_t c_idx) const;

 private:
  std::uint32_t p_;
  std::size_t n_, m_;
  std::uint32_t pn_, pm_, order_;
};

/// All p^(n+m) elements in indexer order. Throws BoundExceeded above bound.
std::vector<GroupElement> enumerate_elements(const GroupSpec& spec, std::uint64_t bound = 2'000'000);

/// Dense multiplication table over element indices, for exhaustive kernels.
class CayleyTable {
 public:
  /// Throws BoundExceeded when |G| > max_order.
  explicit CayleyTable(const GroupSpec& spec, std::uint32_t max_order = 2048);

  [[nodiscard]] const GroupSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const ElementIndexer& indexer() const noexcept { return indexer_; }
  [[nodiscard]] std::uint32_t order() const noexcept { return indexer_.order(); }

  [[nodiscard]] std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
    return table_[static_cast<std::size_t>(x) * order() + y];
  }
  [[nodiscard]] std::uint32_t inv(std::uint32_t x) const noexcept { return inverse_[x]; }
  /// x * (0, c) where c is given by its code.
  [[nodiscard]] std::uint32_t add_central(std::uint32_t x, std::uint32_t c_code) const noexcept {
    const std::uint32_t pm = indexer_.derived_order();
    return (x / pm) * pm + cadd_[static_cast<std::size_t>(x % pm) * pm + c_code];
  }
  [[nodiscard]] std::uint32_t add_codes(std::uint32_t c1, std::uint32_t c2) const noexcept {
    return cadd_[static_cast<std::size_t>(c1) * indexer_.derived_order() + c2];
  }

 private:
  GroupSpec spec_;
  ElementIndexer indexer_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> cadd_;
};

/// Indices of Z(G), computed from the table.
std::vector<std::uint32_t> center_elements(const CayleyTable& g);

}  // namespace mhol
