#pragma once

/**
 * @file holomorph_oracle.hpp
 * @brief Brute-force permutation-group checks for small class-two groups.
 *
 * Permutations act on element indices and compose left to right:
 * (f * g)(x) = g(f(x)). Hol(G) = rho(G) Aut(G) is kept in factorized form,
 * which makes membership a lookup instead of a closure computation.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "mhol/bilinear.hpp"
#include "mhol/class2_group.hpp"
#include "mhol/tg_structure.hpp"

namespace mhol {

using Perm = std::vector<std::uint32_t>;

/// First a, then b.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm perm_identity(std::uint32_t degree);

class PermGroupSmall {
 public:
  PermGroupSmall() = default;
  /// Elements are sorted and deduplicated; they must form a group.
  PermGroupSmall(std::vector<Perm> generators, std::vector<Perm> elements);

  [[nodiscard]] const std::vector<Perm>& generators() const noexcept { return generators_; }
  [[nodiscard]] const std::vector<Perm>& elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] bool contains(const Perm& x) const;

 private:
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

/// Group generated by gens. Throws BoundExceeded past `limit` elements.
PermGroupSmall perm_closure(const std::vector<Perm>& gens, std::uint32_t degree, std::size_t limit = 1'000'000);

/// Right regular representation x^rho(y) = xy. Throws BoundExceeded for |G| > 2000.
PermGroupSmall rho(const CayleyTable& g);

/// Every automorphism of G, found by searching generator images that satisfy
/// the power relations and generate G, pruning as soon as a relation is
/// decidable. The search over |G|^n tuples is capped
/// at 10^8 unless allow_large is set.
PermGroupSmall enumerate_automorphisms(const CayleyTable& g, bool allow_large = false);

/// Automorphisms that are the identity on G/Z(G) and on Z(G).
PermGroupSmall filter_aut_c_z(const PermGroupSmall& auts, const CayleyTable& g);

/// The automorphism as images of x_1..x_n.
GeneratorImages generator_images(const Perm& aut, const CayleyTable& g);

/// Small generating set chosen greedily from the elements.
std::vector<Perm> greedy_generators(const PermGroupSmall& grp);

/// Hol(G) = rho(G) Aut(G) as a factorized permutation group.
class Holomorph {
 public:
  Holomorph(const CayleyTable& g, PermGroupSmall auts);

  [[nodiscard]] std::uint64_t order() const noexcept { return static_cast<std::uint64_t>(rho_.size()) * auts_.order(); }
  [[nodiscard]] const std::vector<Perm>& rho_elements() const noexcept { return rho_; }
  [[nodiscard]] const PermGroupSmall& automorphisms() const noexcept { return auts_; }
  /// rho(x_i) together with a generating set of Aut(G).
  [[nodiscard]] const std::vector<Perm>& generators() const noexcept { return generators_; }
  [[nodiscard]] const std::vector<Perm>& aut_generators() const noexcept { return aut_generators_; }
  /// h = alpha rho(y) with y = h(1) and alpha in Aut(G).
  [[nodiscard]] bool contains(const Perm& h) const;
  /// Every generator conjugates rho(G) into itself.
  [[nodiscard]] bool normalizes_rho() const noexcept { return normalizes_rho_; }

 private:
  std::vector<Perm> rho_;
  PermGroupSmall auts_;
  std::vector<Perm> generators_;
  std::vector<Perm> aut_generators_;
  bool normalizes_rho_ = false;
};

/// Throws BoundExceeded when |G| |Aut(G)| > cap.
Holomorph build_holomorph(const CayleyTable& g, bool allow_large = false, std::uint64_t cap = 10'000'000);

struct SubgroupReport {
  std::vector<Perm> elements;  ///< elements[x] = gamma(x) rho(x), the one sending 1 to x
  bool is_subgroup = false;
  bool is_regular = false;
  bool is_normal_in_hol = false;
  bool gamma_in_aut_cz = false;
  bool gamma_anti_hom = false;
  bool equivariant = false;

  [[nodiscard]] bool all() const noexcept {
    return is_subgroup && is_regular && is_normal_in_hol && gamma_in_aut_cz && gamma_anti_hom && equivariant;
  }
};

/// N = {gamma(x) rho(x)} for the (possibly non-bilinear) table.
SubgroupReport subgroup_from_form(const CayleyTable& g, const FormTable& form, const Holomorph& hol,
                                  const PermGroupSmall& aut_cz);

struct CorrespondenceReport {
  std::uint64_t forms_scanned = 0;
  std::uint64_t equivariant_forms = 0;
  std::uint64_t forms_with_valid_subgroup = 0;
  std::uint64_t distinct_form_subgroups = 0;
  std::uint64_t candidates_scanned = 0;
  std::uint64_t subgroups_found = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t aut_cz_order = 0;
  std::uint64_t hol_order = 0;
  bool bijection = false;
  std::vector<std::string> failures;
};

/// Enumerates all bilinear forms and all normal regular subgroups satisfying
/// the gamma condition, and matches the two sides.
CorrespondenceReport cross_check_correspondence(const CayleyTable& g);

/// elements[x] = (z -> z o x), the right o-translations.
std::vector<Perm> circle_translations(const CayleyTable& g, const FormTable& form);

/// The witness as a permutation of element indices.
Perm witness_perm(const IsoWitness& w, const CayleyTable& g);
/// theta^-1 rho(G) theta == N as sets.
bool conjugation_check(const Perm& theta, const CayleyTable& g, const std::vector<Perm>& n_elements);
bool conjugation_check(const IsoWitness& w, const CayleyTable& g);

/// Properties of (G, o) computed directly from the table.
struct CircleProfile {
  bool abelian = false;
  bool derived_full = false;  ///< (G, o)' = G'
  bool center_equal = false;  ///< Z(G, o) = Z(G)
  std::size_t derived_order = 0;
  std::size_t center_order = 0;
};
CircleProfile circle_profile(const CayleyTable& g, const FormTable& form);

}  // namespace mhol
