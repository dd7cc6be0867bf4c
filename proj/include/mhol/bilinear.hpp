#pragma once

/**
 * @file bilinear.hpp
 * @brief Bilinear forms G/G' x G/G' -> G' and the circle groups they define.
 *
 * Values in G' are written additively as m-vectors. A form is stored by its
 * values on pairs of generator cosets and extended bilinearly. The circle
 * operation is x o y = x y Delta(x, y).
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mhol/class2_group.hpp"
#include "mhol/fp_matrix.hpp"

namespace mhol {

class BilinearForm {
 public:
  /// Zero form.
  explicit BilinearForm(const GroupSpec& spec);
  /// tensor[i * n + j] = Delta(x_i G', x_j G'); each value has length m.
  BilinearForm(const GroupSpec& spec, std::vector<FpVec> tensor);

  [[nodiscard]] const GroupSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const FpVec& at(std::size_t i, std::size_t j) const { return tensor_[i * spec_.n() + j]; }
  void set(std::size_t i, std::size_t j, const FpVec& value);
  [[nodiscard]] const std::vector<FpVec>& tensor() const noexcept { return tensor_; }

  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_antisymmetric() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const BilinearForm& x, const BilinearForm& y) { return x.tensor_ == y.tensor_; }

 private:
  GroupSpec spec_;
  std::vector<FpVec> tensor_;
};

BilinearForm operator+(const BilinearForm& x, const BilinearForm& y);
BilinearForm operator-(const BilinearForm& x, const BilinearForm& y);
BilinearForm scaled(const BilinearForm& x, Residue k);

/// sigma in End(G') with tau = I + 2 sigma.
struct SigmaEndo {
  GroupSpec spec;
  FpMatrix s;
  FpMatrix tau;

  static SigmaEndo from_sigma(const GroupSpec& spec, const FpMatrix& s);
  /// sigma = (tau - I) / 2.
  static SigmaEndo from_tau(const GroupSpec& spec, const FpMatrix& tau);
};

/// sum_{i,j} u_i v_j tensor[i][j].
FpVec evaluate(const BilinearForm& form, const FpVec& u, const FpVec& v);

/// Delta_[c](x, y) = [x, y]^c.
BilinearForm power_form(const GroupSpec& spec, std::int64_t c);
/// Delta_sigma(x, y) = [x, y]^sigma.
BilinearForm sigma_form(const SigmaEndo& se);
/// Row (j,k) of S is Delta(x_j, x_k). Throws NotAntiSymmetric.
SigmaEndo antisym_to_sigma(const BilinearForm& form);

struct FormSplit {
  BilinearForm symmetric;
  BilinearForm antisymmetric;
};
FormSplit sym_antisym_split(const BilinearForm& form);

/// Delta^(alpha, beta)(x, y) = Delta(x alpha^-1, y alpha^-1) beta.
BilinearForm act(const BilinearForm& form, const FpMatrix& alpha, const FpMatrix& beta);

GroupElement circle_mul(const BilinearForm& form, const GroupElement& e1, const GroupElement& e2);
/// x^{(-1)} = x^-1 Delta(x, x).
GroupElement circle_inverse(const BilinearForm& form, const GroupElement& e);
/// d-th power in (G, o); d may be negative.
GroupElement circle_power(const BilinearForm& form, const GroupElement& e, std::int64_t d);
/// Closed form [x,y] + Delta(x,y) - Delta(y,x).
GroupElement circle_commutator(const BilinearForm& form, const GroupElement& e1, const GroupElement& e2);
/// x^(-1) o y^(-1) o x o y computed with circle_mul / circle_inverse.
GroupElement circle_commutator_by_definition(const BilinearForm& form, const GroupElement& e1,
                                             const GroupElement& e2);

/**
 * Arbitrary (not necessarily bilinear) function G/G' x G/G' -> G' stored as a
 * table of derived-subgroup codes indexed by quotient indices. This is what
 * the exhaustive checks consume, so deliberately broken tables can be fed to
 * them as negative controls.
 */
class FormTable {
 public:
  FormTable(const BilinearForm& form, const ElementIndexer& indexer);

  [[nodiscard]] std::uint32_t quotient_order() const noexcept { return pn_; }
  [[nodiscard]] std::uint32_t value(std::uint32_t u_idx, std::uint32_t v_idx) const noexcept {
    return values_[static_cast<std::size_t>(u_idx) * pn_ + v_idx];
  }
  /// Copy with a single entry replaced.
  [[nodiscard]] FormTable with_entry(std::uint32_t u_idx, std::uint32_t v_idx, std::uint32_t c_code) const;

  /// x o y on element indices.
  [[nodiscard]] std::uint32_t circ(const CayleyTable& g, std::uint32_t x, std::uint32_t y) const noexcept {
    const auto& ix = g.indexer();
    return g.add_central(g.mul(x, y), value(ix.a_index(x), ix.a_index(y)));
  }

  friend bool operator==(const FormTable& x, const FormTable& y) { return x.values_ == y.values_; }

 private:
  FormTable() = default;
  std::uint32_t pn_ = 0;
  std::vector<std::uint32_t> values_;
};

/// gamma(y) : x -> x Delta(x, y), with the checks that make it a valid
/// element of Aut_c(G) cap Aut_z(G).
struct GammaMap {
  std::vector<std::uint32_t> images;  ///< indexed by element index
  bool is_automorphism = false;
  bool identity_mod_center = false;
  bool fixes_center = false;

  [[nodiscard]] bool valid() const noexcept { return is_automorphism && identity_mod_center && fixes_center; }
};

GammaMap gamma_of(const FormTable& form, const CayleyTable& g, std::uint32_t y);
GammaMap gamma_of(const BilinearForm& form, const CayleyTable& g, const GroupElement& y);

/// (xy) o z == (x o z) z^-1 (y o z). Exhaustive over all triples when
/// |G| <= exhaustive_limit, otherwise on `samples` random triples.
bool brace_compatibility_check(const FormTable& form, const CayleyTable& g, std::uint64_t samples,
                               std::mt19937_64& rng, std::uint32_t exhaustive_limit = 729);

struct AntisymClass {
  bool abelian = false;
  bool derived_full = false;
  bool center_equal = false;
};
/// Throws NotAntiSymmetric.
AntisymClass classify_antisym(const BilinearForm& form);

/// An automorphism of G given by the images of x_1..x_n.
using GeneratorImages = std::vector<GroupElement>;

/// Matrices of the automorphism on G/G' and G'.
FpMatrix quotient_matrix(const GroupSpec& spec, const GeneratorImages& images);

/// Delta(x^b, y^b) == Delta(x, y)^b for every b in auts on all basis pairs.
bool equivariance_check(const BilinearForm& form, const std::vector<GeneratorImages>& auts);

struct IsoclinismReport {
  bool passed = false;
  FpMatrix psi;  ///< = tau on G'
  std::size_t pairs_checked = 0;
};
/// Throws TauSingular.
IsoclinismReport isoclinism_witness(const SigmaEndo& se);

}  // namespace mhol
