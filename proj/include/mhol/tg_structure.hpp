#pragma once

/**
 * @file tg_structure.hpp
 * @brief Isomorphisms G -> (G, o), the res map and the orders of T(G).
 *
 * An isomorphism theta : G -> (G, o_sigma) inducing alpha on G/G' exists iff
 * A^-1 D wedge(A) = D T^-1 where T = I + 2 sigma. When rank D = n the
 * solutions are parametrized, after a change of bases making D = [I | 0], by
 * triples (Q, A, M) with Q of size (m-n) x n and M in GL_{m-n}.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "mhol/bilinear.hpp"
#include "mhol/class2_group.hpp"
#include "mhol/fp_matrix.hpp"

namespace mhol {

struct CriterionSolution {
  FpMatrix a;  ///< n x n, action on G/G'
  FpMatrix t;  ///< m x m, I + 2 sigma
};

/// Throws SingularInput when A or T is singular, DimensionMismatch on shape.
bool criterion_holds(const GroupSpec& spec, const FpMatrix& a, const FpMatrix& t);

/// All invertible T with criterion_holds(spec, A, T).
class TSolutionSet {
 public:
  /// Throws SingularInput when A is singular.
  TSolutionSet(const GroupSpec& spec, const FpMatrix& a);

  [[nodiscard]] bool empty() const;
  [[nodiscard]] bool full_rank() const noexcept { return full_rank_; }
  /// Exact number of solutions.
  [[nodiscard]] mpz_class count() const;
  /// Visits every solution T; fn returns false to stop. For full-rank D the
  /// solutions come from the (Q, M) parametrization, otherwise from the
  /// affine space of W = T^-1.
  void for_each(const std::function<bool(const FpMatrix&)>& fn) const;
  /// Same set, always enumerated through the affine space of T^-1.
  void for_each_affine(const std::function<bool(const FpMatrix&)>& fn) const;
  [[nodiscard]] std::vector<FpMatrix> to_vector(std::size_t limit = 1'000'000) const;

 private:
  GroupSpec spec_;
  FpMatrix a_;
  bool full_rank_ = false;
  std::optional<AffineSolution> w_space_;
};

TSolutionSet solve_T_for_A(const GroupSpec& spec, const FpMatrix& a);

struct ResElement {
  FpMatrix q;  ///< (m-n) x n
  FpMatrix a;  ///< n x n, reduced coordinates
  FpMatrix m;  ///< (m-n) x (m-n)

  friend bool operator==(const ResElement&, const ResElement&) = default;
};

/// Image of an isomorphism under res: (alpha on G/G', beta on G').
struct ResPair {
  FpMatrix alpha;
  FpMatrix beta;

  friend bool operator==(const ResPair&, const ResPair&) = default;
};

/// res(S') for a full-rank spec, in reduced coordinates.
class ResGroup {
 public:
  /// Throws NotFullRank unless rank D = n (which forces m >= n).
  explicit ResGroup(const GroupSpec& spec);

  [[nodiscard]] const GroupSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const BlockReduction& reduction() const noexcept { return red_; }

  [[nodiscard]] ResElement identity() const;
  /// (M2^-1 Q1 + Q2 A1^-1, A1 A2, M1 M2).
  [[nodiscard]] ResElement mul(const ResElement& x, const ResElement& y) const;
  /// (-M Q A, A^-1, M^-1).
  [[nodiscard]] ResElement inverse(const ResElement& x) const;
  /// [[A, 0], [M Q A, M]] (reduced coordinates).
  [[nodiscard]] FpMatrix block(const ResElement& x) const;
  /// Criterion solution in original coordinates.
  [[nodiscard]] CriterionSolution to_solution(const ResElement& x) const;
  /// (A, wedge(A) T) in original coordinates.
  [[nodiscard]] ResPair to_pair(const ResElement& x) const;
  /// Inverse of to_solution. Throws CriterionFails.
  [[nodiscard]] ResElement from_solution(const CriterionSolution& sol) const;
  [[nodiscard]] ResElement random(std::mt19937_64& rng) const;

 private:
  GroupSpec spec_;
  BlockReduction red_;
  FpMatrix u_inv_, v_inv_;
};

/// p^{(m-n) n} |GL_n| |GL_{m-n}|. Throws NotFullRank.
mpz_class res_group_order(const GroupSpec& spec);
/// p^{C(n,2) C(n+1,2)}.
mpz_class sym_part_order(const GroupSpec& spec);

struct TGOrder {
  mpz_class value;
  /// Only true when Aut(G) = Aut_c(G) has been certified; otherwise value is
  /// the order of the subgroup S x| res(S') of T(G).
  bool unconditional = false;
};
/// Throws NotFullRank.
TGOrder tg_order(const GroupSpec& spec, bool aut_c_verified);

/// An isomorphism G -> (G, o_form).
struct IsoWitness {
  GroupSpec spec;
  BilinearForm form;
  std::function<GroupElement(const GroupElement&)> map;
  bool verified = false;
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;

  [[nodiscard]] GroupElement operator()(const GroupElement& x) const { return map(x); }
};

/// theta(x) = x * Delta0(x, x)/2. Throws NotSymmetric.
IsoWitness sym_isomorphism(const GroupSpec& spec, const BilinearForm& delta0);
/// d = (2c+1)^-1 in [1, p-1].  Throws HalfExcluded when 2c+1 = 0 mod p.
Residue theta_exponent(const GroupSpec& spec, std::int64_t c);
/// theta(x) = x^d, an isomorphism onto (G, o_[c]). Throws HalfExcluded.
IsoWitness theta_d(const GroupSpec& spec, std::int64_t c);
/// theta(a, c) = x~_1^{o a_1} o ... o x~_n^{o a_n} o (0, c wedge(A) T), with
/// x~_i = (row i of A, 0). Throws CriterionFails.
IsoWitness build_isomorphism(const GroupSpec& spec, const CriterionSolution& sol);
/// x -> second(first(x)), an isomorphism onto the form first^{res(second)} + second.
IsoWitness compose_witnesses(const IsoWitness& first, const IsoWitness& second);

/// Checks theta on all pairs using the supplied table.
void verify_exhaustive(IsoWitness& w, const CayleyTable& g);
/// Exhaustive when |G| <= 729, otherwise `pairs` random pairs (at least 10^4)
/// together with invertibility of the induced maps.
void verify_witness(IsoWitness& w, std::uint64_t pairs, std::mt19937_64& rng);

/// Matrices induced by theta on G/G' and G'. Throws VerificationFailed when
/// theta does not map G' into itself.
ResPair induced_res(const IsoWitness& w);

/// T(G) element: symmetric form together with a res pair.
struct TGElement {
  BilinearForm sym;
  ResPair res;

  friend bool operator==(const TGElement& x, const TGElement& y) { return x.sym == y.sym && x.res == y.res; }
};

TGElement tg_identity(const GroupSpec& spec);
TGElement tg_from_witness(const IsoWitness& w);
/// (t1.sym^{t2.res} + t2.sym, t1.res * t2.res).
TGElement compose_tg(const TGElement& t1, const TGElement& t2);

struct PresentationCheck {
  FpMatrix d_circ;  ///< D T^-1
  bool relations_hold = false;
};
/// Exponent matrix of the p-th power map of (G, o_sigma) with respect to the
/// o-commutator basis, checked against direct o-evaluation. Throws SingularT.
PresentationCheck circle_presentation_matrix(const GroupSpec& spec, const FpMatrix& t);

struct StabilizerResult {
  bool exhaustive = false;
  std::uint64_t scanned = 0;
  /// All of {A : A^-1 D wedge(A) = D} when exhaustive, otherwise the ones found.
  std::vector<FpMatrix> members;

  /// True only when the exhaustive scan found the identity alone.
  [[nodiscard]] bool certifies_trivial() const noexcept { return exhaustive && members.size() == 1; }
};
/// Exhaustive for |GL_n| <= exhaustive_limit, otherwise `budget` random samples.
StabilizerResult induced_aut_stabilizer(const GroupSpec& spec, std::uint64_t budget, std::mt19937_64& rng,
                                        std::uint64_t exhaustive_limit = 10'000'000);

}  // namespace mhol
