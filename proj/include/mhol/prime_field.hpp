#pragma once

#include <cstdint>
#include <vector>

namespace mhol {

/// Residue in [0, p).
using Residue = std::uint32_t;

/// Row vector over F_p.
using FpVec = std::vector<Residue>;

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field F_p. Values are canonical residues in [0, p).
class PrimeField {
 public:
  /// Throws InvalidInput unless p is an odd prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }

  [[nodiscard]] Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  [[nodiscard]] Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Inverse via extended Euclid; a must be nonzero.
  [[nodiscard]] Residue inv(Residue a) const;
  [[nodiscard]] Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// 2^{-1} = (p+1)/2.
  [[nodiscard]] Residue half() const noexcept { return (p_ + 1) / 2; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

// Vector helpers. All vectors passed to one call share the field.
FpVec vec_add(const PrimeField& f, const FpVec& u, const FpVec& v);
FpVec vec_sub(const PrimeField& f, const FpVec& u, const FpVec& v);
FpVec vec_scale(const PrimeField& f, Residue k, const FpVec& v);
void vec_axpy(const PrimeField& f, Residue k, const FpVec& x, FpVec& y);  // y += k x
bool vec_is_zero(const FpVec& v);

}  // namespace mhol
