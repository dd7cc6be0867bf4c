#include "mhol/prime_field.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "mhol/error.hpp"

namespace mhol {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NotAntiSymmetric: return "NotAntiSymmetric";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::TauSingular: return "TauSingular";
    case ErrorKind::HalfExcluded: return "HalfExcluded";
    case ErrorKind::CriterionFails: return "CriterionFails";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::SingularT: return "SingularT";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 16) || !is_prime(p))
    throw Error(ErrorKind::InvalidInput, "p must be an odd prime below 65536, got " + std::to_string(p));
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorKind::SingularMatrix, "zero has no inverse mod " + std::to_string(p_));
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return reduce(t0);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FpVec vec_add(const PrimeField& f, const FpVec& u, const FpVec& v) {
  FpVec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = f.add(u[i], v[i]);
  return r;
}

FpVec vec_sub(const PrimeField& f, const FpVec& u, const FpVec& v) {
  FpVec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = f.sub(u[i], v[i]);
  return r;
}

FpVec vec_scale(const PrimeField& f, Residue k, const FpVec& v) {
  FpVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.mul(k, v[i]);
  return r;
}

void vec_axpy(const PrimeField& f, Residue k, const FpVec& x, FpVec& y) {
  if (k == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.add(y[i], f.mul(k, x[i]));
}

bool vec_is_zero(const FpVec& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

}  // namespace mhol
