#pragma once

// Independent reference implementations used as test oracles.

#include <cstdint>
#include <random>
#include <vector>

#include "mhol/bilinear.hpp"
#include "mhol/class2_group.hpp"
#include "mhol/fp_matrix.hpp"

namespace testsupport {

using namespace mhol;

inline FpMatrix mat(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0) {
  return FpMatrix::from_rows(PrimeField(p), rows, cols);
}

inline GroupSpec spec_zero(std::uint32_t p, std::size_t n) { return GroupSpec::with_zero_powers(PrimeField(p), n); }

inline GroupSpec spec_with(std::uint32_t p, std::size_t n, const std::vector<std::vector<std::int64_t>>& d) {
  return GroupSpec(PrimeField(p), n, FpMatrix::from_rows(PrimeField(p), d, n * (n - 1) / 2));
}

inline GroupElement elem(const std::vector<Residue>& a, const std::vector<Residue>& c) { return {a, c}; }

/// Multiplies a normal form on the right by one generator letter x_i, using
/// only the defining relations: x_k x_i = x_i x_k [x_i, x_k]^-1 for i < k,
/// commutators are central, and x_i^p is row i of D.
inline void append_letter(const GroupSpec& spec, GroupElement& e, std::size_t i) {
  const std::uint32_t p = spec.p();
  for (std::size_t k = i + 1; k < spec.n(); ++k) {
    std::size_t idx = spec.pair_index(i, k);
    e.c[idx] = (e.c[idx] + (p - e.a[k]) % p) % p;
  }
  if (++e.a[i] == p) {
    e.a[i] = 0;
    for (std::size_t c = 0; c < spec.m(); ++c) e.c[c] = (e.c[c] + spec.d()(i, c)) % p;
  }
}

/// Product of two normal forms by collecting the word of the second factor.
inline GroupElement collect_product(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  GroupElement e = x;
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (Residue t = 0; t < y.a[i]; ++t) append_letter(spec, e, i);
  for (std::size_t c = 0; c < spec.m(); ++c) e.c[c] = (e.c[c] + y.c[c]) % spec.p();
  return e;
}

inline BilinearForm random_form(const GroupSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> dist(0, spec.p() - 1);
  std::vector<FpVec> t(spec.n() * spec.n(), FpVec(spec.m()));
  for (auto& v : t)
    for (auto& x : v) x = dist(rng);
  return {spec, t};
}

inline BilinearForm random_antisym(const GroupSpec& spec, std::mt19937_64& rng) {
  return sym_antisym_split(random_form(spec, rng)).antisymmetric;
}

inline BilinearForm random_sym(const GroupSpec& spec, std::mt19937_64& rng) {
  return sym_antisym_split(random_form(spec, rng)).symmetric;
}

}  // namespace testsupport
