#include "doctest.h"
#include "support.hpp"

#include "mhol/error.hpp"

using namespace mhol;
using testsupport::mat;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("prime field basics") {
  PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.half() == 4);
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { PrimeField g(9); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [] { PrimeField g(2); }));
}

TEST_CASE("mat_mul examples") {
  CHECK(mat(3, {{1, 0}, {0, 1}}) * mat(3, {{1, 0}, {0, 1}}) == FpMatrix::identity(PrimeField(3), 2));
  CHECK(mat(3, {{1, 1}, {0, 1}}) * mat(3, {{1, 1}, {0, 1}}) == mat(3, {{1, 2}, {0, 1}}));
  CHECK(mat(3, {{2}}) * mat(3, {{2}}) == mat(3, {{1}}));
  CHECK(throws_kind(ErrorKind::DimensionMismatch, [] { (void)(mat(3, {{1, 2}}) * mat(3, {{1, 2}})); }));
  CHECK(throws_kind(ErrorKind::ModulusMismatch, [] { (void)(mat(3, {{1}}) * mat(5, {{1}})); }));
}

TEST_CASE("mat_inv examples") {
  CHECK(mat_inv(FpMatrix::identity(PrimeField(5), 3)) == FpMatrix::identity(PrimeField(5), 3));
  CHECK(mat_inv(mat(3, {{2}})) == mat(3, {{2}}));
  CHECK(throws_kind(ErrorKind::SingularMatrix, [] { (void)mat_inv(mat(3, {{1, 1}, {1, 1}})); }));
  CHECK(mat_inv(FpMatrix(PrimeField(3), 0, 0)).rows() == 0);
}

TEST_CASE("rank examples") {
  CHECK(rank(FpMatrix(PrimeField(3), 2, 1)) == 0);
  CHECK(rank(FpMatrix::identity(PrimeField(3), 4)) == 4);
  CHECK(rank(mat(5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("solve_affine examples") {
  PrimeField f(3);
  auto s = solve_affine(FpMatrix::identity(f, 2), FpMatrix::identity(f, 2));
  CHECK(s.particular == FpMatrix::identity(f, 2));
  CHECK(s.free_dimension() == 0);

  auto t = solve_affine(mat(3, {{1, 0}}), mat(3, {{1}}));
  CHECK(t.particular.rows() == 2);
  CHECK(t.particular.cols() == 1);
  CHECK(mat(3, {{1, 0}}) * t.particular == mat(3, {{1}}));
  CHECK(t.free_dimension() == 1);
  for (const auto& z : t.homogeneous_basis()) CHECK((mat(3, {{1, 0}}) * z).is_zero());

  CHECK(throws_kind(ErrorKind::Infeasible, [] { (void)solve_affine(mat(3, {{0, 0}}), mat(3, {{1}})); }));
}

TEST_CASE("gl_order examples") {
  CHECK(gl_order(0, 3) == 1);
  CHECK(gl_order(1, 3) == 2);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(4, 3) == 24261120);
}

TEST_CASE("gl_order matches enumeration") {
  for (auto [k, p] : {std::pair<unsigned, std::uint32_t>{1, 3}, {2, 3}, {1, 5}, {3, 3}, {2, 5}}) {
    std::uint64_t count = 0;
    std::uint64_t brute = 0;
    PrimeField f(p);
    for_each_invertible(f, k, [&](const FpMatrix&) {
      ++count;
      return true;
    });
    // Independent count: all k x k matrices with nonzero determinant.
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k * k; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      FpMatrix x(f, k, k);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k * k; ++i, c /= p) x.set(i / k, i % k, static_cast<std::int64_t>(c % p));
      if (det(x) != 0) ++brute;
    }
    CHECK(count == brute);
    CHECK(gl_order(k, p) == brute);
  }
}

TEST_CASE("reduce_to_I0 examples") {
  PrimeField f(3);
  FpMatrix d(f, 4, 6);
  d.place(0, 0, FpMatrix::identity(f, 4));
  auto r = reduce_to_I0(d);
  CHECK(r.u * d * r.v == d);

  auto swap = reduce_to_I0(mat(3, {{0, 1}}));
  CHECK(swap.u * mat(3, {{0, 1}}) * swap.v == mat(3, {{1, 0}}));

  CHECK(throws_kind(ErrorKind::NotFullRank, [] { (void)reduce_to_I0(mat(3, {{1}, {1}})); }));
}

TEST_CASE("linear algebra invariants on random matrices") {
  std::mt19937_64 rng(20240611);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
      FpMatrix x = random_matrix(f, r, c, rng);
      CHECK(rank(x) == rank(x.transpose()));

      FpMatrix g = random_invertible(f, r, rng);
      CHECK(g * mat_inv(g) == FpMatrix::identity(f, r));
      CHECK(mat_inv(g) * g == FpMatrix::identity(f, r));

      FpMatrix d = random_matrix(f, r, c, rng);
      FpMatrix rhs = d * random_matrix(f, c, 3, rng);
      auto sol = solve_affine(d, rhs);
      CHECK(d * sol.particular == rhs);
      FpMatrix w = random_matrix(f, sol.kernel.cols(), 3, rng);
      CHECK(d * sol.at(w) == rhs);
      CHECK(sol.kernel.cols() == c - rank(d));

      if (rank(d) == r) {
        auto red = reduce_to_I0(d);
        FpMatrix target(f, r, c);
        target.place(0, 0, FpMatrix::identity(f, r));
        CHECK(red.u * d * red.v == target);
        CHECK(is_invertible(red.u));
        CHECK(is_invertible(red.v));
      } else {
        CHECK_THROWS_AS((void)reduce_to_I0(d), Error);
      }
    }
  }
}
