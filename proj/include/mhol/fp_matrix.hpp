#pragma once

/**
 * @file fp_matrix.hpp
 * @brief Dense matrices over a prime field F_p (p odd).
 *
 * Matrices act on row vectors from the right: the image of a row vector v
 * under X is v * X, and the matrix of a composite "first X, then Y" is X * Y.
 * Zero-sized matrices are valid values (GL_0 is the trivial group).
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mhol/prime_field.hpp"

namespace mhol {

class FpMatrix {
 public:
  FpMatrix() : field_(3) {}
  /// Zero matrix.
  FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Entries are reduced mod p; every row must have the same length.
  static FpMatrix from_rows(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& rows,
                            std::size_t cols_if_empty = 0);
  static FpMatrix identity(const PrimeField& field, std::size_t k);
  static FpMatrix scalar(const PrimeField& field, std::size_t k, Residue s);
  /// 1 x k matrix holding v.
  static FpMatrix row_vector(const PrimeField& field, const FpVec& v);

  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] std::uint32_t p() const noexcept { return field_.p(); }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  [[nodiscard]] Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }

  [[nodiscard]] std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] FpVec row_vec(std::size_t r) const {
    return FpVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  void set_row(std::size_t r, const FpVec& v);

  [[nodiscard]] const std::vector<Residue>& data() const noexcept { return data_; }

  [[nodiscard]] FpMatrix transpose() const;
  /// Copy of the rows x cols block whose top-left corner is (r0, c0).
  [[nodiscard]] FpMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  /// Writes src into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const FpMatrix& src);
  [[nodiscard]] FpMatrix scaled(Residue k) const;
  [[nodiscard]] bool is_zero() const;

  /// Base-p integer code of the entries (row-major, first entry most
  /// significant). Only meaningful while p^(rows*cols) fits in 64 bits.
  [[nodiscard]] std::uint64_t code() const;

  std::string to_string() const;

  friend bool operator==(const FpMatrix& x, const FpMatrix& y) {
    return x.p() == y.p() && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

/// Throws DimensionMismatch / ModulusMismatch.
FpMatrix mat_mul(const FpMatrix& x, const FpMatrix& y);
FpMatrix mat_add(const FpMatrix& x, const FpMatrix& y);
FpMatrix mat_sub(const FpMatrix& x, const FpMatrix& y);
inline FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) { return mat_mul(x, y); }
inline FpMatrix operator+(const FpMatrix& x, const FpMatrix& y) { return mat_add(x, y); }
inline FpMatrix operator-(const FpMatrix& x, const FpMatrix& y) { return mat_sub(x, y); }

/// Row vector times matrix.
FpVec vec_mat(const FpVec& v, const FpMatrix& x);

/// Throws SingularMatrix if x is singular, DimensionMismatch if not square.
FpMatrix mat_inv(const FpMatrix& x);
std::size_t rank(const FpMatrix& x);
Residue det(const FpMatrix& x);
bool is_invertible(const FpMatrix& x);

/// Solution set {X : D X = R} = particular + kernel * W for arbitrary W.
struct AffineSolution {
  FpMatrix particular;  ///< D.cols x R.cols
  FpMatrix kernel;      ///< D.cols x f; columns span {z : D z = 0}

  [[nodiscard]] std::size_t free_dimension() const noexcept { return kernel.cols() * particular.cols(); }
  /// Basis of the homogeneous space {Z : D Z = 0} as matrices of X's shape.
  [[nodiscard]] std::vector<FpMatrix> homogeneous_basis() const;
  /// particular + kernel * w, where w has kernel.cols() rows.
  [[nodiscard]] FpMatrix at(const FpMatrix& w) const;
};

/// Throws Infeasible when D X = R has no solution.
AffineSolution solve_affine(const FpMatrix& d, const FpMatrix& r);

struct BlockReduction {
  FpMatrix u;  ///< n x n invertible
  FpMatrix v;  ///< m x m invertible
};

/// U D V = [I | 0] for a full-row-rank D. Throws NotFullRank otherwise.
BlockReduction reduce_to_I0(const FpMatrix& d);

/// |GL_k(F_p)| = prod_{i<k} (p^k - p^i).
mpz_class gl_order(unsigned k, std::uint32_t p);

/// Calls fn on every invertible k x k matrix, in lexicographic order of rows.
/// Returning false from fn stops the enumeration.
void for_each_invertible(const PrimeField& field, std::size_t k, const std::function<bool(const FpMatrix&)>& fn);

FpMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
FpMatrix random_invertible(const PrimeField& field, std::size_t k, std::mt19937_64& rng);

}  // namespace mhol
