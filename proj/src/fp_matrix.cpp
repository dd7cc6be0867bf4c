#include "mhol/fp_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mhol/error.hpp"

namespace mhol {

namespace {

void require_same_field(const FpMatrix& x, const FpMatrix& y) {
  if (x.p() != y.p())
    throw Error(ErrorKind::ModulusMismatch,
                "p = " + std::to_string(x.p()) + " vs p = " + std::to_string(y.p()));
}

std::string shape(const FpMatrix& x) { return std::to_string(x.rows()) + "x" + std::to_string(x.cols()); }

// In-place reduced row echelon form. Only the first `limit` columns are used
// as pivot candidates; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(FpMatrix& a, std::size_t limit) {
  const PrimeField& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        Residue t = a(sel, c);
        a.set(sel, c, a(row, c));
        a.set(row, c, t);
      }
    }
    Residue s = f.inv(a(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a.set(row, c, f.mul(s, a(row, c)));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      Residue k = a(r, col);
      if (k == 0) continue;
      for (std::size_t c = 0; c < a.cols(); ++c) a.set(r, c, f.sub(a(r, c), f.mul(k, a(row, c))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

FpMatrix hstack(const FpMatrix& x, const FpMatrix& y) {
  FpMatrix out(x.field(), x.rows(), x.cols() + y.cols());
  out.place(0, 0, x);
  out.place(0, x.cols(), y);
  return out;
}

}  // namespace

FpMatrix FpMatrix::from_rows(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  FpMatrix out(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(r) + " has " +
                                                    std::to_string(rows[r].size()) + " entries, expected " +
                                                    std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rows[r][c]);
  }
  return out;
}

FpMatrix FpMatrix::identity(const PrimeField& field, std::size_t k) { return scalar(field, k, 1); }

FpMatrix FpMatrix::scalar(const PrimeField& field, std::size_t k, Residue s) {
  FpMatrix out(field, k, k);
  for (std::size_t i = 0; i < k; ++i) out.set(i, i, s);
  return out;
}

FpMatrix FpMatrix::row_vector(const PrimeField& field, const FpVec& v) {
  FpMatrix out(field, 1, v.size());
  out.set_row(0, v);
  return out;
}

void FpMatrix::set_row(std::size_t r, const FpVec& v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = v[c] % p();
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  FpMatrix out(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.data_[r * cols + c] = (*this)(r0 + r, c0 + c);
  return out;
}

void FpMatrix::place(std::size_t r0, std::size_t c0, const FpMatrix& src) {
  require_same_field(*this, src);
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
    throw Error(ErrorKind::DimensionMismatch, "place out of range");
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) data_[(r0 + r) * cols_ + c0 + c] = src(r, c);
}

FpMatrix FpMatrix::scaled(Residue k) const {
  FpMatrix out(*this);
  for (auto& x : out.data_) x = field_.mul(k % p(), x);
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

std::uint64_t FpMatrix::code() const {
  std::uint64_t code = 0;
  for (Residue x : data_) code = code * p() + x;
  return code;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

FpMatrix mat_mul(const FpMatrix& x, const FpMatrix& y) {
  require_same_field(x, y);
  if (x.cols() != y.rows())
    throw Error(ErrorKind::DimensionMismatch, "mat_mul " + shape(x) + " * " + shape(y));
  const std::uint64_t p = x.p();
  FpMatrix out(x.field(), x.rows(), y.cols());
  std::vector<std::uint64_t> acc(y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < x.cols(); ++k) {
      std::uint64_t a = x(r, k);
      if (a == 0) continue;
      auto yr = y.row(k);
      for (std::size_t c = 0; c < y.cols(); ++c) acc[c] = (acc[c] + a * yr[c]) % p;
    }
    for (std::size_t c = 0; c < y.cols(); ++c) out.set(r, c, static_cast<std::int64_t>(acc[c]));
  }
  return out;
}

FpMatrix mat_add(const FpMatrix& x, const FpMatrix& y) {
  require_same_field(x, y);
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(ErrorKind::DimensionMismatch, "mat_add " + shape(x) + " + " + shape(y));
  FpMatrix out(x);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out.set(r, c, x.field().add(x(r, c), y(r, c)));
  return out;
}

FpMatrix mat_sub(const FpMatrix& x, const FpMatrix& y) {
  require_same_field(x, y);
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(ErrorKind::DimensionMismatch, "mat_sub " + shape(x) + " - " + shape(y));
  FpMatrix out(x);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out.set(r, c, x.field().sub(x(r, c), y(r, c)));
  return out;
}

FpVec vec_mat(const FpVec& v, const FpMatrix& x) {
  if (v.size() != x.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "vec_mat: length " + std::to_string(v.size()) + " vs " + shape(x));
  const std::uint64_t p = x.p();
  std::vector<std::uint64_t> acc(x.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::uint64_t a = v[k];
    if (a == 0) continue;
    auto xr = x.row(k);
    for (std::size_t c = 0; c < x.cols(); ++c) acc[c] = (acc[c] + a * xr[c]) % p;
  }
  return FpVec(acc.begin(), acc.end());
}

FpMatrix mat_inv(const FpMatrix& x) {
  if (!x.is_square()) throw Error(ErrorKind::DimensionMismatch, "mat_inv of " + shape(x));
  const std::size_t k = x.rows();
  FpMatrix aug = hstack(x, FpMatrix::identity(x.field(), k));
  auto pivots = rref_in_place(aug, k);
  if (pivots.size() != k) throw Error(ErrorKind::SingularMatrix, "matrix " + x.to_string() + " is singular");
  return aug.block(0, k, k, k);
}

std::size_t rank(const FpMatrix& x) {
  FpMatrix a(x);
  return rref_in_place(a, a.cols()).size();
}

Residue det(const FpMatrix& x) {
  if (!x.is_square()) throw Error(ErrorKind::DimensionMismatch, "det of " + shape(x));
  const PrimeField& f = x.field();
  FpMatrix a(x);
  Residue d = 1;
  const std::size_t k = a.rows();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t sel = col;
    while (sel < k && a(sel, col) == 0) ++sel;
    if (sel == k) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < k; ++c) {
        Residue t = a(sel, c);
        a.set(sel, c, a(col, c));
        a.set(col, c, t);
      }
      d = f.neg(d);
    }
    Residue piv = a(col, col);
    d = f.mul(d, piv);
    Residue s = f.inv(piv);
    for (std::size_t r = col + 1; r < k; ++r) {
      Residue factor = f.mul(a(r, col), s);
      if (factor == 0) continue;
      for (std::size_t c = col; c < k; ++c) a.set(r, c, f.sub(a(r, c), f.mul(factor, a(col, c))));
    }
  }
  return d;
}

bool is_invertible(const FpMatrix& x) { return x.is_square() && det(x) != 0; }

std::vector<FpMatrix> AffineSolution::homogeneous_basis() const {
  std::vector<FpMatrix> basis;
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    for (std::size_t c = 0; c < particular.cols(); ++c) {
      FpMatrix z(particular.field(), particular.rows(), particular.cols());
      for (std::size_t r = 0; r < kernel.rows(); ++r) z.set(r, c, kernel(r, j));
      basis.push_back(std::move(z));
    }
  }
  return basis;
}

FpMatrix AffineSolution::at(const FpMatrix& w) const {
  if (kernel.cols() == 0) return particular;
  return particular + kernel * w;
}

AffineSolution solve_affine(const FpMatrix& d, const FpMatrix& r) {
  require_same_field(d, r);
  if (d.rows() != r.rows())
    throw Error(ErrorKind::DimensionMismatch, "solve_affine: D is " + shape(d) + ", R is " + shape(r));
  const PrimeField& f = d.field();
  const std::size_t k = d.cols();
  FpMatrix aug = hstack(d, r);
  auto pivots = rref_in_place(aug, k);

  for (std::size_t row = pivots.size(); row < aug.rows(); ++row)
    for (std::size_t c = k; c < aug.cols(); ++c)
      if (aug(row, c) != 0) throw Error(ErrorKind::Infeasible, "D X = R has no solution");

  FpMatrix particular(f, k, r.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < r.cols(); ++c) particular.set(pivots[i], c, aug(i, k + c));

  std::vector<bool> is_pivot(k, false);
  for (auto pc : pivots) is_pivot[pc] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < k; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FpMatrix kernel(f, k, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    kernel.set(free_cols[j], j, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) kernel.set(pivots[i], j, f.neg(aug(i, free_cols[j])));
  }
  return {std::move(particular), std::move(kernel)};
}

BlockReduction reduce_to_I0(const FpMatrix& d) {
  const PrimeField& f = d.field();
  const std::size_t n = d.rows(), m = d.cols();
  FpMatrix aug = hstack(d, FpMatrix::identity(f, n));
  auto pivots = rref_in_place(aug, m);
  if (pivots.size() != n)
    throw Error(ErrorKind::NotFullRank,
                "D has rank " + std::to_string(pivots.size()) + " < " + std::to_string(n) + " rows");
  FpMatrix u = aug.block(0, m, n, n);
  FpMatrix reduced = aug.block(0, 0, n, m);  // = U D

  // Column order: pivots first, then the remaining columns.
  std::vector<std::size_t> order(pivots);
  for (std::size_t c = 0; c < m; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) order.push_back(c);
  FpMatrix perm(f, m, m);
  for (std::size_t j = 0; j < m; ++j) perm.set(order[j], j, 1);

  // U D P = [I | F]; clear F with [[I, -F], [0, I]].
  FpMatrix rest = (reduced * perm).block(0, n, n, m - n);
  FpMatrix clear = FpMatrix::identity(f, m);
  clear.place(0, n, rest.scaled(f.neg(1)));
  return {std::move(u), perm * clear};
}

mpz_class gl_order(unsigned k, std::uint32_t p) {
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  mpz_class order = 1, pi = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= pk - pi;
    pi *= p;
  }
  return order;
}

void for_each_invertible(const PrimeField& field, std::size_t k, const std::function<bool(const FpMatrix&)>& fn) {
  const std::uint32_t p = field.p();
  std::size_t space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= p;

  auto decode = [&](std::size_t code) {
    FpVec v(k);
    for (std::size_t i = k; i-- > 0;) {
      v[i] = static_cast<Residue>(code % p);
      code /= p;
    }
    return v;
  };
  auto encode = [&](const FpVec& v) {
    std::size_t code = 0;
    for (Residue x : v) code = code * p + x;
    return code;
  };

  FpMatrix current(field, k, k);
  // spans[i] marks the codes in the span of rows 0..i-1.
  std::vector<std::vector<char>> spans(k + 1, std::vector<char>(space, 0));
  spans[0][0] = 1;
  bool stop = false;

  std::function<void(std::size_t)> recurse = [&](std::size_t row) {
    if (stop) return;
    if (row == k) {
      if (!fn(current)) stop = true;
      return;
    }
    for (std::size_t code = 0; code < space && !stop; ++code) {
      if (spans[row][code]) continue;
      FpVec v = decode(code);
      current.set_row(row, v);
      if (row + 1 == k) {
        recurse(row + 1);
        continue;
      }
      auto& next = spans[row + 1];
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t s = 0; s < space; ++s) {
        if (!spans[row][s]) continue;
        FpVec base = decode(s);
        for (Residue t = 0; t < p; ++t) {
          next[encode(base)] = 1;
          base = vec_add(field, base, v);
        }
      }
      recurse(row + 1);
    }
  };
  recurse(0);
}

FpMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.p() - 1);
  FpMatrix out(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, dist(rng));
  return out;
}

FpMatrix random_invertible(const PrimeField& field, std::size_t k, std::mt19937_64& rng) {
  for (;;) {
    FpMatrix x = random_matrix(field, k, k, rng);
    if (is_invertible(x)) return x;
  }
}

}  // namespace mhol
