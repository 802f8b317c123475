#pragma once

#include <optional>
#include <vector>

#include "collar/common.hpp"

namespace collar {

/// Dense matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix dimension mismatch in product");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ValidationError("matrix dimension mismatch in sum");
    IntMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ValidationError("matrix dimension mismatch in difference");
    IntMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<BigInt> apply(const std::vector<BigInt>& v) const {
    if (v.size() != cols_) throw ValidationError("vector length mismatch");
    std::vector<BigInt> out(rows_, BigInt(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  std::vector<BigInt> column(std::size_t c) const {
    std::vector<BigInt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  /// Exact determinant by fraction-free (Bareiss) elimination.
  BigInt det() const {
    if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t piv = k + 1;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Smith normal form U·M·V = D with U, V unimodular and D diagonal with a
/// divisibility chain d₁ | d₂ | ...
struct SNFResult {
  IntMatrix u, d, v;
  std::vector<BigInt> invariant_factors() const {
    std::vector<BigInt> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
  }
  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& f : invariant_factors())
      if (f != 0) ++r;
    return r;
  }
};

namespace detail {

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace detail

/// Elementary row/column reduction with least-absolute-value pivoting.
inline SNFResult smith_normal_form(const IntMatrix& m) {
  SNFResult res;
  res.d = m;
  res.u = IntMatrix::identity(m.rows());
  res.v = IntMatrix::identity(m.cols());
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t nmin = std::min(rows, cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < cols; ++r) std::swap(v(r, i), v(r, j));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t c = 0; c < cols; ++c) d(dst, c) += f * d(src, c);
    for (std::size_t c = 0; c < rows; ++c) u(dst, c) += f * u(src, c);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t r = 0; r < rows; ++r) d(r, dst) += f * d(r, src);
    for (std::size_t r = 0; r < cols; ++r) v(r, dst) += f * v(r, src);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < rows; ++c) u(i, c) = -u(i, c);
  };

  for (std::size_t s = 0; s < nmin; ++s) {
    for (;;) {
      // locate the least nonzero absolute value in the trailing block
      std::size_t pr = s, pc = s;
      BigInt best = 0;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j)
          if (d(i, j) != 0) {
            BigInt a = detail::big_abs(d(i, j));
            if (best == 0 || a < best) {
              best = a;
              pr = i;
              pc = j;
            }
          }
      if (best == 0) break;  // trailing block is zero
      swap_rows(s, pr);
      swap_cols(s, pc);
      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i)
        if (d(i, s) != 0) {
          add_row(i, s, -(d(i, s) / d(s, s)));
          if (d(i, s) != 0) clean = false;
        }
      for (std::size_t j = s + 1; j < cols; ++j)
        if (d(s, j) != 0) {
          add_col(j, s, -(d(s, j) / d(s, s)));
          if (d(s, j) != 0) clean = false;
        }
      if (!clean) continue;
      // pivot divides everything in its row/column; enforce divisibility on
      // the remaining block
      bool divides_all = true;
      for (std::size_t i = s + 1; i < rows && divides_all; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (d(i, j) % d(s, s) != 0) {
            add_row(s, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (d(s, s) < 0) negate_row(s);
  }
  return res;
}

/// Basis of the integer kernel lattice of m (columns of V at zero diagonal
/// entries of D). The kernel lattice is saturated, so this is a genuine basis.
inline std::vector<std::vector<BigInt>> integer_kernel_basis(const IntMatrix& m) {
  SNFResult s = smith_normal_form(m);
  std::vector<std::vector<BigInt>> out;
  const std::size_t nmin = std::min(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const bool zero_diag = j >= nmin || s.d(j, j) == 0;
    if (!zero_diag) continue;
    out.push_back(s.v.column(j));
  }
  return out;
}

/// Exact solution x of M x = b over the integers, if one exists.
inline std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& m,
                                                        const std::vector<BigInt>& b) {
  if (b.size() != m.rows()) throw ValidationError("rhs length mismatch");
  SNFResult s = smith_normal_form(m);
  std::vector<BigInt> ub = s.u.apply(b);
  std::vector<BigInt> y(m.cols(), BigInt(0));
  const std::size_t nmin = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const BigInt di = i < nmin ? s.d(i, i) : BigInt(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      if (i < m.cols()) y[i] = ub[i] / di;
    }
  }
  return s.v.apply(y);
}

/// Rank via SNF.
inline std::size_t integer_rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

}  // namespace collar
