#pragma once

#include <memory>
#include <vector>

#include "collar/int_matrix.hpp"
#include "collar/perm_group.hpp"

namespace collar {

/// A finite group as an abstract multiplication table (indices 0..n-1,
/// index 0 = identity).
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw ValidationError("empty multiplication table");
    for (const auto& row : table_) {
      if (row.size() != n) throw ValidationError("multiplication table is not square");
      std::vector<bool> seen(n, false);
      for (int v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
          throw ValidationError("multiplication table rows must be permutations");
        seen[v] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (table_[0][i] != static_cast<int>(i) || table_[i][0] != static_cast<int>(i))
        throw ValidationError("index 0 must be the identity");
    inverse_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (table_[i][j] == 0) inverse_[i] = static_cast<int>(j);
    for (int v : inverse_)
      if (v < 0) throw ValidationError("an element has no inverse");
    // associativity makes the table a group table; trust but verify cheaply
    for (std::size_t a = 0; a < n && n <= 64; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
              mul(static_cast<int>(a), mul(static_cast<int>(b), static_cast<int>(c))))
            throw ValidationError("multiplication table is not associative");
  }

  static FiniteGroup from_perm_group(const PermGroup& g) {
    const auto& el = g.elements();
    const std::size_t n = el.size();
    // element 0 must be the identity; elements() is sorted and the identity
    // need not come first, so reorder.
    std::vector<Permutation> ordered;
    ordered.push_back(Permutation::identity(g.degree()));
    for (const auto& e : el)
      if (!e.is_identity()) ordered.push_back(e);
    auto index_of = [&](const Permutation& p) {
      for (std::size_t i = 0; i < n; ++i)
        if (ordered[i] == p) return static_cast<int>(i);
      throw ValidationError("product escaped the group");
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i][j] = index_of(ordered[i] * ordered[j]);
    return FiniteGroup(std::move(table));
  }

  static FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return FiniteGroup(std::move(t));
  }

  static FiniteGroup symmetric3() { return from_perm_group(PermGroup::symmetric(3)); }

  std::size_t order() const { return table_.size(); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// An element of the integral group ring ZQ: an integer coefficient per group
/// element.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  GroupRingElem(GroupPtr group, std::vector<BigInt> coeffs)
      : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (!group_ || coeffs_.size() != group_->order())
      throw ValidationError("coefficient vector must match the group order");
  }

  static GroupRingElem zero(const GroupPtr& g) {
    return GroupRingElem(g, std::vector<BigInt>(g->order(), BigInt(0)));
  }
  static GroupRingElem one(const GroupPtr& g) { return basis(g, 0); }
  /// The basis element 1·g for a group element index.
  static GroupRingElem basis(const GroupPtr& g, int elem, BigInt coeff = BigInt(1)) {
    GroupRingElem e = zero(g);
    e.coeffs_[static_cast<std::size_t>(elem)] = std::move(coeff);
    return e;
  }

  const GroupPtr& group() const { return group_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt& coeff(std::size_t i) { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
    a.check_same(b);
    std::vector<BigInt> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return GroupRingElem(a.group_, std::move(c));
  }

  friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) {
    a.check_same(b);
    std::vector<BigInt> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return GroupRingElem(a.group_, std::move(c));
  }

  GroupRingElem operator-() const {
    std::vector<BigInt> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return GroupRingElem(group_, std::move(c));
  }

  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    a.check_same(b);
    std::vector<BigInt> c(a.coeffs_.size(), BigInt(0));
    for (std::size_t g = 0; g < a.coeffs_.size(); ++g) {
      if (a.coeffs_[g] == 0) continue;
      for (std::size_t h = 0; h < b.coeffs_.size(); ++h) {
        if (b.coeffs_[h] == 0) continue;
        c[static_cast<std::size_t>(a.group_->mul(static_cast<int>(g), static_cast<int>(h)))] +=
            a.coeffs_[g] * b.coeffs_[h];
      }
    }
    return GroupRingElem(a.group_, std::move(c));
  }

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same(const GroupRingElem& o) const {
    if (!group_ || !o.group_ || !(*group_ == *o.group_))
      throw ValidationError("group ring elements over different groups");
  }

  GroupPtr group_;
  std::vector<BigInt> coeffs_;
};

/// A matrix over ZQ. Acts on column vectors of ZQ entries.
class GRMatrix {
 public:
  GRMatrix() = default;
  GRMatrix(GroupPtr group, std::size_t rows, std::size_t cols)
      : group_(std::move(group)), rows_(rows), cols_(cols) {
    entries_.assign(rows_ * cols_, GroupRingElem::zero(group_));
  }

  const GroupPtr& group() const { return group_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GroupRingElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GroupRingElem& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  static GRMatrix identity(const GroupPtr& g, std::size_t n) {
    GRMatrix m(g, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElem::one(g);
    return m;
  }

  /// Embed an integer matrix as scalar (Z·e) entries.
  static GRMatrix from_integer(const GroupPtr& g, const IntMatrix& m) {
    GRMatrix out(g, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) out(r, c) = GroupRingElem::basis(g, 0, m(r, c));
    return out;
  }

  friend GRMatrix operator*(const GRMatrix& a, const GRMatrix& b) {
    if (a.cols_ != b.rows_ || !(*a.group_ == *b.group_))
      throw ValidationError("GR matrix dimension/group mismatch in product");
    GRMatrix out(a.group_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          out(i, j) = out(i, j) + a(i, k) * b(k, j);
        }
      }
    return out;
  }

  friend GRMatrix operator-(const GRMatrix& a, const GRMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ValidationError("GR matrix dimension mismatch");
    GRMatrix out(a.group_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Horizontal block split [A | B] at column `split`.
  std::pair<GRMatrix, GRMatrix> split_columns(std::size_t split) const {
    if (split > cols_) throw ValidationError("split column out of range");
    GRMatrix a(group_, rows_, split), b(group_, rows_, cols_ - split);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < split; ++c) a(r, c) = (*this)(r, c);
      for (std::size_t c = split; c < cols_; ++c) b(r, c - split) = (*this)(r, c);
    }
    return {a, b};
  }

  /// Apply to a ZQ column vector.
  std::vector<GroupRingElem> apply(const std::vector<GroupRingElem>& v) const {
    if (v.size() != cols_) throw ValidationError("ZQ vector length mismatch");
    std::vector<GroupRingElem> out(rows_, GroupRingElem::zero(group_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero())
          out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const GRMatrix& a, const GRMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  GroupPtr group_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GroupRingElem> entries_;
};

/// Flatten a ZQ matrix to integers through the left regular representation:
/// each entry becomes a |Q|×|Q| block, so flatten(M·N) = flatten(M)·flatten(N).
inline IntMatrix flatten(const GRMatrix& m) {
  const std::size_t q = m.group()->order();
  IntMatrix out(m.rows() * q, m.cols() * q);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& coeffs = m(r, c).coeffs();
      for (std::size_t g = 0; g < q; ++g) {
        if (coeffs[g] == 0) continue;
        // block entry: row g·h, column h gets the coefficient of g
        for (std::size_t h = 0; h < q; ++h) {
          const std::size_t gh =
              static_cast<std::size_t>(m.group()->mul(static_cast<int>(g), static_cast<int>(h)));
          out(r * q + gh, c * q + h) += coeffs[g];
        }
      }
    }
  return out;
}

/// Flatten a ZQ column vector: per coordinate, its coefficient vector.
inline std::vector<BigInt> flatten_vector(const std::vector<GroupRingElem>& v) {
  std::vector<BigInt> out;
  for (const auto& e : v)
    for (const auto& c : e.coeffs()) out.push_back(c);
  return out;
}

/// Inverse of flatten_vector for a given group.
inline std::vector<GroupRingElem> unflatten_vector(const GroupPtr& g,
                                                   const std::vector<BigInt>& flat) {
  const std::size_t q = g->order();
  if (flat.size() % q != 0) throw ValidationError("flat vector length not a multiple of |Q|");
  std::vector<GroupRingElem> out;
  for (std::size_t i = 0; i < flat.size(); i += q)
    out.push_back(GroupRingElem(g, std::vector<BigInt>(flat.begin() + static_cast<long>(i),
                                                       flat.begin() + static_cast<long>(i + q))));
  return out;
}

}  // namespace collar
