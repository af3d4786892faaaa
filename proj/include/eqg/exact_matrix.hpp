#pragma once

// Sparse matrices over the rationals, and an incremental fraction-free rank tracker.

#include "eqg/arith.hpp"

#include <cstdint>
#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace eqg {

using Index = std::int64_t;

class ExactMatrix {
 public:
  using Row = std::map<Index, Rational>;

  ExactMatrix() = default;
  ExactMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error(ErrorKind::invalid_argument, "negative matrix dimension");
  }

  static ExactMatrix identity(Index n) {
    ExactMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t nonzeros() const {
    std::size_t count = 0;
    for (const auto& [r, row] : data_) count += row.size();
    return count;
  }
  bool is_zero() const { return data_.empty(); }

  Rational at(Index r, Index c) const {
    check(r, c);
    auto it = data_.find(r);
    if (it == data_.end()) return 0;
    auto jt = it->second.find(c);
    return jt == it->second.end() ? Rational(0) : jt->second;
  }

  void set(Index r, Index c, const Rational& value) {
    check(r, c);
    if (value == 0) {
      auto it = data_.find(r);
      if (it == data_.end()) return;
      it->second.erase(c);
      if (it->second.empty()) data_.erase(it);
    } else {
      data_[r][c] = value;
    }
  }

  void add(Index r, Index c, const Rational& value) {
    if (value == 0) return;
    check(r, c);
    auto& row = data_[r];
    auto [it, inserted] = row.emplace(c, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) {
        row.erase(it);
        if (row.empty()) data_.erase(r);
      }
    }
  }

  /// Nonzero rows keyed by row index; every stored row is nonempty.
  const std::map<Index, Row>& row_map() const { return data_; }

  /// Entries as (row, col, value) in row-major order.
  std::vector<std::tuple<Index, Index, Rational>> entries() const {
    std::vector<std::tuple<Index, Index, Rational>> out;
    for (const auto& [r, row] : data_) {
      for (const auto& [c, v] : row) out.emplace_back(r, c, v);
    }
    return out;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (const auto& [r, row] : data_) {
      for (const auto& [c, v] : row) t.data_[c][r] = v;
    }
    return t;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::shape_mismatch, "matrix product dimension mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (const auto& [r, row] : a.data_) {
      Row acc;
      for (const auto& [k, v] : row) {
        auto it = b.data_.find(k);
        if (it == b.data_.end()) continue;
        for (const auto& [c, w] : it->second) acc[c] += v * w;
      }
      std::erase_if(acc, [](const auto& e) { return e.second == 0; });
      if (!acc.empty()) out.data_.emplace(r, std::move(acc));
    }
    return out;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    a.require_same_shape(b);
    for (const auto& [r, row] : b.data_) {
      for (const auto& [c, v] : row) a.add(r, c, v);
    }
    return a;
  }

  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    a.require_same_shape(b);
    for (const auto& [r, row] : b.data_) {
      for (const auto& [c, v] : row) a.add(r, c, -v);
    }
    return a;
  }

  friend ExactMatrix operator*(const Rational& s, ExactMatrix a) {
    if (s == 0) return ExactMatrix(a.rows_, a.cols_);
    for (auto& [r, row] : a.data_) {
      for (auto& [c, v] : row) v *= s;
    }
    return a;
  }

 private:
  void check(Index r, Index c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw Error(ErrorKind::index_out_of_range, "matrix index out of range");
    }
  }
  void require_same_shape(const ExactMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::shape_mismatch, "matrix shapes differ");
  }

  Index rows_ = 0;
  Index cols_ = 0;
  std::map<Index, Row> data_;
};

/// a ⊗ b with row index (i_a, i_b) -> i_a * rows(b) + i_b.
inline ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [ra, rowa] : a.row_map()) {
    for (const auto& [ca, va] : rowa) {
      for (const auto& [rb, rowb] : b.row_map()) {
        for (const auto& [cb, vb] : rowb) out.set(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

/// Sparse integer vector: (index, value) pairs sorted by index, no zero values.
using SparseIntVector = std::vector<std::pair<Index, BigInt>>;

/// Row echelon basis that grows one vector at a time. Rows are kept primitive
/// (content 1), so entries stay small without ever leaving the integers.
class IncrementalRank {
 public:
  /// Adds v to the span; returns true iff v was independent of the previous vectors.
  bool insert(SparseIntVector v) {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) {
        make_primitive(v);
        const Index lead = v.front().first;
        pivots_.emplace(lead, std::move(v));
        return true;
      }
      v = eliminate(it->second, v);
    }
    return false;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  static void make_primitive(SparseIntVector& v) {
    BigInt g = 0;
    for (const auto& [i, x] : v) {
      g = gcd(g, x);
      if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g != 1) {
      for (auto& [i, x] : v) x /= g;
    }
  }

  /// a_lead * v - v_lead * row, which cancels the shared leading index.
  static SparseIntVector eliminate(const SparseIntVector& row, const SparseIntVector& v) {
    const BigInt& a = row.front().second;
    const BigInt& b = v.front().second;
    const BigInt g = gcd(a, b);
    const BigInt fa = a / g;
    const BigInt fb = b / g;
    SparseIntVector out;
    out.reserve(row.size() + v.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < v.size()) {
      BigInt x;
      Index idx;
      if (j == v.size() || (i < row.size() && row[i].first < v[j].first)) {
        idx = row[i].first;
        x = -fb * row[i].second;
        ++i;
      } else if (i == row.size() || v[j].first < row[i].first) {
        idx = v[j].first;
        x = fa * v[j].second;
        ++j;
      } else {
        idx = v[j].first;
        x = fa * v[j].second - fb * row[i].second;
        ++i;
        ++j;
      }
      if (x != 0) out.emplace_back(idx, std::move(x));
    }
    if (!out.empty()) make_primitive(out);
    return out;
  }

  std::map<Index, SparseIntVector> pivots_;
};

/// Scales a sparse rational vector to an integer vector spanning the same line.
inline SparseIntVector clear_denominators(const std::vector<std::pair<Index, Rational>>& v) {
  BigInt l = 1;
  for (const auto& [i, q] : v) {
    const BigInt d = boost::multiprecision::denominator(q);
    l = l / gcd(l, d) * d;
  }
  SparseIntVector out;
  out.reserve(v.size());
  for (const auto& [i, q] : v) {
    if (q != 0) out.emplace_back(i, boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
  }
  return out;
}

inline int rank(const ExactMatrix& m) {
  IncrementalRank tracker;
  for (const auto& [r, row] : m.row_map()) {
    tracker.insert(clear_denominators({row.begin(), row.end()}));
  }
  return tracker.rank();
}

/// Inverse of a square nonsingular matrix by Gauss-Jordan elimination over the rationals.
inline ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::shape_mismatch, "inverse of a non-square matrix");
  const Index n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (const auto& [r, row] : m.row_map()) {
    for (const auto& [c, v] : row) a[r][c] = v;
  }
  for (Index i = 0; i < n; ++i) a[i][n + i] = 1;
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::invalid_argument, "matrix is singular");
    std::swap(a[pivot], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (Index r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (Index c = col; c < 2 * n; ++c) {
        if (a[col][c] != 0) a[r][c] -= f * a[col][c];
      }
    }
  }
  ExactMatrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) out.set(r, c, a[r][n + c]);
  }
  return out;
}

}  // namespace eqg
