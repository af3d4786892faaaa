#pragma once

// Smith normal form over the integers, finitely generated abelian groups, and a
// sparse cokernel engine for large presentation matrices with many unit entries.

#include "eqg/arith.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eqg {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw Error(ErrorKind::invalid_argument, "negative matrix dimension");
  }
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) throw Error(ErrorKind::shape_mismatch, "ragged matrix literal");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::shape_mismatch, "matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const BigInt& x = a(i, k);
        if (x == 0) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    }
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row_target += q * row_source
  void add_row(int target, int source, const BigInt& q) {
    if (q == 0) return;
    for (int j = 0; j < cols_; ++j) {
      if ((*this)(source, j) != 0) (*this)(target, j) += q * (*this)(source, j);
    }
  }
  /// col_target += q * col_source
  void add_col(int target, int source, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < rows_; ++i) {
      if ((*this)(i, source) != 0) (*this)(i, target) += q * (*this)(i, source);
    }
  }
  void negate_row(int r) {
    for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(int c) {
    for (int i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::shape_mismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithResult {
  IntMatrix U;          // unimodular, rows x rows
  IntMatrix D;          // U * M * V
  IntMatrix V;          // unimodular, cols x cols
  IntMatrix U_inverse;  // U^{-1}, for lifting cokernel generators
  int rank = 0;
  std::vector<BigInt> invariant_factors;  // the nonzero diagonal entries, d_1 | d_2 | ...
};

/// U M V = D with D diagonal, nonnegative, and d_1 | d_2 | .... The pivot is always the
/// entry of smallest absolute value in the remaining block, ties broken by (row, col).
inline SmithResult smith_normal_form(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  SmithResult out{IntMatrix::identity(rows), m, IntMatrix::identity(cols), IntMatrix::identity(rows), 0, {}};
  IntMatrix& a = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  IntMatrix& ui = out.U_inverse;

  auto row_swap = [&](int i, int j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    ui.swap_cols(i, j);
  };
  auto row_add = [&](int target, int source, const BigInt& q) {
    a.add_row(target, source, q);
    u.add_row(target, source, q);
    ui.add_col(source, target, -q);
  };
  auto col_swap = [&](int i, int j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  };
  auto col_add = [&](int target, int source, const BigInt& q) {
    a.add_col(target, source, q);
    v.add_col(target, source, q);
  };

  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero in the remaining block.
    int pr = -1;
    int pc = -1;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (a(i, j) != 0 && (pr < 0 || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    row_swap(t, pr);
    col_swap(t, pc);
    while (true) {
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) != 0) row_add(i, t, -(a(i, t) / a(t, t)));
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) != 0) col_add(j, t, -(a(t, j) / a(t, t)));
      }
      // Remainders smaller than the pivot become the next pivot.
      int best_r = -1;
      int best_c = -1;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) != 0 && (best_r < 0 || abs(a(i, t)) < abs(a(best_r, t)))) best_r = i;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) != 0 && (best_c < 0 || abs(a(t, j)) < abs(a(t, best_c)))) best_c = j;
      }
      if (best_r >= 0 && (best_c < 0 || abs(a(best_r, t)) <= abs(a(t, best_c)))) {
        row_swap(t, best_r);
        dirty = true;
      } else if (best_c >= 0) {
        col_swap(t, best_c);
        dirty = true;
      }
      if (dirty) continue;
      // Row and column t are clear; enforce divisibility of the remaining block.
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      row_add(t, bad, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
      ui.negate_col(t);
    }
    out.invariant_factors.push_back(a(t, t));
    ++out.rank;
  }
  return out;
}

/// Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with 1 < d_1 | d_2 | ... | d_k.
struct FGAbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  /// Order when finite, otherwise 0.
  BigInt order() const {
    if (free_rank > 0) return 0;
    BigInt o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
  }
  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
};

inline std::string to_string(const FGAbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.push_back("Z");
  if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const auto& d : g.torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

/// Group from the invariant factors of a presentation with `generators` generators.
inline FGAbelianGroup group_from_factors(int generators, const std::vector<BigInt>& factors) {
  FGAbelianGroup g;
  g.free_rank = generators - static_cast<int>(factors.size());
  for (const auto& d : factors) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

/// Z^rows / M Z^cols.
inline FGAbelianGroup cokernel(const IntMatrix& m) {
  return group_from_factors(m.rows(), smith_normal_form(m).invariant_factors);
}

inline int kernel_rank(const IntMatrix& m) { return m.cols() - smith_normal_form(m).rank; }

// ---------------------------------------------------------------------------
// Sparse presentations

using SparseColumn = std::map<int, BigInt>;

/// Integer matrix stored by columns.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseColumn> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

  BigInt at(int r, int c) const {
    auto it = columns[c].find(r);
    return it == columns[c].end() ? BigInt(0) : it->second;
  }

  IntMatrix dense() const {
    IntMatrix m(rows, cols);
    for (int c = 0; c < cols; ++c) {
      for (const auto& [r, x] : columns[c]) m(r, c) = x;
    }
    return m;
  }

  SparseColumn apply(const SparseColumn& v) const {
    SparseColumn out;
    for (const auto& [c, x] : v) {
      for (const auto& [r, y] : columns[c]) {
        auto& slot = out[r];
        slot += x * y;
        if (slot == 0) out.erase(r);
      }
    }
    return out;
  }

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw Error(ErrorKind::shape_mismatch, "matrix product dimension mismatch");
    SparseIntMatrix out(a.rows, b.cols);
    for (int c = 0; c < b.cols; ++c) out.columns[c] = a.apply(b.columns[c]);
    return out;
  }

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;
};

/// The cokernel Z^rows / M Z^cols of a sparse matrix, with a reduction map to coordinates.
///
/// Unit entries are eliminated first: a column with entry ±1 in row i expresses e_i
/// through the other rows, so row i and the column drop out. The remaining block is
/// small and goes through the dense Smith normal form.
///
/// Coordinates list the untouched rows first (free), then the free and torsion parts
/// of the residual block; torsion coordinates are reduced modulo their factor.
class QuotientLattice {
 public:
  /// `row_priority`: larger values are preferred as pivot rows among unit entries.
  QuotientLattice(const SparseIntMatrix& m, const std::vector<long long>& row_priority) : rows_(m.rows) {
    std::vector<SparseColumn> cols = m.columns;
    std::vector<std::set<int>> row_cols(m.rows);
    for (int c = 0; c < m.cols; ++c) {
      for (const auto& [r, x] : cols[c]) row_cols[r].insert(c);
    }
    std::vector<char> alive_col(m.cols, 1);
    eliminated_.assign(m.rows, 0);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int c = 0; c < m.cols; ++c) {
        if (!alive_col[c]) continue;
        if (cols[c].empty()) {
          alive_col[c] = 0;
          continue;
        }
        int pivot = -1;
        for (const auto& [r, x] : cols[c]) {
          if ((x == 1 || x == -1) && (pivot < 0 || row_priority[r] > row_priority[pivot] ||
                                      (row_priority[r] == row_priority[pivot] && r > pivot))) {
            pivot = r;
          }
        }
        if (pivot < 0) continue;
        progress = true;
        const BigInt unit = cols[c][pivot];
        // e_pivot ≡ -unit * Σ_{k != pivot} M_kc e_k
        SparseColumn rule;
        for (const auto& [r, x] : cols[c]) {
          if (r != pivot) rule.emplace(r, -unit * x);
        }
        const std::set<int> touched = row_cols[pivot];
        for (int other : touched) {
          if (other == c) continue;
          const BigInt f = cols[other][pivot] * unit;
          for (const auto& [r, x] : cols[c]) {
            auto& slot = cols[other][r];
            slot -= f * x;
            if (slot == 0) {
              cols[other].erase(r);
              row_cols[r].erase(other);
            } else {
              row_cols[r].insert(other);
            }
          }
        }
        for (const auto& [r, x] : cols[c]) row_cols[r].erase(c);
        cols[c].clear();
        alive_col[c] = 0;
        eliminated_[pivot] = 1;
        rules_.emplace_back(pivot, std::move(rule));
        ++unit_pivots_;
      }
    }
    // Residual block: live columns on the rows they touch.
    std::vector<int> residual_cols;
    std::set<int> residual_rows;
    for (int c = 0; c < m.cols; ++c) {
      if (alive_col[c] && !cols[c].empty()) {
        residual_cols.push_back(c);
        for (const auto& [r, x] : cols[c]) residual_rows.insert(r);
      }
    }
    residual_index_.assign(m.rows, -1);
    int idx = 0;
    for (int r : residual_rows) residual_index_[r] = idx++;
    for (int r = 0; r < m.rows; ++r) {
      if (!eliminated_[r] && residual_index_[r] < 0) free_rows_.push_back(r);
    }
    IntMatrix block(static_cast<int>(residual_rows.size()), static_cast<int>(residual_cols.size()));
    for (std::size_t j = 0; j < residual_cols.size(); ++j) {
      for (const auto& [r, x] : cols[residual_cols[j]]) block(residual_index_[r], static_cast<int>(j)) = x;
    }
    residual_ = smith_normal_form(block);
    residual_rank_ = residual_.rank;
    image_rank_ = unit_pivots_ + residual_rank_;

    group_.free_rank = static_cast<int>(free_rows_.size()) + block.rows() - residual_rank_;
    for (int t = 0; t < residual_rank_; ++t) {
      if (residual_.invariant_factors[t] > 1) {
        group_.torsion.push_back(residual_.invariant_factors[t]);
        torsion_slots_.push_back(t);
      }
    }
    for (int t = residual_rank_; t < block.rows(); ++t) residual_free_slots_.push_back(t);
  }

  const FGAbelianGroup& group() const { return group_; }
  /// Rank of the image, so the kernel of M has rank cols - image_rank.
  int image_rank() const { return image_rank_; }
  int unit_pivots() const { return unit_pivots_; }
  int residual_rows() const { return residual_.D.rows(); }
  int coordinate_count() const {
    return static_cast<int>(free_rows_.size() + residual_free_slots_.size() + torsion_slots_.size());
  }

  /// Coordinates of the class of v (a sparse vector over the rows).
  std::vector<BigInt> coordinates(SparseColumn v) const {
    for (const auto& [pivot, rule] : rules_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const BigInt x = it->second;
      v.erase(it);
      for (const auto& [r, y] : rule) {
        auto& slot = v[r];
        slot += x * y;
        if (slot == 0) v.erase(r);
      }
    }
    std::vector<BigInt> out;
    out.reserve(coordinate_count());
    for (int r : free_rows_) {
      auto it = v.find(r);
      out.push_back(it == v.end() ? BigInt(0) : it->second);
    }
    const int n = residual_.D.rows();
    std::vector<BigInt> y(n);
    for (const auto& [r, x] : v) {
      const int i = residual_index_[r];
      if (i < 0) continue;
      for (int t = 0; t < n; ++t) y[t] += residual_.U(t, i) * x;
    }
    for (int t : residual_free_slots_) out.push_back(y[t]);
    for (int t : torsion_slots_) {
      const BigInt& d = residual_.invariant_factors[t];
      BigInt z = y[t] % d;
      if (z < 0) z += d;
      out.push_back(z);
    }
    return out;
  }

  /// A vector over the rows whose class has coordinate vector e_index.
  SparseColumn generator(int index) const {
    SparseColumn v;
    const int nf = static_cast<int>(free_rows_.size());
    if (index < nf) {
      v[free_rows_[index]] = 1;
      return v;
    }
    index -= nf;
    const int t = index < static_cast<int>(residual_free_slots_.size())
                      ? residual_free_slots_[index]
                      : torsion_slots_[index - residual_free_slots_.size()];
    for (int r = 0; r < rows_; ++r) {
      const int i = residual_index_[r];
      if (i >= 0 && residual_.U_inverse(i, t) != 0) v[r] = residual_.U_inverse(i, t);
    }
    return v;
  }

  /// Moduli of the coordinates: 0 for free coordinates, d for torsion ones.
  std::vector<BigInt> coordinate_moduli() const {
    std::vector<BigInt> out(free_rows_.size() + residual_free_slots_.size(), BigInt(0));
    for (const auto& d : group_.torsion) out.push_back(d);
    return out;
  }

 private:
  int rows_ = 0;
  std::vector<char> eliminated_;
  std::vector<std::pair<int, SparseColumn>> rules_;
  std::vector<int> free_rows_;
  std::vector<int> residual_index_;
  SmithResult residual_;
  int residual_rank_ = 0;
  int unit_pivots_ = 0;
  int image_rank_ = 0;
  std::vector<int> residual_free_slots_;
  std::vector<int> torsion_slots_;
  FGAbelianGroup group_;
};

}  // namespace eqg
