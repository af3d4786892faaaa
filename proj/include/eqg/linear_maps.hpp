#pragma once

// The linear maps T_p : (C^n)^{⊗k} -> (C^n)^{⊗l} attached to partitions,
// intertwiner ranks and the projections P_p = T_p / n^{b(p,p)} - R_p.
//
// Basis vectors of (C^n)^{⊗m} are indexed by multi-indices (i_1,...,i_m) with
// entries 0..n-1, flattened most-significant-first: i_1 * n^{m-1} + ... + i_m.

#include "eqg/category.hpp"
#include "eqg/exact_matrix.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace eqg {

struct MapOptions {
  /// Upper bound on n^max(k,l) and on the number of nonzero entries of T_p.
  std::uint64_t max_entries = 10'000'000;
};

namespace detail {

inline std::uint64_t saturating_pow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

}  // namespace detail

/// 1 iff every block of p carries a constant index. `upper` has length k and
/// `lower` length l; indices run from 1 to n.
inline int delta_p(const ColoredPartition& p, const std::vector<int>& upper, const std::vector<int>& lower, int n) {
  if (static_cast<int>(upper.size()) != p.upper_count() || static_cast<int>(lower.size()) != p.lower_count()) {
    throw Error(ErrorKind::shape_mismatch, "multi-index lengths do not match the partition");
  }
  std::vector<int> value(p.block_count(), 0);
  auto visit = [&](int point, int index) {
    if (index < 1 || index > n) throw Error(ErrorKind::index_out_of_range, "index outside 1..n");
    int& v = value[p.block_of(point)];
    if (v == 0) v = index;
    return v == index;
  };
  bool ok = true;
  for (int i = 0; i < p.upper_count(); ++i) ok = visit(i, upper[i]) && ok;
  for (int j = 0; j < p.lower_count(); ++j) ok = visit(p.upper_count() + j, lower[j]) && ok;
  return ok ? 1 : 0;
}

/// The 0/1 matrix of T_p, of shape n^l x n^k.
inline ExactMatrix t_map(const ColoredPartition& p, int n, const MapOptions& options = {}) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be positive");
  const int k = p.upper_count();
  const int l = p.lower_count();
  const auto side = detail::saturating_pow(n, std::max(k, l));
  const auto nonzero = detail::saturating_pow(n, p.block_count());
  if (side > options.max_entries || nonzero > options.max_entries) {
    throw Error(ErrorKind::size_overflow, "T_p for " + to_literal(p) + " at n=" + std::to_string(n) +
                                              " exceeds the size cap of " + std::to_string(options.max_entries));
  }
  ExactMatrix m(static_cast<Index>(detail::saturating_pow(n, l)), static_cast<Index>(detail::saturating_pow(n, k)));
  const int blocks = p.block_count();
  std::vector<int> value(blocks, 0);
  while (true) {
    Index row = 0;
    Index col = 0;
    for (int i = 0; i < k; ++i) col = col * n + value[p.upper_block(i)];
    for (int j = 0; j < l; ++j) row = row * n + value[p.lower_block(j)];
    m.set(row, col, 1);
    int b = blocks - 1;
    while (b >= 0 && ++value[b] == n) value[b--] = 0;
    if (b < 0) break;
  }
  return m;
}

/// Flattened T_p as a sparse integer vector indexed by row * n^k + col.
inline SparseIntVector t_vector(const ColoredPartition& p, int n, const MapOptions& options = {}) {
  const ExactMatrix m = t_map(p, n, options);
  SparseIntVector v;
  v.reserve(m.nonzeros());
  for (const auto& [r, row] : m.row_map()) {
    for (const auto& [c, x] : row) v.emplace_back(r * m.cols() + c, BigInt(1));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Functoriality

inline bool check_tensor_law(const ColoredPartition& p, const ColoredPartition& q, int n) {
  return t_map(tensor(p, q), n) == kronecker(t_map(p, n), t_map(q, n));
}

/// T_{qp} = n^{-b(p,q)} T_q T_p; throws ColorMismatch when qp is undefined.
inline bool check_composition_law(const ColoredPartition& q, const ColoredPartition& p, int n) {
  const Composition qp = compose(q, p);
  const Rational scale = Rational(1) / Rational(ipow(n, static_cast<unsigned>(qp.removed_blocks)));
  return t_map(qp.partition, n) == scale * (t_map(q, n) * t_map(p, n));
}

inline bool check_involution_law(const ColoredPartition& p, int n) {
  return t_map(involute(p), n) == t_map(p, n).transpose();
}

struct FunctorialityReport {
  bool tensor = false;
  bool composition = false;
  bool involution = false;
  bool all() const { return tensor && composition && involution; }
};

/// Checks T_{p⊗q} = T_p ⊗ T_q, T_{qp} = n^{-b} T_q T_p and T_{p*} = T_p^t.
inline FunctorialityReport check_functoriality(const ColoredPartition& p, const ColoredPartition& q, int n) {
  FunctorialityReport r;
  r.composition = check_composition_law(q, p, n);
  r.tensor = check_tensor_law(p, q, n);
  r.involution = check_involution_law(p, n) && check_involution_law(q, n);
  return r;
}

// ---------------------------------------------------------------------------
// Intertwiner spaces

struct IntertwinerSpace {
  int dim = 0;
  std::vector<ColoredPartition> basis;  // greedy, in canonical partition order
  int candidates = 0;
};

/// Rank of { T_p : p all-white member of C(k,l) } at size n.
inline IntertwinerSpace intertwiner_dim(const PartitionCategorySample& sample, int k, int l, int n,
                                        const MapOptions& options = {}) {
  if (k + l > sample.max_points()) {
    throw Error(ErrorKind::bound_too_small, "sample bound " + std::to_string(sample.max_points()) +
                                                " is below k+l=" + std::to_string(k + l));
  }
  IntertwinerSpace out;
  IncrementalRank tracker;
  for (const auto& p : sample.white_members(k, l)) {
    ++out.candidates;
    if (tracker.insert(t_vector(p, n, options))) out.basis.push_back(p);
  }
  out.dim = tracker.rank();
  return out;
}

/// Rank of the T_p for an explicit list of partitions of equal shape.
inline int span_rank(const std::vector<ColoredPartition>& parts, int n, const MapOptions& options = {}) {
  IncrementalRank tracker;
  for (const auto& p : parts) tracker.insert(t_vector(p, n, options));
  return tracker.rank();
}

// ---------------------------------------------------------------------------
// Projections

struct ProjectionReport {
  ColoredPartition p;
  ExactMatrix projection;    // P_p
  ExactMatrix subprojection; // R_p
  std::vector<ColoredPartition> sub_projectives_used;
  int normalization_exponent = 0;  // b(p,p); T_p / n^b is idempotent
};

/// Orthogonal projection onto the span of the given columns (all of length `dim`).
inline ExactMatrix projection_onto(const std::vector<SparseIntVector>& columns, Index dim) {
  IncrementalRank tracker;
  std::vector<const SparseIntVector*> independent;
  for (const auto& c : columns) {
    if (tracker.insert(c)) independent.push_back(&c);
  }
  ExactMatrix b(dim, static_cast<Index>(independent.size()));
  for (std::size_t j = 0; j < independent.size(); ++j) {
    for (const auto& [i, x] : *independent[j]) b.set(i, static_cast<Index>(j), Rational(x));
  }
  if (independent.empty()) return ExactMatrix(dim, dim);
  const ExactMatrix bt = b.transpose();
  return b * (inverse(bt * b) * bt);
}

/// P_p = T_p / n^{b(p,p)} - R_p where R_p projects onto the ranges of T_q, q ≺ p, q in the sample.
inline ProjectionReport projective_projection(const ColoredPartition& p, const PartitionCategorySample& sample,
                                              int n, const MapOptions& options = {}) {
  if (!is_projective(p)) throw Error(ErrorKind::not_projective, to_literal(p) + " is not projective");
  if (p.point_count() > sample.max_points()) {
    throw Error(ErrorKind::missing_subprojectives, "partition exceeds the sample bound");
  }
  if (!sample.saturated()) {
    throw Error(ErrorKind::missing_subprojectives, "sample is not saturated, sub-projectives may be missing");
  }
  ProjectionReport report;
  report.p = p;
  const int k = p.upper_count();
  report.normalization_exponent = compose(p, p).removed_blocks;

  std::vector<SparseIntVector> columns;
  for (const auto& q : sample.members(k, k)) {
    if (q.upper_colors() != p.upper_colors() || q.lower_colors() != p.lower_colors()) continue;
    if (!is_projective(q) || !precedes(q, p)) continue;
    report.sub_projectives_used.push_back(q);
    const ExactMatrix tq = t_map(q, n, options).transpose();
    for (const auto& [c, col] : tq.row_map()) {
      SparseIntVector v;
      for (const auto& [r, x] : col) v.emplace_back(r, BigInt(1));
      columns.push_back(std::move(v));
    }
  }
  const ExactMatrix tp = t_map(p, n, options);
  report.subprojection = projection_onto(columns, tp.rows());
  const Rational scale = Rational(1) / Rational(ipow(n, static_cast<unsigned>(report.normalization_exponent)));
  report.projection = scale * tp - report.subprojection;
  return report;
}

/// (P_p ⊗ P_q) T_r != 0 for r in C(0, k_p + k_q).
inline bool cp1_witness_check(const ColoredPartition& p, const ColoredPartition& q, const ColoredPartition& r,
                              const PartitionCategorySample& sample, int n, const MapOptions& options = {}) {
  if (r.upper_count() != 0 || r.lower_count() != p.upper_count() + q.upper_count()) {
    throw Error(ErrorKind::shape_mismatch, "r must lie in P(0, k_p + k_q)");
  }
  std::vector<Color> expected = p.upper_colors();
  expected.insert(expected.end(), q.upper_colors().begin(), q.upper_colors().end());
  if (r.lower_colors() != expected) throw Error(ErrorKind::color_mismatch, "colors of r do not match p ⊗ q");
  const ExactMatrix pp = projective_projection(p, sample, n, options).projection;
  const ExactMatrix pq = projective_projection(q, sample, n, options).projection;
  return !(kronecker(pp, pq) * t_map(r, n, options)).is_zero();
}

}  // namespace eqg
