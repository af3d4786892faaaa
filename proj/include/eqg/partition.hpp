#pragma once

// Two-row colored set partitions and the category operations on them.
//
// Points are numbered 0..k-1 on the upper row (left to right) followed by
// k..k+l-1 on the lower row (left to right). Block labels are stored as a
// restricted growth string, which makes blocks sorted by their minimal
// element and equal partitions compare equal memberwise.

#include "eqg/arith.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqg {

enum class Color : std::uint8_t { white = 0, black = 1 };

constexpr Color inverted(Color c) { return c == Color::white ? Color::black : Color::white; }
constexpr char color_char(Color c) { return c == Color::white ? 'w' : 'b'; }

enum class Corner { upper_left, upper_right, lower_left, lower_right };

class ColoredPartition {
 public:
  /// The empty partition in P(0,0).
  ColoredPartition() = default;

  /// `labels` holds one block label per point, upper row first; any integers
  /// work, equal labels mean same block.
  ColoredPartition(std::vector<Color> upper, std::vector<Color> lower, std::span<const int> labels)
      : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (labels.size() != upper_.size() + lower_.size()) {
      throw Error(ErrorKind::invalid_argument, "label count does not match point count");
    }
    canonicalize(labels);
  }

  /// Blocks use 1-based point indices; they must be disjoint, nonempty and cover every point.
  static ColoredPartition from_blocks(std::vector<Color> upper, std::vector<Color> lower,
                                      const std::vector<std::vector<int>>& blocks) {
    const int total = static_cast<int>(upper.size() + lower.size());
    std::vector<int> labels(total, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw Error(ErrorKind::parse, "empty block");
      for (int point : blocks[b]) {
        if (point < 1 || point > total) {
          throw Error(ErrorKind::parse, "point " + std::to_string(point) + " out of range");
        }
        if (labels[point - 1] != -1) {
          throw Error(ErrorKind::parse, "point " + std::to_string(point) + " in two blocks");
        }
        labels[point - 1] = static_cast<int>(b);
      }
    }
    for (int i = 0; i < total; ++i) {
      if (labels[i] == -1) throw Error(ErrorKind::parse, "point " + std::to_string(i + 1) + " in no block");
    }
    return ColoredPartition(std::move(upper), std::move(lower), labels);
  }

  int upper_count() const { return static_cast<int>(upper_.size()); }
  int lower_count() const { return static_cast<int>(lower_.size()); }
  int point_count() const { return static_cast<int>(labels_.size()); }
  int block_count() const { return block_count_; }

  const std::vector<Color>& upper_colors() const { return upper_; }
  const std::vector<Color>& lower_colors() const { return lower_; }
  const std::vector<int>& labels() const { return labels_; }

  Color color(int point) const {
    return point < upper_count() ? upper_[point] : lower_[point - upper_count()];
  }
  int block_of(int point) const { return labels_[point]; }
  int upper_block(int i) const { return labels_[i]; }
  int lower_block(int j) const { return labels_[upper_count() + j]; }

  /// Canonical blocks with 1-based point indices.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(block_count_);
    for (int i = 0; i < point_count(); ++i) out[labels_[i]].push_back(i + 1);
    return out;
  }

  bool all_white() const {
    auto white = [](Color c) { return c == Color::white; };
    return std::all_of(upper_.begin(), upper_.end(), white) &&
           std::all_of(lower_.begin(), lower_.end(), white);
  }

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

  /// Canonical order: total size, upper count, colors, then block structure.
  friend std::strong_ordering operator<=>(const ColoredPartition& a, const ColoredPartition& b) {
    if (auto c = a.point_count() <=> b.point_count(); c != 0) return c;
    if (auto c = a.upper_count() <=> b.upper_count(); c != 0) return c;
    if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
    if (auto c = a.lower_ <=> b.lower_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  void canonicalize(std::span<const int> raw) {
    labels_.assign(raw.size(), 0);
    std::vector<std::pair<int, int>> seen;  // raw label -> canonical label
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == raw[i]; });
      if (it == seen.end()) {
        seen.emplace_back(raw[i], static_cast<int>(seen.size()));
        labels_[i] = static_cast<int>(seen.size()) - 1;
      } else {
        labels_[i] = it->second;
      }
    }
    block_count_ = static_cast<int>(seen.size());
  }

  std::vector<Color> upper_;
  std::vector<Color> lower_;
  std::vector<int> labels_;
  int block_count_ = 0;
};

// ---------------------------------------------------------------------------
// Named partitions

inline ColoredPartition empty_partition() { return {}; }

/// One block containing every point.
inline ColoredPartition single_block(std::vector<Color> upper, std::vector<Color> lower) {
  std::vector<int> labels(upper.size() + lower.size(), 0);
  return {std::move(upper), std::move(lower), labels};
}

inline ColoredPartition identity_partition(Color c) { return single_block({c}, {c}); }

/// Identity partition whose upper and lower point carry the given colors.
inline ColoredPartition identity_partition(Color upper, Color lower) { return single_block({upper}, {lower}); }

inline ColoredPartition pair_partition(Color a, Color b) { return single_block({}, {a, b}); }
inline ColoredPartition singleton(Color c) { return single_block({}, {c}); }

/// b_s: s white lower points in one block.
inline ColoredPartition lower_block(int s) { return single_block({}, std::vector<Color>(s, Color::white)); }

// ---------------------------------------------------------------------------
// Category operations

/// p and q side by side.
inline ColoredPartition tensor(const ColoredPartition& p, const ColoredPartition& q) {
  std::vector<Color> upper = p.upper_colors();
  upper.insert(upper.end(), q.upper_colors().begin(), q.upper_colors().end());
  std::vector<Color> lower = p.lower_colors();
  lower.insert(lower.end(), q.lower_colors().begin(), q.lower_colors().end());
  const int shift = p.block_count();
  std::vector<int> labels;
  labels.reserve(p.point_count() + q.point_count());
  for (int i = 0; i < p.upper_count(); ++i) labels.push_back(p.upper_block(i));
  for (int i = 0; i < q.upper_count(); ++i) labels.push_back(shift + q.upper_block(i));
  for (int j = 0; j < p.lower_count(); ++j) labels.push_back(p.lower_block(j));
  for (int j = 0; j < q.lower_count(); ++j) labels.push_back(shift + q.lower_block(j));
  return {std::move(upper), std::move(lower), labels};
}

inline ColoredPartition tensor_power(const ColoredPartition& p, int times) {
  ColoredPartition out;
  for (int i = 0; i < times; ++i) out = tensor(out, p);
  return out;
}

struct Composition {
  ColoredPartition partition;
  int removed_blocks = 0;
};

/// qp: p placed above q. Requires the lower colors of p to equal the upper colors of q.
inline Composition compose(const ColoredPartition& q, const ColoredPartition& p) {
  if (p.lower_colors() != q.upper_colors()) {
    throw Error(ErrorKind::color_mismatch, "lower row of p does not match upper row of q");
  }
  const int bp = p.block_count();
  std::vector<int> parent(bp + q.block_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int j = 0; j < p.lower_count(); ++j) {
    const int a = find(p.lower_block(j));
    const int b = find(bp + q.upper_block(j));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> labels;
  labels.reserve(p.upper_count() + q.lower_count());
  std::vector<char> used(parent.size(), 0);
  for (int i = 0; i < p.upper_count(); ++i) {
    labels.push_back(find(p.upper_block(i)));
    used[labels.back()] = 1;
  }
  for (int j = 0; j < q.lower_count(); ++j) {
    labels.push_back(find(bp + q.lower_block(j)));
    used[labels.back()] = 1;
  }
  int removed = 0;
  for (int x = 0; x < static_cast<int>(parent.size()); ++x) {
    if (find(x) == x && !used[x]) ++removed;
  }
  return {ColoredPartition(p.upper_colors(), q.lower_colors(), labels), removed};
}

/// Reflection at the horizontal axis; colors are kept.
inline ColoredPartition involute(const ColoredPartition& p) {
  std::vector<int> labels;
  labels.reserve(p.point_count());
  for (int j = 0; j < p.lower_count(); ++j) labels.push_back(p.lower_block(j));
  for (int i = 0; i < p.upper_count(); ++i) labels.push_back(p.upper_block(i));
  return {p.lower_colors(), p.upper_colors(), labels};
}

/// Moves the point at `corner` to the other row on the same side, inverting its color.
inline ColoredPartition rotate(const ColoredPartition& p, Corner corner) {
  const int k = p.upper_count();
  const int l = p.lower_count();
  std::vector<Color> upper;
  std::vector<Color> lower;
  std::vector<int> up_labels;
  std::vector<int> low_labels;
  for (int i = 0; i < k; ++i) up_labels.push_back(p.upper_block(i));
  for (int j = 0; j < l; ++j) low_labels.push_back(p.lower_block(j));
  upper = p.upper_colors();
  lower = p.lower_colors();
  switch (corner) {
    case Corner::upper_left:
      if (k == 0) throw Error(ErrorKind::empty_row, "no upper point to rotate");
      lower.insert(lower.begin(), inverted(upper.front()));
      low_labels.insert(low_labels.begin(), up_labels.front());
      upper.erase(upper.begin());
      up_labels.erase(up_labels.begin());
      break;
    case Corner::upper_right:
      if (k == 0) throw Error(ErrorKind::empty_row, "no upper point to rotate");
      lower.push_back(inverted(upper.back()));
      low_labels.push_back(up_labels.back());
      upper.pop_back();
      up_labels.pop_back();
      break;
    case Corner::lower_left:
      if (l == 0) throw Error(ErrorKind::empty_row, "no lower point to rotate");
      upper.insert(upper.begin(), inverted(lower.front()));
      up_labels.insert(up_labels.begin(), low_labels.front());
      lower.erase(lower.begin());
      low_labels.erase(low_labels.begin());
      break;
    case Corner::lower_right:
      if (l == 0) throw Error(ErrorKind::empty_row, "no lower point to rotate");
      upper.push_back(inverted(lower.back()));
      up_labels.push_back(low_labels.back());
      lower.pop_back();
      low_labels.pop_back();
      break;
  }
  up_labels.insert(up_labels.end(), low_labels.begin(), low_labels.end());
  return {std::move(upper), std::move(lower), up_labels};
}

/// Rotates every upper point to the lower row (upper-left first).
/// The result lies in P(0, k+l) with lower row ~u_k ... ~u_1 l_1 ... l_l.
inline ColoredPartition to_one_row(const ColoredPartition& p) {
  const int k = p.upper_count();
  std::vector<Color> lower;
  std::vector<int> labels;
  for (int i = k - 1; i >= 0; --i) {
    lower.push_back(inverted(p.upper_colors()[i]));
    labels.push_back(p.upper_block(i));
  }
  for (int j = 0; j < p.lower_count(); ++j) {
    lower.push_back(p.lower_colors()[j]);
    labels.push_back(p.lower_block(j));
  }
  return {{}, std::move(lower), labels};
}

/// Inverse of to_one_row: rotates the first `upper` lower points back up.
inline ColoredPartition from_one_row(const ColoredPartition& row, int upper) {
  if (row.upper_count() != 0 || upper < 0 || upper > row.lower_count()) {
    throw Error(ErrorKind::shape_mismatch, "from_one_row expects P(0,m) and 0 <= k <= m");
  }
  std::vector<Color> up;
  std::vector<Color> low;
  std::vector<int> labels;
  for (int i = upper - 1; i >= 0; --i) {
    up.push_back(inverted(row.lower_colors()[i]));
    labels.push_back(row.lower_block(i));
  }
  for (int j = upper; j < row.lower_count(); ++j) {
    low.push_back(row.lower_colors()[j]);
    labels.push_back(row.lower_block(j));
  }
  return {std::move(up), std::move(low), labels};
}

/// True iff no two blocks interleave in the cyclic boundary order
/// (upper row left to right, then lower row right to left).
inline bool is_noncrossing(const ColoredPartition& p) {
  std::vector<int> cyclic;
  cyclic.reserve(p.point_count());
  for (int i = 0; i < p.upper_count(); ++i) cyclic.push_back(p.upper_block(i));
  for (int j = p.lower_count() - 1; j >= 0; --j) cyclic.push_back(p.lower_block(j));
  const int blocks = p.block_count();
  for (int x = 0; x < blocks; ++x) {
    for (int y = x + 1; y < blocks; ++y) {
      int runs = 0;
      int last = -1;
      for (int label : cyclic) {
        if ((label == x || label == y) && label != last) {
          ++runs;
          last = label;
        }
      }
      if (runs >= 4) return false;
    }
  }
  return true;
}

/// p = p* = p^2.
inline bool is_projective(const ColoredPartition& p) {
  if (p.upper_count() != p.lower_count()) return false;
  if (involute(p) != p) return false;
  return compose(p, p).partition == p;
}

/// q < p iff pq = qp = q and p != q. Both must be projective of the same shape.
inline bool precedes(const ColoredPartition& q, const ColoredPartition& p) {
  if (q.upper_count() != p.upper_count() || q.lower_count() != p.lower_count() ||
      q.upper_colors() != p.upper_colors() || q.lower_colors() != p.lower_colors()) {
    throw Error(ErrorKind::shape_mismatch, "precedes needs partitions of equal size and colors");
  }
  if (!is_projective(q) || !is_projective(p)) {
    throw Error(ErrorKind::not_projective, "precedes is defined on projective partitions");
  }
  if (p == q) return false;
  return compose(p, q).partition == q && compose(q, p).partition == q;
}

struct ColorCounts {
  int white = 0;  // lower white + upper black
  int black = 0;  // lower black + upper white
  int c = 0;      // white - black
  friend bool operator==(const ColorCounts&, const ColorCounts&) = default;
};

inline ColorCounts color_counts(const ColoredPartition& p) {
  ColorCounts out;
  for (Color c : p.lower_colors()) (c == Color::white ? out.white : out.black) += 1;
  for (Color c : p.upper_colors()) (c == Color::black ? out.white : out.black) += 1;
  out.c = out.white - out.black;
  return out;
}

// ---------------------------------------------------------------------------
// Literal format: P(k,l;U;L;{{i,...},{j,...}})

inline std::string to_literal(const ColoredPartition& p) {
  std::string out = "P(" + std::to_string(p.upper_count()) + "," + std::to_string(p.lower_count()) + ";";
  for (Color c : p.upper_colors()) out += color_char(c);
  out += ';';
  for (Color c : p.lower_colors()) out += color_char(c);
  out += ";{";
  const auto blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ',';
    out += '{';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks[b][i]);
    }
    out += '}';
  }
  out += "})";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ColoredPartition& p) { return os << to_literal(p); }

namespace detail {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  ColoredPartition parse() {
    expect('P');
    expect('(');
    const int k = number();
    expect(',');
    const int l = number();
    expect(';');
    auto upper = colors();
    expect(';');
    auto lower = colors();
    expect(';');
    if (static_cast<int>(upper.size()) != k || static_cast<int>(lower.size()) != l) {
      fail("color strings do not match the declared row sizes");
    }
    std::vector<std::vector<int>> blocks;
    expect('{');
    if (peek() != '}') {
      do {
        blocks.push_back(block());
      } while (accept(','));
    }
    expect('}');
    expect(')');
    if (pos_ != text_.size()) fail("trailing characters");
    return ColoredPartition::from_blocks(std::move(upper), std::move(lower), blocks);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse, "partition literal '" + std::string(text_) + "' at offset " +
                                      std::to_string(pos_) + ": " + why);
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int number() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(value);
  }
  std::vector<Color> colors() {
    std::vector<Color> out;
    while (peek() == 'w' || peek() == 'b') out.push_back(text_[pos_++] == 'w' ? Color::white : Color::black);
    return out;
  }
  std::vector<int> block() {
    std::vector<int> out;
    expect('{');
    do {
      out.push_back(number());
    } while (accept(','));
    expect('}');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ColoredPartition parse_partition(std::string_view literal) {
  return detail::LiteralParser(literal).parse();
}

}  // namespace eqg
