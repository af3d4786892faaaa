#pragma once

// Bounded closures of categories of partitions.
//
// A category is closed under rotation, so p is a member iff its one-row form
// (every upper point rotated down, see to_one_row) is. The closure therefore
// runs on one-row partitions only, using
//   - concatenation          (tensor product),
//   - cyclic rotation        (rotating a point around the diagram),
//   - reversal + inversion   (involution followed by rotation),
//   - substitution: composing with a layer id ⊗ g ⊗ id where g is a
//     rotated generator, seed partition or involution of one,
// which generate the same category as the four category operations.
// Every intermediate partition respects the point bound.

#include "eqg/family.hpp"
#include "eqg/partition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace eqg {

inline constexpr int max_category_points = 16;

namespace detail {

/// Packed one-row partition: 4 bits per block label, one colour bit per point.
struct RowKey {
  std::uint64_t labels = 0;
  std::uint32_t meta = 0;  // bits 0..15: black points, bits 16..20: size

  int size() const { return static_cast<int>(meta >> 16); }
  std::uint32_t black_mask() const { return meta & 0xffffu; }

  friend bool operator==(const RowKey&, const RowKey&) = default;
  friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

struct RowKeyHash {
  std::size_t operator()(const RowKey& k) const noexcept {
    std::uint64_t h = k.labels * 0x9E3779B97F4A7C15ull;
    h ^= (static_cast<std::uint64_t>(k.meta) + 0x632BE59BD9B4E019ull) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct Row {
  int size = 0;
  std::array<std::uint8_t, 2 * max_category_points> label{};
  std::uint32_t black = 0;

  bool is_black(int i) const { return (black >> i) & 1u; }
};

inline RowKey encode(const Row& row) {
  std::array<int, 2 * max_category_points + 1> remap;
  remap.fill(-1);
  int next = 0;
  RowKey key;
  for (int i = 0; i < row.size; ++i) {
    int& target = remap[row.label[i]];
    if (target < 0) target = next++;
    key.labels |= static_cast<std::uint64_t>(target) << (4 * i);
  }
  key.meta = (static_cast<std::uint32_t>(row.size) << 16) | (row.black & 0xffffu);
  return key;
}

inline Row decode(const RowKey& key) {
  Row row;
  row.size = key.size();
  row.black = key.black_mask();
  for (int i = 0; i < row.size; ++i) row.label[i] = static_cast<std::uint8_t>((key.labels >> (4 * i)) & 0xfu);
  return row;
}

inline Row row_of(const ColoredPartition& one_row) {
  Row row;
  row.size = one_row.lower_count();
  for (int i = 0; i < row.size; ++i) {
    row.label[i] = static_cast<std::uint8_t>(one_row.lower_block(i));
    if (one_row.lower_colors()[i] == Color::black) row.black |= 1u << i;
  }
  return row;
}

inline ColoredPartition partition_of(const RowKey& key) {
  const Row row = decode(key);
  std::vector<Color> colors(row.size);
  std::vector<int> labels(row.size);
  for (int i = 0; i < row.size; ++i) {
    colors[i] = row.is_black(i) ? Color::black : Color::white;
    labels[i] = row.label[i];
  }
  return {{}, std::move(colors), labels};
}

/// Moves the leftmost point to the right end; colours survive two rotations unchanged.
inline Row rotate_row(const Row& r) {
  Row out;
  out.size = r.size;
  for (int i = 0; i + 1 < r.size; ++i) out.label[i] = r.label[i + 1];
  out.label[r.size - 1] = r.label[0];
  out.black = (r.black >> 1) | ((r.black & 1u) << (r.size - 1));
  return out;
}

inline Row reverse_invert(const Row& r) {
  Row out;
  out.size = r.size;
  for (int i = 0; i < r.size; ++i) {
    out.label[i] = r.label[r.size - 1 - i];
    if (!r.is_black(r.size - 1 - i)) out.black |= 1u << i;
  }
  return out;
}

/// Inputs must be canonical (labels < 16).
inline Row concat(const Row& a, const Row& b) {
  Row out;
  out.size = a.size + b.size;
  for (int i = 0; i < a.size; ++i) out.label[i] = a.label[i];
  for (int i = 0; i < b.size; ++i) out.label[a.size + i] = static_cast<std::uint8_t>(b.label[i] + 16);
  out.black = a.black | (b.black << a.size);
  return out;
}

/// A rotated seed g in P(a,b), applied to a one-row partition as the layer id ⊗ g ⊗ id.
struct Gadget {
  int upper = 0;
  int lower = 0;
  std::uint32_t upper_black = 0;
  std::array<std::uint8_t, max_category_points> label{};  // upper points, then lower points

  friend bool operator==(const Gadget&, const Gadget&) = default;
};

inline Gadget make_gadget(const ColoredPartition& g) {
  Gadget out;
  out.upper = g.upper_count();
  out.lower = g.lower_count();
  for (int i = 0; i < g.point_count(); ++i) out.label[i] = static_cast<std::uint8_t>(g.block_of(i));
  for (int i = 0; i < out.upper; ++i) {
    if (g.upper_colors()[i] == Color::black) out.upper_black |= 1u << i;
  }
  for (int j = 0; j < out.lower; ++j) {
    // stored in the upper bits so the row colours can be copied directly
    if (g.lower_colors()[j] == Color::black) out.upper_black |= 1u << (16 + j);
  }
  return out;
}

/// Every way to read a seed (or its involution) as g in P(a,b) up to rotation.
inline std::vector<Gadget> gadgets_for(const std::vector<ColoredPartition>& seeds) {
  std::vector<Gadget> out;
  auto push = [&](const ColoredPartition& one_row) {
    Row row = row_of(one_row);
    for (int r = 0; r < std::max(1, row.size); ++r) {
      const ColoredPartition current = partition_of(encode(row));
      for (int a = 0; a <= row.size; ++a) {
        const Gadget g = make_gadget(from_one_row(current, a));
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
      }
      if (row.size > 0) row = rotate_row(row);
    }
  };
  for (const auto& s : seeds) {
    push(to_one_row(s));
    push(to_one_row(involute(s)));
  }
  return out;
}

/// Replaces points pos..pos+a-1 of r by the lower row of g, provided their colours match
/// the upper row of g. Blocks meeting through g merge; blocks closed off inside vanish.
inline std::optional<Row> substitute(const Row& r, int pos, const Gadget& g) {
  const std::uint32_t window = (r.black >> pos) & ((1u << g.upper) - 1u);
  if (window != (g.upper_black & 0xffffu)) return std::nullopt;
  std::array<std::uint8_t, 2 * max_category_points> parent;
  for (int i = 0; i < 2 * max_category_points; ++i) parent[i] = static_cast<std::uint8_t>(i);
  auto find = [&](std::uint8_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < g.upper; ++i) {
    const auto a = find(r.label[pos + i]);
    const auto b = find(static_cast<std::uint8_t>(16 + g.label[i]));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Row out;
  auto emit = [&](std::uint8_t lab, bool black) {
    out.label[out.size] = find(lab);
    if (black) out.black |= 1u << out.size;
    ++out.size;
  };
  for (int i = 0; i < pos; ++i) emit(r.label[i], r.is_black(i));
  for (int j = 0; j < g.lower; ++j) {
    emit(static_cast<std::uint8_t>(16 + g.label[g.upper + j]), (g.upper_black >> (16 + j)) & 1u);
  }
  for (int i = pos + g.upper; i < r.size; ++i) emit(r.label[i], r.is_black(i));
  return out;
}

inline int row_color_defect(const RowKey& key) {
  const int black = std::popcount(key.black_mask());
  return key.size() - 2 * black;
}

}  // namespace detail

/// A bounded sample of the category generated by some partitions.
class PartitionCategorySample {
 public:
  const std::vector<ColoredPartition>& generators() const { return generators_; }
  int max_points() const { return max_points_; }
  /// True iff a complete closure pass within the bound added nothing new.
  bool saturated() const { return saturated_; }
  int passes() const { return passes_; }
  std::size_t one_row_count() const { return sorted_.size(); }

  bool contains(const ColoredPartition& p) const {
    if (p.point_count() > max_points_) return false;
    return set_.contains(detail::encode(detail::row_of(to_one_row(p))));
  }

  /// Members in P(k,l), sorted in canonical order.
  std::vector<ColoredPartition> members(int k, int l) const {
    std::vector<ColoredPartition> out;
    for (const auto& key : sorted_) {
      if (key.size() == k + l) out.push_back(from_one_row(detail::partition_of(key), k));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Members in P(k,l) with only white points, sorted in canonical order.
  std::vector<ColoredPartition> white_members(int k, int l) const {
    // All-white in P(k,l) means the one-row form is k black points then l white ones.
    const std::uint32_t mask = (1u << k) - 1u;
    std::vector<ColoredPartition> out;
    for (const auto& key : sorted_) {
      if (key.size() == k + l && key.black_mask() == mask) {
        out.push_back(from_one_row(detail::partition_of(key), k));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every member in every split P(k,l); can be large.
  std::vector<ColoredPartition> members() const {
    std::vector<ColoredPartition> out;
    for (const auto& key : sorted_) {
      const auto row = detail::partition_of(key);
      for (int k = 0; k <= key.size(); ++k) out.push_back(from_one_row(row, k));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ColoredPartition> one_row_members() const {
    std::vector<ColoredPartition> out;
    out.reserve(sorted_.size());
    for (const auto& key : sorted_) out.push_back(detail::partition_of(key));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Visits the one-row colour defect c(p) of every member.
  void for_each_defect(const std::function<void(int)>& visit) const {
    for (const auto& key : sorted_) visit(detail::row_color_defect(key));
  }

 private:
  friend PartitionCategorySample generate_category(const std::vector<ColoredPartition>&, int, int);

  std::vector<ColoredPartition> generators_;
  int max_points_ = 0;
  bool saturated_ = false;
  int passes_ = 0;
  std::unordered_set<detail::RowKey, detail::RowKeyHash> set_;
  std::vector<detail::RowKey> sorted_;
};

/// Closure of generators plus the identity and mixed pair partitions, restricted
/// to at most `max_points` points. `max_passes` = 0 runs to the fixed point.
inline PartitionCategorySample generate_category(const std::vector<ColoredPartition>& generators,
                                                 int max_points, int max_passes = 0) {
  using detail::Row;
  using detail::RowKey;
  if (max_points < 2) throw Error(ErrorKind::bound_too_small, "max_points must be at least 2");
  if (max_points > max_category_points) {
    throw Error(ErrorKind::bound_too_large,
                "max_points must not exceed " + std::to_string(max_category_points));
  }

  PartitionCategorySample sample;
  sample.generators_ = generators;
  sample.max_points_ = max_points;

  std::vector<ColoredPartition> seed = generators;
  seed.push_back(identity_partition(Color::white));
  seed.push_back(identity_partition(Color::black));
  seed.push_back(pair_partition(Color::white, Color::black));
  seed.push_back(pair_partition(Color::black, Color::white));

  auto& set = sample.set_;
  std::vector<std::vector<RowKey>> by_size(max_points + 1);
  std::vector<RowKey> frontier;
  auto offer = [&](const Row& row, std::vector<RowKey>& sink) {
    if (row.size > max_points) return;
    const RowKey key = detail::encode(row);
    if (set.insert(key).second) sink.push_back(key);
  };
  for (const auto& p : seed) {
    if (p.point_count() > max_points) {
      throw Error(ErrorKind::bound_too_small, "generator " + to_literal(p) + " exceeds the point bound");
    }
    offer(detail::row_of(to_one_row(p)), frontier);
  }

  const auto gadgets = detail::gadgets_for(seed);
  int passes = 0;
  while (!frontier.empty()) {
    if (max_passes > 0 && passes >= max_passes) break;
    ++passes;
    for (const auto& key : frontier) by_size[key.size()].push_back(key);
    std::vector<RowKey> next;
    for (const auto& key : frontier) {
      const Row row = detail::decode(key);
      if (row.size > 0) {
        offer(detail::rotate_row(row), next);
        offer(detail::reverse_invert(row), next);
      }
      for (const auto& g : gadgets) {
        if (row.size - g.upper + g.lower > max_points) continue;
        for (int pos = 0; pos + g.upper <= row.size; ++pos) {
          if (auto replaced = detail::substitute(row, pos, g)) offer(*replaced, next);
        }
      }
      for (int other = 0; other + row.size <= max_points; ++other) {
        const auto& bucket = by_size[other];
        for (std::size_t b = 0; b < bucket.size(); ++b) {
          const Row partner = detail::decode(bucket[b]);
          offer(detail::concat(row, partner), next);
          offer(detail::concat(partner, row), next);
        }
      }
    }
    frontier = std::move(next);
  }
  sample.passes_ = passes;
  sample.saturated_ = frontier.empty();
  for (const auto& key : frontier) by_size[key.size()].push_back(key);

  sample.sorted_.assign(set.begin(), set.end());
  std::sort(sample.sorted_.begin(), sample.sorted_.end(), [](const RowKey& a, const RowKey& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return sample;
}

struct KParam {
  int value = 0;
  /// False when the sample is not saturated: the value then only describes the bounded sample.
  bool exact = true;
};

/// gcd of |c(p)| over the members; 0 if every member has c(p) = 0.
inline KParam k_param(const PartitionCategorySample& sample) {
  int g = 0;
  sample.for_each_defect([&](int c) { g = std::gcd(g, c < 0 ? -c : c); });
  return {g, sample.saturated()};
}

/// Generator sets of the free easy quantum groups handled by this library.
inline std::vector<ColoredPartition> family_generators(const FamilySpec& spec) {
  const Color w = Color::white;
  const Color b = Color::black;
  switch (spec.family) {
    case Family::orthogonal: return {identity_partition(w, b)};
    case Family::unitary: return {};
    case Family::permutation: return {identity_partition(w, b), singleton(w), single_block({w, w}, {w, w})};
    case Family::reflection: return {lower_block(spec.s), single_block({}, {w, w, b, b})};
  }
  return {};
}

}  // namespace eqg
