#pragma once

// Conditions (C1)/(C2) on the fusion rules and (C_P1)/(C_P2) on the category of partitions.

#include "eqg/category.hpp"
#include "eqg/fusion.hpp"
#include "eqg/linear_maps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqg {

enum class Verdict { holds, fails, undetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

/// Combined verdict of two conditions.
inline Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::fails || b == Verdict::fails) return Verdict::fails;
  if (a == Verdict::holds && b == Verdict::holds) return Verdict::holds;
  return Verdict::undetermined;
}

// ---------------------------------------------------------------------------
// Fusion level

struct C1Witness {
  IrrepLabel v;
  IrrepLabel v_prime;
  int v_prime_level = 0;  // v' ≤ u^{⊗level}
};

struct C1Report {
  Verdict status = Verdict::undetermined;
  int degree_cap = 0;
  std::vector<C1Witness> witnesses;
  std::optional<IrrepLabel> counterexample;
  std::string reason;
};

/// For every v of degree ≤ degree_cap, finds v' in some tensor power with trivial ≤ v ⊗ v'.
/// The contragredient is tried first and admitted through a verified ascent path; otherwise
/// the irreducibles of degree ≤ degree_cap are scanned.
inline C1Report check_c1(const FusionRing& ring, int degree_cap) {
  if (degree_cap < 0) throw Error(ErrorKind::invalid_argument, "degree cap must be nonnegative");
  C1Report report;
  report.degree_cap = degree_cap;
  const IrrepLabel one = ring.trivial();
  const auto irreps = irreducibles_up_to(ring, degree_cap);

  for (const auto& [v, deg] : irreps) {
    std::optional<C1Witness> found;
    if (auto d = ring.dual(v); d && ring.decompose(v, *d).contains(one)) {
      if (auto level = verified_ascent(ring, *d)) found = C1Witness{v, *d, *level};
    }
    for (std::size_t i = 0; !found && i < irreps.size(); ++i) {
      if (ring.decompose(v, irreps[i].first).contains(one)) found = C1Witness{v, irreps[i].first, irreps[i].second};
    }
    if (found) {
      report.witnesses.push_back(*found);
      continue;
    }
    // Every summand of a tensor power has nonnegative grading, so v ⊗ v' never
    // reaches the trivial label once v has positive grading.
    if (auto g = ring.grading(v); g && *g > 0) {
      report.status = Verdict::fails;
      report.counterexample = v;
      report.reason = "grading of " + to_string(v) + " is " + std::to_string(*g) +
                      " > 0 and every irreducible of a tensor power has grading >= 0";
      return report;
    }
    report.status = Verdict::undetermined;
    report.counterexample = v;
    report.reason = "no partner found for " + to_string(v);
    return report;
  }
  report.status = Verdict::holds;
  report.reason = "every irreducible of degree <= " + std::to_string(degree_cap) + " has a partner";
  return report;
}

struct C2Report {
  Verdict status = Verdict::undetermined;
  int level_cap = 0;
  std::optional<int> N;
  std::optional<int> k0;
  std::string reason;
};

namespace detail {

inline bool supports_meet(const FusionVector& a, const FusionVector& b) {
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

/// Every multiplicity of a is at most the one in b.
inline bool contained_in(const FusionVector& a, const FusionVector& b) {
  for (const auto& [label, m] : a.terms()) {
    if (b.coefficient(label) < m) return false;
  }
  return true;
}

}  // namespace detail

/// k0 is the least t > 0 with Hom(u^{⊗l}, u^{⊗(l+t)}) != 0 for some l (all levels ≤ level_cap);
/// N is the least N ≥ 1 with u^{⊗N} ⊆ u^{⊗(N+k0)}.
inline C2Report check_c2(const FusionRing& ring, int level_cap) {
  if (level_cap < 1) throw Error(ErrorKind::invalid_argument, "level cap must be positive");
  C2Report report;
  report.level_cap = level_cap;
  for (int t = 1; t <= level_cap && !report.k0; ++t) {
    for (int l = 0; l + t <= level_cap; ++l) {
      if (detail::supports_meet(ring.power(l), ring.power(l + t))) {
        report.k0 = t;
        break;
      }
    }
  }
  if (!report.k0) {
    bool graded = true;
    for (int l = 0; l <= level_cap && graded; ++l) {
      for (const auto& [label, m] : ring.power(l).terms()) {
        const auto g = ring.grading(label);
        if (!g || *g != l) {
          graded = false;
          break;
        }
      }
    }
    if (graded) {
      report.status = Verdict::fails;
      report.reason = "u^{⊗l} is homogeneous of grading l, so Hom(u^{⊗l}, u^{⊗(l+t)}) = 0 for every t > 0";
    } else {
      report.reason = "no intertwiner between distinct tensor powers up to level " + std::to_string(level_cap);
    }
    return report;
  }
  const int k0 = *report.k0;
  for (int N = 1; N + k0 <= level_cap; ++N) {
    if (detail::contained_in(ring.power(N), ring.power(N + k0))) {
      report.N = N;
      break;
    }
  }
  if (report.N) {
    report.status = Verdict::holds;
    report.reason = "u^{⊗" + std::to_string(*report.N) + "} <= u^{⊗" + std::to_string(*report.N + k0) +
                    "}; no intertwiners for shifts 0 < t < " + std::to_string(k0) + " up to level " +
                    std::to_string(level_cap);
  } else {
    report.reason = "no N with u^{⊗N} <= u^{⊗(N+k0)} below the level cap";
  }
  return report;
}

// ---------------------------------------------------------------------------
// Partition level

struct CP2Witness {
  ColoredPartition r;
  int N = 0;
  int k0 = 0;
};

/// First all-white r ∈ C(N+k0, N) in canonical order with r r* = id^{⊗N}, for the least such N.
inline std::optional<CP2Witness> cp2_witness(const PartitionCategorySample& sample, int k0) {
  if (k0 <= 0) throw Error(ErrorKind::invalid_argument, "cp2_witness needs k0 > 0");
  for (int N = 1; 2 * N + k0 <= sample.max_points(); ++N) {
    const ColoredPartition target = tensor_power(identity_partition(Color::white), N);
    for (const auto& r : sample.white_members(N + k0, N)) {
      if (compose(r, involute(r)).partition == target) return CP2Witness{r, N, k0};
    }
  }
  return std::nullopt;
}

inline ColoredPartition double_pair_partition() {
  return tensor(pair_partition(Color::white, Color::white), pair_partition(Color::black, Color::black));
}

inline ColoredPartition four_block_wwbb() {
  return single_block({}, {Color::white, Color::white, Color::black, Color::black});
}

struct CPReport {
  KParam k;
  int max_points = 0;
  bool saturated = false;
  bool double_pair_present = false;
  bool four_block_present = false;
  std::vector<std::string> clauses;  // fired clauses among "a", "b", "c", "d"
  Verdict cp1 = Verdict::undetermined;
  Verdict cp2 = Verdict::undetermined;
  std::optional<CP2Witness> witness;
};

/// The four clauses of the characterization: (a) k = 0 rules out both conditions;
/// (b) the double pair or (c) the white-white-black-black four-block give (C_P1);
/// (d) k != 0 gives (C_P2) with N = 1, k0 = k. Membership is decided within the sample.
inline CPReport classify_cp(const PartitionCategorySample& sample) {
  CPReport report;
  report.k = k_param(sample);
  report.max_points = sample.max_points();
  report.saturated = sample.saturated();
  report.double_pair_present = sample.contains(double_pair_partition());
  report.four_block_present = sample.contains(four_block_wwbb());
  if (report.k.value == 0) {
    if (report.saturated) {
      report.clauses.push_back("a");
      report.cp1 = Verdict::fails;
      report.cp2 = Verdict::fails;
    }
    return report;
  }
  if (report.double_pair_present) report.clauses.push_back("b");
  if (report.four_block_present) report.clauses.push_back("c");
  if (report.double_pair_present || report.four_block_present) report.cp1 = Verdict::holds;
  report.clauses.push_back("d");
  report.cp2 = Verdict::holds;
  report.witness = cp2_witness(sample, report.k.value);
  return report;
}

struct CP1Witness {
  ColoredPartition q;
  ColoredPartition r;
};

/// Direct search for (C_P1) data for one projective all-white p: q projective all-white
/// and r ∈ C(0, a+b) all-white with (P_p ⊗ P_q) T_r != 0. Needs a saturated sample.
inline std::optional<CP1Witness> find_cp1_witness(const ColoredPartition& p, const PartitionCategorySample& sample,
                                                  int n, int max_b) {
  const int a = p.upper_count();
  for (int b = 0; b <= max_b && a + b <= sample.max_points() && 2 * b <= sample.max_points(); ++b) {
    const auto rs = sample.white_members(0, a + b);
    if (rs.empty()) continue;
    for (const auto& q : sample.white_members(b, b)) {
      if (!is_projective(q)) continue;
      for (const auto& r : rs) {
        if (cp1_witness_check(p, q, r, sample, n)) return CP1Witness{q, r};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

struct ConditionReport {
  std::string family;
  C1Report c1;
  C2Report c2;
  CPReport cp;
  int degree_cap = 0;
  int level_cap = 0;

  Verdict fusion_verdict() const { return both(c1.status, c2.status); }
  Verdict partition_verdict() const { return both(cp.cp1, cp.cp2); }
};

inline ConditionReport evaluate_conditions(const FamilySpec& spec, int degree_cap, int level_cap, int max_points) {
  ConditionReport report;
  report.family = spec.name();
  report.degree_cap = degree_cap;
  report.level_cap = level_cap;
  const auto ring = make_fusion_ring(spec);
  report.c1 = check_c1(*ring, degree_cap);
  report.c2 = check_c2(*ring, level_cap);
  report.cp = classify_cp(generate_category(family_generators(spec), max_points));
  return report;
}

}  // namespace eqg
