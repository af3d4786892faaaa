#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace eqg;

namespace {

struct Row {
  FamilySpec spec;
  int k0;
  std::vector<std::string> clauses;
};

const std::vector<Row>& table() {
  static const std::vector<Row> rows = {
      {{Family::orthogonal, 1}, 2, {"b", "d"}},
      {{Family::permutation, 1}, 1, {"b", "c", "d"}},
      {{Family::reflection, 2}, 2, {"b", "c", "d"}},
      {{Family::reflection, 3}, 3, {"c", "d"}},
      {{Family::reflection, 4}, 4, {"c", "d"}},
  };
  return rows;
}

/// gcd of |#white - #black| over the one-row members described by the block predicates.
int k_by_predicate(const FamilySpec& spec, int max_points) {
  int g = 0;
  for (const auto& p : oracle::one_row_partitions(max_points, oracle::family_predicate(spec))) {
    int balance = 0;
    for (Color c : p.lower_colors()) balance += c == Color::white ? 1 : -1;
    g = std::gcd(g, std::abs(balance));
  }
  return g;
}

}  // namespace

TEST(KParam, MatchesPredicateOracle) {
  for (const auto& row : table()) {
    const auto sample = generate_category(family_generators(row.spec), 8);
    ASSERT_TRUE(sample.saturated());
    EXPECT_EQ(k_param(sample).value, row.k0) << row.spec.name();
    EXPECT_EQ(k_by_predicate(row.spec, 8), row.k0) << row.spec.name();
  }
  const auto u = generate_category(family_generators({Family::unitary, 1}), 8);
  EXPECT_EQ(k_param(u).value, 0);
  EXPECT_EQ(k_by_predicate({Family::unitary, 1}, 8), 0);
}

TEST(Verdicts, FamiliesWithConditions) {
  for (const auto& row : table()) {
    const auto report = evaluate_conditions(row.spec, 6, 10, 8);
    SCOPED_TRACE(row.spec.name());
    EXPECT_EQ(report.c1.status, Verdict::holds);
    EXPECT_EQ(report.c2.status, Verdict::holds);
    EXPECT_EQ(report.c2.N, 1);
    EXPECT_EQ(report.c2.k0, row.k0);
    EXPECT_EQ(report.fusion_verdict(), Verdict::holds);
    EXPECT_EQ(report.cp.k.value, row.k0);
    EXPECT_TRUE(report.cp.k.exact);
    EXPECT_EQ(report.cp.clauses, row.clauses);
    EXPECT_EQ(report.partition_verdict(), Verdict::holds);
    ASSERT_TRUE(report.cp.witness.has_value());
    EXPECT_EQ(report.cp.witness->N, 1);
    EXPECT_EQ(report.cp.witness->k0, row.k0);
  }
}

TEST(Verdicts, FreeUnitaryFails) {
  const auto report = evaluate_conditions({Family::unitary, 1}, 6, 10, 8);
  EXPECT_EQ(report.c1.status, Verdict::fails);
  ASSERT_TRUE(report.c1.counterexample.has_value());
  EXPECT_EQ(report.c2.status, Verdict::fails);
  EXPECT_FALSE(report.c2.k0.has_value());
  EXPECT_EQ(report.fusion_verdict(), Verdict::fails);
  EXPECT_EQ(report.cp.clauses, std::vector<std::string>{"a"});
  EXPECT_EQ(report.cp.cp1, Verdict::fails);
  EXPECT_EQ(report.cp.cp2, Verdict::fails);
  EXPECT_EQ(report.partition_verdict(), Verdict::fails);
}

TEST(Witnesses, C1PartnersAreRecheckable) {
  for (const auto& row : table()) {
    const auto ring = make_fusion_ring(row.spec);
    const auto report = check_c1(*ring, 6);
    ASSERT_EQ(report.status, Verdict::holds);
    EXPECT_EQ(report.witnesses.size(), irreducibles_up_to(*ring, 6).size());
    for (const auto& w : report.witnesses) {
      EXPECT_TRUE(ring->decompose(w.v, w.v_prime).contains(ring->trivial())) << to_string(w.v);
      EXPECT_TRUE(ring->power(w.v_prime_level).contains(w.v_prime)) << to_string(w.v_prime);
    }
  }
}

TEST(Witnesses, C2ContainmentIsRecheckable) {
  for (const auto& row : table()) {
    const auto ring = make_fusion_ring(row.spec);
    const auto report = check_c2(*ring, 10);
    ASSERT_TRUE(report.N && report.k0);
    const auto& low = ring->power(*report.N);
    const auto& high = ring->power(*report.N + *report.k0);
    for (const auto& [label, m] : low.terms()) EXPECT_LE(m, high.coefficient(label)) << to_string(label);
    // no shift below k0 meets: supports of u^l and u^{l+t} are disjoint
    for (int t = 1; t < *report.k0; ++t) {
      for (int l = 0; l + t <= 10; ++l) {
        for (const auto& [label, m] : ring->power(l).terms()) EXPECT_FALSE(ring->power(l + t).contains(label));
      }
    }
  }
}

TEST(Witnesses, CP2IsRecheckable) {
  for (const auto& row : table()) {
    const auto sample = generate_category(family_generators(row.spec), 8);
    const auto w = cp2_witness(sample, row.k0);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(sample.contains(w->r));
    EXPECT_EQ(w->r.upper_count(), w->N + w->k0);
    EXPECT_EQ(w->r.lower_count(), w->N);
    EXPECT_EQ(compose(w->r, involute(w->r)).partition, tensor_power(identity_partition(Color::white), w->N));
  }
}

TEST(Witnesses, CP1SearchFindsCheckableData) {
  const auto o = generate_category(family_generators({Family::orthogonal, 1}), 8);
  const auto id = identity_partition(Color::white);
  const auto w = find_cp1_witness(id, o, 2, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_projective(w->q));
  EXPECT_TRUE(cp1_witness_check(id, w->q, w->r, o, 2));
}

TEST(Partial, UnsaturatedSampleIsFlagged) {
  const auto partial = generate_category(family_generators({Family::orthogonal, 1}), 8, 1);
  const auto report = classify_cp(partial);
  EXPECT_FALSE(report.saturated);
  EXPECT_FALSE(report.k.exact);
}

TEST(Errors, InvalidCaps) {
  OrthogonalFusion o;
  EXPECT_THROW(check_c1(o, -1), Error);
  EXPECT_THROW(check_c2(o, 0), Error);
  const auto sample = generate_category(family_generators({Family::orthogonal, 1}), 6);
  EXPECT_THROW(cp2_witness(sample, 0), Error);
}
