#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace eqg;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  BigInt previous = 1;
  for (int i = 0; i < d.rows(); ++i) {
    for (int j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
    }
  }
  for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    const BigInt& x = d(i, i);
    if (x < 0) return false;
    if (x != 0 && (previous == 0 || x % previous != 0)) return false;
    previous = x;
  }
  return true;
}

long long order_mod(const FGAbelianGroup& g, int m) {
  long long out = 1;
  for (int i = 0; i < g.free_rank; ++i) out *= m;
  for (const auto& d : g.torsion) out *= std::gcd(static_cast<long long>(m), static_cast<long long>(d));
  return out;
}

bool ends_in_ones(const Word& x, int s) {
  if (static_cast<int>(x.letters.size()) < s) return false;
  return std::all_of(x.letters.end() - s, x.letters.end(), [](int a) { return a == 1; });
}

/// Words with letter sum <= level*s, sum ≡ 0 mod s, not ending in s consecutive ones.
int complement_count(int level, int s) {
  int count = 0;
  for (int d = 0; d <= level * s; d += s) {
    for (const auto& x : oracle::words_of_sum(d, s)) count += ends_in_ones(x, s) ? 0 : 1;
  }
  return count;
}

std::set<IrrepLabel> as_set(const std::vector<IrrepLabel>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Smith, Examples) {
  const IntMatrix m{{2, 4}, {6, 8}};
  const auto r = smith_normal_form(m);
  EXPECT_EQ(r.D, (IntMatrix{{2, 0}, {0, 4}}));
  EXPECT_EQ(r.U * m * r.V, r.D);
  EXPECT_EQ(r.invariant_factors, (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(cokernel(m), (FGAbelianGroup{0, {2, 4}}));
  EXPECT_EQ(cokernel(IntMatrix{{2, 0}, {0, 3}}), (FGAbelianGroup{0, {6}}));
  EXPECT_EQ(cokernel(IntMatrix(2, 0)), (FGAbelianGroup{2, {}}));
  EXPECT_EQ(kernel_rank(IntMatrix{{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{2, 4}, {6, 8}}), -8);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(Smith, GroupText) {
  EXPECT_EQ(to_string(FGAbelianGroup{}), "0");
  EXPECT_EQ(to_string(FGAbelianGroup{1, {}}), "Z");
  EXPECT_EQ(to_string(FGAbelianGroup{3, {2, 6}}), "Z^3 + Z/2 + Z/6");
}

TEST(Smith, RandomMatricesAgainstOracles) {
  std::mt19937 rng(11);
  int enumerated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const int bound = trial % 2 == 0 ? 20 : 3;
    const IntMatrix m = oracle::random_matrix(rng, rows, cols, bound);
    const auto r = smith_normal_form(m);
    ASSERT_EQ(r.U * m * r.V, r.D);
    ASSERT_TRUE(is_diagonal_chain(r.D));
    ASSERT_EQ(abs(determinant(r.U)), 1);
    ASSERT_EQ(abs(determinant(r.V)), 1);
    ASSERT_EQ(r.U * r.U_inverse, IntMatrix::identity(rows));
    ASSERT_EQ(r.rank, oracle::dense_rank(oracle::to_dense(m)));
    if (rows == cols) ASSERT_EQ(abs(determinant(m)), abs(oracle::dense_det(oracle::to_dense(m))));
    if (rows == cols && r.rank == rows) {
      BigInt product = 1;
      for (const auto& d : r.invariant_factors) product *= d;
      ASSERT_EQ(product, abs(determinant(m)));
    }

    // permuting rows and columns leaves D unchanged
    IntMatrix shuffled = m;
    for (int i = rows - 1; i > 0; --i) shuffled.swap_rows(i, static_cast<int>(rng() % (i + 1)));
    for (int j = cols - 1; j > 0; --j) shuffled.swap_cols(j, static_cast<int>(rng() % (j + 1)));
    ASSERT_EQ(smith_normal_form(shuffled).D, r.D);

    const FGAbelianGroup g = cokernel(m);
    if (g.free_rank == 0 && g.order() <= 1000) {
      const auto profile = oracle::torsion_profile(m, 1000);
      ASSERT_TRUE(profile.has_value());
      ASSERT_EQ(*profile, oracle::profile_of(g.torsion, static_cast<long long>(g.order())));
      ++enumerated;
    }
  }
  EXPECT_GT(enumerated, 20);
}

TEST(QuotientLattice, RandomSparseMatchesDenseCokernel) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = static_cast<int>(rng() % 7);
    const IntMatrix dense = oracle::random_matrix(rng, rows, cols, trial % 3 == 0 ? 1 : 4);
    SparseIntMatrix m(rows, cols);
    for (int c = 0; c < cols; ++c) {
      for (int r = 0; r < rows; ++r) {
        if (dense(r, c) != 0) m.columns[c][r] = dense(r, c);
      }
    }
    std::vector<long long> priority(rows);
    for (auto& p : priority) p = static_cast<long long>(rng() % 5);
    const QuotientLattice q(m, priority);
    ASSERT_EQ(q.group(), cokernel(dense));
    ASSERT_EQ(q.image_rank(), smith_normal_form(dense).rank);
    const auto moduli = q.coordinate_moduli();
    ASSERT_EQ(static_cast<int>(moduli.size()), q.coordinate_count());
    for (int c = 0; c < cols; ++c) {
      for (const auto& x : q.coordinates(m.columns[c])) ASSERT_EQ(x, 0);
    }
    for (int i = 0; i < q.coordinate_count(); ++i) {
      auto e = q.coordinates(q.generator(i));
      for (int t = 0; t < q.coordinate_count(); ++t) ASSERT_EQ(e[t], t == i ? 1 : 0);
    }
  }
}

TEST(Levels, Examples) {
  ReflectionFusion h2(2);
  OrthogonalFusion o;
  const auto hl = build_levels(h2, h2.fundamental(), 2, 2);
  EXPECT_EQ(as_set(hl[1].basis), (std::set<IrrepLabel>{Word{{}, 2}, Word{{1, 1}, 2}, Word{{2}, 2}}));
  EXPECT_EQ(hl[1].degree, 2);
  const auto ol = build_levels(o, o.fundamental(), 2, 2);
  EXPECT_EQ(as_set(ol[1].basis), (std::set<IrrepLabel>{SpinLabel{0}, SpinLabel{2}}));
  EXPECT_EQ(cokernel(phi_matrix(o, o.power(2), ol[0], ol[1]).dense()), (FGAbelianGroup{1, {}}));
  EXPECT_THROW(build_levels(o, o.fundamental(), 0, 2), Error);
}

TEST(Levels, SizesMatchWordCounts) {
  for (int s : {2, 3}) {
    ReflectionFusion ring(s);
    const auto levels = build_levels(ring, ring.fundamental(), s, 3);
    for (int j = 0; j <= 3; ++j) {
      std::size_t expected = 0;
      for (int d = 0; d <= j * s; d += s) expected += oracle::words_of_sum(d, s).size();
      EXPECT_EQ(levels[j].basis.size(), expected);
      for (std::size_t i = 1; i < levels[j].basis.size(); ++i) {
        const auto& a = std::get<Word>(levels[j].basis[i - 1]);
        const auto& b = std::get<Word>(levels[j].basis[i]);
        const int da = std::accumulate(a.letters.begin(), a.letters.end(), 0);
        const int db = std::accumulate(b.letters.begin(), b.letters.end(), 0);
        EXPECT_TRUE(da < db || (da == db && IrrepLabel(a) < IrrepLabel(b)));
      }
    }
  }
}

TEST(Levels, DiagramCommutes) {
  const std::vector<std::pair<std::shared_ptr<const FusionRing>, int>> cases = {
      {std::make_shared<OrthogonalFusion>(), 2}, {std::make_shared<PermutationFusion>(), 1},
      {std::make_shared<ReflectionFusion>(2), 2}, {std::make_shared<ReflectionFusion>(3), 3}};
  for (const auto& [ring, k0] : cases) {
    EXPECT_TRUE(check_diagram_commutes(*ring, ring->fundamental(), k0, build_levels(*ring, ring->fundamental(), k0, 4)))
        << ring->name();
  }
}

TEST(Cokernel, EngineAgreesWithDenseAndModularEnumeration) {
  ReflectionFusion h2(2);
  const auto levels = build_levels(h2, h2.fundamental(), 2, 2);
  const FusionVector beta = h2.power(2);
  for (int j = 1; j <= 2; ++j) {
    const auto phi = phi_matrix(h2, beta, levels[j - 1], levels[j]);
    const IntMatrix dense = phi.dense();
    const QuotientLattice q(phi, std::vector<long long>(levels[j].size(), 0));
    EXPECT_EQ(q.group(), cokernel(dense));
    for (int m : {2, 3, 4}) EXPECT_EQ(oracle::quotient_order_mod(dense, m), order_mod(cokernel(dense), m)) << j;
  }
}

TEST(KGroups, OrthogonalAndPermutationStabilize) {
  OrthogonalFusion o;
  PermutationFusion p;
  for (const auto& [ring, k0] : std::vector<std::pair<const FusionRing*, int>>{{&o, 2}, {&p, 1}}) {
    const auto r = k_groups(*ring, ring->fundamental(), k0, 8);
    SCOPED_TRACE(ring->name());
    EXPECT_TRUE(r.diagram_commutes);
    EXPECT_TRUE(r.stabilized);
    EXPECT_FALSE(r.non_stabilizing);
    EXPECT_EQ(r.K0, (FGAbelianGroup{1, {}}));
    EXPECT_TRUE(r.K1.is_trivial());
    EXPECT_TRUE(r.K1_stable);
    EXPECT_TRUE(r.unit_is_generator);
    for (const auto& level : r.levels) EXPECT_EQ(level.coker, (FGAbelianGroup{1, {}}));
  }
}

TEST(KGroups, ReflectionFamilyIsFreeAndGrowing) {
  for (int s : {2, 3}) {
    ReflectionFusion ring(s);
    const auto r = k_groups(ring, ring.fundamental(), s, 5);
    SCOPED_TRACE(s);
    EXPECT_TRUE(r.diagram_commutes);
    EXPECT_TRUE(r.K1.is_trivial());
    EXPECT_TRUE(r.non_stabilizing);
    for (int j = 0; j <= 5; ++j) {
      const auto& level = r.levels[j];
      EXPECT_TRUE(level.coker.is_free());
      EXPECT_EQ(level.ker_rank, 0);
      EXPECT_EQ(level.psi_ker_rank, 0);
      EXPECT_EQ(level.coker.free_rank, complement_count(j, s));
      if (j > 0) {
        EXPECT_GT(level.coker.free_rank, r.levels[j - 1].coker.free_rank);
        EXPECT_TRUE(level.connecting_identity.value_or(false));
        EXPECT_FALSE(level.connecting_iso.value_or(true));
      }
    }
  }
}

TEST(KGroups, RejectsShortSystems) {
  OrthogonalFusion o;
  EXPECT_THROW(k_groups(o, o.fundamental(), 2, 1), Error);
}

TEST(PhiStructure, Examples) {
  ReflectionFusion h2(2);
  ReflectionFusion h3(3);
  // φ(1) = r_11 + r_2 exactly: the trivial terms cancel
  FusionVector image = h2.power(2);
  image.add(Word{{}, 2}, -1);
  FusionVector expected;
  expected.add(Word{{1, 1}, 2}, 1);
  expected.add(Word{{2}, 2}, 1);
  EXPECT_EQ(image, expected);
  EXPECT_TRUE(phi_structure_check(h2, Word{{}, 2}));
  EXPECT_TRUE(phi_structure_check(h2, Word{{1}, 2}));
  EXPECT_TRUE(phi_structure_check(h3, Word{{2}, 3}));
  EXPECT_FALSE(phi_structure_check(ReflectionFusion(1), Word{{}, 1}));
  try {
    phi_structure_check(OrthogonalFusion(), Word{{1}, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::wrong_family);
  }
}

TEST(PhiStructure, AllWordsUpToDegreeSix) {
  for (int s : {2, 3}) {
    ReflectionFusion ring(s);
    for (const auto& x : oracle::words_up_to(6, s)) ASSERT_TRUE(phi_structure_check(ring, x)) << to_string(IrrepLabel(x));
  }
}

TEST(Growth, DegreeCountsDoubleEverySSteps) {
  for (int s : {2, 3}) {
    ReflectionFusion ring(s);
    const auto counts = degree_counts(ring, 12 + s);
    for (int d = 0; d <= 12 + s; ++d) EXPECT_EQ(counts[d], static_cast<int>(oracle::words_of_sum(d, s).size()));
    for (int l = 0; l <= 12; ++l) EXPECT_GE(counts[l + s], 2 * counts[l]) << "s=" << s << " l=" << l;
  }
}
