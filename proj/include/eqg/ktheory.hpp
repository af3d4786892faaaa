#pragma once

// The inductive system R_0 -> R_1 -> ... of free modules on irreducibles, with
// φ(a) = a(β − 1) and ψ(a) = aβ for β = fundamental^{⊗k0}. K_0 is read off the
// cokernels of φ together with the maps ψ induces between them, K_1 off ker φ.

#include "eqg/fusion.hpp"
#include "eqg/smith.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eqg {

struct LevelModule {
  int level = 0;   // index j; the module lives in degree j * k0
  int degree = 0;
  std::vector<IrrepLabel> basis;           // support of β^j, by degree then label
  std::vector<IrrepLabel> boundary_basis;  // labels of degree exactly `degree`
  std::map<IrrepLabel, int> index;         // label -> position in basis

  int size() const { return static_cast<int>(basis.size()); }
};

namespace detail {

/// Degrees of all irreducibles in fundamental powers up to `cap`.
inline std::map<IrrepLabel, int> degree_table(const FusionRing& ring, int cap) {
  std::map<IrrepLabel, int> out;
  for (const auto& [label, d] : irreducibles_up_to(ring, cap)) out.emplace(label, d);
  return out;
}

/// Pivot preference for the cokernel engine: the leading term of a(β − 1) is the
/// longest word, or the highest spin.
inline long long leading_weight(const IrrepLabel& label) {
  if (const auto* w = std::get_if<Word>(&label)) return w->length();
  if (const auto* s = std::get_if<SpinLabel>(&label)) return s->k;
  return std::get<FreeLabel>(label).k;
}

}  // namespace detail

/// Bases of R_j = span(support of β^j), j = 0..L, with β = fundamental^{⊗k0}.
inline std::vector<LevelModule> build_levels(const FusionRing& ring, const FusionVector& fundamental, int k0, int L) {
  if (k0 < 1) throw Error(ErrorKind::invalid_argument, "k0 must be positive");
  if (L < 0) throw Error(ErrorKind::invalid_argument, "level count must be nonnegative");
  const bool standard = fundamental == ring.fundamental();
  const FusionVector beta = standard ? ring.power(k0) : power_decompose(ring, fundamental, k0);
  const auto degrees = detail::degree_table(ring, standard ? L * k0 : 0);

  std::vector<LevelModule> levels;
  FusionVector current(ring.trivial());
  for (int j = 0; j <= L; ++j) {
    if (j > 0) current = standard ? ring.power(j * k0) : ring.multiply(current, beta);
    LevelModule m;
    m.level = j;
    m.degree = j * k0;
    std::vector<std::pair<int, IrrepLabel>> keyed;
    for (const auto& [label, mult] : current.terms()) {
      auto it = degrees.find(label);
      keyed.emplace_back(it == degrees.end() ? m.degree : it->second, label);
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [d, label] : keyed) {
      m.index.emplace(label, static_cast<int>(m.basis.size()));
      m.basis.push_back(label);
      if (d == m.degree) m.boundary_basis.push_back(label);
    }
    levels.push_back(std::move(m));
  }
  return levels;
}

namespace detail {

/// Matrix of a ↦ a ⊗ factor (minus a when `subtract_identity`) from `from` to `to`.
inline SparseIntMatrix level_map(const FusionRing& ring, const LevelModule& from, const LevelModule& to,
                                 const FusionVector& factor, bool subtract_identity) {
  SparseIntMatrix m(to.size(), from.size());
  for (int c = 0; c < from.size(); ++c) {
    FusionVector image = ring.multiply(FusionVector(from.basis[c]), factor);
    if (subtract_identity) image.add(from.basis[c], -1);
    for (const auto& [label, x] : image.terms()) {
      auto it = to.index.find(label);
      if (it == to.index.end()) {
        throw Error(ErrorKind::inconsistent_dimension, to_string(label) + " is missing from level " +
                                                           std::to_string(to.level));
      }
      m.columns[c].emplace(it->second, x);
    }
  }
  return m;
}

inline FusionVector step_element(const FusionRing& ring, const FusionVector& fundamental, int k0) {
  return fundamental == ring.fundamental() ? ring.power(k0) : power_decompose(ring, fundamental, k0);
}

inline std::vector<long long> row_priority(const LevelModule& m) {
  std::vector<long long> out;
  out.reserve(m.basis.size());
  const long long stride = static_cast<long long>(m.basis.size()) + 1;
  for (int i = 0; i < m.size(); ++i) out.push_back(leading_weight(m.basis[i]) * stride + i);
  return out;
}

}  // namespace detail

/// φ_j : R_j -> R_{j+1}, a ↦ a(β − 1).
inline SparseIntMatrix phi_matrix(const FusionRing& ring, const FusionVector& beta, const LevelModule& from,
                                  const LevelModule& to) {
  return detail::level_map(ring, from, to, beta, true);
}

/// ψ_j : R_j -> R_{j+1}, a ↦ aβ.
inline SparseIntMatrix psi_matrix(const FusionRing& ring, const FusionVector& beta, const LevelModule& from,
                                  const LevelModule& to) {
  return detail::level_map(ring, from, to, beta, false);
}

/// ψ_{j+1} φ_j = φ_{j+1} ψ_j for all consecutive levels.
inline bool check_diagram_commutes(const FusionRing& ring, const FusionVector& fundamental, int k0,
                                   const std::vector<LevelModule>& levels) {
  if (levels.size() < 3) return true;
  const FusionVector beta = detail::step_element(ring, fundamental, k0);
  std::vector<SparseIntMatrix> phi;
  std::vector<SparseIntMatrix> psi;
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    phi.push_back(phi_matrix(ring, beta, levels[j], levels[j + 1]));
    psi.push_back(psi_matrix(ring, beta, levels[j], levels[j + 1]));
  }
  for (std::size_t j = 0; j + 1 < phi.size(); ++j) {
    if (!(psi[j + 1] * phi[j] == phi[j + 1] * psi[j])) return false;
  }
  return true;
}

struct LevelReport {
  int level = 0;
  int degree = 0;
  int basis_size = 0;
  FGAbelianGroup coker;   // R_j / φ(R_{j-1}); R_0 itself at level 0
  int ker_rank = 0;       // of φ_{j-1}
  int psi_ker_rank = 0;   // of ψ_{j-1}
  int unit_pivots = 0;    // relations eliminated by a unit entry
  /// Induced map from the previous cokernel, columns in source coordinates.
  std::vector<std::vector<BigInt>> connecting_map;
  std::optional<bool> connecting_identity;  // [ψ(a)] = [a] for every basis label a of the previous level
  std::optional<bool> connecting_iso;
  std::vector<BigInt> unit_class;  // coordinates of the trivial label
};

struct InductiveLimitReport {
  std::string family;
  int k0 = 0;
  int L = 0;
  std::vector<LevelReport> levels;
  bool diagram_commutes = false;
  FGAbelianGroup K1;
  bool K1_stable = false;
  bool stabilized = false;
  std::optional<int> stabilized_from;
  FGAbelianGroup K0;  // the last cokernel
  std::vector<BigInt> unit_class;
  bool unit_is_generator = false;
  bool non_stabilizing = false;
};

namespace detail {

/// The induced map between two cokernels is onto and the groups agree, hence an isomorphism.
inline bool induced_is_iso(const std::vector<std::vector<BigInt>>& columns, const QuotientLattice& source,
                           const QuotientLattice& target) {
  if (!(source.group() == target.group())) return false;
  const auto moduli = target.coordinate_moduli();
  const int rows = target.coordinate_count();
  int extra = 0;
  for (const auto& d : moduli) extra += d != 0 ? 1 : 0;
  IntMatrix m(rows, static_cast<int>(columns.size()) + extra);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (int r = 0; r < rows; ++r) m(r, static_cast<int>(c)) = columns[c][r];
  }
  int c = static_cast<int>(columns.size());
  for (int r = 0; r < rows; ++r) {
    if (moduli[r] != 0) m(r, c++) = moduli[r];
  }
  return cokernel(m).is_trivial();
}

}  // namespace detail

/// Truncated inductive system over levels 0..L with cokernels, induced maps and the unit class.
inline InductiveLimitReport k_groups(const FusionRing& ring, const FusionVector& fundamental, int k0, int L) {
  if (L < 2) throw Error(ErrorKind::invalid_argument, "the inductive system needs L >= 2");
  const auto levels = build_levels(ring, fundamental, k0, L);
  const FusionVector beta = detail::step_element(ring, fundamental, k0);

  InductiveLimitReport report;
  report.family = ring.name();
  report.k0 = k0;
  report.L = L;
  report.diagram_commutes = check_diagram_commutes(ring, fundamental, k0, levels);

  std::vector<std::unique_ptr<QuotientLattice>> quotients;
  std::vector<SparseIntMatrix> psi;
  for (int j = 0; j <= L; ++j) {
    const LevelModule& here = levels[j];
    LevelReport lr;
    lr.level = j;
    lr.degree = here.degree;
    lr.basis_size = here.size();
    const auto priority = detail::row_priority(here);
    if (j == 0) {
      quotients.push_back(std::make_unique<QuotientLattice>(SparseIntMatrix(here.size(), 0), priority));
    } else {
      const LevelModule& prev = levels[j - 1];
      const SparseIntMatrix phi = phi_matrix(ring, beta, prev, here);
      psi.push_back(psi_matrix(ring, beta, prev, here));
      quotients.push_back(std::make_unique<QuotientLattice>(phi, priority));
      lr.ker_rank = prev.size() - quotients.back()->image_rank();
      lr.psi_ker_rank = prev.size() - QuotientLattice(psi.back(), priority).image_rank();
    }
    const QuotientLattice& q = *quotients.back();
    lr.coker = q.group();
    lr.unit_pivots = q.unit_pivots();
    lr.unit_class = q.coordinates({{here.index.at(ring.trivial()), BigInt(1)}});
    if (j > 0) {
      const QuotientLattice& source = *quotients[j - 1];
      const SparseIntMatrix& map = psi.back();
      for (int g = 0; g < source.coordinate_count(); ++g) {
        lr.connecting_map.push_back(q.coordinates(map.apply(source.generator(g))));
      }
      bool identity = true;
      const LevelModule& prev = levels[j - 1];
      for (int a = 0; a < prev.size() && identity; ++a) {
        const auto embedded = here.index.find(prev.basis[a]);
        if (embedded == here.index.end()) {
          identity = false;
          break;
        }
        identity = q.coordinates(map.columns[a]) == q.coordinates({{embedded->second, BigInt(1)}});
      }
      lr.connecting_identity = identity;
      lr.connecting_iso = detail::induced_is_iso(lr.connecting_map, source, q);
    }
    report.levels.push_back(std::move(lr));
  }

  const auto& last = report.levels.back();
  report.K1 = FGAbelianGroup{last.ker_rank, {}};
  report.K1_stable = report.levels[L - 1].ker_rank == last.ker_rank;
  report.K0 = last.coker;
  report.unit_class = last.unit_class;

  auto settled = [&](int j) {
    const auto& lr = report.levels[j];
    return lr.connecting_iso.value_or(false) && lr.connecting_identity.value_or(false);
  };
  report.stabilized = settled(L) && settled(L - 1);
  if (report.stabilized) {
    int from = L - 1;
    while (from > 1 && settled(from - 1)) --from;
    report.stabilized_from = from - 1;
  }
  report.non_stabilizing = !report.stabilized;
  report.unit_is_generator = report.K0.free_rank == 1 && report.K0.torsion.empty() && report.unit_class.size() == 1 &&
                             abs(report.unit_class[0]) == 1;
  return report;
}

/// Checks that r_x(r_1^s − 1) has coefficient exactly 1 on r_{x1...1} (s ones) and on r_{xs}.
/// For s = 1 the two labels coincide and the check fails.
inline bool phi_structure_check(const FusionRing& ring, const Word& x) {
  const int s = ring.modulus();
  if (s == 0) throw Error(ErrorKind::wrong_family, "phi_structure_check needs a word-labelled ring");
  ring.validate(x);
  const FusionVector beta = power_decompose(ring, FusionVector(make_word({1}, s)), s);
  FusionVector image = ring.multiply(FusionVector(x), beta);
  image.add(x, -1);
  std::vector<int> ones = x.letters;
  ones.insert(ones.end(), s, 1);
  std::vector<int> tail = x.letters;
  tail.push_back(s);
  const Word a = make_word(ones, s);
  const Word b = make_word(tail, s);
  if (a == b) return false;
  return image.coefficient(a) == 1 && image.coefficient(b) == 1;
}

/// Number of irreducibles of each exact degree 0..max_degree.
inline std::vector<int> degree_counts(const FusionRing& ring, int max_degree) {
  std::vector<int> out(max_degree + 1, 0);
  for (const auto& [label, d] : irreducibles_up_to(ring, max_degree)) ++out[d];
  return out;
}

}  // namespace eqg
