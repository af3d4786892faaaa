#pragma once

// JSON serialization of library objects (nlohmann::ordered_json, insertion-ordered keys).

#include "eqg/conditions.hpp"
#include "eqg/ktheory.hpp"

#include <json.hpp>

#include <limits>
#include <map>
#include <string>

namespace eqg {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(x);
  }
  return x.str();
}

inline Json to_json(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

inline Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (const auto& [r, c, v] : m.entries()) entries.push_back({r, c, to_string(v)});
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

/// Word labels without the modulus suffix, for output where the family fixes s.
inline std::string short_label(const IrrepLabel& label) {
  std::string text = to_string(label);
  if (std::holds_alternative<Word>(label)) text.erase(text.find('@'));
  return text;
}

/// Labels in full form, keys sorted lexicographically as strings.
inline Json to_json(const FusionVector& v) {
  std::map<std::string, BigInt> sorted;
  for (const auto& [label, m] : v.terms()) sorted.emplace(to_string(label), m);
  Json out = Json::object();
  for (const auto& [label, m] : sorted) out[label] = to_json(m);
  return out;
}

inline Json to_json(const ColoredPartition& p) {
  return Json{{"literal", to_literal(p)}, {"upper", p.upper_count()}, {"lower", p.lower_count()},
              {"blocks", p.block_count()}};
}

inline Json to_json(const FGAbelianGroup& g) {
  return Json{{"rank", g.free_rank}, {"torsion", to_json(g.torsion)}, {"text", to_string(g)}};
}

inline Json to_json(const C1Report& r) {
  Json out{{"status", to_string(r.status)}, {"degree_cap", r.degree_cap}, {"checked", r.witnesses.size()}};
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back({{"v", to_string(w.v)}, {"v_prime", to_string(w.v_prime)}, {"v_prime_level", w.v_prime_level}});
  }
  out["witnesses"] = std::move(ws);
  out["counterexample"] = r.counterexample ? Json(to_string(*r.counterexample)) : Json(nullptr);
  out["reason"] = r.reason;
  return out;
}

inline Json to_json(const C2Report& r) {
  return Json{{"status", to_string(r.status)},
              {"level_cap", r.level_cap},
              {"N", r.N ? Json(*r.N) : Json(nullptr)},
              {"k0", r.k0 ? Json(*r.k0) : Json(nullptr)},
              {"reason", r.reason}};
}

inline Json to_json(const CPReport& r) {
  Json out{{"k", r.k.value},
           {"k_exact", r.k.exact},
           {"max_points", r.max_points},
           {"saturated", r.saturated},
           {"double_pair_present", r.double_pair_present},
           {"four_block_present", r.four_block_present},
           {"clauses", r.clauses},
           {"cp1", to_string(r.cp1)},
           {"cp2", to_string(r.cp2)}};
  if (r.witness) {
    out["witness"] = {{"r", to_literal(r.witness->r)}, {"N", r.witness->N}, {"k0", r.witness->k0}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

inline Json to_json(const ConditionReport& r) {
  return Json{{"family", r.family},
              {"C1", to_json(r.c1)},
              {"C2", to_json(r.c2)},
              {"fusion_verdict", to_string(r.fusion_verdict())},
              {"CP", to_json(r.cp)},
              {"partition_verdict", to_string(r.partition_verdict())}};
}

inline Json to_json(const InductiveLimitReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json entry{{"level", l.level},
               {"degree", l.degree},
               {"basis_size", l.basis_size},
               {"coker", to_json(l.coker)},
               {"ker_rank", l.ker_rank},
               {"psi_ker_rank", l.psi_ker_rank}};
    if (l.connecting_identity) {
      entry["connecting_identity"] = *l.connecting_identity;
      entry["connecting_iso"] = *l.connecting_iso;
    }
    entry["unit_class"] = to_json(l.unit_class);
    levels.push_back(std::move(entry));
  }
  return Json{{"family", r.family},
              {"data", "fusion-level inductive limit"},
              {"k0", r.k0},
              {"L", r.L},
              {"levels", std::move(levels)},
              {"diagram_commutes", r.diagram_commutes},
              {"K1", to_json(r.K1)},
              {"K1_stable", r.K1_stable},
              {"K0_stabilized", r.stabilized},
              {"stabilized_from", r.stabilized_from ? Json(*r.stabilized_from) : Json(nullptr)},
              {"K0", to_json(r.K0)},
              {"unit_class", to_json(r.unit_class)},
              {"unit_is_generator", r.unit_is_generator},
              {"non_stabilizing", r.non_stabilizing}};
}

inline Json to_json(const ChainGroupResult& r) {
  return Json{{"order", r.order}, {"level_cap", r.level_cap}, {"level_class", r.level_class},
              {"label_count", r.label_count}};
}

inline Json to_json(const IntertwinerSpace& s) {
  Json basis = Json::array();
  for (const auto& p : s.basis) basis.push_back(to_literal(p));
  return Json{{"dim", s.dim}, {"candidates", s.candidates}, {"basis", std::move(basis)}};
}

inline Json to_json(const FunctorialityReport& r) {
  return Json{{"tensor", r.tensor}, {"composition", r.composition}, {"involution", r.involution}, {"all", r.all()}};
}

}  // namespace eqg
