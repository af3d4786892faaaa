#pragma once

// Command-line front end. run_cli() is the whole program minus process plumbing,
// so tests can drive it in-process.

#include "eqg/eqg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace eqg::cli {

enum ExitCode { ok = 0, usage = 2, precondition = 3, non_stabilizing = 4 };

struct RunConfig {
  std::string family = "O+";
  int s = 0;
  int n = 2;
  int max_points = 8;
  int degree_cap = 6;
  int level_cap = 10;
  int L = 5;
  std::string format = "json";
  std::string output;
};

namespace detail {

inline FamilySpec family_of(const RunConfig& cfg) {
  const bool reflection = cfg.family == "H+" || cfg.family == "H";
  if (reflection && cfg.s < 1) throw Error(ErrorKind::parse, "H+ requires --s with s >= 1");
  return parse_family(cfg.family, reflection ? cfg.s : 1);
}

inline MapOptions map_options() {
  MapOptions options;
  if (const char* env = std::getenv("EQG_MAX_ENTRIES")) {
    try {
      options.max_entries = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, std::string("EQG_MAX_ENTRIES is not a number: ") + env);
    }
  }
  return options;
}

inline void need_args(const std::vector<std::string>& args, std::size_t count, const std::string& action) {
  if (args.size() != count) {
    throw Error(ErrorKind::parse, action + " expects " + std::to_string(count) + " argument(s), got " +
                                      std::to_string(args.size()));
  }
}

inline Corner parse_corner(const std::string& text) {
  if (text == "UL") return Corner::upper_left;
  if (text == "UR") return Corner::upper_right;
  if (text == "LL") return Corner::lower_left;
  if (text == "LR") return Corner::lower_right;
  throw Error(ErrorKind::parse, "corner must be one of UL, UR, LL, LR");
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

/// A result in both renderings.
struct Output {
  Json json;
  std::string text;
};

inline Output partition_output(const ColoredPartition& p) { return {to_json(p), to_literal(p)}; }

inline Output bool_output(bool b) { return {Json(b), yes_no(b)}; }

// ---------------------------------------------------------------------------

inline Output cmd_partition(const std::string& action, const std::vector<std::string>& args, const RunConfig& cfg,
                            const std::string& corner) {
  auto lit = [&](std::size_t i) { return parse_partition(args[i]); };
  if (action == "compose") {
    // The first literal sits on top and is applied first.
    need_args(args, 2, action);
    const Composition c = compose(lit(1), lit(0));
    Json j{{"partition", to_json(c.partition)}, {"removed_blocks", c.removed_blocks}};
    return {j, to_literal(c.partition) + "\nremoved_blocks " + std::to_string(c.removed_blocks)};
  }
  if (action == "tensor") {
    need_args(args, 2, action);
    return partition_output(tensor(lit(0), lit(1)));
  }
  if (action == "involute") {
    need_args(args, 1, action);
    return partition_output(involute(lit(0)));
  }
  if (action == "rotate") {
    need_args(args, 1, action);
    return partition_output(rotate(lit(0), parse_corner(corner)));
  }
  if (action == "noncrossing") {
    need_args(args, 1, action);
    return bool_output(is_noncrossing(lit(0)));
  }
  if (action == "projective") {
    need_args(args, 1, action);
    return bool_output(is_projective(lit(0)));
  }
  if (action == "precedes") {
    need_args(args, 2, action);
    return bool_output(precedes(lit(0), lit(1)));
  }
  if (action == "counts") {
    need_args(args, 1, action);
    const ColorCounts c = color_counts(lit(0));
    return {Json{{"white", c.white}, {"black", c.black}, {"c", c.c}},
            "white " + std::to_string(c.white) + "\nblack " + std::to_string(c.black) + "\nc " + std::to_string(c.c)};
  }
  if (action == "kparam") {
    need_args(args, 0, action);
    const auto sample = generate_category(family_generators(family_of(cfg)), cfg.max_points);
    const KParam k = k_param(sample);
    return {Json{{"k", k.value}, {"exact", k.exact}, {"max_points", cfg.max_points}},
            std::to_string(k.value) + (k.exact ? "" : " (bounded sample, not saturated)")};
  }
  throw Error(ErrorKind::parse, "unknown partition action '" + action + "'");
}

inline Output cmd_category(const RunConfig& cfg, const std::vector<int>& shape) {
  const FamilySpec spec = family_of(cfg);
  const auto sample = generate_category(family_generators(spec), cfg.max_points);
  const KParam k = k_param(sample);
  Json j{{"family", spec.name()},          {"max_points", cfg.max_points},
         {"saturated", sample.saturated()}, {"passes", sample.passes()},
         {"one_row_count", sample.one_row_count()}, {"k", k.value}};
  std::ostringstream text;
  text << spec.name() << " up to " << cfg.max_points << " points: " << sample.one_row_count()
       << " one-row members, k = " << k.value << (sample.saturated() ? "" : " (not saturated)");
  if (!shape.empty()) {
    if (shape.size() != 2) throw Error(ErrorKind::parse, "--shape takes two integers k l");
    Json members = Json::array();
    for (const auto& p : sample.members(shape[0], shape[1])) {
      members.push_back(to_literal(p));
      text << "\n" << to_literal(p);
    }
    j["shape"] = shape;
    j["members"] = std::move(members);
  }
  return {j, text.str()};
}

inline Output cmd_fusion(const std::string& op, const std::vector<std::string>& args, const RunConfig& cfg, int level,
                         int cap) {
  const FamilySpec spec = family_of(cfg);
  const auto ring = make_fusion_ring(spec);
  const std::optional<int> s = ring->modulus() > 0 ? std::optional<int>(ring->modulus()) : std::nullopt;
  auto label = [&](std::size_t i) {
    const IrrepLabel l = parse_label(args[i], s);
    ring->validate(l);
    return l;
  };
  auto vector_output = [&](const FusionVector& v) {
    std::string text;
    for (const auto& [l, m] : v.terms()) text += (text.empty() ? "" : " + ") + (m == 1 ? "" : m.str() + "*") + short_label(l);
    return Output{to_json(v), text.empty() ? "0" : text};
  };
  if (op == "decompose") {
    need_args(args, 2, op);
    return vector_output(ring->decompose(label(0), label(1)));
  }
  if (op == "power") {
    need_args(args, 0, op);
    if (level < 0) throw Error(ErrorKind::invalid_argument, "--level must be nonnegative");
    return vector_output(ring->power(level));
  }
  if (op == "degree") {
    need_args(args, 1, op);
    const int d = degree(*ring, label(0), cap);
    return {Json(d), std::to_string(d)};
  }
  if (op == "chaingroup") {
    need_args(args, 0, op);
    const ChainGroupResult r = chain_group(*ring, cap);
    return {to_json(r), r.order == 0 ? "undetermined up to level " + std::to_string(cap) : std::to_string(r.order)};
  }
  if (op == "dim") {
    need_args(args, 1, op);
    const BigInt d = ring->dim(label(0), cfg.n);
    return {to_json(d), d.str()};
  }
  if (op == "length") {
    need_args(args, 1, op);
    const int l = length(label(0));
    return {Json(l), std::to_string(l)};
  }
  throw Error(ErrorKind::parse, "unknown fusion operation '" + op + "'");
}

inline Output cmd_conditions(const RunConfig& cfg) {
  const ConditionReport r = evaluate_conditions(family_of(cfg), cfg.degree_cap, cfg.level_cap, cfg.max_points);
  std::ostringstream text;
  text << r.family << "\n";
  text << "C1   " << to_string(r.c1.status) << " (" << r.c1.reason << ")\n";
  text << "C2   " << to_string(r.c2.status);
  if (r.c2.N) text << " N=" << *r.c2.N << " k0=" << *r.c2.k0;
  text << " (" << r.c2.reason << ")\n";
  text << "CP1  " << to_string(r.cp.cp1) << "\nCP2  " << to_string(r.cp.cp2) << "\nk    " << r.cp.k.value
       << "\nclauses";
  for (const auto& c : r.cp.clauses) text << " " << c;
  return {to_json(r), text.str()};
}

inline Output cmd_ktheory(const RunConfig& cfg, bool strict, int& exit_code) {
  const FamilySpec spec = family_of(cfg);
  const auto ring = make_fusion_ring(spec);
  const C2Report c2 = check_c2(*ring, cfg.level_cap);
  if (!c2.k0) {
    throw Error(ErrorKind::invalid_argument, spec.name() + ": no k0 within level cap " + std::to_string(cfg.level_cap) +
                                                 " (" + c2.reason + ")");
  }
  const InductiveLimitReport r = k_groups(*ring, ring->fundamental(), *c2.k0, cfg.L);
  if (strict && r.non_stabilizing) exit_code = non_stabilizing;
  std::ostringstream text;
  text << r.family << " k0=" << r.k0 << " L=" << r.L << "\n";
  for (const auto& l : r.levels) {
    text << "level " << l.level << "  basis " << l.basis_size << "  coker " << to_string(l.coker) << "  ker "
         << l.ker_rank << "\n";
  }
  text << "K1 = " << to_string(r.K1) << "\n";
  if (r.stabilized) {
    text << "K0 = " << to_string(r.K0) << "\nunit_class =";
    for (const auto& x : r.unit_class) text << " " << x;
  } else {
    text << "K0 not stabilized by level " << r.L << "; last cokernel " << to_string(r.K0);
  }
  return {to_json(r), text.str()};
}

inline Output cmd_intertwiners(const RunConfig& cfg, int k, int l) {
  const auto sample = generate_category(family_generators(family_of(cfg)), cfg.max_points);
  const IntertwinerSpace space = intertwiner_dim(sample, k, l, cfg.n, map_options());
  Json j = to_json(space);
  j["saturated"] = sample.saturated();
  return {j, std::to_string(space.dim)};
}

}  // namespace detail

/// Runs the program on argv-style arguments (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for free easy quantum groups"};
  app.name("eqg");
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", cfg.output, "Write output to this file");

  auto family_options = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "O+, S+, U+ or H+");
    sub->add_option("--s", cfg.s, "Parameter s of H+");
  };

  std::string action;
  std::vector<std::string> items;
  std::string corner = "UL";
  auto* partition = app.add_subcommand("partition", "Partition operations");
  partition->add_option("action", action, "compose|tensor|involute|rotate|noncrossing|projective|precedes|counts|kparam")
      ->required();
  partition->add_option("literals", items, "Partition literals");
  partition->add_option("--corner", corner, "UL, UR, LL or LR");
  partition->add_option("--max-points", cfg.max_points);
  family_options(partition);

  std::vector<int> shape;
  auto* category = app.add_subcommand("category", "Generate a category of partitions");
  family_options(category);
  category->add_option("--max-points", cfg.max_points);
  category->add_option("--shape", shape, "List the members of C(k,l)")->expected(2);

  int level = 1;
  int cap = 12;
  auto* fusion = app.add_subcommand("fusion", "Fusion rules");
  fusion->add_option("op", action, "decompose|power|degree|chaingroup|dim|length")->required();
  fusion->add_option("labels", items, "Irreducible labels");
  family_options(fusion);
  fusion->add_option("--n", cfg.n);
  fusion->add_option("--level", level, "Tensor power for 'power'");
  fusion->add_option("--cap", cap, "Level cap for degree and chaingroup");

  auto* conditions = app.add_subcommand("conditions", "Conditions C1, C2, CP1, CP2");
  family_options(conditions);
  conditions->add_option("--degree-cap", cfg.degree_cap);
  conditions->add_option("--level-cap", cfg.level_cap);
  conditions->add_option("--max-points", cfg.max_points);

  bool strict = false;
  auto* ktheory = app.add_subcommand("ktheory", "Inductive limit of the cokernels of phi");
  family_options(ktheory);
  ktheory->add_option("--L", cfg.L, "Number of levels");
  ktheory->add_option("--level-cap", cfg.level_cap);
  ktheory->add_flag("--strict", strict, "Exit with code 4 when the system does not stabilize");

  int k = 0;
  int l = 2;
  auto* intertwiners = app.add_subcommand("intertwiners", "Dimension of the span of T_p");
  family_options(intertwiners);
  intertwiners->add_option("--k", k);
  intertwiners->add_option("--l", l);
  intertwiners->add_option("--n", cfg.n);
  intertwiners->add_option("--max-points", cfg.max_points);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  int exit_code = ok;
  detail::Output result;
  try {
    for (int* bound : {&cfg.max_points, &cfg.degree_cap, &cfg.level_cap, &cfg.L}) {
      if (*bound < 1) throw Error(ErrorKind::invalid_argument, "bounds must be positive");
    }
    if (*partition) {
      result = detail::cmd_partition(action, items, cfg, corner);
    } else if (*category) {
      result = detail::cmd_category(cfg, shape);
    } else if (*fusion) {
      result = detail::cmd_fusion(action, items, cfg, level, cap);
    } else if (*conditions) {
      result = detail::cmd_conditions(cfg);
    } else if (*ktheory) {
      result = detail::cmd_ktheory(cfg, strict, exit_code);
    } else {
      result = detail::cmd_intertwiners(cfg, k, l);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::parse ? usage : precondition;
  }

  const std::string rendered = cfg.format == "json" ? result.json.dump(2) : result.text;
  if (cfg.output.empty()) {
    out << rendered << "\n";
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot open " << cfg.output << "\n";
      return precondition;
    }
    file << rendered << "\n";
  }
  return exit_code;
}

}  // namespace eqg::cli
