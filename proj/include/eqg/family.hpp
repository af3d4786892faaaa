#pragma once

// The free easy quantum groups handled by this library.

#include "eqg/arith.hpp"

#include <string>

namespace eqg {

enum class Family { orthogonal, unitary, permutation, reflection };

struct FamilySpec {
  Family family = Family::orthogonal;
  int s = 1;  // only used by the reflection family H_n^{s+}

  std::string name() const {
    switch (family) {
      case Family::orthogonal: return "O+";
      case Family::unitary: return "U+";
      case Family::permutation: return "S+";
      case Family::reflection: return "H+(s=" + std::to_string(s) + ")";
    }
    return "?";
  }
};

inline FamilySpec parse_family(const std::string& name, int s = 1) {
  if (name == "O+" || name == "O") return {Family::orthogonal, 1};
  if (name == "U+" || name == "U") return {Family::unitary, 1};
  if (name == "S+" || name == "S") return {Family::permutation, 1};
  if (name == "H+" || name == "H") {
    if (s < 1) throw Error(ErrorKind::invalid_argument, "H+ needs s >= 1");
    return {Family::reflection, s};
  }
  throw Error(ErrorKind::parse, "unknown family '" + name + "' (expected O+, U+, S+ or H+)");
}

}  // namespace eqg
