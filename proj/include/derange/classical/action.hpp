#pragma once

#include <string>

#include "../errors.hpp"

namespace derange {

// Hyperplane: nondegenerate hyperplane of the (2n+1)-dimensional orthogonal
// module of Sp(2n,q), q even; type gives its sign.
enum class ActionKind { Any, Nondegenerate, TotallySingular, Hyperplane };

inline std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Any: return "any";
    case ActionKind::Nondegenerate: return "nondegenerate";
    case ActionKind::TotallySingular: return "totally-singular";
    case ActionKind::Hyperplane: return "hyperplane";
  }
  return "?";
}

inline ActionKind parse_action_kind(const std::string& s) {
  if (s == "any" || s == "k-spaces") return ActionKind::Any;
  if (s == "nondegenerate" || s == "nondeg") return ActionKind::Nondegenerate;
  if (s == "totally-singular" || s == "ts") return ActionKind::TotallySingular;
  if (s == "hyperplane") return ActionKind::Hyperplane;
  throw UsageError("unknown action '" + s + "' (any, nondegenerate, totally-singular, hyperplane)");
}

// k is the subspace dimension; refined applies the small-q fixed-point caps.
struct ActionSpec {
  ActionKind kind = ActionKind::Any;
  int k = 1;
  int type = 0;
  bool refined = false;

  std::string str() const {
    std::string s = to_string(kind);
    if (kind != ActionKind::Hyperplane) s += "-" + std::to_string(k);
    if (type) s += type > 0 ? "+" : "-";
    if (refined) s += "-refined";
    return s;
  }
};

}  // namespace derange
