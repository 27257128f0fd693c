#pragma once

#include <cctype>
#include <string>

#include "polycount.hpp"
#include "rational.hpp"

namespace derange {

// O+/O- (full orthogonal groups) are here for the oracle and the D statistic.
enum class Family { GL, SL, U, SU, Sp, SOOdd, SOPlus, SOMinus, OmegaPlus, OmegaMinus, OPlus, OMinus };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::U: return "U";
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::SOOdd: return "SO";
    case Family::SOPlus: return "SO+";
    case Family::SOMinus: return "SO-";
    case Family::OmegaPlus: return "Omega+";
    case Family::OmegaMinus: return "Omega-";
    case Family::OPlus: return "O+";
    case Family::OMinus: return "O-";
  }
  return "?";
}

inline Family parse_family(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "gl") return Family::GL;
  if (s == "sl") return Family::SL;
  if (s == "u" || s == "gu") return Family::U;
  if (s == "su") return Family::SU;
  if (s == "sp") return Family::Sp;
  if (s == "so" || s == "so-odd" || s == "so-odd-dim") return Family::SOOdd;
  if (s == "so+" || s == "soplus") return Family::SOPlus;
  if (s == "so-" || s == "sominus") return Family::SOMinus;
  if (s == "omega+" || s == "omegaplus" || s == "om+") return Family::OmegaPlus;
  if (s == "omega-" || s == "omegaminus" || s == "om-") return Family::OmegaMinus;
  if (s == "o+" || s == "oplus") return Family::OPlus;
  if (s == "o-" || s == "ominus") return Family::OMinus;
  throw UsageError("unknown group family '" + s + "'");
}

inline bool is_orthogonal(Family f) {
  return f == Family::SOOdd || f == Family::SOPlus || f == Family::SOMinus || f == Family::OmegaPlus ||
         f == Family::OmegaMinus || f == Family::OPlus || f == Family::OMinus;
}

inline bool is_unitary(Family f) { return f == Family::U || f == Family::SU; }

// Sign of the even-dimensional orthogonal type, 0 otherwise.
inline int orthogonal_sign(Family f) {
  if (f == Family::SOPlus || f == Family::OmegaPlus || f == Family::OPlus) return 1;
  if (f == Family::SOMinus || f == Family::OmegaMinus || f == Family::OMinus) return -1;
  return 0;
}

// n is the rank parameter: dimension n for GL/U, 2n for Sp and even orthogonal,
// 2n+1 for SOOdd.
struct GroupSpec {
  Family family = Family::GL;
  long q = 2;
  int n = 1;

  int dimension() const {
    switch (family) {
      case Family::GL:
      case Family::SL:
      case Family::U:
      case Family::SU: return n;
      case Family::SOOdd: return 2 * n + 1;
      default: return 2 * n;
    }
  }
  FieldSize field() const { return field_size(q); }
  std::string str() const {
    std::string s = to_string(family) + "(" + std::to_string(dimension()) + "," + std::to_string(q) + ")";
    return s;
  }
  void validate() const {
    const FieldSize F = field_size(q);
    require(n >= 0, "rank must be non-negative");
    if (family == Family::SOOdd || family == Family::SOPlus || family == Family::SOMinus)
      require(F.odd(), to_string(family) + " is handled for odd q only; use Omega+/- or O+/- in even characteristic");
  }
};

inline Integer group_order(const GroupSpec& g) {
  const long q = g.q;
  const int n = g.n;
  auto P = [](long b, long e) { return ipow(b, static_cast<unsigned long>(e)); };
  Integer r = 1;
  switch (g.family) {
    case Family::GL:
    case Family::SL: {
      for (int i = 0; i < n; ++i) r *= P(q, n) - P(q, i);
      if (g.family == Family::SL) r /= q - 1;
      return r;
    }
    case Family::U:
    case Family::SU: {
      r = P(q, static_cast<long>(n) * (n - 1) / 2);
      for (int i = 1; i <= n; ++i) r *= P(q, i) - (i % 2 ? -1 : 1);
      if (g.family == Family::SU) r /= q + 1;
      return r;
    }
    case Family::Sp: {
      r = P(q, static_cast<long>(n) * n);
      for (int i = 1; i <= n; ++i) r *= P(q, 2 * i) - 1;
      return r;
    }
    case Family::SOOdd: {
      r = P(q, static_cast<long>(n) * n);
      for (int i = 1; i <= n; ++i) r *= P(q, 2 * i) - 1;
      return r;
    }
    default: {
      const int eps = orthogonal_sign(g.family);
      if (n == 0) return 1;
      r = 2 * P(q, static_cast<long>(n) * (n - 1)) * (P(q, n) - eps);
      for (int i = 1; i < n; ++i) r *= P(q, 2 * i) - 1;
      if (g.family != Family::OPlus && g.family != Family::OMinus) r /= 2;
      return r;
    }
  }
}

}  // namespace derange
