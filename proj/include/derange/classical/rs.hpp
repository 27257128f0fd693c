#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "../partitions.hpp"
#include "components.hpp"

namespace derange {

enum class RSKind { RegularSemisimple, StronglyRegularSemisimple, EigenvalueFree, MeanD };

inline std::string to_string(RSKind k) {
  switch (k) {
    case RSKind::RegularSemisimple: return "rs";
    case RSKind::StronglyRegularSemisimple: return "srs";
    case RSKind::EigenvalueFree: return "eigenvalue-free";
    case RSKind::MeanD: return "mean-D";
  }
  return "?";
}

inline RSKind parse_rs_kind(const std::string& s) {
  if (s == "rs") return RSKind::RegularSemisimple;
  if (s == "srs") return RSKind::StronglyRegularSemisimple;
  if (s == "ef" || s == "eigenvalue-free") return RSKind::EigenvalueFree;
  if (s == "mean-d" || s == "meanD" || s == "D") return RSKind::MeanD;
  throw UsageError("unknown statistic '" + s + "' (rs, srs, ef, mean-d)");
}

// SL and SU reuse the GL and U series; they agree only as n -> infinity.
inline bool asymptotic_only(Family f) { return f == Family::SL || f == Family::SU; }

namespace detail {

inline TruncatedSeries with_constant(TruncatedSeries s, const Rational& c0) {
  return s - TruncatedSeries::constant(s.order(), s[0] - c0);
}

[[noreturn]] inline void unsupported(const GroupSpec& g, RSKind k, const std::string& why) {
  throw UsageError(to_string(k) + " series for " + to_string(g.family) + " at q = " + std::to_string(g.q) +
                   " is not available: " + why);
}

// Sum and Diff series of the orthogonal O-sum normalization for one statistic.
inline std::pair<TruncatedSeries, TruncatedSeries> orth_pair(long q, int N, RSKind kind) {
  auto S = orth_sum_model(q, N), D = orth_diff_model(q, N);
  switch (kind) {
    case RSKind::RegularSemisimple: return {rs_product(S, true), rs_product(D, true)};
    case RSKind::StronglyRegularSemisimple: return {rs_product(S, false), rs_product(D, false)};
    case RSKind::EigenvalueFree: return {eigenvalue_free_product(S), eigenvalue_free_product(D)};
    case RSKind::MeanD: return {mean_d_product(S).derivative, mean_d_product(D).derivative};
  }
  throw UsageError("unknown statistic");
}

}  // namespace detail

// Coefficient n: proportion of the rank-n group with the property, or E[D].
inline TruncatedSeries rs_series(const GroupSpec& g, RSKind kind, int order) {
  require(order >= 1, "series order must be at least 1");
  g.validate();
  const long q = g.q;
  const int N = order;
  const bool odd = g.field().odd();
  const Rational c0 = kind == RSKind::MeanD ? 0 : 1;
  switch (g.family) {
    case Family::GL:
    case Family::SL:
    case Family::U:
    case Family::SU: {
      const bool unitary = is_unitary(g.family);
      if (kind == RSKind::StronglyRegularSemisimple) detail::unsupported(g, kind, "strong regularity is an orthogonal notion");
      auto m = unitary ? unitary_model(q, N) : gl_model(q, N);
      if (kind == RSKind::RegularSemisimple) return rs_product(m, true);
      if (kind == RSKind::EigenvalueFree) return eigenvalue_free_product(m);
      return mean_d_product(m).derivative;
    }
    case Family::Sp: {
      if (kind == RSKind::StronglyRegularSemisimple) detail::unsupported(g, kind, "strong regularity is an orthogonal notion");
      auto m = sp_model(q, N);
      if (kind == RSKind::RegularSemisimple) return rs_product(m, true);
      if (kind == RSKind::EigenvalueFree) return eigenvalue_free_product(m);
      return mean_d_product(m).derivative * Rational(2);
    }
    case Family::SOOdd: {
      if (kind == RSKind::EigenvalueFree) detail::unsupported(g, kind, "odd-dimensional SO always has eigenvalue 1");
      if (kind == RSKind::MeanD) detail::unsupported(g, kind, "mean D is implemented for GL, U, Sp and O+-");
      return rs_product(so_odd_model(q, N), kind == RSKind::RegularSemisimple);
    }
    case Family::SOPlus:
    case Family::SOMinus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      const bool omega = g.family == Family::OmegaPlus || g.family == Family::OmegaMinus;
      if (omega && odd) detail::unsupported(g, kind, "finite-n Omega in odd characteristic is exposed only through limits");
      if (kind == RSKind::MeanD) detail::unsupported(g, kind, "mean D is implemented for GL, U, Sp and O+-");
      auto [S, D] = detail::orth_pair(q, N, kind);
      const int sign = orthogonal_sign(g.family);
      return detail::with_constant(sign > 0 ? S + D : S - D, c0);
    }
    case Family::OPlus:
    case Family::OMinus: {
      if (odd && (kind == RSKind::RegularSemisimple || kind == RSKind::StronglyRegularSemisimple))
        detail::unsupported(g, kind, "reflection-type elements of O+-(2n,q), q odd, break the Sum/Diff conversion");
      auto [S, D] = detail::orth_pair(q, N, kind);
      const int sign = orthogonal_sign(g.family);
      if (kind == RSKind::MeanD) return detail::with_constant(sign > 0 ? S + D : S - D, 0);
      return detail::with_constant((sign > 0 ? S + D : S - D) * frac(1, 2), c0);
    }
  }
  throw UsageError("unknown family");
}

inline Rational rs_proportion(const GroupSpec& g, RSKind kind) {
  require(g.n >= 0, "rank must be non-negative");
  return rs_series(g, kind, std::max(1, g.n)).coefficient(g.n);
}

inline Rational mean_D(const GroupSpec& g, int n) {
  require(n >= 0, "n must be non-negative");
  switch (g.family) {
    case Family::GL:
    case Family::U:
    case Family::Sp:
    case Family::OPlus:
    case Family::OMinus: break;
    default: throw UsageError("mean D is implemented for GL, U, Sp and O+-, not " + to_string(g.family));
  }
  GroupSpec h = g;
  h.n = n;
  return rs_proportion(h, RSKind::MeanD);
}

// 2 / (q (1-1/q)^3 (1-q^{-1/2}))
inline double mean_D_bound_c1(long q) {
  require(q >= 2, "q must be at least 2");
  const double x = 1.0 / static_cast<double>(q);
  return 2.0 / (static_cast<double>(q) * std::pow(1 - x, 3) * (1 - std::sqrt(x)));
}

// (q-1)/(q+1) (q^n - (-1)^n)
inline Integer rs_class_count_gl(int n, long q) {
  require(n >= 1, "n must be positive");
  field_size(q);
  Integer t = ipow(q, static_cast<unsigned long>(n)) - (n % 2 ? -1 : 1);
  return t * (q - 1) / (q + 1);
}

}  // namespace derange
