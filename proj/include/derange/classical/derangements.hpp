#pragma once

#include <algorithm>
#include <string>

#include "../partitions.hpp"
#include "action.hpp"
#include "rs.hpp"

namespace derange {

// Generating-function side of derangement proportions.  Available:
//   GL     any k-space (finite n via class types, n <= 12)
//   U      any line, nondegenerate line, totally singular line
//   Sp     line (every line is totally singular)
// Coefficient n of derangement_series is the proportion in the rank-n group.

namespace detail {

// sum over lambda with no part equal to 1 of (-x)^|lambda| w(lambda, -q)
inline TruncatedSeries unitary_no_singleton_atom(long q, int N) {
  std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
  const Rational Q = -Rational(q);
  for (int n = 0; n <= N; ++n) {
    Rational s = 0;
    for (auto& lam : enumerate_partitions(n))
      if (lam.multiplicity(1) == 0) s += stong_weight(lam, Q);
    c[n] = n % 2 ? -s : s;
  }
  return TruncatedSeries(N, std::move(c));
}

[[noreturn]] inline void no_derangement_gf(const GroupSpec& g, const ActionSpec& a) {
  throw UsageError("no generating function for derangements of " + to_string(g.family) + " on " + a.str() +
                   " subspaces (available: GL any k, U lines, Sp lines)");
}

}  // namespace detail

inline bool derangement_series_available(const GroupSpec& g, const ActionSpec& a) {
  if (a.k != 1 || a.type != 0 || a.refined) return false;
  switch (g.family) {
    case Family::GL: return a.kind == ActionKind::Any;
    case Family::U: return a.kind != ActionKind::Hyperplane;
    case Family::Sp: return a.kind == ActionKind::Any || a.kind == ActionKind::TotallySingular;
    default: return false;
  }
}

inline TruncatedSeries derangement_series(const GroupSpec& g, const ActionSpec& a, int order) {
  require(order >= 1, "series order must be at least 1");
  g.validate();
  if (!derangement_series_available(g, a)) detail::no_derangement_gf(g, a);
  const long q = g.q;
  const int N = order;
  if (g.family != Family::U || a.kind == ActionKind::Any) return rs_series(g, RSKind::EigenvalueFree, N);
  const FieldSize F = field_size(q);
  const Integer self_dual = count(PolyCountKind::NTilde, F, 1);
  TruncatedSeries base = geometric(N);
  TruncatedSeries A = atom_minus(Rational(q), N);
  if (a.kind == ActionKind::Nondegenerate) {
    // No eigenvalue of norm 1 with a Jordan block of size 1.
    auto B = detail::unitary_no_singleton_atom(q, N);
    return mul(base, pow_int(mul(B, inverse(A)), self_dual));
  }
  // Totally singular: norm-1 eigenvalues only with a single anisotropic eigenvector,
  // and no eigenvalue outside the norm-1 group.
  auto single = mul(TruncatedSeries::binomial(N, 1, frac(1, q + 1)), inverse(A));
  auto pair = embed(inverse(atom_plus(Rational(q * q), N / 2)), 2, N);
  return mul(base, mul(pow_int(single, self_dual), pow_int(pair, count(PolyCountKind::MTilde, F, 1))));
}

// GL(n,q) elements fixing no k-space: class types whose primary dimensions
// deg(phi) * j, 0 <= j <= |lambda_phi|, cannot sum to k.
inline Rational gl_derangement_proportion_types(int n, long q, int k) {
  require(k >= 1 && k < n, "k must lie in 1..n-1");
  Rational total = 0;
  for (auto& t : gl_class_types(n, q)) {
    std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
    reach[0] = 1;
    for (auto& e : t.datum.entries)
      for (int j = 0; j < e.lambda.size(); ++j)
        for (int s = n; s >= e.degree; --s)
          if (reach[s - e.degree]) reach[s] = 1;
    if (!reach[k]) total += t.weight();
  }
  return total;
}

inline Rational derangement_proportion_gf(const GroupSpec& g, const ActionSpec& a) {
  require(g.n >= 1, "rank must be positive");
  if (g.family == Family::GL && a.kind == ActionKind::Any && a.type == 0 && !a.refined && a.k >= 2) {
    if (a.k >= g.n) throw UsageError("k must be below n");
    return gl_derangement_proportion_types(g.n, g.q, a.k);
  }
  return derangement_series(g, a, std::max(1, g.n)).coefficient(g.n);
}

}  // namespace derange
