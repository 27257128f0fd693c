#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "../weylstats.hpp"
#include "action.hpp"
#include "limits.hpp"

namespace derange {

// Which rs notion the Weyl correspondence controls for (g, a).
inline RSKind weyl_rs_kind(const GroupSpec& g, const ActionSpec& a) {
  const bool orth = g.family == Family::SOOdd || g.family == Family::SOPlus || g.family == Family::SOMinus ||
                    g.family == Family::OmegaPlus || g.family == Family::OmegaMinus;
  if (orth && a.kind == ActionKind::Nondegenerate && a.type != 0 && g.field().odd())
    return RSKind::StronglyRegularSemisimple;
  return RSKind::RegularSemisimple;
}

namespace detail {

[[noreturn]] inline void unmatched(const GroupSpec& g, const ActionSpec& a, const std::string& why) {
  throw UsageError("no Weyl correspondence for " + to_string(g.family) + " at q = " + std::to_string(g.q) + " on " +
                   a.str() + ": " + why);
}

inline int half_dimension(const GroupSpec& g, const ActionSpec& a) {
  if (a.k % 2) unmatched(g, a, "nondegenerate subspaces here have even dimension 2k");
  return a.k / 2;
}

inline WeylConstraint fixing(WeylGroup w, int k, FixMode mode) {
  WeylConstraint c;
  c.group = w;
  c.fix = FixKSet{k, mode, true};
  return c;
}

inline FixMode parity_mode(int type) { return type > 0 ? FixMode::NegParityEven : FixMode::NegParityOdd; }

}  // namespace detail

// The Weyl-group event whose probability bounds "(strongly) regular semisimple
// and fixing a subspace of kind a" in g, as a union of disjoint constraints.
inline std::vector<WeylConstraint> weyl_constraints_for(const GroupSpec& g, const ActionSpec& a) {
  const long q = g.q;
  require(a.k >= 1, "subspace dimension must be positive");
  using detail::unmatched;
  switch (g.family) {
    case Family::GL:
    case Family::SL: {
      if (a.kind != ActionKind::Any || a.type) unmatched(g, a, "GL and SL act on arbitrary k-spaces");
      auto c = detail::fixing(WeylGroup::Sn, a.k, FixMode::Any);
      if (a.refined) c.fixed_points = Cap::at_most(static_cast<int>(q - 1));
      return {c};
    }
    case Family::U:
    case Family::SU: {
      if (a.type || a.refined) unmatched(g, a, "no type or refinement for unitary subspaces");
      if (a.kind == ActionKind::Nondegenerate) return {detail::fixing(WeylGroup::Sn, a.k, FixMode::Any)};
      if (a.kind == ActionKind::TotallySingular) return {detail::fixing(WeylGroup::Sn, 2 * a.k, FixMode::EvenOnly)};
      unmatched(g, a, "unitary actions are nondegenerate or totally singular");
    }
    case Family::Sp: {
      if (a.kind == ActionKind::Hyperplane) {
        if (g.field().odd()) unmatched(g, a, "the orthogonal hyperplane action needs even q");
        if (a.type == 0) unmatched(g, a, "hyperplanes need a type (+1 or -1)");
        WeylConstraint c;
        c.group = WeylGroup::Bn;
        c.neg_parity = a.type > 0 ? Parity::Even : Parity::Odd;
        if (a.refined && q == 2) {
          c.fixed_points = Cap::at_most(0);
          c.two_cycles = Cap::at_most(0);
          c.neg_fixed_points = Cap::at_most(1);
        } else if (a.refined && q == 4) {
          c.fixed_points = Cap::at_most(1);
          c.two_cycles = Cap::at_most(1);
          c.neg_fixed_points = Cap::at_most(2);
        } else if (a.refined) {
          unmatched(g, a, "hyperplane refinements exist for q = 2 and 4");
        }
        return {c};
      }
      if (a.type) unmatched(g, a, "symplectic subspaces carry no type");
      WeylConstraint c;
      if (a.kind == ActionKind::Nondegenerate) {
        const int k = detail::half_dimension(g, a);
        c = a.refined ? detail::fixing(WeylGroup::Bn, k, FixMode::Any) : detail::fixing(WeylGroup::Sn, k, FixMode::Any);
      } else if (a.kind == ActionKind::TotallySingular || a.kind == ActionKind::Any) {
        c = detail::fixing(WeylGroup::Bn, a.k, FixMode::PositiveOnly);
      } else {
        unmatched(g, a, "unknown symplectic action");
      }
      if (a.refined) {
        if (q == 2) {
          c.fixed_points = Cap::at_most(0);
          c.neg_fixed_points = Cap::at_most(1);
        } else if (q == 3) {
          c.fixed_points = Cap::at_most(1);
          c.neg_fixed_points = Cap::at_most(1);
        } else {
          unmatched(g, a, "symplectic refinements exist for q = 2 and 3");
        }
      }
      return {c};
    }
    case Family::SOOdd:
    case Family::SOPlus:
    case Family::SOMinus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      const bool odd_dim = g.family == Family::SOOdd;
      if (odd_dim && !g.field().odd()) unmatched(g, a, "odd-dimensional orthogonal groups need odd q here");
      const WeylGroup W = odd_dim                                                              ? WeylGroup::Bn
                          : (g.family == Family::SOPlus || g.family == Family::OmegaPlus) ? WeylGroup::Dn
                                                                                             : WeylGroup::DnMinus;
      if (a.kind == ActionKind::TotallySingular) {
        if (a.type || a.refined) unmatched(g, a, "no type or refinement for totally singular spaces");
        return {detail::fixing(W, a.k, FixMode::PositiveOnly)};
      }
      if (a.kind != ActionKind::Nondegenerate) unmatched(g, a, "orthogonal actions are nondegenerate or totally singular");
      const int k = detail::half_dimension(g, a);
      if (a.type == 0) {
        if (a.refined) unmatched(g, a, "the semisimple route has no refinement");
        return {detail::fixing(WeylGroup::Sn, k, FixMode::Any)};
      }
      auto c = detail::fixing(W, k, detail::parity_mode(a.type));
      if (a.refined) {
        if (q == 3) {
          c.fixed_points = Cap::at_most(0);
          c.neg_fixed_points = Cap::at_most(1);
        } else if (q == 2 && !odd_dim) {
          // Eigenvalue 1 may sit on a negative 2-block, so two negative fixed points
          // occur when there is no positive one.
          c.two_cycles = Cap::at_most(0);
          c.neg_two_cycles = Cap::at_most(1);
          auto both = c;
          c.fixed_points = Cap::at_most(1);
          c.neg_fixed_points = Cap::at_most(1);
          both.fixed_points = Cap::at_most(0);
          both.neg_fixed_points = Cap::between(2, 2);
          return {c, both};
        } else if (q == 4 && !odd_dim) {
          c.fixed_points = Cap::at_most(2);
        } else {
          unmatched(g, a, "orthogonal refinements exist for q = 3 (and q = 2, 4 in even dimension)");
        }
      }
      return {c};
    }
    case Family::OPlus:
    case Family::OMinus: unmatched(g, a, "use SO or Omega for the Weyl correspondence");
  }
  throw UsageError("unknown family");
}

// Exact Weyl proportion at rank g.n.
inline Rational weyl_upper_bound(const GroupSpec& g, const ActionSpec& a) {
  require(g.n >= 1, "rank must be positive");
  Rational total = 0;
  for (auto& c : weyl_constraints_for(g, a)) {
    if (c.fix && c.fix->k > g.n) throw UsageError("subspace too large for rank " + std::to_string(g.n));
    total += proportion(g.n, c);
  }
  return total;
}

// n-independent (or n -> infinity) bound on the Weyl proportion.
struct WeylBound {
  double value = 0;
  std::optional<Rational> exact;
  std::string source;
};

inline WeylBound uniform_weyl_bound(const GroupSpec& g, const ActionSpec& a) {
  const auto c = weyl_constraints_for(g, a).front();
  auto exact = [](Rational r, std::string s) { return WeylBound{to_double(r), r, std::move(s)}; };
  auto named = [](const std::string& name) { return WeylBound{named_constant(name), std::nullopt, "limit " + name}; };
  const long q = g.q;
  if (!c.fix) {
    if (a.refined && q == 2) return named("3/(4e^{5/4})");
    if (a.refined && q == 4) return named("195/(128e^{5/4})");
    return exact(frac(1, 2), "parity of negative cycles");
  }
  const int k = c.fix->k;
  switch (c.fix->mode) {
    case FixMode::Any:
      if (c.group == WeylGroup::Sn && c.fixed_points.max >= 0 && c.fixed_points.max <= 2 && k >= 2)
        return exact(frac(3, 5), "k-set with at most 2 fixed points");
      return exact(frac(2, 3), "Dixon k-set bound");
    case FixMode::EvenOnly: return exact(frac(Integer(binomial(2UL * (k / 2), k / 2)), ipow(4, k / 2)), "all-even 2k-set");
    case FixMode::PositiveOnly: return exact(frac(Integer(binomial(2UL * k, k)), ipow(4, k)), "positive-cycle k-set");
    case FixMode::NegParityEven:
    case FixMode::NegParityOdd:
      if (a.refined && q == 3) return named("(3/2)/(2e)");
      // half of P(fixed <= 1, neg <= 1) + P(fixed = 0, neg = 2) for Poisson(1/2) counts
      if (a.refined && q == 2) return {19.0 / (16.0 * std::exp(1.0)), std::nullopt, "limit 19/(16e)"};
      return exact(frac(1, 2), "k-set with fixed negative-cycle parity");
  }
  throw UsageError("unknown fix mode");
}

enum class BoundMode { Finite, Limit };

struct LowerBound {
  double value = 0;
  double error = 0;  // |true lower bound - value| <= error
  std::optional<Rational> exact;
  std::string route;
  double certified() const { return value - error; }
};

// rs - weyl; monotone in both arguments.
inline LowerBound difference_bound(const LimitValue& rs, const WeylBound& w) {
  LowerBound b{rs.value - w.value, rs.bound, std::nullopt, "rs - Weyl (" + w.source + ")"};
  if (rs.exact && w.exact) b.exact = *rs.exact - *w.exact;
  return b;
}

// rs * (1 - cap) where cap bounds rs in the subspace stabilizer.
inline LowerBound stabilizer_bound(const LimitValue& rs, const Rational& cap) {
  const double f = 1 - to_double(cap);
  LowerBound b{rs.value * f, rs.bound * std::fabs(f), std::nullopt, "rs * (1 - stabilizer rs cap)"};
  if (rs.exact) b.exact = *rs.exact * (1 - cap);
  return b;
}

// 1 - q/(q^2-1) + q^2/((q^4-1)(q^2-1)): bounds the chance that Sp(2n,q) has trivial z-1 part.
inline Rational sp_trivial_unipotent_cap(long q) {
  const Rational Q(q), Q2 = Q * Q;
  return 1 - Q / (Q2 - 1) + Q2 / ((Q2 * Q2 - 1) * (Q2 - 1));
}

// Bound, uniform in rank, on the rs proportion of the Levi factor that fixes
// the subspace (the part other than the n -> infinity factor).
struct StabilizerCap {
  Rational cap;
  std::string source;
};

inline std::optional<StabilizerCap> stabilizer_rs_cap(const GroupSpec& g, const ActionSpec& a) {
  if (a.type || a.refined) return std::nullopt;
  const long q = g.q;
  switch (g.family) {
    case Family::GL:
    case Family::SL:
      if (a.kind == ActionKind::Any && a.k >= 2 && q == 2) return StabilizerCap{frac(5, 6), "GL(k,2) rs <= 5/6"};
      break;
    case Family::U:
    case Family::SU:
      if (a.kind == ActionKind::Nondegenerate && a.k >= 2) {
        if (q == 2) return StabilizerCap{frac(877, 1000), "U(k,2) rs <= .877"};
        if (q == 3) return StabilizerCap{frac(94, 100), "U(k,3) rs <= .94"};
      }
      break;
    case Family::Sp:
      if (a.kind == ActionKind::Nondegenerate && a.k % 2 == 0) {
        if (q == 2) return StabilizerCap{frac(7, 12), "Sp(2k,2) rs <= 7/12"};
        if (q == 3) return StabilizerCap{frac(5, 6), "Sp(2k,3) rs <= 5/6"};
        return StabilizerCap{sp_trivial_unipotent_cap(q), "Sp(2k,q) trivial z-1 part"};
      }
      if (a.kind == ActionKind::TotallySingular && a.k >= 2) {
        if (q == 2) return StabilizerCap{frac(6, 7), "GL(k,4) rs <= 6/7"};
        if (q == 3) return StabilizerCap{frac(83, 91), "GL(k,9) rs <= 83/91"};
      }
      break;
    default: break;
  }
  return std::nullopt;
}

// Limit mode takes the better of the Weyl-difference and stabilizer routes.
inline LowerBound derangement_lower_bound(const GroupSpec& g, const ActionSpec& a, BoundMode mode) {
  const RSKind kind = weyl_rs_kind(g, a);
  if (mode == BoundMode::Finite) {
    const Rational rs = rs_proportion(g, kind);
    const Rational w = weyl_upper_bound(g, a);
    const Rational d = rs - w;
    return {to_double(d), 0, d, to_string(kind) + " - exact Weyl proportion"};
  }
  const LimitValue rs = rs_limit(g, kind);
  LowerBound best = difference_bound(rs, uniform_weyl_bound(g, a));
  if (auto cap = stabilizer_rs_cap(g, a)) {
    auto s = stabilizer_bound(rs, cap->cap);
    s.route += " (" + cap->source + ")";
    if (s.certified() > best.certified()) best = s;
  }
  return best;
}

}  // namespace derange
