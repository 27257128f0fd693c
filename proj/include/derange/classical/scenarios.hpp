#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"

namespace derange {

enum class Relation { AtLeast, Greater, AtMost, Less };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::AtLeast: return ">=";
    case Relation::Greater: return ">";
    case Relation::AtMost: return "<=";
    case Relation::Less: return "<";
  }
  return "?";
}

// A number with |true - value| <= error, exact when known.
struct Quantity {
  double value = 0;
  double error = 0;
  std::optional<Rational> exact;

  Quantity() = default;
  Quantity(const Rational& r) : value(to_double(r)), exact(r) {}
  Quantity(double v, double e) : value(v), error(e) {}
  Quantity(const LimitValue& l) : value(l.value), error(l.bound), exact(l.exact) {}
  Quantity(const LowerBound& b) : value(b.value), error(b.error), exact(b.exact) {}
};

struct ScenarioCheck {
  std::string label;
  Quantity quantity;
  Relation relation = Relation::AtLeast;
  Rational threshold;
  bool pass = false;
};

struct ScenarioReport {
  std::string name;
  std::string reference;
  std::string claim;
  std::vector<ScenarioCheck> checks;

  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

// Exact comparison when the quantity is exact, otherwise certified by its error.
inline bool holds(const Quantity& x, Relation r, const Rational& t) {
  if (x.exact) {
    switch (r) {
      case Relation::AtLeast: return *x.exact >= t;
      case Relation::Greater: return *x.exact > t;
      case Relation::AtMost: return *x.exact <= t;
      case Relation::Less: return *x.exact < t;
    }
  }
  const double td = to_double(t);
  switch (r) {
    case Relation::AtLeast: return x.value - x.error >= td;
    case Relation::Greater: return x.value - x.error > td;
    case Relation::AtMost: return x.value + x.error <= td;
    case Relation::Less: return x.value + x.error < td;
  }
  return false;
}

// "0.283" -> 283/1000
inline Rational decimal(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(Integer(s, 10));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty() || digits == "-") throw UsageError("bad decimal '" + s + "'");
  return frac(Integer(digits, 10), ipow(10, static_cast<unsigned long>(s.size() - dot - 1)));
}

namespace detail {

constexpr int kScenarioRange = 40;

struct ScenarioBuilder {
  ScenarioReport r;

  ScenarioBuilder(std::string name, std::string reference, std::string claim) {
    r.name = std::move(name);
    r.reference = std::move(reference);
    r.claim = std::move(claim);
  }
  void check(std::string label, const Quantity& x, Relation rel, const Rational& t) {
    r.checks.push_back({std::move(label), x, rel, t, holds(x, rel, t)});
  }
  // The source's own arithmetic on its stated decimals.
  void stated(std::string label, const Rational& lhs, Relation rel, const Rational& t) {
    check("stated: " + std::move(label), Quantity(lhs), rel, t);
  }
};

inline GroupSpec spec(Family f, long q, int n = 1) { return GroupSpec{f, q, n}; }

inline LimitValue lim(Family f, long q, RSKind k = RSKind::RegularSemisimple) { return rs_limit(spec(f, q), k); }

// max of coefficients lo..hi
inline Rational max_coefficient(const TruncatedSeries& s, int lo, int hi) {
  Rational m = s.coefficient(lo);
  for (int n = lo + 1; n <= hi; ++n)
    if (s.coefficient(n) > m) m = s.coefficient(n);
  return m;
}

inline Rational rs_max(Family f, long q, int lo, int hi = kScenarioRange) {
  return max_coefficient(rs_series(spec(f, q), RSKind::RegularSemisimple, hi), lo, hi);
}

inline LowerBound limit_bound(Family f, long q, ActionSpec a) { return derangement_lower_bound(spec(f, q, 40), a, BoundMode::Limit); }

inline std::string qs(long q) { return "q=" + std::to_string(q); }

using ScenarioFn = std::function<ScenarioReport()>;

inline void add(std::map<std::string, ScenarioFn>& m, std::string name, ScenarioFn f) { m.emplace(std::move(name), std::move(f)); }

inline std::map<std::string, ScenarioFn> build_scenarios() {
  using R = Relation;
  using F = Family;
  std::map<std::string, ScenarioFn> m;
  const std::vector<long> odd_q = {3, 5, 7, 9};
  const std::vector<long> big_q = {4, 5, 7, 8, 9};

  add(m, "glfiniteregss-q2", [] {
    ScenarioBuilder b("glfiniteregss-q2", "rs in GL(n,2) at most 5/6",
                      "for n > 1 the rs proportion of GL(n,2) is at most 5/6, via S_n with at most one fixed point");
    const int N = kScenarioRange;
    auto g = mul(mul(TruncatedSeries::binomial(N, 1, 1), exp_linear(N, -1)), geometric(N));
    b.check("max_{2<=n<=40} [u^n] (1+u)/(e^u (1-u))", max_coefficient(g, 2, N), R::AtMost, frac(5, 6));
    b.check("max_{2<=n<=40} rs GL(n,2)", rs_max(F::GL, 2, 2), R::AtMost, frac(5, 6));
    return b.r;
  });
  add(m, "glfiniteregss-q4", [] {
    ScenarioBuilder b("glfiniteregss-q4", "rs in GL(n,4) at most 6/7",
                      "for n > 1 the rs proportion of GL(n,4) is at most 6/7, via cyclic non-rs class counts");
    Rational worst = 0;
    for (int n = 2; n <= kScenarioRange; n += 2) {
      const Rational p = Rational(ipow(4, n));
      const Rational v = 1 - (3 * p / 4 / (p - 1) - frac(3, 5));
      if (v > worst) worst = v;
    }
    b.check("max_{n even <= 40} 1 - [3*4^{n-1}/(4^n-1) - 3/5]", worst, R::AtMost, frac(6, 7));
    b.check("max_{2<=n<=40} rs GL(n,4)", rs_max(F::GL, 4, 2), R::AtMost, frac(6, 7));
    return b.r;
  });
  add(m, "glfiniteregss-q9", [] {
    ScenarioBuilder b("glfiniteregss-q9", "rs in GL(n,9) at most 83/91", "for n > 1 the rs proportion of GL(n,9) is at most 83/91");
    b.check("max_{2<=n<=40} rs GL(n,9)", rs_max(F::GL, 9, 2), R::AtMost, frac(83, 91));
    return b.r;
  });

  for (auto [q, cap] : std::vector<std::pair<long, const char*>>{{2, "0.877"}, {3, "0.94"}}) {
    const std::string name = "usmallregss-q" + std::to_string(q);
    add(m, name, [=] {
      ScenarioBuilder b(name, "rs in U(n,q) bounded for q = 2, 3", "for n >= 2 the rs proportion of U(n," + std::to_string(q) + ") is at most " + cap);
      const Rational Q(q);
      const Rational z1 = Q / ((Q * Q - 1) * (Q + 1)) * (1 - 1 / (Q + 1) - 1 / ((Q + 1) * (Q * Q - 1)));
      b.check("1 - P(z-1 with multiplicity 2) lower estimate", Rational(1 - z1), R::AtMost, decimal(cap));
      b.check("max_{2<=n<=40} rs U(n," + std::to_string(q) + ")", rs_max(F::U, q, 2), R::AtMost, decimal(cap));
      return b.r;
    });
  }

  for (auto [q, cap] : std::vector<std::pair<long, const char*>>{{4, "0.74"}, {5, "0.80"}, {7, "0.86"}, {8, "0.88"}}) {
    const std::string name = "boundedsmallSp-q" + std::to_string(q);
    add(m, name, [=] {
      ScenarioBuilder b(name, "rs in Sp(2n,q) bounded for q = 4, 5, 7, 8",
                        "for n >= 1 the rs proportion of Sp(2n," + std::to_string(q) + ") is at most " + cap);
      const Rational f = sp_trivial_unipotent_cap(q);
      b.check("1 - q/(q^2-1) + q^2/((q^4-1)(q^2-1))", f, R::AtMost, decimal(cap));
      const Rational mx = rs_max(F::Sp, q, 1);
      b.check("max_{1<=n<=40} rs Sp(2n," + std::to_string(q) + ")", mx, R::AtMost, decimal(cap));
      b.check("max_{1<=n<=40} rs Sp(2n," + std::to_string(q) + ") within the trivial z-1 bound", mx, R::AtMost, f);
      return b.r;
    });
  }

  for (long q = 2; q <= 9; ++q) {
    if (q == 6) continue;
    const std::string name = "uregss-q" + std::to_string(q);
    const char* dec = q == 2 ? "0.414" : q == 3 ? "0.628" : "0.72";
    add(m, name, [=] {
      ScenarioBuilder b(name, "U rs limit lower bounds", "the U(n," + std::to_string(q) + ") rs limit is at least " + dec);
      const Rational Q(q);
      const auto L = lim(F::U, q);
      b.check("U rs limit " + qs(q), L, R::AtLeast, 1 - 1 / Q - 2 / (Q * Q * Q) + 2 / (Q * Q * Q * Q));
      b.check("U rs limit " + qs(q), L, R::AtLeast, decimal(dec));
      return b.r;
    });
  }

  for (auto [q, dec] : std::vector<std::pair<long, const char*>>{
           {2, "0.283"}, {3, "0.348"}, {4, "0.453"}, {5, "0.654"}, {7, "0.745"}, {8, "0.686"}, {9, "0.797"}}) {
    const std::string name = "spregss-q" + std::to_string(q);
    add(m, name, [=] {
      ScenarioBuilder b(name, "Sp rs limit lower bounds", "the Sp(2n," + std::to_string(q) + ") rs limit is at least " + dec);
      b.check("Sp rs limit " + qs(q), lim(F::Sp, q), R::AtLeast, decimal(dec));
      return b.r;
    });
  }

  for (long q : {2L, 4L, 8L}) {
    const std::string name = "regssO-q" + std::to_string(q);
    const char* dec = q == 2 ? "0.47" : "0.573";
    add(m, name, [=] {
      ScenarioBuilder b(name, "Omega rs limit, q even", "the Omega+-(2n," + std::to_string(q) + ") rs limit is at least " + dec);
      const auto plus = lim(F::OmegaPlus, q), sp = lim(F::Sp, q);
      b.check("Omega rs limit " + qs(q), plus, R::AtLeast, decimal(dec));
      const double ratio = 1 + static_cast<double>(q) / (static_cast<double>(q) * q - 1);
      b.check("|Omega limit - (1+q/(q^2-1)) Sp limit| minus certified slack",
              Quantity(std::fabs(plus.value - ratio * sp.value) - plus.bound - ratio * sp.bound, 0), R::AtMost, 0);
      const int N = 60;
      for (F f : {F::OmegaPlus, F::OmegaMinus}) {
        const auto c = rs_series(spec(f, q), RSKind::RegularSemisimple, N).coefficient(N);
        b.check("|[u^60] " + to_string(f) + " - limit|", Quantity(std::fabs(to_double(c) - plus.value), plus.bound), R::AtMost,
                frac(1, 10000));
      }
      return b.r;
    });
  }

  for (long q : odd_q) {
    const std::string name = "largeregssoddo-q" + std::to_string(q);
    const char* dec = q == 3 ? "0.478" : "0.790";
    add(m, name, [=] {
      ScenarioBuilder b(name, "SO odd-dimension rs limit", "the SO(2n+1," + std::to_string(q) + ") rs limit is at least " + dec);
      b.check("SO(2n+1) rs limit " + qs(q), lim(F::SOOdd, q), R::AtLeast, decimal(dec));
      return b.r;
    });
    const std::string name2 = "largeregsseveno-q" + std::to_string(q);
    const char* dec2 = q == 3 ? "0.657" : "0.954";
    add(m, name2, [=] {
      ScenarioBuilder b(name2, "SO+- rs limit, q odd", "the SO+-(2n," + std::to_string(q) + ") rs limit is at least " + dec2);
      b.check("SO+ rs limit " + qs(q), lim(F::SOPlus, q), R::AtLeast, decimal(dec2));
      b.check("SO- rs limit " + qs(q), lim(F::SOMinus, q), R::AtLeast, decimal(dec2));
      return b.r;
    });
  }

  for (long q = 2; q <= 9; ++q) {
    if (q == 6) continue;
    const std::string name = "limiting-q" + std::to_string(q);
    add(m, name, [=] {
      ScenarioBuilder b(name, "GL eigenvalue-free limit at least 1/4", "prod (1-1/q^i)^{q-1} >= 1/4 at " + qs(q));
      const auto L = lim(F::GL, q, RSKind::EigenvalueFree);
      b.check("prod (1-" + std::to_string(q) + "^{-i})^{q-1}", L, R::AtLeast, frac(1, 4));
      b.stated("-1 - 1/(q+1) >= -4/3", -1 - frac(1, q + 1), R::AtLeast, frac(-4, 3));
      b.check("e^{-4/3}", Quantity(std::exp(-4.0 / 3), 1e-15), R::AtLeast, frac(1, 4));
      if (q == 2) {
        // 40 factors; the remaining tail lies in [1 - 2^{-40}, 1].
        Rational p = 1;
        for (int i = 1; i <= 40; ++i) p *= 1 - frac(1, 1) / Rational(ipow(2, i));
        const double v = to_double(p);
        b.check("|prod_{i<=40} (1-2^{-i}) - 0.2887880951|", Quantity(std::fabs(v - 0.2887880951), v * std::ldexp(1.0, -40)),
                R::AtMost, frac(1, 10000000000L));
      }
      return b.r;
    });
  }

  add(m, "correctSL-q2", [] {
    ScenarioBuilder b("correctSL-q2", "SL/GL k-space derangements at least 1/16", "GL(n,2): derangements on k-spaces at least 1/16");
    b.check("k = 1: GL eigenvalue-free limit q=2", lim(F::GL, 2, RSKind::EigenvalueFree), R::AtLeast, frac(1, 4));
    b.check("k >= 2: stabilizer route", limit_bound(F::GL, 2, {ActionKind::Any, 2}), R::AtLeast, frac(1, 16));
    b.stated("1/2 - (1/2)(5/6) >= 1/16", frac(1, 2) - frac(1, 2) * frac(5, 6), R::AtLeast, frac(1, 16));
    b.check("GL(k,2) rs cap for 2 <= k <= 40", rs_max(F::GL, 2, 2), R::AtMost, frac(5, 6));
    return b.r;
  });
  add(m, "correctSL-q3", [] {
    ScenarioBuilder b("correctSL-q3", "SL/GL k-space derangements at least 1/16", "GL(n,3): derangements on k-spaces at least 1/16");
    b.check("k = 1: GL eigenvalue-free limit q=3", lim(F::GL, 3, RSKind::EigenvalueFree), R::AtLeast, frac(1, 16));
    b.check("k >= 2: rs limit - refined Weyl bound", limit_bound(F::GL, 3, {ActionKind::Any, 2, 0, true}), R::Greater, frac(1, 16));
    b.stated("(2/3) - (3/5) > 1/16", frac(2, 3) - frac(3, 5), R::Greater, frac(1, 16));
    Rational worst = 0;
    WeylConstraint c;
    c.fixed_points = Cap::at_most(2);
    for (int n = 4; n <= 30; ++n)
      for (int k = 2; 2 * k <= n; ++k) {
        c.fix = FixKSet{k, FixMode::Any, true};
        worst = std::max(worst, proportion(n, c));
      }
    b.check("max_{4<=n<=30, 2<=k<=n/2} S_n fixing a k-set with <= 2 fixed points", worst, R::AtMost, frac(3, 5));
    return b.r;
  });
  add(m, "correctSL-q4plus", [=] {
    ScenarioBuilder b("correctSL-q4plus", "SL/GL k-space derangements at least 1/16", "GL(n,q), q >= 4: rs limit - 2/3 >= .08");
    for (long q : big_q) b.check("rs limit - Dixon " + qs(q), limit_bound(F::GL, q, {ActionKind::Any, 2}), R::AtLeast, decimal("0.08"));
    b.stated("3/4 - 2/3 >= .08", frac(3, 4) - frac(2, 3), R::AtLeast, decimal("0.08"));
    return b.r;
  });

  add(m, "NpeigenfreeU-q2", [] {
    ScenarioBuilder b("NpeigenfreeU-q2", "U eigenvalue-free limit", "the U(n,2) eigenvalue-free limit lies in [.163, .197]");
    const auto L = lim(F::U, 2, RSKind::EigenvalueFree);
    b.check("U eigenvalue-free limit q=2", L, R::AtLeast, decimal("0.163"));
    b.check("U eigenvalue-free limit q=2", L, R::AtMost, decimal("0.197"));
    const Rational p3 = frac(1, 2) * frac(5, 4) * frac(7, 8);
    b.stated("((1-1/2)(1+1/4)(1-1/8))^3 >= .163", p3 * p3 * p3, R::AtLeast, decimal("0.163"));
    const Rational p4 = p3 * frac(17, 16);
    b.stated("((1-1/2)(1+1/4)(1-1/8)(1+1/16))^3 <= .197", p4 * p4 * p4, R::AtMost, decimal("0.197"));
    const int N = 60;
    const auto c = rs_series(spec(F::U, 2), RSKind::EigenvalueFree, N).coefficient(N);
    b.check("|[u^60] U eigenvalue-free - limit| (exponent (q^2-q-2)/2)", Quantity(std::fabs(to_double(c) - L.value), L.bound), R::AtMost,
            frac(1, 10000));
    return b.r;
  });
  add(m, "NpeigenfreeU-q3plus", [=] {
    ScenarioBuilder b("NpeigenfreeU-q3plus", "U eigenvalue-free limit", "the U(n,q) eigenvalue-free limit is at least 1/5 for q >= 3");
    for (long q : {3L, 4L, 5L, 7L, 8L, 9L}) b.check("U eigenvalue-free limit " + qs(q), lim(F::U, q, RSKind::EigenvalueFree), R::AtLeast, frac(1, 5));
    return b.r;
  });

  add(m, "usmallq-q2", [] {
    ScenarioBuilder b("usmallq-q2", "U nondegenerate k-spaces, small q", "U(n,2): rs derangements on nondegenerate k-spaces, k >= 2, at least 1/20");
    b.check("stabilizer route q=2", limit_bound(F::U, 2, {ActionKind::Nondegenerate, 2}), R::Greater, decimal("0.05"));
    b.stated(".414 (1 - .877) > .05", decimal("0.414") * (1 - decimal("0.877")), R::Greater, decimal("0.05"));
    return b.r;
  });
  add(m, "usmallq-q3", [] {
    ScenarioBuilder b("usmallq-q3", "U nondegenerate k-spaces, small q", "U(n,3): rs derangements on nondegenerate k-spaces, k >= 2, at least 1/27");
    b.check("stabilizer route q=3", limit_bound(F::U, 3, {ActionKind::Nondegenerate, 2}), R::Greater, frac(1, 27));
    b.stated(".628 (1 - .94) > 1/27", decimal("0.628") * (1 - decimal("0.94")), R::Greater, frac(1, 27));
    return b.r;
  });
  add(m, "Unondeg-q4plus", [=] {
    ScenarioBuilder b("Unondeg-q4plus", "U nondegenerate k-spaces, q >= 4", "U(n,q), q >= 4: rs limit - 2/3 > 1/27");
    for (long q : big_q) b.check("rs limit - Dixon " + qs(q), limit_bound(F::U, q, {ActionKind::Nondegenerate, 2}), R::Greater, frac(1, 27));
    b.stated(".72 - 2/3 > 1/27", decimal("0.72") - frac(2, 3), R::Greater, frac(1, 27));
    return b.r;
  });
  add(m, "Utotsing-q2", [] {
    ScenarioBuilder b("Utotsing-q2", "U totally singular k-spaces", "U(n,2): rs derangements on totally singular k-spaces, k >= 2, at least 1/26");
    b.check("rs limit - C(2k,k)/4^k at k = 2", limit_bound(F::U, 2, {ActionKind::TotallySingular, 2}), R::AtLeast, frac(1, 26));
    b.stated(".414 - 3/8 >= 1/26", decimal("0.414") - frac(3, 8), R::AtLeast, frac(1, 26));
    return b.r;
  });
  add(m, "Utotsing-q3plus", [] {
    ScenarioBuilder b("Utotsing-q3plus", "U totally singular k-spaces", "U(n,q), q >= 3: rs limit - 1/2 > 1/26");
    for (long q : {3L, 4L, 5L, 7L, 8L, 9L})
      b.check("rs limit - 1/2 " + qs(q), limit_bound(F::U, q, {ActionKind::TotallySingular, 1}), R::Greater, frac(1, 26));
    b.stated(".628 - 1/2 > 1/26", decimal("0.628") - frac(1, 2), R::Greater, frac(1, 26));
    return b.r;
  });

  for (auto [q, sp, cap, claim] : std::vector<std::tuple<long, const char*, Rational, const char*>>{
           {2, "0.283", frac(7, 12), "0.11"},
           {3, "0.348", frac(5, 6), "0.05"},
           {4, "0.453", decimal("0.74"), "0.11"},
           {5, "0.654", decimal("0.80"), "0.13"},
           {7, "0.745", decimal("0.86"), "0.1"},
           {8, "0.686", decimal("0.88"), "0.08"}}) {
    const std::string name = "manycases-q" + std::to_string(q);
    add(m, name, [=] {
      ScenarioBuilder b(name, "Sp nondegenerate 2k-spaces", "Sp(2n," + std::to_string(q) + "): rs derangements on nondegenerate 2k-spaces at least " + claim);
      b.check("stabilizer route " + qs(q), limit_bound(F::Sp, q, {ActionKind::Nondegenerate, 2}), R::AtLeast, decimal(claim));
      b.stated(std::string(sp) + " (1 - " + to_string(cap) + ") >= " + claim, decimal(sp) * (1 - cap), R::AtLeast, decimal(claim));
      if (q <= 3) {
        WeylConstraint c;
        c.group = WeylGroup::Bn;
        c.fixed_points = Cap::at_most(q == 2 ? 0 : 1);
        c.neg_fixed_points = Cap::at_most(1);
        b.check("max_{2<=n<=60} B_n torus bound for Sp(2n," + std::to_string(q) + ") rs", max_coefficient(weyl_series(c, 60), 2, 60),
                R::AtMost, cap);
        b.check("max_{1<=n<=40} rs Sp(2n," + std::to_string(q) + ")", rs_max(F::Sp, q, 1), R::AtMost, cap);
      }
      return b.r;
    });
  }
  add(m, "manycases-q9plus", [] {
    ScenarioBuilder b("manycases-q9plus", "Sp nondegenerate 2k-spaces", "Sp(2n,q), q >= 9: rs limit - 2/3 >= 1/20");
    b.check("rs limit - Dixon q=9", difference_bound(lim(F::Sp, 9), {to_double(frac(2, 3)), frac(2, 3), "Dixon"}), R::AtLeast,
            frac(1, 20));
    b.stated(".797 - 2/3 >= .13", decimal("0.797") - frac(2, 3), R::AtLeast, decimal("0.13"));
    return b.r;
  });

  add(m, "Sphyperplane-q2", [] {
    ScenarioBuilder b("Sphyperplane-q2", "Sp on orthogonal hyperplanes", "Sp(2n,2): rs derangements on hyperplanes of either type at least .016");
    for (int t : {1, -1})
      b.check(std::string("rs limit - refined parity bound, type ") + (t > 0 ? "+" : "-"),
              limit_bound(F::Sp, 2, {ActionKind::Hyperplane, 1, t, true}), R::AtLeast, decimal("0.016"));
    b.check("3/(4e^{5/4})", Quantity(named_constant("3/(4e^{5/4})"), 1e-15), R::AtMost, decimal("0.215"));
    b.stated(".283 - .215 > .016", decimal("0.283") - decimal("0.215"), R::Greater, decimal("0.016"));
    return b.r;
  });
  add(m, "Sphyperplane-q4", [] {
    ScenarioBuilder b("Sphyperplane-q4", "Sp on orthogonal hyperplanes", "Sp(2n,4): rs derangements on hyperplanes of either type at least .016");
    for (int t : {1, -1})
      b.check(std::string("rs limit - refined parity bound, type ") + (t > 0 ? "+" : "-"),
              limit_bound(F::Sp, 4, {ActionKind::Hyperplane, 1, t, true}), R::AtLeast, decimal("0.016"));
    b.check("195/(128e^{5/4})", Quantity(named_constant("195/(128e^{5/4})"), 1e-15), R::AtMost, decimal("0.437"));
    b.stated(".453 - .437 >= .016", decimal("0.453") - decimal("0.437"), R::AtLeast, decimal("0.016"));
    return b.r;
  });
  add(m, "Sphyperplane-q8", [] {
    ScenarioBuilder b("Sphyperplane-q8", "Sp on orthogonal hyperplanes", "Sp(2n,8): rs derangements on hyperplanes of either type at least .016");
    for (int t : {1, -1})
      b.check(std::string("rs limit - 1/2, type ") + (t > 0 ? "+" : "-"), limit_bound(F::Sp, 8, {ActionKind::Hyperplane, 1, t}),
              R::AtLeast, decimal("0.016"));
    b.stated(".686 - 1/2 > .016", decimal("0.686") - frac(1, 2), R::Greater, decimal("0.016"));
    return b.r;
  });

  add(m, "Sp-eigenfree-q-even", [] {
    ScenarioBuilder b("Sp-eigenfree-q-even", "Sp eigenvalue-free limit, q even",
                      "prod (1-q^{-(2i-1)}) prod (1-q^{-i})^{(q-2)/2} >= .4; Sp fixes no totally singular line");
    for (long q : {2L, 4L, 8L}) b.check("Sp eigenvalue-free limit " + qs(q), lim(F::Sp, q, RSKind::EigenvalueFree), R::AtLeast, decimal("0.4"));
    return b.r;
  });
  add(m, "Sp-eigenfree-q-odd", [=] {
    ScenarioBuilder b("Sp-eigenfree-q-odd", "Sp eigenvalue-free limit, q odd", "prod (1-q^{-(2i-1)})^2 prod (1-q^{-i})^{(q-3)/2} >= .4");
    for (long q : odd_q) b.check("Sp eigenvalue-free limit " + qs(q), lim(F::Sp, q, RSKind::EigenvalueFree), R::AtLeast, decimal("0.4"));
    return b.r;
  });

  add(m, "smallsymplec-q2", [] {
    ScenarioBuilder b("smallsymplec-q2", "Sp totally singular k-spaces, small q", "Sp(2n,2): rs derangements on totally singular k-spaces, k >= 2, at least .04");
    b.check("stabilizer route q=2", limit_bound(F::Sp, 2, {ActionKind::TotallySingular, 2}), R::AtLeast, decimal("0.04"));
    b.stated(".283 (1 - 6/7) >= .04", decimal("0.283") * (1 - frac(6, 7)), R::AtLeast, decimal("0.04"));
    b.check("GL(k,4) rs cap for 2 <= k <= 40", rs_max(F::GL, 4, 2), R::AtMost, frac(6, 7));
    return b.r;
  });
  add(m, "smallsymplec-q3", [] {
    ScenarioBuilder b("smallsymplec-q3", "Sp totally singular k-spaces, small q", "Sp(2n,3): rs derangements on totally singular k-spaces, k >= 2, at least .03");
    b.check("stabilizer route q=3", limit_bound(F::Sp, 3, {ActionKind::TotallySingular, 2}), R::Greater, decimal("0.03"));
    b.stated(".348 (1 - 83/91) > .03", decimal("0.348") * (1 - frac(83, 91)), R::Greater, decimal("0.03"));
    b.check("GL(k,9) rs cap for 2 <= k <= 40", rs_max(F::GL, 9, 2), R::AtMost, frac(83, 91));
    return b.r;
  });
  add(m, "Sptotsing-q4plus", [=] {
    ScenarioBuilder b("Sptotsing-q4plus", "Sp totally singular k-spaces", "Sp(2n,q), q >= 4: rs limit - 3/8 > .03 for k >= 2");
    for (long q : big_q)
      b.check("rs limit - 3/8 " + qs(q), limit_bound(F::Sp, q, {ActionKind::TotallySingular, 2}), R::Greater, decimal("0.03"));
    b.stated(".453 - 3/8 > .03", decimal("0.453") - frac(3, 8), R::Greater, decimal("0.03"));
    return b.r;
  });

  add(m, "Omegaeigenfree", [] {
    ScenarioBuilder b("Omegaeigenfree", "Omega eigenvalue-free limit, q even", "the Omega+-(2n,q) eigenvalue-free limit is at least .4 for q even");
    for (long q : {2L, 4L, 8L}) {
      b.check("Omega+ eigenvalue-free limit " + qs(q), lim(F::OmegaPlus, q, RSKind::EigenvalueFree), R::AtLeast, decimal("0.4"));
      const auto o = lim(F::OPlus, q, RSKind::EigenvalueFree), s = lim(F::Sp, q, RSKind::EigenvalueFree);
      b.check("|O+ eigenvalue-free limit - Sp/2| minus slack " + qs(q),
              Quantity(std::fabs(o.value - s.value / 2) - o.bound - s.bound / 2, 0), R::AtMost, 0);
    }
    return b.r;
  });

  add(m, "Omeganondeg-q2", [] {
    ScenarioBuilder b("Omeganondeg-q2", "Omega nondegenerate 2k-spaces, q = 2",
                      "Omega+-(2n,2): rs derangements on nondegenerate 2k-spaces of either type at least .056");
    for (F f : {F::OmegaPlus, F::OmegaMinus})
      for (int t : {1, -1})
        b.check(to_string(f) + std::string(" rs limit - refined D_n bound, type ") + (t > 0 ? "+" : "-"),
                limit_bound(f, 2, {ActionKind::Nondegenerate, 2, t, true}), R::AtLeast, decimal("0.056"));
    b.check("9/(8e)", Quantity(named_constant("9/(8e)"), 1e-15), R::AtMost, decimal("0.414"));
    b.stated(".47 - .414 >= .056", decimal("0.47") - decimal("0.414"), R::AtLeast, decimal("0.056"));
    return b.r;
  });
  add(m, "Omeganondeg-q4plus", [] {
    ScenarioBuilder b("Omeganondeg-q4plus", "Omega nondegenerate 2k-spaces, q >= 4", "Omega+-(2n,q), q >= 4 even: rs limit - 1/2 >= .056");
    for (long q : {4L, 8L})
      for (int t : {1, -1})
        b.check(std::string("rs limit - 1/2 ") + qs(q) + (t > 0 ? " type +" : " type -"),
                limit_bound(F::OmegaPlus, q, {ActionKind::Nondegenerate, 2, t}), R::AtLeast, decimal("0.056"));
    b.stated(".573 - 1/2 >= .056", decimal("0.573") - frac(1, 2), R::AtLeast, decimal("0.056"));
    return b.r;
  });
  add(m, "Omegatotsing-q2", [] {
    ScenarioBuilder b("Omegatotsing-q2", "Omega totally singular k-spaces, q = 2", "Omega+-(2n,2): rs derangements on totally singular k-spaces, k >= 2, at least .073");
    for (F f : {F::OmegaPlus, F::OmegaMinus})
      b.check(to_string(f) + " rs limit - 3/8", limit_bound(f, 2, {ActionKind::TotallySingular, 2}), R::AtLeast, decimal("0.073"));
    b.stated(".47 - 3/8 >= .073", decimal("0.47") - frac(3, 8), R::AtLeast, decimal("0.073"));
    return b.r;
  });
  add(m, "Omegatotsing-q4plus", [] {
    ScenarioBuilder b("Omegatotsing-q4plus", "Omega totally singular k-spaces, q >= 4", "Omega+-(2n,q), q >= 4 even: rs limit - 1/2 >= .073");
    for (long q : {4L, 8L})
      b.check("rs limit - 1/2 " + qs(q), limit_bound(F::OmegaPlus, q, {ActionKind::TotallySingular, 1}), R::AtLeast, decimal("0.073"));
    b.stated(".573 - 1/2 >= .073", decimal("0.573") - frac(1, 2), R::AtLeast, decimal("0.073"));
    return b.r;
  });

  for (long q : odd_q) {
    const std::string name = "eigenfreeoddO-q" + std::to_string(q);
    add(m, name, [=] {
      ScenarioBuilder b(name, "rs eigenvalue-free limit, orthogonal, q odd",
                        "(1+1/(q-1))^{-(q-3)/2} times the Sp rs limit is at least .348, and half of it at least .174");
      const auto L = rs_eigenvalue_free_limit(spec(F::SOPlus, q));
      b.check("rs eigenvalue-free limit " + qs(q), L, R::AtLeast, decimal("0.348"));
      b.check("half of it " + qs(q), Quantity(L.value / 2, L.bound / 2), R::AtLeast, decimal("0.174"));
      const int N = 60;
      for (F f : {F::SOPlus, F::SOMinus}) {
        const auto c = rs_eigenvalue_free_series(spec(f, q), N).coefficient(N);
        b.check("|[u^60] " + to_string(f) + " rs eigenvalue-free - limit|", Quantity(std::fabs(to_double(c) - L.value), L.bound), R::AtMost,
                frac(1, 10000));
      }
      return b.r;
    });

    for (F f : {F::SOOdd, F::SOPlus}) {
      const std::string name2 = std::string(f == F::SOOdd ? "Omeganondegenodd-q" : "Omeganondegeneven-q") + std::to_string(q);
      add(m, name2, [=] {
        ScenarioBuilder b(name2, "orthogonal nondegenerate 2k-spaces, q odd",
                          to_string(f) + " at q=" + std::to_string(q) + ": srs derangements on nondegenerate 2k-spaces of either type at least .07");
        for (int t : {1, -1})
          b.check(std::string("srs limit - parity bound") + (q == 3 ? " (refined)" : "") + (t > 0 ? ", type +" : ", type -"),
                  limit_bound(f, q, {ActionKind::Nondegenerate, 4, t, q == 3}), R::AtLeast, decimal("0.07"));
        if (q == 3) {
          b.check("(3/2)/(2e)", Quantity(named_constant("(3/2)/(2e)"), 1e-15), R::AtMost, decimal("0.276"));
          b.stated(".348 - .276 >= .07", decimal("0.348") - decimal("0.276"), R::AtLeast, decimal("0.07"));
        } else {
          b.stated(".654 - 1/2 >= .07", decimal("0.654") - frac(1, 2), R::AtLeast, decimal("0.07"));
        }
        return b.r;
      });
    }

    const std::string name3 = "Omegatotsingnodd-q" + std::to_string(q);
    add(m, name3, [=] {
      ScenarioBuilder b(name3, "SO odd-dimension totally singular k-spaces", "SO(2n+1," + std::to_string(q) + "): rs derangements on totally singular k-spaces at least .07");
      if (q == 3) {
        b.check("rs limit - 3/8 (k >= 2)", limit_bound(F::SOOdd, 3, {ActionKind::TotallySingular, 2}), R::AtLeast, decimal("0.07"));
        b.stated(".478 - .375 >= .07", decimal("0.478") - decimal("0.375"), R::AtLeast, decimal("0.07"));
      } else {
        b.check("rs limit - 1/2", limit_bound(F::SOOdd, q, {ActionKind::TotallySingular, 1}), R::Greater, decimal("0.07"));
        b.stated(".790 - 1/2 > .07", decimal("0.790") - frac(1, 2), R::Greater, decimal("0.07"));
      }
      return b.r;
    });
    const std::string name4 = "Omegatotsingneven-q" + std::to_string(q);
    add(m, name4, [=] {
      ScenarioBuilder b(name4, "SO+- totally singular k-spaces, q odd", "SO+-(2n," + std::to_string(q) + "): rs derangements on totally singular k-spaces at least .15");
      for (F f : {F::SOPlus, F::SOMinus})
        b.check(to_string(f) + " rs limit - 1/2", limit_bound(f, q, {ActionKind::TotallySingular, 1}), R::Greater, decimal("0.15"));
      b.stated(".657 - 1/2 > .15", decimal("0.657") - frac(1, 2), R::Greater, decimal("0.15"));
      return b.r;
    });
  }

  add(m, "meanD-c1", [] {
    ScenarioBuilder b("meanD-c1", "mean of D bounded by c1", "c1(2) = 27.31... <= 28 and E[D] in GL(n,q) stays below c1(q)");
    const double c = mean_D_bound_c1(2);
    b.check("c1(2)", Quantity(c, 1e-12), R::AtMost, 28);
    b.check("c1(2)", Quantity(c, 1e-12), R::AtLeast, decimal("27.31"));
    for (long q : {2L, 3L, 4L, 5L}) {
      auto s = rs_series(spec(F::GL, q), RSKind::MeanD, kScenarioRange);
      const double mx = to_double(max_coefficient(s, 1, kScenarioRange));
      b.check("max_{n<=40} E[D] in GL(n," + std::to_string(q) + ") - c1(q)", Quantity(mx - mean_D_bound_c1(q), 1e-12), R::AtMost, 0);
    }
    return b.r;
  });

  return m;
}

inline const std::map<std::string, ScenarioFn>& scenario_registry() {
  static const auto reg = build_scenarios();
  return reg;
}

}  // namespace detail

inline std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (auto& [name, f] : detail::scenario_registry()) out.push_back(name);
  return out;
}

inline ScenarioReport bound_scenario(const std::string& name) {
  auto& reg = detail::scenario_registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw UsageError("unknown scenario '" + name + "' (see `derange verify --suite bounds --list`)");
  return it->second();
}

}  // namespace derange
