#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "rs.hpp"

namespace derange {

// n -> infinity value of a proportion, with |true - value| <= bound.
struct LimitValue {
  double value = 0;
  double bound = 0;
  std::optional<Rational> exact;
  std::string closed_form;

  double lower() const { return value - bound; }
  double upper() const { return value + bound; }
};

namespace detail {

// Accumulates sum e * log(1 + x) and a bound on what the truncation drops.
struct LogProduct {
  double log = 0;
  double tail = 0;

  void factor(double exponent, double x) { log += exponent * std::log1p(x); }
  void factor(const Integer& exponent, double x) { factor(exponent.get_d(), x); }
  LogProduct& operator*=(const LogProduct& o) {
    log += o.log;
    tail += o.tail;
    return *this;
  }
  LimitValue finish(std::string form) const {
    const double v = std::exp(log);
    return {v, v * std::expm1(tail) + 1e-12 * v, std::nullopt, std::move(form)};
  }
};

// sum_{i>D} 2 |e| a r^i, the log-tail of prod_{i>D} (1 +- a r^i)^e when a r^i <= 1/2
inline double geometric_tail(double e, double a, double r, int D) {
  return 2 * std::fabs(e) * a * std::pow(r, D + 1) / (1 - r);
}

inline double qd(long q, int d) { return std::pow(static_cast<double>(q), d); }

// Both rs products have |count * x_d| <= 4 q^{-d}.
inline double rs_tail(long q, int D) { return 8.0 / (qd(q, D) * static_cast<double>(q - 1)); }

// (1-1/q)^f prod_d (1 - 2/(q^d(q^d+1)))^{N*(q;2d)}
inline LogProduct sp_rs(long q, int D) {
  const FieldSize F = field_size(q);
  LogProduct p;
  p.factor(F.f, -1.0 / q);
  for (int d = 1; d <= D; ++d) p.factor(count(PolyCountKind::NStar, F, 2 * d), -2.0 / (qd(q, d) * (qd(q, d) + 1)));
  p.tail = rs_tail(q, D);
  return p;
}

// (1+1/q) prod_{d odd} (1 - 2/(q^d(q^d+1)))^{Ntilde(q;d)}
inline LogProduct unitary_rs(long q, int D) {
  const FieldSize F = field_size(q);
  LogProduct p;
  p.factor(1, 1.0 / q);
  for (int d = 1; d <= D; d += 2) p.factor(count(PolyCountKind::NTilde, F, d), -2.0 / (qd(q, d) * (qd(q, d) + 1)));
  p.tail = rs_tail(q, D);
  return p;
}

// 1 + q/(q^2-1), the z+-1 prefactor at u = 1
inline LogProduct orth_factor(long q, int power) {
  LogProduct p;
  p.factor(power, static_cast<double>(q) / (static_cast<double>(q) * q - 1));
  return p;
}

inline LogProduct constant(double c) {
  LogProduct p;
  p.log = std::log(c);
  return p;
}

// prod_i (1 - q^{-i})^e
inline LogProduct euler(long q, double e, int D) {
  LogProduct p;
  for (int i = 1; i <= D; ++i) p.factor(e, -1.0 / qd(q, i));
  p.tail = geometric_tail(e, 1, 1.0 / q, D);
  return p;
}

// prod_i (1 - q^{-(2i-1)})^e
inline LogProduct euler_odd(long q, double e, int D) {
  LogProduct p;
  for (int i = 1; i <= D; ++i) p.factor(e, -1.0 / qd(q, 2 * i - 1));
  p.tail = geometric_tail(e, static_cast<double>(q), 1.0 / (static_cast<double>(q) * q), D);
  return p;
}

inline LogProduct gl_ef(long q, int D) { return euler(q, static_cast<double>(q - 1), D); }

// prod_i (1 + (-1)^i/q^i)^{q+1} prod_i (1 - q^{-2i})^{(q^2-q-2)/2}
inline LogProduct unitary_ef(long q, int D) {
  LogProduct p;
  const double e = static_cast<double>(q + 1);
  for (int i = 1; i <= D; ++i) p.factor(e, (i % 2 ? -1.0 : 1.0) / qd(q, i));
  p.tail = geometric_tail(e, 1, 1.0 / q, D);
  p *= euler(q * q, (static_cast<double>(q) * q - q - 2) / 2, D);
  return p;
}

inline LogProduct sp_ef(long q, int D) {
  if (q % 2 == 0) {
    auto p = euler_odd(q, 1, D);
    p *= euler(q, (q - 2) / 2.0, D);
    return p;
  }
  auto p = euler_odd(q, 2, D);
  p *= euler(q, (q - 3) / 2.0, D);
  return p;
}

[[noreturn]] inline void no_limit(const GroupSpec& g, RSKind k, const std::string& why) {
  throw UsageError("no closed-form limit for " + to_string(k) + " in " + to_string(g.family) + " at q = " +
                   std::to_string(g.q) + ": " + why);
}

}  // namespace detail

inline LimitValue rs_limit(const GroupSpec& g, RSKind kind, int depth = 64) {
  require(depth >= 1, "depth must be positive");
  const long q = g.q;
  const FieldSize F = field_size(q);
  const bool odd = F.odd();
  if (kind == RSKind::MeanD) detail::no_limit(g, kind, "E[D] has only the c1 bound");
  if (g.family == Family::SOOdd) require(odd, "odd-dimensional SO needs odd q");
  using namespace detail;
  switch (g.family) {
    case Family::GL:
    case Family::SL:
    case Family::U:
    case Family::SU: {
      const bool unitary = is_unitary(g.family);
      const std::string tag = asymptotic_only(g.family) ? " (asymptotic, via " + std::string(unitary ? "U" : "GL") + ")" : "";
      if (kind == RSKind::StronglyRegularSemisimple) no_limit(g, kind, "strong regularity is an orthogonal notion");
      if (kind == RSKind::EigenvalueFree) {
        if (unitary) return unitary_ef(q, depth).finish("prod (1+(-1)^i/q^i)^{q+1} prod (1-q^{-2i})^{(q^2-q-2)/2}" + tag);
        return gl_ef(q, depth).finish("prod (1-q^{-i})^{q-1}" + tag);
      }
      if (unitary) return unitary_rs(q, depth).finish("(1+1/q) prod_{d odd} (1-2/(q^d(q^d+1)))^{Ntilde(q;d)}" + tag);
      Rational e = 1 - frac(1, q);
      return {to_double(e), 0, e, "1-1/q" + tag};
    }
    case Family::Sp: {
      if (kind == RSKind::StronglyRegularSemisimple) no_limit(g, kind, "strong regularity is an orthogonal notion");
      if (kind == RSKind::EigenvalueFree)
        return sp_ef(q, depth).finish(odd ? "prod (1-q^{-(2i-1)})^2 prod (1-q^{-i})^{(q-3)/2}"
                                          : "prod (1-q^{-(2i-1)}) prod (1-q^{-i})^{(q-2)/2}");
      return sp_rs(q, depth).finish("(1-1/q)^f prod (1-2/(q^d(q^d+1)))^{N*(q;2d)}");
    }
    case Family::SOOdd: {
      if (kind == RSKind::EigenvalueFree) no_limit(g, kind, "odd-dimensional SO always has eigenvalue 1");
      if (kind == RSKind::StronglyRegularSemisimple) return sp_rs(q, depth).finish("Sp rs limit");
      auto p = orth_factor(q, 1);
      p *= sp_rs(q, depth);
      return p.finish("(1+q/(q^2-1)) * Sp rs limit");
    }
    case Family::SOPlus:
    case Family::SOMinus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      const std::string via = odd && (g.family == Family::OmegaPlus || g.family == Family::OmegaMinus) ? " (equal to SO)" : "";
      if (kind == RSKind::EigenvalueFree) return sp_ef(q, depth).finish("Sp eigenvalue-free limit" + via);
      if (kind == RSKind::StronglyRegularSemisimple) return sp_rs(q, depth).finish("Sp rs limit" + via);
      auto p = orth_factor(q, odd ? 2 : 1);
      p *= sp_rs(q, depth);
      return p.finish(std::string(odd ? "(1+q/(q^2-1))^2" : "(1+q/(q^2-1))") + " * Sp rs limit" + via);
    }
    case Family::OPlus:
    case Family::OMinus: {
      auto p = constant(0.5);
      if (kind == RSKind::EigenvalueFree) {
        p *= sp_ef(q, depth);
        return p.finish("1/2 * Sp eigenvalue-free limit");
      }
      if (odd) no_limit(g, kind, "reflection-type elements of O+-(2n,q), q odd, are not modelled");
      if (kind == RSKind::RegularSemisimple) p *= orth_factor(q, 1);
      p *= sp_rs(q, depth);
      return p.finish(kind == RSKind::RegularSemisimple ? "1/2 (1+q/(q^2-1)) * Sp rs limit" : "1/2 * Sp rs limit");
    }
  }
  throw UsageError("unknown family");
}

// Regular semisimple and eigenvalue free at once, SO+-(2n,q) with q odd.
// Sum part: prod (1+u^d/(q^d+1))^{N*(q;2d)} prod_{d>=2} (1+u^d/(q^d-1))^{M*(q;d)}.
inline TruncatedSeries rs_eigenvalue_free_series(const GroupSpec& g, int order) {
  require(order >= 1, "series order must be at least 1");
  g.validate();
  require(g.family == Family::SOPlus || g.family == Family::SOMinus, "rs and eigenvalue-free series is for SO+- only");
  require(g.field().odd(), "rs and eigenvalue-free series needs odd q");
  auto part = [&](const FamilyModel& m) {
    TruncatedSeries r = TruncatedSeries::one(order);
    for (auto& c : m.comps)
      if (!c.linear) r = mul(r, embed(pow_int(TruncatedSeries::binomial(c.atom.order(), 1, c.c1()), c.count), c.degree, order));
    return r;
  };
  auto S = part(orth_sum_model(g.q, order)), D = part(orth_diff_model(g.q, order));
  return detail::with_constant(orthogonal_sign(g.family) > 0 ? S + D : S - D, 1);
}

// (1+1/(q-1))^{-(q-3)/2} * Sp rs limit, for SO+- and Omega+- with q odd.
inline LimitValue rs_eigenvalue_free_limit(const GroupSpec& g, int depth = 64) {
  const long q = g.q;
  require(field_size(q).odd(), "rs and eigenvalue-free limit needs odd q");
  switch (g.family) {
    case Family::SOPlus:
    case Family::SOMinus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: break;
    default: throw UsageError("rs and eigenvalue-free limit is for SO+- and Omega+-");
  }
  detail::LogProduct p;
  p.factor(-(q - 3) / 2.0, 1.0 / static_cast<double>(q - 1));
  p *= detail::sp_rs(q, depth);
  return p.finish("(1+1/(q-1))^{-(q-3)/2} * Sp rs limit");
}

}  // namespace derange
