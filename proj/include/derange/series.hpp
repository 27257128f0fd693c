#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace derange {

inline constexpr int kDefaultOrder = 64;

// DERANGE_ORDER overrides the default truncation order.
inline int default_order() {
  const char* env = std::getenv("DERANGE_ORDER");
  if (!env || !*env) return kDefaultOrder;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0 || v > 100000)
    throw UsageError(std::string("DERANGE_ORDER must be a positive integer, got '") + env + "'");
  return static_cast<int>(v);
}

// Power series in u over Q, coefficients of u^0..u^order.
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(0) {}
  explicit TruncatedSeries(int order) {
    require(order >= 0, "series order must be non-negative");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  }
  TruncatedSeries(int order, std::vector<Rational> coeffs) : TruncatedSeries(order) {
    require(coeffs.size() <= c_.size(), "more coefficients than the truncation order allows");
    for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
  }

  static TruncatedSeries constant(int order, const Rational& c) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
  }
  static TruncatedSeries one(int order) { return constant(order, 1); }
  // c*u^k, silently zero when k > order.
  static TruncatedSeries monomial(int order, int k, const Rational& c) {
    TruncatedSeries s(order);
    if (k <= order) s.c_[k] = c;
    return s;
  }
  // 1 + c*u^k
  static TruncatedSeries binomial(int order, int k, const Rational& c) {
    TruncatedSeries s = one(order);
    if (k <= order) s.c_[k] += c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coefficient(int n) const {
    if (n < 0 || n > order())
      throw UsageError("coefficient index " + std::to_string(n) + " outside 0.." + std::to_string(order()));
    return c_[n];
  }

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

  void same_order(const TruncatedSeries& o) const {
    if (o.order() != order())
      throw UsageError("series order mismatch: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i <= order(); ++i)
      if (c_[i] != 0) s.push_back(i);
    return s;
  }

 private:
  friend class SeriesAccess;
  std::vector<Rational> c_;
};

// Mutable access for the algorithms below; everything else sees immutable values.
class SeriesAccess {
 public:
  static std::vector<Rational>& raw(TruncatedSeries& s) { return s.c_; }
};

inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.same_order(b);
  const int N = a.order();
  TruncatedSeries r(N);
  auto& out = SeriesAccess::raw(r);
  const auto sa = a.support();
  const auto sb = b.support();
  Rational t;
  for (int i : sa)
    for (int j : sb) {
      if (i + j > N) break;
      mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      out[i + j] += t;
    }
  return r;
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

inline TruncatedSeries inverse(const TruncatedSeries& a) {
  if (a[0] == 0) throw SingularSeriesError("inverse of a series with zero constant term");
  const int N = a.order();
  TruncatedSeries r(N);
  auto& b = SeriesAccess::raw(r);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  const auto sa = a.support();
  for (int k = 1; k <= N; ++k) {
    Rational acc = 0;
    for (int j : sa) {
      if (j == 0) continue;
      if (j > k) break;
      acc += a[j] * b[k - j];
    }
    b[k] = -acc * inv0;
  }
  return r;
}

// a^e for a(0) = 1, via a*(a^e)' = e*a'*a^e.
inline TruncatedSeries pow_rational(const TruncatedSeries& a, const Rational& e) {
  if (a[0] != 1) throw UsageError("pow_rational needs constant term exactly 1");
  const int N = a.order();
  TruncatedSeries r(N);
  auto& b = SeriesAccess::raw(r);
  b[0] = 1;
  const auto sa = a.support();
  Rational t;
  for (int k = 1; k <= N; ++k) {
    Rational acc = 0;
    for (int j : sa) {
      if (j == 0) continue;
      if (j > k) break;
      if (b[k - j] == 0) continue;
      t = e * j - (k - j);
      acc += t * a[j] * b[k - j];
    }
    b[k] = acc / k;
  }
  return r;
}

inline TruncatedSeries pow_int(const TruncatedSeries& a, const Integer& e) { return pow_rational(a, Rational(e)); }

inline TruncatedSeries exp_series(const TruncatedSeries& a) {
  if (a[0] != 0) throw UsageError("exp_series needs constant term 0");
  const int N = a.order();
  TruncatedSeries r(N);
  auto& b = SeriesAccess::raw(r);
  b[0] = 1;
  const auto sa = a.support();
  for (int k = 1; k <= N; ++k) {
    Rational acc = 0;
    for (int j : sa) {
      if (j > k) break;
      acc += j * a[j] * b[k - j];
    }
    b[k] = acc / k;
  }
  return r;
}

inline TruncatedSeries log_series(const TruncatedSeries& a) {
  if (a[0] != 1) throw UsageError("log_series needs constant term 1");
  const int N = a.order();
  // log a = integral of a'/a
  TruncatedSeries d(N);
  auto& dv = SeriesAccess::raw(d);
  for (int k = 1; k <= N; ++k) dv[k - 1] = k * a[k];
  TruncatedSeries q = mul(d, inverse(a));
  TruncatedSeries r(N);
  auto& out = SeriesAccess::raw(r);
  for (int k = 1; k <= N; ++k) out[k] = q[k - 1] / k;
  return r;
}

// u d/du
inline TruncatedSeries theta(const TruncatedSeries& a) {
  TruncatedSeries r = a;
  auto& c = SeriesAccess::raw(r);
  for (int k = 0; k <= r.order(); ++k) c[k] *= k;
  return r;
}

// u -> c*u
inline TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries r = a;
  auto& v = SeriesAccess::raw(r);
  Rational p = 1;
  for (int k = 0; k <= r.order(); ++k) {
    v[k] *= p;
    p *= c;
  }
  return r;
}

// u -> u^m
inline TruncatedSeries dilate(const TruncatedSeries& a, int m) {
  require(m >= 1, "dilation exponent must be positive");
  TruncatedSeries r(a.order());
  auto& v = SeriesAccess::raw(r);
  for (int k = 0; k * m <= a.order(); ++k) v[k * m] = a[k];
  return r;
}

inline TruncatedSeries with_order(const TruncatedSeries& a, int order) {
  TruncatedSeries r(order);
  auto& v = SeriesAccess::raw(r);
  for (int k = 0; k <= order && k <= a.order(); ++k) v[k] = a[k];
  return r;
}

inline TruncatedSeries geometric(int order, const Rational& c = 1) {
  // 1/(1 - c u)
  TruncatedSeries r(order);
  auto& v = SeriesAccess::raw(r);
  Rational p = 1;
  for (int k = 0; k <= order; ++k) {
    v[k] = p;
    p *= c;
  }
  return r;
}

inline TruncatedSeries exp_linear(int order, const Rational& c) {
  // e^{c u}
  TruncatedSeries r(order);
  auto& v = SeriesAccess::raw(r);
  Rational p = 1;
  for (int k = 0; k <= order; ++k) {
    v[k] = p;
    p = p * c / (k + 1);
  }
  return r;
}

// F(u) = prod_{j>=1} g(u/Q^j), solved from F(u) = g(u/Q) F(u/Q):
// f_n (Q^n - 1) = sum_{k>=1} g_k f_{n-k}.  Exact for any rational Q with Q^n != 1.
inline TruncatedSeries q_dilation_product(const TruncatedSeries& g, const Rational& Q) {
  if (g[0] != 1) throw UsageError("q_dilation_product needs g(0) = 1");
  const int N = g.order();
  TruncatedSeries r(N);
  auto& f = SeriesAccess::raw(r);
  f[0] = 1;
  const auto sg = g.support();
  Rational Qn = 1;
  for (int n = 1; n <= N; ++n) {
    Qn *= Q;
    if (Qn == 1) throw UsageError("q_dilation_product: Q^n = 1");
    Rational acc = 0;
    for (int k : sg) {
      if (k == 0) continue;
      if (k > n) break;
      acc += g[k] * f[n - k];
    }
    f[n] = acc / (Qn - 1);
  }
  return r;
}

inline Rational max_abs_deviation(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.same_order(b);
  Rational m = 0;
  for (int k = 0; k <= a.order(); ++k) {
    Rational d = abs(a[k] - b[k]);
    if (d > m) m = d;
  }
  return m;
}

// First-order jet in t at t = 1.
struct DualSeries {
  TruncatedSeries value;
  TruncatedSeries derivative;

  DualSeries() = default;
  DualSeries(TruncatedSeries v, TruncatedSeries d) : value(std::move(v)), derivative(std::move(d)) {
    value.same_order(derivative);
  }
  static DualSeries constant(const TruncatedSeries& v) { return {v, TruncatedSeries(v.order())}; }
  // S(u*t) for a series S in u alone: d/dt at t = 1 is u S'(u).
  static DualSeries of_ut(const TruncatedSeries& s) { return {s, theta(s)}; }
  int order() const { return value.order(); }
};

inline DualSeries dual_add(const DualSeries& a, const DualSeries& b) {
  return {a.value + b.value, a.derivative + b.derivative};
}

inline DualSeries dual_mul(const DualSeries& a, const DualSeries& b) {
  return {mul(a.value, b.value), mul(a.value, b.derivative) + mul(a.derivative, b.value)};
}

inline DualSeries dual_pow(const DualSeries& a, const Rational& e) {
  TruncatedSeries v = pow_rational(a.value, e);
  if (a.derivative.support().empty()) return DualSeries::constant(v);
  TruncatedSeries vm1 = pow_rational(a.value, e - 1);
  return {v, mul(vm1, a.derivative) * e};
}

}  // namespace derange
