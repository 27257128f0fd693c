#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "series.hpp"

namespace derange {

inline constexpr int kSymmetricGuard = 40;
inline constexpr int kSignedGuard = 25;

enum class WeylGroup { Sn, AnEven, AnOdd, Bn, Dn, DnMinus };
enum class FixMode { Any, PositiveOnly, EvenOnly, NegParityEven, NegParityOdd };
enum class Parity { Even, Odd };

inline bool is_signed(WeylGroup g) { return g == WeylGroup::Bn || g == WeylGroup::Dn || g == WeylGroup::DnMinus; }

inline std::string to_string(WeylGroup g) {
  switch (g) {
    case WeylGroup::Sn: return "S";
    case WeylGroup::AnEven: return "A+";
    case WeylGroup::AnOdd: return "A-";
    case WeylGroup::Bn: return "B";
    case WeylGroup::Dn: return "D";
    case WeylGroup::DnMinus: return "D-";
  }
  return "?";
}

inline std::string to_string(FixMode m) {
  switch (m) {
    case FixMode::Any: return "any";
    case FixMode::PositiveOnly: return "positive";
    case FixMode::EvenOnly: return "even";
    case FixMode::NegParityEven: return "neg-even";
    case FixMode::NegParityOdd: return "neg-odd";
  }
  return "?";
}

// Inclusive range on a count; max < 0 means unbounded.
struct Cap {
  int min = 0;
  int max = -1;
  bool admits(int x) const { return x >= min && (max < 0 || x <= max); }
  bool trivial() const { return min == 0 && max < 0; }
  static Cap at_most(int m) { return {0, m}; }
  static Cap between(int lo, int hi) { return {lo, hi}; }
};

struct FixKSet {
  int k = 1;
  FixMode mode = FixMode::Any;
  bool fixes = true;  // false: the element must fix no such k-set
};

// For S_n and the A_n cosets the unsigned cycles use the positive fields.
struct WeylConstraint {
  WeylGroup group = WeylGroup::Sn;
  std::optional<FixKSet> fix;
  Cap fixed_points;
  Cap two_cycles;
  Cap neg_fixed_points;
  Cap neg_two_cycles;
  std::optional<Parity> neg_parity;

  void validate(int n) const {
    require(n >= 1, "Weyl statistics need n >= 1");
    const bool sg = is_signed(group);
    if (!sg) {
      require(neg_fixed_points.trivial() && neg_two_cycles.trivial(), "negative-cycle caps need a signed group");
      require(!neg_parity, "negative-cycle parity needs a signed group");
    }
    if (fix) {
      require(fix->k >= 0 && fix->k <= n, "fix k-set needs 0 <= k <= n");
      const FixMode m = fix->mode;
      if (m == FixMode::EvenOnly) require(!sg, "even-cycles-only mode applies to S_n");
      if (m == FixMode::PositiveOnly || m == FixMode::NegParityEven || m == FixMode::NegParityOdd)
        require(sg, "signed fix modes need a signed group");
    }
    if (group == WeylGroup::AnOdd) require(n >= 2, "the odd coset of A_1 is empty");
    if (neg_parity && group == WeylGroup::Dn) require(*neg_parity == Parity::Even, "D_n has an even number of negative cycles");
    if (neg_parity && group == WeylGroup::DnMinus) require(*neg_parity == Parity::Odd, "D_n^- has an odd number of negative cycles");
  }
};

struct SignedCycleType {
  Partition positive;
  Partition negative;
  int n() const { return positive.size() + negative.size(); }
  // 1 / prod_i a_i! b_i! (2i)^{a_i+b_i}
  Rational weight() const {
    Integer d = 1;
    for (auto [i, a] : positive.multiplicities()) d *= factorial(a) * ipow(2L * i, a);
    for (auto [i, b] : negative.multiplicities()) d *= factorial(b) * ipow(2L * i, b);
    return frac(Integer(1), d);
  }
};

// 1/z_lambda
inline Rational cycle_type_weight(const Partition& lam) {
  Integer z = 1;
  for (auto [i, m] : lam.multiplicities()) z *= ipow(i, m) * factorial(m);
  return frac(Integer(1), z);
}

inline int permutation_sign(const Partition& lam) { return ((lam.size() - lam.length()) % 2) ? -1 : 1; }

template <class F>
void for_each_signed_cycle_type(int n, F&& f) {
  for (int k = n; k >= 0; --k) {
    auto pos = enumerate_partitions(k);
    auto neg = enumerate_partitions(n - k);
    for (auto& a : pos)
      for (auto& b : neg) f(SignedCycleType{a, b});
  }
}

inline std::vector<SignedCycleType> enumerate_signed_cycle_types(int n) {
  require(n >= 0, "n must be non-negative");
  if (n > kSignedGuard) throw ResourceError("signed cycle-type guard: n = " + std::to_string(n) + " > 25");
  std::vector<SignedCycleType> out;
  for_each_signed_cycle_type(n, [&](SignedCycleType t) { out.push_back(std::move(t)); });
  return out;
}

namespace detail {

struct Cycle {
  int len;
  bool negative;
};

// Some sub-multiset of eligible cycles has total length k (with the requested
// parity of negative cycles, for the parity modes).
inline bool fixes_kset(const std::vector<Cycle>& cycles, int k, FixMode mode) {
  std::uint64_t reach[2] = {1, 0};
  for (auto& c : cycles) {
    bool eligible = true;
    if (mode == FixMode::PositiveOnly) eligible = !c.negative;
    if (mode == FixMode::EvenOnly) eligible = c.len % 2 == 0;
    if (!eligible) continue;
    if (mode == FixMode::NegParityEven || mode == FixMode::NegParityOdd) {
      std::uint64_t r0 = reach[0], r1 = reach[1];
      if (c.negative) {
        reach[0] = r0 | (r1 << c.len);
        reach[1] = r1 | (r0 << c.len);
      } else {
        reach[0] = r0 | (r0 << c.len);
        reach[1] = r1 | (r1 << c.len);
      }
    } else {
      reach[0] |= reach[0] << c.len;
    }
  }
  const std::uint64_t bit = std::uint64_t(1) << k;
  if (mode == FixMode::NegParityOdd) return reach[1] & bit;
  return reach[0] & bit;
}

inline bool caps_ok(const WeylConstraint& c, const Partition& pos, const Partition& neg) {
  return c.fixed_points.admits(pos.multiplicity(1)) && c.two_cycles.admits(pos.multiplicity(2)) &&
         c.neg_fixed_points.admits(neg.multiplicity(1)) && c.neg_two_cycles.admits(neg.multiplicity(2));
}

inline bool satisfies(const WeylConstraint& c, const Partition& pos, const Partition& neg) {
  if (!caps_ok(c, pos, neg)) return false;
  const int negc = neg.length();
  if (c.group == WeylGroup::Dn && negc % 2) return false;
  if (c.group == WeylGroup::DnMinus && negc % 2 == 0) return false;
  if (c.neg_parity && (negc % 2 == 1) != (*c.neg_parity == Parity::Odd)) return false;
  if (c.group == WeylGroup::AnEven && permutation_sign(pos) != 1) return false;
  if (c.group == WeylGroup::AnOdd && permutation_sign(pos) != -1) return false;
  if (c.fix) {
    std::vector<Cycle> cyc;
    for (int p : pos.parts()) cyc.push_back({p, false});
    for (int p : neg.parts()) cyc.push_back({p, true});
    if (fixes_kset(cyc, c.fix->k, c.fix->mode) != c.fix->fixes) return false;
  }
  return true;
}

// Factor for i-cycles with weight w = (sign) u^i / (const): sum over allowed counts of w^a/a!.
inline TruncatedSeries capped_exp(int order, int i, const Rational& w, const Cap& cap) {
  TruncatedSeries lin = TruncatedSeries::monomial(order, i, w);
  if (cap.trivial()) return exp_series(lin);
  TruncatedSeries r(order);
  TruncatedSeries term = TruncatedSeries::one(order);
  for (int a = 0; a * i <= order; ++a) {
    if (cap.admits(a)) r += term;
    if (cap.max >= 0 && a >= cap.max) break;
    term = mul(term, lin) * frac(1, a + 1);
  }
  return r;
}

// prod_i factor_i where i-cycles carry weight sgn(i) u^i / den(i), i = 1, 2 capped.
template <class W>
TruncatedSeries cycle_product(int order, W weight, const Cap& c1, const Cap& c2) {
  TruncatedSeries tail(order);
  std::vector<Rational> t(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = 3; i <= order; ++i) t[i] = weight(i);
  tail = exp_series(TruncatedSeries(order, t));
  return mul(mul(capped_exp(order, 1, weight(1), c1), capped_exp(order, 2, weight(2), c2)), tail);
}

}  // namespace detail

// Coefficient n = proportion of the rank-n group meeting the cap/parity part of c
// (for the A_n cosets, n >= 2).
// The fix-k-set part has no univariate series and is rejected.
inline TruncatedSeries weyl_series(const WeylConstraint& c, int order) {
  require(!c.fix, "fix-k-set constraints have no series route; use exact enumeration");
  using detail::cycle_product;
  if (!is_signed(c.group)) {
    auto plain = cycle_product(order, [](int i) { return frac(1, i); }, c.fixed_points, c.two_cycles);
    if (c.group == WeylGroup::Sn) return plain;
    auto twisted = cycle_product(order, [](int i) { return frac(i % 2 ? 1 : -1, i); }, c.fixed_points, c.two_cycles);
    return c.group == WeylGroup::AnEven ? plain + twisted : plain - twisted;
  }
  auto pos = cycle_product(order, [](int i) { return frac(1, 2 * i); }, c.fixed_points, c.two_cycles);
  auto neg_p = cycle_product(order, [](int i) { return frac(1, 2 * i); }, c.neg_fixed_points, c.neg_two_cycles);
  auto neg_m = cycle_product(order, [](int i) { return frac(-1, 2 * i); }, c.neg_fixed_points, c.neg_two_cycles);
  auto at_plus = mul(pos, neg_p);
  auto at_minus = mul(pos, neg_m);
  std::optional<Parity> par = c.neg_parity;
  Rational scale_by = 1;
  if (c.group == WeylGroup::Dn) par = Parity::Even, scale_by = 2;
  if (c.group == WeylGroup::DnMinus) par = Parity::Odd, scale_by = 2;
  if (!par) return at_plus;
  auto r = (*par == Parity::Even ? at_plus + at_minus : at_plus - at_minus) * frac(1, 2);
  return r * scale_by;
}

inline Rational proportion_enumerated(int n, const WeylConstraint& c) {
  c.validate(n);
  Rational total = 0;
  if (!is_signed(c.group)) {
    if (n > kSymmetricGuard) throw ResourceError("S_n enumeration guard: n = " + std::to_string(n) + " > 40");
    const Partition none;
    for_each_partition(n, [&](const std::vector<int>& parts) {
      Partition lam(parts);
      if (detail::satisfies(c, lam, none)) total += cycle_type_weight(lam);
    });
    if (c.group != WeylGroup::Sn && n >= 2) total *= 2;  // A_1 = S_1
    return total;
  }
  if (n > kSignedGuard) throw ResourceError("signed enumeration guard: n = " + std::to_string(n) + " > 25");
  for_each_signed_cycle_type(n, [&](const SignedCycleType& t) {
    if (detail::satisfies(c, t.positive, t.negative)) total += t.weight();
  });
  if (c.group == WeylGroup::Dn || c.group == WeylGroup::DnMinus) total *= 2;
  return total;
}

inline Rational proportion(int n, const WeylConstraint& c) {
  c.validate(n);
  const int guard = is_signed(c.group) ? kSignedGuard : kSymmetricGuard;
  if (n <= guard) return proportion_enumerated(n, c);
  if (c.fix) throw ResourceError("n = " + std::to_string(n) + " beyond the enumeration guard and fix-k-set has no series route");
  return weyl_series(c, n).coefficient(n);
}

enum class Coset { Even, Odd };

// 1/(e^u (1-u)) +- (1+u)/e^u: the sign-twisted cycle index with x_1 = 0.
inline Rational an_coset_derangements(int n, Coset coset) {
  require(n >= 1, "n must be positive");
  if (coset == Coset::Odd && n == 1) throw UsageError("the odd coset of A_1 is empty");
  auto e = exp_linear(n, -1);
  auto plain = mul(e, geometric(n));
  auto twisted = mul(e, TruncatedSeries::binomial(n, 1, 1));
  return coset == Coset::Even ? (plain + twisted).coefficient(n) : (plain - twisted).coefficient(n);
}

inline Rational sn_gcd_bad(int n, long m) {
  require(n >= 1, "n must be positive");
  require(m >= 2, "gcd modulus must be at least 2");
  if (n > kSymmetricGuard) throw ResourceError("S_n enumeration guard: n = " + std::to_string(n) + " > 40");
  Rational total = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    Partition lam(parts);
    long g = m;
    for (auto [a, mult] : lam.multiplicities()) g = std::gcd(g, static_cast<long>(a) * mult);
    if (g != 1) total += cycle_type_weight(lam);
  });
  return total;
}

inline Rational bn_even_negcycle_even_mult_enumerated(int n) {
  require(n >= 0, "n must be non-negative");
  if (n > kSignedGuard) throw ResourceError("signed enumeration guard: n = " + std::to_string(n) + " > 25");
  Rational total = 0;
  for_each_signed_cycle_type(n, [&](const SignedCycleType& t) {
    for (auto [i, b] : t.negative.multiplicities())
      if (i % 2 == 0 && b % 2) return;
    total += t.weight();
  });
  return total;
}

// prod_{i odd} e^{u^i/i} prod_{i even} e^{u^i/(2i)} cosh(u^i/(2i))
inline TruncatedSeries bn_even_negcycle_even_mult_series(int order) {
  std::vector<Rational> lin(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = 1; i <= order; ++i) lin[i] = i % 2 ? frac(1, i) : frac(1, 2 * i);
  TruncatedSeries r = exp_series(TruncatedSeries(order, lin));
  for (int i = 2; i <= order; i += 2) {
    TruncatedSeries ch(order);
    std::vector<Rational> cv(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int j = 0; j * i <= order; j += 2) cv[j * i] = frac(Integer(1), ipow(2L * i, j) * factorial(j));
    r = mul(r, TruncatedSeries(order, cv));
  }
  return r;
}

inline Rational bn_even_negcycle_even_mult(int n) {
  if (n <= kSignedGuard) return bn_even_negcycle_even_mult_enumerated(n);
  return bn_even_negcycle_even_mult_series(n).coefficient(n);
}

// coefficient * e^{exponent}
struct NamedConstant {
  std::string name;
  Rational coefficient;
  Rational e_exponent;
  Rational cap;  // stated decimal upper bound
  double value() const { return to_double(coefficient) * std::exp(to_double(e_exponent)); }
};

inline const std::vector<NamedConstant>& named_constants() {
  static const std::vector<NamedConstant> table = {
      {"3/(4e^{5/4})", frac(3, 4), frac(-5, 4), frac(215, 1000)},
      {"195/(128e^{5/4})", frac(195, 128), frac(-5, 4), frac(437, 1000)},
      {"9/(8e)", frac(9, 8), frac(-1, 1), frac(414, 1000)},
      {"(3/2)/(2e)", frac(3, 4), frac(-1, 1), frac(276, 1000)},
  };
  return table;
}

inline const NamedConstant& named_constant_entry(const std::string& name) {
  for (auto& c : named_constants())
    if (c.name == name) return c;
  throw UsageError("unknown named constant '" + name + "'");
}

inline double named_constant(const std::string& name) { return named_constant_entry(name).value(); }

// The B_n quantity whose n -> infinity limit each named constant describes.
inline Rational named_constant_witness(const std::string& name, int n) {
  WeylConstraint c;
  c.group = WeylGroup::Bn;
  Rational factor = 1;
  if (name == "3/(4e^{5/4})") {
    c.neg_parity = Parity::Even;
    c.fixed_points = Cap::at_most(0);
    c.two_cycles = Cap::at_most(0);
    c.neg_fixed_points = Cap::at_most(1);
  } else if (name == "195/(128e^{5/4})") {
    c.neg_parity = Parity::Even;
    c.fixed_points = Cap::at_most(1);
    c.two_cycles = Cap::at_most(1);
    c.neg_fixed_points = Cap::at_most(2);
  } else if (name == "9/(8e)") {
    c.fixed_points = Cap::at_most(1);
    c.neg_fixed_points = Cap::at_most(1);
    factor = frac(1, 2);
  } else if (name == "(3/2)/(2e)") {
    c.fixed_points = Cap::at_most(0);
    c.neg_fixed_points = Cap::at_most(1);
    factor = frac(1, 2);
  } else {
    throw UsageError("unknown named constant '" + name + "'");
  }
  return factor * weyl_series(c, n).coefficient(n);
}

struct KnownBound {
  Rational value;
  std::string source;
  bool lower = false;  // value bounds the proportion from below
};

// The uniform bound proved for this constraint shape, if any.
inline std::optional<KnownBound> known_weyl_bound(int n, const WeylConstraint& c) {
  if (c.fix && !c.fix->fixes && (c.group == WeylGroup::AnEven || c.group == WeylGroup::AnOdd) && c.fix->mode == FixMode::Any &&
      c.fixed_points.trivial() && c.two_cycles.trivial()) {
    const int k = c.fix->k;
    if ((k >= 2 && 2 * k <= n) || (k == 1 && n >= 5))
      return KnownBound{frac(1, 3), "derangements of an A_n coset on k-sets at least 1/3", true};
    return std::nullopt;
  }
  if (!c.fix || !c.fix->fixes || c.neg_parity || !c.two_cycles.trivial() || !c.neg_fixed_points.trivial() ||
      !c.neg_two_cycles.trivial())
    return std::nullopt;
  const int k = c.fix->k;
  const FixMode m = c.fix->mode;
  auto central = [](int j) { return frac(binomial(2 * j, j), ipow(4, static_cast<unsigned long>(j))); };
  if (c.group == WeylGroup::Sn) {
    if (m == FixMode::Any && c.fixed_points.trivial() && k >= 1 && 2 * k <= n)
      return KnownBound{frac(2, 3), "fixing a k-set, k <= n/2, at most 2/3"};
    if (m == FixMode::Any && c.fixed_points.min == 0 && c.fixed_points.max >= 0 && c.fixed_points.max <= 2 && k >= 2 &&
        2 * k <= n)
      return KnownBound{frac(3, 5), "fixing a k-set with at most 2 fixed points at most 3/5"};
    if (m == FixMode::EvenOnly && c.fixed_points.trivial() && k >= 2 && k % 2 == 0 && k <= n)
      return KnownBound{central(k / 2), "fixing a 2k-set with even cycles at most C(2k,k)/4^k"};
    return std::nullopt;
  }
  if (!c.fixed_points.trivial()) return std::nullopt;
  if (m == FixMode::PositiveOnly) {
    if (c.group == WeylGroup::Bn && k >= 1 && k <= n)
      return KnownBound{central(k), "fixing a k-set with positive cycles at most C(2k,k)/4^k"};
    if ((c.group == WeylGroup::Dn || c.group == WeylGroup::DnMinus) && k >= 1 && n > k)
      return KnownBound{central(k), "fixing a k-set with positive cycles at most C(2k,k)/4^k"};
  }
  if ((m == FixMode::NegParityEven || m == FixMode::NegParityOdd) &&
      (c.group == WeylGroup::Dn || c.group == WeylGroup::DnMinus) && k >= 1 && n > k)
    return KnownBound{frac(1, 2), "fixing a k-set with prescribed negative-cycle parity at most 1/2"};
  return std::nullopt;
}

}  // namespace derange
