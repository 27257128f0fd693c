#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "derange/weylstats.hpp"

using namespace derange;

namespace {

constexpr FixMode kModes[] = {FixMode::Any, FixMode::PositiveOnly, FixMode::EvenOnly, FixMode::NegParityEven,
                              FixMode::NegParityOdd};

int mode_index(FixMode m) {
  for (int i = 0; i < 5; ++i)
    if (kModes[i] == m) return i;
  return -1;
}

// Features of one signed permutation, read off the raw map.
struct Element {
  int pos_fixed = 0, pos_two = 0, neg_fixed = 0, neg_two = 0;
  bool even_perm = true;
  int minus_signs = 0;
  int neg_cycles = 0;
  std::vector<std::array<bool, 5>> fixable;  // [k][mode]
};

// w[i] = +-(j+1): i -> j with a sign.
Element analyse(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  Element e;
  std::vector<int> pi(n), sg(n);
  for (int i = 0; i < n; ++i) {
    pi[i] = std::abs(w[i]) - 1;
    sg[i] = w[i] > 0 ? 1 : -1;
    e.minus_signs += sg[i] < 0;
  }
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inversions += pi[i] > pi[j];
  e.even_perm = inversions % 2 == 0;

  std::vector<int> cyc_len(n);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    int sign = 1;
    for (int j = i; !seen[j]; j = pi[j]) {
      seen[j] = 1;
      orbit.push_back(j);
      sign *= sg[j];
    }
    const int L = static_cast<int>(orbit.size());
    for (int j : orbit) cyc_len[j] = L;
    if (sign < 0) ++e.neg_cycles;
    if (L == 1) (sign > 0 ? e.pos_fixed : e.neg_fixed)++;
    if (L == 2) (sign > 0 ? e.pos_two : e.neg_two)++;
  }

  e.fixable.assign(n + 1, {false, false, false, false, false});
  for (int S = 0; S < (1 << n); ++S) {
    bool stable = true;
    for (int i = 0; i < n && stable; ++i)
      if ((S >> i & 1) && !(S >> pi[i] & 1)) stable = false;
    if (!stable) continue;
    const int k = __builtin_popcount(S);
    auto& f = e.fixable[k];
    f[mode_index(FixMode::Any)] = true;
    bool all_even = true;
    int prod = 1;
    for (int i = 0; i < n; ++i)
      if (S >> i & 1) {
        all_even = all_even && cyc_len[i] % 2 == 0;
        prod *= sg[i];
      }
    if (all_even) f[mode_index(FixMode::EvenOnly)] = true;
    f[mode_index(prod > 0 ? FixMode::NegParityEven : FixMode::NegParityOdd)] = true;
    // Some choice of signed basis vectors on S is permuted by w.
    for (int eps = 0; eps < (1 << n); ++eps) {
      if (eps & ~S) continue;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (S >> i & 1) {
          const int si = (eps >> i & 1) ? -1 : 1;
          const int sj = (eps >> pi[i] & 1) ? -1 : 1;
          ok = si * sg[i] == sj;
        }
      if (ok) {
        f[mode_index(FixMode::PositiveOnly)] = true;
        break;
      }
    }
  }
  return e;
}

std::vector<Element> all_elements(int n, bool signed_group) {
  std::vector<Element> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    for (int mask = 0; mask < (signed_group ? (1 << n) : 1); ++mask) {
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = (mask >> i & 1) ? -p[i] : p[i];
      out.push_back(analyse(w));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool in_group(const Element& e, WeylGroup g) {
  switch (g) {
    case WeylGroup::AnEven: return e.even_perm;
    case WeylGroup::AnOdd: return !e.even_perm;
    case WeylGroup::Dn: return e.minus_signs % 2 == 0;
    case WeylGroup::DnMinus: return e.minus_signs % 2 == 1;
    default: return true;
  }
}

bool brute_satisfies(const Element& e, const WeylConstraint& c) {
  if (!c.fixed_points.admits(e.pos_fixed) || !c.two_cycles.admits(e.pos_two) ||
      !c.neg_fixed_points.admits(e.neg_fixed) || !c.neg_two_cycles.admits(e.neg_two))
    return false;
  if (c.neg_parity && (e.neg_cycles % 2 == 1) != (*c.neg_parity == Parity::Odd)) return false;
  if (c.fix && e.fixable[c.fix->k][mode_index(c.fix->mode)] != c.fix->fixes) return false;
  return true;
}

Rational brute_proportion(const std::vector<Element>& els, const WeylConstraint& c) {
  long total = 0, hit = 0;
  for (auto& e : els) {
    if (!in_group(e, c.group)) continue;
    ++total;
    hit += brute_satisfies(e, c);
  }
  return frac(hit, total);
}

Rational central(int j) { return frac(binomial(2 * j, j), ipow(4, j)); }

WeylConstraint fixing(WeylGroup g, int k, FixMode m = FixMode::Any, bool fixes = true) {
  WeylConstraint c;
  c.group = g;
  c.fix = FixKSet{k, m, fixes};
  return c;
}

}  // namespace

TEST_CASE("cycle-type weights are normalized", "[weylstats]") {
  for (int n = 0; n <= 15; ++n) {
    Rational s = 0;
    for (auto& lam : enumerate_partitions(n)) s += cycle_type_weight(lam);
    CHECK(s == 1);
  }
  for (int n = 0; n <= 10; ++n) {
    Rational s = 0;
    for (auto& t : enumerate_signed_cycle_types(n)) s += t.weight();
    CHECK(s == 1);
  }
}

TEST_CASE("S_n and A_n cosets against brute force", "[weylstats][oracle]") {
  const std::vector<Cap> fixed_caps = {Cap{}, Cap::at_most(0), Cap::at_most(2), Cap::between(1, 2)};
  const std::vector<Cap> two_caps = {Cap{}, Cap::at_most(0)};
  for (int n = 1; n <= 7; ++n) {
    const auto els = all_elements(n, false);
    for (auto g : {WeylGroup::Sn, WeylGroup::AnEven, WeylGroup::AnOdd}) {
      if (g == WeylGroup::AnOdd && n < 2) continue;
      std::vector<std::optional<FixKSet>> fixes = {std::nullopt};
      for (int k = 0; k <= n; ++k)
        for (auto m : {FixMode::Any, FixMode::EvenOnly})
          for (bool f : {true, false}) fixes.push_back(FixKSet{k, m, f});
      for (auto& fx : fixes)
        for (auto& fc : fixed_caps)
          for (auto& tc : two_caps) {
            WeylConstraint c;
            c.group = g;
            c.fix = fx;
            c.fixed_points = fc;
            c.two_cycles = tc;
            INFO("n=" << n << " group=" << to_string(g) << " k=" << (fx ? fx->k : -1));
            CHECK(proportion(n, c) == brute_proportion(els, c));
          }
    }
  }
  CHECK(proportion(4, fixing(WeylGroup::Sn, 2)) == frac(10, 24));
}

TEST_CASE("signed groups against brute force", "[weylstats][oracle]") {
  const std::vector<Cap> caps = {Cap{}, Cap::at_most(0), Cap::at_most(1)};
  for (int n = 1; n <= 5; ++n) {
    const auto els = all_elements(n, true);
    for (auto g : {WeylGroup::Bn, WeylGroup::Dn, WeylGroup::DnMinus}) {
      std::vector<std::optional<FixKSet>> fixes = {std::nullopt};
      for (int k = 0; k <= n; ++k)
        for (auto m : {FixMode::Any, FixMode::PositiveOnly, FixMode::NegParityEven, FixMode::NegParityOdd})
          for (bool f : {true, false}) fixes.push_back(FixKSet{k, m, f});
      std::vector<std::optional<Parity>> parities = {std::nullopt};
      if (g != WeylGroup::DnMinus) parities.push_back(Parity::Even);
      if (g != WeylGroup::Dn) parities.push_back(Parity::Odd);
      for (auto& fx : fixes)
        for (auto& par : parities)
          for (auto& fc : caps)
            for (auto& nf : caps)
              for (auto& tc : {Cap{}, Cap::at_most(0)}) {
                WeylConstraint c;
                c.group = g;
                c.fix = fx;
                c.neg_parity = par;
                c.fixed_points = fc;
                c.neg_fixed_points = nf;
                c.two_cycles = tc;
                c.neg_two_cycles = tc;
                INFO("n=" << n << " group=" << to_string(g) << " k=" << (fx ? fx->k : -1));
                CHECK(proportion(n, c) == brute_proportion(els, c));
              }
    }
  }
}

TEST_CASE("series agrees with enumeration", "[weylstats][property]") {
  for (auto g : {WeylGroup::Sn, WeylGroup::AnEven, WeylGroup::AnOdd, WeylGroup::Bn, WeylGroup::Dn, WeylGroup::DnMinus})
    for (int n = 2; n <= 14; ++n) {
      WeylConstraint c;
      c.group = g;
      c.fixed_points = Cap::at_most(1);
      c.two_cycles = Cap::between(0, 2);
      if (is_signed(g)) c.neg_fixed_points = Cap::at_most(0);
      CHECK(weyl_series(c, n).coefficient(n) == proportion_enumerated(n, c));
    }
}

TEST_CASE("closed forms", "[weylstats]") {
  for (int k = 1; k <= 15; ++k) {
    auto c = fixing(WeylGroup::Sn, 2 * k, FixMode::EvenOnly);
    CHECK(proportion(2 * k, c) == central(k));
  }
  WeylConstraint b;
  b.group = WeylGroup::Bn;
  CHECK(proportion(1, fixing(WeylGroup::Bn, 1, FixMode::PositiveOnly)) == frac(1, 2));
  b.neg_parity = Parity::Even;
  for (int n = 1; n <= 12; ++n) CHECK(proportion(n, b) == frac(1, 2));
  for (int k = 1; k <= 8; ++k) CHECK(proportion(k, fixing(WeylGroup::Bn, k, FixMode::PositiveOnly)) == central(k));
  CHECK(proportion(3, fixing(WeylGroup::Sn, 1)) == frac(2, 3));
  CHECK(proportion(2, fixing(WeylGroup::Sn, 2, FixMode::EvenOnly)) == frac(1, 2));
}

TEST_CASE("A_n coset derangements", "[weylstats]") {
  CHECK(an_coset_derangements(3, Coset::Even) == frac(2, 3));
  CHECK(an_coset_derangements(3, Coset::Odd) == 0);
  CHECK(an_coset_derangements(2, Coset::Odd) == 1);
  CHECK_THROWS_AS(an_coset_derangements(1, Coset::Odd), UsageError);
  for (int n = 2; n <= 7; ++n) {
    const auto els = all_elements(n, false);
    for (auto [coset, g] : {std::pair{Coset::Even, WeylGroup::AnEven}, std::pair{Coset::Odd, WeylGroup::AnOdd}}) {
      WeylConstraint c;
      c.group = g;
      c.fixed_points = Cap::at_most(0);
      CHECK(an_coset_derangements(n, coset) == brute_proportion(els, c));
    }
  }
  for (int n = 5; n <= 40; ++n) {
    CHECK(an_coset_derangements(n, Coset::Even) >= frac(1, 3));
    CHECK(an_coset_derangements(n, Coset::Odd) >= frac(1, 3));
  }
}

TEST_CASE("gcd statistic", "[weylstats]") {
  CHECK(sn_gcd_bad(2, 2) == 1);
  CHECK(sn_gcd_bad(1, 2) == 0);
  for (int n = 1; n <= 7; ++n)
    for (long m : {2L, 3L, 6L}) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      long bad = 0, total = 0;
      do {
        std::map<int, int> mult;
        std::vector<char> seen(n, 0);
        for (int i = 0; i < n; ++i) {
          if (seen[i]) continue;
          int L = 0;
          for (int j = i; !seen[j]; j = p[j]) seen[j] = 1, ++L;
          ++mult[L];
        }
        long g = m;
        for (auto [a, b] : mult) g = std::gcd(g, static_cast<long>(a) * b);
        bad += g != 1;
        ++total;
      } while (std::next_permutation(p.begin(), p.end()));
      CHECK(sn_gcd_bad(n, m) == frac(bad, total));
    }
  CHECK_THROWS_AS(sn_gcd_bad(3, 1), UsageError);
}

TEST_CASE("even negative cycles with even multiplicity", "[weylstats]") {
  CHECK(bn_even_negcycle_even_mult(1) == 1);
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long good = 0, total = 0;
    do {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::map<int, int> neg;
        std::vector<char> seen(n, 0);
        for (int i = 0; i < n; ++i) {
          if (seen[i]) continue;
          int L = 0, s = 1;
          for (int j = i; !seen[j]; j = p[j]) seen[j] = 1, ++L, s *= (mask >> j & 1) ? -1 : 1;
          if (s < 0) ++neg[L];
        }
        bool ok = true;
        for (auto [L, b] : neg) ok = ok && !(L % 2 == 0 && b % 2);
        good += ok;
        ++total;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(bn_even_negcycle_even_mult(n) == frac(good, total));
  }
  const auto s = bn_even_negcycle_even_mult_series(25);
  for (int n = 0; n <= 25; ++n) CHECK(s.coefficient(n) == bn_even_negcycle_even_mult_enumerated(n));
  CHECK(bn_even_negcycle_even_mult(20) < bn_even_negcycle_even_mult(10));
  CHECK(bn_even_negcycle_even_mult(40) == bn_even_negcycle_even_mult_series(40).coefficient(40));
}

TEST_CASE("named constants", "[weylstats]") {
  REQUIRE(named_constants().size() == 4);
  CHECK(named_constant("9/(8e)") == Catch::Approx(9.0 / (8.0 * std::exp(1.0))).epsilon(1e-14));
  CHECK(named_constant("3/(4e^{5/4})") == Catch::Approx(0.75 * std::exp(-1.25)).epsilon(1e-14));
  for (auto& c : named_constants()) {
    INFO(c.name);
    CHECK(c.value() <= to_double(c.cap));
    CHECK(std::abs(to_double(named_constant_witness(c.name, 60)) - c.value()) < 2e-3);
  }
  CHECK_THROWS_AS(named_constant("nope"), UsageError);
  CHECK_THROWS_AS(named_constant_witness("nope", 5), UsageError);
}

TEST_CASE("uniform bounds on fixing k-sets", "[weylstats][property]") {
  for (int n = 2; n <= 24; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(proportion(n, fixing(WeylGroup::Sn, k)) <= frac(2, 3));
      CHECK(proportion(n, fixing(WeylGroup::Sn, k)) == proportion(n, fixing(WeylGroup::Sn, n - k)));
      if (k >= 2)
        for (int cap = 0; cap <= 2; ++cap) {
          auto c = fixing(WeylGroup::Sn, k);
          c.fixed_points = Cap::at_most(cap);
          CHECK(proportion(n, c) <= frac(3, 5));
        }
    }
  for (int n = 1; n <= 15; ++n)
    for (int k = 1; k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(proportion(n, fixing(WeylGroup::Bn, k, FixMode::PositiveOnly)) <= central(k));
      if (n > k)
        for (auto g : {WeylGroup::Dn, WeylGroup::DnMinus}) {
          CHECK(proportion(n, fixing(g, k, FixMode::PositiveOnly)) <= central(k));
          CHECK(proportion(n, fixing(g, k, FixMode::NegParityEven)) <= frac(1, 2));
          CHECK(proportion(n, fixing(g, k, FixMode::NegParityOdd)) <= frac(1, 2));
        }
    }
  for (int n = 2; n <= 16; ++n)
    for (int k = 2; k <= n; k += 2) CHECK(proportion(n, fixing(WeylGroup::Sn, k, FixMode::EvenOnly)) <= central(k / 2));
  for (int j = 1; j <= 40; ++j) {
    CHECK(to_double(central(j)) < 1 / std::sqrt(M_PI * j));
    CHECK(central(j + 1) < central(j));
  }
}

TEST_CASE("fixed points are asymptotically Poisson", "[weylstats]") {
  double tv = 0;
  for (int j = 0; j <= 30; ++j) {
    WeylConstraint c;
    c.fixed_points = Cap::between(j, j);
    double poisson = std::exp(-1.0);
    for (int i = 1; i <= j; ++i) poisson /= i;
    tv += std::abs(to_double(proportion(30, c)) - poisson);
  }
  CHECK(tv < 1e-12);
}

TEST_CASE("known bounds hold wherever they apply", "[weylstats][property]") {
  CHECK(known_weyl_bound(18, fixing(WeylGroup::Sn, 3))->value == frac(2, 3));
  CHECK(known_weyl_bound(12, fixing(WeylGroup::Bn, 2, FixMode::PositiveOnly))->value == frac(3, 8));
  CHECK_FALSE(known_weyl_bound(12, fixing(WeylGroup::Bn, 2)).has_value());
  auto an = fixing(WeylGroup::AnEven, 1, FixMode::Any, false);
  CHECK(known_weyl_bound(5, an)->lower);
  CHECK_FALSE(known_weyl_bound(4, an).has_value());
  long applied = 0;
  for (auto g : {WeylGroup::Sn, WeylGroup::AnEven, WeylGroup::AnOdd, WeylGroup::Bn, WeylGroup::Dn, WeylGroup::DnMinus})
    for (int n = 2; n <= 12; ++n)
      for (int k = 1; k <= n; ++k)
        for (auto m : kModes)
          for (bool f : {true, false})
            for (auto cap : {Cap{}, Cap::at_most(1)}) {
              auto c = fixing(g, k, m, f);
              c.fixed_points = cap;
              try {
                c.validate(n);
              } catch (const UsageError&) {
                continue;
              }
              const auto b = known_weyl_bound(n, c);
              if (!b) continue;
              ++applied;
              const Rational p = proportion(n, c);
              INFO(to_string(g) << " n=" << n << " k=" << k << " " << b->source);
              CHECK((b->lower ? p >= b->value : p <= b->value));
            }
  CHECK(applied > 200);
}

TEST_CASE("guards and validation", "[weylstats]") {
  CHECK_THROWS_AS(proportion_enumerated(41, WeylConstraint{}), ResourceError);
  CHECK_THROWS_AS(proportion(41, fixing(WeylGroup::Sn, 3)), ResourceError);
  CHECK_THROWS_AS(proportion(26, fixing(WeylGroup::Bn, 3)), ResourceError);
  WeylConstraint der;
  der.fixed_points = Cap::at_most(0);
  CHECK_NOTHROW(proportion(60, der));
  CHECK(proportion(60, der) == weyl_series(der, 60).coefficient(60));
  CHECK_THROWS_AS(proportion(3, fixing(WeylGroup::Sn, 5)), UsageError);
  CHECK_THROWS_AS(proportion(4, fixing(WeylGroup::Sn, 2, FixMode::PositiveOnly)), UsageError);
  CHECK_THROWS_AS(proportion(4, fixing(WeylGroup::Bn, 2, FixMode::EvenOnly)), UsageError);
  CHECK_THROWS_AS(proportion(1, [] { WeylConstraint c; c.group = WeylGroup::AnOdd; return c; }()), UsageError);
  CHECK_THROWS_AS(proportion(0, WeylConstraint{}), UsageError);
  WeylConstraint neg;
  neg.neg_fixed_points = Cap::at_most(0);
  CHECK_THROWS_AS(proportion(4, neg), UsageError);
  WeylConstraint d;
  d.group = WeylGroup::Dn;
  d.neg_parity = Parity::Odd;
  CHECK_THROWS_AS(proportion(4, d), UsageError);
}
