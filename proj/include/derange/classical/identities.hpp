#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "components.hpp"
#include "rs.hpp"
#include "../partitions.hpp"

namespace derange {

struct IdentityReport {
  std::string name;
  long q = 0;
  int order = 0;
  Rational deviation;  // max |lhs_n - rhs_n| over n <= order
  bool exact() const { return deviation == 0; }
};

namespace detail {

// prod_{i>=1} (1 - u/Q^i)
inline TruncatedSeries euler_product(const Rational& Q, int N) { return inverse(atom_plus(Q, N)); }

// sum (-u)^n / ((Q^n-1)...(Q-1))
inline TruncatedSeries euler_sum_1(const Rational& Q, int N) {
  std::vector<Rational> s(static_cast<std::size_t>(N) + 1);
  Rational den = 1, Qn = 1;
  for (int n = 0; n <= N; ++n) {
    if (n) {
      Qn *= Q;
      den *= Qn - 1;
    }
    s[n] = (n % 2 ? -1 : 1) / den;
  }
  return TruncatedSeries(N, std::move(s));
}

// sum u^n Q^{C(n,2)} / ((Q^n-1)...(Q-1))
inline TruncatedSeries euler_sum_2(const Rational& Q, int N) {
  std::vector<Rational> s(static_cast<std::size_t>(N) + 1);
  Rational den = 1, Qn = 1;
  for (int n = 0; n <= N; ++n) {
    if (n) {
      Qn *= Q;
      den *= Qn - 1;
    }
    s[n] = rpow(Q, static_cast<long>(n) * (n - 1) / 2) / den;
  }
  return TruncatedSeries(N, std::move(s));
}

struct StongClass {
  long conj_squares;      // sum lambda'_i^2
  std::vector<int> mult;  // sorted multiplicities m_i
  long partitions;
};

// Partitions of each n <= N grouped by (sum lambda'^2, multiplicity multiset);
// the weight depends only on that key. Cached since it is independent of Q.
inline const std::vector<std::vector<StongClass>>& stong_classes(int N) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<StongClass>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<StongClass>> out(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    std::map<std::pair<long, std::vector<int>>, long> groups;
    std::vector<int> mult;
    for_each_partition(n, [&](const std::vector<int>& parts) {
      long sq = 0;
      mult.clear();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        sq += static_cast<long>(2 * i + 1) * parts[i];
        if (i == 0 || parts[i] != parts[i - 1])
          mult.push_back(1);
        else
          ++mult.back();
      }
      std::sort(mult.begin(), mult.end());
      ++groups[{sq, mult}];
    });
    for (auto& [key, c] : groups) out[n].push_back({key.first, key.second, c});
  }
  return cache.emplace(N, std::move(out)).first->second;
}

// 1 + sum_lambda u^|lambda| / (q^{sum lambda'^2} prod (1/q)_{m_i}).  With P_j = (q-1)...(q^j-1),
// (1/q)_m = P_m / q^{m(m+1)/2} and prod P_{m_i} divides P_n (q-multinomials are integers), so
// each coefficient is summed as integers over the denominator P_n q^K.
inline TruncatedSeries stong_sum(long q, int N) {
  std::vector<Integer> P(static_cast<std::size_t>(N) + 1);
  P[0] = 1;
  for (int j = 1; j <= N; ++j) P[j] = P[j - 1] * (ipow(q, static_cast<unsigned long>(j)) - 1);
  std::vector<Rational> s(static_cast<std::size_t>(N) + 1);
  const auto& classes = stong_classes(N);
  for (int n = 0; n <= N; ++n) {
    std::vector<long> shift;
    long K = 0;
    for (auto& c : classes[n]) {
      long t = c.conj_squares;
      for (int m : c.mult) t -= static_cast<long>(m) * (m + 1) / 2;
      shift.push_back(t);
      K = std::max(K, t);
    }
    Integer num = 0, den;
    for (std::size_t i = 0; i < classes[n].size(); ++i) {
      auto& c = classes[n][i];
      Integer prod = 1;
      for (int m : c.mult) prod *= P[m];
      Integer term;
      mpz_divexact(term.get_mpz_t(), P[n].get_mpz_t(), prod.get_mpz_t());
      num += term * c.partitions * ipow(q, static_cast<unsigned long>(K - shift[i]));
    }
    den = P[n] * ipow(q, static_cast<unsigned long>(K));
    s[n] = frac(num, den);
  }
  return TruncatedSeries(N, std::move(s));
}

// 1 + sum_n (-1)^n (u^{n(3n-1)/2} + u^{n(3n+1)/2})
inline TruncatedSeries pentagonal_sum(int N) {
  std::vector<Rational> s(static_cast<std::size_t>(N) + 1);
  s[0] = 1;
  for (long n = 1; n * (3 * n - 1) / 2 <= N; ++n) {
    const int sg = n % 2 ? -1 : 1;
    s[static_cast<int>(n * (3 * n - 1) / 2)] += sg;
    if (n * (3 * n + 1) / 2 <= N) s[static_cast<int>(n * (3 * n + 1) / 2)] += sg;
  }
  return TruncatedSeries(N, std::move(s));
}

inline TruncatedSeries polynomial_lhs(long q, int N) {
  const FieldSize F = field_size(q);
  TruncatedSeries r = TruncatedSeries::one(N);
  for (int d = 1; d <= N; ++d)
    r = mul(r, pow_int(TruncatedSeries::binomial(N, d, -1), -count(PolyCountKind::N, F, d)));
  return r;
}

// prod (1 - u^d/(q^d+1))^{N*(q;2d)} (1 + u^d/(q^d-1))^{M*(q;d)}
inline TruncatedSeries orthogonal_x(long q, int N) {
  const FieldSize F = field_size(q);
  TruncatedSeries r = TruncatedSeries::one(N);
  for (int d = 1; d <= N; ++d) {
    const Rational qd = rpow(Rational(q), d);
    r = mul(r, pow_int(TruncatedSeries::binomial(N, d, -1 / (qd + 1)), count(PolyCountKind::NStar, F, 2 * d)));
    r = mul(r, pow_int(TruncatedSeries::binomial(N, d, 1 / (qd - 1)), count(PolyCountKind::MStar, F, d)));
  }
  return r;
}

inline void require_even_q(long q) { require(q % 2 == 0, "Omega generating function identities need even q"); }

inline TruncatedSeries omega_rs(Family f, long q, int N) { return rs_series({f, q, 1}, RSKind::RegularSemisimple, N); }

using IdentitySides = std::pair<TruncatedSeries, TruncatedSeries>;

inline const std::map<std::string, std::function<IdentitySides(long, int)>>& identity_registry() {
  static const std::map<std::string, std::function<IdentitySides(long, int)>> reg = {
      {"polynomialidentity",
       [](long q, int N) {
         return IdentitySides{polynomial_lhs(q, N), mul(TruncatedSeries::binomial(N, 1, -1), geometric(N, Rational(q)))};
       }},
      {"set1incycle-1", [](long q, int N) { return IdentitySides{cycle_index_total(gl_model(q, N)), geometric(N)}; }},
      {"set1incycle-2", [](long q, int N) { return IdentitySides{cycle_index_total(unitary_model(q, N)), geometric(N)}; }},
      {"set1incycle-3", [](long q, int N) { return IdentitySides{cycle_index_total(sp_model(q, N)), geometric(N)}; }},
      {"stong", [](long q, int N) { return IdentitySides{stong_sum(q, N), atom_plus(Rational(q), N)}; }},
      {"euler-1", [](long q, int N) { return IdentitySides{euler_product(Rational(q), N), euler_sum_1(Rational(q), N)}; }},
      {"euler-2", [](long q, int N) { return IdentitySides{atom_plus(Rational(q), N), euler_sum_2(Rational(q), N)}; }},
      {"omega-sum",
       [](long q, int N) {
         require_even_q(q);
         auto f = TruncatedSeries::one(N) + TruncatedSeries::monomial(N, 1, frac(1, 2 * (q - 1)) + frac(1, 2 * (q + 1)));
         return IdentitySides{omega_rs(Family::OmegaPlus, q, N) + omega_rs(Family::OmegaMinus, q, N),
                              mul(f, rs_series({Family::Sp, q, 1}, RSKind::RegularSemisimple, N)) * Rational(2)};
       }},
      {"omega-difference",
       [](long q, int N) {
         require_even_q(q);
         auto f = TruncatedSeries::one(N) + TruncatedSeries::monomial(N, 1, frac(1, 2 * (q - 1)) - frac(1, 2 * (q + 1)));
         return IdentitySides{TruncatedSeries::constant(N, 2) + omega_rs(Family::OmegaPlus, q, N) -
                                  omega_rs(Family::OmegaMinus, q, N),
                              mul(f, orthogonal_x(q, N)) * Rational(2)};
       }},
      {"pentagonal",
       [](long, int N) {
         TruncatedSeries p = TruncatedSeries::one(N);
         for (int i = 1; i <= N; ++i) p = mul(p, TruncatedSeries::binomial(N, i, -1));
         return IdentitySides{p, pentagonal_sum(N)};
       }},
  };
  return reg;
}

}  // namespace detail

inline std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (auto& [name, f] : detail::identity_registry()) out.push_back(name);
  return out;
}

// Whether the identity is stated for this q; pentagonal does not depend on q.
inline bool identity_applies(const std::string& name, long q) {
  if (name == "omega-sum" || name == "omega-difference") return q % 2 == 0;
  return true;
}

inline bool identity_depends_on_q(const std::string& name) { return name != "pentagonal"; }

// Both sides of a registered identity as truncated series.
inline std::pair<TruncatedSeries, TruncatedSeries> identity_sides(const std::string& name, long q, int order) {
  auto& reg = detail::identity_registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::string known;
    for (auto& [k, f] : reg) known += (known.empty() ? "" : ", ") + k;
    throw UsageError("unknown identity '" + name + "' (known: " + known + ")");
  }
  require(order >= 1, "identity order must be at least 1");
  field_size(q);
  return it->second(q, order);
}

inline IdentityReport verify_identity(const std::string& name, long q, int order) {
  auto [lhs, rhs] = identity_sides(name, q, order);
  return {name, q, order, max_abs_deviation(lhs, rhs)};
}

}  // namespace derange
