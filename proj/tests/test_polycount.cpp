#include <catch_amalgamated.hpp>

#include <set>

#include "derange/oracle/poly.hpp"
#include "derange/polycount.hpp"

using namespace derange;
using oracle::Field;
using oracle::Poly;

namespace {

// Trial division by every monic polynomial of degree <= d/2.
bool irreducible(const Field& F, const Poly& f) {
  const int d = oracle::deg(f);
  for (int k = 1; 2 * k <= d; ++k)
    for (auto& g : oracle::monic_polynomials(F, k))
      if (oracle::poly_divmod(F, f, g).second.empty()) return false;
  return true;
}

std::vector<Poly> brute_irreducibles(const Field& F, int d) {
  std::vector<Poly> out;
  for (auto& f : oracle::monic_polynomials(F, d))
    if (f[0] != 0 && irreducible(F, f)) out.push_back(f);
  return out;
}

// z^d f(1/z), made monic.
Poly reciprocal(const Field& F, const Poly& f) {
  Poly r(f.rbegin(), f.rend());
  return oracle::poly_monic(F, r);
}

// Roots alpha -> alpha^{-sqrt q}: conjugate the coefficients, then take the reciprocal.
Poly unitary_twin(const Field& F, const Poly& f) {
  Poly c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = F.conj(f[i]);
  return reciprocal(F, c);
}

struct Split {
  long fixed = 0, pairs = 0;
};

template <class Twin>
Split split_by(const Field& F, const std::vector<Poly>& irr, Twin twin) {
  std::set<Poly> all(irr.begin(), irr.end());
  Split s;
  for (auto& f : irr) {
    const Poly t = twin(F, f);
    REQUIRE(all.count(t) == 1);
    if (t == f)
      ++s.fixed;
    else
      ++s.pairs;
  }
  s.pairs /= 2;
  return s;
}

}  // namespace

TEST_CASE("moebius and divisors", "[polycount]") {
  const std::vector<int> mu = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) CHECK(moebius(n) == mu[n - 1]);
  CHECK(moebius(30) == -1);
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(moebius(0), UsageError);
}

TEST_CASE("field sizes", "[polycount]") {
  auto F = field_size(9);
  CHECK(F.p == 3);
  CHECK(F.e == 2);
  CHECK(F.odd());
  CHECK_FALSE(field_size(8).odd());
  for (long bad : {0L, 1L, 6L, 12L, 100L}) CHECK_THROWS_AS(field_size(bad), UsageError);
  CHECK_THROWS_AS(count(PolyCountKind::N, 6, 2), UsageError);
}

TEST_CASE("count examples", "[polycount]") {
  CHECK(count(PolyCountKind::N, 2, 2) == 1);
  CHECK(count(PolyCountKind::N, 2, 1) == 1);
  CHECK(count(PolyCountKind::N, 3, 1) == 2);
  CHECK(count(PolyCountKind::NStar, 3, 1) == 2);
  CHECK(count(PolyCountKind::MStar, 3, 1) == 0);
  CHECK(count(PolyCountKind::NStar, 2, 1) == 1);
  CHECK(count(PolyCountKind::NTilde, 2, 2) == 0);
  CHECK(count(PolyCountKind::NTilde, 2, 1) == 3);
  CHECK_THROWS_AS(count(PolyCountKind::N, 2, 0), UsageError);
}

TEST_CASE("N against a brute-force sieve", "[polycount][oracle]") {
  for (long q : {2L, 3L, 4L, 5L}) {
    const Field F(q);
    const int maxd = q <= 3 ? 6 : 4;
    for (int d = 1; d <= maxd; ++d) {
      INFO("q=" << q << " d=" << d);
      const auto irr = brute_irreducibles(F, d);
      CHECK(count(PolyCountKind::N, q, d) == static_cast<long>(irr.size()));
      const auto s = split_by(F, irr, reciprocal);
      CHECK(count(PolyCountKind::NStar, q, d) == s.fixed);
      CHECK(count(PolyCountKind::MStar, q, d) == s.pairs);
    }
  }
}

TEST_CASE("unitary counts against brute force over F_{q^2}", "[polycount][oracle]") {
  for (long q : {2L, 3L}) {
    const Field F(q * q);
    const int maxd = q == 2 ? 4 : 3;
    for (int d = 1; d <= maxd; ++d) {
      INFO("q=" << q << " d=" << d);
      const auto irr = brute_irreducibles(F, d);
      const auto s = split_by(F, irr, unitary_twin);
      CHECK(count(PolyCountKind::NTilde, q, d) == s.fixed);
      CHECK(count(PolyCountKind::MTilde, q, d) == s.pairs);
    }
  }
}

TEST_CASE("counting identities", "[polycount][property]") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 16L, 25L}) {
    for (long m = 1; m <= 14; ++m) {
      INFO("q=" << q << " m=" << m);
      Integer s = 0;
      for (long d : divisors(m)) s += d * count(PolyCountKind::N, q, d);
      CHECK(s == ipow(q, m) - 1);
      CHECK(count(PolyCountKind::NTilde, q, m) + 2 * count(PolyCountKind::MTilde, q, m) ==
            count(PolyCountKind::N, q * q, m));
      CHECK(count(PolyCountKind::NStar, q, m) + 2 * count(PolyCountKind::MStar, q, m) ==
            count(PolyCountKind::N, q, m));
      for (auto k : {PolyCountKind::N, PolyCountKind::NTilde, PolyCountKind::MTilde, PolyCountKind::NStar,
                     PolyCountKind::MStar})
        CHECK(count(k, q, m) >= 0);
      CHECK(count(PolyCountKind::N, q, m) * m <= ipow(q, m));
    }
  }
}
