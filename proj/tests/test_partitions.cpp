#include <catch_amalgamated.hpp>

#include <set>

#include "derange/partitions.hpp"

using namespace derange;

namespace {

// Coin-change count, independent of the pentagonal recurrence.
std::vector<Integer> partition_table(int n) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p;
}

GLClassDatum datum(std::vector<std::pair<int, std::vector<int>>> e) {
  GLClassDatum d;
  for (auto& [deg, parts] : e) d.entries.push_back({deg, Partition(parts)});
  return d;
}

}  // namespace

TEST_CASE("partition counts", "[partitions]") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(60) == 966467);
  const auto table = partition_table(60);
  for (int n = 0; n <= 60; ++n) CHECK(partition_count(n) == table[n]);
  for (int n = 0; n <= 25; ++n) CHECK(Integer(static_cast<long>(enumerate_partitions(n).size())) == table[n]);
}

TEST_CASE("enumeration order and guard", "[partitions]") {
  const auto p4 = enumerate_partitions(4);
  const std::vector<std::vector<int>> want = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(p4.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(p4[i].parts() == want[i]);
  const auto p12 = enumerate_partitions(12);
  std::set<Partition> uniq(p12.begin(), p12.end());
  CHECK(uniq.size() == p12.size());
  for (std::size_t i = 1; i < p12.size(); ++i) CHECK(p12[i] < p12[i - 1]);
  CHECK_THROWS_AS(enumerate_partitions(61), ResourceError);
  CHECK_NOTHROW(enumerate_partitions(30));
  CHECK_THROWS_AS(Partition({1, 2}), UsageError);
  CHECK_THROWS_AS(Partition({2, 0}), UsageError);
}

TEST_CASE("conjugate and multiplicity views agree", "[partitions][property]") {
  for (int n = 0; n <= 14; ++n)
    for (auto& lam : enumerate_partitions(n)) {
      long sq = 0, total = 0;
      for (int i = 1; i <= lam.largest(); ++i) {
        long c = 0;
        for (int part : lam.parts()) c += part >= i;
        CHECK(lam.conjugate_part(i) == c);
        sq += c * c;
        total += c;
      }
      CHECK(total == n);
      CHECK(lam.sum_conjugate_squares() == sq);
      int from_mult = 0;
      for (auto [i, m] : lam.multiplicities()) {
        CHECK(lam.multiplicity(i) == m);
        CHECK(m > 0);
        from_mult += i * m;
      }
      CHECK(from_mult == n);
    }
}

TEST_CASE("q-Pochhammer", "[partitions]") {
  CHECK(q_pochhammer(2, 0) == 1);
  CHECK(q_pochhammer(2, 3) == frac(21, 64));
  CHECK(q_pochhammer(Rational(-2), 2) == frac(9, 8));
  CHECK(q_pochhammer(3, 2) == frac(16, 27));
  CHECK_THROWS_AS(q_pochhammer(2, -1), UsageError);
}

TEST_CASE("Stong weights sum to the multiset coefficient", "[partitions][property]") {
  // sum_{r_1 <= ... <= r_n} q^{-sum r} = 1 / (q^n (1/q)_n)
  for (long q : {2L, 3L, 4L, 5L})
    for (int n = 0; n <= 20; ++n) {
      Rational s = 0;
      for (auto& lam : enumerate_partitions(n)) s += stong_weight(lam, Rational(q));
      CHECK(s == 1 / (Rational(ipow(q, n)) * q_pochhammer(q, n)));
    }
}

TEST_CASE("GL centralizers", "[partitions]") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_centralizer_size(2, datum({{1, {1, 1}}})) == 6);
  CHECK(gl_centralizer_size(2, datum({{1, {2}}})) == 2);
  CHECK(gl_centralizer_size(2, datum({{2, {1}}})) == 3);
  CHECK(gl_order(2, 2) / gl_centralizer_size(2, datum({{1, {2}}})) == 3);
  CHECK(gl_order(2, 2) / gl_centralizer_size(2, datum({{2, {1}}})) == 2);
  CHECK(gl_centralizer_size(3, datum({{1, {1}}, {1, {1}}})) == 4);
  CHECK_THROWS_AS(gl_centralizer_size(2, datum({{1, {1}}, {1, {1}}})), UsageError);
  CHECK_THROWS_AS(gl_centralizer_size(6, datum({{1, {1}}})), UsageError);
}

TEST_CASE("class types are normalized", "[partitions][property]") {
  for (long q : {2L, 3L})
    for (int n = 1; n <= 8; ++n) {
      Rational s = 0;
      for (auto& t : gl_class_types(n, q)) {
        CHECK(t.datum.n() == n);
        s += t.weight();
      }
      CHECK(s == 1);
    }
  CHECK(gl_class_types(2, 2).size() == 3);
  CHECK(gl_class_types(2, 3).size() == 4);
  CHECK_THROWS_AS(gl_class_types(13, 2), ResourceError);
}

TEST_CASE("subset sums", "[partitions]") {
  CHECK(subset_sums(Partition({3, 1})) == std::vector<int>{0, 1, 3, 4});
  CHECK(subset_sums(Partition({2, 2})) == std::vector<int>{0, 2, 4});
  CHECK(subset_sums(Partition()) == std::vector<int>{0});
  for (int n = 1; n <= 12; ++n)
    for (auto& lam : enumerate_partitions(n)) {
      const auto s = subset_sums(lam);
      std::set<int> set(s.begin(), s.end());
      for (int x : s) CHECK(set.count(n - x) == 1);
      for (int part : lam.parts()) CHECK(set.count(part) == 1);
    }
}
