#include <catch_amalgamated.hpp>

#include "derange/verify.hpp"

using namespace derange;
using namespace derange::oracle;

namespace {

GroupSpec G(Family f, long q, int n) { return GroupSpec{f, q, n}; }

Mat mat2(Elt a, Elt b, Elt c, Elt d) {
  Mat m = Mat::identity(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("field axioms", "[oracle]") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 25L, 27L, 49L}) {
    const Field F(q);
    INFO("q=" << q);
    const auto el = F.elements();
    REQUIRE(static_cast<long>(el.size()) == q);
    for (Elt a : el) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, q) == a);
      for (Elt b : el) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (Elt c : el) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
      }
    }
    if (F.degree() % 2 == 0)
      for (Elt a : el) {
        CHECK(F.conj(F.conj(a)) == a);
        for (Elt b : el) CHECK(F.conj(F.mul(a, b)) == F.mul(F.conj(a), F.conj(b)));
      }
  }
  CHECK_THROWS_AS(Field(6), UsageError);
  CHECK_THROWS_AS(Field(16), UsageError);
}

TEST_CASE("group orders", "[oracle]") {
  CHECK(enumerate_group(G(Family::GL, 2, 2)).elements.size() == 6);
  CHECK(enumerate_group(G(Family::SL, 3, 2)).elements.size() == 24);
  CHECK(enumerate_group(G(Family::U, 2, 2)).elements.size() == 18);
  CHECK(enumerate_group(G(Family::Sp, 2, 1)).elements.size() == 6);
  for (auto& g : feasible_set()) {
    INFO(g.str());
    CHECK(Integer(static_cast<long>(enumerate_group(g).elements.size())) == group_order(g));
  }
}

TEST_CASE("characteristic polynomials", "[oracle]") {
  const Field& F = get_field(2);
  CHECK(char_poly(F, Mat::identity(2)) == Poly{1, 0, 1});
  const Mat companion = mat2(0, 1, 1, 1);
  CHECK(char_poly(F, companion) == Poly{1, 1, 1});
  const auto fac = factor(F, Poly{1, 1, 1});
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].second == 1);
  CHECK(factor(F, Poly{1, 0, 1}) == Factorization{{Poly{1, 1}, 2}});
  const Field& F3 = get_field(3);
  for (auto& f : monic_polynomials(F3, 4)) CHECK(expand(F3, factor(F3, f)) == f);
}

TEST_CASE("subspace counts", "[oracle]") {
  const Field& F2 = get_field(2);
  VectorSpace V2(F2, 2), V4(F2, 4);
  CHECK(enumerate_subspaces(V2, FormSpec{}, {SubspaceClass::Any, 1}).size() == 3);
  CHECK(enumerate_subspaces(V4, FormSpec{}, {SubspaceClass::Any, 2}).size() == 35);
  const auto plus = enumerate_group(G(Family::OPlus, 2, 1));
  CHECK(enumerate_subspaces(VectorSpace(F2, 2), plus.form, {SubspaceClass::TotallySingular, 1}).size() == 2);
  for (long q : {2L, 3L, 4L})
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        if (q > 2 && n > 3) continue;
        VectorSpace V(get_field(q), n);
        CHECK(Integer(static_cast<long>(enumerate_subspaces(V, FormSpec{}, {SubspaceClass::Any, k}).size())) ==
              gaussian_binomial(q, n, k));
      }
}

TEST_CASE("GL(2,2) statistics", "[oracle]") {
  const auto g = enumerate_group(G(Family::GL, 2, 2));
  const auto s = element_stats(g);
  CHECK(s.rs == frac(1, 3));
  CHECK(s.mean_D == frac(4, 3));
  CHECK(mean_D_bruteforce(g) == frac(4, 3));
  CHECK(derangement_proportion(g, {SubspaceClass::Any, 1}) == frac(1, 3));
  CHECK(class_count_rs(g) == 1);
  CHECK(class_count_rs(enumerate_group(G(Family::GL, 3, 2))) == 4);
  CHECK(class_count_rs(enumerate_group(G(Family::GL, 2, 3))) == 3);
  const auto c = gl_centralizer_check(enumerate_group(G(Family::GL, 3, 2)));
  CHECK(c.mismatches == 0);
  CHECK(c.reciprocal_sum == 1);
}

TEST_CASE("derangements are unions of conjugacy classes", "[oracle][property]") {
  for (auto g : {G(Family::GL, 3, 2), G(Family::U, 2, 2), G(Family::Sp, 3, 1), G(Family::GL, 2, 3)}) {
    const auto grp = enumerate_group(g);
    const auto cc = conjugacy_classes(grp);
    long total = 0;
    for (long s : cc.sizes) total += s;
    CHECK(total == static_cast<long>(grp.elements.size()));
    VectorSpace V(*grp.field, grp.dim());
    const auto subs = enumerate_subspaces(V, grp.form, {SubspaceClass::Any, 1});
    std::map<int, std::set<bool>> by_class;
    for (std::size_t i = 0; i < grp.elements.size(); ++i) {
      bool fixes_one = false;
      for (auto& S : subs) fixes_one = fixes_one || fixes(V, grp.elements[i], S);
      by_class[cc.class_of[i]].insert(fixes_one);
    }
    for (auto& [cls, vals] : by_class) CHECK(vals.size() == 1);
  }
}

TEST_CASE("oracle suite agrees with the generating functions", "[oracle][property]") {
  const auto rows = verify::oracle_suite(1);
  CHECK(rows.size() > 300);
  for (auto& r : rows) {
    INFO(r.group << " " << r.statistic << " " << r.paper_ref);
    CHECK(r.verdict != Verdict::Fail);
  }
}

TEST_CASE("refined orthogonal bound at q = 2 needs the two-negative-fixed-point case", "[oracle]") {
  const auto g = G(Family::OmegaPlus, 2, 2);
  const auto grp = enumerate_group(g);
  const ActionSpec a{ActionKind::Nondegenerate, 2, -1, true};
  const Rational observed = rs_and_fixing_proportion(grp, {SubspaceClass::Nondegenerate, 2, -1});
  CHECK(observed == frac(1, 9));
  const auto parts = weyl_constraints_for(g, a);
  REQUIRE(parts.size() == 2);
  CHECK(proportion(g.n, parts.front()) < observed);
  CHECK(weyl_upper_bound(g, a) >= observed);
}

TEST_CASE("GL rs elements fixing k-spaces obey the Weyl bound", "[oracle][property]") {
  for (auto g : {G(Family::GL, 2, 3), G(Family::GL, 2, 4), G(Family::GL, 3, 3)}) {
    const auto grp = enumerate_group(g);
    for (int k = 1; 2 * k <= g.n; ++k) {
      const Rational o = rs_and_fixing_proportion(grp, {SubspaceClass::Any, k});
      CHECK(o <= weyl_upper_bound(g, {ActionKind::Any, k}));
      CHECK(o <= weyl_upper_bound(g, {ActionKind::Any, k, 0, true}));
    }
  }
}
