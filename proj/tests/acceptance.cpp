// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "derange/verify.hpp"

using namespace derange;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

GroupSpec G(Family f, long q, int n = 1) { return GroupSpec{f, q, n}; }

Rational central(int k) { return frac(binomial(2 * k, k), ipow(4, static_cast<unsigned long>(k))); }

WeylConstraint fixing(WeylGroup g, int k, FixMode m) {
  WeylConstraint c;
  c.group = g;
  c.fix = FixKSet{k, m, true};
  return c;
}

std::string fixed(double x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << x;
  return os.str();
}

Outcome identities() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::string> names = {"polynomialidentity", "set1incycle-1", "set1incycle-2", "set1incycle-3",
                                          "stong",              "euler-1",       "euler-2",       "pentagonal"};
  const auto rows = verify::identity_suite(verify::default_identity_qs(), 50, 0, names);
  for (auto& r : rows)
    if (r.verdict != Verdict::Pass) o.require(false, r.statistic + " at " + r.group + " deviates by " + r.exact_string());
  const double s = seconds_since(t0);
  o.require(s < 30, "runtime " + fixed(s, 1) + " s");
  if (o.pass) o.detail << rows.size() << " identity checks with deviation 0 to order 50, " << fixed(s, 1) << " s";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto rows = verify::oracle_suite();
  long compared = 0;
  bool rs = false, meand = false, lines = false;
  for (auto& r : rows) {
    if (r.verdict == Verdict::Fail) o.require(false, r.group + " " + r.statistic + " = " + r.exact_string() + " (" + r.paper_ref + ")");
    if (r.verdict == Verdict::Pass) ++compared;
    if (r.group == "GL(2,2)" && r.exact) {
      if (r.statistic == "rs") rs = *r.exact == frac(1, 3);
      if (r.statistic == "mean-D") meand = *r.exact == frac(4, 3);
      if (r.statistic == "derangement any-1") lines = *r.exact == frac(1, 3);
    }
  }
  o.require(rs && meand && lines, "GL(2,2) anchors rs = 1/3, mean-D = 4/3, line derangements = 1/3 not all reproduced");
  const double s = seconds_since(t0);
  o.require(s < 300, "runtime " + fixed(s, 1) + " s");
  if (o.pass)
    o.detail << compared << " exact comparisons over " << oracle::feasible_set().size() << " groups, GL(2,2) anchors reproduced, "
             << fixed(s, 1) << " s";
  return o;
}

Outcome lehrer() {
  Outcome o;
  for (auto [n, q] : std::vector<std::pair<int, long>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    const long brute = oracle::class_count_rs(oracle::enumerate_group(G(Family::GL, q, n)));
    const Integer formula = rs_class_count_gl(n, q);
    if (Integer(brute) != formula)
      o.require(false, "GL(" + std::to_string(n) + "," + std::to_string(q) + "): brute " + std::to_string(brute) +
                           " vs formula " + to_string(formula));
    else
      o.detail << (o.detail.tellp() ? ", " : "") << "GL(" << n << "," << q << ") " << brute;
  }
  return o;
}

Outcome gl_limit() {
  Outcome o;
  for (long q : {2L, 3L, 4L}) {
    const auto l = rs_limit(G(Family::GL, q), RSKind::RegularSemisimple);
    o.require(l.exact && *l.exact == 1 - frac(1, q), "closed form at q=" + std::to_string(q));
    const double c = to_double(rs_series(G(Family::GL, q), RSKind::RegularSemisimple, 60).coefficient(60));
    const double dev = std::fabs(c - (1 - 1.0 / q));
    o.require(dev <= 1e-4, "q=" + std::to_string(q) + " coefficient 60 off by " + std::to_string(dev));
    if (o.pass) o.detail << (q == 2 ? "" : ", ") << "q=" << q << " exact 1-1/q, |c60 - limit| = " << dev;
  }
  return o;
}

Outcome family_limits() {
  Outcome o;
  std::ostringstream ok;
  auto check = [&](const std::string& label, const LimitValue& l, double threshold) {
    o.require(l.bound <= 1e-6, label + " tail bound " + std::to_string(l.bound));
    if (l.lower() >= threshold)
      ok << label << " " << fixed(l.value, 4) << " >= " << threshold << "; ";
    else
      o.require(false, label + " limit " + fixed(l.value, 4) + " < " + fixed(threshold, 3));
  };
  const std::vector<std::pair<long, double>> sp = {{2, .283}, {3, .348}, {4, .453}, {5, .654}, {7, .745}, {8, .686}};
  for (auto [q, t] : sp) check("Sp q=" + std::to_string(q), rs_limit(G(Family::Sp, q), RSKind::RegularSemisimple), t);
  check("U q=2", rs_limit(G(Family::U, 2), RSKind::RegularSemisimple), .414);
  check("U q=3", rs_limit(G(Family::U, 3), RSKind::RegularSemisimple), .628);
  for (long q : {4L, 5L, 7L, 8L, 9L, 11L, 13L, 16L})
    check("U q=" + std::to_string(q), rs_limit(G(Family::U, q), RSKind::RegularSemisimple), .72);
  for (long q : {2L, 4L, 8L}) {
    const auto s = rs_limit(G(Family::Sp, q), RSKind::RegularSemisimple);
    const double f = 1 + static_cast<double>(q) / (static_cast<double>(q) * q - 1);
    for (auto fam : {Family::OmegaPlus, Family::OmegaMinus}) {
      const auto w = rs_limit(G(fam, q), RSKind::RegularSemisimple);
      const double gap = std::fabs(w.value - f * s.value);
      o.require(gap <= w.bound + f * s.bound, to_string(fam) + " q=" + std::to_string(q) + " differs from (1+q/(q^2-1)) Sp by " +
                                                  std::to_string(gap));
    }
  }
  ok << "Omega+- = (1+q/(q^2-1)) Sp at q=2,4,8; ";
  check("SO(2n+1) q=3", rs_limit(G(Family::SOOdd, 3), RSKind::RegularSemisimple), .478);
  check("SO+ q=3", rs_limit(G(Family::SOPlus, 3), RSKind::RegularSemisimple), .657);
  check("SO- q=3", rs_limit(G(Family::SOMinus, 3), RSKind::RegularSemisimple), .657);
  if (o.pass) o.detail << ok.str();
  return o;
}

Outcome omega_sum() {
  Outcome o;
  const int N = 40;
  for (long q : {2L, 4L}) {
    const Rational Q(q);
    const auto plus = rs_series(G(Family::OmegaPlus, q), RSKind::RegularSemisimple, N);
    const auto minus = rs_series(G(Family::OmegaMinus, q), RSKind::RegularSemisimple, N);
    const auto sp = rs_series(G(Family::Sp, q), RSKind::RegularSemisimple, N);
    const auto rhs = Rational(2) * mul(TruncatedSeries::one(N) + TruncatedSeries::monomial(N, 1, 1 / (2 * (Q - 1)) + 1 / (2 * (Q + 1))), sp);
    const Rational dev = max_abs_deviation(plus + minus, rhs);
    o.require(dev == 0, "q=" + std::to_string(q) + " deviation " + to_string(dev));
  }
  if (o.pass) o.detail << "RS_Omega+ + RS_Omega- = 2(1+u/(2(q-1))+u/(2(q+1))) RS_Sp exactly to order 40, q = 2, 4";
  return o;
}

Outcome weyl() {
  Outcome o;
  const auto t0 = Clock::now();
  long checks = 0;
  for (int n = 2; n <= 18; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      ++checks;
      const Rational p = proportion(n, fixing(WeylGroup::Sn, k, FixMode::Any));
      if (p > frac(2, 3)) o.require(false, "S_" + std::to_string(n) + " fix " + std::to_string(k) + "-set = " + to_string(p));
    }
  for (int k = 1; k <= 15; ++k) {
    ++checks;
    const Rational p = proportion(2 * k, fixing(WeylGroup::Sn, 2 * k, FixMode::EvenOnly));
    if (p != central(k)) o.require(false, "all-even S_" + std::to_string(2 * k) + " = " + to_string(p));
  }
  for (int n = 1; n <= 15; ++n)
    for (int k = 1; k <= n; ++k) {
      ++checks;
      const Rational b = proportion(n, fixing(WeylGroup::Bn, k, FixMode::PositiveOnly));
      if (b > central(k)) o.require(false, "B_" + std::to_string(n) + " positive k=" + std::to_string(k));
      if (n <= k) continue;
      for (auto g : {WeylGroup::Dn, WeylGroup::DnMinus}) {
        checks += 3;
        if (proportion(n, fixing(g, k, FixMode::PositiveOnly)) > central(k))
          o.require(false, to_string(g) + " n=" + std::to_string(n) + " positive k=" + std::to_string(k));
        for (auto m : {FixMode::NegParityEven, FixMode::NegParityOdd})
          if (proportion(n, fixing(g, k, m)) > frac(1, 2))
            o.require(false, to_string(g) + " n=" + std::to_string(n) + " parity k=" + std::to_string(k));
      }
    }
  for (int n = 5; n <= 40; ++n)
    for (auto c : {Coset::Even, Coset::Odd}) {
      ++checks;
      if (an_coset_derangements(n, c) < frac(1, 3)) o.require(false, "A_n coset derangements below 1/3 at n=" + std::to_string(n));
    }
  const double s = seconds_since(t0);
  o.require(s < 120, "runtime " + fixed(s, 1) + " s");
  if (o.pass) o.detail << checks << " exact inequalities, " << fixed(s, 1) << " s";
  return o;
}

Outcome constants() {
  Outcome o;
  for (auto& c : named_constants()) {
    o.require(c.value() <= to_double(c.cap), c.name + " = " + fixed(c.value()) + " above cap " + fixed(to_double(c.cap), 3));
    const double w = to_double(named_constant_witness(c.name, 40));
    const double d = std::fabs(w - c.value());
    o.require(d <= 2e-3, c.name + " witness at n=40 off by " + std::to_string(d));
    if (o.pass) o.detail << c.name << " " << fixed(c.value(), 4) << " <= " << fixed(to_double(c.cap), 3) << " (n=40 gap " << d << "); ";
  }
  return o;
}

Outcome mean_d() {
  Outcome o;
  const double c1 = mean_D_bound_c1(2);
  o.require(c1 <= 28 && c1 >= 27.31 && c1 < 27.32, "c1(2) = " + std::to_string(c1));
  for (long q : {2L, 3L, 4L, 5L}) {
    const auto s = rs_series(G(Family::GL, q), RSKind::MeanD, 40);
    for (int n = 1; n <= 40; ++n)
      if (to_double(s.coefficient(n)) > mean_D_bound_c1(q))
        o.require(false, "mean D at q=" + std::to_string(q) + " n=" + std::to_string(n) + " above c1");
  }
  if (o.pass) o.detail << "c1(2) = " << fixed(c1, 4) << " <= 28; E[D] <= c1(q) for n <= 40, q = 2..5";
  return o;
}

Outcome scenarios() {
  Outcome o;
  const auto names = scenario_names();
  long checks = 0;
  std::vector<std::string> failed;
  for (auto& name : names) {
    const auto rep = bound_scenario(name);
    checks += static_cast<long>(rep.checks.size());
    if (!rep.pass()) failed.push_back(name);
  }
  for (const char* want : {"manycases-q2", "correctSL-q3", "Utotsing-q2", "glfiniteregss-q2", "limiting-q2", "Sp-eigenfree-q-even"})
    if (std::find(names.begin(), names.end(), want) == names.end()) o.require(false, std::string("missing ") + want);
  if (!failed.empty()) {
    std::string list;
    for (auto& f : failed) list += (list.empty() ? "" : " ") + f;
    o.require(false, std::to_string(failed.size()) + " of " + std::to_string(names.size()) + " scenarios fail: " + list);
  }
  if (o.pass) o.detail << names.size() << " scenarios, " << checks << " checks";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"identity suite exact to order 50", identities},
      {"oracle equivalence over the feasible set", oracle_equivalence},
      {"rs class count formula", lehrer},
      {"GL limit 1-1/q", gl_limit},
      {"family limits meet the stated decimals", family_limits},
      {"Omega sum identity to order 40", omega_sum},
      {"Weyl group statistics", weyl},
      {"asymptotic constants", constants},
      {"mean-D bound c1", mean_d},
      {"bound-scenario suite", scenarios},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail.str(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
