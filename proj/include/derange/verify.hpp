#pragma once

#include <string>
#include <utility>
#include <vector>

#include "classical.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace derange::verify {

inline bool all_pass(const std::vector<ReportRow>& rows) {
  for (auto& r : rows)
    if (r.verdict == Verdict::Fail) return false;
  return true;
}

inline void append(std::vector<ReportRow>& out, std::vector<ReportRow> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

template <class T, class F>
std::vector<ReportRow> flat_parallel(const std::vector<T>& items, int jobs, F f) {
  std::vector<ReportRow> out;
  for (auto& rows : ordered_parallel_map(items, jobs, f)) append(out, std::move(rows));
  return out;
}

// ---------------------------------------------------------------- identities

inline const std::vector<long>& default_identity_qs() {
  static const std::vector<long> qs = {2, 3, 4, 5, 8, 9};
  return qs;
}

inline std::string identity_ref(const std::string& name) {
  if (name == "polynomialidentity") return "product over monic irreducibles equals (1-u)/(1-qu)";
  if (name == "set1incycle-1") return "GL cycle index at x=1 is 1/(1-u)";
  if (name == "set1incycle-2") return "U cycle index at x=1 is 1/(1-u)";
  if (name == "set1incycle-3") return "Sp cycle index at x=1 is 1/(1-u)";
  if (name == "stong") return "partition sum equals prod (1-u/q^i)^{-1}";
  if (name == "euler-1") return "Euler product expansion";
  if (name == "euler-2") return "Euler reciprocal product expansion";
  if (name == "pentagonal") return "pentagonal number theorem";
  if (name == "omega-sum") return "RS_Omega+ + RS_Omega- = 2(1+u/(2(q-1))+u/(2(q+1))) RS_Sp";
  if (name == "omega-difference") return "2 + RS_Omega+ - RS_Omega- = 2(1+u/(2(q-1))-u/(2(q+1))) X_O";
  return name;
}

// One row per (identity, q); q-independent identities run once.
inline std::vector<ReportRow> identity_suite(const std::vector<long>& qs, int order, int jobs = 0,
                                             const std::vector<std::string>& names = identity_names()) {
  std::vector<std::pair<std::string, long>> cells;
  for (auto& name : names) {
    if (!identity_depends_on_q(name)) {
      cells.emplace_back(name, 0);
      continue;
    }
    for (long q : qs)
      if (identity_applies(name, q)) cells.emplace_back(name, q);
  }
  return flat_parallel(cells, jobs, [order](const std::pair<std::string, long>& c) {
    const auto rep = verify_identity(c.first, c.second ? c.second : 2, order);
    auto row = ReportRow::exact_row(c.second ? "q=" + std::to_string(c.second) : "-", c.first + " max deviation",
                                    std::to_string(order), rep.deviation, Provenance::Identity);
    row.with(verdict_of(rep.exact()), identity_ref(c.first));
    return std::vector<ReportRow>{row};
  });
}

// -------------------------------------------------------------------- bounds

inline ReportRow scenario_row(const ScenarioReport& rep, const ScenarioCheck& c) {
  const std::string stat = c.label + " " + to_string(c.relation) + " " + to_string(c.threshold);
  ReportRow row = c.quantity.exact ? ReportRow::exact_row(rep.name, stat, "-", *c.quantity.exact, Provenance::Scenario)
                                   : ReportRow::float_row(rep.name, stat, "-", c.quantity.value, Provenance::Scenario);
  row.with(verdict_of(c.pass), rep.reference);
  return row;
}

inline std::vector<ReportRow> bounds_suite(const std::vector<std::string>& names, int jobs = 0) {
  return flat_parallel(names, jobs, [](const std::string& name) {
    const auto rep = bound_scenario(name);
    std::vector<ReportRow> rows;
    for (auto& c : rep.checks) rows.push_back(scenario_row(rep, c));
    return rows;
  });
}

// -------------------------------------------------------------------- oracle

inline bool coset_family(Family f) { return f == Family::SL || f == Family::SU; }

inline oracle::SubspaceClass subspace_class(ActionKind k) {
  switch (k) {
    case ActionKind::Nondegenerate: return oracle::SubspaceClass::Nondegenerate;
    case ActionKind::TotallySingular: return oracle::SubspaceClass::TotallySingular;
    default: return oracle::SubspaceClass::Any;
  }
}

namespace detail {

inline ReportRow compare_row(const GroupSpec& g, const std::string& stat, const Rational& oracle_value,
                             const Rational& gf_value, const std::string& ref) {
  auto row = ReportRow::exact_row(g.str(), stat, std::to_string(g.n), oracle_value, Provenance::Oracle);
  if (coset_family(g.family))
    row.with(Verdict::NotApplicable, "asymptotic, via GL/U");
  else
    row.with(verdict_of(oracle_value == gf_value), ref + "; generating function gives " + to_string(gf_value));
  return row;
}

inline std::vector<ActionSpec> derangement_actions(const GroupSpec& g) {
  std::vector<ActionSpec> out;
  switch (g.family) {
    case Family::GL:
      out.push_back({ActionKind::Any, 1});
      if (g.n >= 3) out.push_back({ActionKind::Any, 2});
      break;
    case Family::U:
      for (auto k : {ActionKind::Any, ActionKind::Nondegenerate, ActionKind::TotallySingular}) out.push_back({k, 1});
      break;
    case Family::Sp:
      for (auto k : {ActionKind::Any, ActionKind::TotallySingular}) out.push_back({k, 1});
      break;
    default: break;
  }
  return out;
}

inline bool weyl_family(Family f) {
  switch (f) {
    case Family::GL:
    case Family::U:
    case Family::Sp:
    case Family::SOPlus:
    case Family::SOMinus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: return true;
    default: return false;
  }
}

inline std::vector<ActionSpec> weyl_actions(const GroupSpec& g, int dim) {
  std::vector<ActionSpec> out;
  if (g.family == Family::GL) {
    for (int k = 1; 2 * k <= g.n; ++k)
      for (bool ref : {false, true}) out.push_back({ActionKind::Any, k, 0, ref});
    return out;
  }
  for (auto kind : {ActionKind::Nondegenerate, ActionKind::TotallySingular})
    for (int k : {1, 2})
      for (int t : {0, 1, -1})
        for (bool ref : {false, true})
          if (2 * k <= dim) out.push_back({kind, k, t, ref});
  return out;
}

// Proportion of rs (or srs) elements fixing some subspace of the kind, against the Weyl bound.
inline std::vector<ReportRow> weyl_domination_rows(const oracle::OracleGroup& G, const std::vector<char>& rs,
                                                   const std::vector<char>& srs) {
  std::vector<ReportRow> rows;
  const GroupSpec& g = G.spec;
  if (g.n < 2 || !weyl_family(g.family)) return rows;
  oracle::VectorSpace V(*G.field, G.dim());
  for (auto& a : weyl_actions(g, G.dim())) {
    Rational w;
    try {
      w = weyl_upper_bound(g, a);
    } catch (const UsageError&) {
      continue;
    }
    const oracle::SubspaceKind sk{subspace_class(a.kind), a.k, a.type};
    const auto subs = oracle::enumerate_subspaces(V, G.form, sk);
    if (subs.empty()) continue;
    const bool strong = weyl_rs_kind(g, a) == RSKind::StronglyRegularSemisimple;
    long count = 0;
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
      if (!(strong ? srs[i] : rs[i])) continue;
      for (auto& S : subs)
        if (oracle::fixes(V, G.elements[i], S)) {
          ++count;
          break;
        }
    }
    const Rational o = frac(count, static_cast<long>(G.elements.size()));
    auto row = ReportRow::exact_row(g.str(), std::string(strong ? "srs" : "rs") + " fixing " + a.str() + " <= Weyl",
                                    std::to_string(g.n), o, Provenance::Oracle);
    row.with(verdict_of(o <= w), "Weyl bound " + to_string(w));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

inline bool lehrer_case(const GroupSpec& g) {
  if (g.family != Family::GL) return false;
  return (g.n == 2 && (g.q == 2 || g.q == 3 || g.q == 4)) || (g.n == 3 && g.q == 2);
}

// All oracle cross-checks for one feasible group.
inline std::vector<ReportRow> oracle_rows(const GroupSpec& g) {
  using detail::compare_row;
  std::vector<ReportRow> rows;
  const auto G = oracle::enumerate_group(g);
  const std::string n = std::to_string(g.n);
  const Integer order = static_cast<long>(G.elements.size());

  auto ord = ReportRow::exact_row(g.str(), "group order", n, Rational(order), Provenance::Oracle);
  ord.with(verdict_of(order == group_order(g)), "order formula " + to_string(group_order(g)));
  rows.push_back(ord);

  std::vector<char> rs(G.elements.size()), srs(G.elements.size());
  long rs_count = 0, rs_strict = 0, srs_count = 0, ef = 0, D = 0;
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    const auto p = oracle::profile(G, G.elements[i]);
    rs[i] = p.rs;
    srs[i] = p.srs;
    rs_count += p.rs;
    rs_strict += p.rs_strict;
    srs_count += p.srs;
    ef += p.eigenvalue_free;
    D += p.D;
  }
  auto prop = [&](long c) -> Rational { return Rational(Integer(c)) / order; };

  const std::vector<std::pair<RSKind, Rational>> stats = {
      {RSKind::RegularSemisimple, prop(rs_count)},
      {RSKind::EigenvalueFree, prop(ef)},
      {RSKind::StronglyRegularSemisimple, prop(srs_count)},
      {RSKind::MeanD, prop(D)},
  };
  for (auto& [kind, value] : stats) {
    TruncatedSeries s;
    try {
      s = rs_series(g, kind, std::max(1, g.n));
    } catch (const UsageError&) {
      continue;
    }
    rows.push_back(compare_row(g, to_string(kind), value, s.coefficient(g.n), "series coefficient"));
  }
  if (rs_count != rs_strict) {
    auto row = ReportRow::exact_row(g.str(), "rs (strict convention)", n, prop(rs_strict), Provenance::Oracle);
    row.with(Verdict::NotApplicable, "rejects +-1 filling a 2-dimensional space; series use the splitting convention");
    rows.push_back(row);
  }

  for (auto& a : detail::derangement_actions(g)) {
    const Rational o = oracle::derangement_proportion(G, {subspace_class(a.kind), a.k, 0});
    rows.push_back(compare_row(g, "derangement " + a.str(), o, derangement_proportion_gf(g, a), "derangement generating function"));
  }

  if (g.family == Family::GL) {
    const auto c = oracle::gl_centralizer_check(G);
    auto row = ReportRow::exact_row(g.str(), "sum of 1/centralizer over class data", n, c.reciprocal_sum, Provenance::Oracle);
    row.with(verdict_of(c.mismatches == 0 && c.reciprocal_sum == 1),
             "class sizes match centralizer formula; mismatches " + std::to_string(c.mismatches));
    rows.push_back(row);
  }
  if (lehrer_case(g)) {
    const long brute = oracle::class_count_rs(G);
    const Integer formula = rs_class_count_gl(g.n, g.q);
    auto row = ReportRow::exact_row(g.str(), "rs conjugacy classes", n, Rational(Integer(brute)), Provenance::Oracle);
    row.with(verdict_of(Integer(brute) == formula), "class count formula " + to_string(formula));
    rows.push_back(row);
  }

  append(rows, detail::weyl_domination_rows(G, rs, srs));
  return rows;
}

inline std::vector<ReportRow> oracle_suite(int jobs = 0, const std::vector<GroupSpec>& groups = oracle::feasible_set()) {
  return flat_parallel(groups, jobs, [](const GroupSpec& g) { return oracle_rows(g); });
}

}  // namespace derange::verify
