#include <algorithm>
#include <charconv>
#include <ctime>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "derange.hpp"
#include "derange/oracle.hpp"
#include "derange/verify.hpp"

namespace {

using namespace derange;

struct Output {
  std::string format = "tsv";
  bool timestamp = false;
};

void add_output(CLI::App* app, Output& o) {
  app->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  app->add_flag("--timestamp", o.timestamp, "print the generation time (tsv comment line, stderr for json)");
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int emit(const Output& o, const std::vector<ReportRow>& rows) {
  const Format f = parse_format(o.format);
  if (o.timestamp) (f == Format::Tsv ? std::cout : std::cerr) << "# generated " << utc_now() << '\n';
  write_report(std::cout, rows, f);
  std::cout.flush();
  if (verify::all_pass(rows)) return 0;
  for (auto& r : rows)
    if (r.verdict == Verdict::Fail) {
      std::cerr << "FAIL\t";
      write_row(std::cerr, r);
    }
  return 1;
}

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

// "3", "1..10", "2,4,6..8"
std::vector<int> parse_ns(const std::string& spec) {
  std::vector<int> out;
  for (auto& tok : split(spec, ',')) {
    const auto dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(tok, "n"));
      continue;
    }
    const int a = parse_int(tok.substr(0, dots), "range start");
    const int b = parse_int(tok.substr(dots + 2), "range end");
    require(a <= b, "empty range '" + tok + "'");
    for (int n = a; n <= b; ++n) out.push_back(n);
  }
  for (int n : out) require(n >= 0, "n must be non-negative");
  return out;
}

std::vector<long> parse_qs(const std::string& spec) {
  std::vector<long> out;
  for (auto& tok : split(spec, ',')) {
    const long q = parse_int(tok, "q");
    field_size(q);
    out.push_back(q);
  }
  return out;
}

// "b" (at most b), "a..b", "a.."
Cap parse_cap(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) return Cap::at_most(parse_int(s, "cap"));
  const int lo = parse_int(s.substr(0, dots), "cap");
  const std::string hi = s.substr(dots + 2);
  Cap c{lo, hi.empty() ? -1 : parse_int(hi, "cap")};
  require(c.max < 0 || c.min <= c.max, "empty cap '" + s + "'");
  return c;
}

// "0.283" or "1/26"
Rational parse_threshold(const std::string& s) {
  if (s.find('/') == std::string::npos) return decimal(s);
  auto parts = split(s, '/');
  require(parts.size() == 2, "bad threshold '" + s + "'");
  const Integer den(parts[1], 10);
  require(den != 0, "zero denominator in '" + s + "'");
  return frac(Integer(parts[0], 10), den);
}

int parse_type(const std::string& s) {
  if (s == "+" || s == "plus" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "minus" || s == "-1") return -1;
  if (s == "0" || s == "none") return 0;
  throw UsageError("bad subspace type '" + s + "' (+, -, 0)");
}

WeylGroup parse_weyl_group(const std::string& s) {
  if (s == "sn" || s == "s") return WeylGroup::Sn;
  if (s == "an-even" || s == "an" || s == "a+") return WeylGroup::AnEven;
  if (s == "an-odd" || s == "a-") return WeylGroup::AnOdd;
  if (s == "bn" || s == "b") return WeylGroup::Bn;
  if (s == "dn" || s == "d") return WeylGroup::Dn;
  if (s == "dn-minus" || s == "d-") return WeylGroup::DnMinus;
  throw UsageError("unknown Weyl group '" + s + "' (sn, an-even, an-odd, bn, dn, dn-minus)");
}

FixMode parse_fix_mode(const std::string& s) {
  if (s == "any") return FixMode::Any;
  if (s == "positive") return FixMode::PositiveOnly;
  if (s == "even") return FixMode::EvenOnly;
  if (s == "neg-even") return FixMode::NegParityEven;
  if (s == "neg-odd") return FixMode::NegParityOdd;
  throw UsageError("unknown fix mode '" + s + "' (any, positive, even, neg-even, neg-odd)");
}

std::string cap_text(const Cap& c) {
  if (c.max < 0) return std::to_string(c.min) + "..";
  if (c.min == 0) return "<=" + std::to_string(c.max);
  return std::to_string(c.min) + ".." + std::to_string(c.max);
}

std::string describe(const WeylConstraint& c) {
  std::string s;
  if (c.fix) s = std::string(c.fix->fixes ? "fix " : "fix no ") + std::to_string(c.fix->k) + "-set (" + to_string(c.fix->mode) + ")";
  auto add = [&](const char* name, const Cap& cap) {
    if (cap.trivial()) return;
    s += (s.empty() ? "" : "; ") + std::string(name) + " " + cap_text(cap);
  };
  add("fixed", c.fixed_points);
  add("2-cycles", c.two_cycles);
  add("neg-fixed", c.neg_fixed_points);
  add("neg-2-cycles", c.neg_two_cycles);
  if (c.neg_parity) s += (s.empty() ? "" : "; ") + std::string("neg cycles ") + (*c.neg_parity == Parity::Even ? "even" : "odd");
  return s.empty() ? "all" : s;
}

std::string coset_note(Family f) { return verify::coset_family(f) ? "asymptotic, via GL/U" : ""; }

std::string family_label(Family f, long q) { return to_string(f) + "(q=" + std::to_string(q) + ")"; }

// ---------------------------------------------------------------- rs

struct RsArgs {
  std::string family, n, kind = "rs", expect;
  long q = 0;
  bool limit = false;
  int order = 0, depth = 64, jobs = 0;
  Output out;
};

int cmd_rs(const RsArgs& a) {
  const Family f = parse_family(a.family);
  const RSKind kind = parse_rs_kind(a.kind);
  const GroupSpec base{f, a.q, 1};
  base.validate();
  require(a.depth >= 1, "--depth must be positive");
  std::vector<int> ns;
  if (!a.n.empty())
    ns = parse_ns(a.n);
  else if (!a.limit)
    for (int n = 1; n <= (a.order ? a.order : default_order()); ++n) ns.push_back(n);
  std::vector<ReportRow> rows;
  if (!ns.empty()) {
    const int maxn = *std::max_element(ns.begin(), ns.end());
    require(a.order == 0 || a.order >= maxn, "--order must be at least the largest requested n");
    const TruncatedSeries s = rs_series(base, kind, a.order ? a.order : std::max(1, maxn));
    const std::string note = coset_note(f);
    for (int n : ns) {
      auto row = ReportRow::exact_row(GroupSpec{f, a.q, n}.str(), to_string(kind), std::to_string(n), s.coefficient(n),
                                      Provenance::Series);
      row.paper_ref = note.empty() ? "coefficient of u^n" : note;
      rows.push_back(row);
    }
  }
  if (a.limit) {
    const LimitValue L = rs_limit(base, kind, a.depth);
    auto row = L.exact ? ReportRow::exact_row(family_label(f, a.q), to_string(kind) + " limit", "inf", *L.exact, Provenance::Limit)
                       : ReportRow::float_row(family_label(f, a.q), to_string(kind) + " limit", "inf", L.value, Provenance::Limit);
    row.paper_ref = L.closed_form + "; tail bound " + float_string(L.bound, 3);
    if (!a.expect.empty()) {
      const Rational t = parse_threshold(a.expect);
      row.with(verdict_of(holds(Quantity(L), Relation::AtLeast, t)), row.paper_ref + "; expected >= " + a.expect);
    }
    rows.push_back(row);
  } else {
    require(a.expect.empty(), "--expect-at-least applies to the --limit row");
  }
  return emit(a.out, rows);
}

// ---------------------------------------------------------------- weyl

struct WeylArgs {
  std::string group, n, mode = "any", fixed, two_cycles, neg_fixed, neg_two_cycles, neg_parity;
  int fix_k = -1, jobs = 0;
  bool derangement = false;
  Output out;
};

int cmd_weyl(const WeylArgs& a) {
  WeylConstraint c;
  c.group = parse_weyl_group(a.group);
  if (a.fix_k >= 0) c.fix = FixKSet{a.fix_k, parse_fix_mode(a.mode), !a.derangement};
  require(a.fix_k >= 0 || (a.mode == "any" && !a.derangement), "--mode and --derangement need --fix-kset");
  if (!a.fixed.empty()) c.fixed_points = parse_cap(a.fixed);
  if (!a.two_cycles.empty()) c.two_cycles = parse_cap(a.two_cycles);
  if (!a.neg_fixed.empty()) c.neg_fixed_points = parse_cap(a.neg_fixed);
  if (!a.neg_two_cycles.empty()) c.neg_two_cycles = parse_cap(a.neg_two_cycles);
  if (!a.neg_parity.empty()) {
    require(a.neg_parity == "even" || a.neg_parity == "odd", "--neg-parity is even or odd");
    c.neg_parity = a.neg_parity == "even" ? Parity::Even : Parity::Odd;
  }
  const auto ns = parse_ns(a.n);
  for (int n : ns) c.validate(n);
  const std::string stat = describe(c);
  auto rows = ordered_parallel_map(ns, a.jobs, [&](int n) {
    const Rational p = proportion(n, c);
    auto row = ReportRow::exact_row(to_string(c.group) + "_" + std::to_string(n), stat, std::to_string(n), p, Provenance::Weyl);
    if (auto kb = known_weyl_bound(n, c))
      row.with(verdict_of(kb->lower ? p >= kb->value : p <= kb->value),
               kb->source + (kb->lower ? "; >= " : "; <= ") + to_string(kb->value));
    return row;
  });
  return emit(a.out, rows);
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  std::string family, n, action = "any", type = "0", expect;
  long q = 0;
  int k = 1;
  bool refined = false, limit = false;
  int jobs = 0;
  Output out;
};

int cmd_bound(const BoundArgs& a) {
  const Family f = parse_family(a.family);
  const ActionSpec act{parse_action_kind(a.action), a.k, parse_type(a.type), a.refined};
  require(act.k >= 1, "--k must be positive");
  GroupSpec{f, a.q, 1}.validate();
  require(!a.n.empty() || a.limit, "give --n, --limit or both");
  std::optional<Rational> expect;
  if (!a.expect.empty()) expect = parse_threshold(a.expect);
  const std::string stat = "rs-derangement lower bound " + act.str();

  std::vector<int> ns;
  if (!a.n.empty()) ns = parse_ns(a.n);
  auto rows = ordered_parallel_map(ns, a.jobs, [&](int n) {
    std::vector<ReportRow> out;
    const GroupSpec g{f, a.q, n};
    const LowerBound lb = derangement_lower_bound(g, act, BoundMode::Finite);
    auto row = ReportRow::exact_row(g.str(), stat, std::to_string(n), *lb.exact, Provenance::Series);
    row.paper_ref = lb.route + "; Weyl proportion " + to_string(weyl_upper_bound(g, act));
    if (expect) row.with(verdict_of(*lb.exact >= *expect), row.paper_ref + "; expected >= " + a.expect);
    out.push_back(row);
    std::optional<Rational> gf;
    try {
      gf = derangement_proportion_gf(g, act);
    } catch (const UsageError&) {
    }
    if (gf) {
      auto d = ReportRow::exact_row(g.str(), "derangement proportion " + act.str(), std::to_string(n), *gf, Provenance::Series);
      d.with(verdict_of(*gf >= *lb.exact), "generating function; must dominate the rs-derangement lower bound");
      out.push_back(d);
    }
    return out;
  });
  std::vector<ReportRow> flat;
  for (auto& r : rows) verify::append(flat, std::move(r));
  if (a.limit) {
    const GroupSpec g{f, a.q, std::max(40, 2 * act.k)};
    const LowerBound lb = derangement_lower_bound(g, act, BoundMode::Limit);
    auto row = lb.exact ? ReportRow::exact_row(family_label(f, a.q), stat + " limit", "inf", *lb.exact, Provenance::Limit)
                        : ReportRow::float_row(family_label(f, a.q), stat + " limit", "inf", lb.value, Provenance::Limit);
    row.paper_ref = lb.route + "; error " + float_string(lb.error, 3);
    if (expect) row.with(verdict_of(holds(Quantity(lb), Relation::AtLeast, *expect)), row.paper_ref + "; expected >= " + a.expect);
    flat.push_back(row);
  }
  return emit(a.out, flat);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite, qs;
  std::vector<std::string> scenarios;
  int order = 50, jobs = 0;
  bool list = false;
  Output out;
};

int cmd_verify(const VerifyArgs& a) {
  const bool ids = a.suite == "identities" || a.suite == "all";
  const bool bounds = a.suite == "bounds" || a.suite == "all";
  const bool orc = a.suite == "oracle" || a.suite == "all";
  if (a.list) {
    if (ids)
      for (auto& n : identity_names()) std::cout << "identity\t" << n << '\n';
    if (bounds)
      for (auto& n : scenario_names()) std::cout << "scenario\t" << n << '\n';
    if (orc)
      for (auto& g : oracle::feasible_set()) std::cout << "group\t" << g.str() << '\n';
    return 0;
  }
  require(a.order >= 1, "--order must be positive");
  require(a.scenarios.empty() || bounds, "--scenario applies to the bounds suite");
  std::vector<ReportRow> rows;
  if (ids) verify::append(rows, verify::identity_suite(a.qs.empty() ? verify::default_identity_qs() : parse_qs(a.qs), a.order, a.jobs));
  if (bounds) {
    const auto known = scenario_names();
    for (auto& s : a.scenarios)
      if (std::find(known.begin(), known.end(), s) == known.end()) bound_scenario(s);
    verify::append(rows, verify::bounds_suite(a.scenarios.empty() ? scenario_names() : a.scenarios, a.jobs));
  }
  if (orc) verify::append(rows, verify::oracle_suite(a.jobs));
  return emit(a.out, rows);
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string family, action, type = "0";
  long q = 0;
  int n = 0, k = 1;
  bool classes = false, list = false;
  Output out;
};

int cmd_oracle(const OracleArgs& a) {
  if (a.list) {
    for (auto& g : oracle::feasible_set())
      std::cout << g.str() << '\t' << to_string(g.family) << '\t' << g.q << '\t' << g.n << '\n';
    return 0;
  }
  require(!a.family.empty() && a.q > 0 && a.n > 0, "oracle needs --family, --q and --n (or --list)");
  const GroupSpec g{parse_family(a.family), a.q, a.n};
  g.validate();
  auto rows = verify::oracle_rows(g);
  const std::string n = std::to_string(g.n);
  if (!a.action.empty() || a.classes) {
    const auto G = oracle::enumerate_group(g);
    if (!a.action.empty()) {
      const ActionKind kind = parse_action_kind(a.action);
      require(kind != ActionKind::Hyperplane, "the oracle acts on subspaces of the natural module only");
      const oracle::SubspaceKind sk{verify::subspace_class(kind), a.k, parse_type(a.type)};
      require(a.k >= 1 && a.k <= G.dim(), "--k must lie in 1..dimension");
      const auto c = oracle::subspace_counts(G, sk);
      const Rational order(c.order);
      rows.push_back(ReportRow::exact_row(g.str(), sk.str() + " subspaces", n, Rational(Integer(c.subspaces)), Provenance::Oracle));
      rows.push_back(
          ReportRow::exact_row(g.str(), "derangement " + sk.str(), n, Rational(Integer(c.derangements)) / order, Provenance::Oracle));
      rows.push_back(ReportRow::exact_row(g.str(), "rs fixing " + sk.str(), n, Rational(Integer(c.rs_fixing)) / order,
                                          Provenance::Oracle));
    }
    if (a.classes) {
      const auto C = oracle::conjugacy_classes(G);
      rows.push_back(ReportRow::exact_row(g.str(), "conjugacy classes", n, Rational(Integer(static_cast<long>(C.sizes.size()))),
                                          Provenance::Oracle));
      rows.push_back(ReportRow::exact_row(g.str(), "rs conjugacy classes", n, Rational(Integer(oracle::class_count_rs(G))),
                                          Provenance::Oracle));
    }
  }
  return emit(a.out, rows);
}

// ---------------------------------------------------------------- constants

struct ConstantsArgs {
  int n = 40;
  Output out;
};

int cmd_constants(const ConstantsArgs& a) {
  require(a.n >= 1, "--n must be positive");
  std::vector<ReportRow> rows;
  for (auto& c : named_constants()) {
    const double v = c.value();
    auto row = ReportRow::float_row(c.name, "closed form", "-", v, Provenance::Limit);
    row.with(verdict_of(v <= to_double(c.cap)), "stated cap " + float_string(to_double(c.cap), 3));
    rows.push_back(row);
    const Rational w = named_constant_witness(c.name, a.n);
    auto wr = ReportRow::exact_row(c.name, "B_n witness", std::to_string(a.n), w, Provenance::Weyl);
    wr.with(verdict_of(std::abs(to_double(w) - v) <= 2e-3), "within 2e-3 of the closed form");
    rows.push_back(wr);
  }
  for (long q : {2L, 3L, 4L, 5L}) {
    const double c1 = mean_D_bound_c1(q);
    auto row = ReportRow::float_row(family_label(Family::GL, q), "mean-D bound c1", "-", c1, Provenance::Limit);
    if (q == 2) row.with(verdict_of(c1 <= 28), "at most 28");
    rows.push_back(row);
    const TruncatedSeries s = rs_series({Family::GL, q, 1}, RSKind::MeanD, a.n);
    Rational worst = s.coefficient(1);
    for (int n = 2; n <= a.n; ++n) worst = std::max(worst, s.coefficient(n));
    auto m = ReportRow::exact_row(family_label(Family::GL, q), "max mean-D over n <= " + std::to_string(a.n), std::to_string(a.n),
                                  worst, Provenance::Series);
    m.with(verdict_of(to_double(worst) <= c1), "at most c1");
    rows.push_back(m);
  }
  return emit(a.out, rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derangement and regular semisimple proportions in finite classical groups"};
  app.require_subcommand(1);
  std::function<int()> action;

  RsArgs rs;
  auto* c_rs = app.add_subcommand("rs", "regular semisimple, eigenvalue-free and mean-D proportions");
  c_rs->add_option("--family", rs.family, "gl, sl, u, su, sp, so, so+, so-, omega+, omega-, o+, o-")->required();
  c_rs->add_option("--q", rs.q, "field size")->required();
  c_rs->add_option("--n", rs.n, "rank: a, a..b or a comma list");
  c_rs->add_flag("--limit", rs.limit, "add the n -> infinity row");
  c_rs->add_option("--kind", rs.kind, "rs, srs, eigenvalue-free, mean-D");
  c_rs->add_option("--order", rs.order, "series order (default: largest n, or DERANGE_ORDER rows when no --n)");
  c_rs->add_option("--depth", rs.depth, "product truncation depth for limits");
  c_rs->add_option("--expect-at-least", rs.expect, "verdict on the limit row");
  c_rs->add_option("--jobs", rs.jobs, "worker threads");
  add_output(c_rs, rs.out);
  c_rs->callback([&] { action = [&] { return cmd_rs(rs); }; });

  WeylArgs wy;
  auto* c_wy = app.add_subcommand("weyl", "exact proportions in S_n, A_n cosets, B_n, D_n, D_n^-");
  c_wy->add_option("--group", wy.group, "sn, an-even, an-odd, bn, dn, dn-minus")->required();
  c_wy->add_option("--n", wy.n, "a, a..b or a comma list")->required();
  c_wy->add_option("--fix-kset", wy.fix_k, "require fixing a k-set");
  c_wy->add_option("--mode", wy.mode, "any, positive, even, neg-even, neg-odd");
  c_wy->add_flag("--derangement", wy.derangement, "require fixing no such k-set");
  c_wy->add_option("--fixed", wy.fixed, "cap on (positive) fixed points: b, a..b or a..");
  c_wy->add_option("--two-cycles", wy.two_cycles, "cap on (positive) 2-cycles");
  c_wy->add_option("--neg-fixed", wy.neg_fixed, "cap on negative 1-cycles");
  c_wy->add_option("--neg-two-cycles", wy.neg_two_cycles, "cap on negative 2-cycles");
  c_wy->add_option("--neg-parity", wy.neg_parity, "parity of the number of negative cycles: even or odd");
  c_wy->add_option("--jobs", wy.jobs, "worker threads");
  add_output(c_wy, wy.out);
  c_wy->callback([&] { action = [&] { return cmd_weyl(wy); }; });

  BoundArgs bd;
  auto* c_bd = app.add_subcommand("bound", "lower bounds on regular semisimple derangements");
  c_bd->add_option("--family", bd.family, "group family")->required();
  c_bd->add_option("--q", bd.q, "field size")->required();
  c_bd->add_option("--n", bd.n, "rank: a, a..b or a comma list");
  c_bd->add_option("--action", bd.action, "any, nondegenerate, totally-singular, hyperplane");
  c_bd->add_option("--k", bd.k, "subspace dimension");
  c_bd->add_option("--type", bd.type, "+, - or 0 for nondegenerate orthogonal subspaces and hyperplanes");
  c_bd->add_flag("--refined", bd.refined, "apply the small-q fixed-point caps");
  c_bd->add_flag("--limit", bd.limit, "add the n -> infinity row");
  c_bd->add_option("--expect-at-least", bd.expect, "verdict threshold, decimal or p/q");
  c_bd->add_option("--jobs", bd.jobs, "worker threads");
  add_output(c_bd, bd.out);
  c_bd->callback([&] { action = [&] { return cmd_bound(bd); }; });

  VerifyArgs vf;
  auto* c_vf = app.add_subcommand("verify", "run a verification suite");
  c_vf->add_option("--suite", vf.suite, "identities, bounds, oracle, all")
      ->required()
      ->check(CLI::IsMember({"identities", "bounds", "oracle", "all"}));
  c_vf->add_option("--q", vf.qs, "field sizes for identities, comma separated");
  c_vf->add_option("--order", vf.order, "identity series order");
  c_vf->add_option("--scenario", vf.scenarios, "restrict the bounds suite (repeatable)");
  c_vf->add_flag("--list", vf.list, "list the suite's checks and exit");
  c_vf->add_option("--jobs", vf.jobs, "worker threads");
  add_output(c_vf, vf.out);
  c_vf->callback([&] { action = [&] { return cmd_verify(vf); }; });

  OracleArgs orc;
  auto* c_or = app.add_subcommand("oracle", "brute-force statistics of a small group");
  c_or->add_option("--family", orc.family, "group family");
  c_or->add_option("--q", orc.q, "field size");
  c_or->add_option("--n", orc.n, "rank");
  c_or->add_option("--action", orc.action, "any, nondegenerate, totally-singular");
  c_or->add_option("--k", orc.k, "subspace dimension");
  c_or->add_option("--type", orc.type, "+, - or 0");
  c_or->add_flag("--classes", orc.classes, "count conjugacy classes");
  c_or->add_flag("--list", orc.list, "list the feasible set");
  add_output(c_or, orc.out);
  c_or->callback([&] { action = [&] { return cmd_oracle(orc); }; });

  ConstantsArgs cs;
  auto* c_cs = app.add_subcommand("constants", "named limit constants and the mean-D constant");
  c_cs->add_option("--n", cs.n, "rank for the exact witnesses");
  add_output(c_cs, cs.out);
  c_cs->callback([&] { action = [&] { return cmd_constants(cs); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return 2;
  } catch (const SingularSeriesError& e) {
    std::cerr << "singular series: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
