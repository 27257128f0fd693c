#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace derange {

enum class Provenance { Series, Limit, Oracle, Scenario, Weyl, Identity };
enum class Verdict { Pass, Fail, NotApplicable };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Series: return "series";
    case Provenance::Limit: return "limit";
    case Provenance::Oracle: return "oracle";
    case Provenance::Scenario: return "scenario";
    case Provenance::Weyl: return "weyl";
    case Provenance::Identity: return "identity";
  }
  return "?";
}

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

inline Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

// One output line. float is derived from exact when exact is present.
struct ReportRow {
  std::string group;
  std::string statistic;
  std::string n;
  std::optional<Rational> exact;
  double value = 0;
  Provenance provenance = Provenance::Series;
  Verdict verdict = Verdict::NotApplicable;
  std::string paper_ref;

  static ReportRow exact_row(std::string group, std::string statistic, std::string n, const Rational& r, Provenance p) {
    ReportRow row{std::move(group), std::move(statistic), std::move(n), r, to_double(r), p, Verdict::NotApplicable, {}};
    return row;
  }
  static ReportRow float_row(std::string group, std::string statistic, std::string n, double v, Provenance p) {
    ReportRow row{std::move(group), std::move(statistic), std::move(n), std::nullopt, v, p, Verdict::NotApplicable, {}};
    return row;
  }
  ReportRow& with(Verdict v, std::string ref = {}) {
    verdict = v;
    if (!ref.empty()) paper_ref = std::move(ref);
    return *this;
  }

  std::string exact_string() const { return exact ? to_string(*exact) : "-"; }
  std::string float_text() const { return float_string(exact ? to_double(*exact) : value, 12); }
};

enum class Format { Tsv, Json };

inline Format parse_format(const std::string& s) {
  if (s == "tsv") return Format::Tsv;
  if (s == "json") return Format::Json;
  throw UsageError("unknown format '" + s + "' (tsv, json)");
}

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {"group", "statistic", "n", "exact", "float", "provenance", "verdict", "paper_ref"};
  return cols;
}

namespace detail {

inline std::string tsv_field(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ReportRow& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["statistic"] = r.statistic;
  j["n"] = r.n;
  j["exact"] = r.exact ? nlohmann::ordered_json(to_string(*r.exact)) : nlohmann::ordered_json(nullptr);
  j["float"] = r.float_text();
  j["provenance"] = to_string(r.provenance);
  j["verdict"] = to_string(r.verdict);
  j["paper_ref"] = r.paper_ref;
  return j;
}

inline void write_header(std::ostream& os, Format f) {
  if (f != Format::Tsv) return;
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "\t" : "") << cols[i];
  os << '\n';
}

inline void write_row(std::ostream& os, const ReportRow& r) {
  using detail::tsv_field;
  os << tsv_field(r.group) << '\t' << tsv_field(r.statistic) << '\t' << tsv_field(r.n) << '\t' << r.exact_string() << '\t'
     << r.float_text() << '\t' << to_string(r.provenance) << '\t' << to_string(r.verdict) << '\t' << tsv_field(r.paper_ref)
     << '\n';
}

// TSV with a header line, or a JSON array with one object per line.
inline void write_report(std::ostream& os, const std::vector<ReportRow>& rows, Format f) {
  if (f == Format::Tsv) {
    write_header(os, f);
    for (auto& r : rows) write_row(os, r);
    return;
  }
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? ",\n " : "\n ") << to_json(rows[i]).dump();
  os << (rows.empty() ? "]\n" : "\n]\n");
}

}  // namespace derange
