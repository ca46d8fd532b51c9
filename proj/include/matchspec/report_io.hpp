#pragma once

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reports.hpp"

namespace matchspec {

using Json = nlohmann::ordered_json;

/// Six decimals, as in every text table.
inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

inline Json to_json(const ExceptionEntry& e) {
  Json j;
  j["graph6"] = e.graph6;
  j["family"] = e.family ? Json(*e.family) : Json(nullptr);
  j["listed"] = e.listed;
  j["edges"] = e.edges;
  j["rho"] = e.rho;
  j["gap"] = e.gap;
  return j;
}

inline Json to_json(const SweepReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "sweep";
  j["theorem"] = r.theorem;
  j["n"] = r.n;
  j["k"] = r.k;
  j["source"] = r.source;
  j["min_degree_filter"] = r.min_degree_filter ? Json(*r.min_degree_filter) : Json(nullptr);
  j["threshold"] = r.threshold;
  j["tolerance"] = r.tolerance;
  j["graphs_scanned"] = r.graphs_scanned;
  j["graphs_filtered"] = r.graphs_filtered;
  j["hypothesis_count"] = r.hypothesis_count;
  j["counterexamples"] = r.counterexamples;
  j["exceptions"] = Json::array();
  for (const auto& e : r.exceptions) j["exceptions"].push_back(to_json(e));
  j["verified"] = r.verified();
  j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

inline Json to_json(const LemmaReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "lemma";
  j["lemma"] = r.lemma;
  j["grid"] = r.grid;
  j["instances"] = r.instances;
  j["violations"] = r.violations;
  j["max_equality_gap"] = r.max_equality_gap;
  j["min_strict_margin"] = r.min_strict_margin ? Json(*r.min_strict_margin) : Json(nullptr);
  j["notes"] = r.notes;
  j["verified"] = r.verified();
  return j;
}

inline void write_text(std::ostream& os, const SweepReport& r) {
  os << "theorem " << r.theorem;
  if (r.k) os << " k=" << r.k;
  os << " n=" << r.n << " source=" << r.source << "\n";
  os << "threshold " << fixed6(r.threshold) << "  tolerance " << r.tolerance << "\n";
  os << "scanned " << r.graphs_scanned << "  filtered " << r.graphs_filtered << "  hypothesis " << r.hypothesis_count
     << "\n";
  os << "exceptions " << r.exceptions.size() << "\n";
  for (const auto& e : r.exceptions)
    os << "  " << e.graph6 << "  m=" << e.edges << "  rho=" << fixed6(e.rho) << "  gap=" << fixed6(e.gap) << "  "
       << (e.family ? *e.family : "unrecognised") << (e.listed ? "" : "  NOT LISTED") << "\n";
  os << "counterexamples " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) os << "  " << c << "\n";
  os << (r.verified() ? "verified" : "FAILED") << "  (" << fixed6(r.wall_time_seconds) << " s)\n";
}

inline void write_text(std::ostream& os, const LemmaReport& r) {
  os << "lemma " << r.lemma << "  grid " << r.grid << "\n";
  os << "instances " << r.instances << "  max equality gap " << r.max_equality_gap;
  if (r.min_strict_margin) os << "  min strict margin " << *r.min_strict_margin;
  os << "\n";
  for (const auto& n : r.notes) os << "  " << n << "\n";
  os << "violations " << r.violations.size() << "\n";
  for (const auto& v : r.violations) os << "  " << v << "\n";
  os << (r.verified() ? "verified" : "FAILED") << "\n";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline void write_csv(std::ostream& os, const SweepReport& r) {
  os << "theorem,n,k,graph6,family,listed,edges,rho,gap\n";
  for (const auto& e : r.exceptions) {
    std::ostringstream rho;
    rho << std::setprecision(17) << e.rho;
    std::ostringstream gap;
    gap << std::setprecision(17) << e.gap;
    os << r.theorem << ',' << r.n << ',' << r.k << ',' << csv_field(e.graph6) << ',' << csv_field(e.family.value_or(""))
       << ',' << (e.listed ? "true" : "false") << ',' << e.edges << ',' << rho.str() << ',' << gap.str() << '\n';
  }
}

inline void write_csv(std::ostream& os, const LemmaReport& r) {
  os << "lemma,instances,violations,max_equality_gap,min_strict_margin\n";
  os << r.lemma << ',' << r.instances << ',' << r.violations.size() << ',' << std::setprecision(17)
     << r.max_equality_gap << ',';
  if (r.min_strict_margin) os << *r.min_strict_margin;
  os << '\n';
}

}  // namespace matchspec
