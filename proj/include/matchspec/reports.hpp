#pragma once

#include <optional>
#include <string>
#include <vector>

namespace matchspec {

inline constexpr int kReportSchemaVersion = 1;

/// A graph the sweep found with hypothesis met and conclusion failed.
struct ExceptionEntry {
  std::string graph6;
  /// Family name ("thm11-exc1:n=6,k=1") when recognised, else empty.
  std::optional<std::string> family;
  bool listed = false;
  long long edges = 0;
  double rho = 0.0;
  /// measure − threshold (edges or ρ, per statement).
  double gap = 0.0;
};

struct SweepReport {
  std::string theorem;
  int n = 0;
  int k = 0;
  std::string source;
  std::optional<int> min_degree_filter;
  double threshold = 0.0;
  double tolerance = 0.0;
  long long graphs_scanned = 0;
  long long graphs_filtered = 0;
  long long hypothesis_count = 0;
  std::vector<std::string> counterexamples;
  std::vector<ExceptionEntry> exceptions;
  double wall_time_seconds = 0.0;

  bool verified() const { return counterexamples.empty(); }
};

struct LemmaReport {
  std::string lemma;
  std::string grid;
  long long instances = 0;
  std::vector<std::string> violations;
  /// Largest deviation in a claimed equality (0 when none are claimed).
  double max_equality_gap = 0.0;
  /// Smallest margin seen in a claimed strict inequality, if any.
  std::optional<double> min_strict_margin;
  /// Free-form lines worth reporting, e.g. per-instance polynomial checks.
  std::vector<std::string> notes;

  bool verified() const { return violations.empty(); }

  void strict(double margin) {
    if (!min_strict_margin || margin < *min_strict_margin) min_strict_margin = margin;
  }
  void equality(double gap) {
    if (gap > max_equality_gap) max_equality_gap = gap;
  }
};

}  // namespace matchspec
