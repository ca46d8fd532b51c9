#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "matching.hpp"
#include "spectral.hpp"

namespace matchspec {

inline constexpr double kSpectralTolerance = 1e-9;

/// The four sufficient conditions: an edge-count or spectral-radius bound
/// implying k-extendability or 1-excludability, each with listed exceptions.
enum class Statement {
  size_extendable,      // |E| >= C(n−1,2) + 2k  ⇒  k-extendable
  size_excludable,      // |E| >= 10 / 19 / C(n−2,2)+3, δ >= 2  ⇒  1-excludable
  spectral_extendable,  // ρ >= ρ(K_{2k} ∨ (K_{n−2k−1} ∪ K1))  ⇒  k-extendable
  spectral_excludable,  // ρ >= ρ(F), δ >= 2  ⇒  1-excludable
};

struct TheoremId {
  Statement statement = Statement::size_extendable;
  int k = 1;

  bool about_extension() const {
    return statement == Statement::size_extendable || statement == Statement::spectral_extendable;
  }
  bool spectral() const {
    return statement == Statement::spectral_extendable || statement == Statement::spectral_excludable;
  }

  friend bool operator==(const TheoremId&, const TheoremId&) = default;
};

/// Command-line token: t11, t13, t14, t16.
inline std::string theorem_token(const TheoremId& t) {
  switch (t.statement) {
    case Statement::size_extendable: return "t11";
    case Statement::size_excludable: return "t13";
    case Statement::spectral_extendable: return "t14";
    case Statement::spectral_excludable: return "t16";
  }
  return "?";
}

inline std::string to_string(const TheoremId& t) {
  return t.about_extension() ? theorem_token(t) + "(k=" + std::to_string(t.k) + ")" : theorem_token(t);
}

/// Accepts t11, t13, t14, t16 and the k = 1 aliases c12 (= t11) and c15 (= t14).
inline TheoremId parse_theorem_id(std::string_view token, int k = 1) {
  if (k < 1) throw RangeError("k must be >= 1");
  if (token == "t11") return {Statement::size_extendable, k};
  if (token == "t13") return {Statement::size_excludable, 1};
  if (token == "t14") return {Statement::spectral_extendable, k};
  if (token == "t16") return {Statement::spectral_excludable, 1};
  if (token == "c12") return {Statement::size_extendable, 1};
  if (token == "c15") return {Statement::spectral_extendable, 1};
  throw ParseError("unknown theorem '" + std::string(token) + "' (expected t11, t13, t14, t16, c12 or c15)");
}

inline long long binomial2(long long n) { return n * (n - 1) / 2; }

inline void check_extension_range(int n, int k) {
  if (k < 1) throw RangeError("k must be >= 1");
  if (n % 2 != 0 || n < 2 * k + 2)
    throw RangeError("n must be even and >= 2k+2 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

inline void check_exclusion_range(int n) {
  if (n % 2 != 0 || n < 6) throw RangeError("n must be even and >= 6 (n=" + std::to_string(n) + ")");
}

inline long long size_threshold_extendable(int n, int k) {
  check_extension_range(n, k);
  return binomial2(n - 1) + 2LL * k;
}

inline long long size_threshold_excludable(int n) {
  check_exclusion_range(n);
  if (n == 6) return 10;
  if (n == 8) return 19;
  return binomial2(n - 2) + 3;
}

/// The graph whose spectral radius is the threshold.
inline FamilyRef spectral_threshold_family(const TheoremId& t, int n) {
  if (t.about_extension()) {
    check_extension_range(n, t.k);
    return {FamilyId::extension_isolated, n, t.k, 0};
  }
  check_exclusion_range(n);
  if (n == 6) return {FamilyId::exclusion_six};
  if (n == 8) return {FamilyId::exclusion_eight};
  return {FamilyId::exclusion_hub, n};
}

/// x³ − (n−3)x² − (2k+n−2)x − 4k² + 2kn − 4k, whose largest root is
/// ρ(K_{2k} ∨ (K_{n−2k−1} ∪ K1)).
inline Polynomial extension_threshold_cubic(int n, int k) {
  return Polynomial::descending({1, -(n - 3), -(2 * k + n - 2), -4 * k * k + 2 * k * n - 4 * k});
}

/// x³ + (3−n)x² − 3x + 3n − 11, whose largest root is ρ(K1 ∨ (K2 ∪ K_{n−3})).
inline Polynomial hub_cubic(int n) { return Polynomial::descending({1, 3 - n, -3, 3 * n - 11}); }

/// A threshold computed two ways: Jacobi on the full adjacency matrix, and
/// the largest root of an exact characteristic polynomial.
struct ThresholdPaths {
  double eigensolver = 0.0;
  double closed_form = 0.0;
  double disagreement() const { return std::fabs(eigensolver - closed_form); }
};

inline ThresholdPaths spectral_threshold_paths(const TheoremId& t, int n) {
  const auto family = spectral_threshold_family(t, n);
  ThresholdPaths p;
  p.eigensolver = spectral_radius(build(family)).rho;
  if (t.about_extension()) {
    p.closed_form = largest_real_root(extension_threshold_cubic(n, t.k), 0.0, n);
  } else if (n >= 10) {
    p.closed_form = largest_real_root(hub_cubic(n), 0.0, n);
  } else {
    const auto g = build(family);
    p.closed_form = largest_real_root(quotient_polynomial(quotient_matrix(g, canonical_partition(family))), 0.0, n);
  }
  return p;
}

namespace detail {

inline double agreed_threshold(const TheoremId& t, int n) {
  const auto p = spectral_threshold_paths(t, n);
  if (p.disagreement() > kSpectralTolerance)
    throw Error("spectral threshold paths disagree by " + std::to_string(p.disagreement()));
  return p.closed_form;
}

}  // namespace detail

inline double spectral_threshold_extendable(int n, int k) {
  return detail::agreed_threshold({Statement::spectral_extendable, k}, n);
}

inline double spectral_threshold_excludable(int n) {
  return detail::agreed_threshold({Statement::spectral_excludable, 1}, n);
}

/// The exceptions named by each statement at order n. For the size bound on
/// 1-excludability at n >= 10 this holds the literal 11-vertex graph as
/// printed and K4 ∨ (K2 ∪ 4K1) at n = 10, which the edge-count analysis yields.
inline std::vector<FamilyRef> listed_exceptions(const TheoremId& t, int n) {
  std::vector<FamilyRef> out;
  switch (t.statement) {
    case Statement::size_extendable:
      check_extension_range(n, t.k);
      out.push_back({FamilyId::extension_isolated, n, t.k, 0});
      if (n == 2 * t.k + 4) out.push_back({FamilyId::extension_triple, n, t.k, 0});
      break;
    case Statement::spectral_extendable:
      check_extension_range(n, t.k);
      out.push_back({FamilyId::extension_isolated, n, t.k, 0});
      break;
    case Statement::size_excludable:
      check_exclusion_range(n);
      if (n == 6) out.push_back({FamilyId::exclusion_six});
      if (n == 8) out.push_back({FamilyId::exclusion_eight});
      if (n >= 10) {
        out.push_back({FamilyId::exclusion_eleven});
        if (n == 10) out.push_back({FamilyId::exclusion_pendant, 10, 0, 4});
        out.push_back({FamilyId::exclusion_hub, n});
      }
      break;
    case Statement::spectral_excludable:
      check_exclusion_range(n);
      out.push_back(spectral_threshold_family(t, n));
      break;
  }
  return out;
}

struct TheoremVerdict {
  bool hypothesis_met = false;
  bool conclusion_met = false;
  bool is_listed_exception = false;
  bool consistent = false;
  /// The listed exception g matches, if any.
  std::optional<FamilyRef> exception;
  /// |E| or ρ, whichever the statement bounds; compared against threshold.
  double measure = 0.0;
  double threshold = 0.0;
};

/// Thresholds and exception graphs for one (statement, n), computed once and
/// reused across many graphs.
class TheoremContext {
 public:
  TheoremContext(const TheoremId& t, int n, double tolerance = kSpectralTolerance)
      : t_(t), n_(n), tolerance_(tolerance) {
    if (!(tolerance > 0)) throw RangeError("tolerance must be > 0");
    if (t.about_extension()) check_extension_range(n, t.k);
    else check_exclusion_range(n);
    switch (t.statement) {
      case Statement::size_extendable: threshold_ = static_cast<double>(size_threshold_extendable(n, t.k)); break;
      case Statement::size_excludable: threshold_ = static_cast<double>(size_threshold_excludable(n)); break;
      case Statement::spectral_extendable:
      case Statement::spectral_excludable: threshold_ = detail::agreed_threshold(t, n); break;
    }
    for (const auto& r : listed_exceptions(t, n)) exceptions_.emplace_back(r, build(r));
  }

  const TheoremId& theorem() const { return t_; }
  int order() const { return n_; }
  double threshold() const { return threshold_; }
  double tolerance() const { return tolerance_; }

  /// Cheap structural part of the hypothesis: connectivity and, for the
  /// exclusion statements, δ >= 2.
  bool structure_ok(const Graph& g) const {
    if (g.order() != n_ || !is_connected(g)) return false;
    return t_.about_extension() || min_degree(g) >= 2;
  }

  /// Full hypothesis check. Spectral statements first try the bound
  /// ρ <= sqrt(2m − n + 1) (valid for connected graphs) to skip the eigensolver.
  bool hypothesis(const Graph& g, double* measure = nullptr) const {
    if (!structure_ok(g)) {
      if (measure) *measure = t_.spectral() ? 0.0 : static_cast<double>(g.size());
      return false;
    }
    if (!t_.spectral()) {
      if (measure) *measure = static_cast<double>(g.size());
      return g.size() >= static_cast<long long>(threshold_);
    }
    const double hong = std::sqrt(2.0 * g.size() - n_ + 1.0);
    if (hong < threshold_ - tolerance_ && measure == nullptr) return false;
    const double rho = spectral_radius(g).rho;
    if (measure) *measure = rho;
    return rho >= threshold_ - tolerance_;
  }

  bool conclusion(const Graph& g) const {
    return t_.about_extension() ? is_k_extendable(g, t_.k).holds : is_1_excludable(g).holds;
  }

  std::optional<FamilyRef> matching_exception(const Graph& g) const {
    for (const auto& [ref, built] : exceptions_)
      if (are_isomorphic(g, built)) return ref;
    return std::nullopt;
  }

  TheoremVerdict verdict(const Graph& g) const {
    if (g.order() != n_) throw RangeError("graph order does not match the theorem context");
    TheoremVerdict v;
    v.threshold = threshold_;
    v.hypothesis_met = hypothesis(g, &v.measure);
    v.conclusion_met = conclusion(g);
    v.exception = matching_exception(g);
    v.is_listed_exception = v.exception.has_value();
    v.consistent = !v.hypothesis_met || v.conclusion_met || v.is_listed_exception;
    return v;
  }

 private:
  TheoremId t_;
  int n_;
  double tolerance_;
  double threshold_ = 0.0;
  std::vector<std::pair<FamilyRef, Graph>> exceptions_;
};

inline TheoremVerdict theorem_verdict(const Graph& g, const TheoremId& t, double tolerance = kSpectralTolerance) {
  return TheoremContext(t, g.order(), tolerance).verdict(g);
}

}  // namespace matchspec
