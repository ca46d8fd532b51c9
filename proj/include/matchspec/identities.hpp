#pragma once

#include <functional>
#include <string>
#include <vector>

#include "families.hpp"
#include "polynomial.hpp"
#include "reports.hpp"
#include "spectral.hpp"

namespace matchspec {

// Closed-form characteristic polynomials of block quotient matrices. Each is
// det(xI − B) for the canonical partition of the construction named in its
// comment, written with the family parameters substituted.

namespace closed_form {

using C = long long;

inline Polynomial desc(std::initializer_list<C> coeffs) {
  std::vector<Integer> c;
  for (C a : coeffs) c.emplace_back(a);
  return Polynomial::descending(std::move(c));
}

/// K_q + K_{l−q}, blocks {K_q − u, u, v, K_{l−q} − v}.
inline Polynomial bridged(C l, C q) {
  return desc({1, 4 - l, l * q - q * q - 3 * l + 5, 2 * l * q - 2 * q * q - 2 * l, l - 3});
}

/// K3 + K_{l−3}.
inline Polynomial bridged_triangle(C l) { return desc({1, 4 - l, -4, 4 * l - 18, l - 3}); }

/// K_{2k} ∨ (K_{n−2k−1} ∪ K1).
inline Polynomial extension_isolated(C n, C k) {
  return desc({1, -(n - 3), -(2 * k + n - 2), -4 * k * k + 2 * k * n - 4 * k});
}

/// K_{2k+1} ∨ 3K1.
inline Polynomial extension_triple(C k) { return desc({1, -2 * k, -6 * k - 3}); }

/// K_s ∨ (K_{n−2s+2k−1} ∪ (s−2k+1)K1).
inline Polynomial extremal_join(C n, C k, C s) {
  return desc({1, -(n - s + 2 * k - 3), -(n - 2 * s * k + s * s + 2 * k - 2), -s * (2 * k - s - 1) * (2 * k + n - 2 * s - 2)});
}

/// K_{2k+1} ∨ (K_{n−2k−3} ∪ 2K1), the s = 2k+1 member.
inline Polynomial extremal_join_next(C n, C k) {
  return desc({1, -(n - 4), -(4 * k - 1 + n), -8 * k * k + 4 * k * n - 20 * k + 2 * n - 8});
}

/// K1 ∨ (K_{m−1}^+ ∪ K_{n−m−1}), blocks {K1, K_{m−2}, u, v, K_{n−m−1}}.
inline Polynomial hub_pendant(C n, C m) {
  return desc({1, -(n - 5), n * m - m * m - 4 * n + 8, 3 * n * m - 3 * m * m - 4 * n - 2, 6 * n - 3 * m - 19,
               -3 * m * n + 3 * m * m + 9 * n - 4 * m - 15});
}

/// hub_pendant at m = 2; equals (x+1)² times hub_cubic.
inline Polynomial hub_pendant_degenerate(C n) {
  return desc({1, -(n - 5), -(2 * n - 4), -(14 - 2 * n), -(25 - 6 * n), 3 * n - 11});
}

/// K1 ∨ (K2 ∪ K_{n−3}).
inline Polynomial exclusion_hub(C n) { return desc({1, 3 - n, -3, 3 * n - 11}); }

/// K_s ∨ (K2 ∪ sK1).
inline Polynomial half_join(C s) { return desc({1, -s, -(s * s + s + 1), s * s}); }

/// K_s ∨ (K2 ∪ K_{n−2s−1} ∪ (s−1)K1).
inline Polynomial exclusion_split(C n, C s) {
  return desc({1, s + 2 - n, -(s * s + s + 1), s * s * n - 2 * s * s * s + s * n - 3 * s * s + n - 4 * s - 2,
               -s * s * n + 2 * s * s * s + s * n - 2 * s});
}

/// K_s ∨ (K_{n−2s−1}^+ ∪ sK1), blocks {K_s, K_{n−2s−2}, u, v, sK1}.
inline Polynomial exclusion_pendant(C n, C s) {
  return desc({1, -(n - s - 4), -(s * s + 2 * n - s - 4), (s + 1) * (n * s - 2 * s * s - 3 * s - 2),
               -(2 * s * s * s - n * s * s + 3 * s * s - n * s + 5 * s - n + 3), -n * s * s + 2 * s * s * s + 3 * s * s});
}

/// exclusion_pendant at n = 2s+4.
inline Polynomial exclusion_pendant_tight(C s) {
  return desc({1, -s, -(s * s + 3 * s + 4), s * s - s - 2, 3 * s * s + s + 1, -s * s});
}

/// K2 ∨ (K_{n−5}^+ ∪ 2K1).
inline Polynomial pendant_pair(C n) {
  return desc({1, -(n - 6), -(2 * n - 2), -(48 - 6 * n), -(41 - 7 * n), -4 * n + 28});
}

/// K1 ∨ (K_{n−3} ∪ 2K1); largest root θ(n).
inline Polynomial deficient_hub(C n) { return theta_cubic(static_cast<int>(n)); }

}  // namespace closed_form

/// One substitution instance: a construction and the closed form it should match.
struct IdentityInstance {
  std::string identity;
  std::string parameters;
  FamilySpec construction;
  Polynomial expected;
  /// Multiplier applied to the computed quotient polynomial before comparing.
  Polynomial factor{Integer(1)};
};

namespace detail {

inline std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += (out.empty() ? "" : ",") + std::string(k) + "=" + std::to_string(v);
  return out;
}

}  // namespace detail

/// The default substitution grid, 15 identities over 60+ instances.
inline std::vector<IdentityInstance> identity_grid(int max_n = 14) {
  using S = FamilySpec;
  using detail::params;
  namespace cf = closed_form;
  std::vector<IdentityInstance> out;
  for (int l = 6; l <= max_n; l += 2)
    for (int q = 3; l - q >= 3; q += 2)
      out.push_back({"bridged-completes", params({{"l", l}, {"q", q}}), S::bridged(q, l - q), cf::bridged(l, q)});
  for (int l = 6; l <= max_n; l += 2)
    out.push_back({"bridged-triangle", params({{"l", l}}), S::bridged(3, l - 3), cf::bridged_triangle(l)});
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k + 2; n <= max_n; n += 2)
      out.push_back({"extension-isolated", params({{"n", n}, {"k", k}}),
                     S::named({FamilyId::extension_isolated, n, k, 0}), cf::extension_isolated(n, k)});
  for (int k = 1; 2 * k + 4 <= max_n; ++k)
    out.push_back({"extension-triple", params({{"k", k}}), S::named({FamilyId::extension_triple, 0, k, 0}),
                   cf::extension_triple(k)});
  for (int k = 1; k <= 2; ++k)
    for (int s = 2 * k; s <= 2 * k + 3; ++s)
      for (int n = 2 * s - 2 * k + 2; n <= max_n; n += 2)
        out.push_back({"extremal-join", params({{"n", n}, {"k", k}, {"s", s}}),
                       S::named({FamilyId::extremal_join, n, k, s}), cf::extremal_join(n, k, s)});
  for (int k = 1; k <= 2; ++k)
    for (int n = 2 * k + 4; n <= max_n; n += 2)
      out.push_back({"extremal-join-next", params({{"n", n}, {"k", k}}),
                     S::named({FamilyId::extremal_join, n, k, 2 * k + 1}), cf::extremal_join_next(n, k)});
  for (int n = 8; n <= max_n; n += 2)
    for (int m = 4; n - m - 1 >= 1; m += 2)
      out.push_back({"hub-pendant", params({{"n", n}, {"m", m}}),
                     S::join(S::complete(1), S::disjoint({S::pendant_complete(m), S::complete(n - m - 1)})),
                     cf::hub_pendant(n, m)});
  // The m = 2 block K_{m−2} is empty, so the 5×5 form collapses to the hub
  // cubic times (x+1)².
  for (int n = 6; n <= max_n; n += 2)
    out.push_back({"hub-pendant-degenerate", params({{"n", n}}), S::named({FamilyId::exclusion_hub, n}),
                   cf::hub_pendant_degenerate(n), Polynomial{Integer(1), Integer(2), Integer(1)}});
  for (int n = 6; n <= max_n; n += 2)
    out.push_back({"exclusion-hub", params({{"n", n}}), S::named({FamilyId::exclusion_hub, n}), cf::exclusion_hub(n)});
  for (int s = 1; 2 * s + 2 <= max_n; ++s)
    out.push_back({"half-join", params({{"s", s}}), S::named({FamilyId::half_join, 2 * s + 2}), cf::half_join(s)});
  for (int s = 2; 2 * s + 2 <= max_n; ++s)
    for (int n = 2 * s + 2; n <= max_n; n += 2)
      out.push_back({"exclusion-split", params({{"n", n}, {"s", s}}), S::named({FamilyId::exclusion_split, n, 0, s}),
                     cf::exclusion_split(n, s)});
  for (int s = 2; 2 * s + 4 <= max_n; ++s)
    for (int n = 2 * s + 4; n <= max_n; n += 2)
      out.push_back({"exclusion-pendant", params({{"n", n}, {"s", s}}),
                     S::named({FamilyId::exclusion_pendant, n, 0, s}), cf::exclusion_pendant(n, s)});
  for (int s = 2; 2 * s + 4 <= max_n; ++s)
    out.push_back({"exclusion-pendant-tight", params({{"s", s}}),
                   S::named({FamilyId::exclusion_pendant, 2 * s + 4, 0, s}), cf::exclusion_pendant_tight(s)});
  for (int n = 8; n <= max_n; n += 2)
    out.push_back({"pendant-pair", params({{"n", n}}), S::named({FamilyId::pendant_pair, n}), cf::pendant_pair(n)});
  for (int n = 4; n <= max_n; n += 2)
    out.push_back({"deficient-hub", params({{"n", n}}), S::named({FamilyId::deficient_hub, n}), cf::deficient_hub(n)});
  return out;
}

/// Exact quotient characteristic polynomial of the construction's canonical partition.
inline Polynomial construction_polynomial(const FamilySpec& spec) {
  const auto g = build(spec);
  return quotient_polynomial(quotient_matrix(g, canonical_partition(spec)));
}

/// Compare every instance coefficient by coefficient. Mismatches are
/// reported verbatim with both polynomials.
inline LemmaReport verify_charpoly_identities(const std::vector<IdentityInstance>& grid) {
  LemmaReport r;
  r.lemma = "charpolys";
  r.grid = std::to_string(grid.size()) + " instances";
  for (const auto& inst : grid) {
    ++r.instances;
    const auto computed = inst.factor * construction_polynomial(inst.construction);
    const bool ok = computed == inst.expected;
    const std::string line = inst.identity + " [" + inst.parameters + "] " + to_string(inst.construction) +
                             ": expected " + inst.expected.to_string() + ", computed " + computed.to_string();
    r.notes.push_back((ok ? "ok " : "MISMATCH ") + line);
    if (!ok) r.violations.push_back(line);
  }
  return r;
}

inline LemmaReport verify_charpoly_identities(int max_n = 14) { return verify_charpoly_identities(identity_grid(max_n)); }

}  // namespace matchspec
