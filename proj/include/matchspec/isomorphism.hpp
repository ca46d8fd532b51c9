#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace matchspec {

namespace detail {

// 1-dimensional Weisfeiler-Leman refinement run on both graphs with a shared
// colour dictionary, so equal colours are comparable across the two graphs.
inline std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& a, const Graph& b) {
  std::vector<int> ca(static_cast<std::size_t>(a.order()));
  std::vector<int> cb(static_cast<std::size_t>(b.order()));
  for (int v = 0; v < a.order(); ++v) ca[static_cast<std::size_t>(v)] = a.degree(v);
  for (int v = 0; v < b.order(); ++v) cb[static_cast<std::size_t>(v)] = b.degree(v);

  auto count_classes = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> all(x);
    all.insert(all.end(), y.begin(), y.end());
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
  };

  int classes = count_classes(ca, cb);
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      for_each_member(g.neighbors(v), [&](int w) { nb.push_back(col[static_cast<std::size_t>(w)]); });
      std::sort(nb.begin(), nb.end());
      return std::make_pair(col[static_cast<std::size_t>(v)], std::move(nb));
    };
    std::vector<std::pair<int, std::vector<int>>> sa;
    std::vector<std::pair<int, std::vector<int>>> sb;
    for (int v = 0; v < a.order(); ++v) sa.push_back(signature(a, ca, v));
    for (int v = 0; v < b.order(); ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) dict.emplace(s, 0);
    for (const auto& s : sb) dict.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : dict) id = next++;
    std::vector<int> na(sa.size());
    std::vector<int> nb(sb.size());
    for (std::size_t i = 0; i < sa.size(); ++i) na[i] = dict[sa[i]];
    for (std::size_t i = 0; i < sb.size(); ++i) nb[i] = dict[sb[i]];
    ca = std::move(na);
    cb = std::move(nb);
    const int now = count_classes(ca, cb);
    if (now == classes) break;
    classes = now;
  }
  return {ca, cb};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), map_(static_cast<std::size_t>(a.order()), -1) {
    // Most-constrained first: small colour classes, then neighbours of placed vertices.
    std::vector<int> class_size(static_cast<std::size_t>(a.order() + b.order() + 1), 0);
    for (int c : ca_) ++class_size[static_cast<std::size_t>(c)];
    std::uint64_t placed = 0;
    for (int step = 0; step < a.order(); ++step) {
      int best = -1;
      std::pair<int, int> best_key{0, 0};
      for (int v = 0; v < a.order(); ++v) {
        if ((placed >> v) & 1U) continue;
        const int touching = std::popcount(a.neighbors(v).bits() & placed);
        const std::pair<int, int> key{-touching, class_size[static_cast<std::size_t>(ca_[static_cast<std::size_t>(v)])]};
        if (best < 0 || key < best_key) {
          best = v;
          best_key = key;
        }
      }
      order_.push_back(best);
      placed |= std::uint64_t{1} << best;
    }
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < b_.order(); ++w) {
      if ((used_ >> w) & 1U) continue;
      if (cb_[static_cast<std::size_t>(w)] != ca_[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int x = order_[i];
        ok = a_.has_edge(v, x) == b_.has_edge(w, map_[static_cast<std::size_t>(x)]);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_ |= std::uint64_t{1} << w;
      if (extend(depth + 1)) return true;
      used_ &= ~(std::uint64_t{1} << w);
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_;
  std::vector<int> cb_;
  std::vector<int> map_;
  std::vector<int> order_;
  std::uint64_t used_ = 0;
};

}  // namespace detail

/// Exact isomorphism test: colour refinement, then backtracking over
/// colour-respecting partial maps. Intended for n <= 12; it stays correct
/// above that but may be slow on large highly regular inputs.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  auto [ca, cb] = detail::joint_refinement(a, b);
  auto sa = ca;
  auto sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return detail::IsoSearch(a, b, std::move(ca), std::move(cb)).run();
}

/// Upper-triangle adjacency bits in graph6 column order, most significant
/// first, so integer order equals graph6 bit-string order. Needs n <= 11.
inline std::uint64_t adjacency_code(const Graph& g, std::span<const int> perm) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      code = (code << 1) | (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1U : 0U);
  return code;
}

/// Canonical form for tiny graphs: the largest adjacency code over all
/// labellings that list vertices by non-increasing degree. Every isomorphic
/// copy sees the same set of such labellings, so the result is invariant.
/// Cost is the product of factorials of the degree-class sizes.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw RangeError("canonical_code supports n <= 11");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto deg = g.degrees();
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    return deg[static_cast<std::size_t>(x)] > deg[static_cast<std::size_t>(y)];
  });
  // Class boundaries in the degree-sorted order.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < perm.size();) {
    std::size_t j = i;
    while (j < perm.size() && deg[static_cast<std::size_t>(perm[j])] == deg[static_cast<std::size_t>(perm[i])]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  for (auto [lo, hi] : classes) std::sort(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi));

  std::uint64_t best = 0;
  bool first = true;
  // Odometer over per-class permutations.
  for (;;) {
    const auto code = adjacency_code(g, perm);
    if (first || code > best) best = code;
    first = false;
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [lo, hi] = classes[c];
      if (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi))) break;
    }
    if (c == classes.size()) break;
  }
  return best;
}

}  // namespace matchspec
