#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace matchspec {

/// Subset scans (criteria, Berge-Tutte oracle) refuse graphs above this order.
inline constexpr int kSubsetScanCap = 20;

struct MatchingResult {
  EdgeSet edges;
  int size = 0;
};

enum class Method { direct, criterion };

/// Which clause of the 1-excludability criterion a set S violates.
enum class ExclusionClause {
  odd_bridge,  // G−S has an odd-bridge component and o(G−S) > |S|−2
  plain,       // no such component and o(G−S) > |S|
};

struct SetWitness {
  VertexSet set;
  std::optional<ExclusionClause> clause;
};

struct MatchingWitness {
  EdgeSet matching;
};

struct EdgeWitness {
  Edge edge;
};

/// Outcome of a structural test. A false verdict always carries a witness;
/// std::monostate is the "∅-witness" used when no perfect matching can exist.
struct Verdict {
  bool holds = false;
  std::variant<std::monostate, SetWitness, MatchingWitness, EdgeWitness> witness;
  Method method = Method::direct;
};

namespace detail {

// Edmonds' blossom algorithm, O(n^3), over bit-mask neighbourhoods.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        in_queue_(static_cast<std::size_t>(n_), 0),
        in_blossom_(static_cast<std::size_t>(n_), 0),
        queue_(static_cast<std::size_t>(n_), 0) {}

  std::vector<int> solve() {
    // Greedy warm start.
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != -1) continue;
      for_each_member(g_.neighbors(v), [&](int w) {
        if (match_[idx(v)] == -1 && match_[idx(w)] == -1) {
          match_[idx(v)] = w;
          match_[idx(w)] = v;
        }
      });
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != -1) continue;
      const int end = find_path(v);
      int w = end;
      while (w != -1) {
        const int pv = parent_[idx(w)];
        const int next = match_[idx(pv)];
        match_[idx(w)] = pv;
        match_[idx(pv)] = w;
        w = next;
      }
    }
    return match_;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int lca(int a, int b) {
    std::vector<char> used(idx(n_), 0);
    for (;;) {
      a = base_[idx(a)];
      used[idx(a)] = 1;
      if (match_[idx(a)] == -1) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (used[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = 1;
      in_blossom_[idx(base_[idx(match_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  int find_path(int root) {
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[idx(i)] = i;
    in_queue_[idx(root)] = 1;
    int head = 0;
    int tail = 0;
    queue_[idx(tail++)] = root;
    while (head < tail) {
      const int v = queue_[idx(head++)];
      int found = -1;
      for_each_member(g_.neighbors(v), [&](int to) {
        if (found != -1) return;
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) return;
        if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!in_queue_[idx(i)]) {
                in_queue_[idx(i)] = 1;
                queue_[idx(tail++)] = i;
              }
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == -1) {
            found = to;
            return;
          }
          const int m = match_[idx(to)];
          in_queue_[idx(m)] = 1;
          queue_[idx(tail++)] = m;
        }
      });
      if (found != -1) return found;
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_queue_;
  std::vector<char> in_blossom_;
  std::vector<int> queue_;
};

// Enumerates matchings of size k by increasing edge index; stops when fn returns true.
template <typename Fn>
bool for_each_k_matching(const EdgeSet& edges, int k, std::size_t start, std::uint64_t covered, EdgeSet& current,
                         Fn&& fn) {
  if (static_cast<int>(current.size()) == k) return fn(current);
  for (std::size_t i = start; i < edges.size(); ++i) {
    const Edge e = edges[i];
    const std::uint64_t ends = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if (covered & ends) continue;
    current.push_back(e);
    if (for_each_k_matching(edges, k, i + 1, covered | ends, current, fn)) return true;
    current.pop_back();
  }
  return false;
}

inline void check_scan_cap(const Graph& g, const char* what) {
  if (g.order() > kSubsetScanCap)
    throw CapExceeded(std::string(what) + ": subset scan is capped at n <= " + std::to_string(kSubsetScanCap));
}

// Bridges of G[alive] whose removal leaves two odd-order pieces.
inline EdgeSet odd_bridges_within(const Graph& g, VertexSet alive) {
  EdgeSet out;
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> sub(static_cast<std::size_t>(n), 1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  int timer = 0;
  for (const VertexSet comp : components_within(g, alive)) {
    const int root = comp.front();
    const int comp_size = comp.size();
    // Iterative DFS; the stack holds (vertex, neighbours still to visit).
    std::vector<std::pair<int, std::uint64_t>> stack;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.emplace_back(root, (g.neighbors(root) & alive).bits());
    while (!stack.empty()) {
      auto& [v, pending] = stack.back();
      if (pending != 0) {
        const int w = std::countr_zero(pending);
        pending &= pending - 1;
        if (w == parent[static_cast<std::size_t>(v)]) continue;
        if (disc[static_cast<std::size_t>(w)] == -1) {
          parent[static_cast<std::size_t>(w)] = v;
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.emplace_back(w, (g.neighbors(w) & alive).bits());
        } else {
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const int child = v;
      stack.pop_back();
      if (stack.empty()) break;
      const int p = stack.back().first;
      low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(child)]);
      sub[static_cast<std::size_t>(p)] += sub[static_cast<std::size_t>(child)];
      if (low[static_cast<std::size_t>(child)] > disc[static_cast<std::size_t>(p)]) {
        const int below = sub[static_cast<std::size_t>(child)];
        if ((below & 1) && ((comp_size - below) & 1)) out.emplace_back(p, child);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Maximum matching by Edmonds' blossom algorithm.
inline MatchingResult max_matching(const Graph& g) {
  const auto mate = detail::Blossom(g).solve();
  MatchingResult r;
  for (int v = 0; v < g.order(); ++v) {
    const int w = mate[static_cast<std::size_t>(v)];
    if (w > v) r.edges.emplace_back(v, w);
  }
  r.size = static_cast<int>(r.edges.size());
  return r;
}

inline bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return max_matching(g).size * 2 == g.order();
}

/// True when `edges` is a matching of g (pairwise disjoint edges of g).
inline bool is_matching_of(const Graph& g, const EdgeSet& edges) {
  std::uint64_t covered = 0;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v)) return false;
    const std::uint64_t ends = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if (covered & ends) return false;
    covered |= ends;
  }
  return true;
}

inline VertexSet covered_vertices(const EdgeSet& edges) {
  VertexSet s;
  for (const auto& e : edges) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return s;
}

struct Deficiency {
  int deficiency = 0;
  VertexSet witness;
};

/// max over S of o(G−S) − |S| by exhaustive subset scan, with a maximising S
/// (the first in increasing mask order). ν(G) = (n − deficiency)/2.
inline Deficiency berge_tutte_deficiency(const Graph& g) {
  detail::check_scan_cap(g, "berge_tutte_deficiency");
  const int n = g.order();
  Deficiency best{-n - 1, VertexSet{}};
  const VertexSet all = g.vertices();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s(mask);
    const int value = odd_components_within(g, all - s) - s.size();
    if (value > best.deficiency) best = {value, s};
  }
  return best;
}

/// Direct k-extendability: n >= 2k+2, n even, a perfect matching exists and
/// every size-k matching M leaves G − V(M) with a perfect matching.
inline Verdict is_k_extendable(const Graph& g, int k) {
  if (k < 1) throw RangeError("k must be positive");
  Verdict v{false, std::monostate{}, Method::direct};
  const int n = g.order();
  if (n % 2 != 0 || n < 2 * k + 2 || !has_perfect_matching(g)) return v;
  const EdgeSet edges = g.edges();
  EdgeSet current;
  std::optional<EdgeSet> bad;
  detail::for_each_k_matching(edges, k, 0, 0, current, [&](const EdgeSet& m) {
    if (!has_perfect_matching(delete_vertices(g, covered_vertices(m)).graph)) {
      bad = m;
      return true;
    }
    return false;
  });
  if (bad) {
    v.witness = MatchingWitness{*bad};
    return v;
  }
  v.holds = true;
  return v;
}

/// Chen's criterion: for every S with ν(G[S]) >= k, o(G−S) <= |S| − 2k.
/// S is scanned in Gray-code order; the first violating S is the witness.
inline Verdict is_k_extendable_chen(const Graph& g, int k) {
  if (k < 1) throw RangeError("k must be positive");
  detail::check_scan_cap(g, "is_k_extendable_chen");
  Verdict v{false, std::monostate{}, Method::criterion};
  const int n = g.order();
  if (n % 2 != 0 || n < 2 * k + 2 || !has_perfect_matching(g)) return v;
  const VertexSet all = g.vertices();
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    const VertexSet s(i ^ (i >> 1));
    if (s.size() < 2 * k) continue;
    if (odd_components_within(g, all - s) <= s.size() - 2 * k) continue;
    if (max_matching(induced_subgraph(g, s)).size < k) continue;
    v.witness = SetWitness{s, std::nullopt};
    return v;
  }
  v.holds = true;
  return v;
}

/// Direct 1-excludability: n even and G − e has a perfect matching for every
/// edge e. Accepts disconnected graphs.
inline Verdict is_1_excludable(const Graph& g) {
  Verdict v{false, std::monostate{}, Method::direct};
  if (g.order() % 2 != 0) return v;
  for (const Edge& e : g.edges()) {
    const Edge one[] = {e};
    if (!has_perfect_matching(g.without_edges(one))) {
      v.witness = EdgeWitness{e};
      return v;
    }
  }
  v.holds = true;
  return v;
}

/// Odd-bridges of g, evaluated per component.
inline EdgeSet find_odd_bridges(const Graph& g) { return detail::odd_bridges_within(g, g.vertices()); }

/// The 1-excludability criterion for connected graphs: for every S,
/// o(G−S) <= |S| − 2 when some component of G−S contains an odd-bridge and
/// o(G−S) <= |S| otherwise.
inline Verdict is_1_excludable_criterion(const Graph& g) {
  detail::check_scan_cap(g, "is_1_excludable_criterion");
  if (g.order() == 0 || !is_connected(g)) throw RangeError("is_1_excludable_criterion requires a connected graph");
  Verdict v{false, std::monostate{}, Method::criterion};
  const int n = g.order();
  const VertexSet all = g.vertices();
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    const VertexSet s(i ^ (i >> 1));
    const VertexSet rest = all - s;
    const int odd = odd_components_within(g, rest);
    if (odd <= s.size() - 2) continue;
    const bool bridged = !detail::odd_bridges_within(g, rest).empty();
    if (bridged) {
      v.witness = SetWitness{s, ExclusionClause::odd_bridge};
      return v;
    }
    if (odd > s.size()) {
      v.witness = SetWitness{s, ExclusionClause::plain};
      return v;
    }
  }
  v.holds = true;
  return v;
}

/// Re-checks a negative verdict's witness from scratch. Returns true when the
/// witness genuinely certifies failure of the named property.
inline bool witness_certifies_k_extendable_failure(const Graph& g, int k, const Verdict& v) {
  if (v.holds) return false;
  const int n = g.order();
  const bool precondition_fails = n % 2 != 0 || n < 2 * k + 2 || !has_perfect_matching(g);
  if (std::holds_alternative<std::monostate>(v.witness)) return precondition_fails;
  if (const auto* m = std::get_if<MatchingWitness>(&v.witness)) {
    return static_cast<int>(m->matching.size()) == k && is_matching_of(g, m->matching) &&
           !has_perfect_matching(delete_vertices(g, covered_vertices(m->matching)).graph);
  }
  if (const auto* s = std::get_if<SetWitness>(&v.witness)) {
    return max_matching(induced_subgraph(g, s->set)).size >= k &&
           odd_components(g, s->set) > s->set.size() - 2 * k;
  }
  return false;
}

inline bool witness_certifies_1_excludable_failure(const Graph& g, const Verdict& v) {
  if (v.holds) return false;
  if (std::holds_alternative<std::monostate>(v.witness)) return g.order() % 2 != 0;
  if (const auto* e = std::get_if<EdgeWitness>(&v.witness)) {
    const Edge one[] = {e->edge};
    return g.has_edge(e->edge.u, e->edge.v) && !has_perfect_matching(g.without_edges(one));
  }
  if (const auto* s = std::get_if<SetWitness>(&v.witness)) {
    const VertexSet rest = g.vertices() - s->set;
    const int odd = odd_components_within(g, rest);
    const bool bridged = !detail::odd_bridges_within(g, rest).empty();
    return bridged ? odd > s->set.size() - 2 : odd > s->set.size();
  }
  return false;
}

}  // namespace matchspec
