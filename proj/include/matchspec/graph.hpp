#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace matchspec {

/// Largest order representable by the bit-mask adjacency.
inline constexpr int kMaxOrder = 64;

/// A subset of vertex ids 0..63, stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Iterates the members of `set` in increasing order.
template <typename Fn>
constexpr void for_each_member(VertexSet set, Fn&& fn) {
  for (std::uint64_t b = set.bits(); b != 0; b &= b - 1) fn(std::countr_zero(b));
}

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;

inline std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << '(' << e.u << ',' << e.v << ')'; }

/// Simple undirected graph on vertices 0..n-1 with bit-mask neighbourhoods.
/// Immutable once built; the only ways in are the validating factories.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : adj_(checked_order(n), 0) {}

  /// Builds from neighbourhood masks; rejects loops, asymmetry and stray bits.
  static Graph from_masks(std::vector<std::uint64_t> masks) {
    const int n = checked_order(static_cast<int>(masks.size()));
    const std::uint64_t all = VertexSet::first(n).bits();
    for (int v = 0; v < n; ++v) {
      const std::uint64_t m = masks[static_cast<std::size_t>(v)];
      if ((m >> v) & 1U) throw RangeError("self-loop at vertex " + std::to_string(v));
      if (m & ~all) throw RangeError("neighbour out of range at vertex " + std::to_string(v));
      for (std::uint64_t b = m; b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        if (!((masks[static_cast<std::size_t>(w)] >> v) & 1U)) throw RangeError("asymmetric adjacency");
      }
    }
    Graph g;
    g.adj_ = std::move(masks);
    return g;
  }

  int order() const { return static_cast<int>(adj_.size()); }

  int size() const {
    int twice = 0;
    for (auto m : adj_) twice += std::popcount(m);
    return twice / 2;
  }

  VertexSet vertices() const { return VertexSet::first(order()); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  std::span<const std::uint64_t> masks() const { return adj_; }

  /// Edges sorted lexicographically by (u, v) with u < v.
  EdgeSet edges() const {
    EdgeSet out;
    for (int u = 0; u < order(); ++u)
      for (std::uint64_t b = adj_[static_cast<std::size_t>(u)] >> (u + 1); b != 0; b &= b - 1)
        out.emplace_back(u, u + 1 + std::countr_zero(b));
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) d[v] = std::popcount(adj_[v]);
    return d;
  }

  /// The graph with the given edges removed (missing edges are ignored).
  Graph without_edges(std::span<const Edge> removed) const {
    Graph g = *this;
    for (const auto& e : removed) {
      g.adj_[static_cast<std::size_t>(e.u)] &= ~(std::uint64_t{1} << e.v);
      g.adj_[static_cast<std::size_t>(e.v)] &= ~(std::uint64_t{1} << e.u);
    }
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int checked_order(int n) {
    if (n < 0 || n > kMaxOrder) throw RangeError("graph order must be in 0.." + std::to_string(kMaxOrder));
    return n;
  }

  std::vector<std::uint64_t> adj_;
};

/// Graph with exactly the listed edges; duplicates collapse.
inline Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0 || n > kMaxOrder) throw RangeError("graph order must be in 0.." + std::to_string(kMaxOrder));
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw RangeError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    if (u == v) throw RangeError("self-loop at vertex " + std::to_string(u));
    masks[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    masks[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  return Graph::from_masks(std::move(masks));
}

inline Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

inline Graph complete_graph(int n) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n));
  const auto all = VertexSet::first(n).bits();
  for (int v = 0; v < n; ++v) masks[static_cast<std::size_t>(v)] = all & ~(std::uint64_t{1} << v);
  return Graph::from_masks(std::move(masks));
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return from_edge_list(n, e);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return from_edge_list(n, e);
}

/// a ∪ b with b's vertices shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  if (na + b.order() > kMaxOrder) throw RangeError("union exceeds maximum order");
  std::vector<std::uint64_t> masks(a.masks().begin(), a.masks().end());
  for (auto m : b.masks()) masks.push_back(m << na);
  return Graph::from_masks(std::move(masks));
}

/// a ∨ b: the disjoint union plus every a-b cross edge.
inline Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int nb = b.order();
  if (na + nb > kMaxOrder) throw RangeError("join exceeds maximum order");
  const std::uint64_t a_side = VertexSet::first(na).bits();
  const std::uint64_t b_side = nb == 0 ? 0 : VertexSet::first(nb).bits() << na;
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<std::size_t>(na + nb));
  for (auto m : a.masks()) masks.push_back(m | b_side);
  for (auto m : b.masks()) masks.push_back((m << na) | a_side);
  return Graph::from_masks(std::move(masks));
}

/// Induced subgraph on V∖removed, relabelled order-preservingly.
struct VertexDeletion {
  Graph graph;
  /// original[i] is the label in the source graph of new vertex i.
  std::vector<int> original;
};

inline VertexDeletion delete_vertices(const Graph& g, VertexSet removed) {
  if (!removed.subset_of(g.vertices())) throw RangeError("deleted vertex out of range");
  VertexDeletion out;
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<std::uint64_t> masks(out.original.size(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for_each_member(g.neighbors(out.original[i]) - removed, [&](int w) {
      masks[i] |= std::uint64_t{1} << relabel[static_cast<std::size_t>(w)];
    });
  }
  out.graph = Graph::from_masks(std::move(masks));
  return out;
}

/// Induced subgraph on `kept`, relabelled order-preservingly.
inline Graph induced_subgraph(const Graph& g, VertexSet kept) {
  return delete_vertices(g, g.vertices() - kept).graph;
}

/// Vertices reachable from `start` inside `alive`.
inline VertexSet reach_within(const Graph& g, int start, VertexSet alive) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  const auto masks = g.masks();
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= masks[static_cast<std::size_t>(std::countr_zero(b))];
    next &= alive.bits() & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

/// Components of G[alive] in order of their smallest vertex.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet alive) {
  std::vector<VertexSet> out;
  while (!alive.empty()) {
    const VertexSet c = reach_within(g, alive.front(), alive);
    out.push_back(c);
    alive = alive - c;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

inline bool is_connected(const Graph& g) {
  if (g.order() < 1) throw RangeError("connectivity is undefined for the null graph");
  return reach_within(g, 0, g.vertices()) == g.vertices();
}

inline int min_degree(const Graph& g) {
  if (g.order() < 1) throw RangeError("minimum degree is undefined for the null graph");
  int best = g.order();
  for (auto m : g.masks()) best = std::min(best, std::popcount(m));
  return best;
}

/// Number of odd-order components of G[alive].
inline int odd_components_within(const Graph& g, VertexSet alive) {
  int odd = 0;
  while (!alive.empty()) {
    const VertexSet c = reach_within(g, alive.front(), alive);
    odd += c.size() & 1;
    alive = alive - c;
  }
  return odd;
}

/// o(G − S).
inline int odd_components(const Graph& g, VertexSet removed) {
  if (!removed.subset_of(g.vertices())) throw RangeError("deleted vertex out of range");
  return odd_components_within(g, g.vertices() - removed);
}

// Edge-list text: first token n, then whitespace-separated pairs "u v".
inline Graph parse_edge_list(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw ParseError("edge list: missing vertex count");
  std::vector<std::pair<int, int>> edges;
  int u = 0;
  int v = 0;
  while (in >> u) {
    if (!(in >> v)) throw ParseError("edge list: dangling endpoint");
    edges.emplace_back(u, v);
  }
  if (!in.eof()) throw ParseError("edge list: unexpected token");
  return from_edge_list(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace matchspec
