#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "isomorphism.hpp"
#include "matching.hpp"
#include "reports.hpp"
#include "spectral.hpp"
#include "theorems.hpp"

namespace matchspec {

inline constexpr int kMaxBuiltInOrder = 7;

/// One representative per isomorphism class of connected graphs on n <= 7
/// vertices, sorted by graph6 text. Only labelings with non-increasing
/// degrees are examined; every class has one, and canonical_code is
/// invariant under relabeling, so the hash set sees each class once.
inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxBuiltInOrder)
    throw RangeError("enumerate_connected supports 1 <= n <= 7; use a graph6 file for larger n");
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << slots.size();

  std::unordered_set<std::uint64_t> seen;
  std::vector<Graph> out;
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    if (std::popcount(code) < n - 1) continue;
    std::fill(masks.begin(), masks.end(), 0);
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if ((code >> b) & 1U) {
        const auto [i, j] = slots[b];
        masks[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        masks[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
    bool sorted = true;
    for (int v = 1; v < n && sorted; ++v)
      sorted = std::popcount(masks[static_cast<std::size_t>(v - 1)]) >= std::popcount(masks[static_cast<std::size_t>(v)]);
    if (!sorted) continue;
    Graph g = Graph::from_masks(masks);
    if (!is_connected(g)) continue;
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
  return out;
}

/// Where a sweep's graphs come from.
struct GraphSource {
  struct BuiltIn {
    int n = 0;
  };
  struct File {
    std::filesystem::path path;
  };
  std::variant<BuiltIn, File> where;

  static GraphSource built_in(int n) { return {BuiltIn{n}}; }
  static GraphSource file(std::filesystem::path p) { return {File{std::move(p)}}; }

  std::string describe() const {
    if (const auto* b = std::get_if<BuiltIn>(&where)) return "builtin:n=" + std::to_string(b->n);
    return "file:" + std::get<File>(where).path.filename().string();
  }
};

/// A graph with its graph6 line as read (or as emitted for built-in sources).
struct SourcedGraph {
  std::string graph6;
  Graph graph;
};

/// Streams a source in batches. Blank lines and lines starting with '#' are
/// skipped; a graph of a different order than the first is an error.
inline void for_each_batch(const GraphSource& src, std::size_t batch_size,
                           const std::function<void(std::vector<SourcedGraph>&)>& fn) {
  std::vector<SourcedGraph> batch;
  batch.reserve(batch_size);
  if (const auto* b = std::get_if<GraphSource::BuiltIn>(&src.where)) {
    for (auto& g : enumerate_connected(b->n)) {
      batch.push_back({to_graph6(g), std::move(g)});
      if (batch.size() == batch_size) {
        fn(batch);
        batch.clear();
      }
    }
    if (!batch.empty()) fn(batch);
    return;
  }
  const auto& path = std::get<GraphSource::File>(src.where).path;
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph source " + path.string());
  std::string line;
  int order = -1;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Graph g(0);
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (order < 0) order = g.order();
    if (g.order() != order)
      throw RangeError(path.string() + ":" + std::to_string(lineno) + ": mixed orders in source (" +
                       std::to_string(order) + " and " + std::to_string(g.order()) + ")");
    batch.push_back({line, std::move(g)});
    if (batch.size() == batch_size) {
      fn(batch);
      batch.clear();
    }
  }
  if (!batch.empty()) fn(batch);
}

/// Reads a whole source into memory.
inline std::vector<SourcedGraph> load_source(const GraphSource& src) {
  std::vector<SourcedGraph> all;
  for_each_batch(src, 4096, [&](std::vector<SourcedGraph>& batch) {
    for (auto& g : batch) all.push_back(std::move(g));
  });
  return all;
}

/// Built-in enumeration for n <= 7, else `<dir>/connected<n>.g6`.
inline GraphSource default_source(int n, const std::filesystem::path& fixtures_dir) {
  if (n <= kMaxBuiltInOrder) return GraphSource::built_in(n);
  const auto path = fixtures_dir / ("connected" + std::to_string(n) + ".g6");
  if (!std::filesystem::exists(path))
    throw Error("no graph source for n=" + std::to_string(n) + ": expected " + path.string());
  return GraphSource::file(path);
}

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads with contiguous slices.
template <typename Fn>
void parallel_slices(std::size_t count, int jobs, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) fn(i, w);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

struct SweepFilters {
  std::optional<int> min_degree;
};

struct SweepOptions {
  SweepFilters filters;
  int jobs = 1;
  double tolerance = kSpectralTolerance;
  std::size_t batch_size = 1 << 16;
};

/// Exhaustive check of one statement over a source. Per graph, cheapest test
/// first: δ filter, connectivity and δ >= 2, edge or ρ threshold (ρ behind a
/// sqrt(2m−n+1) prefilter), then the matching check. Graphs meeting the
/// hypothesis but not the conclusion are exceptions; those not listed by the
/// statement are counterexamples. Output is sorted by graph6.
inline SweepReport sweep_theorem(const GraphSource& src, const TheoremId& t, const SweepOptions& opt = {}) {
  if (opt.jobs < 1) throw RangeError("jobs must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.theorem = theorem_token(t);
  report.k = t.about_extension() ? t.k : 0;
  report.source = src.describe();
  report.min_degree_filter = opt.filters.min_degree;
  report.tolerance = opt.tolerance;

  std::optional<TheoremContext> ctx;
  struct Local {
    long long filtered = 0;
    long long hypothesis = 0;
    std::vector<ExceptionEntry> exceptions;
    std::vector<std::string> counterexamples;
  };
  std::vector<Local> locals(static_cast<std::size_t>(opt.jobs));

  for_each_batch(src, opt.batch_size, [&](std::vector<SourcedGraph>& batch) {
    if (!ctx) {
      const int n = batch.front().graph.order();
      if (n % 2 != 0) throw RangeError("sweeps need even n (source has n=" + std::to_string(n) + ")");
      ctx.emplace(t, n, opt.tolerance);
      report.n = n;
      report.threshold = ctx->threshold();
    }
    report.graphs_scanned += static_cast<long long>(batch.size());
    detail::parallel_slices(batch.size(), opt.jobs, [&](std::size_t i, std::size_t w) {
      auto& local = locals[w];
      const auto& [text, g] = batch[i];
      if (opt.filters.min_degree && min_degree(g) < *opt.filters.min_degree) {
        ++local.filtered;
        return;
      }
      if (!ctx->hypothesis(g)) return;
      ++local.hypothesis;
      if (ctx->conclusion(g)) return;
      ExceptionEntry e;
      e.graph6 = text;
      e.edges = g.size();
      e.rho = spectral_radius(g).rho;
      e.gap = (t.spectral() ? e.rho : static_cast<double>(e.edges)) - ctx->threshold();
      auto listed = ctx->matching_exception(g);
      e.listed = listed.has_value();
      if (!listed) listed = recognize(g, registry_instances(g.order()));
      if (listed) e.family = to_string(*listed);
      if (!e.listed) local.counterexamples.push_back(text);
      local.exceptions.push_back(std::move(e));
    });
  });
  if (!ctx) throw Error("graph source " + report.source + " is empty");

  for (auto& local : locals) {
    report.graphs_filtered += local.filtered;
    report.hypothesis_count += local.hypothesis;
    for (auto& e : local.exceptions) report.exceptions.push_back(std::move(e));
    for (auto& c : local.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  std::sort(report.exceptions.begin(), report.exceptions.end(),
            [](const ExceptionEntry& a, const ExceptionEntry& b) { return a.graph6 < b.graph6; });
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Lemma checks

enum class LemmaId {
  subgraph_monotone,   // ρ(H) < ρ(G) for a proper subgraph H of connected G
  perron_symmetry,     // twins (N(i)−j = N(j)−i) get equal Perron entries
  quotient_root,       // equitable quotient shares the spectral radius
  interlacing,         // Cauchy interlacing for principal submatrices
  packing,             // merging complete parts raises |E| and ρ
  size_bound,          // o(G−S) >= |S|+2 caps |E|
  spectral_bound,      // o(G−S) >= |S|+2 caps ρ
  bridged_completes,   // K_p + K_q extremes over odd splits
};

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::subgraph_monotone, LemmaId::perron_symmetry, LemmaId::quotient_root, LemmaId::interlacing,
    LemmaId::packing,           LemmaId::size_bound,      LemmaId::spectral_bound, LemmaId::bridged_completes,
};

inline std::string_view lemma_token(LemmaId id) {
  switch (id) {
    case LemmaId::subgraph_monotone: return "l2.1";
    case LemmaId::perron_symmetry: return "l2.2";
    case LemmaId::quotient_root: return "l2.4";
    case LemmaId::interlacing: return "l2.5";
    case LemmaId::packing: return "l2.8";
    case LemmaId::size_bound: return "l2.9";
    case LemmaId::spectral_bound: return "l2.10";
    case LemmaId::bridged_completes: return "l2.11";
  }
  return "?";
}

inline LemmaId parse_lemma_id(std::string_view token) {
  for (LemmaId id : kAllLemmas)
    if (lemma_token(id) == token) return id;
  throw ParseError("unknown lemma '" + std::string(token) + "'");
}

struct LemmaGrid {
  int n_min = 0;
  int n_max = 0;
  int samples = 100;
  std::uint64_t seed = 20240601;
  /// Directory holding connected<n>.g6 for exhaustive checks above n = 7.
  std::filesystem::path fixtures_dir;
  int jobs = 1;
  double tolerance = kSpectralTolerance;
};

/// Default n range for each lemma.
inline LemmaGrid default_grid(LemmaId id) {
  LemmaGrid g;
  switch (id) {
    case LemmaId::subgraph_monotone: g.n_min = 3; g.n_max = 10; break;
    case LemmaId::perron_symmetry: g.n_min = 4; g.n_max = 14; break;
    case LemmaId::quotient_root: g.n_min = 4; g.n_max = 14; break;
    case LemmaId::interlacing: g.n_min = 2; g.n_max = 10; break;
    case LemmaId::packing: g.n_min = 4; g.n_max = 14; break;
    case LemmaId::size_bound:
    case LemmaId::spectral_bound: g.n_min = 4; g.n_max = 8; break;
    case LemmaId::bridged_completes: g.n_min = 4; g.n_max = 16; break;
  }
  return g;
}

/// Random graph with edge probability p.
template <typename Rng>
Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return from_edge_list(n, edges);
}

/// Random connected graph: a random recursive tree plus edges with probability p.
template <typename Rng>
Graph random_connected_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return from_edge_list(n, edges);
}

/// Size bound on graphs with some S having o(G−S) >= |S|+2.
inline long long deficient_size_bound(int n) {
  if (n == 6) return 9;
  if (n == 8) return 18;
  return binomial2(n - 2) + 2;
}

/// Spectral bound on the same graphs: (1+√33)/2 at n = 6, else θ(n).
inline double deficient_spectral_bound(int n) {
  if (n == 6) return (1.0 + std::sqrt(33.0)) / 2.0;
  return theta(n);
}

namespace detail {

inline std::string grid_text(const LemmaGrid& g) {
  return "n=" + std::to_string(g.n_min) + ".." + std::to_string(g.n_max) + ",samples=" + std::to_string(g.samples) +
         ",seed=" + std::to_string(g.seed);
}

inline void check_subgraph_monotone(const LemmaGrid& grid, LemmaReport& r) {
  std::mt19937_64 rng(grid.seed);
  const int lo = std::max(grid.n_min, 2);
  const int hi = std::min(grid.n_max, 10);
  if (lo > hi) throw RangeError("l2.1 needs a grid inside n=2..10");
  for (int i = 0; i < grid.samples; ++i) {
    const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
    const Graph g = random_connected_graph(n, 0.4, rng);
    // Proper connected subgraph: drop 1..3 non-bridge edges, or a leaf of a tree.
    Graph h = g;
    const int drops = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int d = 0; d < drops; ++d) {
      auto edges = h.edges();
      std::shuffle(edges.begin(), edges.end(), rng);
      bool dropped = false;
      for (const auto& e : edges) {
        const Edge one[] = {e};
        Graph candidate = h.without_edges(one);
        if (is_connected(candidate)) {
          h = std::move(candidate);
          dropped = true;
          break;
        }
      }
      if (!dropped) break;
    }
    if (h.size() == g.size()) {
      int leaf = 0;
      while (g.degree(leaf) != 1) ++leaf;
      h = delete_vertices(g, VertexSet{leaf}).graph;
    }
    const double margin = spectral_radius(g).rho - spectral_radius(h).rho;
    ++r.instances;
    r.strict(margin);
    if (!(margin > 1e-12))
      r.violations.push_back(to_graph6(g) + " vs subgraph " + to_graph6(h) + ": rho drop " + std::to_string(margin));
  }
}

inline void check_perron_symmetry(const LemmaGrid& grid, LemmaReport& r) {
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    for (const auto& ref : registry_instances(n)) {
      const Graph g = build(ref);
      if (!is_connected(g)) continue;
      const auto sr = spectral_radius(g);
      ++r.instances;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          VertexSet ni = g.neighbors(i);
          VertexSet nj = g.neighbors(j);
          ni.erase(j);
          nj.erase(i);
          if (ni != nj) continue;
          const double gap = std::fabs(sr.perron[static_cast<std::size_t>(i)] - sr.perron[static_cast<std::size_t>(j)]);
          r.equality(gap);
          if (gap > grid.tolerance)
            r.violations.push_back(to_string(ref) + ": x" + std::to_string(i) + " vs x" + std::to_string(j) +
                                   " differ by " + std::to_string(gap));
        }
    }
  }
}

inline void check_quotient_root(const LemmaGrid& grid, LemmaReport& r) {
  std::vector<std::pair<std::string, FamilySpec>> specs;
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    for (const auto& ref : registry_instances(n)) specs.emplace_back(to_string(ref), FamilySpec::named(ref));
    for (int p = 1; 2 * p <= n; ++p) specs.emplace_back("K" + std::to_string(p) + "+K" + std::to_string(n - p),
                                                        FamilySpec::bridged(p, n - p));
    if (n >= 3) specs.emplace_back("K" + std::to_string(n - 1) + "^+", FamilySpec::pendant_complete(n));
  }
  for (const auto& [name, spec] : specs) {
    const Graph g = build(spec);
    const auto part = canonical_partition(spec);
    const auto q = quotient_matrix(g, part);
    const auto qpoly = quotient_polynomial(q);
    const double root = largest_real_root(qpoly, 0.0, g.order());
    const double rho = spectral_radius(g).rho;
    const double gap = std::fabs(root - rho);
    ++r.instances;
    r.equality(gap);
    if (!q.equitable) r.violations.push_back(name + ": canonical partition not equitable");
    if (gap > grid.tolerance) r.violations.push_back(name + ": quotient root differs from rho by " + std::to_string(gap));
    // Every quotient eigenvalue is a graph eigenvalue: exact divisibility.
    const auto full = characteristic_polynomial(adjacency_matrix(g));
    const auto rem = divide(to_rational(full), to_rational(qpoly)).second;
    if (!rem.is_zero()) r.violations.push_back(name + ": quotient polynomial does not divide the characteristic polynomial");
  }
}

inline void check_interlacing(const LemmaGrid& grid, LemmaReport& r) {
  std::mt19937_64 rng(grid.seed);
  const int lo = std::max(grid.n_min, 2);
  if (lo > grid.n_max) throw RangeError("l2.5 needs n_max >= 2");
  for (int i = 0; i < grid.samples; ++i) {
    const int n = std::uniform_int_distribution<int>(lo, grid.n_max)(rng);
    const Graph g = random_graph(n, 0.5, rng);
    const int t = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexSet kept;
    for (int j = 0; j < t; ++j) kept.insert(perm[static_cast<std::size_t>(j)]);
    const auto lambda = eigenvalues(g);
    const auto mu = eigenvalues(induced_subgraph(g, kept));
    ++r.instances;
    for (int j = 0; j < t; ++j) {
      const double upper = lambda[static_cast<std::size_t>(j)];
      const double lower = lambda[static_cast<std::size_t>(n - t + j)];
      const double m = mu[static_cast<std::size_t>(j)];
      const double excess = std::max(m - upper, lower - m);
      r.equality(std::max(0.0, excess));
      if (excess > grid.tolerance)
        r.violations.push_back(to_graph6(g) + " on " + std::to_string(kept.bits()) + ": mu_" + std::to_string(j + 1) +
                               " outside [lambda_" + std::to_string(n - t + j + 1) + ", lambda_" + std::to_string(j + 1) + "]");
    }
  }
}

inline Graph join_of_parts(int s, const Graph& h, const std::vector<int>& cliques) {
  Graph rest = h;
  for (int c : cliques) rest = disjoint_union(rest, complete_graph(c));
  return join(complete_graph(s), rest);
}

inline void packing_instance(int s, int k, const Graph& h, std::vector<int> sizes, LemmaReport& r, double tol) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  const int t = static_cast<int>(sizes.size());
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int n = total + s + h.order();
  std::vector<int> packed{n - h.order() - s - k * (t - 1)};
  for (int i = 1; i < t; ++i) packed.push_back(k);
  const Graph lhs = join_of_parts(s, h, sizes);
  const Graph rhs = join_of_parts(s, h, packed);
  const bool equal_case = std::all_of(sizes.begin() + 1, sizes.end(), [&](int x) { return x == k; });
  const double drho = spectral_radius(rhs).rho - spectral_radius(lhs).rho;
  const long long dm = rhs.size() - lhs.size();
  std::string label = "s=" + std::to_string(s) + ",k=" + std::to_string(k) + ",H=" + to_graph6(h) + ",n_i=";
  for (int x : sizes) label += std::to_string(x) + ";";
  ++r.instances;
  if (equal_case) {
    r.equality(std::fabs(drho));
    if (dm != 0 || std::fabs(drho) > tol || !are_isomorphic(lhs, rhs))
      r.violations.push_back(label + ": equality case not equal");
  } else {
    r.strict(std::min<double>(drho, static_cast<double>(dm)));
    if (dm <= 0 || !(drho > 1e-12)) r.violations.push_back(label + ": expected strict increase, got dm=" +
                                                            std::to_string(dm) + " drho=" + std::to_string(drho));
  }
}

inline void check_packing(const LemmaGrid& grid, LemmaReport& r) {
  std::mt19937_64 rng(grid.seed);
  const int n_max = std::min(grid.n_max, 14);
  if (n_max < 4) throw RangeError("l2.8 needs n_max >= 4");
  packing_instance(2, 1, Graph(0), {3, 3}, r, grid.tolerance);
  for (int i = 0; i < grid.samples; ++i) {
    const int s = std::uniform_int_distribution<int>(1, 3)(rng);
    const int k = std::uniform_int_distribution<int>(1, 2)(rng);
    const int t = std::uniform_int_distribution<int>(2, 3)(rng);
    const int m = std::uniform_int_distribution<int>(0, 3)(rng);
    const int budget = n_max - s - m - k * t;
    if (budget < 0) {
      --i;
      continue;
    }
    std::vector<int> sizes(static_cast<std::size_t>(t), k);
    // Spread extra vertices; a coin decides whether only n_1 gets them (equality case).
    int extra = std::uniform_int_distribution<int>(0, budget)(rng);
    const bool concentrate = std::bernoulli_distribution(0.3)(rng);
    while (extra-- > 0) {
      const auto idx = concentrate ? 0 : std::uniform_int_distribution<int>(0, t - 1)(rng);
      ++sizes[static_cast<std::size_t>(idx)];
    }
    packing_instance(s, k, random_graph(m, 0.5, rng), sizes, r, grid.tolerance);
  }
}

inline void check_deficient_bounds(const LemmaGrid& grid, bool spectral, LemmaReport& r) {
  for (int n = std::max(grid.n_min, 4); n <= grid.n_max; ++n) {
    if (n % 2 != 0) continue;
    const auto src = default_source(n, grid.fixtures_dir);
    const double bound = spectral ? deficient_spectral_bound(n) : static_cast<double>(deficient_size_bound(n));
    double best = -1.0;
    std::string best_graph;
    for_each_batch(src, 1 << 14, [&](std::vector<SourcedGraph>& batch) {
      for (const auto& [text, g] : batch) {
        if (!is_connected(g)) continue;
        // For even n, some S has o(G−S) >= |S|+2 exactly when G has no perfect matching.
        if (has_perfect_matching(g)) continue;
        ++r.instances;
        const double value = spectral ? spectral_radius(g).rho : static_cast<double>(g.size());
        if (value > best) {
          best = value;
          best_graph = text;
        }
        if (value > bound + (spectral ? grid.tolerance : 0.0))
          r.violations.push_back("n=" + std::to_string(n) + " " + text + ": " + std::to_string(value) + " > bound " +
                                 std::to_string(bound));
      }
    });
    if (best >= 0) {
      r.equality(std::fabs(bound - best));
      r.notes.push_back("n=" + std::to_string(n) + ": bound " + std::to_string(bound) + ", maximum " +
                        std::to_string(best) + " at " + best_graph);
    }
  }
}

inline void check_bridged_completes(const LemmaGrid& grid, LemmaReport& r) {
  for (int l = std::max(grid.n_min, 4); l <= grid.n_max; ++l) {
    if (l % 2 != 0) continue;
    struct Split {
      int p;
      long long m;
      double rho;
    };
    std::vector<Split> splits;
    for (int p = 1; 2 * p <= l; p += 2) {
      const Graph g = build(FamilySpec::bridged(p, l - p));
      splits.push_back({p, g.size(), spectral_radius(g).rho});
      ++r.instances;
    }
    auto check_unique_max = [&](std::size_t from, int expect_p, const char* what) {
      for (std::size_t i = from; i < splits.size(); ++i) {
        if (splits[i].p == expect_p) continue;
        const auto& best = *std::find_if(splits.begin(), splits.end(), [&](const Split& s) { return s.p == expect_p; });
        const double margin = std::min(static_cast<double>(best.m - splits[i].m), best.rho - splits[i].rho);
        r.strict(margin);
        if (!(margin > 1e-12))
          r.violations.push_back("l=" + std::to_string(l) + ": " + what + " K" + std::to_string(expect_p) + "+K" +
                                 std::to_string(l - expect_p) + " not strictly above K" + std::to_string(splits[i].p) +
                                 "+K" + std::to_string(l - splits[i].p));
      }
    };
    check_unique_max(0, 1, "maximum");
    if (splits.size() >= 2) check_unique_max(1, 3, "runner-up");
    std::string line = "l=" + std::to_string(l) + ":";
    for (const auto& s : splits)
      line += " K" + std::to_string(s.p) + "+K" + std::to_string(l - s.p) + "(m=" + std::to_string(s.m) +
              ",rho=" + std::to_string(s.rho) + ")";
    r.notes.push_back(line);
  }
}

}  // namespace detail

/// Evaluates one lemma over its grid. Violations are listed verbatim.
inline LemmaReport verify_lemma(LemmaId id, const LemmaGrid& grid) {
  if (grid.n_min > grid.n_max) throw RangeError("empty grid");
  if (grid.n_max > 20) throw CapExceeded("lemma grids are capped at n <= 20");
  LemmaReport r;
  r.lemma = std::string(lemma_token(id));
  r.grid = detail::grid_text(grid);
  switch (id) {
    case LemmaId::subgraph_monotone: detail::check_subgraph_monotone(grid, r); break;
    case LemmaId::perron_symmetry: detail::check_perron_symmetry(grid, r); break;
    case LemmaId::quotient_root: detail::check_quotient_root(grid, r); break;
    case LemmaId::interlacing: detail::check_interlacing(grid, r); break;
    case LemmaId::packing: detail::check_packing(grid, r); break;
    case LemmaId::size_bound: detail::check_deficient_bounds(grid, false, r); break;
    case LemmaId::spectral_bound: detail::check_deficient_bounds(grid, true, r); break;
    case LemmaId::bridged_completes: detail::check_bridged_completes(grid, r); break;
  }
  return r;
}

inline LemmaReport verify_lemma(LemmaId id) { return verify_lemma(id, default_grid(id)); }

}  // namespace matchspec
