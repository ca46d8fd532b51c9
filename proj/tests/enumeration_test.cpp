#include <filesystem>
#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "matchspec/enumeration.hpp"
#include "matchspec/report_io.hpp"
#include "oracles.hpp"

namespace ms = matchspec;
using ms::Statement;

namespace {

const std::filesystem::path kFixtures = MATCHSPEC_FIXTURES_DIR;

ms::Graph empty_graph(int n) { return ms::Graph(n); }
ms::Graph K(int n) { return ms::complete_graph(n); }
ms::Graph U(const ms::Graph& a, const ms::Graph& b) { return ms::disjoint_union(a, b); }
ms::Graph V(const ms::Graph& a, const ms::Graph& b) { return ms::join(a, b); }

std::vector<ms::Graph> exception_graphs(const ms::SweepReport& r) {
  std::vector<ms::Graph> out;
  for (const auto& e : r.exceptions) out.push_back(ms::parse_graph6(e.graph6));
  return out;
}

bool same_classes(const std::vector<ms::Graph>& found, const std::vector<ms::Graph>& expected) {
  if (found.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& g : found) {
    bool hit = false;
    for (std::size_t i = 0; i < expected.size() && !hit; ++i)
      if (!used[i] && ms::are_isomorphic(g, expected[i])) used[i] = hit = true;
    if (!hit) return false;
  }
  return true;
}

std::string without_wall_time(ms::Json j) {
  j.erase("wall_time_seconds");
  return j.dump();
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    path = std::filesystem::temp_directory_path() /
           ("matchspec_test_" + std::to_string(std::hash<std::string>{}(contents)) + ".g6");
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST(Enumerate, CountsMatchPublishedSequence) {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(ms::enumerate_connected(n).size(), expected[n]) << n;
  EXPECT_THROW(ms::enumerate_connected(8), ms::RangeError);
  EXPECT_THROW(ms::enumerate_connected(0), ms::RangeError);
}

TEST(Enumerate, ConnectedSortedAndPairwiseDistinct) {
  const auto graphs = ms::enumerate_connected(5);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_TRUE(ms::is_connected(graphs[i]));
    if (i > 0) {
      EXPECT_LT(ms::to_graph6(graphs[i - 1]), ms::to_graph6(graphs[i]));
    }
    for (std::size_t j = i + 1; j < graphs.size(); ++j) EXPECT_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
  }
}

TEST(Enumerate, FixtureHasDistinctConnectedClasses) {
  const auto all = ms::load_source(ms::default_source(8, kFixtures));
  EXPECT_EQ(all.size(), 11117U);
  std::set<std::uint64_t> codes;
  for (const auto& g : all) {
    EXPECT_TRUE(ms::is_connected(g.graph));
    codes.insert(ms::canonical_code(g.graph));
  }
  EXPECT_EQ(codes.size(), all.size());
}

TEST(Source, FileHandlingAndErrors) {
  TempFile ok("# comment\nC~\n\nCr\n");
  const auto loaded = ms::load_source(ms::GraphSource::file(ok.path));
  ASSERT_EQ(loaded.size(), 2U);
  EXPECT_EQ(loaded[0].graph6, "C~");

  TempFile mixed("C~\nD??\n");
  EXPECT_THROW(ms::load_source(ms::GraphSource::file(mixed.path)), ms::RangeError);
  TempFile bad("C~\nB\n");
  EXPECT_THROW(ms::load_source(ms::GraphSource::file(bad.path)), ms::ParseError);
  EXPECT_THROW(ms::load_source(ms::GraphSource::file("/nonexistent/connected8.g6")), ms::Error);
  EXPECT_THROW(ms::default_source(12, kFixtures), ms::Error);
  EXPECT_EQ(ms::default_source(6, kFixtures).describe(), "builtin:n=6");
}

TEST(Sweep, ExtensionAtSix) {
  const auto r = ms::sweep_theorem(ms::GraphSource::built_in(6), {Statement::size_extendable, 1});
  EXPECT_EQ(r.graphs_scanned, 112);
  EXPECT_TRUE(r.verified());
  EXPECT_TRUE(same_classes(exception_graphs(r), {V(K(2), U(K(3), empty_graph(1))), V(K(3), empty_graph(3))}));
  for (const auto& e : r.exceptions) {
    EXPECT_EQ(e.edges, 12);
    EXPECT_TRUE(e.listed);
    EXPECT_TRUE(e.family.has_value());
  }
}

TEST(Sweep, ExclusionAtSix) {
  ms::SweepOptions opt;
  opt.filters.min_degree = 2;
  const auto f1 = V(K(2), U(K(2), empty_graph(2)));
  const auto size = ms::sweep_theorem(ms::GraphSource::built_in(6), {Statement::size_excludable, 1}, opt);
  EXPECT_TRUE(size.verified());
  EXPECT_TRUE(same_classes(exception_graphs(size), {f1}));
  const auto spec = ms::sweep_theorem(ms::GraphSource::built_in(6), {Statement::spectral_excludable, 1}, opt);
  EXPECT_TRUE(spec.verified());
  ASSERT_TRUE(same_classes(exception_graphs(spec), {f1}));
  EXPECT_LE(std::fabs(spec.exceptions[0].gap), 1e-9);
}

TEST(Sweep, SpectralExtensionHasOneExceptionAtEightForTwoEdges) {
  const auto src = ms::default_source(8, kFixtures);
  const auto r = ms::sweep_theorem(src, {Statement::spectral_extendable, 2});
  EXPECT_TRUE(r.verified());
  ASSERT_TRUE(same_classes(exception_graphs(r), {V(K(4), U(K(3), empty_graph(1)))}));
  EXPECT_LE(std::fabs(r.exceptions[0].gap), 1e-9);
  EXPECT_LT(ms::spectral_radius(V(K(5), empty_graph(3))).rho, r.threshold);
}

TEST(Sweep, DegreeConditionAppliesWithoutFilter) {
  const auto r = ms::sweep_theorem(ms::GraphSource::built_in(6), {Statement::size_excludable, 1});
  EXPECT_EQ(r.graphs_filtered, 0);
  EXPECT_EQ(r.exceptions.size(), 1U);
  EXPECT_TRUE(r.verified());
}

TEST(Sweep, UnlistedExceptionBecomesCounterexample) {
  // A loose tolerance admits graphs below the spectral threshold; the ones
  // that are not 1-excludable are not listed and must be reported.
  ms::SweepOptions opt;
  opt.tolerance = 0.5;
  const auto r = ms::sweep_theorem(ms::GraphSource::built_in(6), {Statement::spectral_excludable, 1}, opt);
  EXPECT_FALSE(r.verified());
  EXPECT_FALSE(r.counterexamples.empty());
  for (const auto& c : r.counterexamples) {
    const auto g = ms::parse_graph6(c);
    EXPECT_FALSE(oracle::one_excludable(g)) << c;
    EXPECT_LT(ms::spectral_radius(g).rho, r.threshold) << c;
  }
}

TEST(Sweep, DeterministicAcrossJobCounts) {
  const auto src = ms::default_source(8, kFixtures);
  for (const auto& t : {ms::TheoremId{Statement::size_extendable, 2}, ms::TheoremId{Statement::spectral_excludable, 1}}) {
    ms::SweepOptions one;
    one.filters.min_degree = t.about_extension() ? std::nullopt : std::optional<int>(2);
    auto four = one;
    four.jobs = 4;
    four.batch_size = 1000;
    EXPECT_EQ(without_wall_time(ms::to_json(ms::sweep_theorem(src, t, one))),
              without_wall_time(ms::to_json(ms::sweep_theorem(src, t, four))));
  }
}

TEST(Sweep, RejectsOddOrderAndBadJobs) {
  EXPECT_THROW(ms::sweep_theorem(ms::GraphSource::built_in(5), {Statement::size_extendable, 1}), ms::RangeError);
  ms::SweepOptions opt;
  opt.jobs = 0;
  EXPECT_THROW(ms::sweep_theorem(ms::GraphSource::built_in(6), {Statement::size_extendable, 1}, opt), ms::RangeError);
}

TEST(Lemmas, TokensRoundTrip) {
  for (auto id : ms::kAllLemmas) EXPECT_EQ(ms::parse_lemma_id(ms::lemma_token(id)), id);
  EXPECT_THROW(ms::parse_lemma_id("l2.3"), ms::ParseError);
}

TEST(Lemmas, AllDefaultGridsVerify) {
  for (auto id : ms::kAllLemmas) {
    auto grid = ms::default_grid(id);
    grid.fixtures_dir = kFixtures;
    const auto r = ms::verify_lemma(id, grid);
    EXPECT_TRUE(r.verified()) << ms::lemma_token(id) << ": " << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_GT(r.instances, 0) << ms::lemma_token(id);
  }
}

TEST(Lemmas, DeficientBoundsAreAttained) {
  EXPECT_EQ(ms::deficient_size_bound(6), 9);
  EXPECT_EQ(ms::deficient_size_bound(8), 18);
  EXPECT_EQ(ms::deficient_size_bound(10), 30);
  EXPECT_NEAR(ms::deficient_spectral_bound(6), (1 + std::sqrt(33.0)) / 2, 1e-12);
  EXPECT_NEAR(ms::deficient_spectral_bound(8), ms::theta(8), 1e-12);
}

TEST(Lemmas, RandomGraphsAreReproducible) {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  EXPECT_EQ(ms::random_connected_graph(9, 0.4, a), ms::random_connected_graph(9, 0.4, b));
}
