// matchspec: analyze graphs, build named families, run exhaustive sweeps.
//
// Exit codes: 0 success / verified, 1 counterexample or violation, 2 usage
// or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchspec/matchspec.hpp"
#include "matchspec/report_io.hpp"

namespace ms = matchspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string input;
  std::string format = "auto";
  std::string family;
  std::string theorem;
  std::string lemma;
  std::string grid;
  std::string n;
  int k = 1;
  int jobs = 1;
  std::optional<int> min_degree;
  std::string out = "text";
  double tolerance = ms::kSpectralTolerance;
  bool charpolys = false;
  std::string fixtures;
};

std::string fixtures_dir(const Config& cfg) {
  if (!cfg.fixtures.empty()) return cfg.fixtures;
  if (const char* env = std::getenv("MATCHSPEC_FIXTURES")) return env;
  return "tests/fixtures";
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ms::Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

ms::Graph read_graph(const Config& cfg) {
  if (!cfg.family.empty()) return ms::build(ms::parse_family_spec(cfg.family));
  if (cfg.input.empty()) throw ms::ParseError("analyze needs --input or --family");
  const std::string text = read_all(cfg.input);
  std::string format = cfg.format;
  if (format == "auto") {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first])) ? "edgelist" : "g6";
  }
  if (format == "edgelist") return ms::parse_edge_list(text);
  std::istringstream lines(text);
  std::string line;
  std::optional<ms::Graph> g;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (g) throw ms::ParseError("analyze expects a single graph; input has more than one graph6 line");
    g = ms::parse_graph6(line);
  }
  if (!g) throw ms::ParseError("no graph in input");
  return *g;
}

/// "6..12" or "8".
std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex re(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ms::ParseError("expected a number or a range lo..hi, got '" + text + "'");
  const int lo = std::stoi(m[1]);
  const int hi = m[2].matched ? std::stoi(m[2]) : lo;
  if (lo > hi) throw ms::RangeError("empty range " + text);
  return {lo, hi};
}

/// "n=6..14,samples=200,seed=3"; l is accepted as an alias of n.
ms::LemmaGrid parse_grid(const std::string& text, ms::LemmaGrid grid) {
  if (text.empty()) return grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ms::ParseError("grid entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n" || key == "l") {
      std::tie(grid.n_min, grid.n_max) = parse_range(value);
    } else if (key == "samples") {
      grid.samples = std::stoi(value);
      if (grid.samples < 1) throw ms::RangeError("samples must be >= 1");
    } else if (key == "seed") {
      grid.seed = std::stoull(value);
    } else {
      throw ms::ParseError("unknown grid key '" + key + "'");
    }
  }
  return grid;
}

std::optional<bool> optional_verdict(auto&& fn) {
  try {
    return fn();
  } catch (const ms::CapExceeded&) {
    return std::nullopt;
  } catch (const ms::RangeError&) {
    return std::nullopt;
  }
}

ms::Json nullable(const std::optional<bool>& b) { return b ? ms::Json(*b) : ms::Json(nullptr); }

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

std::vector<ms::TheoremId> applicable_theorems(int n, int max_k) {
  std::vector<ms::TheoremId> out;
  if (n % 2 != 0) return out;
  for (int k = 1; k <= max_k; ++k)
    if (n >= 2 * k + 2) out.push_back({ms::Statement::size_extendable, k});
  if (n >= 6) out.push_back({ms::Statement::size_excludable, 1});
  for (int k = 1; k <= max_k; ++k)
    if (n >= 2 * k + 2) out.push_back({ms::Statement::spectral_extendable, k});
  if (n >= 6) out.push_back({ms::Statement::spectral_excludable, 1});
  return out;
}

int cmd_analyze(const Config& cfg) {
  const ms::Graph g = read_graph(cfg);
  if (g.order() < 1) throw ms::RangeError("graph has no vertices");
  const int n = g.order();
  const bool connected = ms::is_connected(g);
  const auto sr = ms::spectral_radius(g);
  const auto matching = ms::max_matching(g);
  const bool perfect = ms::has_perfect_matching(g);

  ms::Json j;
  j["schema_version"] = ms::kReportSchemaVersion;
  j["kind"] = "analysis";
  j["graph6"] = ms::to_graph6(g);
  j["n"] = n;
  j["m"] = g.size();
  j["min_degree"] = ms::min_degree(g);
  j["connected"] = connected;
  j["rho"] = sr.rho;
  j["residual"] = sr.residual;
  j["matching_number"] = matching.size;
  j["perfect_matching"] = perfect;
  j["tolerance"] = cfg.tolerance;

  j["extendability"] = ms::Json::array();
  for (int k = 1; k <= cfg.k; ++k) {
    std::optional<bool> direct;
    std::optional<bool> criterion;
    if (n % 2 == 0) {
      direct = ms::is_k_extendable(g, k).holds;
      criterion = optional_verdict([&] { return ms::is_k_extendable_chen(g, k).holds; });
    }
    std::optional<bool> agree;
    if (direct && criterion) agree = *direct == *criterion;
    j["extendability"].push_back({{"k", k}, {"direct", nullable(direct)}, {"criterion", nullable(criterion)},
                                  {"agree", nullable(agree)}});
  }
  {
    std::optional<bool> direct;
    std::optional<bool> criterion;
    if (n % 2 == 0) {
      direct = ms::is_1_excludable(g).holds;
      if (connected) criterion = optional_verdict([&] { return ms::is_1_excludable_criterion(g).holds; });
    }
    std::optional<bool> agree;
    if (direct && criterion) agree = *direct == *criterion;
    j["excludability"] = {{"direct", nullable(direct)}, {"criterion", nullable(criterion)}, {"agree", nullable(agree)}};
  }
  const auto family = ms::recognize(g, ms::registry_instances(n));
  j["family"] = family ? ms::Json(ms::to_string(*family)) : ms::Json(nullptr);

  j["theorems"] = ms::Json::array();
  for (const auto& t : applicable_theorems(n, cfg.k)) {
    const auto v = ms::theorem_verdict(g, t, cfg.tolerance);
    j["theorems"].push_back({{"theorem", ms::theorem_token(t)},
                             {"k", t.about_extension() ? t.k : 0},
                             {"hypothesis_met", v.hypothesis_met},
                             {"conclusion_met", v.conclusion_met},
                             {"listed_exception", v.is_listed_exception},
                             {"exception_family", v.exception ? ms::Json(ms::to_string(*v.exception)) : ms::Json(nullptr)},
                             {"consistent", v.consistent},
                             {"measure", v.measure},
                             {"threshold", v.threshold}});
  }

  if (cfg.out == "json") {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.out == "csv") throw ms::ParseError("analyze supports --out text or json");
  std::cout << "graph6            " << j["graph6"].get<std::string>() << "\n"
            << "n                 " << n << "\n"
            << "m                 " << g.size() << "\n"
            << "min degree        " << ms::min_degree(g) << "\n"
            << "connected         " << (connected ? "yes" : "no") << "\n"
            << "rho               " << ms::fixed6(sr.rho) << "  (residual " << sr.residual << ")\n"
            << "matching number   " << matching.size << "\n"
            << "perfect matching  " << (perfect ? "yes" : "no") << "\n";
  for (const auto& e : j["extendability"]) {
    auto get = [&](const char* key) {
      return e[key].is_null() ? std::optional<bool>{} : std::optional<bool>{e[key].get<bool>()};
    };
    std::cout << e["k"].get<int>() << "-extendable      " << yes_no(get("direct")) << "  (criterion "
              << yes_no(get("criterion")) << ", agree " << yes_no(get("agree")) << ")\n";
  }
  {
    const auto& e = j["excludability"];
    auto get = [&](const char* key) {
      return e[key].is_null() ? std::optional<bool>{} : std::optional<bool>{e[key].get<bool>()};
    };
    std::cout << "1-excludable      " << yes_no(get("direct")) << "  (criterion " << yes_no(get("criterion"))
              << ", agree " << yes_no(get("agree")) << ")\n";
  }
  std::cout << "family            " << (family ? ms::to_string(*family) + "  = " + ms::describe(*family) : "-") << "\n";
  for (const auto& t : j["theorems"]) {
    std::string name = t["theorem"].get<std::string>();
    if (t["k"].get<int>() > 0) name += "(k=" + std::to_string(t["k"].get<int>()) + ")";
    std::string status;
    if (!t["hypothesis_met"].get<bool>()) status = "hypothesis not met";
    else if (t["conclusion_met"].get<bool>()) status = "holds";
    else if (t["listed_exception"].get<bool>()) status = "listed exception (" + t["exception_family"].get<std::string>() + ")";
    else status = "COUNTEREXAMPLE";
    std::cout << std::left << std::setw(18) << name << status << "  [" << ms::fixed6(t["measure"].get<double>())
              << " vs " << ms::fixed6(t["threshold"].get<double>()) << "]\n";
  }
  return kExitOk;
}

int cmd_construct(const Config& cfg) {
  if (cfg.family.empty()) throw ms::ParseError("construct needs --family");
  const auto spec = ms::parse_family_spec(cfg.family);
  const auto g = ms::build(spec);
  if (cfg.out == "json") {
    ms::Json j;
    j["schema_version"] = ms::kReportSchemaVersion;
    j["kind"] = "construct";
    j["spec"] = ms::to_string(spec);
    j["n"] = g.order();
    j["m"] = g.size();
    j["graph6"] = ms::to_graph6(g);
    j["edges"] = ms::Json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v});
    j["blocks"] = ms::Json::array();
    for (const auto& b : ms::canonical_partition(spec).blocks) j["blocks"].push_back(b.members());
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.format == "edgelist") std::cout << ms::to_edge_list(g);
  else std::cout << ms::to_graph6(g) << "\n";
  return kExitOk;
}

template <typename Report>
int emit(const Config& cfg, const Report& r) {
  if (cfg.out == "json") std::cout << ms::to_json(r).dump(2) << "\n";
  else if (cfg.out == "csv") ms::write_csv(std::cout, r);
  else ms::write_text(std::cout, r);
  return r.verified() ? kExitOk : kExitViolation;
}

int cmd_verify(const Config& cfg) {
  const int modes = (!cfg.theorem.empty()) + (!cfg.lemma.empty()) + (cfg.charpolys ? 1 : 0);
  if (modes != 1) throw ms::ParseError("verify needs exactly one of --theorem, --lemma, --charpolys");

  if (cfg.charpolys) {
    int max_n = 14;
    if (!cfg.grid.empty()) {
      ms::LemmaGrid defaults;
      defaults.n_max = max_n;
      max_n = parse_grid(cfg.grid, defaults).n_max;
    }
    if (max_n < 6 || max_n > 20) throw ms::RangeError("charpoly grid needs 6 <= n <= 20");
    return emit(cfg, ms::verify_charpoly_identities(max_n));
  }
  if (!cfg.lemma.empty()) {
    const auto id = ms::parse_lemma_id(cfg.lemma);
    auto grid = parse_grid(cfg.grid, ms::default_grid(id));
    grid.fixtures_dir = fixtures_dir(cfg);
    grid.tolerance = cfg.tolerance;
    grid.jobs = cfg.jobs;
    return emit(cfg, ms::verify_lemma(id, grid));
  }

  const auto t = ms::parse_theorem_id(cfg.theorem, cfg.k);
  std::optional<ms::GraphSource> src;
  if (!cfg.input.empty()) {
    src = ms::GraphSource::file(cfg.input);
  } else {
    if (cfg.n.empty()) throw ms::ParseError("verify --theorem needs --n or --input");
    const auto [lo, hi] = parse_range(cfg.n);
    if (lo != hi) throw ms::ParseError("verify --theorem takes a single --n");
    src = ms::default_source(lo, fixtures_dir(cfg));
  }
  ms::SweepOptions opt;
  opt.jobs = cfg.jobs;
  opt.tolerance = cfg.tolerance;
  opt.filters.min_degree = cfg.min_degree;
  if (!opt.filters.min_degree && !t.about_extension()) opt.filters.min_degree = 2;
  return emit(cfg, ms::sweep_theorem(*src, t, opt));
}

int cmd_thresholds(const Config& cfg) {
  const auto [lo, hi] = parse_range(cfg.n.empty() ? "6..12" : cfg.n);
  if (lo % 2 != 0 || hi % 2 != 0) throw ms::RangeError("threshold range must have even endpoints");
  struct Row {
    int n;
    std::optional<long long> size_ext;
    std::optional<double> spec_ext;
    std::optional<long long> size_excl;
    std::optional<double> spec_excl;
  };
  std::vector<Row> rows;
  for (int n = lo; n <= hi; n += 2) {
    if (n < 2 * cfg.k + 4) continue;
    Row r{n, {}, {}, {}, {}};
    r.size_ext = ms::size_threshold_extendable(n, cfg.k);
    r.spec_ext = ms::spectral_threshold_extendable(n, cfg.k);
    if (n >= 6) {
      r.size_excl = ms::size_threshold_excludable(n);
      r.spec_excl = ms::spectral_threshold_excludable(n);
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw ms::RangeError("no even n in range with n >= 2k+2");

  if (cfg.out == "json") {
    ms::Json j;
    j["schema_version"] = ms::kReportSchemaVersion;
    j["kind"] = "thresholds";
    j["k"] = cfg.k;
    j["rows"] = ms::Json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"n", r.n},
                           {"size_extendable", *r.size_ext},
                           {"spectral_extendable", *r.spec_ext},
                           {"size_excludable", r.size_excl ? ms::Json(*r.size_excl) : ms::Json(nullptr)},
                           {"spectral_excludable", r.spec_excl ? ms::Json(*r.spec_excl) : ms::Json(nullptr)}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  const bool csv = cfg.out == "csv";
  auto num = [&](const auto& v) -> std::string {
    if (!v) return csv ? "" : "-";
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, double>) return ms::fixed6(*v);
    else return std::to_string(*v);
  };
  if (csv) std::cout << "n,k,size_extendable,spectral_extendable,size_excludable,spectral_excludable\n";
  else
    std::cout << std::left << std::setw(5) << "n" << std::setw(4) << "k" << std::setw(18) << "size_extendable"
              << std::setw(22) << "spectral_extendable" << std::setw(18) << "size_excludable"
              << "spectral_excludable\n";
  for (const auto& r : rows) {
    if (csv)
      std::cout << r.n << ',' << cfg.k << ',' << num(r.size_ext) << ',' << num(r.spec_ext) << ',' << num(r.size_excl)
                << ',' << num(r.spec_excl) << "\n";
    else
      std::cout << std::left << std::setw(5) << r.n << std::setw(4) << cfg.k << std::setw(18) << num(r.size_ext)
                << std::setw(22) << num(r.spec_ext) << std::setw(18) << num(r.size_excl) << num(r.spec_excl) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching extension and exclusion: analysis, constructions and exhaustive verification"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--tolerance", cfg.tolerance, "Absolute tolerance for spectral comparisons")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Report matching and spectral properties of one graph");
  analyze->add_option("--input", cfg.input, "graph6 or edge-list file ('-' for stdin)");
  analyze->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"auto", "g6", "edgelist"}));
  analyze->add_option("--family", cfg.family, "Analyze a constructed family instead of an input file");
  analyze->add_option("--k", cfg.k, "Check k-extendability for 1..k")->check(CLI::Range(1, 10));
  add_common(analyze);

  auto* construct = app.add_subcommand("construct", "Build a family and print it");
  construct->add_option("--family", cfg.family, "Family expression, e.g. \"K(3) v (K(2) u 3K1)\" or w2:n=10")
      ->required();
  construct->add_option("--format", cfg.format, "Output format for the graph")
      ->check(CLI::IsMember({"auto", "g6", "edgelist"}));
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "Exhaustive sweeps and lemma/identity checks");
  verify->add_option("--theorem", cfg.theorem, "t11, t13, t14, t16 (aliases c12, c15)");
  verify->add_option("--k", cfg.k, "k for t11/t14")->check(CLI::Range(1, 10));
  verify->add_option("--n", cfg.n, "Order of the graphs to sweep");
  verify->add_option("--input", cfg.input, "graph6 file to sweep instead of the default source");
  verify->add_option("--lemma", cfg.lemma, "l2.1 l2.2 l2.4 l2.5 l2.8 l2.9 l2.10 l2.11");
  verify->add_option("--grid", cfg.grid, "Parameter grid, e.g. n=6..14,samples=100,seed=1");
  verify->add_flag("--charpolys", cfg.charpolys, "Check the closed-form quotient polynomials");
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--min-degree", cfg.min_degree, "Skip graphs with smaller minimum degree (default 2 for t13/t16)");
  verify->add_option("--fixtures", cfg.fixtures, "Directory with connected<n>.g6 (default $MATCHSPEC_FIXTURES)");
  add_common(verify);

  auto* thresholds = app.add_subcommand("thresholds", "Table of size and spectral thresholds");
  thresholds->add_option("--n", cfg.n, "Even range lo..hi (default 6..12)");
  thresholds->add_option("--k", cfg.k, "k for the extension columns")->check(CLI::Range(1, 10));
  add_common(thresholds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg);
    if (*construct) return cmd_construct(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*thresholds) return cmd_thresholds(cfg);
  } catch (const ms::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
