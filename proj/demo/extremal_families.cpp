// Prints every registered extremal family of a given even order with its
// size, spectral radius and the largest root of its quotient polynomial.
//
//   demo_extremal_families 10

#include <cstdio>
#include <cstdlib>

#include "matchspec/matchspec.hpp"

int main(int argc, char** argv) {
  namespace ms = matchspec;
  const int n = argc > 1 ? std::atoi(argv[1]) : 8;
  std::printf("%-34s %-12s %4s %12s %12s\n", "family", "graph6", "m", "rho", "quotient");
  for (const auto& ref : ms::registry_instances(n)) {
    const auto g = ms::build(ref);
    const auto rho = ms::spectral_radius(g).rho;
    const auto q = ms::quotient_polynomial(ms::quotient_matrix(g, ms::canonical_partition(ref)));
    const double root = ms::largest_real_root(q, 0.0, static_cast<double>(n));
    std::printf("%-34s %-12s %4d %12.6f %12.6f\n", ms::to_string(ref).c_str(), ms::to_graph6(g).c_str(), g.size(), rho,
                root);
  }
}
