// Size and spectral thresholds for k-extendability and 1-excludability,
// with the deficient bounds that drive the exclusion argument.
//
//   demo_threshold_table [max_n]

#include <cstdio>
#include <cstdlib>

#include "matchspec/matchspec.hpp"

int main(int argc, char** argv) {
  namespace ms = matchspec;
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 16;
  std::printf("%3s %10s %10s %10s %10s %10s %10s\n", "n", "m(k=1)", "rho(k=1)", "m(k=2)", "rho(k=2)", "m(excl)",
              "rho(excl)");
  for (int n = 6; n <= max_n; n += 2) {
    std::printf("%3d %10lld %10.6f", n, ms::size_threshold_extendable(n, 1), ms::spectral_threshold_extendable(n, 1));
    if (n >= 6 + 2)
      std::printf(" %10lld %10.6f", ms::size_threshold_extendable(n, 2), ms::spectral_threshold_extendable(n, 2));
    else
      std::printf(" %10s %10s", "-", "-");
    std::printf(" %10lld %10.6f\n", ms::size_threshold_excludable(n), ms::spectral_threshold_excludable(n));
  }
  std::printf("\ntheta(n), the largest root of x^3-(n-4)x^2-(n-1)x+2(n-4):\n");
  for (int n = 4; n <= max_n; n += 2) std::printf("  theta(%d) = %.9f\n", n, ms::theta(n));
}
