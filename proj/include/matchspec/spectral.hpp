#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "polynomial.hpp"

namespace matchspec {

/// Eigen-decomposition of a dense symmetric matrix; vectors[i] belongs to values[i].
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  int sweeps = 0;
};

using DenseMatrix = std::vector<std::vector<double>>;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below `tolerance` (relative to the matrix norm when that exceeds 1).
inline SymmetricEigen jacobi_eigen(DenseMatrix a, double tolerance = 1e-12, int max_sweeps = 100) {
  const std::size_t n = a.size();
  DenseMatrix v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  double scale = 0.0;
  for (const auto& row : a)
    for (double x : row) scale += x * x;
  scale = std::max(1.0, std::sqrt(scale));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < max_sweeps && off_norm() > tolerance * scale; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  SymmetricEigen out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a[i][i];
    for (std::size_t k = 0; k < n; ++k) out.vectors[i][k] = v[k][i];
  }
  return out;
}

inline DenseMatrix adjacency_dense(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  DenseMatrix a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1.0;
    a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1.0;
  }
  return a;
}

inline SquareMatrix<Integer> adjacency_matrix(const Graph& g) {
  SquareMatrix<Integer> a(static_cast<std::size_t>(g.order()));
  for (const auto& e : g.edges()) {
    a(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = 1;
    a(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = 1;
  }
  return a;
}

/// Eigenvalues of the adjacency matrix, non-increasing.
inline std::vector<double> eigenvalues(const DenseMatrix& symmetric) {
  auto vals = jacobi_eigen(symmetric).values;
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

inline std::vector<double> eigenvalues(const Graph& g) {
  if (g.order() < 1) throw RangeError("eigenvalues: empty graph");
  return eigenvalues(adjacency_dense(g));
}

struct SpectralResult {
  double rho = 0.0;
  /// ℓ2-unit eigenvector for rho with nonnegative entries (sign fixed).
  std::vector<double> perron;
  int sweeps = 0;
  /// ‖A·perron − rho·perron‖∞
  double residual = 0.0;
};

inline double eigen_residual(const Graph& g, double rho, const std::vector<double>& x) {
  double worst = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    double ax = 0.0;
    for_each_member(g.neighbors(v), [&](int w) { ax += x[static_cast<std::size_t>(w)]; });
    worst = std::max(worst, std::fabs(ax - rho * x[static_cast<std::size_t>(v)]));
  }
  return worst;
}

inline SpectralResult spectral_radius(const Graph& g) {
  if (g.order() < 1) throw RangeError("spectral_radius: empty graph");
  const auto eig = jacobi_eigen(adjacency_dense(g));
  const auto top = static_cast<std::size_t>(
      std::max_element(eig.values.begin(), eig.values.end()) - eig.values.begin());
  SpectralResult r;
  r.rho = eig.values[top];
  r.perron = eig.vectors[top];
  r.sweeps = eig.sweeps;
  const double sum = std::accumulate(r.perron.begin(), r.perron.end(), 0.0);
  if (sum < 0)
    for (double& x : r.perron) x = -x;
  double norm = 0.0;
  for (double x : r.perron) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : r.perron) x /= norm;
  r.residual = eigen_residual(g, r.rho, r.perron);
  return r;
}

/// Power iteration on A + I (the shift avoids oscillation on bipartite
/// graphs). Kept as an independent cross-check of the Jacobi path.
inline double power_iteration_radius(const Graph& g, double tolerance = 1e-13, int max_iterations = 200000) {
  const auto n = static_cast<std::size_t>(g.order());
  if (n == 0) throw RangeError("power_iteration_radius: empty graph");
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lambda = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    std::vector<double> y(x);
    for (int v = 0; v < g.order(); ++v)
      for_each_member(g.neighbors(v), [&](int w) { y[static_cast<std::size_t>(v)] += x[static_cast<std::size_t>(w)]; });
    double norm = 0.0;
    for (double t : y) norm += t * t;
    norm = std::sqrt(norm);
    for (double& t : y) t /= norm;
    const double next = norm - 1.0;
    x = std::move(y);
    if (std::fabs(next - lambda) < tolerance) return next;
    lambda = next;
  }
  return lambda;
}

/// Ordered vertex partition π : V = V_1 ∪ ... ∪ V_s.
struct Partition {
  std::vector<VertexSet> blocks;

  /// Throws unless blocks are nonempty, pairwise disjoint and cover 0..n-1.
  void validate(int n) const {
    VertexSet seen;
    for (const auto& b : blocks) {
      if (b.empty()) throw RangeError("partition has an empty block");
      if (!(b & seen).empty()) throw RangeError("partition blocks overlap");
      seen = seen | b;
    }
    if (seen != VertexSet::first(n)) throw RangeError("partition does not cover the vertex set");
  }

  std::vector<int> block_sizes() const {
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(b.size());
    return s;
  }
};

struct QuotientMatrix {
  /// entries(i, j): average number of block-j neighbours of a block-i vertex.
  SquareMatrix<Rational> entries;
  /// Every vertex of block i has exactly entries(i, j) neighbours in block j.
  bool equitable = false;

  bool integral() const {
    for (std::size_t i = 0; i < entries.dim(); ++i)
      for (std::size_t j = 0; j < entries.dim(); ++j)
        if (denominator(entries(i, j)) != 1) return false;
    return true;
  }

  SquareMatrix<Integer> integer_entries() const {
    if (!integral()) throw RangeError("quotient matrix has non-integral entries");
    SquareMatrix<Integer> m(entries.dim());
    for (std::size_t i = 0; i < entries.dim(); ++i)
      for (std::size_t j = 0; j < entries.dim(); ++j) m(i, j) = numerator(entries(i, j));
    return m;
  }
};

inline QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
  p.validate(g.order());
  const std::size_t s = p.blocks.size();
  QuotientMatrix q{SquareMatrix<Rational>(s), true};
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      long long total = 0;
      int first = -1;
      bool constant = true;
      for_each_member(p.blocks[i], [&](int v) {
        const int c = (g.neighbors(v) & p.blocks[j]).size();
        total += c;
        if (first < 0) first = c;
        constant = constant && c == first;
      });
      q.entries(i, j) = Rational(total, p.blocks[i].size());
      q.equitable = q.equitable && constant;
    }
  }
  return q;
}

/// Characteristic polynomial of an integral quotient matrix.
inline Polynomial quotient_polynomial(const QuotientMatrix& q) {
  return characteristic_polynomial(q.integer_entries());
}

/// The cubic x³ − (n−4)x² − (n−1)x + 2(n−4) whose largest root is θ(n).
inline Polynomial theta_cubic(int n) {
  return Polynomial::descending({1, -(n - 4), -(n - 1), 2 * (n - 4)});
}

/// θ(n): largest root of theta_cubic(n), for even n >= 4.
inline double theta(int n) {
  if (n < 4 || n % 2 != 0) throw RangeError("theta(n) needs even n >= 4");
  return largest_real_root(theta_cubic(n), 0.0, static_cast<double>(n));
}

}  // namespace matchspec
