#include "dlspec/spectra.hpp"

#include <cmath>
#include <numbers>
#include <queue>

namespace dlspec {

DistanceMatrix apsp(const Graph& g) {
  const int n = g.order();
  DistanceMatrix out;
  out.dist = Eigen::MatrixXi::Constant(n, n, -1);
  out.transmissions = Eigen::VectorXi::Zero(n);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    out.dist(s, s) = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (int w : g.neighbors(u)) {
        if (out.dist(s, w) < 0) {
          out.dist(s, w) = out.dist(s, u) + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) fail(ErrorKind::Disconnected, "graph is not connected");
    for (int v = 0; v < n; ++v) out.transmissions(s) += out.dist(s, v);
  }
  return out;
}

int max_transmission(const Graph& g) { return apsp(g).transmissions.maxCoeff(); }

Eigen::MatrixXd distance_laplacian(const Graph& g) {
  const DistanceMatrix dm = apsp(g);
  const int n = g.order();
  Eigen::MatrixXd l = -dm.dist.cast<double>();
  for (int v = 0; v < n; ++v) l(v, v) = static_cast<double>(dm.transmissions(v));
  return l;
}

Spectrum eigen_decompose(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "matrix is not square");
  if (m.rows() < 1) fail(ErrorKind::DimensionMismatch, "matrix is empty");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() != 0.0)
    fail(ErrorKind::DimensionMismatch, "matrix is not symmetric");
  auto dec = jacobi_eigen<double>(m);
  Spectrum out;
  out.eigenvalues = std::move(dec.eigenvalues);
  out.eigenvectors = std::move(dec.eigenvectors);
  out.sweeps = dec.sweeps;
  out.residual = 0.0;
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    const double r = (m * out.eigenvectors.col(k) - out.eigenvalues(k) * out.eigenvectors.col(k))
                         .cwiseAbs()
                         .maxCoeff();
    out.residual = std::max(out.residual, r);
  }
  return out;
}

Spectrum graph_spectrum(const Graph& g) { return eigen_decompose(distance_laplacian(g)); }

double spectral_radius(const Graph& g) { return graph_spectrum(g).eigenvalues(0); }

double quadratic_form(const Graph& g, const Eigen::VectorXd& x) {
  if (x.size() != g.order()) fail(ErrorKind::DimensionMismatch, "vector length does not match order");
  const DistanceMatrix dm = apsp(g);
  double sum = 0.0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      const double d = x(u) - x(v);
      sum += dm.dist(u, v) * d * d;
    }
  return sum;
}

double eigen_residual(const Graph& g, double lambda, const Eigen::VectorXd& x) {
  if (x.size() != g.order()) fail(ErrorKind::DimensionMismatch, "vector length does not match order");
  if (x.isZero(0.0)) fail(ErrorKind::ZeroVector, "candidate eigenvector is zero");
  const DistanceMatrix dm = apsp(g);
  double worst = 0.0;
  for (int u = 0; u < g.order(); ++u) {
    double lhs = 0.0;
    for (int v = 0; v < g.order(); ++v) lhs += dm.dist(u, v) * (x(u) - x(v));
    worst = std::max(worst, std::abs(lambda * x(u) - lhs));
  }
  return worst;
}

double cycle_radius_closed_form(int n) {
  if (n < 3) fail(ErrorKind::BadOrder, "cycles need at least 3 vertices");
  const double pi = std::numbers::pi;
  if (n % 2 == 0) {
    const double s = std::sin(pi / n);
    return n * n / 4.0 + 1.0 / (s * s);
  }
  const double s = std::sin(pi / (2.0 * n));
  return (n * n - 1) / 4.0 + 0.25 / (s * s);
}

double kite_submatrix_bound(int n) {
  if (n < 4) fail(ErrorKind::BadOrder, "bound defined for kites on at least 4 vertices");
  const double a = n - 3.0, b = n - 2.0;
  return (n * n - 2.0 * n + 1.0 + std::sqrt(a * a + 4.0 * b * b)) / 2.0;
}

}  // namespace dlspec
