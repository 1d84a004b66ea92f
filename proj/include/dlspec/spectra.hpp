#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dlspec/error.hpp"
#include "dlspec/graph.hpp"

namespace dlspec {

template <typename Scalar>
struct EigenDecomposition {
  Eigen::Vector<Scalar, Eigen::Dynamic> eigenvalues;  // non-increasing
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> eigenvectors;  // columns
  int sweeps = 0;
};

// Cyclic Jacobi for symmetric matrices. Deterministic: fixed sweep order
// (p < q row-major), convergence when the off-diagonal Frobenius mass drops
// to rel_threshold relative to max(1, |A|_F), hard sweep cap. Eigenvalues
// sorted non-increasing with index order breaking ties; each eigenvector is
// scaled so its first entry of maximal magnitude is positive.
template <typename Scalar>
EigenDecomposition<Scalar> jacobi_eigen(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
    Scalar rel_threshold = Scalar(1e-13), int max_sweeps = 100) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) fail(ErrorKind::DimensionMismatch, "matrix is not square");

  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix v = Matrix::Identity(n, n);

  const Scalar target = rel_threshold * std::max(Scalar(1), Scalar(a.norm()));
  const auto off_norm = [&]() {
    Scalar sum = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) sum += a(p, q) * a(p, q);
    return std::sqrt(Scalar(2) * sum);
  };

  int sweeps = 0;
  while (off_norm() > target) {
    if (sweeps == max_sweeps)
      fail(ErrorKind::NoConvergence,
           "Jacobi iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
    ++sweeps;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                         (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        const Scalar tau = s / (Scalar(1) + c);

        const Scalar app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Scalar arp = a(r, p), arq = a(r, q);
          a(r, p) = arp - s * (arq + tau * arp);
          a(p, r) = a(r, p);
          a(r, q) = arq + s * (arp - tau * arq);
          a(q, r) = a(r, q);
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const Scalar vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<Eigen::Index> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  EigenDecomposition<Scalar> out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(idx[k], idx[k]);
    out.eigenvectors.col(k) = v.col(idx[k]);
    Eigen::Index top = 0;
    for (Eigen::Index r = 1; r < n; ++r)
      if (std::abs(out.eigenvectors(r, k)) > std::abs(out.eigenvectors(top, k))) top = r;
    if (out.eigenvectors(top, k) < Scalar(0)) out.eigenvectors.col(k) = -out.eigenvectors.col(k);
  }
  return out;
}

// Pairwise BFS distances of a connected graph.
struct DistanceMatrix {
  Eigen::MatrixXi dist;
  Eigen::VectorXi transmissions;  // row sums of dist

  int order() const { return static_cast<int>(dist.rows()); }
};

DistanceMatrix apsp(const Graph& g);

int max_transmission(const Graph& g);

// Tr - D: diagonal of transmissions minus the distance matrix.
Eigen::MatrixXd distance_laplacian(const Graph& g);

struct Spectrum {
  Eigen::VectorXd eigenvalues;   // non-increasing
  Eigen::MatrixXd eigenvectors;  // columns, matching order
  double residual = 0.0;         // max over pairs of |L x - lambda x|_inf
  int sweeps = 0;
};

Spectrum eigen_decompose(const Eigen::MatrixXd& m);
Spectrum graph_spectrum(const Graph& g);
double spectral_radius(const Graph& g);

// sum over vertex pairs of d(u,v) * (x_u - x_v)^2, equal to x^T L x.
double quadratic_form(const Graph& g, const Eigen::VectorXd& x);

// |L x - lambda x|_inf for a candidate eigenpair.
double eigen_residual(const Graph& g, double lambda, const Eigen::VectorXd& x);

// Largest distance Laplacian eigenvalue of the cycle C_n:
// n^2/4 + csc^2(pi/n) for even n, (n^2-1)/4 + csc^2(pi/(2n))/4 for odd n.
double cycle_radius_closed_form(int n);

// Lower bound for the kite Ki_{n,3}: largest eigenvalue of the 2x2
// principal submatrix on the two far ends of the pendant path, shifted by
// the interlacing argument: (n^2 - 2n + 1 + sqrt((n-3)^2 + 4(n-2)^2)) / 2.
double kite_submatrix_bound(int n);

}  // namespace dlspec
