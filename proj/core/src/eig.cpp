#include "isochain/eig.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "isochain/linalg.hpp"

namespace isochain {

std::vector<Eigen::Index> canonical_order(const Vector& values) {
  std::vector<Eigen::Index> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (values(a).real() != values(b).real()) return values(a).real() < values(b).real();
    return values(a).imag() < values(b).imag();
  });
  return idx;
}

double spectral_radius_of(const Vector& values) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) r = std::max(r, std::abs(values(i)));
  return r;
}

Vector spectrum(const Matrix& h) {
  require_square_finite(h, "spectrum");
  Eigen::ComplexEigenSolver<Matrix> solver(h, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("spectrum: eigenvalue iteration failed");
  }
  Vector raw = solver.eigenvalues();
  auto order = canonical_order(raw);
  Vector sorted(raw.size());
  for (Eigen::Index i = 0; i < raw.size(); ++i) sorted(i) = raw(order[i]);
  return sorted;
}

double spectrum_set_distance(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidSpec("spectrum_set_distance: size mismatch");
  const Eigen::Index n = a.size();
  std::vector<bool> used(static_cast<size_t>(n), false);
  const auto order = canonical_order(a);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex target = a(order[static_cast<size_t>(i)]);
    Eigen::Index best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      const double d = std::abs(b(j) - target);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[static_cast<size_t>(best)] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

Eigensystem eig(const Matrix& h, const Tolerances& tol) {
  require_square_finite(h, "eig");
  const Eigen::Index n = h.rows();

  Eigen::ComplexEigenSolver<Matrix> solver(h, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("eig: eigenvalue iteration failed");
  }

  Vector raw = solver.eigenvalues();
  auto order = canonical_order(raw);

  Eigensystem out;
  out.dim = n;
  out.eigenvalues.resize(n);
  out.right_vectors.resize(n, n);
  out.residuals.resize(n);

  const double hnorm = h.norm();
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = raw(order[i]);
    Vector v = solver.eigenvectors().col(order[i]);
    const double vn = v.norm();
    if (vn == 0.0) throw NoConvergence("eig: zero eigenvector returned");
    v /= vn;
    out.right_vectors.col(i) = v;
    out.residuals(i) = (h * v - out.eigenvalues(i) * v).norm();
  }

  double min_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      min_gap = std::min(min_gap, std::abs(out.eigenvalues(i) - out.eigenvalues(j)));
    }
  }
  out.min_gap = min_gap;

  const double radius = spectral_radius_of(out.eigenvalues);
  if (n > 1 && min_gap < tol.gap * std::max(1.0, radius)) {
    throw DegenerateSpectrum("eig: minimal eigenvalue gap " + sci(min_gap) +
                             " below the separation gate");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (out.residuals(i) > tol.eig * std::max(hnorm, 1e-300)) {
      throw NoConvergence("eig: eigenpair residual " + sci(out.residuals(i)) +
                          " violates the contract");
    }
  }
  return out;
}

}  // namespace isochain
