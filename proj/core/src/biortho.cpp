#include "isochain/biortho.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "isochain/linalg.hpp"

namespace isochain {

namespace detail {

std::vector<Eigen::Index> pair_conjugate(const Vector& e_of_h, const Vector& e_of_hdag,
                                         double gap_scale) {
  const Eigen::Index n = e_of_h.size();
  if (e_of_hdag.size() != n) throw InvalidSpec("pair_conjugate: size mismatch");
  std::vector<Eigen::Index> out(n, -1);
  std::vector<bool> used(n, false);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    double second_d = std::numeric_limits<double>::infinity();
    for (Eigen::Index m = 0; m < n; ++m) {
      if (used[m]) continue;
      const double d = std::abs(std::conj(e_of_hdag(m)) - e_of_h(i));
      if (d < best_d) {
        second_d = best_d;
        best_d = d;
        best = m;
      } else if (d < second_d) {
        second_d = d;
      }
    }
    if (best < 0) throw PairingAmbiguous("pair_conjugate: no candidate left");
    if (std::isfinite(second_d) && second_d - best_d < gap_scale) {
      throw PairingAmbiguous("pair_conjugate: two conjugate candidates within the gap gate for eigenvalue index " +
                             std::to_string(i));
    }
    used[best] = true;
    out[i] = best;
  }
  return out;
}

}  // namespace detail

static void fix_phase(Matrix& phi) {
  for (Eigen::Index c = 0; c < phi.cols(); ++c) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < phi.rows(); ++r) {
      const double m = std::abs(phi(r, c));
      if (m > best) {
        best = m;
        arg = r;
      }
    }
    if (best <= 0.0) throw IllConditionedBasis("biorthogonal: zero eigenvector column");
    const Complex z = phi(arg, c) / best;  // unit modulus
    phi.col(c) *= std::conj(z);
  }
}

BiorthogonalSystem build_biorthogonal(const Matrix& h, const Tolerances& tol) {
  require_square_finite(h, "build_biorthogonal");
  Eigensystem right = eig(h, tol);
  Eigensystem left = eig(dagger(h), tol);

  const double radius = spectral_radius_of(right.eigenvalues);
  auto pairing = detail::pair_conjugate(right.eigenvalues, left.eigenvalues,
                                        tol.gap * std::max(1.0, radius));

  BiorthogonalSystem b;
  b.dim = right.dim;
  b.eigenvalues = right.eigenvalues;
  b.phi = right.right_vectors;
  fix_phase(b.phi);

  b.psi.resize(b.dim, b.dim);
  for (Eigen::Index n = 0; n < b.dim; ++n) {
    Vector psi = left.right_vectors.col(pairing[n]);
    const Complex overlap = b.phi.col(n).adjoint() * psi;
    if (std::abs(overlap) < 1e-300) {
      throw IllConditionedBasis("build_biorthogonal: vanishing phi/psi overlap at index " +
                                std::to_string(n));
    }
    b.psi.col(n) = psi / overlap;
  }

  b.gram_residual = (b.phi.adjoint() * b.psi - Matrix::Identity(b.dim, b.dim)).norm();
  if (b.gram_residual > tol.bio) {
    throw IllConditionedBasis("build_biorthogonal: Gram residual " +
                              sci(b.gram_residual) + " above tol.bio");
  }
  return b;
}

BiorthogonalSystem make_biorthogonal(const Vector& eigenvalues, const Matrix& phi,
                                     const Matrix& psi, const Tolerances& tol) {
  const Eigen::Index n = eigenvalues.size();
  if (phi.rows() != n || phi.cols() != n || psi.rows() != n || psi.cols() != n) {
    throw InvalidSpec("make_biorthogonal: family shapes must be square and match the spectrum");
  }
  auto order = canonical_order(eigenvalues);

  BiorthogonalSystem b;
  b.dim = n;
  b.eigenvalues.resize(n);
  b.phi.resize(n, n);
  b.psi.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    b.eigenvalues(i) = eigenvalues(order[i]);
    b.phi.col(i) = phi.col(order[i]);
    const Complex overlap = b.phi.col(i).adjoint() * psi.col(order[i]);
    if (std::abs(overlap) < 1e-300) {
      throw IllConditionedBasis("make_biorthogonal: vanishing phi/psi overlap at index " +
                                std::to_string(i));
    }
    b.psi.col(i) = psi.col(order[i]) / overlap;
  }
  b.gram_residual = (b.phi.adjoint() * b.psi - Matrix::Identity(n, n)).norm();
  if (b.gram_residual > tol.bio) {
    throw IllConditionedBasis("make_biorthogonal: Gram residual " +
                              sci(b.gram_residual) + " above tol.bio");
  }
  return b;
}

double resolution_residual(const BiorthogonalSystem& b) {
  return (b.phi * b.psi.adjoint() - Matrix::Identity(b.dim, b.dim)).norm();
}

double dual_family_crosscheck(const BiorthogonalSystem& b, const Tolerances& tol) {
  // The dual family is unique: conjugated rows of inverse(phi) must reproduce psi.
  Matrix alt = inverse(b.phi, tol).adjoint();
  double worst = 0.0;
  for (Eigen::Index n = 0; n < b.dim; ++n) {
    const double denom = std::max(b.psi.col(n).norm(), 1e-300);
    worst = std::max(worst, (alt.col(n) - b.psi.col(n)).norm() / denom);
  }
  return worst;
}

}  // namespace isochain
