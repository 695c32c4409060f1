#include "isochain/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace isochain {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

void require_square_finite(const Matrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw InvalidSpec(std::string(what) + ": expected a nonempty square matrix, got " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (a.rows() > kMaxDim) {
    throw InvalidSpec(std::string(what) + ": dimension " + std::to_string(a.rows()) +
                      " exceeds the cap " + std::to_string(kMaxDim));
  }
  if (!a.allFinite()) {
    throw InvalidSpec(std::string(what) + ": matrix contains NaN or Inf entries");
  }
}

Matrix dagger(const Matrix& a) { return a.adjoint(); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidSpec("matmul: inner dimensions disagree, " + std::to_string(a.cols()) +
                      " vs " + std::to_string(b.rows()));
  }
  return a * b;
}

double cond_estimate(const Matrix& a) {
  require_square_finite(a, "cond_estimate");
  Eigen::BDCSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

Matrix inverse(const Matrix& a, const Tolerances& tol) {
  require_square_finite(a, "inverse");
  const double cond = cond_estimate(a);
  if (!(cond <= tol.cond_max)) {
    throw Singular("inverse: condition estimate " + sci(cond) +
                   " exceeds cond_max " + std::to_string(tol.cond_max));
  }
  Eigen::PartialPivLU<Matrix> lu(a);
  Matrix inv = lu.inverse();
  const double residual = (a * inv - Matrix::Identity(a.rows(), a.cols())).norm();
  if (residual > tol.inv * std::max(1.0, cond)) {
    throw Singular("inverse: residual " + sci(residual) +
                   " above tol.inv * cond = " + sci(tol.inv * std::max(1.0, cond)));
  }
  return inv;
}

Matrix matpow(const Matrix& a, int k) {
  require_square_finite(a, "matpow");
  if (k < 0) throw InvalidSpec("matpow: negative exponent " + std::to_string(k));
  Matrix acc = Matrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

bool is_hermitian(const Matrix& a, double tol) {
  require_square_finite(a, "is_hermitian");
  return (a - a.adjoint()).norm() <= tol * std::max(1.0, a.norm());
}

double frob_dist(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidSpec("frob_dist: shape mismatch");
  }
  return (a - b).norm();
}

Matrix positive_sqrt(const Matrix& a, const Tolerances& tol) {
  require_square_finite(a, "positive_sqrt");
  if (!is_hermitian(a, tol.herm)) {
    throw NotPositiveDefinite("positive_sqrt: input is not Hermitian within tolerance");
  }
  Matrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw NoConvergence("positive_sqrt: Hermitian eigensolver failed");
  }
  const auto& lam = es.eigenvalues();
  if (lam(0) <= tol.pd) {
    throw NotPositiveDefinite("positive_sqrt: smallest eigenvalue " + std::to_string(lam(0)) +
                              " not above the positivity floor");
  }
  Eigen::VectorXd roots = lam.array().sqrt();
  Matrix b = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
  b = 0.5 * (b + b.adjoint());
  const double rebuild = (b * b - sym).norm();
  if (rebuild > tol.sqrt * std::max(1.0, sym.norm())) {
    throw NoConvergence("positive_sqrt: reconstruction residual " + std::to_string(rebuild) +
                        " above tolerance");
  }
  return b;
}

}  // namespace isochain
