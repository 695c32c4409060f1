#include "isochain/metric.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "isochain/linalg.hpp"

namespace isochain {

MetricPair build_metrics(const BiorthogonalSystem& b, const std::string& level_label,
                         const Tolerances& tol) {
  MetricPair m;
  m.level_label = level_label;
  m.s_phi = b.phi * b.phi.adjoint();
  m.s_psi = b.psi * b.psi.adjoint();
  m.s_phi = 0.5 * (m.s_phi + m.s_phi.adjoint());
  m.s_psi = 0.5 * (m.s_psi + m.s_psi.adjoint());

  m.cond_phi = cond_estimate(m.s_phi);
  if (!(m.cond_phi <= tol.cond_max)) {
    throw MetricIllConditioned("build_metrics[" + level_label + "]: condition estimate " +
                               sci(m.cond_phi) + " exceeds cond_max");
  }
  m.inv_residual = (m.s_phi * m.s_psi - Matrix::Identity(b.dim, b.dim)).norm();
  if (m.inv_residual > tol.metric * std::max(1.0, m.cond_phi)) {
    throw MetricIllConditioned("build_metrics[" + level_label + "]: inverse-pair residual " +
                               sci(m.inv_residual) + " above tolerance");
  }
  for (const Matrix* s : {&m.s_phi, &m.s_psi}) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(*s);
    if (es.info() != Eigen::Success) {
      throw NoConvergence("build_metrics[" + level_label + "]: Hermitian eigensolver failed");
    }
    if (es.eigenvalues()(0) <= tol.pd) {
      throw NotPositiveDefinite("build_metrics[" + level_label + "]: metric not positive definite");
    }
  }
  return m;
}

Matrix sharp(const Matrix& x, const MetricPair& m) {
  return matmul(matmul(m.s_phi, dagger(x)), m.s_psi);
}

Matrix flat(const Matrix& x, const MetricPair& m) {
  return matmul(matmul(m.s_psi, dagger(x)), m.s_phi);
}

Complex weighted_inner(const Vector& f, const Vector& g, const Matrix& s) {
  if (s.rows() != s.cols() || s.rows() != f.size() || f.size() != g.size()) {
    throw InvalidSpec("weighted_inner: dimension mismatch");
  }
  return (s * f).adjoint() * g;
}

BiorthogonalSystem promote_vectors(const BiorthogonalSystem& b, const MetricPair& m,
                                   Branch branch, const Tolerances& tol) {
  const Matrix& phi_side = branch == Branch::flat ? m.s_phi : m.s_psi;
  const Matrix& psi_side = branch == Branch::flat ? m.s_psi : m.s_phi;
  return make_biorthogonal(b.eigenvalues, phi_side * b.phi, psi_side * b.psi, tol);
}

Lemma1Report lemma1_check(const Matrix& x, const MetricPair& m, const Tolerances& tol) {
  require_square_finite(x, "lemma1_check");
  const double xn = std::max(1.0, x.norm());

  Lemma1Report r;
  {
    Matrix lhs = dagger(flat(x, m));
    Matrix rhs = flat(dagger(x), m);
    r.residuals[0] = (lhs - rhs).norm() / std::max(1.0, lhs.norm());
  }
  {
    Matrix sq = m.s_phi * m.s_phi;
    r.residuals[1] = (x * sq - sq * x).norm() / (xn * std::max(1.0, sq.norm()));
  }
  {
    Matrix sq = m.s_psi * m.s_psi;
    r.residuals[2] = (x * sq - sq * x).norm() / (xn * std::max(1.0, sq.norm()));
  }
  {
    Matrix lhs = dagger(sharp(x, m));
    Matrix rhs = sharp(dagger(x), m);
    r.residuals[3] = (lhs - rhs).norm() / std::max(1.0, lhs.norm());
  }

  for (int i = 0; i < 4; ++i) r.holds[i] = r.residuals[i] <= tol.metric;
  const bool first = r.holds[0];
  for (int i = 1; i < 4; ++i) {
    if (r.holds[i] != first) {
      throw InconsistentEquivalence(
          "lemma1_check: the four equivalent criteria disagree (residuals " +
          sci(r.residuals[0]) + ", " + sci(r.residuals[1]) + ", " +
          sci(r.residuals[2]) + ", " + sci(r.residuals[3]) + ")");
    }
  }
  r.all_hold = first;
  return r;
}

}  // namespace isochain
