#pragma once

#include <array>
#include <string>

#include "isochain/biortho.hpp"
#include "isochain/types.hpp"

namespace isochain {

// S_phi = sum_n phi_n dagger(phi_n), S_psi = sum_n psi_n dagger(psi_n).
// Hermitian, positive definite, exact inverses of each other in exact
// arithmetic: S_phi psi_n = phi_n and S_psi phi_n = psi_n.
struct MetricPair {
  std::string level_label;  // "0", "1", "2a", "2b"
  Matrix s_phi;
  Matrix s_psi;
  double inv_residual = 0.0;  // ||s_phi * s_psi - 1||_F
  double cond_phi = 0.0;      // cond_estimate(s_phi)
};

// Throws MetricIllConditioned (condition number or inverse-pair residual) or
// NotPositiveDefinite.
MetricPair build_metrics(const BiorthogonalSystem& b, const std::string& level_label,
                         const Tolerances& tol = {});

// sharp(x) = s_phi * dagger(x) * s_psi,  flat(x) = s_psi * dagger(x) * s_phi.
// dagger(sharp(x)) = flat(dagger(x)) and dagger(flat(x)) = sharp(dagger(x)).
Matrix sharp(const Matrix& x, const MetricPair& m);
Matrix flat(const Matrix& x, const MetricPair& m);

// <f, g>_s = <s f, g>, conjugate-linear in f. s must be square with matching
// dimension; positivity requires a positive definite s.
Complex weighted_inner(const Vector& f, const Vector& g, const Matrix& s);

// Which metric multiplies which family when promoting a level.
enum class Branch {
  flat,   // phi' = s_phi phi, psi' = s_psi psi
  sharp,  // phi' = s_psi phi, psi' = s_phi psi
};

// Next-level families. The flat branch of the level-0 metrics is the first
// promotion; the sharp branch of level 0 reproduces the input with the roles
// of phi and psi swapped and is recorded as an alias rather than grown.
BiorthogonalSystem promote_vectors(const BiorthogonalSystem& b, const MetricPair& m,
                                   Branch branch = Branch::flat,
                                   const Tolerances& tol = {});

// The four equivalent conditions for a metric-adjoint to commute with
// daggering: (0) dagger(flat(x)) = flat(dagger(x)), (1) [x, s_phi^2] = 0,
// (2) [x, s_psi^2] = 0, (3) dagger(sharp(x)) = sharp(dagger(x)).
// Residuals are relative to the scale of each left-hand side.
struct Lemma1Report {
  std::array<double, 4> residuals{};
  std::array<bool, 4> holds{};
  bool all_hold = false;
};

// Throws InconsistentEquivalence if the four verdicts disagree.
Lemma1Report lemma1_check(const Matrix& x, const MetricPair& m, const Tolerances& tol = {});

}  // namespace isochain
