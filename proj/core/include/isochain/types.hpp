#pragma once

#include <complex>

#include <Eigen/Dense>

namespace isochain {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// All residual gates in one place. Absolute thresholds scale with the matrix
// norms or condition numbers at the point of use; see each operation.
struct Tolerances {
  double eig = 1e-10;      // eigenpair residual, relative to ||H||_F
  double gap = 1e-8;       // minimal eigenvalue separation, relative to max(1, spectral radius)
  double inv = 1e-12;      // inverse residual, scaled by the condition number
  double sqrt = 1e-10;     // square-root reconstruction, relative to max(1, ||A||_F)
  double herm = 1e-10;     // hermiticity deviation, relative to max(1, ||A||_F)
  double pd = 1e-12;       // positive-definiteness floor on eigenvalues
  double cond_max = 1e12;  // refuse inverses and metric chains past this condition number
  double bio = 1e-8;       // biorthogonality Gram residual
  double metric = 1e-8;    // metric inverse-pair and convention-stability residual
  double chain = 1e-8;     // per-node eigenvector certificates, relative to ||node||_F
  double real = 1e-8;      // spectrum classification, relative to 1 + spectral radius
};

inline constexpr int kMaxDim = 1024;

}  // namespace isochain
