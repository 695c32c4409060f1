#pragma once

#include <string>

#include "isochain/errors.hpp"
#include "isochain/types.hpp"

namespace isochain {

// Throws InvalidSpec unless a is square, nonempty, within the dimension cap,
// and free of NaN/Inf entries. `what` names the offending argument.
void require_square_finite(const Matrix& a, const char* what);

// Scientific 3-digit rendering for residuals in diagnostics.
std::string sci(double x);

// Conjugate transpose.
Matrix dagger(const Matrix& a);

// Dimension-checked product.
Matrix matmul(const Matrix& a, const Matrix& b);

// LU inverse guarded by cond_estimate(a) <= tol.cond_max and a residual check
// ||a * inverse(a) - 1||_F <= tol.inv * max(1, cond). Throws Singular.
Matrix inverse(const Matrix& a, const Tolerances& tol = {});

// k-fold product by repeated multiplication, matpow(a, 0) = identity. k >= 0.
Matrix matpow(const Matrix& a, int k);

// Unique Hermitian positive square root. Requires a Hermitian within tol.herm
// and eigenvalues > tol.pd; throws NotPositiveDefinite otherwise.
Matrix positive_sqrt(const Matrix& a, const Tolerances& tol = {});

// Largest over smallest singular value.
double cond_estimate(const Matrix& a);

// ||a - dagger(a)||_F <= tol * max(1, ||a||_F).
bool is_hermitian(const Matrix& a, double tol);

// Frobenius distance.
double frob_dist(const Matrix& a, const Matrix& b);

}  // namespace isochain
