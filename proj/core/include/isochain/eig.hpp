#pragma once

#include <vector>

#include "isochain/errors.hpp"
#include "isochain/types.hpp"

namespace isochain {

// Canonical eigenvalue order everywhere: ascending by (Re, Im), ties kept in
// the pre-sort order.
std::vector<Eigen::Index> canonical_order(const Vector& values);

double spectral_radius_of(const Vector& values);

struct Eigensystem {
  Eigen::Index dim = 0;
  Vector eigenvalues;          // canonical order
  Matrix right_vectors;        // unit-norm columns, column n pairs with eigenvalues[n]
  Eigen::VectorXd residuals;   // ||H v_n - lambda_n v_n||_2
  double min_gap = 0.0;        // min over pairs of |lambda_n - lambda_m|
};

// Full eigensystem of a general complex matrix. Enforces the residual contract
// (each residual <= tol.eig * ||H||_F, else NoConvergence) and the
// multiplicity-one gate (min_gap >= tol.gap * max(1, spectral radius), else
// DegenerateSpectrum).
Eigensystem eig(const Matrix& h, const Tolerances& tol = {});

// Eigenvalues only, canonical order, no multiplicity gate. For spectra of
// matrices the biorthogonal machinery would refuse (exact degeneracies).
Vector spectrum(const Matrix& h);

// Multiset distance between two spectra: greedy nearest matching in canonical
// order, returns the largest matched distance. Robust against the order flips
// positional comparison suffers when near-ties are sorted (conjugate pairs of
// a real matrix differ in Re only by roundoff). Sizes must agree.
double spectrum_set_distance(const Vector& a, const Vector& b);

}  // namespace isochain
