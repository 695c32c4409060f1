#pragma once

#include <vector>

#include "isochain/eig.hpp"
#include "isochain/types.hpp"

namespace isochain {

// Two eigenvector families: columns of phi solve H phi_n = E_n phi_n, columns
// of psi solve dagger(H) psi_n = conj(E_n) psi_n, normalized against each
// other so that <phi_n, psi_m> = delta_nm (inner products conjugate-linear in
// the first argument).
struct BiorthogonalSystem {
  Eigen::Index dim = 0;
  Vector eigenvalues;     // of H, canonical order
  Matrix phi;
  Matrix psi;
  double gram_residual = 0.0;  // ||dagger(phi) * psi - 1||_F
};

// Numeric construction from one matrix. phi columns carry the deterministic
// convention: unit 2-norm, first component of largest modulus made real
// positive; psi columns absorb the complex rescale that sets the Gram
// diagonal to one. Throws PairingAmbiguous or IllConditionedBasis.
BiorthogonalSystem build_biorthogonal(const Matrix& h, const Tolerances& tol = {});

// Wraps externally supplied families (e.g. closed forms): sorts to canonical
// eigenvalue order, rescales psi for an exactly unit Gram diagonal, validates
// the Gram residual. phi columns are kept verbatim so callers control the
// normalization that the metric operators inherit.
BiorthogonalSystem make_biorthogonal(const Vector& eigenvalues, const Matrix& phi,
                                     const Matrix& psi, const Tolerances& tol = {});

// ||sum_n phi_n dagger(psi_n) - 1||_F.
double resolution_residual(const BiorthogonalSystem& b);

// Independent route to the left family: psi_n from the conjugated rows of
// inverse(phi). Returns the largest relative column distance to b.psi.
// Cross-check only, not the primary construction.
double dual_family_crosscheck(const BiorthogonalSystem& b, const Tolerances& tol = {});

namespace detail {

// For each right eigenvalue E_n (canonical order) pick the unused m minimizing
// |conj(F_m) - E_n|. Throws PairingAmbiguous when best and runner-up are
// closer than gap_scale.
std::vector<Eigen::Index> pair_conjugate(const Vector& e_of_h, const Vector& e_of_hdag,
                                         double gap_scale);

}  // namespace detail

}  // namespace isochain
