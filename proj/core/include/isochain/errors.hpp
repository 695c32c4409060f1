#pragma once

#include <stdexcept>
#include <string>

namespace isochain {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigensolver did not converge or violated its residual contract.
struct NoConvergence : Error { using Error::Error; };

// Two eigenvalues closer than the separation gate; multiplicity-one machinery refuses.
struct DegenerateSpectrum : Error { using Error::Error; };

// Matrix not invertible within the condition-number budget.
struct Singular : Error { using Error::Error; };

// Hermitian square root requested of a matrix that is not positive definite.
struct NotPositiveDefinite : Error { using Error::Error; };

// Conjugate-eigenvalue matching between the two eigenvector families is not unique.
struct PairingAmbiguous : Error { using Error::Error; };

// Gram matrix of the two families deviates too far from the identity.
struct IllConditionedBasis : Error { using Error::Error; };

// Metric operator pair too ill-conditioned to continue the chain.
struct MetricIllConditioned : Error { using Error::Error; };

// Requested residuals need a deeper tree than the one provided.
struct DepthTooShallow : Error { using Error::Error; };

// The four equivalent commutation criteria disagree numerically.
struct InconsistentEquivalence : Error { using Error::Error; };

// Suite preconditions on the spectrum class are not met.
struct WrongSpectrumClass : Error { using Error::Error; };

// Parameters out of range, malformed files, malformed configuration.
struct InvalidSpec : Error { using Error::Error; };

// Closed-form reference requested for a family that has none.
struct NoClosedForm : Error { using Error::Error; };

// Symmetry operator requested for a family that does not define it.
struct UnsupportedSymmetry : Error { using Error::Error; };

// Node label not present in the tree.
struct UnknownNodeLabel : Error { using Error::Error; };

}  // namespace isochain
