#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isochain/biortho.hpp"
#include "isochain/types.hpp"

namespace isochain {

// Upper triangular 2x2: [[E1, alpha (E2 - E1)], [0, E2]].
struct Triangular2x2 {
  double alpha = 1.0;
  Complex e1{1.0, 0.0};
  Complex e2{2.0, 0.0};
};

// Open chain, L sites: superdiagonal -t e^{-g}, subdiagonal -t e^{g}.
struct HnOpen {
  int sites = 11;
  double t = 1.0;
  double g = 0.1;
};

// Periodic chain: open chain plus corners H(1,L) = -t e^{g}, H(L,1) = -t e^{-g}.
struct HnPeriodic {
  int sites = 11;
  double t = 1.0;
  double g = 0.1;
};

// Periodic chain with one on-site impurity v at site x0 (1-based).
// Default x0 = ceil(L / 2).
struct HnImpurity {
  int sites = 11;
  double t = 1.0;
  double g = 0.1;
  std::optional<int> x0;
  double v = 1.0;
};

// Periodic chain with iid on-site disorder uniform on [-box, box), drawn from
// the counter-based generator at (seed, site - 1).
struct HnRandom {
  int sites = 11;
  double t = 1.0;
  double g = 0.1;
  double box = 2.5;
  std::uint64_t seed = 0;
};

// Two-site gain/loss dimer: [[i gamma, -t], [-t, -i gamma]].
struct PtDimer {
  double t = 1.0;
  double gamma = 0.5;
};

// 2L-site two-band chain: alternating on-site +/- i gamma (+ on odd sites),
// alternating real hoppings -u = -t(1+delta) on odd bonds, -w = -t(1-delta)
// on even bonds, periodic closure across the (2L, 1) bond.
struct RlChain {
  int cells = 6;  // dimension is 2 * cells
  double t = 1.0;
  double delta = 0.3;
  double gamma = 0.1;
};

using ModelSpec =
    std::variant<Triangular2x2, HnOpen, HnPeriodic, HnImpurity, HnRandom, PtDimer, RlChain>;

// "triangular2x2", "hn_open", "hn_periodic", "hn_impurity", "hn_random",
// "pt_dimer", "rl_chain".
std::string family_name(const ModelSpec& spec);

// Dense Hamiltonian. Throws InvalidSpec on out-of-range parameters.
Matrix build_model(const ModelSpec& spec);

// Closed-form eigensystem where one exists, with the eigenvalue-to-column
// pairing canonical-ordered. phi columns keep the model's reference
// normalization (they are what the printed metric operators are built from);
// psi columns are scaled for a unit Gram diagonal.
struct AnalyticEigensystem {
  Vector eigenvalues;
  Matrix phi;
  Matrix psi;
  std::string validity_note;
};

// Families with closed forms: triangular2x2, hn_open, hn_periodic, pt_dimer,
// rl_chain. Throws NoClosedForm otherwise, DegenerateSpectrum at parameter
// points where the closed form collapses (exceptional points).
AnalyticEigensystem analytic_reference(const ModelSpec& spec);

// analytic_reference wrapped as a validated seed system.
BiorthogonalSystem analytic_biorthogonal(const ModelSpec& spec, const Tolerances& tol = {});

// Named unitaries the family supports: "parity" for pt_dimer; "shift" and
// "fourier" for hn_periodic and rl_chain (shift by one unit cell; the Fourier
// matrix block-diagonalizes the Hamiltonian). Throws UnsupportedSymmetry for
// families with none.
std::map<std::string, Matrix> symmetry_ops(const ModelSpec& spec);

// Residual of commutation with parity times complex conjugation:
// ||parity * conj(h) - h * parity||_F.
double pt_check(const Matrix& h, const Matrix& parity);

// The L Fourier blocks [[i gamma, -mu_n + i nu_n], [-mu_n - i nu_n, -i gamma]]
// with mu_n = u + w cos k_n, nu_n = w sin k_n, k_n = 2 pi n / L, n = 1..L.
std::vector<Matrix> rl_blocks(const RlChain& spec);

// Diagonal gauge s = diag(e^{g(x-1)}) and the Hermitian s^{-1} H s of the
// open chain.
std::pair<Matrix, Matrix> gauge_symmetrize(const HnOpen& spec);

// Tight-binding parameters matching a first-derivative discretization with
// asymmetry k: t = gprime * sqrt(1 - k^2), e^{2g} = (1+k)/(1-k). Requires
// |k| < 1 and gprime != 0.
struct SantosParams {
  double t = 0.0;
  double g = 0.0;
};
SantosParams santos_params(double gprime, double k);

}  // namespace isochain
