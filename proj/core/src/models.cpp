#include "isochain/models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "isochain/linalg.hpp"
#include "isochain/rng.hpp"

namespace isochain {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidSpec(msg);
}

void require_finite(double x, const char* name) {
  require(std::isfinite(x), std::string("parameter ") + name + " must be finite");
}

void require_sites(int sites) {
  require(sites >= 2, "L must be at least 2, got " + std::to_string(sites));
  require(sites <= kMaxDim, "L exceeds the dimension cap");
}

int impurity_site(const HnImpurity& m) { return m.x0 ? *m.x0 : (m.sites + 1) / 2; }

Matrix open_chain(int sites, double t, double g) {
  Matrix h = Matrix::Zero(sites, sites);
  for (int x = 0; x + 1 < sites; ++x) {
    h(x, x + 1) = Complex(-t * std::exp(-g), 0.0);
    h(x + 1, x) = Complex(-t * std::exp(g), 0.0);
  }
  return h;
}

Matrix periodic_chain(int sites, double t, double g) {
  Matrix h = open_chain(sites, t, g);
  h(0, sites - 1) += Complex(-t * std::exp(g), 0.0);
  h(sites - 1, 0) += Complex(-t * std::exp(-g), 0.0);
  return h;
}

void validate_chain_params(int sites, double t, double g) {
  require_sites(sites);
  require_finite(t, "t_h");
  require_finite(g, "g");
  require(t != 0.0, "t_h must be nonzero");
}

}  // namespace

std::string family_name(const ModelSpec& spec) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Triangular2x2>) return "triangular2x2";
        if constexpr (std::is_same_v<T, HnOpen>) return "hn_open";
        if constexpr (std::is_same_v<T, HnPeriodic>) return "hn_periodic";
        if constexpr (std::is_same_v<T, HnImpurity>) return "hn_impurity";
        if constexpr (std::is_same_v<T, HnRandom>) return "hn_random";
        if constexpr (std::is_same_v<T, PtDimer>) return "pt_dimer";
        if constexpr (std::is_same_v<T, RlChain>) return "rl_chain";
      },
      spec);
}

Matrix build_model(const ModelSpec& spec) {
  return std::visit(
      [](const auto& m) -> Matrix {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Triangular2x2>) {
          require_finite(m.alpha, "alpha");
          require(std::isfinite(m.e1.real()) && std::isfinite(m.e1.imag()), "E1 must be finite");
          require(std::isfinite(m.e2.real()) && std::isfinite(m.e2.imag()), "E2 must be finite");
          require(m.e1 != m.e2, "E1 and E2 must be distinct");
          Matrix h(2, 2);
          h << m.e1, m.alpha * (m.e2 - m.e1), Complex(0, 0), m.e2;
          return h;
        } else if constexpr (std::is_same_v<T, HnOpen>) {
          validate_chain_params(m.sites, m.t, m.g);
          return open_chain(m.sites, m.t, m.g);
        } else if constexpr (std::is_same_v<T, HnPeriodic>) {
          validate_chain_params(m.sites, m.t, m.g);
          return periodic_chain(m.sites, m.t, m.g);
        } else if constexpr (std::is_same_v<T, HnImpurity>) {
          validate_chain_params(m.sites, m.t, m.g);
          require_finite(m.v, "v");
          const int x0 = impurity_site(m);
          require(x0 >= 1 && x0 <= m.sites, "x0 must lie within 1..L");
          Matrix h = periodic_chain(m.sites, m.t, m.g);
          h(x0 - 1, x0 - 1) += Complex(m.v, 0.0);
          return h;
        } else if constexpr (std::is_same_v<T, HnRandom>) {
          validate_chain_params(m.sites, m.t, m.g);
          require_finite(m.box, "V");
          require(m.box >= 0.0, "V must be nonnegative");
          Matrix h = periodic_chain(m.sites, m.t, m.g);
          for (int x = 0; x < m.sites; ++x) {
            h(x, x) += Complex(uniform_symmetric(m.seed, static_cast<std::uint64_t>(x), m.box), 0.0);
          }
          return h;
        } else if constexpr (std::is_same_v<T, PtDimer>) {
          require_finite(m.t, "t_h");
          require_finite(m.gamma, "gamma");
          require(m.t != 0.0, "t_h must be nonzero");
          Matrix h(2, 2);
          h << Complex(0, m.gamma), Complex(-m.t, 0), Complex(-m.t, 0), Complex(0, -m.gamma);
          return h;
        } else {
          static_assert(std::is_same_v<T, RlChain>);
          require(m.cells >= 1, "L must be at least 1");
          require(2 * m.cells <= kMaxDim, "2L exceeds the dimension cap");
          require_finite(m.t, "t_h");
          require_finite(m.delta, "delta");
          require_finite(m.gamma, "gamma");
          require(m.t != 0.0, "t_h must be nonzero");
          const int n = 2 * m.cells;
          const double u = m.t * (1.0 + m.delta);
          const double w = m.t * (1.0 - m.delta);
          Matrix h = Matrix::Zero(n, n);
          for (int x = 0; x < n; ++x) {
            h(x, x) = Complex(0.0, x % 2 == 0 ? m.gamma : -m.gamma);
          }
          for (int x = 0; x + 1 < n; ++x) {
            const double hop = x % 2 == 0 ? u : w;  // 0-based even x is an odd site
            h(x, x + 1) += Complex(-hop, 0.0);
            h(x + 1, x) += Complex(-hop, 0.0);
          }
          h(0, n - 1) += Complex(-w, 0.0);
          h(n - 1, 0) += Complex(-w, 0.0);
          return h;
        }
      },
      spec);
}

namespace {

AnalyticEigensystem analytic_triangular(const Triangular2x2& m) {
  AnalyticEigensystem out;
  out.eigenvalues.resize(2);
  out.eigenvalues << m.e1, m.e2;
  out.phi.resize(2, 2);
  out.phi << Complex(1, 0), Complex(m.alpha, 0), Complex(0, 0), Complex(1, 0);
  out.psi.resize(2, 2);
  out.psi << Complex(1, 0), Complex(0, 0), Complex(-m.alpha, 0), Complex(1, 0);
  out.validity_note = "exact for E1 != E2";
  return out;
}

AnalyticEigensystem analytic_open(const HnOpen& m) {
  const int n = m.sites;
  const double c = std::sqrt(2.0 / (n + 1));
  AnalyticEigensystem out;
  out.eigenvalues.resize(n);
  out.phi.resize(n, n);
  out.psi.resize(n, n);
  for (int j = 0; j < n; ++j) {
    const double k = (j + 1) * kPi / (n + 1);
    out.eigenvalues(j) = Complex(-2.0 * m.t * std::cos(k), 0.0);
    for (int x = 0; x < n; ++x) {
      const double s = c * std::sin(k * (x + 1));
      out.phi(x, j) = Complex(std::exp(m.g * x) * s, 0.0);
      out.psi(x, j) = Complex(std::exp(-m.g * x) * s, 0.0);
    }
  }
  out.validity_note = "entirely real spectrum for every g; gauge image of the g = 0 chain";
  return out;
}

AnalyticEigensystem analytic_periodic(const HnPeriodic& m) {
  const int n = m.sites;
  const double root = 1.0 / std::sqrt(static_cast<double>(n));
  AnalyticEigensystem out;
  out.eigenvalues.resize(n);
  out.phi.resize(n, n);
  out.psi.resize(n, n);
  for (int j = 0; j < n; ++j) {
    const double k = 2.0 * kPi * (j + 1) / n;
    out.eigenvalues(j) = -2.0 * m.t * std::cos(Complex(k, m.g));
    for (int x = 0; x < n; ++x) {
      out.phi(x, j) = std::polar(root, k * (x + 1));
      out.psi(x, j) = out.phi(x, j);
    }
  }
  out.validity_note =
      "spectrum lies on an ellipse with semi-axes 2|t| cosh g and 2|t| sinh g; both families are "
      "the same plane waves, the metrics are the identity";
  return out;
}

AnalyticEigensystem analytic_dimer(const PtDimer& m) {
  const double t2 = m.t * m.t;
  const double g2 = m.gamma * m.gamma;
  if (t2 == g2) {
    throw DegenerateSpectrum("pt_dimer closed form collapses at |t_h| = |gamma|");
  }
  AnalyticEigensystem out;
  out.eigenvalues.resize(2);
  out.phi.resize(2, 2);
  out.psi.resize(2, 2);
  const Complex ig(0.0, m.gamma);
  if (t2 > g2) {
    const double beta = std::sqrt(t2 - g2);
    const double scale = 1.0 / std::sqrt(2.0 * beta * std::abs(m.t));
    const Complex es[2] = {Complex(-beta, 0.0), Complex(beta, 0.0)};
    for (int j = 0; j < 2; ++j) {
      out.eigenvalues(j) = es[j];
      out.phi.col(j) = scale * Vector{{Complex(m.t, 0.0), ig - es[j]}};
      out.psi.col(j) = Vector{{Complex(m.t, 0.0), -ig - std::conj(es[j])}};
    }
    out.validity_note = "unbroken phase: both eigenvalues real";
  } else {
    const double kappa = std::sqrt(g2 - t2);
    const Complex es[2] = {Complex(0.0, kappa), Complex(0.0, -kappa)};
    const double weights[2] = {1.0 / (2.0 * kappa * std::abs(m.t)),
                               (m.gamma - kappa) / (2.0 * kappa * (m.gamma + kappa) * std::abs(m.t))};
    for (int j = 0; j < 2; ++j) {
      out.eigenvalues(j) = es[j];
      out.phi.col(j) = std::sqrt(weights[j]) * Vector{{Complex(m.t, 0.0), ig - es[j]}};
      out.psi.col(j) = Vector{{Complex(m.t, 0.0), -ig - std::conj(es[j])}};
    }
    out.validity_note = "broken phase: both eigenvalues imaginary";
  }
  return out;
}

AnalyticEigensystem analytic_rl(const RlChain& m) {
  const int cells = m.cells;
  const int n = 2 * cells;
  const double u = m.t * (1.0 + m.delta);
  const double w = m.t * (1.0 - m.delta);
  const double root = 1.0 / std::sqrt(static_cast<double>(cells));

  AnalyticEigensystem out;
  out.eigenvalues.resize(n);
  out.phi.resize(n, n);
  out.psi.resize(n, n);
  out.phi.setZero();
  out.psi.setZero();

  for (int j = 0; j < cells; ++j) {
    const double k = 2.0 * kPi * (j + 1) / cells;
    const double mu = u + w * std::cos(k);
    const double nu = w * std::sin(k);
    const Complex off(-mu, nu);  // upper-right block entry
    const Complex disc(mu * mu + nu * nu - m.gamma * m.gamma, 0.0);
    const Complex eps = std::sqrt(disc);
    if (std::abs(eps) == 0.0) {
      throw DegenerateSpectrum("rl_chain closed form collapses at an exceptional point");
    }
    const Complex ig(0.0, m.gamma);
    for (int sgn = 0; sgn < 2; ++sgn) {
      const Complex e = sgn == 0 ? eps : -eps;
      const int col = 2 * j + sgn;
      out.eigenvalues(col) = e;
      Complex phi_a, phi_b, psi_a, psi_b;
      if (std::abs(off) == 0.0) {
        // Decoupled block: eigenvalues are +/- i gamma with coordinate vectors.
        phi_a = e == ig ? Complex(1, 0) : Complex(0, 0);
        phi_b = e == ig ? Complex(0, 0) : Complex(1, 0);
        psi_a = phi_a;
        psi_b = phi_b;
      } else {
        phi_a = off;
        phi_b = e - ig;
        psi_a = off;
        psi_b = std::conj(e) + ig;
      }
      for (int cell = 0; cell < cells; ++cell) {
        const Complex bloch = std::polar(root, k * (cell + 1));
        out.phi(2 * cell, col) = bloch * phi_a;
        out.phi(2 * cell + 1, col) = bloch * phi_b;
        out.psi(2 * cell, col) = bloch * psi_a;
        out.psi(2 * cell + 1, col) = bloch * psi_b;
      }
    }
  }
  out.validity_note =
      "momentum blocks n and L-n share eigenvalue pairs for 0 < n < L/2; the closed form stays "
      "valid, multiplicity-one numeric machinery refuses such sizes";
  return out;
}

}  // namespace

AnalyticEigensystem analytic_reference(const ModelSpec& spec) {
  build_model(spec);  // parameter validation
  return std::visit(
      [&](const auto& m) -> AnalyticEigensystem {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Triangular2x2>) return analytic_triangular(m);
        else if constexpr (std::is_same_v<T, HnOpen>) return analytic_open(m);
        else if constexpr (std::is_same_v<T, HnPeriodic>) return analytic_periodic(m);
        else if constexpr (std::is_same_v<T, PtDimer>) return analytic_dimer(m);
        else if constexpr (std::is_same_v<T, RlChain>) return analytic_rl(m);
        else {
          throw NoClosedForm("no closed-form eigensystem for family " + family_name(ModelSpec{m}));
        }
      },
      spec);
}

BiorthogonalSystem analytic_biorthogonal(const ModelSpec& spec, const Tolerances& tol) {
  AnalyticEigensystem ref = analytic_reference(spec);
  return make_biorthogonal(ref.eigenvalues, ref.phi, ref.psi, tol);
}

namespace {

Matrix cyclic_shift(int n, int step) {
  Matrix s = Matrix::Zero(n, n);
  for (int c = 0; c < n; ++c) s((c + step) % n, c) = Complex(1, 0);
  return s;
}

Matrix dft_matrix(int n) {
  Matrix f(n, n);
  const double root = 1.0 / std::sqrt(static_cast<double>(n));
  const double k = 2.0 * kPi / n;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      f(x, y) = std::polar(root, k * x * y);
    }
  }
  return f;
}

// Columns ordered (n=1..L) x (A, B); conjugating the chain with this matrix
// produces the 2x2 momentum blocks down the diagonal in block order n.
Matrix rl_fourier(const RlChain& m) {
  const int cells = m.cells;
  const int n = 2 * cells;
  const double root = 1.0 / std::sqrt(static_cast<double>(cells));
  Matrix f = Matrix::Zero(n, n);
  for (int j = 0; j < cells; ++j) {
    const double k = 2.0 * kPi * (j + 1) / cells;
    for (int cell = 0; cell < cells; ++cell) {
      const Complex bloch = std::polar(root, k * (cell + 1));
      f(2 * cell, 2 * j) = bloch;
      f(2 * cell + 1, 2 * j + 1) = bloch;
    }
  }
  return f;
}

}  // namespace

std::map<std::string, Matrix> symmetry_ops(const ModelSpec& spec) {
  build_model(spec);  // parameter validation
  return std::visit(
      [](const auto& m) -> std::map<std::string, Matrix> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PtDimer>) {
          Matrix p(2, 2);
          p << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
          return {{"parity", p}};
        } else if constexpr (std::is_same_v<T, HnPeriodic>) {
          return {{"shift", cyclic_shift(m.sites, 1)}, {"fourier", dft_matrix(m.sites)}};
        } else if constexpr (std::is_same_v<T, RlChain>) {
          return {{"shift", cyclic_shift(2 * m.cells, 2)}, {"fourier", rl_fourier(m)}};
        } else {
          throw UnsupportedSymmetry("family " + family_name(ModelSpec{m}) +
                                    " defines no symmetry operators");
        }
      },
      spec);
}

double pt_check(const Matrix& h, const Matrix& parity) {
  require_square_finite(h, "pt_check");
  if (parity.rows() != h.rows() || parity.cols() != h.cols()) {
    throw InvalidSpec("pt_check: parity dimension mismatch");
  }
  return (parity * h.conjugate() - h * parity).norm();
}

std::vector<Matrix> rl_blocks(const RlChain& spec) {
  build_model(ModelSpec{spec});  // parameter validation
  const double u = spec.t * (1.0 + spec.delta);
  const double w = spec.t * (1.0 - spec.delta);
  std::vector<Matrix> out;
  out.reserve(spec.cells);
  for (int j = 0; j < spec.cells; ++j) {
    const double k = 2.0 * kPi * (j + 1) / spec.cells;
    const double mu = u + w * std::cos(k);
    const double nu = w * std::sin(k);
    Matrix b(2, 2);
    b << Complex(0, spec.gamma), Complex(-mu, nu), Complex(-mu, -nu), Complex(0, -spec.gamma);
    out.push_back(std::move(b));
  }
  return out;
}

std::pair<Matrix, Matrix> gauge_symmetrize(const HnOpen& spec) {
  Matrix h = build_model(ModelSpec{spec});
  const int n = spec.sites;
  Matrix s = Matrix::Zero(n, n);
  Matrix sinv = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    s(x, x) = Complex(std::exp(spec.g * x), 0.0);
    sinv(x, x) = Complex(std::exp(-spec.g * x), 0.0);
  }
  Matrix sym = sinv * h * s;
  sym = 0.5 * (sym + sym.adjoint());  // clip roundoff; exact in exact arithmetic
  return {s, sym};
}

SantosParams santos_params(double gprime, double k) {
  require_finite(gprime, "gprime");
  require_finite(k, "k");
  require(gprime != 0.0, "gprime must be nonzero");
  require(std::abs(k) < 1.0, "|k| must be below 1");
  SantosParams p;
  p.t = gprime * std::sqrt(1.0 - k * k);
  p.g = 0.5 * std::log((1.0 + k) / (1.0 - k));
  return p;
}

}  // namespace isochain
