#include "isochain/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isochain/linalg.hpp"
#include "isochain/metric.hpp"

namespace isochain {

const char* to_string(SpectrumClass c) {
  switch (c) {
    case SpectrumClass::all_real: return "all_real";
    case SpectrumClass::all_imaginary: return "all_imaginary";
    case SpectrumClass::mixed: return "mixed";
  }
  return "mixed";
}

SpectrumClass classify_spectrum(const Vector& eigenvalues, double tol_real) {
  const double thresh = tol_real * (1.0 + spectral_radius_of(eigenvalues));
  bool real_ok = true;
  bool imag_ok = true;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    real_ok = real_ok && std::abs(eigenvalues(i).imag()) <= thresh;
    imag_ok = imag_ok && std::abs(eigenvalues(i).real()) <= thresh;
  }
  if (real_ok) return SpectrumClass::all_real;
  if (imag_ok) return SpectrumClass::all_imaginary;
  return SpectrumClass::mixed;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return !c.asserted || c.passed; });
}

namespace {

CheckResult row(std::string name, double residual, double tolerance, bool asserted) {
  CheckResult r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  r.asserted = asserted;
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

double unit_floor(double x) { return std::max(1.0, x); }

void check_suite_inputs(const Matrix& h, const BiorthogonalSystem& b, const MetricPair& m,
                        const char* what) {
  require_square_finite(h, what);
  if (b.dim != h.rows() || m.s_phi.rows() != h.rows()) {
    throw InvalidSpec(std::string(what) + ": dimension mismatch between matrix, basis and metrics");
  }
}

// The four residuals of the reality criterion, raw Frobenius norms. Rows i
// and ii are the intertwining relations, iii and iv the adjoint-map fixed
// points: sharp leaves H in place, flat leaves dagger(H) in place.
struct RealityRows {
  std::array<CheckResult, 4> rows;
  bool all_hold = false;
  bool none_hold = false;
};

RealityRows reality_rows(const std::string& prefix, double sign, const Matrix& h,
                         const MetricPair& m, const Tolerances& tol) {
  const Matrix hdag = dagger(h);
  const double hs = unit_floor(h.norm());
  const double ps = unit_floor(m.s_phi.norm());
  const double qs = unit_floor(m.s_psi.norm());

  RealityRows out;
  out.rows[0] = row(prefix + "intertwine_s_psi", (m.s_psi * h - sign * hdag * m.s_psi).norm(),
                    tol.chain * qs * hs, false);
  out.rows[1] = row(prefix + "intertwine_s_phi", (m.s_phi * hdag - sign * h * m.s_phi).norm(),
                    tol.chain * ps * hs, false);
  out.rows[2] = row(prefix + "sharp_fixed_point", (sharp(h, m) - sign * h).norm(),
                    tol.chain * ps * qs * hs, false);
  out.rows[3] = row(prefix + "flat_fixed_point_dag", (flat(hdag, m) - sign * hdag).norm(),
                    tol.chain * ps * qs * hs, false);

  int held = 0;
  for (const CheckResult& r : out.rows) held += r.passed ? 1 : 0;
  out.all_hold = held == 4;
  out.none_hold = held == 0;
  return out;
}

[[noreturn]] void equivalence_contradiction(const char* where, SpectrumClass cls,
                                            const RealityRows& rr) {
  std::ostringstream os;
  os << where << ": spectrum class " << to_string(cls)
     << " contradicts the criterion residuals:";
  for (const CheckResult& r : rr.rows) {
    os << " " << r.name << "=" << fmt(r.residual) << (r.passed ? " (holds)" : " (fails)");
  }
  throw InconsistentEquivalence(os.str());
}

}  // namespace

VerificationReport theorem1_suite(const Matrix& h, const BiorthogonalSystem& b,
                                  const MetricPair& m, const Tolerances& tol) {
  check_suite_inputs(h, b, m, "theorem1_suite");

  VerificationReport rep;
  rep.spectrum_class = classify_spectrum(b.eigenvalues, tol.real);
  RealityRows rr = reality_rows("theorem1.", 1.0, h, m, tol);
  rep.checks.assign(rr.rows.begin(), rr.rows.end());

  const bool real = rep.spectrum_class == SpectrumClass::all_real;
  if ((real && !rr.all_hold) || (!real && !rr.none_hold)) {
    equivalence_contradiction("theorem1_suite", rep.spectrum_class, rr);
  }
  rep.checks.push_back(row("theorem1.biconditional", 0.0, 0.0, true));
  rep.pseudo_hermitian = real;
  rep.notes.push_back(real
                          ? "spectrum entirely real: both intertwining relations hold and the "
                            "sharp adjoint fixes the matrix"
                          : std::string("spectrum class ") + to_string(rep.spectrum_class) +
                                ": all four reality criteria fail, as required");
  return rep;
}

VerificationReport remark1_suite(const Matrix& h, const BiorthogonalSystem& b,
                                 const MetricPair& m, const Tolerances& tol) {
  check_suite_inputs(h, b, m, "remark1_suite");

  VerificationReport rep;
  rep.spectrum_class = classify_spectrum(b.eigenvalues, tol.real);
  if (rep.spectrum_class != SpectrumClass::all_imaginary) {
    throw WrongSpectrumClass(std::string("remark1_suite requires an all-imaginary spectrum, got ") +
                             to_string(rep.spectrum_class));
  }

  // Anti-intertwining: conj(E) = -E, so every relation acquires a minus sign
  // and the sharp adjoint negates the matrix.
  RealityRows rr = reality_rows("remark1.anti_", -1.0, h, m, tol);
  for (CheckResult r : rr.rows) {
    r.asserted = true;
    rep.checks.push_back(std::move(r));
  }
  if (!rr.all_hold) {
    equivalence_contradiction("remark1_suite", rep.spectrum_class, rr);
  }

  // The rotation -iH has a real spectrum and identical eigenvector families,
  // so it must pass the full reality criterion with the same metrics.
  const Matrix rotated = Complex(0.0, -1.0) * h;
  BiorthogonalSystem rb =
      make_biorthogonal(Complex(0.0, -1.0) * b.eigenvalues, b.phi, b.psi, tol);
  VerificationReport sub = theorem1_suite(rotated, rb, m, tol);
  for (CheckResult r : sub.checks) {
    r.name = "remark1.rotated." + r.name;
    rep.checks.push_back(std::move(r));
  }

  rep.pseudo_hermitian = false;
  rep.notes.push_back(
      "spectrum entirely imaginary: the metrics anti-intertwine the matrix with its adjoint and "
      "the rotation -iH satisfies the reality criterion");
  return rep;
}

namespace {

void append_node_rows(const ChainTree& t, const Tolerances& tol, VerificationReport& rep) {
  for (const std::string& label : t.node_order) {
    const ChainNode& node = t.node(label);
    const double hs = unit_floor(node.hamiltonian.norm());
    rep.checks.push_back(
        row("node." + label + ".certificate", node.max_residual, tol.chain * hs, true));

    const double worst = spectrum_set_distance(node.eigenvalues, spectrum(node.hamiltonian));
    const double vcond = cond_estimate(node.eigenvectors);
    rep.checks.push_back(row("node." + label + ".isospectral", worst,
                             10.0 * tol.eig * hs * unit_floor(vcond), true));
  }
}

void append_metric_rows(const ChainTree& t, const Tolerances& tol, VerificationReport& rep) {
  for (const auto& [level, m] : t.metrics) {
    const std::string p = "metric." + level + ".";
    rep.checks.push_back(
        row(p + "inverse_pair", m.inv_residual, tol.metric * unit_floor(m.cond_phi), true));
    for (const auto* side : {"s_phi", "s_psi"}) {
      const Matrix& s = side == std::string("s_phi") ? m.s_phi : m.s_psi;
      rep.checks.push_back(row(p + "hermitian_" + side, (s - dagger(s)).norm(),
                               tol.herm * unit_floor(s.norm()), true));
      Eigen::SelfAdjointEigenSolver<Matrix> es(s, Eigen::EigenvaluesOnly);
      const double lam_min = es.eigenvalues()(0);
      rep.checks.push_back(row(p + "positive_" + side,
                               std::max(0.0, -lam_min) / unit_floor(s.norm()), tol.pd, true));
    }
  }
}

// Every grown node is a metric conjugate of the seed matrix or its adjoint;
// the defining relation, e.g. sharp0 * s_phi = s_phi * dagger(H), is checked
// with the stored metrics of the node's level.
void append_intertwine_rows(const ChainTree& t, const Tolerances& tol, VerificationReport& rep) {
  if (t.depth < 1) return;
  const Matrix& h = t.node("H").hamiltonian;
  const Matrix hdag = dagger(h);
  for (const std::string& label : t.node_order) {
    if (label == "H" || label == "Hdag") continue;
    const ChainNode& node = t.node(label);
    const MetricPair& m = t.metric(node.metric_label);
    const bool dag_family = node.conj_class == ConjClass::spectrum_of_h;
    const bool sharp_kind = label.rfind("sharp", 0) == 0;
    // sharpX = s_phi dagger(H) s_psi, flatX = s_psi dagger(H) s_phi; their
    // daggers swap both the metric sides and the reference matrix.
    const Matrix& s = sharp_kind == dag_family ? m.s_psi : m.s_phi;
    const Matrix& ref = dag_family ? h : hdag;
    const double r = intertwine_residual(s, ref, node.hamiltonian);
    rep.checks.push_back(
        row("intertwine." + label, r, tol.chain * unit_floor(s.norm()), true));
  }
}

}  // namespace

VerificationReport full_suite(const ChainTree& t, const Tolerances& tol) {
  VerificationReport rep;
  rep.spectrum_class = classify_spectrum(t.seed.eigenvalues, tol.real);

  rep.checks.push_back(row("seed.gram", t.seed.gram_residual, tol.bio, true));
  rep.checks.push_back(row("seed.resolution", resolution_residual(t.seed),
                           tol.bio * unit_floor(t.seed.phi.norm() * t.seed.psi.norm()), true));
  rep.checks.push_back(row("seed.dual_crosscheck", dual_family_crosscheck(t.seed, tol),
                           tol.bio * unit_floor(cond_estimate(t.seed.phi)), true));

  append_metric_rows(t, tol, rep);
  for (const auto& [level, basis] : t.bases) {
    rep.checks.push_back(row("basis." + level + ".gram", basis.gram_residual, tol.bio, true));
  }
  append_node_rows(t, tol, rep);
  append_intertwine_rows(t, tol, rep);

  const Matrix& h = t.node("H").hamiltonian;
  for (const auto& [level, m] : t.metrics) {
    const double scale =
        tol.chain * unit_floor(m.s_phi.norm()) * unit_floor(m.s_psi.norm()) * unit_floor(h.norm());
    rep.checks.push_back(row("involution.level" + level,
                             (dagger(sharp(h, m)) - flat(dagger(h), m)).norm(), scale, true));
  }

  if (t.depth >= 2) {
    for (const auto& [key, r] : power_identity_residuals(t)) {
      rep.checks.push_back(row("power." + key, r, tol.chain, true));
    }
  }

  if (t.depth >= 1) {
    const MetricPair& m0 = t.metric("0");
    VerificationReport sub = rep.spectrum_class == SpectrumClass::all_imaginary
                                 ? remark1_suite(h, t.seed, m0, tol)
                                 : theorem1_suite(h, t.seed, m0, tol);
    rep.pseudo_hermitian = sub.pseudo_hermitian;
    rep.checks.insert(rep.checks.end(), sub.checks.begin(), sub.checks.end());
    rep.notes.insert(rep.notes.end(), sub.notes.begin(), sub.notes.end());
  } else {
    rep.notes.push_back("depth 0 tree: no metrics, reality criteria not evaluated");
  }

  if (t.depth >= 2) {
    const double drift = (sharp(h, t.metric("1")) - h).norm();
    rep.notes.push_back(
        "informational: the sharp adjoint under the level-1 metrics moves H by " + fmt(drift) +
        " (Frobenius); the reality criterion constrains only the level-0 metrics");
  }
  return rep;
}

std::vector<std::string> family_notes(const ModelSpec& spec, const ChainTree& t) {
  std::vector<std::string> notes;
  const auto* tri = std::get_if<Triangular2x2>(&spec);
  if (tri == nullptr || t.depth < 1) return notes;

  const double a2 = tri->alpha * tri->alpha;
  const Complex e1 = std::conj(tri->e1);
  const Complex e2 = std::conj(tri->e2);
  const Complex computed = t.node("flat0").hamiltonian(0, 0);
  const Complex quadratic = (1.0 + a2) * (1.0 + a2) * e1 - a2 * (2.0 + a2) * e2;
  const Complex linear = (1.0 + a2) * e1 - a2 * (2.0 + a2) * e2;

  notes.push_back("triangular family: flat-adjoint entry (1,1) from the metric triple product is " +
                  fmt(computed.real()) + (computed.imag() < 0 ? " - " : " + ") +
                  fmt(std::abs(computed.imag())) + "i");
  notes.push_back("closed form with coefficient (1+a^2)^2 on conj(E1) matches to " +
                  fmt(std::abs(computed - quadratic)));
  notes.push_back("the variant with linear coefficient (1+a^2) misses by " +
                  fmt(std::abs(computed - linear)) + "; the triple product is authoritative");
  return notes;
}

}  // namespace isochain
