#include "isochain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "isochain/linalg.hpp"

namespace isochain {

const char* to_string(ConjClass c) {
  return c == ConjClass::spectrum_of_h ? "spectrum_of_h" : "spectrum_of_hdag";
}

ConjClass conj_class_from_string(const std::string& s) {
  if (s == "spectrum_of_h") return ConjClass::spectrum_of_h;
  if (s == "spectrum_of_hdag") return ConjClass::spectrum_of_hdag;
  throw InvalidSpec("unknown conjugation class '" + s + "'");
}

const ChainNode& ChainTree::node(const std::string& label) const {
  auto it = nodes.find(label);
  if (it == nodes.end()) throw UnknownNodeLabel("no node '" + label + "' in the tree");
  return it->second;
}

const MetricPair& ChainTree::metric(const std::string& level_label) const {
  auto it = metrics.find(level_label);
  if (it == metrics.end()) throw UnknownNodeLabel("no metric level '" + level_label + "' in the tree");
  return it->second;
}

namespace {

[[noreturn]] void abort_growth(const ChainTree& partial, const std::string& where,
                               const std::string& why) {
  throw ChainGrowthError("grow_chain failed at '" + where + "': " + why, where,
                         std::make_shared<const ChainTree>(partial));
}

struct Grower {
  ChainTree t;
  Tolerances tol;

  void insert(const std::string& label, const std::string& parent,
              const std::string& metric_label, ConjClass cls, Matrix a, const Matrix& raw_vectors) {
    ChainNode node;
    node.label = label;
    node.parent = parent;
    node.metric_label = metric_label;
    node.conj_class = cls;
    node.hamiltonian = std::move(a);
    node.eigenvalues = cls == ConjClass::spectrum_of_h ? Vector(t.seed.eigenvalues)
                                                       : Vector(t.seed.eigenvalues.conjugate());

    const Eigen::Index n = node.hamiltonian.rows();
    node.eigenvectors.resize(n, n);
    const double anorm = node.hamiltonian.norm();
    double worst = 0.0;
    for (Eigen::Index c = 0; c < n; ++c) {
      Vector v = raw_vectors.col(c);
      const double vn = v.norm();
      if (vn == 0.0) abort_growth(t, label, "zero eigenvector column " + std::to_string(c));
      v /= vn;
      node.eigenvectors.col(c) = v;
      worst = std::max(worst, (node.hamiltonian * v - node.eigenvalues(c) * v).norm());
    }
    node.max_residual = worst;
    if (worst > tol.chain * std::max(anorm, 1e-300)) {
      abort_growth(t, label, "eigenvector certificate residual " + sci(worst) +
                                 " above tol.chain * ||A||_F");
    }

    Vector got;
    try {
      got = spectrum(node.hamiltonian);
    } catch (const Error& e) {
      abort_growth(t, label, std::string("spectrum computation failed: ") + e.what());
    }
    // Bauer-Fike: numeric eigenvalues of a diagonalizable matrix are reliable
    // only up to the conditioning of its eigenbasis.
    const double vcond = cond_estimate(node.eigenvectors);
    const double sdiff = spectrum_set_distance(node.eigenvalues, got);
    if (sdiff > 10.0 * tol.eig * std::max(1.0, anorm) * std::max(1.0, vcond)) {
      abort_growth(t, label, "isospectrality deviation " + sci(sdiff) +
                                 " above 10 * tol.eig * max(1, ||A||_F) * max(1, cond(V))");
    }

    t.node_order.push_back(label);
    t.nodes.emplace(label, std::move(node));
  }

  MetricPair metrics_for(const BiorthogonalSystem& b, const std::string& level) {
    try {
      return build_metrics(b, level, tol);
    } catch (const Error& e) {
      abort_growth(t, "metrics:" + level, e.what());
    }
  }

  BiorthogonalSystem promote(const BiorthogonalSystem& b, const MetricPair& m, Branch branch,
                             const std::string& level) {
    try {
      return promote_vectors(b, m, branch, tol);
    } catch (const Error& e) {
      abort_growth(t, "basis:" + level, e.what());
    }
  }
};

}  // namespace

ChainTree grow_chain(const Matrix& h, const BiorthogonalSystem& seed, int depth,
                     const Tolerances& tol) {
  require_square_finite(h, "grow_chain");
  if (depth < 0 || depth > 3) {
    throw InvalidSpec("grow_chain: depth must be within 0..3, got " + std::to_string(depth));
  }
  if (seed.dim != h.rows()) throw InvalidSpec("grow_chain: seed dimension does not match matrix");

  Grower g;
  g.tol = tol;
  g.t.depth = depth;
  g.t.tol = tol;
  g.t.seed = seed;

  g.insert("H", "", "", ConjClass::spectrum_of_h, h, seed.phi);
  g.insert("Hdag", "H", "", ConjClass::spectrum_of_hdag, dagger(h), seed.psi);
  if (depth >= 1) {
    MetricPair m0 = g.metrics_for(seed, "0");
    g.t.metrics.emplace("0", m0);
    g.t.basis_aliases.emplace("sharp branch of level 0",
                              "seed families with phi and psi roles swapped; no new metrics");

    g.insert("sharp0", "H", "0", ConjClass::spectrum_of_hdag, sharp(h, m0), m0.s_phi * seed.psi);
    g.insert("flat0", "H", "0", ConjClass::spectrum_of_hdag, flat(h, m0), m0.s_psi * seed.psi);
    g.insert("sharp0dag", "sharp0", "0", ConjClass::spectrum_of_h,
             dagger(g.t.nodes.at("sharp0").hamiltonian), m0.s_psi * seed.phi);
    g.insert("flat0dag", "flat0", "0", ConjClass::spectrum_of_h,
             dagger(g.t.nodes.at("flat0").hamiltonian), m0.s_phi * seed.phi);

    if (depth >= 2) {
      BiorthogonalSystem b1 = g.promote(seed, m0, Branch::flat, "1");
      MetricPair m1 = g.metrics_for(b1, "1");
      g.t.bases.emplace("1", b1);
      g.t.metrics.emplace("1", m1);

      g.insert("sharp1", "H", "1", ConjClass::spectrum_of_hdag, sharp(h, m1), m1.s_phi * seed.psi);
      g.insert("flat1", "H", "1", ConjClass::spectrum_of_hdag, flat(h, m1), m1.s_psi * seed.psi);
      g.insert("sharp1dag", "sharp1", "1", ConjClass::spectrum_of_h,
               dagger(g.t.nodes.at("sharp1").hamiltonian), m1.s_psi * seed.phi);
      g.insert("flat1dag", "flat1", "1", ConjClass::spectrum_of_h,
               dagger(g.t.nodes.at("flat1").hamiltonian), m1.s_phi * seed.phi);

      if (depth >= 3) {
        BiorthogonalSystem b2a = g.promote(seed, m1, Branch::sharp, "2a");
        MetricPair m2a = g.metrics_for(b2a, "2a");
        g.t.bases.emplace("2a", b2a);
        g.t.metrics.emplace("2a", m2a);

        BiorthogonalSystem b2b = g.promote(seed, m1, Branch::flat, "2b");
        MetricPair m2b = g.metrics_for(b2b, "2b");
        g.t.bases.emplace("2b", b2b);
        g.t.metrics.emplace("2b", m2b);

        g.insert("sharp2a", "H", "2a", ConjClass::spectrum_of_hdag, sharp(h, m2a),
                 m2a.s_phi * seed.psi);
        g.insert("flat2a", "H", "2a", ConjClass::spectrum_of_hdag, flat(h, m2a),
                 m2a.s_psi * seed.psi);
        g.insert("sharp2adag", "sharp2a", "2a", ConjClass::spectrum_of_h,
                 dagger(g.t.nodes.at("sharp2a").hamiltonian), m2a.s_psi * seed.phi);
        g.insert("flat2adag", "flat2a", "2a", ConjClass::spectrum_of_h,
                 dagger(g.t.nodes.at("flat2a").hamiltonian), m2a.s_phi * seed.phi);

        g.insert("sharp2b", "H", "2b", ConjClass::spectrum_of_hdag, sharp(h, m2b),
                 m2b.s_phi * seed.psi);
        g.insert("flat2b", "H", "2b", ConjClass::spectrum_of_hdag, flat(h, m2b),
                 m2b.s_psi * seed.psi);
        g.insert("sharp2bdag", "sharp2b", "2b", ConjClass::spectrum_of_h,
                 dagger(g.t.nodes.at("sharp2b").hamiltonian), m2b.s_psi * seed.phi);
        g.insert("flat2bdag", "flat2b", "2b", ConjClass::spectrum_of_h,
                 dagger(g.t.nodes.at("flat2b").hamiltonian), m2b.s_phi * seed.phi);
      }
    }
  }
  return std::move(g.t);
}

ChainTree grow_chain(const Matrix& h, int depth, const Tolerances& tol) {
  return grow_chain(h, build_biorthogonal(h, tol), depth, tol);
}

std::map<std::string, double> power_identity_residuals(const ChainTree& t) {
  if (t.depth < 2) {
    throw DepthTooShallow("power_identity_residuals: tree depth " + std::to_string(t.depth) +
                          " below 2");
  }
  const MetricPair& m0 = t.metric("0");
  const MetricPair& m1 = t.metric("1");

  auto rel = [](const Matrix& lhs, const Matrix& rhs) {
    return (lhs - rhs).norm() / std::max(lhs.norm(), 1e-300);
  };

  std::map<std::string, double> out;
  out["s_phi_1_vs_s_phi_0_pow3"] = rel(m1.s_phi, matpow(m0.s_phi, 3));
  out["s_psi_1_vs_s_psi_0_pow3"] = rel(m1.s_psi, matpow(m0.s_psi, 3));
  if (t.depth >= 3) {
    const MetricPair& m2a = t.metric("2a");
    const MetricPair& m2b = t.metric("2b");
    out["s_phi_2a_vs_s_psi_0_pow5"] = rel(m2a.s_phi, matpow(m0.s_psi, 5));
    out["s_psi_2a_vs_s_phi_0_pow5"] = rel(m2a.s_psi, matpow(m0.s_phi, 5));
    out["s_phi_2b_vs_s_phi_0_pow7"] = rel(m2b.s_phi, matpow(m0.s_phi, 7));
    out["s_psi_2b_vs_s_psi_0_pow7"] = rel(m2b.s_psi, matpow(m0.s_psi, 7));
  }
  return out;
}

double intertwine_residual(const Matrix& s, const Matrix& a, const Matrix& b) {
  if (s.rows() != s.cols() || a.rows() != a.cols() || b.rows() != b.cols() ||
      s.rows() != a.rows() || a.rows() != b.rows()) {
    throw InvalidSpec("intertwine_residual: dimension mismatch");
  }
  return (s * a - b * s).norm() / std::max(1.0, a.norm());
}

}  // namespace isochain
