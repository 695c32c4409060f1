#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "isochain/metric.hpp"
#include "isochain/types.hpp"

namespace isochain {

// Whether a node is isospectral to the seed or to its conjugate transpose.
enum class ConjClass {
  spectrum_of_h,
  spectrum_of_hdag,
};

const char* to_string(ConjClass c);
ConjClass conj_class_from_string(const std::string& s);

struct ChainNode {
  std::string label;
  std::string parent;        // operand or partner node, "" for the seed
  std::string metric_label;  // metric level that built this node, "" for the seed pair
  ConjClass conj_class = ConjClass::spectrum_of_h;
  Matrix hamiltonian;
  Vector eigenvalues;   // seed-index order: entry n pairs with eigenvector column n
  Matrix eigenvectors;  // unit-norm columns
  double max_residual = 0.0;  // max_n ||A v_n - lambda_n v_n||_2
};

// Tree of isospectral operators grown from one seed system.
//
// depth 0: H, Hdag
// depth 1: + sharp0, flat0, sharp0dag, flat0dag          (level-0 metrics)
// depth 2: + sharp1, flat1, sharp1dag, flat1dag          (level-1 metrics from the
//                                                         flat-promoted families)
// depth 3: + sharp2a, flat2a, sharp2adag, flat2adag,     (level-2a metrics from the
//            sharp2b, flat2b, sharp2bdag, flat2bdag       sharp branch, level-2b from
//                                                         the flat branch)
struct ChainTree {
  int depth = 0;
  Tolerances tol;
  BiorthogonalSystem seed;
  std::vector<std::string> node_order;  // stable enumeration order
  std::map<std::string, ChainNode> nodes;
  std::map<std::string, MetricPair> metrics;          // "0", "1", "2a", "2b"
  std::map<std::string, BiorthogonalSystem> bases;    // "1", "2a", "2b"
  std::map<std::string, std::string> basis_aliases;   // collapsed branches, by description

  const ChainNode& node(const std::string& label) const;  // UnknownNodeLabel
  const MetricPair& metric(const std::string& level_label) const;
};

// Any failure while growing aborts with the partial tree, the failing node or
// metric label, and the wrapped cause.
struct ChainGrowthError : Error {
  ChainGrowthError(const std::string& msg, std::string failing,
                   std::shared_ptr<const ChainTree> tree)
      : Error(msg), failing_label(std::move(failing)), partial(std::move(tree)) {}
  std::string failing_label;
  std::shared_ptr<const ChainTree> partial;
};

// Grow from a numeric seed (build_biorthogonal) or from a caller-supplied
// seed system. 0 <= depth <= 3. Every node is certified before insertion:
// its spectrum matches the seed's (or the conjugate) within
// 10 * tol.eig * max(1, ||node||_F) after sorted matching, and each stored
// eigenvector satisfies its eigen-equation within tol.chain * ||node||_F.
ChainTree grow_chain(const Matrix& h, int depth, const Tolerances& tol = {});
ChainTree grow_chain(const Matrix& h, const BiorthogonalSystem& seed, int depth,
                     const Tolerances& tol = {});

// Relative Frobenius residuals of the closed-form power identities:
//   level 1:  s_phi_1 = s_phi_0^3,  s_psi_1 = s_psi_0^3          (depth >= 2)
//   level 2a: s_phi_2a = s_psi_0^5, s_psi_2a = s_phi_0^5         (depth >= 3)
//   level 2b: s_phi_2b = s_phi_0^7, s_psi_2b = s_psi_0^7         (depth >= 3)
// Throws DepthTooShallow for depth < 2.
std::map<std::string, double> power_identity_residuals(const ChainTree& t);

// ||s a - b s||_F / max(1, ||a||_F).
double intertwine_residual(const Matrix& s, const Matrix& a, const Matrix& b);

}  // namespace isochain
