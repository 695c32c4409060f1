#include "isochain/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "isochain/linalg.hpp"

namespace isochain {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  if (ec != std::errc()) throw InvalidSpec("format_double: conversion failed");
  std::string s(buf, ptr);
  // Guarantee a decimal point so integral values stay visibly floating point.
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidSpec(what); }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

double need_num(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number()) bad(std::string("key \"") + key + "\" must be a number");
  return v.get<double>();
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) bad(std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string need_str(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string()) bad(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& v, const char* what) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  bad(std::string(what) + " must be a number or an [re, im] pair");
}

json matrix_json(const Matrix& a) {
  json j;
  j["dim"] = a.rows();
  json entries = json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) entries.push_back(complex_json(a(r, c)));
  }
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from(const json& j, const char* what) {
  const int dim = need_int(j, "dim");
  if (dim < 1 || dim > kMaxDim) bad(std::string(what) + ": dim out of range");
  const json& entries = need(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(dim) * dim) {
    bad(std::string(what) + ": entries must hold dim*dim [re, im] pairs");
  }
  Matrix a(dim, dim);
  size_t k = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = complex_from(entries[k++], "matrix entry");
  }
  return a;
}

json vector_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_json(v(i)));
  return arr;
}

Vector vector_from(const json& arr, const char* what) {
  if (!arr.is_array()) bad(std::string(what) + " must be an array");
  Vector v(static_cast<Eigen::Index>(arr.size()));
  for (size_t i = 0; i < arr.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from(arr[i], what);
  }
  return v;
}

json basis_json(const BiorthogonalSystem& b) {
  json j;
  j["eigenvalues"] = vector_json(b.eigenvalues);
  j["phi"] = matrix_json(b.phi);
  j["psi"] = matrix_json(b.psi);
  j["gram_residual"] = b.gram_residual;
  return j;
}

BiorthogonalSystem basis_from(const json& j, const char* what) {
  BiorthogonalSystem b;
  b.eigenvalues = vector_from(need(j, "eigenvalues"), what);
  b.phi = matrix_from(need(j, "phi"), what);
  b.psi = matrix_from(need(j, "psi"), what);
  b.gram_residual = need_num(j, "gram_residual");
  b.dim = b.phi.rows();
  if (b.eigenvalues.size() != b.dim || b.psi.rows() != b.dim) {
    bad(std::string(what) + ": inconsistent dimensions");
  }
  return b;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || item.key() == k;
    if (!known) bad("unknown key \"" + item.key() + "\"");
  }
}

}  // namespace

std::string matrix_to_json(const Matrix& a) {
  require_square_finite(a, "matrix_to_json");
  return matrix_json(a).dump();
}

Matrix matrix_from_json(const std::string& text) {
  return matrix_from(parse(text), "matrix");
}

void save_matrix(const Matrix& a, const std::string& path) {
  write_text_file(path, matrix_to_json(a) + "\n");
}

Matrix load_matrix(const std::string& path) { return matrix_from_json(read_text_file(path)); }

std::string model_to_json(const ModelSpec& spec) {
  json j;
  j["family"] = family_name(spec);
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Triangular2x2>) {
          j["alpha"] = m.alpha;
          j["e1"] = complex_json(m.e1);
          j["e2"] = complex_json(m.e2);
        } else if constexpr (std::is_same_v<T, HnOpen> || std::is_same_v<T, HnPeriodic>) {
          j["sites"] = m.sites;
          j["t"] = m.t;
          j["g"] = m.g;
        } else if constexpr (std::is_same_v<T, HnImpurity>) {
          j["sites"] = m.sites;
          j["t"] = m.t;
          j["g"] = m.g;
          if (m.x0) j["x0"] = *m.x0;
          j["v"] = m.v;
        } else if constexpr (std::is_same_v<T, HnRandom>) {
          j["sites"] = m.sites;
          j["t"] = m.t;
          j["g"] = m.g;
          j["box"] = m.box;
          j["seed"] = m.seed;
        } else if constexpr (std::is_same_v<T, PtDimer>) {
          j["t"] = m.t;
          j["gamma"] = m.gamma;
        } else {
          static_assert(std::is_same_v<T, RlChain>);
          j["cells"] = m.cells;
          j["t"] = m.t;
          j["delta"] = m.delta;
          j["gamma"] = m.gamma;
        }
      },
      spec);
  return j.dump(2);
}

ModelSpec model_from_json(const std::string& text) {
  const json j = parse(text);
  const std::string family = need_str(j, "family");

  const auto opt_num = [&](const char* key, double fallback) {
    return j.contains(key) ? need_num(j, key) : fallback;
  };
  const auto opt_int = [&](const char* key, int fallback) {
    return j.contains(key) ? need_int(j, key) : fallback;
  };

  if (family == "triangular2x2") {
    reject_unknown_keys(j, {"family", "alpha", "e1", "e2"});
    Triangular2x2 m;
    m.alpha = opt_num("alpha", m.alpha);
    if (j.contains("e1")) m.e1 = complex_from(j.at("e1"), "e1");
    if (j.contains("e2")) m.e2 = complex_from(j.at("e2"), "e2");
    return m;
  }
  if (family == "hn_open") {
    reject_unknown_keys(j, {"family", "sites", "t", "g"});
    HnOpen m;
    m.sites = opt_int("sites", m.sites);
    m.t = opt_num("t", m.t);
    m.g = opt_num("g", m.g);
    return m;
  }
  if (family == "hn_periodic") {
    reject_unknown_keys(j, {"family", "sites", "t", "g"});
    HnPeriodic m;
    m.sites = opt_int("sites", m.sites);
    m.t = opt_num("t", m.t);
    m.g = opt_num("g", m.g);
    return m;
  }
  if (family == "hn_impurity") {
    reject_unknown_keys(j, {"family", "sites", "t", "g", "x0", "v"});
    HnImpurity m;
    m.sites = opt_int("sites", m.sites);
    m.t = opt_num("t", m.t);
    m.g = opt_num("g", m.g);
    if (j.contains("x0")) m.x0 = need_int(j, "x0");
    m.v = opt_num("v", m.v);
    return m;
  }
  if (family == "hn_random") {
    reject_unknown_keys(j, {"family", "sites", "t", "g", "box", "seed"});
    HnRandom m;
    m.sites = opt_int("sites", m.sites);
    m.t = opt_num("t", m.t);
    m.g = opt_num("g", m.g);
    m.box = opt_num("box", m.box);
    if (j.contains("seed")) {
      const json& v = j.at("seed");
      if (!v.is_number_integer() && !v.is_number_unsigned()) bad("key \"seed\" must be an integer");
      m.seed = v.get<std::uint64_t>();
    }
    return m;
  }
  if (family == "pt_dimer") {
    reject_unknown_keys(j, {"family", "t", "gamma"});
    PtDimer m;
    m.t = opt_num("t", m.t);
    m.gamma = opt_num("gamma", m.gamma);
    return m;
  }
  if (family == "rl_chain") {
    reject_unknown_keys(j, {"family", "cells", "t", "delta", "gamma"});
    RlChain m;
    m.cells = opt_int("cells", m.cells);
    m.t = opt_num("t", m.t);
    m.delta = opt_num("delta", m.delta);
    m.gamma = opt_num("gamma", m.gamma);
    return m;
  }
  bad("unknown model family \"" + family + "\"");
}

namespace {

json tolerances_json(const Tolerances& t) {
  json j;
  j["eig"] = t.eig;
  j["gap"] = t.gap;
  j["inv"] = t.inv;
  j["sqrt"] = t.sqrt;
  j["herm"] = t.herm;
  j["pd"] = t.pd;
  j["cond_max"] = t.cond_max;
  j["bio"] = t.bio;
  j["metric"] = t.metric;
  j["chain"] = t.chain;
  j["real"] = t.real;
  return j;
}

Tolerances tolerances_from(const json& j) {
  Tolerances t;
  t.eig = need_num(j, "eig");
  t.gap = need_num(j, "gap");
  t.inv = need_num(j, "inv");
  t.sqrt = need_num(j, "sqrt");
  t.herm = need_num(j, "herm");
  t.pd = need_num(j, "pd");
  t.cond_max = need_num(j, "cond_max");
  t.bio = need_num(j, "bio");
  t.metric = need_num(j, "metric");
  t.chain = need_num(j, "chain");
  t.real = need_num(j, "real");
  return t;
}

}  // namespace

std::string chain_to_json(const ChainTree& t) {
  json j;
  j["format"] = "isochain-tree-v1";
  j["depth"] = t.depth;
  j["tolerances"] = tolerances_json(t.tol);
  j["seed"] = basis_json(t.seed);
  j["node_order"] = t.node_order;

  json nodes;
  for (const std::string& label : t.node_order) {
    const ChainNode& n = t.node(label);
    json nj;
    nj["parent"] = n.parent;
    nj["metric"] = n.metric_label;
    nj["class"] = to_string(n.conj_class);
    nj["hamiltonian"] = matrix_json(n.hamiltonian);
    nj["eigenvalues"] = vector_json(n.eigenvalues);
    nj["eigenvectors"] = matrix_json(n.eigenvectors);
    nj["max_residual"] = n.max_residual;
    nodes[label] = std::move(nj);
  }
  j["nodes"] = std::move(nodes);

  json metrics;
  for (const auto& [level, m] : t.metrics) {
    json mj;
    mj["s_phi"] = matrix_json(m.s_phi);
    mj["s_psi"] = matrix_json(m.s_psi);
    mj["inv_residual"] = m.inv_residual;
    mj["cond_phi"] = m.cond_phi;
    metrics[level] = std::move(mj);
  }
  j["metrics"] = std::move(metrics);

  json bases;
  for (const auto& [level, b] : t.bases) bases[level] = basis_json(b);
  j["bases"] = std::move(bases);

  json aliases;
  for (const auto& [key, value] : t.basis_aliases) aliases[key] = value;
  j["aliases"] = std::move(aliases);
  return j.dump();
}

ChainTree chain_from_json(const std::string& text) {
  const json j = parse(text);
  if (need_str(j, "format") != "isochain-tree-v1") bad("unsupported tree format tag");

  ChainTree t;
  t.depth = need_int(j, "depth");
  t.tol = tolerances_from(need(j, "tolerances"));
  t.seed = basis_from(need(j, "seed"), "seed");

  const json& order = need(j, "node_order");
  if (!order.is_array()) bad("node_order must be an array");
  for (const json& v : order) {
    if (!v.is_string()) bad("node_order entries must be strings");
    t.node_order.push_back(v.get<std::string>());
  }

  const json& nodes = need(j, "nodes");
  for (const std::string& label : t.node_order) {
    if (!nodes.contains(label)) bad("node_order lists \"" + label + "\" but nodes does not");
    const json& nj = nodes.at(label);
    ChainNode n;
    n.label = label;
    n.parent = need_str(nj, "parent");
    n.metric_label = need_str(nj, "metric");
    n.conj_class = conj_class_from_string(need_str(nj, "class"));
    n.hamiltonian = matrix_from(need(nj, "hamiltonian"), "node hamiltonian");
    n.eigenvalues = vector_from(need(nj, "eigenvalues"), "node eigenvalues");
    n.eigenvectors = matrix_from(need(nj, "eigenvectors"), "node eigenvectors");
    n.max_residual = need_num(nj, "max_residual");
    t.nodes.emplace(label, std::move(n));
  }
  if (t.nodes.size() != nodes.size()) bad("nodes holds labels missing from node_order");

  const json& metrics = need(j, "metrics");
  for (const auto& item : metrics.items()) {
    MetricPair m;
    m.level_label = item.key();
    m.s_phi = matrix_from(need(item.value(), "s_phi"), "metric s_phi");
    m.s_psi = matrix_from(need(item.value(), "s_psi"), "metric s_psi");
    m.inv_residual = need_num(item.value(), "inv_residual");
    m.cond_phi = need_num(item.value(), "cond_phi");
    t.metrics.emplace(item.key(), std::move(m));
  }

  const json& bases = need(j, "bases");
  for (const auto& item : bases.items()) {
    t.bases.emplace(item.key(), basis_from(item.value(), "bases"));
  }

  const json& aliases = need(j, "aliases");
  for (const auto& item : aliases.items()) {
    if (!item.value().is_string()) bad("alias values must be strings");
    t.basis_aliases.emplace(item.key(), item.value().get<std::string>());
  }
  return t;
}

void save_chain(const ChainTree& t, const std::string& path) {
  write_text_file(path, chain_to_json(t) + "\n");
}

ChainTree load_chain(const std::string& path) { return chain_from_json(read_text_file(path)); }

std::string report_to_json(const VerificationReport& r) {
  json j;
  j["spectrum_class"] = to_string(r.spectrum_class);
  j["pseudo_hermitian"] = r.pseudo_hermitian;
  j["all_passed"] = r.all_passed();
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["residual"] = c.residual;
    cj["tolerance"] = c.tolerance;
    cj["passed"] = c.passed;
    cj["asserted"] = c.asserted;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  return j.dump(2);
}

std::string spectrum_csv(const Vector& eigenvalues) {
  std::string out = "n,re,im\n";
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    out += std::to_string(i + 1) + "," + format_double(eigenvalues(i).real()) + "," +
           format_double(eigenvalues(i).imag()) + "\n";
  }
  return out;
}

std::string heatmap_csv(const Matrix& a) {
  std::string out = "row,col,re,im\n";
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out += std::to_string(r + 1) + "," + std::to_string(c + 1) + "," +
             format_double(a(r, c).real()) + "," + format_double(a(r, c).imag()) + "\n";
    }
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) bad("cannot write file: " + path);
  out << content;
  if (!out.good()) bad("write failed: " + path);
}

}  // namespace isochain
