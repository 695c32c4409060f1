// Command line front end over the isochain library.
//
// Subcommands: spectrum (eigenvalues as CSV), chain (grow the tree, emit
// JSON), verify (invariant suites, report JSON, exit 1 on failure), heatmap
// (one node's entries as CSV), sweep (disorder statistics as CSV).
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 invalid configuration or unknown label, 3 numerical failure.
#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isochain/isochain.hpp"

namespace {

using nlohmann::ordered_json;
using namespace isochain;

struct ModelCli {
  std::string config;        // path to a model JSON document
  std::string family;        // family name, overrides the config's
  ordered_json overrides;    // parameter flags, merged over the document
};

void add_model_options(CLI::App* cmd, ModelCli& mc) {
  cmd->add_option("--config", mc.config, "model JSON document to load");
  cmd->add_option("--family", mc.family,
                  "model family: triangular2x2, hn_open, hn_periodic, hn_impurity, "
                  "hn_random, pt_dimer, rl_chain");
  const auto num = [cmd, &mc](const char* flag, const char* key, const char* help) {
    cmd->add_option_function<double>(
        flag, [&mc, key](const double& v) { mc.overrides[key] = v; }, help);
  };
  const auto integer = [cmd, &mc](const char* flag, const char* key, const char* help) {
    cmd->add_option_function<int>(
        flag, [&mc, key](const int& v) { mc.overrides[key] = v; }, help);
  };
  const auto pair = [cmd, &mc](const char* flag, const char* key, const char* help) {
    cmd->add_option_function<std::vector<double>>(
            flag,
            [&mc, key](const std::vector<double>& v) {
              mc.overrides[key] = ordered_json::array({v[0], v[1]});
            },
            help)
        ->expected(2);
  };
  integer("--sites", "sites", "number of lattice sites");
  integer("--cells", "cells", "number of two-site cells");
  integer("--x0", "x0", "impurity site, 1-based");
  num("--t", "t", "hopping amplitude");
  num("--g", "g", "hopping asymmetry exponent");
  num("--v", "v", "impurity potential");
  num("--box", "box", "disorder half-width");
  num("--alpha", "alpha", "off-diagonal coefficient of the triangular model");
  num("--gamma", "gamma", "gain/loss amplitude");
  num("--delta", "delta", "hopping alternation");
  pair("--e1", "e1", "first eigenvalue as re im");
  pair("--e2", "e2", "second eigenvalue as re im");
  cmd->add_option_function<std::uint64_t>(
      "--seed", [&mc](const std::uint64_t& v) { mc.overrides["seed"] = v; },
      "disorder seed");
}

void add_tol_options(CLI::App* cmd, Tolerances& tol) {
  cmd->add_option("--tol-eig", tol.eig, "eigenpair residual tolerance");
  cmd->add_option("--tol-gap", tol.gap, "minimal eigenvalue separation");
  cmd->add_option("--tol-inv", tol.inv, "inverse residual tolerance");
  cmd->add_option("--tol-sqrt", tol.sqrt, "square-root reconstruction tolerance");
  cmd->add_option("--tol-herm", tol.herm, "hermiticity tolerance");
  cmd->add_option("--tol-pd", tol.pd, "positive-definiteness floor");
  cmd->add_option("--tol-cond-max", tol.cond_max, "condition number ceiling");
  cmd->add_option("--tol-bio", tol.bio, "biorthogonality Gram tolerance");
  cmd->add_option("--tol-metric", tol.metric, "metric pair tolerance");
  cmd->add_option("--tol-chain", tol.chain, "per-node certificate tolerance");
  cmd->add_option("--tol-real", tol.real, "spectrum classification tolerance");
}

bool model_given(const ModelCli& mc) { return !mc.config.empty() || !mc.family.empty(); }

ModelSpec resolve_model(const ModelCli& mc) {
  ordered_json j = ordered_json::object();
  if (!mc.config.empty()) {
    try {
      j = ordered_json::parse(read_text_file(mc.config));
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidSpec(std::string("config: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidSpec("config: document must be a JSON object");
  }
  if (!mc.family.empty()) j["family"] = mc.family;
  if (!j.contains("family")) {
    throw InvalidSpec("no model selected: pass --config or --family");
  }
  for (const auto& item : mc.overrides.items()) j[item.key()] = item.value();
  return model_from_json(j.dump());
}

ChainTree make_tree(const ModelSpec& spec, int depth, const std::string& basis,
                    const Tolerances& tol) {
  const Matrix h = build_model(spec);
  if (basis == "numeric") return grow_chain(h, depth, tol);
  if (basis == "analytic") return grow_chain(h, analytic_biorthogonal(spec, tol), depth, tol);
  try {
    return grow_chain(h, analytic_biorthogonal(spec, tol), depth, tol);
  } catch (const NoClosedForm&) {
    return grow_chain(h, depth, tol);
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_text_file(out_path, text);
  }
}

int run_sweep(const ModelSpec& spec, int draws, const Tolerances& tol,
              const std::string& out_path) {
  const auto* base = std::get_if<HnRandom>(&spec);
  if (base == nullptr) throw InvalidSpec("sweep: model family must be hn_random");
  std::string csv = "seed,n_real,n_complex,pseudo_hermitian\n";
  for (int i = 0; i < draws; ++i) {
    HnRandom draw = *base;
    draw.seed = base->seed + static_cast<std::uint64_t>(i);
    const Matrix h = build_model(draw);
    const Vector ev = spectrum(h);
    const double thresh = tol.real * (1.0 + spectral_radius_of(ev));
    int n_real = 0;
    for (Eigen::Index n = 0; n < ev.size(); ++n) {
      if (std::abs(ev(n).imag()) <= thresh) ++n_real;
    }
    // pseudo-Hermitian: H is a fixed point of sharp under its own level-0
    // metrics; 0 when the metrics cannot be constructed for this draw
    bool pseudo = false;
    try {
      const BiorthogonalSystem b = build_biorthogonal(h, tol);
      const MetricPair m = build_metrics(b, "0", tol);
      pseudo = (sharp(h, m) - h).norm() <= tol.metric * std::max(1.0, h.norm());
    } catch (const Error&) {
      pseudo = false;
    }
    csv += std::to_string(draw.seed) + "," + std::to_string(n_real) + "," +
           std::to_string(static_cast<int>(ev.size()) - n_real) + "," +
           (pseudo ? "1" : "0") + "\n";
  }
  emit(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isospectral operator chains from biorthogonal metric pairs"};
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);

  ModelCli mc;
  Tolerances tol;
  int depth = 3;
  std::string seed_basis = "auto";
  std::string out_path;
  std::string chain_path;
  std::string node_label = "H";
  int draws = 100;

  CLI::App* sp = app.add_subcommand("spectrum", "eigenvalues of one model as CSV");
  CLI::App* ch = app.add_subcommand("chain", "grow the isospectral tree, emit JSON");
  CLI::App* vf = app.add_subcommand("verify", "run the invariant suites, emit a report");
  CLI::App* hm = app.add_subcommand("heatmap", "entries of one tree node as CSV");
  CLI::App* sw = app.add_subcommand("sweep", "per-seed real-eigenvalue counts as CSV");

  for (CLI::App* cmd : {sp, ch, vf, hm, sw}) {
    add_model_options(cmd, mc);
    add_tol_options(cmd, tol);
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  }
  for (CLI::App* cmd : {ch, vf, hm}) {
    cmd->add_option("--depth", depth, "tree depth, 0 to 3")->check(CLI::Range(0, 3));
    cmd->add_option("--seed-basis", seed_basis,
                    "eigensystem source: closed form, numeric solve, or auto fallback")
        ->check(CLI::IsMember({"auto", "analytic", "numeric"}));
  }
  for (CLI::App* cmd : {vf, hm}) {
    cmd->add_option("--chain", chain_path, "load a serialized tree instead of growing one");
  }
  hm->add_option("--node", node_label, "tree node label, for example flat0 or sharp1dag");
  sw->add_option("--draws", draws, "number of consecutive seeds")->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sp->parsed()) {
      emit(out_path, spectrum_csv(spectrum(build_model(resolve_model(mc)))));
      return 0;
    }
    if (ch->parsed()) {
      const ChainTree tree = make_tree(resolve_model(mc), depth, seed_basis, tol);
      emit(out_path, chain_to_json(tree) + "\n");
      return 0;
    }
    if (vf->parsed()) {
      ChainTree tree = chain_path.empty()
                           ? make_tree(resolve_model(mc), depth, seed_basis, tol)
                           : load_chain(chain_path);
      VerificationReport rep = full_suite(tree, tol);
      if (model_given(mc)) {
        const std::vector<std::string> notes = family_notes(resolve_model(mc), tree);
        rep.notes.insert(rep.notes.end(), notes.begin(), notes.end());
      }
      emit(out_path, report_to_json(rep) + "\n");
      return rep.all_passed() ? 0 : 1;
    }
    if (hm->parsed()) {
      const ChainTree tree = chain_path.empty()
                                 ? make_tree(resolve_model(mc), depth, seed_basis, tol)
                                 : load_chain(chain_path);
      emit(out_path, heatmap_csv(tree.node(node_label).hamiltonian));
      return 0;
    }
    if (sw->parsed()) {
      return run_sweep(resolve_model(mc), draws, tol, out_path);
    }
  } catch (const InvalidSpec& e) {
    std::fprintf(stderr, "isochain: %s\n", e.what());
    return 2;
  } catch (const UnknownNodeLabel& e) {
    std::fprintf(stderr, "isochain: %s\n", e.what());
    return 2;
  } catch (const NoClosedForm& e) {
    std::fprintf(stderr, "isochain: %s\n", e.what());
    return 2;
  } catch (const UnsupportedSymmetry& e) {
    std::fprintf(stderr, "isochain: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "isochain: %s\n", e.what());
    return 3;
  }
  return 0;
}
