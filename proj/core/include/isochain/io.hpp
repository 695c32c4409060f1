#pragma once

#include <string>

#include "isochain/chain.hpp"
#include "isochain/models.hpp"
#include "isochain/types.hpp"
#include "isochain/verify.hpp"

namespace isochain {

// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double x);

// Matrix file format: {"dim": N, "entries": [[re, im], ...]} in row-major
// logical order. Parsers throw InvalidSpec on malformed input.
std::string matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const std::string& text);
void save_matrix(const Matrix& a, const std::string& path);
Matrix load_matrix(const std::string& path);

// Model specification: {"family": ..., <family parameters>}. Complex
// parameters are [re, im] pairs (bare numbers accepted on input).
std::string model_to_json(const ModelSpec& spec);
ModelSpec model_from_json(const std::string& text);

// Full tree state (nodes keyed by label with matrices, eigenvalues as
// [re, im] pairs and residual summaries, plus metrics, seed and promoted
// bases) with stable key order. Round trips exactly: doubles are written
// shortest-round-trip.
std::string chain_to_json(const ChainTree& t);
ChainTree chain_from_json(const std::string& text);
void save_chain(const ChainTree& t, const std::string& path);
ChainTree load_chain(const std::string& path);

// Stable key order, check rows in emission order.
std::string report_to_json(const VerificationReport& r);

// "n,re,im" rows in canonical order, n 1-based.
std::string spectrum_csv(const Vector& eigenvalues);

// "row,col,re,im" rows, 1-based, row-major.
std::string heatmap_csv(const Matrix& a);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace isochain
