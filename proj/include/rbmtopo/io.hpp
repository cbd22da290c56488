#pragma once

#include <optional>
#include <string>

#include "rbmtopo/dense.hpp"
#include "rbmtopo/rbm.hpp"

namespace rbmtopo {

/// RBM file:
///   { "n": int, "bit_order": "big_endian", "log_scale": [re, im],
///     "visible_biases": [[re, im], ...],
///     "hidden": [ { "bias": [re, im], "weights": [[k, re, im], ...] }, ... ],
///     "source": { ... } }
/// Numbers are written with 17 significant digits so a read-back network is
/// bit-identical. "source" is optional and passed through verbatim.
std::string rbm_to_json(const RbmNetwork& net, const std::string& source_json = {});

struct RbmFile {
  RbmNetwork net;
  std::optional<std::string> source_json;  // compact JSON text
};

RbmFile rbm_from_json(const std::string& text);

// { "n": int, "bit_order": "big_endian", "amplitudes": [[re, im], ...] }
std::string dense_to_json(const DenseState& state);
DenseState dense_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rbmtopo
