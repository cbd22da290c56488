#include "rbmtopo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rbmtopo/errors.hpp"

namespace rbmtopo {

namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string pair(Complex z) { return "[" + num(z.real()) + ", " + num(z.imag()) + "]"; }

Complex read_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(std::string(what) + " must be [re, im]", 0);
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

void check_bit_order(const json& j) {
  if (j.contains("bit_order") && j["bit_order"] != "big_endian") {
    throw ParseError("unsupported bit_order (expected \"big_endian\")", 0);
  }
}

}  // namespace

std::string rbm_to_json(const RbmNetwork& net, const std::string& source_json) {
  std::ostringstream out;
  out << "{\n  \"n\": " << net.n_visible() << ",\n  \"bit_order\": \"big_endian\",\n";
  out << "  \"log_scale\": " << pair(net.log_scale()) << ",\n  \"visible_biases\": [";
  const auto biases = net.visible_biases();
  for (std::size_t i = 0; i < biases.size(); ++i) out << (i ? ", " : "") << pair(biases[i]);
  out << "],\n  \"hidden\": [";
  const auto hidden = net.hidden();
  for (std::size_t j = 0; j < hidden.size(); ++j) {
    out << (j ? ",\n" : "\n") << "    {\"bias\": " << pair(hidden[j].bias) << ", \"weights\": [";
    const auto& w = hidden[j].weights;
    for (std::size_t k = 0; k < w.size(); ++k) {
      out << (k ? ", " : "") << "[" << w[k].visible << ", " << num(w[k].value.real()) << ", "
          << num(w[k].value.imag()) << "]";
    }
    out << "]}";
  }
  out << (hidden.empty() ? "]" : "\n  ]");
  if (!source_json.empty()) out << ",\n  \"source\": " << source_json;
  out << "\n}\n";
  return out.str();
}

RbmFile rbm_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("RBM file must be a JSON object", 0);
  check_bit_order(j);
  for (const char* key : {"n", "visible_biases", "hidden", "log_scale"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"", 0);
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0) throw ParseError("\"n\" must be a non-negative integer", 0);
  const int n = j["n"].get<int>();
  if (!j["visible_biases"].is_array() || j["visible_biases"].size() != static_cast<std::size_t>(n)) {
    throw ParseError("\"visible_biases\" must have n entries", 0);
  }
  std::vector<Complex> biases;
  for (const auto& a : j["visible_biases"]) biases.push_back(read_complex(a, "visible bias"));
  if (!j["hidden"].is_array()) throw ParseError("\"hidden\" must be an array", 0);
  std::vector<HiddenUnit> hidden;
  for (const auto& h : j["hidden"]) {
    if (!h.is_object() || !h.contains("bias") || !h.contains("weights") || !h["weights"].is_array()) {
      throw ParseError("hidden unit needs \"bias\" and \"weights\"", 0);
    }
    HiddenUnit u;
    u.bias = read_complex(h["bias"], "hidden bias");
    for (const auto& w : h["weights"]) {
      if (!w.is_array() || w.size() != 3 || !w[0].is_number_integer() || !w[1].is_number() ||
          !w[2].is_number()) {
        throw ParseError("weight must be [k, re, im]", 0);
      }
      u.weights.push_back({w[0].get<int>(), {w[1].get<double>(), w[2].get<double>()}});
    }
    hidden.push_back(std::move(u));
  }
  RbmFile file;
  try {
    file.net = RbmNetwork(n, std::move(biases), std::move(hidden), read_complex(j["log_scale"], "log_scale"));
  } catch (const ContractError& e) {
    throw ParseError(e.what(), 0);
  }
  if (j.contains("source")) file.source_json = j["source"].dump();
  return file;
}

std::string dense_to_json(const DenseState& state) {
  std::ostringstream out;
  out << "{\n  \"n\": " << state.n << ",\n  \"bit_order\": \"big_endian\",\n  \"amplitudes\": [";
  for (std::size_t b = 0; b < state.size(); ++b) {
    out << (b ? ",\n    " : "\n    ") << pair(state.amplitudes[b]);
  }
  out << "\n  ]\n}\n";
  return out.str();
}

DenseState dense_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes")) {
    throw ParseError("dense state needs \"n\" and \"amplitudes\"", 0);
  }
  check_bit_order(j);
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer", 0);
  const int n = j["n"].get<int>();
  if (n < 0 || n > 40) throw ParseError("\"n\" out of range", 0);
  const auto& amps = j["amplitudes"];
  if (!amps.is_array() || amps.size() != (std::size_t{1} << n)) {
    throw ParseError("\"amplitudes\" must have 2^n entries", 0);
  }
  std::vector<Complex> values;
  values.reserve(amps.size());
  for (const auto& a : amps) values.push_back(read_complex(a, "amplitude"));
  return DenseState(n, std::move(values));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ContractError("failed writing '" + path + "'");
}

}  // namespace rbmtopo
