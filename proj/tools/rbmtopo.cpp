// Command-line front end: build, verify, inspect and convert RBM networks.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or input error, 3 synthesis error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbmtopo/clifford.hpp"
#include "rbmtopo/errors.hpp"
#include "rbmtopo/io.hpp"
#include "rbmtopo/models.hpp"
#include "rbmtopo/phase_poly.hpp"
#include "rbmtopo/verify.hpp"

using namespace rbmtopo;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSynthesis = 3;

struct SizeFlags {
  std::map<std::string, int> values;
  std::vector<std::pair<std::string, int>> given() const { return {values.begin(), values.end()}; }
};

// Rebuilds the bundle a file was built from.
ModelBundle bundle_from_source(const nlohmann::json& src) {
  const std::string kind = src.value("kind", "");
  if (kind == "model") {
    std::vector<std::pair<std::string, int>> params;
    for (const auto& [k, v] : src.at("params").items()) params.emplace_back(k, v.get<int>());
    return build_model(src.at("name").get<std::string>(), params);
  }
  if (kind == "hypergraph") {
    Hypergraph hg{src.at("n").get<int>(), src.at("edges").get<std::vector<std::vector<int>>>()};
    return hypergraph_state(hg);
  }
  if (kind == "circuit") {
    std::istringstream in(src.at("text").get<std::string>());
    return circuit_bundle(parse_circuit(in));
  }
  if (kind == "stabilizers") {
    StabilizerGenerators gens;
    for (const auto& s : src.at("generators")) gens.generators.push_back(PauliString::parse(s.get<std::string>()));
    gens.n = gens.generators.empty() ? 0 : gens.generators.front().size();
    return stabilizer_bundle(gens);
  }
  throw ContractError("unknown source kind '" + kind + "'");
}


int run_build(const std::optional<std::string>& model, const std::optional<std::string>& hg_file,
              const std::optional<std::string>& circuit_file, const std::optional<std::string>& stab_file,
              const SizeFlags& sizes, const std::string& out_path) {
  const int sources = model.has_value() + hg_file.has_value() + circuit_file.has_value() + stab_file.has_value();
  if (sources != 1) throw ContractError("build needs exactly one of --model, --hypergraph, --circuit, --stabilizers");
  if (!model && !sizes.values.empty()) throw ContractError("size flags apply only to --model");

  const auto t0 = std::chrono::steady_clock::now();
  ModelBundle bundle;
  ordered_json source;
  if (model) {
    bundle = build_model(*model, sizes.given());
    source["kind"] = "model";
    source["name"] = *model;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : bundle.params) params[k] = v;
    source["params"] = params;
  } else if (hg_file) {
    std::istringstream in(read_text_file(*hg_file));
    const Hypergraph hg = parse_hypergraph(in);
    bundle = hypergraph_state(hg);
    source["kind"] = "hypergraph";
    source["n"] = hg.n;
    source["edges"] = hg.edges;
  } else if (circuit_file) {
    std::istringstream in(read_text_file(*circuit_file));
    const CliffordCircuit c = parse_circuit(in);
    bundle = circuit_bundle(c);
    source["kind"] = "circuit";
    source["text"] = format_circuit(c);
  } else {
    std::istringstream in(read_text_file(*stab_file));
    const StabilizerGenerators gens = parse_stabilizers(in);
    bundle = stabilizer_bundle(gens);
    source["kind"] = "stabilizers";
    ordered_json list = ordered_json::array();
    for (const auto& g : gens.generators) list.push_back(g.to_string());
    source["generators"] = list;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string text = rbm_to_json(bundle.rbm, source.dump());
  std::ostream& info = out_path.empty() ? std::cerr : std::cout;
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
  info << "model " << bundle.name << ": visible " << bundle.n() << ", hidden " << bundle.rbm.hidden_count()
       << ", weights " << bundle.rbm.weight_count() << ", build " << seconds << " s\n";
  return 0;
}

int run_verify(const std::string& rbm_path, const std::string& oracle, double tol, std::uint64_t seed,
               const std::string& format, const std::string& report_path) {
  const RbmFile file = rbm_from_json(read_text_file(rbm_path));
  VerifyOptions opts;
  opts.tol = tol;
  opts.seed = seed;
  opts.dense_cap = dense_cap_from_env();

  ModelBundle bundle;
  if (oracle == "auto") {
    if (!file.source_json) throw ContractError("'" + rbm_path + "' has no source; pass --oracle FILE");
    bundle = bundle_from_source(nlohmann::json::parse(*file.source_json));
  } else {
    auto state = std::make_shared<DenseState>(dense_from_json(read_text_file(oracle)));
    bundle.name = "file";
    bundle.rbm = RbmNetwork(state->n);
    bundle.dense_oracle = [state] { return *state; };
    bundle.oracle = [state](BitView v) { return state->amplitudes[index_from_bits(v)]; };
    bundle.correlation_terms = 0;
  }
  if (bundle.n() != file.net.n_visible()) {
    throw ContractError("oracle has " + std::to_string(bundle.n()) + " qubits, network has " +
                        std::to_string(file.net.n_visible()));
  }
  if (oracle != "auto" && file.net.n_visible() > opts.dense_cap) {
    throw ResourceError("dense oracle file larger than the dense cap");
  }
  const VerifyReport report = check_network(file.net, bundle, opts);
  if (format == "table" || format == "both") std::cout << report_table({report});
  if (format == "json" || format == "both") std::cout << report_json(report) << "\n";
  if (!report_path.empty()) write_text_file(report_path, report_json(report) + "\n");
  return report.pass ? 0 : kExitFail;
}

int run_amp(const std::string& rbm_path, const std::string& basis) {
  const RbmFile file = rbm_from_json(read_text_file(rbm_path));
  const BitString v = parse_bits(basis);
  if (static_cast<int>(v.size()) != file.net.n_visible()) {
    throw ContractError("basis has " + std::to_string(v.size()) + " bits, network has " +
                        std::to_string(file.net.n_visible()));
  }
  const auto log = log_amplitude(file.net, v);
  if (!log) {
    std::cout << "0 0\n";
    return 0;
  }
  const Complex a = std::exp(*log);
  std::printf("%.17g %.17g\n", a.real(), a.imag());
  return 0;
}

int run_stats(const std::string& rbm_path, bool as_json) {
  const RbmFile file = rbm_from_json(read_text_file(rbm_path));
  int terms = 0;
  std::string label = "unknown (no source)";
  if (file.source_json) {
    const ModelBundle b = bundle_from_source(nlohmann::json::parse(*file.source_json));
    terms = b.correlation_terms;
    label = b.terms_label;
  }
  const ResourceReport r = resource_report(file.net, terms, label);
  if (as_json) {
    std::cout << resource_json(r) << "\n";
    return 0;
  }
  std::cout << "visible          " << r.n << "\n"
            << "hidden           " << r.hidden << "\n"
            << "weights          " << r.weights << "\n"
            << "density          " << r.density << "\n";
  if (file.source_json) {
    std::cout << "N_e              " << r.correlation_terms << " (" << r.terms_label << ")\n"
              << "bound 8(N_e+n)   " << r.bound << (r.within_bound ? "  within" : "  EXCEEDED") << "\n";
  }
  return 0;
}

int run_export(const std::string& rbm_path, const std::string& format, const std::string& out_path) {
  const RbmFile file = rbm_from_json(read_text_file(rbm_path));
  std::string text;
  if (format == "rbm") {
    text = rbm_to_json(file.net, file.source_json.value_or(""));
  } else {
    text = dense_to_json(dense_state(file.net, dense_cap_from_env()));
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
  return 0;
}

int run_fit(const std::string& support_path, int n) {
  std::istringstream in(read_text_file(support_path));
  std::vector<BitString> support;
  std::vector<int> signs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string bits;
    std::string sign;
    if (!(ss >> bits)) continue;
    if (!(ss >> sign)) throw ParseError("expected '<bits> <sign>'", line_no);
    BitString v;
    try {
      v = parse_bits(bits);
    } catch (const ContractError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (static_cast<int>(v.size()) != n) throw ParseError("bitstring length differs from --n", line_no);
    if (sign == "+1" || sign == "1" || sign == "+") {
      signs.push_back(1);
    } else if (sign == "-1" || sign == "-") {
      signs.push_back(-1);
    } else {
      throw ParseError("sign must be +1 or -1", line_no);
    }
    support.push_back(std::move(v));
  }
  ClosedFormState state(n);
  state.phase = fit_cubic_phase(support, signs, n);
  std::cout << format_closed_form(state);
  return 0;
}

int run_list_models() {
  for (const auto& m : model_registry()) {
    std::cout << m.name << "  ";
    for (const auto& [k, v] : m.defaults) std::cout << "--" << k << ' ' << v << ' ';
    std::cout << " " << m.summary << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile quantum states to exact RBM networks and verify them."};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Compile a model, hypergraph, circuit or stabilizer set");
  std::optional<std::string> model, hg_file, circuit_file, stab_file;
  std::string out_path;
  SizeFlags sizes;
  std::map<std::string, int> size_raw;
  build->add_option("--model", model, "Named model (see list-models)");
  build->add_option("--hypergraph", hg_file, "Hypergraph file")->check(CLI::ExistingFile);
  build->add_option("--circuit", circuit_file, "Circuit file")->check(CLI::ExistingFile);
  build->add_option("--stabilizers", stab_file, "Stabilizer generator file")->check(CLI::ExistingFile);
  for (const char* key : {"lx", "ly", "l", "n", "k"}) {
    build->add_option(std::string("--") + key, size_raw[key], std::string("Model size parameter ") + key);
  }
  build->add_option("-o,--output", out_path, "Output RBM JSON (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check an RBM file against an oracle");
  std::string rbm_path;
  std::string oracle = "auto";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "both";
  std::string report_path;
  verify->add_option("rbm", rbm_path, "RBM JSON file")->required()->check(CLI::ExistingFile);
  verify->add_option("--oracle", oracle, "'auto' (rebuild from source) or a dense-state JSON file");
  verify->add_option("--tol", tol, "Tolerance on 1-fidelity and aligned amplitude error")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for spot checks");
  verify->add_option("--format", format, "table, json or both")->check(CLI::IsMember({"table", "json", "both"}));
  verify->add_option("--report", report_path, "Also write the JSON report here");

  auto* amp = app.add_subcommand("amp", "Print the amplitude of one basis state");
  std::string basis;
  amp->add_option("rbm", rbm_path, "RBM JSON file")->required()->check(CLI::ExistingFile);
  amp->add_option("--basis", basis, "Bitstring, qubit 0 first")->required();

  auto* stats = app.add_subcommand("stats", "Neuron and weight counts with the resource bound");
  bool stats_json = false;
  stats->add_option("rbm", rbm_path, "RBM JSON file")->required()->check(CLI::ExistingFile);
  stats->add_flag("--json", stats_json, "Emit JSON");

  auto* exp = app.add_subcommand("export", "Rewrite an RBM file or expand it to a dense state");
  std::string export_format = "rbm";
  exp->add_option("rbm", rbm_path, "RBM JSON file")->required()->check(CLI::ExistingFile);
  exp->add_option("--format", export_format, "rbm or dense")->check(CLI::IsMember({"rbm", "dense"}));
  exp->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* fit = app.add_subcommand("fit", "Fit a cubic sign polynomial to '<bits> <+1|-1>' lines");
  std::string support_path;
  int fit_n = 0;
  fit->add_option("--support", support_path, "Support file")->required()->check(CLI::ExistingFile);
  fit->add_option("--n", fit_n, "Number of bits")->required()->check(CLI::NonNegativeNumber);

  auto* list = app.add_subcommand("list-models", "List named models and their default sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      for (const auto& [key, value] : size_raw) {
        if (build->count("--" + key)) sizes.values[key] = value;
      }
      return run_build(model, hg_file, circuit_file, stab_file, sizes, out_path);
    }
    if (*verify) return run_verify(rbm_path, oracle, tol, seed, format, report_path);
    if (*amp) return run_amp(rbm_path, basis);
    if (*stats) return run_stats(rbm_path, stats_json);
    if (*exp) return run_export(rbm_path, export_format, out_path);
    if (*fit) return run_fit(support_path, fit_n);
    if (*list) return run_list_models();
  } catch (const SynthesisError& e) {
    std::cerr << "synthesis error: " << e.what() << "\n";
    return kExitSynthesis;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitSynthesis;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed source metadata: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
