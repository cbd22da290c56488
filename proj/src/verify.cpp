#include "rbmtopo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "json.hpp"
#include "rbmtopo/errors.hpp"

namespace rbmtopo {

void compare_amplitudes(const std::vector<Complex>& rbm, const std::vector<Complex>& oracle,
                        VerifyReport& report) {
  if (rbm.size() != oracle.size()) throw ContractError("amplitude lists differ in length");
  std::size_t ref = 0;
  double ref_mag = 0.0;
  double rbm_max = 0.0;
  Complex overlap{0.0, 0.0};
  double norm_r = 0.0;
  double norm_o = 0.0;
  for (std::size_t b = 0; b < oracle.size(); ++b) {
    const double m = std::abs(oracle[b]);
    if (m > ref_mag) {
      ref_mag = m;
      ref = b;
    }
    rbm_max = std::max(rbm_max, std::abs(rbm[b]));
    overlap += std::conj(oracle[b]) * rbm[b];
    norm_r += std::norm(rbm[b]);
    norm_o += std::norm(oracle[b]);
  }
  report.zero_state = false;
  if (ref_mag == 0.0 || rbm_max == 0.0) {
    report.zero_state = ref_mag == 0.0 && rbm_max == 0.0;
    report.fidelity = report.zero_state ? 1.0 : 0.0;
    report.max_aligned_amp_error = report.zero_state ? 0.0 : 1.0;
    report.pass = report.zero_state;
    return;
  }
  report.fidelity = std::norm(overlap) / (norm_r * norm_o);
  const Complex ref_rbm = rbm[ref];
  double err = 0.0;
  if (std::abs(ref_rbm) == 0.0) {
    err = 1.0;
  } else {
    const Complex s = ref_rbm / oracle[ref];
    for (std::size_t b = 0; b < oracle.size(); ++b) err = std::max(err, std::abs(rbm[b] - s * oracle[b]));
    err /= std::abs(ref_rbm);
  }
  report.max_aligned_amp_error = err;
  report.pass = report.fidelity >= 1.0 - report.tol && err <= report.tol;
}

VerifyReport check_network(const RbmNetwork& net, const ModelBundle& bundle, const VerifyOptions& options) {
  if (net.n_visible() != bundle.n()) {
    throw ContractError("network has " + std::to_string(net.n_visible()) + " visibles, oracle has " +
                        std::to_string(bundle.n()));
  }
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport r;
  r.model = bundle.name;
  r.n = net.n_visible();
  r.seed = options.seed;
  r.tol = options.tol;
  r.hidden_count = net.hidden_count();
  r.correlation_terms = bundle.correlation_terms;
  r.bound = bundle.hidden_bound();

  std::vector<Complex> psi;
  std::vector<Complex> ref;
  if (r.n <= options.dense_cap) {
    r.mode = "dense";
    psi = dense_state(net, options.dense_cap).amplitudes;
    ref = bundle.oracle_state(options.dense_cap).amplitudes;
  } else {
    r.mode = "spot";
    std::mt19937_64 rng(options.seed);
    std::vector<BitString> configs;
    configs.emplace_back(static_cast<std::size_t>(r.n), 0);
    configs.emplace_back(static_cast<std::size_t>(r.n), 1);
    for (int s = 0; s < options.spot_samples; ++s) {
      BitString v(static_cast<std::size_t>(r.n));
      for (auto& bit : v) bit = static_cast<std::uint8_t>(rng() & 1U);
      configs.push_back(std::move(v));
    }
    psi.resize(configs.size());
    ref.resize(configs.size());
    for (std::size_t k = 0; k < configs.size(); ++k) {
      psi[k] = amplitude(net, configs[k]);
      ref[k] = bundle.oracle(configs[k]);
    }
  }
  r.samples = psi.size();
  compare_amplitudes(psi, ref, r);
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerifyReport check_bundle(const ModelBundle& bundle, const VerifyOptions& options) {
  return check_network(bundle.rbm, bundle, options);
}

TraceReport check_elimination_trace(const DbmNetwork& dbm, double tol, int max_vars) {
  if (dbm.n_vars > max_vars) {
    throw ResourceError("trace check enumerates " + std::to_string(dbm.n_vars) +
                        " variables, limit " + std::to_string(max_vars));
  }
  const Elimination e = eliminate_with_trace(dbm, true);
  TraceReport report;
  DenseState before = dbm_dense(e.snapshots.front(), max_vars);
  for (std::size_t k = 0; k < e.steps.size(); ++k) {
    DenseState after = dbm_dense(e.snapshots[k + 1], max_vars);
    double scale = 0.0;
    double err = 0.0;
    for (std::size_t b = 0; b < before.size(); ++b) {
      scale = std::max(scale, std::abs(before.amplitudes[b]));
      err = std::max(err, std::abs(before.amplitudes[b] - after.amplitudes[b]));
    }
    TraceStepCheck check{e.steps[k], scale > 0.0 ? err / scale : err, false};
    check.pass = check.max_error <= tol;
    report.pass = report.pass && check.pass;
    report.steps.push_back(std::move(check));
    before = std::move(after);
  }
  // The closed form must reproduce the last snapshot as well.
  const DenseState closed = dense_closed_form(e.state, max_vars);
  double scale = 0.0;
  double err = 0.0;
  for (std::size_t b = 0; b < before.size(); ++b) {
    scale = std::max(scale, std::abs(before.amplitudes[b]));
    err = std::max(err, std::abs(before.amplitudes[b] - e.scale * closed.amplitudes[b]));
  }
  TraceStepCheck final_check{{-1, -1, "closed-form"}, scale > 0.0 ? err / scale : err, false};
  final_check.pass = final_check.max_error <= tol;
  report.pass = report.pass && final_check.pass;
  report.steps.push_back(std::move(final_check));
  return report;
}

ResourceReport resource_report(const RbmNetwork& net, int correlation_terms, std::string terms_label) {
  ResourceReport r;
  r.n = net.n_visible();
  r.hidden = net.hidden_count();
  r.weights = net.weight_count();
  r.density = (r.hidden && r.n) ? static_cast<double>(r.weights) / (static_cast<double>(r.hidden) * r.n) : 0.0;
  r.correlation_terms = correlation_terms;
  r.terms_label = std::move(terms_label);
  r.bound = 8L * (correlation_terms + r.n);
  r.within_bound = static_cast<long>(r.hidden) <= r.bound;
  return r;
}

ResourceReport resource_report(const ModelBundle& bundle) {
  return resource_report(bundle.rbm, bundle.correlation_terms, bundle.terms_label);
}

RbmNetwork perturb_weight(const RbmNetwork& net, std::size_t hidden_index, std::size_t weight_index,
                          Complex delta) {
  std::vector<HiddenUnit> hidden(net.hidden().begin(), net.hidden().end());
  if (hidden_index >= hidden.size() || weight_index >= hidden[hidden_index].weights.size()) {
    throw ContractError("no weight (" + std::to_string(hidden_index) + ", " + std::to_string(weight_index) + ")");
  }
  hidden[hidden_index].weights[weight_index].value += delta;
  return RbmNetwork(net.n_visible(), {net.visible_biases().begin(), net.visible_biases().end()},
                    std::move(hidden), net.log_scale());
}

std::string report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["model"] = r.model;
  j["n"] = r.n;
  j["mode"] = r.mode;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["fidelity"] = r.fidelity;
  j["max_aligned_amp_error"] = r.max_aligned_amp_error;
  j["zero_state"] = r.zero_state;
  j["hidden_count"] = r.hidden_count;
  j["correlation_terms"] = r.correlation_terms;
  j["bound"] = r.bound;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  return j.dump(2);
}

std::string resource_json(const ResourceReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["hidden"] = r.hidden;
  j["weights"] = r.weights;
  j["density"] = r.density;
  j["correlation_terms"] = r.correlation_terms;
  j["terms_label"] = r.terms_label;
  j["bound"] = r.bound;
  j["within_bound"] = r.within_bound;
  return j.dump(2);
}

std::string report_table(const std::vector<VerifyReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "model" << std::right << std::setw(5) << "n" << std::setw(7)
      << "mode" << std::setw(9) << "hidden" << std::setw(8) << "bound" << std::setw(14) << "1-fidelity"
      << std::setw(12) << "amp_err" << std::setw(10) << "time_s" << "  result\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(16) << r.model << std::right << std::setw(5) << r.n << std::setw(7)
        << r.mode << std::setw(9) << r.hidden_count << std::setw(8) << r.bound << std::setw(14)
        << std::setprecision(3) << std::scientific << std::max(0.0, 1.0 - r.fidelity) << std::setw(12)
        << r.max_aligned_amp_error << std::setw(10) << std::fixed << r.elapsed << "  "
        << (r.pass ? "PASS" : "FAIL") << (r.zero_state ? " (zero state)" : "") << "\n";
    out.unsetf(std::ios::floatfield);
  }
  return out.str();
}

}  // namespace rbmtopo
