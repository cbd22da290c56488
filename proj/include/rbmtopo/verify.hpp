#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbmtopo/clifford.hpp"
#include "rbmtopo/models.hpp"
#include "rbmtopo/rbm.hpp"

namespace rbmtopo {

struct VerifyOptions {
  double tol = 1e-9;
  int dense_cap = kDefaultDenseCap;
  std::uint64_t seed = 0;
  int spot_samples = 10000;  // random configurations in spot-check mode
};

struct VerifyReport {
  std::string model;
  int n = 0;
  std::string mode;  // "dense" or "spot"
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double fidelity = 0.0;
  // max |psi(v) - s * oracle(v)| / |psi(ref)| with s = psi(ref) / oracle(ref)
  // at the largest oracle amplitude.
  double max_aligned_amp_error = 0.0;
  bool zero_state = false;  // both sides vanish identically
  std::size_t hidden_count = 0;
  int correlation_terms = 0;
  long bound = 0;
  double elapsed = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// Compares net against the bundle's oracle: densely when n <= dense_cap,
// otherwise on all-zeros, all-ones and spot_samples seeded random inputs.
VerifyReport check_network(const RbmNetwork& net, const ModelBundle& bundle,
                           const VerifyOptions& options = {});
VerifyReport check_bundle(const ModelBundle& bundle, const VerifyOptions& options = {});

// Metrics for two amplitude lists over the same configurations.
void compare_amplitudes(const std::vector<Complex>& rbm, const std::vector<Complex>& oracle,
                        VerifyReport& report);

struct TraceStepCheck {
  EliminationStep step;
  double max_error = 0.0;  // relative to the largest amplitude
  bool pass = false;
};

struct TraceReport {
  std::vector<TraceStepCheck> steps;
  bool pass = true;
};

// Brute-force sums before and after every elimination step must agree.
// Throws ResourceError beyond max_vars variables.
TraceReport check_elimination_trace(const DbmNetwork& dbm, double tol = 1e-9, int max_vars = 16);

struct ResourceReport {
  int n = 0;
  std::size_t hidden = 0;
  std::size_t weights = 0;
  double density = 0.0;  // weights / (hidden * n)
  int correlation_terms = 0;
  std::string terms_label;
  long bound = 0;
  bool within_bound = true;
};

ResourceReport resource_report(const ModelBundle& bundle);
ResourceReport resource_report(const RbmNetwork& net, int correlation_terms, std::string terms_label);

// Copy of net with delta added to one hidden-visible weight.
RbmNetwork perturb_weight(const RbmNetwork& net, std::size_t hidden_index, std::size_t weight_index,
                          Complex delta);

// Wall-clock time is left out so identical runs give identical bytes.
std::string report_json(const VerifyReport& report);
std::string resource_json(const ResourceReport& report);
std::string report_table(const std::vector<VerifyReport>& reports);

}  // namespace rbmtopo
