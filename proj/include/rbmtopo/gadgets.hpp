#pragma once

#include <string_view>
#include <vector>

#include "rbmtopo/rbm.hpp"

namespace rbmtopo {

enum class GadgetKind { parity, two_body_phase, hyperedge_phase, cos_pair, indicator };

std::string_view to_string(GadgetKind kind);

// Which root of the cosine-pair quadratic supplies the hidden bias. Both roots
// multiply to 1 and produce the same factor.
enum class Branch { plus, minus };

// A correlation factor realised by a few hidden units plus visible-bias and
// log-scale adjustments. Visible indices are global.
struct Gadget {
  GadgetKind kind = GadgetKind::parity;
  std::vector<int> support;
  std::vector<HiddenUnit> hidden;
  std::vector<Weight> visible_biases;
  Complex log_scale{0.0, 0.0};

  void add_to(NetworkBuilder& builder) const;
  // A network over n visibles whose amplitude is exactly this factor.
  RbmNetwork embed(int n) const;
};

// Parameters for synthesize(); only the fields relevant to `kind` are read.
struct GadgetSpec {
  GadgetKind kind = GadgetKind::parity;
  std::vector<int> support;
  int target = 0;              // parity bit, or Hamming weight for indicator
  double phase = 0.0;          // phi for two_body_phase / hyperedge_phase
  double omega = 1.0;          // cos_pair frequency
  double phase_offset = 0.0;   // cos_pair phi0
  Complex amplitude{1.0, 0.0}; // cos_pair A
  Complex offset{0.0, 0.0};    // cos_pair B
  Branch branch = Branch::plus;
};

Gadget synthesize(const GadgetSpec& spec);

// 1 when (sum_{support} v + target_parity) is even, exactly 0 otherwise.
// One hidden unit: weights i*pi, bias i*pi*target_parity, scale -ln 2.
Gadget parity_gadget(std::vector<int> support, int target_parity = 0);

// exp(i phi v_i v_j). phi = pi uses the W_H constants; phi = 0 (mod 2pi)
// returns an empty gadget.
Gadget two_body_phase(int i, int j, double phi);

// 2A cos(omega * sum v + phi0) + B with two hidden units of weights +-i*omega.
Gadget cos_pair(std::vector<int> support, double omega, double phi0, Complex a, Complex b,
                Branch branch = Branch::plus);

// exp(i phi prod_{support} v). k=3, phi=pi uses the closed two-neuron
// decomposition; general k factors a Lagrange-style polynomial in
// t = cos(2 pi (s - k) / (k + 1)) into cosine pairs, at most 2k+4 hidden units.
Gadget hyperedge_phase(std::vector<int> support, double phi);

// The explicit k=3, phi=pi gadget: linear prefactor e^{i pi sum v} and
// cos_pair(A=2/3, B=1/3, omega=4pi/3, phi0=-pi/3), b = ln((1 +- i sqrt 15)/4).
Gadget ccz_gadget(std::vector<int> support, Branch branch = Branch::plus);

// 1 if sum_{support} v == m, else 0.
Gadget indicator_weight(std::vector<int> support, int m);

// Upper bound on hidden units used by hyperedge_phase for a k-hyperedge.
inline constexpr int hyperedge_hidden_bound(int k) { return 2 * k + 4; }

}  // namespace rbmtopo
