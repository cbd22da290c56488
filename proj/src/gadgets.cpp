#include "rbmtopo/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/polynomial.hpp"

namespace rbmtopo {

namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kGadgetTolerance = 1e-9;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_support(const std::vector<int>& support) {
  std::set<int> seen;
  for (int i : support) {
    if (i < 0) throw ContractError("gadget support contains negative index " + std::to_string(i));
    if (!seen.insert(i).second) {
      throw ContractError("gadget support contains duplicate index " + std::to_string(i));
    }
  }
}

// phi reduced into [0, 2pi); values within 1e-12 of 2pi wrap to 0.
double reduce_phase(double phi) {
  if (!std::isfinite(phi)) throw ContractError("non-finite phase");
  double r = std::fmod(phi, 2.0 * pi);
  if (r < 0.0) r += 2.0 * pi;
  if (2.0 * pi - r < 1e-12) r = 0.0;
  return r;
}

HiddenUnit uniform_unit(const std::vector<int>& support, Complex weight, Complex bias) {
  HiddenUnit unit;
  unit.bias = bias;
  unit.weights.reserve(support.size());
  for (int i : support) unit.weights.push_back({i, weight});
  return unit;
}

int embed_size(const Gadget& g) {
  int n = 0;
  for (int i : g.support) n = std::max(n, i + 1);
  return n;
}

// Checks the emitted factor against target(s) for every Hamming weight s of
// the support (all factors here are symmetric in their support).
template <typename Target>
void verify_symmetric(const Gadget& g, Target target, std::string_view what) {
  const int n = embed_size(g);
  const RbmNetwork net = g.embed(n);
  BitString v(static_cast<std::size_t>(n), 0);
  for (std::size_t s = 0; s <= g.support.size(); ++s) {
    if (s > 0) v[static_cast<std::size_t>(g.support[s - 1])] = 1;
    const Complex got = amplitude(net, v);
    const Complex want = target(static_cast<int>(s));
    if (std::abs(got - want) > kGadgetTolerance) {
      std::ostringstream msg;
      msg << what << " synthesis failed on " << g.support.size() << " visibles: factor at weight " << s
          << " is " << got << ", expected " << want << " (" << g.hidden.size() << " hidden units)";
      throw SynthesisError(msg.str());
    }
  }
}

// Emits lead * prod_m (t - r_m), t = cos(omega s + phi0), as one cosine pair
// per root.
void emit_polynomial(Gadget& g, const poly::Poly& p, double omega, double phi0) {
  const poly::Poly trimmed = poly::trim(p, 1e-14);
  if (trimmed.empty()) throw SynthesisError("cannot realise the zero polynomial as a gadget");
  const auto roots = poly::roots(trimmed);
  g.log_scale += std::log(trimmed.back());
  for (const auto& r : roots) {
    const Gadget pair = cos_pair(g.support, omega, phi0, 0.5, -r);
    g.hidden.insert(g.hidden.end(), pair.hidden.begin(), pair.hidden.end());
    g.log_scale += pair.log_scale;
  }
}

// Distinct values of cos(omega s + phi0) for s in [0, k], s != skip.
std::vector<double> distinct_nodes(int k, double omega, double phi0, int skip) {
  std::vector<double> nodes;
  for (int s = 0; s <= k; ++s) {
    if (s == skip) continue;
    nodes.push_back(std::cos(omega * s + phi0));
  }
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> unique;
  for (double t : nodes) {
    if (unique.empty() || std::abs(t - unique.back()) > 1e-9) unique.push_back(t);
  }
  return unique;
}

// prod_tau (t - tau) / (1 - tau): 1 at t = 1, 0 at every node.
poly::Poly lagrange_top(const std::vector<double>& nodes) {
  poly::Poly p{Complex{1.0, 0.0}};
  for (double tau : nodes) {
    p = poly::multiply(p, {Complex{-tau / (1.0 - tau), 0.0}, Complex{1.0 / (1.0 - tau), 0.0}});
  }
  return p;
}

}  // namespace

std::string_view to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::parity: return "parity";
    case GadgetKind::two_body_phase: return "two_body_phase";
    case GadgetKind::hyperedge_phase: return "hyperedge_phase";
    case GadgetKind::cos_pair: return "cos_pair";
    case GadgetKind::indicator: return "indicator";
  }
  return "unknown";
}

void Gadget::add_to(NetworkBuilder& builder) const {
  for (const auto& b : visible_biases) builder.add_visible_bias(b.visible, b.value);
  for (const auto& h : hidden) builder.add_hidden(h);
  builder.add_log_scale(log_scale);
}

RbmNetwork Gadget::embed(int n) const {
  NetworkBuilder builder(n);
  add_to(builder);
  return builder.build();
}

Gadget synthesize(const GadgetSpec& spec) {
  switch (spec.kind) {
    case GadgetKind::parity:
      return parity_gadget(spec.support, spec.target);
    case GadgetKind::two_body_phase:
      if (spec.support.size() != 2) throw ContractError("two_body_phase needs exactly two visibles");
      return two_body_phase(spec.support[0], spec.support[1], spec.phase);
    case GadgetKind::hyperedge_phase:
      return hyperedge_phase(spec.support, spec.phase);
    case GadgetKind::cos_pair:
      return cos_pair(spec.support, spec.omega, spec.phase_offset, spec.amplitude, spec.offset,
                      spec.branch);
    case GadgetKind::indicator:
      return indicator_weight(spec.support, spec.target);
  }
  throw ContractError("unknown gadget kind");
}

Gadget parity_gadget(std::vector<int> support, int target_parity) {
  if (support.empty()) throw ContractError("parity gadget needs a nonempty support");
  if (target_parity != 0 && target_parity != 1) throw ContractError("target parity must be 0 or 1");
  check_support(support);
  Gadget g;
  g.kind = GadgetKind::parity;
  g.hidden.push_back(uniform_unit(support, kI * pi, kI * pi * static_cast<double>(target_parity)));
  g.log_scale = -std::log(2.0);
  g.support = std::move(support);
  return g;
}

Gadget two_body_phase(int i, int j, double phi) {
  if (i == j) throw ContractError("two_body_phase needs distinct visibles");
  Gadget g;
  g.kind = GadgetKind::two_body_phase;
  g.support = {i, j};
  check_support(g.support);
  const double r = reduce_phase(phi);
  if (r < 1e-12) return g;

  if (std::abs(r - pi) < 1e-12) {
    // W_H(v,h) = i pi v h - i pi v / 2 - i pi h / 4 + (i pi / 8 - ln 2 / 2) per
    // visible; the pair sums to (-1)^{v_i v_j} / sqrt 2, rescaled here to
    // (-1)^{v_i v_j}.
    g.hidden.push_back(uniform_unit(g.support, kI * pi, -kI * pi / 2.0));
    g.visible_biases = {{i, -kI * pi / 2.0}, {j, -kI * pi / 2.0}};
    g.log_scale = 2.0 * (kI * pi / 8.0 - std::log(2.0) / 2.0) + 0.5 * std::log(2.0);
    return g;
  }

  // e^{c + a s}(1 + x e^{i pi s}) with x = i tan(phi/4), a = i phi / 2,
  // e^c = 1 / (1 + x) gives (1, 1, e^{i phi}) at s = 0, 1, 2.
  const Complex x = kI * std::tan(r / 4.0);
  g.hidden.push_back(uniform_unit(g.support, kI * pi, std::log(x)));
  g.visible_biases = {{i, kI * r / 2.0}, {j, kI * r / 2.0}};
  g.log_scale = -std::log(1.0 + x);
  if (!finite(g.log_scale) || !finite(g.hidden.front().bias)) {
    throw SynthesisError("two_body_phase has no finite solution for phi = " + std::to_string(phi));
  }
  return g;
}

Gadget cos_pair(std::vector<int> support, double omega, double phi0, Complex a, Complex b,
                Branch branch) {
  check_support(support);
  if (a == Complex{}) throw ContractError("cos_pair amplitude A must be nonzero");
  if (!finite(a) || !finite(b) || !std::isfinite(omega) || !std::isfinite(phi0)) {
    throw ContractError("cos_pair parameters must be finite");
  }
  // e^{c+b} = A and e^c (1 + e^{2b}) = B, so e^b solves A r^2 - B r + A = 0.
  const Complex disc = std::sqrt(b * b - 4.0 * a * a);
  auto solve = [&](Branch br) {
    const Complex r = (b + (br == Branch::plus ? disc : -disc)) / (2.0 * a);
    return std::log(r);
  };
  Complex bias = solve(branch);
  if (!finite(bias)) {
    bias = solve(branch == Branch::plus ? Branch::minus : Branch::plus);
  }
  const Complex scale = std::log(a) - bias;
  if (!finite(bias) || !finite(scale)) {
    std::ostringstream msg;
    msg << "cos_pair synthesis failed: no finite bias for A=" << a << ", B=" << b;
    throw SynthesisError(msg.str());
  }
  Gadget g;
  g.kind = GadgetKind::cos_pair;
  g.hidden.push_back(uniform_unit(support, kI * omega, bias + kI * phi0));
  g.hidden.push_back(uniform_unit(support, -kI * omega, bias - kI * phi0));
  g.log_scale = scale;
  g.support = std::move(support);
  return g;
}

Gadget ccz_gadget(std::vector<int> support, Branch branch) {
  if (support.size() != 3) throw ContractError("ccz_gadget needs exactly three visibles");
  Gadget g = cos_pair(support, 4.0 * pi / 3.0, -pi / 3.0, 2.0 / 3.0, 1.0 / 3.0, branch);
  g.kind = GadgetKind::hyperedge_phase;
  for (int i : g.support) g.visible_biases.push_back({i, kI * pi});
  return g;
}

Gadget hyperedge_phase(std::vector<int> support, double phi) {
  if (support.empty()) throw ContractError("hyperedge needs at least one visible");
  check_support(support);
  const int k = static_cast<int>(support.size());
  const double r = reduce_phase(phi);

  if (r < 1e-12) {
    Gadget g;
    g.kind = GadgetKind::hyperedge_phase;
    g.support = std::move(support);
    return g;
  }
  if (k == 1) {
    Gadget g;
    g.kind = GadgetKind::hyperedge_phase;
    g.visible_biases = {{support[0], kI * r}};
    g.support = std::move(support);
    return g;
  }
  if (k == 2) {
    Gadget g = two_body_phase(support[0], support[1], r);
    g.kind = GadgetKind::hyperedge_phase;
    return g;
  }
  if (k == 3 && std::abs(r - pi) < 1e-12) return ccz_gadget(std::move(support));

  // t(s) = cos(2 pi (s - k) / (k + 1)) equals 1 only at s = k. With
  // f(t) = prod (t - t_i) / (1 - t_i) over the distinct t_i, i < k, the target
  // is g(t) = 1 + (e^{i phi} - 1) f(t), factored into linear terms in t.
  const double omega = 2.0 * pi / (k + 1);
  const double phi0 = -omega * k;
  const auto nodes = distinct_nodes(k, omega, phi0, k);
  poly::Poly target = lagrange_top(nodes);
  const Complex jump = std::exp(kI * r) - 1.0;
  for (auto& c : target) c *= jump;
  target[0] += 1.0;

  Gadget g;
  g.kind = GadgetKind::hyperedge_phase;
  g.support = std::move(support);
  emit_polynomial(g, target, omega, phi0);
  verify_symmetric(g, [&](int s) { return s == k ? std::exp(kI * r) : Complex{1.0, 0.0}; },
                   "hyperedge_phase");
  return g;
}

Gadget indicator_weight(std::vector<int> support, int m) {
  check_support(support);
  const int k = static_cast<int>(support.size());
  if (m < 0 || m > k) {
    throw ContractError("indicator weight " + std::to_string(m) + " outside [0, " +
                        std::to_string(k) + "]");
  }
  Gadget g;
  g.kind = GadgetKind::indicator;
  if (k == 0) {
    g.support = std::move(support);
    return g;
  }
  if (k == 3 && m == 1) {
    // (-1)^{s} (-1/3 + 2/3 cos(4 pi s / 3 - pi / 3))
    Gadget pair = cos_pair(support, 4.0 * pi / 3.0, -pi / 3.0, 1.0 / 3.0, -1.0 / 3.0);
    pair.kind = GadgetKind::indicator;
    for (int i : pair.support) pair.visible_biases.push_back({i, kI * pi});
    verify_symmetric(pair, [](int s) { return s == 1 ? 1.0 : 0.0; }, "indicator_weight");
    return pair;
  }
  const double omega = 2.0 * pi / (k + 1);
  const double phi0 = -omega * m;
  const auto nodes = distinct_nodes(k, omega, phi0, m);
  g.support = std::move(support);
  emit_polynomial(g, lagrange_top(nodes), omega, phi0);
  verify_symmetric(g, [&](int s) { return s == m ? 1.0 : 0.0; }, "indicator_weight");
  return g;
}

}  // namespace rbmtopo
