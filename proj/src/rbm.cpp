#include "rbmtopo/rbm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rbmtopo/errors.hpp"

namespace rbmtopo {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void normalize_unit(HiddenUnit& unit, int n) {
  auto& w = unit.weights;
  for (const auto& e : w) {
    if (e.visible < 0 || e.visible >= n) {
      throw ContractError("hidden unit references visible " + std::to_string(e.visible) +
                          " outside [0, " + std::to_string(n) + ")");
    }
    if (!finite(e.value)) throw ContractError("non-finite hidden weight");
  }
  if (!finite(unit.bias)) throw ContractError("non-finite hidden bias");
  std::sort(w.begin(), w.end(), [](const Weight& a, const Weight& b) { return a.visible < b.visible; });
  std::vector<Weight> merged;
  merged.reserve(w.size());
  for (const auto& e : w) {
    if (!merged.empty() && merged.back().visible == e.visible) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  w = std::move(merged);
}

}  // namespace

Complex HiddenUnit::angle(BitView v) const {
  Complex theta = bias;
  for (const auto& e : weights) {
    if (v[static_cast<std::size_t>(e.visible)]) theta += e.value;
  }
  return theta;
}

RbmNetwork::RbmNetwork(int n_visible)
    : n_visible_(n_visible), visible_biases_(static_cast<std::size_t>(std::max(n_visible, 0))) {
  if (n_visible < 0) throw ContractError("negative visible count");
}

RbmNetwork::RbmNetwork(int n_visible, std::vector<Complex> visible_biases,
                       std::vector<HiddenUnit> hidden, Complex log_scale)
    : n_visible_(n_visible),
      visible_biases_(std::move(visible_biases)),
      hidden_(std::move(hidden)),
      log_scale_(log_scale) {
  if (n_visible < 0) throw ContractError("negative visible count");
  if (visible_biases_.size() != static_cast<std::size_t>(n_visible)) {
    throw ContractError("visible bias count " + std::to_string(visible_biases_.size()) +
                        " does not match n_visible " + std::to_string(n_visible));
  }
  for (auto a : visible_biases_) {
    if (!finite(a)) throw ContractError("non-finite visible bias");
  }
  if (!finite(log_scale_)) throw ContractError("non-finite log scale");
  for (auto& unit : hidden_) normalize_unit(unit, n_visible);
}

std::size_t RbmNetwork::weight_count() const noexcept {
  std::size_t total = 0;
  for (const auto& h : hidden_) total += h.weights.size();
  return total;
}

NetworkBuilder::NetworkBuilder(int n_visible)
    : n_(n_visible), biases_(static_cast<std::size_t>(std::max(n_visible, 0))) {
  if (n_visible < 0) throw ContractError("negative visible count");
}

NetworkBuilder& NetworkBuilder::add_visible_bias(int i, Complex a) {
  if (i < 0 || i >= n_) throw ContractError("visible bias index out of range");
  biases_[static_cast<std::size_t>(i)] += a;
  return *this;
}

NetworkBuilder& NetworkBuilder::add_hidden(HiddenUnit unit) {
  hidden_.push_back(std::move(unit));
  return *this;
}

NetworkBuilder& NetworkBuilder::add_log_scale(Complex c) {
  log_scale_ += c;
  return *this;
}

NetworkBuilder& NetworkBuilder::add(const RbmNetwork& net) {
  if (net.n_visible() != n_) throw ContractError("cannot add network of different visible size");
  for (int i = 0; i < n_; ++i) biases_[static_cast<std::size_t>(i)] += net.visible_biases()[i];
  hidden_.insert(hidden_.end(), net.hidden().begin(), net.hidden().end());
  log_scale_ += net.log_scale();
  return *this;
}

RbmNetwork NetworkBuilder::build() const { return RbmNetwork(n_, biases_, hidden_, log_scale_); }

std::optional<Complex> log_amplitude(const RbmNetwork& net, BitView v, double zero_threshold) {
  if (v.size() != static_cast<std::size_t>(net.n_visible())) {
    throw ContractError("configuration length " + std::to_string(v.size()) +
                        " does not match n_visible " + std::to_string(net.n_visible()));
  }
  Complex total = net.log_scale();
  const auto biases = net.visible_biases();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) total += biases[i];
  }
  for (const auto& unit : net.hidden()) {
    const Complex theta = unit.angle(v);
    // ln(1 + e^theta), evaluated on the side where |e^{+-theta}| <= 1.
    if (theta.real() <= 0.0) {
      const Complex f = 1.0 + std::exp(theta);
      if (std::abs(f) < zero_threshold) return std::nullopt;
      total += std::log(f);
    } else {
      const Complex g = 1.0 + std::exp(-theta);
      if (std::abs(g) < zero_threshold) return std::nullopt;
      total += theta + std::log(g);
    }
  }
  if (!std::isfinite(total.real()) || !std::isfinite(total.imag())) {
    throw NumericError("non-finite log amplitude");
  }
  return total;
}

Complex amplitude(const RbmNetwork& net, BitView v, double zero_threshold) {
  const auto la = log_amplitude(net, v, zero_threshold);
  if (!la) return {0.0, 0.0};
  const Complex a = std::exp(*la);
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
    throw NumericError("amplitude overflows double precision");
  }
  return a;
}

RbmNetwork compose(const RbmNetwork& a, const RbmNetwork& b) {
  if (a.n_visible() != b.n_visible()) {
    throw ContractError("compose requires equal visible counts (" + std::to_string(a.n_visible()) +
                        " vs " + std::to_string(b.n_visible()) + ")");
  }
  NetworkBuilder builder(a.n_visible());
  builder.add(a).add(b);
  return builder.build();
}

RbmNetwork tensor(const RbmNetwork& a, const RbmNetwork& b) {
  const int shift = a.n_visible();
  std::vector<Complex> biases(a.visible_biases().begin(), a.visible_biases().end());
  biases.insert(biases.end(), b.visible_biases().begin(), b.visible_biases().end());
  std::vector<HiddenUnit> hidden(a.hidden().begin(), a.hidden().end());
  for (HiddenUnit unit : b.hidden()) {
    for (auto& w : unit.weights) w.visible += shift;
    hidden.push_back(std::move(unit));
  }
  return RbmNetwork(shift + b.n_visible(), std::move(biases), std::move(hidden),
                    a.log_scale() + b.log_scale());
}

RbmNetwork permute_visibles(const RbmNetwork& net, std::span<const int> perm) {
  const int n = net.n_visible();
  if (perm.size() != static_cast<std::size_t>(n)) throw ContractError("permutation size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw ContractError("not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<Complex> biases(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) biases[static_cast<std::size_t>(perm[i])] = net.visible_biases()[i];
  std::vector<HiddenUnit> hidden(net.hidden().begin(), net.hidden().end());
  for (auto& unit : hidden) {
    for (auto& w : unit.weights) w.visible = perm[static_cast<std::size_t>(w.visible)];
  }
  return RbmNetwork(n, std::move(biases), std::move(hidden), net.log_scale());
}

}  // namespace rbmtopo
