#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rbmtopo/bits.hpp"

namespace rbmtopo {

inline constexpr double kDefaultZeroThreshold = 1e-12;
inline constexpr int kDefaultDenseCap = 24;

struct Weight {
  int visible = 0;
  Complex value;
  friend bool operator==(const Weight&, const Weight&) = default;
};

// One hidden neuron: effective angle theta = bias + sum_k W_k v_k.
struct HiddenUnit {
  Complex bias;
  std::vector<Weight> weights;  // sorted by visible index, no duplicates

  Complex angle(BitView v) const;
  friend bool operator==(const HiddenUnit&, const HiddenUnit&) = default;
};

/// Complex RBM wave function over {0,1}-valued visible units:
///
///   psi(v) = exp(log_scale + sum_i a_i v_i) * prod_j (1 + exp(theta_j))
///
/// The log scale collects the normalisation constants of every gadget composed
/// into the network, so amplitudes are exact rather than merely proportional.
class RbmNetwork {
 public:
  RbmNetwork() = default;
  explicit RbmNetwork(int n_visible);
  // Validates indices and finiteness; merges duplicate weights within a unit.
  RbmNetwork(int n_visible, std::vector<Complex> visible_biases, std::vector<HiddenUnit> hidden,
             Complex log_scale);

  int n_visible() const noexcept { return n_visible_; }
  std::span<const Complex> visible_biases() const noexcept { return visible_biases_; }
  std::span<const HiddenUnit> hidden() const noexcept { return hidden_; }
  Complex log_scale() const noexcept { return log_scale_; }

  std::size_t hidden_count() const noexcept { return hidden_.size(); }
  std::size_t weight_count() const noexcept;

  friend bool operator==(const RbmNetwork&, const RbmNetwork&) = default;

 private:
  int n_visible_ = 0;
  std::vector<Complex> visible_biases_;
  std::vector<HiddenUnit> hidden_;
  Complex log_scale_{0.0, 0.0};
};

// Incremental construction; build() validates once at the end.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(int n_visible);

  int n_visible() const noexcept { return n_; }
  NetworkBuilder& add_visible_bias(int i, Complex a);
  NetworkBuilder& add_hidden(HiddenUnit unit);
  NetworkBuilder& add_log_scale(Complex c);
  NetworkBuilder& add(const RbmNetwork& same_size_net);

  RbmNetwork build() const;

 private:
  int n_;
  std::vector<Complex> biases_;
  std::vector<HiddenUnit> hidden_;
  Complex log_scale_{0.0, 0.0};
};

// nullopt is the exact-zero marker: some factor |1 + e^theta| fell below
// zero_threshold * max(1, |e^theta|).
std::optional<Complex> log_amplitude(const RbmNetwork& net, BitView v,
                                     double zero_threshold = kDefaultZeroThreshold);
Complex amplitude(const RbmNetwork& net, BitView v, double zero_threshold = kDefaultZeroThreshold);

// Same visible set: hidden units concatenated, biases and log scales added.
RbmNetwork compose(const RbmNetwork& a, const RbmNetwork& b);
// Disjoint visible sets: b's visibles are shifted by a.n_visible().
RbmNetwork tensor(const RbmNetwork& a, const RbmNetwork& b);
// Relabels visible i as perm[i].
RbmNetwork permute_visibles(const RbmNetwork& net, std::span<const int> perm);

}  // namespace rbmtopo
