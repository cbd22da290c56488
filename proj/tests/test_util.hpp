#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "rbmtopo/bits.hpp"
#include "rbmtopo/dense.hpp"
#include "rbmtopo/rbm.hpp"

namespace testutil {

using rbmtopo::BitString;
using rbmtopo::Complex;

inline Complex gauss_complex(std::mt19937_64& rng, double sigma) {
  std::normal_distribution<double> g(0.0, sigma);
  return {g(rng), g(rng)};
}

// Sparse random network with small weights, so no factor comes near zero.
inline rbmtopo::RbmNetwork random_network(std::mt19937_64& rng, int n, int m, double sigma = 0.4) {
  std::bernoulli_distribution keep(0.6);
  std::vector<rbmtopo::HiddenUnit> hidden;
  for (int j = 0; j < m; ++j) {
    rbmtopo::HiddenUnit u;
    u.bias = gauss_complex(rng, sigma);
    for (int k = 0; k < n; ++k) {
      if (keep(rng)) u.weights.push_back({k, gauss_complex(rng, sigma)});
    }
    hidden.push_back(std::move(u));
  }
  std::vector<Complex> biases(static_cast<std::size_t>(n));
  for (auto& a : biases) a = gauss_complex(rng, sigma);
  return rbmtopo::RbmNetwork(n, std::move(biases), std::move(hidden), gauss_complex(rng, sigma));
}

// Direct product form, without logarithms.
inline Complex product_amplitude(const rbmtopo::RbmNetwork& net, const BitString& v) {
  Complex lin = net.log_scale();
  for (int i = 0; i < net.n_visible(); ++i) {
    if (v[static_cast<std::size_t>(i)]) lin += net.visible_biases()[static_cast<std::size_t>(i)];
  }
  Complex prod = std::exp(lin);
  for (const auto& h : net.hidden()) {
    Complex theta = h.bias;
    for (const auto& w : h.weights) {
      if (v[static_cast<std::size_t>(w.visible)]) theta += w.value;
    }
    prod *= 1.0 + std::exp(theta);
  }
  return prod;
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double max_abs(const std::vector<Complex>& a) {
  double m = 0.0;
  for (const auto& z : a) m = std::max(m, std::abs(z));
  return m;
}

// max |a - s b| / max |a| with s fixed at the largest entry of b.
inline double aligned_error(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::size_t ref = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::abs(b[i]) > std::abs(b[ref])) ref = i;
  }
  const Complex s = a[ref] / b[ref];
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - s * b[i]));
  return d / max_abs(a);
}

inline std::vector<BitString> all_configs(int n) {
  std::vector<BitString> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(rbmtopo::bits_from_index(b, n));
  return out;
}

}  // namespace testutil
