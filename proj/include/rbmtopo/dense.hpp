#pragma once

#include <vector>

#include "rbmtopo/bits.hpp"
#include "rbmtopo/rbm.hpp"

namespace rbmtopo {

// Full amplitude vector. amplitudes[index_from_bits(v)] = psi(v), big-endian.
struct DenseState {
  int n = 0;
  std::vector<Complex> amplitudes;

  DenseState() = default;
  DenseState(int n_qubits, std::vector<Complex> amps);
  static DenseState zeros(int n_qubits);

  std::size_t size() const noexcept { return amplitudes.size(); }
  double norm2() const;
  bool is_zero() const;
  std::size_t support_size(double rel_threshold = 1e-12) const;
};

// Cap from RBMTOPO_DENSE_CAP if set and valid, else kDefaultDenseCap.
int dense_cap_from_env();

void check_dense_cap(int n, int cap);

// Enumerates all 2^n amplitudes (unnormalised). Throws ResourceError if n > cap.
DenseState dense_state(const RbmNetwork& net, int cap = kDefaultDenseCap,
                       double zero_threshold = kDefaultZeroThreshold);

// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const DenseState& a, const DenseState& b);

}  // namespace rbmtopo
