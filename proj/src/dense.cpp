#include "rbmtopo/dense.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/kernels.hpp"

namespace rbmtopo {

DenseState::DenseState(int n_qubits, std::vector<Complex> amps) : n(n_qubits), amplitudes(std::move(amps)) {
  if (n < 0 || n > 62 || amplitudes.size() != (std::size_t{1} << n)) {
    throw ContractError("dense state needs exactly 2^n amplitudes");
  }
}

DenseState DenseState::zeros(int n_qubits) {
  if (n_qubits < 0 || n_qubits > 40) throw ResourceError("dense state too large");
  return DenseState(n_qubits, std::vector<Complex>(std::size_t{1} << n_qubits));
}

double DenseState::norm2() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s;
}

bool DenseState::is_zero() const {
  return std::all_of(amplitudes.begin(), amplitudes.end(), [](Complex a) { return a == Complex{}; });
}

std::size_t DenseState::support_size(double rel_threshold) const {
  double peak = 0.0;
  for (const auto& a : amplitudes) peak = std::max(peak, std::abs(a));
  if (peak == 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(amplitudes.begin(), amplitudes.end(), [&](Complex a) {
    return std::abs(a) > rel_threshold * peak;
  }));
}

int dense_cap_from_env() {
  if (const char* env = std::getenv("RBMTOPO_DENSE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 40) return static_cast<int>(v);
  }
  return kDefaultDenseCap;
}

void check_dense_cap(int n, int cap) {
  if (n > cap) {
    throw ResourceError("dense enumeration of " + std::to_string(n) + " qubits exceeds cap " +
                        std::to_string(cap));
  }
}

DenseState dense_state(const RbmNetwork& net, int cap, double zero_threshold) {
  check_dense_cap(net.n_visible(), cap);
  DenseState out = DenseState::zeros(net.n_visible());
  kernels::enumerate_amplitudes(net, out.amplitudes, zero_threshold);
  return out;
}

double fidelity(const DenseState& a, const DenseState& b) {
  if (a.n != b.n) throw ContractError("fidelity of states with different qubit counts");
  const double na = a.norm2();
  const double nb = b.norm2();
  if (na == 0.0 || nb == 0.0) throw NumericError("fidelity of a zero-norm state");
  Complex overlap{};
  for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::norm(overlap) / (na * nb);
}

}  // namespace rbmtopo
