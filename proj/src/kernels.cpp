#include "rbmtopo/kernels.hpp"

#include <bit>
#include <cmath>
#include <exception>
#include <numbers>

#include "rbmtopo/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rbmtopo::kernels {

namespace {

using Index = std::int64_t;

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_size(std::span<const Complex> psi, int n) {
  if (n < 0 || n > 62 || psi.size() != (std::size_t{1} << n)) {
    throw ContractError("state vector size does not match qubit count");
  }
}

int log2_size(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) throw ContractError("state size is not a power of two");
  return std::countr_zero(size);
}

}  // namespace

void enumerate_amplitudes(const RbmNetwork& net, std::span<Complex> out, double zero_threshold) {
  const int n = net.n_visible();
  check_size(out, n);
  const Index size = static_cast<Index>(out.size());
  std::exception_ptr failure;
#pragma omp parallel
  {
    BitString v(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (Index idx = 0; idx < size; ++idx) {
      try {
        bits_from_index(static_cast<std::uint64_t>(idx), v);
        out[static_cast<std::size_t>(idx)] = amplitude(net, v, zero_threshold);
      } catch (...) {
#pragma omp critical(rbmtopo_enumerate_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void apply_h(std::span<Complex> psi, int n, int q) {
  check_size(psi, n);
  const std::uint64_t bit = qubit_bit(q, n);
  const Index size = static_cast<Index>(psi.size());
  const double r = std::numbers::sqrt2 / 2.0;
#pragma omp parallel for schedule(static)
  for (Index idx = 0; idx < size; ++idx) {
    const auto i0 = static_cast<std::uint64_t>(idx);
    if (i0 & bit) continue;
    const std::uint64_t i1 = i0 | bit;
    const Complex a = psi[i0];
    const Complex b = psi[i1];
    psi[i0] = r * (a + b);
    psi[i1] = r * (a - b);
  }
}

void apply_s(std::span<Complex> psi, int n, int q) {
  check_size(psi, n);
  const std::uint64_t bit = qubit_bit(q, n);
  const Index size = static_cast<Index>(psi.size());
#pragma omp parallel for schedule(static)
  for (Index idx = 0; idx < size; ++idx) {
    const auto i = static_cast<std::uint64_t>(idx);
    if (i & bit) psi[i] *= Complex(0.0, 1.0);
  }
}

void apply_controlled_z(std::span<Complex> psi, std::uint64_t mask) {
  log2_size(psi.size());
  const Index size = static_cast<Index>(psi.size());
#pragma omp parallel for schedule(static)
  for (Index idx = 0; idx < size; ++idx) {
    const auto i = static_cast<std::uint64_t>(idx);
    if ((i & mask) == mask) psi[i] = -psi[i];
  }
}

void apply_pauli_projector(std::span<Complex> psi, std::uint64_t xmask, std::uint64_t zmask,
                           int phase) {
  log2_size(psi.size());
  const Complex ip = i_power(phase);
  const Index size = static_cast<Index>(psi.size());
  // (P psi)[c] = i^phase (-1)^{z.(c^x)} psi[c^x]; pairs {c, c^x} are disjoint.
#pragma omp parallel for schedule(static)
  for (Index idx = 0; idx < size; ++idx) {
    const auto c = static_cast<std::uint64_t>(idx);
    const std::uint64_t d = c ^ xmask;
    if (d < c) continue;
    const double sc = (std::popcount(zmask & d) & 1) ? -1.0 : 1.0;
    if (d == c) {
      psi[c] = 0.5 * (psi[c] + ip * sc * psi[c]);
      continue;
    }
    const double sd = (std::popcount(zmask & c) & 1) ? -1.0 : 1.0;
    const Complex a = psi[c];
    const Complex b = psi[d];
    psi[c] = 0.5 * (a + ip * sc * b);
    psi[d] = 0.5 * (b + ip * sd * a);
  }
}

namespace serial {

void enumerate_amplitudes(const RbmNetwork& net, std::span<Complex> out, double zero_threshold) {
  const int n = net.n_visible();
  check_size(out, n);
  BitString v(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    bits_from_index(idx, v);
    out[idx] = amplitude(net, v, zero_threshold);
  }
}

void apply_h(std::span<Complex> psi, int n, int q) {
  check_size(psi, n);
  const std::uint64_t bit = qubit_bit(q, n);
  const double r = std::numbers::sqrt2 / 2.0;
  for (std::uint64_t i0 = 0; i0 < psi.size(); ++i0) {
    if (i0 & bit) continue;
    const Complex a = psi[i0];
    const Complex b = psi[i0 | bit];
    psi[i0] = r * (a + b);
    psi[i0 | bit] = r * (a - b);
  }
}

void apply_s(std::span<Complex> psi, int n, int q) {
  check_size(psi, n);
  const std::uint64_t bit = qubit_bit(q, n);
  for (std::uint64_t i = 0; i < psi.size(); ++i) {
    if (i & bit) psi[i] *= Complex(0.0, 1.0);
  }
}

void apply_controlled_z(std::span<Complex> psi, std::uint64_t mask) {
  log2_size(psi.size());
  for (std::uint64_t i = 0; i < psi.size(); ++i) {
    if ((i & mask) == mask) psi[i] = -psi[i];
  }
}

void apply_pauli_projector(std::span<Complex> psi, std::uint64_t xmask, std::uint64_t zmask,
                           int phase) {
  log2_size(psi.size());
  const Complex ip = i_power(phase);
  std::vector<Complex> out(psi.size());
  for (std::uint64_t c = 0; c < psi.size(); ++c) {
    const std::uint64_t d = c ^ xmask;
    const double s = (std::popcount(zmask & d) & 1) ? -1.0 : 1.0;
    out[c] = 0.5 * (psi[c] + ip * s * psi[d]);
  }
  std::copy(out.begin(), out.end(), psi.begin());
}

}  // namespace serial

}  // namespace rbmtopo::kernels
