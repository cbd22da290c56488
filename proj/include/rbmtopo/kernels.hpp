#pragma once

// Data-parallel inner loops over the 2^n basis. The default versions use
// OpenMP; the serial:: versions are straight loops kept as references for the
// tests and the benchmark.

#include <cstdint>
#include <span>

#include "rbmtopo/bits.hpp"
#include "rbmtopo/rbm.hpp"

namespace rbmtopo::kernels {

// out[idx] = amplitude(net, bits(idx)), out.size() == 2^n.
void enumerate_amplitudes(const RbmNetwork& net, std::span<Complex> out, double zero_threshold);

// Gates act on an n-qubit vector with big-endian qubit order.
void apply_h(std::span<Complex> psi, int n, int q);
void apply_s(std::span<Complex> psi, int n, int q);
// Multiplies by -1 wherever every qubit in mask is 1 (CZ, CCZ, ...).
void apply_controlled_z(std::span<Complex> psi, std::uint64_t mask);

// psi <- (1 + P) psi / 2 for P = i^phase X^xmask Z^zmask.
void apply_pauli_projector(std::span<Complex> psi, std::uint64_t xmask, std::uint64_t zmask,
                           int phase);

namespace serial {
void enumerate_amplitudes(const RbmNetwork& net, std::span<Complex> out, double zero_threshold);
void apply_h(std::span<Complex> psi, int n, int q);
void apply_s(std::span<Complex> psi, int n, int q);
void apply_controlled_z(std::span<Complex> psi, std::uint64_t mask);
void apply_pauli_projector(std::span<Complex> psi, std::uint64_t xmask, std::uint64_t zmask,
                           int phase);
}  // namespace serial

}  // namespace rbmtopo::kernels
