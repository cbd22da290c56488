#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rbmtopo {

using Complex = std::complex<double>;

// Visible configuration v = (v_0, ..., v_{n-1}) with entries in {0,1}.
using BitString = std::vector<std::uint8_t>;
using BitView = std::span<const std::uint8_t>;

// Basis index <-> bits. Big-endian: v_0 is the most significant bit.
BitString bits_from_index(std::uint64_t index, int n);
void bits_from_index(std::uint64_t index, std::span<std::uint8_t> out);
std::uint64_t index_from_bits(BitView bits);

// Accepts only '0'/'1' characters.
BitString parse_bits(std::string_view text);
std::string format_bits(BitView bits);

int hamming_weight(BitView bits);

// Bit mask (big-endian positions) selecting the given qubits of an n-qubit index.
std::uint64_t qubit_mask(std::span<const int> qubits, int n);
inline std::uint64_t qubit_bit(int q, int n) { return std::uint64_t{1} << (n - 1 - q); }

}  // namespace rbmtopo
