#include "rbmtopo/bits.hpp"

#include <bit>

#include "rbmtopo/errors.hpp"

namespace rbmtopo {

BitString bits_from_index(std::uint64_t index, int n) {
  BitString out(static_cast<std::size_t>(n));
  bits_from_index(index, out);
  return out;
}

void bits_from_index(std::uint64_t index, std::span<std::uint8_t> out) {
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1U);
  }
}

std::uint64_t index_from_bits(BitView bits) {
  if (bits.size() > 63) throw ContractError("bit string too long for a basis index");
  std::uint64_t index = 0;
  for (auto b : bits) index = (index << 1) | (b & 1U);
  return index;
}

BitString parse_bits(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ContractError("invalid bit character '" + std::string(1, c) + "' in \"" +
                          std::string(text) + "\"");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string format_bits(BitView bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

int hamming_weight(BitView bits) {
  int w = 0;
  for (auto b : bits) w += b ? 1 : 0;
  return w;
}

std::uint64_t qubit_mask(std::span<const int> qubits, int n) {
  std::uint64_t m = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n) throw ContractError("qubit index out of range");
    m ^= qubit_bit(q, n);
  }
  return m;
}

}  // namespace rbmtopo
