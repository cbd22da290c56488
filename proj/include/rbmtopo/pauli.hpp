#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rbmtopo/dense.hpp"

namespace rbmtopo {

/// P = i^phase X^x Z^z on n qubits, so Y = i X Z carries one unit of phase.
/// Hermitian strings have (phase - #Y) even and print as +/- followed by
/// I/X/Y/Z letters.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n) : x_(static_cast<std::size_t>(n)), z_(static_cast<std::size_t>(n)) {}

  // "+XZZX", "-YI", "XX" (sign optional).
  static PauliString parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(x_.size()); }
  bool x(int q) const { return x_[static_cast<std::size_t>(q)]; }
  bool z(int q) const { return z_[static_cast<std::size_t>(q)]; }
  int phase() const noexcept { return phase_; }
  void set_x(int q, bool v) { x_[static_cast<std::size_t>(q)] = v; }
  void set_z(int q, bool v) { z_[static_cast<std::size_t>(q)] = v; }
  void add_phase(int k) { phase_ = ((phase_ + k) % 4 + 4) % 4; }

  bool is_hermitian() const;
  // +1 or -1 for Hermitian strings.
  int sign() const;
  std::string to_string() const;

  bool commutes_with(const PauliString& other) const;
  // this <- this * other
  PauliString& operator*=(const PauliString& other);

  // P <- U P U^dagger.
  void conjugate_h(int q);
  void conjugate_s(int q);
  void conjugate_cz(int a, int b);
  void conjugate_cnot(int control, int target);

  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<std::uint8_t> x_;
  std::vector<std::uint8_t> z_;
  int phase_ = 0;
};

DenseState apply_pauli(const DenseState& psi, const PauliString& p);

// Applies (1 + g)/2 for every generator, in order, to a copy of psi.
DenseState project_onto_stabilizers(DenseState psi, const std::vector<PauliString>& generators);

}  // namespace rbmtopo
