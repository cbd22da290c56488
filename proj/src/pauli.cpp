#include "rbmtopo/pauli.hpp"

#include <bit>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/kernels.hpp"

namespace rbmtopo {

PauliString PauliString::parse(std::string_view text) {
  int sign_phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign_phase = text.front() == '-' ? 2 : 0;
    text.remove_prefix(1);
  }
  PauliString p(static_cast<int>(text.size()));
  int ys = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': case '_': break;
      case 'X': p.x_[q] = 1; break;
      case 'Z': p.z_[q] = 1; break;
      case 'Y': p.x_[q] = 1; p.z_[q] = 1; ++ys; break;
      default:
        throw ContractError("invalid Pauli character '" + std::string(1, text[q]) + "'");
    }
  }
  p.phase_ = (sign_phase + ys) % 4;
  return p;
}

bool PauliString::is_hermitian() const {
  int ys = 0;
  for (std::size_t q = 0; q < x_.size(); ++q) ys += (x_[q] && z_[q]) ? 1 : 0;
  return ((phase_ - ys) % 2 + 2) % 2 == 0;
}

int PauliString::sign() const {
  if (!is_hermitian()) throw ContractError("Pauli string is not Hermitian");
  int ys = 0;
  for (std::size_t q = 0; q < x_.size(); ++q) ys += (x_[q] && z_[q]) ? 1 : 0;
  return (((phase_ - ys) % 4 + 4) % 4) == 0 ? 1 : -1;
}

std::string PauliString::to_string() const {
  std::string s(1, sign() > 0 ? '+' : '-');
  for (std::size_t q = 0; q < x_.size(); ++q) {
    s.push_back(x_[q] ? (z_[q] ? 'Y' : 'X') : (z_[q] ? 'Z' : 'I'));
  }
  return s;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.size() != size()) throw ContractError("Pauli strings differ in length");
  int c = 0;
  for (std::size_t q = 0; q < x_.size(); ++q) c += (x_[q] & other.z_[q]) ^ (z_[q] & other.x_[q]);
  return c % 2 == 0;
}

PauliString& PauliString::operator*=(const PauliString& other) {
  if (other.size() != size()) throw ContractError("Pauli strings differ in length");
  // X^a Z^b X^c Z^d = (-1)^{b c} X^{a+c} Z^{b+d}
  int extra = 0;
  for (std::size_t q = 0; q < x_.size(); ++q) extra += z_[q] & other.x_[q];
  add_phase(other.phase_ + 2 * extra);
  for (std::size_t q = 0; q < x_.size(); ++q) {
    x_[q] ^= other.x_[q];
    z_[q] ^= other.z_[q];
  }
  return *this;
}

void PauliString::conjugate_h(int q) {
  auto& x = x_[static_cast<std::size_t>(q)];
  auto& z = z_[static_cast<std::size_t>(q)];
  // Z^x X^z = (-1)^{xz} X^z Z^x
  add_phase(2 * (x & z));
  std::swap(x, z);
}

void PauliString::conjugate_s(int q) {
  // X -> i X Z
  const auto x = x_[static_cast<std::size_t>(q)];
  add_phase(x);
  z_[static_cast<std::size_t>(q)] ^= x;
}

void PauliString::conjugate_cz(int a, int b) {
  // X_a -> X_a Z_b, X_b -> Z_a X_b; (X_a Z_b)(Z_a X_b) = -X_a X_b Z_a Z_b
  const auto xa = x_[static_cast<std::size_t>(a)];
  const auto xb = x_[static_cast<std::size_t>(b)];
  add_phase(2 * (xa & xb));
  z_[static_cast<std::size_t>(b)] ^= xa;
  z_[static_cast<std::size_t>(a)] ^= xb;
}

void PauliString::conjugate_cnot(int control, int target) {
  conjugate_h(target);
  conjugate_cz(control, target);
  conjugate_h(target);
}

std::uint64_t PauliString::x_mask() const {
  const int n = size();
  std::uint64_t m = 0;
  for (int q = 0; q < n; ++q) {
    if (x_[static_cast<std::size_t>(q)]) m |= qubit_bit(q, n);
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  const int n = size();
  std::uint64_t m = 0;
  for (int q = 0; q < n; ++q) {
    if (z_[static_cast<std::size_t>(q)]) m |= qubit_bit(q, n);
  }
  return m;
}

DenseState apply_pauli(const DenseState& psi, const PauliString& p) {
  if (p.size() != psi.n) throw ContractError("Pauli string length does not match state");
  static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::uint64_t xm = p.x_mask();
  const std::uint64_t zm = p.z_mask();
  DenseState out = DenseState::zeros(psi.n);
  for (std::uint64_t b = 0; b < psi.size(); ++b) {
    // X^x Z^z |b> = (-1)^{z.b} |b ^ x>
    const double s = (std::popcount(zm & b) & 1) ? -1.0 : 1.0;
    out.amplitudes[b ^ xm] += ipow[p.phase()] * s * psi.amplitudes[b];
  }
  return out;
}

DenseState project_onto_stabilizers(DenseState psi, const std::vector<PauliString>& generators) {
  for (const auto& g : generators) {
    if (g.size() != psi.n) throw ContractError("generator length does not match state");
    kernels::apply_pauli_projector(psi.amplitudes, g.x_mask(), g.z_mask(), g.phase());
  }
  return psi;
}

}  // namespace rbmtopo
