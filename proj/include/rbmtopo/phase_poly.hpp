#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbmtopo/dense.hpp"
#include "rbmtopo/rbm.hpp"

namespace rbmtopo {

/// Phase alpha^{l(v)} i^{q(v)} (-1)^{c(v)} alpha^{constant}, alpha = e^{i pi/4}.
///
/// Linear coefficients live mod 8, quadratic mod 4, cubic mod 2, so each
/// monomial's contribution on {0,1} inputs is well defined. Everything is
/// tracked in units of pi/4: a quadratic coefficient q adds 2q, a cubic one 4c.
/// Repeated indices collapse (v_i^2 = v_i) into the lower-degree term.
class PhasePolynomial {
 public:
  using Pair = std::pair<int, int>;
  using Triple = std::array<int, 3>;

  PhasePolynomial() = default;
  explicit PhasePolynomial(int n) : n_(n) {}

  int n() const noexcept { return n_; }
  void add_constant(int c);
  void add_linear(int i, int c);
  void add_quadratic(int i, int j, int c);
  void add_cubic(int i, int j, int k, int c);

  int constant() const noexcept { return constant_; }
  const std::map<int, int>& linear() const noexcept { return linear_; }
  const std::map<Pair, int>& quadratic() const noexcept { return quadratic_; }
  const std::map<Triple, int>& cubic() const noexcept { return cubic_; }

  // Total phase in units of pi/4, reduced mod 8.
  int eighths(BitView v) const;
  Complex value(BitView v) const;

  bool is_zero() const;
  friend bool operator==(const PhasePolynomial&, const PhasePolynomial&) = default;

 private:
  void check_index(int i) const;

  int n_ = 0;
  int constant_ = 0;
  std::map<int, int> linear_;
  std::map<Pair, int> quadratic_;
  std::map<Triple, int> cubic_;
};

// Constraint (sum_{support} v + constant) mod 2 == 0. An empty support with
// constant 1 is never satisfied.
struct AffineParity {
  std::vector<int> support;
  int constant = 0;

  bool satisfied(BitView v) const;
  friend bool operator==(const AffineParity&, const AffineParity&) = default;
};

// Sorts the support and cancels repeated indices pairwise.
AffineParity make_parity(std::vector<int> support, int constant);

struct ClosedFormState {
  int n = 0;
  PhasePolynomial phase;
  std::vector<AffineParity> parities;

  explicit ClosedFormState(int n_qubits = 0) : n(n_qubits), phase(n_qubits) {}
  friend bool operator==(const ClosedFormState&, const ClosedFormState&) = default;
};

// e^{i pi k / 4} without rounding drift.
Complex alpha_power(int k);

Complex eval_closed_form(const ClosedFormState& state, BitView v);
DenseState dense_closed_form(const ClosedFormState& state, int cap = kDefaultDenseCap);

// Parities become parity gadgets, linear terms visible biases, quadratic terms
// two-body phases and cubic terms three-body hyperedge gadgets. The network's
// amplitude equals eval_closed_form exactly (no residual scale).
RbmNetwork compile_to_rbm(const ClosedFormState& state);

// Finds c(v) of degree <= 3 over the two-element field with
// (-1)^{c(v)} == signs[r] for every support[r], by elimination. Free
// coefficients are set to zero. Throws FitError with rank diagnostics when
// infeasible.
PhasePolynomial fit_cubic_phase(std::span<const BitString> support, std::span<const int> signs, int n);

// Text format:
//   n=<int>
//   parity: i1 i2 ... [+1]
//   lin: i c
//   quad: i j c
//   cub: i j k c
//   const: c
// Blank lines and lines starting with '#' are ignored.
ClosedFormState parse_closed_form(std::istream& in);
std::string format_closed_form(const ClosedFormState& state);

}  // namespace rbmtopo
