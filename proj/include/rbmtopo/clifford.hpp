#pragma once

#include <array>
#include <iosfwd>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rbmtopo/dense.hpp"
#include "rbmtopo/pauli.hpp"
#include "rbmtopo/phase_poly.hpp"
#include "rbmtopo/rbm.hpp"

namespace rbmtopo {

enum class GateKind { H, S, CZ, CNOT, CCZ, PostPlus };

const char* to_string(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  std::array<int, 3> wires{-1, -1, -1};

  static Gate h(int q) { return {GateKind::H, {q, -1, -1}}; }
  static Gate s(int q) { return {GateKind::S, {q, -1, -1}}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, {a, b, -1}}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, {c, t, -1}}; }
  static Gate ccz(int a, int b, int c) { return {GateKind::CCZ, {a, b, c}}; }
  static Gate post_plus(int q) { return {GateKind::PostPlus, {q, -1, -1}}; }

  int arity() const;
  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class WireInput { Plus, Zero };

struct CliffordCircuit {
  int n_wires = 0;
  std::vector<WireInput> inputs;  // one per wire
  std::vector<Gate> gates;

  CliffordCircuit() = default;
  explicit CliffordCircuit(int n, WireInput input = WireInput::Plus)
      : n_wires(n), inputs(static_cast<std::size_t>(n), input) {}

  CliffordCircuit& add(Gate g) {
    gates.push_back(g);
    return *this;
  }

  // Throws ContractError on bad indices, repeated wires within a gate, or a
  // gate following POSTPLUS on the same wire.
  void validate() const;
  // Wires not projected by POSTPLUS, in wire order.
  std::vector<int> output_wires() const;
  friend bool operator==(const CliffordCircuit&, const CliffordCircuit&) = default;
};

// Format:
//   wires <n>
//   inputs plus|zero            (or one plus/zero token per wire)
//   H q | S q | CZ a b | CNOT c t | CCZ a b c | POSTPLUS q
// '#' starts a comment.
CliffordCircuit parse_circuit(std::istream& in);
std::string format_circuit(const CliffordCircuit& circuit);

// Random circuit over {H, S, CZ} (and CNOT when with_cnot), |+> inputs.
CliffordCircuit random_circuit(int n, int n_gates, std::mt19937_64& rng, bool with_cnot = true);

/// Sum over the live hidden variables of
///   scale * i^{L(x)} (-1)^{Q(x)} (-1)^{C(x)} * [constraints hold]
/// with L = sum lin[a] x_a + constant (mod 4), Q = sum over adjacent pairs,
/// C = sum over cubic triples. Variables are numbered in order of creation.
struct DbmNetwork {
  int n_vars = 0;
  std::vector<int> visible;        // visible[q] = variable carrying output qubit q
  std::vector<char> hidden;        // per variable
  std::vector<char> alive;         // per variable; cleared once summed out
  std::vector<char> pinned_zero;   // per variable; |0> inputs fix their initial variable
  std::vector<int> lin;            // per variable, mod 4
  int constant = 0;                // mod 4
  std::vector<std::set<int>> adj;  // quadratic terms, coefficient 1 mod 2
  std::set<std::array<int, 3>> cubic;  // sorted triples
  std::vector<AffineParity> constraints;  // over variable indices
  Complex scale{1.0, 0.0};

  int new_variable(bool is_hidden);
  // Adds x_a x_b to Q; a == b folds into L as 2 x_a.
  void toggle_quadratic(int a, int b);
  void add_linear(int a, int c);
  void add_cubic(int a, int b, int c);

  std::vector<int> live_hidden() const;
  std::size_t quadratic_count() const;
  // Weight of one full assignment (indexed by variable); ignores dead variables.
  Complex weight(BitView assignment) const;
};

DbmNetwork circuit_to_dbm(const CliffordCircuit& circuit);

// Sums the live hidden variables for one visible assignment.
Complex dbm_amplitude(const DbmNetwork& dbm, BitView visible_bits);
DenseState dbm_dense(const DbmNetwork& dbm, int cap = kDefaultDenseCap);

struct EliminationStep {
  int variable = -1;
  int partner = -1;  // case 1.2 only
  std::string rule;  // "pin", "1.1", "1.2" or "2"
};

struct Elimination {
  ClosedFormState state;
  // dbm_amplitude(input, v) == scale * eval_closed_form(state, v)
  Complex scale{1.0, 0.0};
  std::vector<EliminationStep> steps;
  // snapshots[k] is the network after k steps; filled on request.
  std::vector<DbmNetwork> snapshots;
};

// Sums out hidden variables earliest-created first. Throws StructureError if
// a cubic term touches a hidden variable.
Elimination eliminate_with_trace(const DbmNetwork& dbm, bool keep_snapshots = false);
ClosedFormState eliminate(const DbmNetwork& dbm);

// Statevector with the same unnormalised conventions as the DBM: each |+>
// input is |0>+|1>, each H lacks its 1/sqrt(2), POSTPLUS contracts with
// <0|+<1|. Returns amplitudes over output_wires().
DenseState dense_simulate(const CliffordCircuit& circuit, int cap = kDefaultDenseCap);
// Same, using the serial reference kernels.
DenseState dense_simulate_serial(const CliffordCircuit& circuit, int cap = kDefaultDenseCap);

struct StabilizerGenerators {
  int n = 0;
  std::vector<PauliString> generators;

  // Throws ContractError unless there are n Hermitian, commuting, independent
  // generators of length n.
  void validate() const;
};

// One signed Pauli string per line ("+XXI", "-ZZ", "YZ"); '#' comments.
StabilizerGenerators parse_stabilizers(std::istream& in);

// Circuit on |+>^n whose output is fixed by every generator.
CliffordCircuit synthesize_circuit(const StabilizerGenerators& gens);

ClosedFormState stabilizer_state_closed_form(const StabilizerGenerators& gens);
RbmNetwork stabilizer_state_to_rbm(const StabilizerGenerators& gens);

}  // namespace rbmtopo
