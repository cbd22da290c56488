#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rbmtopo/clifford.hpp"
#include "rbmtopo/dense.hpp"
#include "rbmtopo/pauli.hpp"
#include "rbmtopo/rbm.hpp"

namespace rbmtopo {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;

  // Throws ContractError on empty edges, out-of-range or repeated vertices,
  // and duplicate hyperedges (compared as sets).
  void validate() const;
};

// "n <int>" then one hyperedge per line as space-separated vertex indices.
Hypergraph parse_hypergraph(std::istream& in);
std::string format_hypergraph(const Hypergraph& hg);

/// A compiled network together with an oracle computed by a different route.
struct ModelBundle {
  std::string name;
  std::vector<std::pair<std::string, int>> params;
  RbmNetwork rbm;
  // Amplitude of one configuration; usable beyond the dense cap.
  std::function<Complex(BitView)> oracle;
  // Full oracle state; when empty, callers enumerate `oracle`.
  std::function<DenseState()> dense_oracle;
  // N_e: the number of correlation factors in the source description, with a
  // short label saying what was counted.
  int correlation_terms = 0;
  std::string terms_label;

  int n() const noexcept { return rbm.n_visible(); }
  long hidden_bound() const noexcept { return 8L * (correlation_terms + n()); }
  DenseState oracle_state(int cap = kDefaultDenseCap) const;
};

ModelBundle graph_state(const Graph& g);
ModelBundle hypergraph_state(const Hypergraph& hg);

// Qubit per edge of the Lx x Ly torus: horizontal edge (x, y) is y*Lx + x,
// vertical edge (x, y) is Lx*Ly + y*Lx + x.
std::vector<PauliString> toric_generators(int lx, int ly);
ModelBundle toric_code(int lx, int ly);

// Two qubits per site of the L^3 torus; site (x, y, z) owns qubits 2s, 2s+1
// with s = (x*L + y)*L + z.
std::vector<PauliString> haah_generators(int l);
ModelBundle haah_code(int l);

// Ground state of a CSS code obtained by projecting |0...0>: uniform over the
// span of the X-type supports. The network uses one parity gadget per dual check.
ModelBundle css_ground_state(std::string name, int n, const std::vector<PauliString>& generators);
// Independent X rows plus the dual checks as Z rows: n generators fixing the
// same state, for the circuit pipeline.
StabilizerGenerators css_state_generators(int n, const std::vector<PauliString>& generators);

/// Brick-wall honeycomb torus: vertices (x, y), 0 <= x < 2 Lx, 0 <= y < Ly
/// (Ly even), vertex id y * 2Lx + x. Horizontal edge (x, y)-(x+1, y) has id
/// y * 2Lx + x; the vertical edge (x, y)-(x, y+1), present when x + y is even,
/// follows all horizontals in (y, x) order.
struct Honeycomb {
  int lx = 0;
  int ly = 0;
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;        // endpoints by vertex id
  std::vector<std::vector<int>> vertex_edges;    // incident edge ids
  std::vector<std::vector<int>> hexagons;        // six edge ids each
};

Honeycomb honeycomb_torus(int lx, int ly);
// Connected components with at least one edge; -1 if some vertex has odd degree.
int count_loops(const Honeycomb& lattice, BitView config);
ModelBundle double_semion(int lx, int ly);

// Periodic spin-1 chain in unary encoding: site i owns visibles 3i..3i+2,
// |100> = -1, |010> = 0, |001> = +1.
CliffordCircuit aklt_circuit(int n_sites);
ModelBundle aklt_chain(int n_sites, bool periodic = true);

// Plaquette p owns qubits 4p..4p+3.
ModelBundle czx_ground(int lx, int ly);

// Triangular torus, vertex (x, y) = y*Lx + x, with up triangles
// {(x,y), (x+1,y), (x,y+1)} and down triangles {(x+1,y), (x,y+1), (x+1,y+1)}.
Hypergraph triangular_ccz_lattice(int lx, int ly);
ModelBundle ccz_model(const Hypergraph& lattice);

ModelBundle dicke_state(int n, int k);

// Ring graph state on n >= 3 qubits.
ModelBundle cluster_ring(int n);

// Stabilizer file or circuit as a bundle: the network goes through the
// circuit pipeline, the oracle is the projector (resp. dense simulation).
ModelBundle stabilizer_bundle(const StabilizerGenerators& gens);
ModelBundle circuit_bundle(const CliffordCircuit& circuit);

struct ModelInfo {
  std::string name;
  std::string summary;
  std::vector<std::pair<std::string, int>> defaults;
};

const std::vector<ModelInfo>& model_registry();
// Unknown names throw ContractError; missing params take the defaults.
ModelBundle build_model(const std::string& name,
                        const std::vector<std::pair<std::string, int>>& params = {});

}  // namespace rbmtopo
