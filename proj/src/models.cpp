#include "rbmtopo/models.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/gadgets.hpp"
#include "rbmtopo/gf2.hpp"
#include "rbmtopo/phase_poly.hpp"

namespace rbmtopo {

namespace {

constexpr double kPi = std::numbers::pi;

int wrap(int a, int m) { return ((a % m) + m) % m; }

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractError(what);
}

// Lazily computed dense state shared by copies of a bundle's oracle.
class LazyDense {
 public:
  explicit LazyDense(std::function<DenseState()> make) : make_(std::move(make)) {}
  const DenseState& get() {
    std::call_once(once_, [&] { state_ = make_(); });
    return state_;
  }

 private:
  std::function<DenseState()> make_;
  std::once_flag once_;
  DenseState state_;
};

std::function<Complex(BitView)> lookup_oracle(std::shared_ptr<LazyDense> dense) {
  return [dense](BitView v) { return dense->get().amplitudes[index_from_bits(v)]; };
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      auto& p = parent[static_cast<std::size_t>(a)];
      p = parent[static_cast<std::size_t>(p)];
      a = p;
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

PauliString pauli_on(int n, const std::vector<int>& qubits, char kind) {
  PauliString p(n);
  for (int q : qubits) {
    if (kind == 'X') p.set_x(q, !p.x(q));
    else p.set_z(q, !p.z(q));
  }
  return p;
}

}  // namespace

DenseState ModelBundle::oracle_state(int cap) const {
  check_dense_cap(n(), cap);
  if (dense_oracle) return dense_oracle();
  DenseState out = DenseState::zeros(n());
  BitString v(static_cast<std::size_t>(n()));
  for (std::uint64_t b = 0; b < out.size(); ++b) {
    bits_from_index(b, v);
    out.amplitudes[b] = oracle(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graphs and hypergraphs

void Hypergraph::validate() const {
  require(n >= 0, "negative vertex count");
  std::set<std::vector<int>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto sorted = edges[e];
    require(!sorted.empty(), "hyperedge " + std::to_string(e) + " is empty");
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < sorted.size(); ++a) {
      require(sorted[a] >= 0 && sorted[a] < n,
              "hyperedge " + std::to_string(e) + " has vertex " + std::to_string(sorted[a]) +
                  " outside [0, " + std::to_string(n) + ")");
      require(a == 0 || sorted[a] != sorted[a - 1],
              "hyperedge " + std::to_string(e) + " repeats vertex " + std::to_string(sorted[a]));
    }
    require(seen.insert(sorted).second, "hyperedge " + std::to_string(e) + " is a duplicate");
  }
}

Hypergraph parse_hypergraph(std::istream& in) {
  Hypergraph hg;
  bool have_n = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (!have_n) {
      int n = -1;
      if (first != "n" || !(ss >> n) || n < 0) throw ParseError("expected header 'n <int>'", line_no);
      std::string extra;
      if (ss >> extra) throw ParseError("unexpected text after vertex count", line_no);
      hg.n = n;
      have_n = true;
      continue;
    }
    std::vector<int> edge;
    ss.clear();
    ss.str(line);
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        edge.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("");
      } catch (const std::logic_error&) {
        throw ParseError("invalid vertex index '" + tok + "'", line_no);
      }
    }
    hg.edges.push_back(std::move(edge));
    try {
      Hypergraph probe{hg.n, {hg.edges.back()}};
      probe.validate();
      auto sorted = hg.edges.back();
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t e = 0; e + 1 < hg.edges.size(); ++e) {
        auto other = hg.edges[e];
        std::sort(other.begin(), other.end());
        if (other == sorted) throw ContractError("duplicate hyperedge");
      }
    } catch (const ContractError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_n) throw ParseError("missing header 'n <int>'", 0);
  return hg;
}

std::string format_hypergraph(const Hypergraph& hg) {
  std::ostringstream out;
  out << "n " << hg.n << "\n";
  for (const auto& e : hg.edges) {
    for (std::size_t a = 0; a < e.size(); ++a) out << (a ? " " : "") << e[a];
    out << "\n";
  }
  return out.str();
}

ModelBundle graph_state(const Graph& g) {
  Hypergraph check{g.n, {}};
  for (auto [a, b] : g.edges) check.edges.push_back({a, b});
  check.validate();
  for (const auto& e : check.edges) require(e.size() == 2, "graph edges join two vertices");

  NetworkBuilder builder(g.n);
  for (auto [a, b] : g.edges) two_body_phase(a, b, kPi).add_to(builder);
  ModelBundle m;
  m.name = "graph";
  m.params = {{"n", g.n}};
  m.rbm = builder.build();
  m.oracle = [edges = g.edges](BitView v) {
    int s = 0;
    for (auto [a, b] : edges) s += v[static_cast<std::size_t>(a)] & v[static_cast<std::size_t>(b)];
    return Complex(s % 2 ? -1.0 : 1.0, 0.0);
  };
  m.correlation_terms = static_cast<int>(g.edges.size());
  m.terms_label = "edges";
  return m;
}

ModelBundle hypergraph_state(const Hypergraph& hg) {
  hg.validate();
  NetworkBuilder builder(hg.n);
  for (const auto& e : hg.edges) hyperedge_phase(e, kPi).add_to(builder);
  ModelBundle m;
  m.name = "hypergraph";
  m.params = {{"n", hg.n}};
  m.rbm = builder.build();
  m.oracle = [edges = hg.edges](BitView v) {
    int s = 0;
    for (const auto& e : edges) {
      s += std::all_of(e.begin(), e.end(), [&](int q) { return v[static_cast<std::size_t>(q)] != 0; });
    }
    return Complex(s % 2 ? -1.0 : 1.0, 0.0);
  };
  m.correlation_terms = static_cast<int>(hg.edges.size());
  m.terms_label = "hyperedges";
  return m;
}

// ---------------------------------------------------------------------------
// CSS codes

std::vector<PauliString> toric_generators(int lx, int ly) {
  require(lx >= 2 && ly >= 2, "toric code needs Lx, Ly >= 2");
  const int n = 2 * lx * ly;
  auto h = [&](int x, int y) { return wrap(y, ly) * lx + wrap(x, lx); };
  auto v = [&](int x, int y) { return lx * ly + wrap(y, ly) * lx + wrap(x, lx); };
  std::vector<PauliString> gens;
  for (int y = 0; y < ly; ++y) {
    for (int x = 0; x < lx; ++x) gens.push_back(pauli_on(n, {h(x, y), h(x - 1, y), v(x, y), v(x, y - 1)}, 'X'));
  }
  for (int y = 0; y < ly; ++y) {
    for (int x = 0; x < lx; ++x) gens.push_back(pauli_on(n, {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)}, 'Z'));
  }
  return gens;
}

std::vector<PauliString> haah_generators(int l) {
  require(l >= 2, "Haah code needs L >= 2");
  const int n = 2 * l * l * l;
  auto qubit = [&](int x, int y, int z, int a) {
    return 2 * ((wrap(x, l) * l + wrap(y, l)) * l + wrap(z, l)) + a;
  };
  using Offsets = std::vector<std::array<int, 3>>;
  const Offsets z0{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const Offsets z1{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  const Offsets x0{{1, 1, 1}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const Offsets x1{{1, 1, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  auto cube = [&](int x, int y, int z, const Offsets& first, const Offsets& second) {
    std::vector<int> qs;
    for (const auto& o : first) qs.push_back(qubit(x + o[0], y + o[1], z + o[2], 0));
    for (const auto& o : second) qs.push_back(qubit(x + o[0], y + o[1], z + o[2], 1));
    return qs;
  };
  std::vector<PauliString> gens;
  for (int x = 0; x < l; ++x) {
    for (int y = 0; y < l; ++y) {
      for (int z = 0; z < l; ++z) gens.push_back(pauli_on(n, cube(x, y, z, x0, x1), 'X'));
    }
  }
  for (int x = 0; x < l; ++x) {
    for (int y = 0; y < l; ++y) {
      for (int z = 0; z < l; ++z) gens.push_back(pauli_on(n, cube(x, y, z, z0, z1), 'Z'));
    }
  }
  return gens;
}

namespace {

gf2::BitMatrix x_support_matrix(int n, const std::vector<PauliString>& generators) {
  gf2::BitMatrix g(0, n);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& p = generators[k];
    require(p.size() == n, "generator " + std::to_string(k) + " has wrong length");
    bool has_x = false;
    bool has_z = false;
    gf2::BitVector row(n);
    for (int q = 0; q < n; ++q) {
      has_x |= p.x(q);
      has_z |= p.z(q);
      row.set(q, p.x(q));
    }
    require(!(has_x && has_z), "generator " + std::to_string(k) + " is not CSS (mixes X and Z)");
    require(p.sign() > 0, "CSS generators must have sign +1");
    if (has_x) g.append_row(std::move(row));
  }
  return g;
}

}  // namespace

ModelBundle css_ground_state(std::string name, int n, const std::vector<PauliString>& generators) {
  const gf2::BitMatrix g = x_support_matrix(n, generators);
  const gf2::BitMatrix checks = gf2::null_space(g);

  NetworkBuilder builder(n);
  for (int r = 0; r < checks.rows(); ++r) parity_gadget(checks.row(r).ones(), 0).add_to(builder);

  // Membership in the row space, solved directly rather than via the checks.
  gf2::BitMatrix gt(n, g.rows());
  for (int r = 0; r < g.rows(); ++r) {
    for (int q = 0; q < n; ++q) gt.set(q, r, g.get(r, q));
  }
  ModelBundle m;
  m.name = std::move(name);
  m.rbm = builder.build();
  m.oracle = [gt, n](BitView v) {
    gf2::BitVector b(n);
    for (int q = 0; q < n; ++q) b.set(q, v[static_cast<std::size_t>(q)] != 0);
    return Complex(gf2::solve(gt, b).x ? 1.0 : 0.0, 0.0);
  };
  m.dense_oracle = [n, generators] {
    DenseState zero = DenseState::zeros(n);
    zero.amplitudes[0] = 1.0;
    return project_onto_stabilizers(std::move(zero), generators);
  };
  m.correlation_terms = static_cast<int>(generators.size());
  m.terms_label = "stabilizer generators";
  return m;
}

StabilizerGenerators css_state_generators(int n, const std::vector<PauliString>& generators) {
  const gf2::BitMatrix g = x_support_matrix(n, generators);
  const gf2::Echelon basis = gf2::row_reduce(g);
  const gf2::BitMatrix checks = gf2::null_space(g);
  StabilizerGenerators out;
  out.n = n;
  for (int r = 0; r < basis.reduced.rows(); ++r) out.generators.push_back(pauli_on(n, basis.reduced.row(r).ones(), 'X'));
  for (int r = 0; r < checks.rows(); ++r) out.generators.push_back(pauli_on(n, checks.row(r).ones(), 'Z'));
  return out;
}

ModelBundle toric_code(int lx, int ly) {
  auto m = css_ground_state("toric", 2 * lx * ly, toric_generators(lx, ly));
  m.params = {{"lx", lx}, {"ly", ly}};
  return m;
}

ModelBundle haah_code(int l) {
  auto m = css_ground_state("haah", 2 * l * l * l, haah_generators(l));
  m.params = {{"l", l}};
  return m;
}

// ---------------------------------------------------------------------------
// Double semion

Honeycomb honeycomb_torus(int lx, int ly) {
  require(lx >= 2 && ly >= 2, "honeycomb torus needs Lx, Ly >= 2");
  require(ly % 2 == 0, "honeycomb torus needs even Ly");
  Honeycomb hc;
  hc.lx = lx;
  hc.ly = ly;
  const int w = 2 * lx;
  hc.n_vertices = w * ly;
  auto vid = [&](int x, int y) { return wrap(y, ly) * w + wrap(x, w); };
  for (int y = 0; y < ly; ++y) {
    for (int x = 0; x < w; ++x) hc.edges.emplace_back(vid(x, y), vid(x + 1, y));
  }
  std::map<std::pair<int, int>, int> vertical;
  for (int y = 0; y < ly; ++y) {
    for (int x = 0; x < w; ++x) {
      if ((x + y) % 2 == 0) {
        vertical[{x, y}] = static_cast<int>(hc.edges.size());
        hc.edges.emplace_back(vid(x, y), vid(x, y + 1));
      }
    }
  }
  hc.vertex_edges.resize(static_cast<std::size_t>(hc.n_vertices));
  for (std::size_t e = 0; e < hc.edges.size(); ++e) {
    hc.vertex_edges[static_cast<std::size_t>(hc.edges[e].first)].push_back(static_cast<int>(e));
    hc.vertex_edges[static_cast<std::size_t>(hc.edges[e].second)].push_back(static_cast<int>(e));
  }
  auto horiz = [&](int x, int y) { return wrap(y, ly) * w + wrap(x, w); };
  for (int y = 0; y < ly; ++y) {
    for (int x = 0; x < w; ++x) {
      if ((x + y) % 2 != 0) continue;
      hc.hexagons.push_back({horiz(x, y), horiz(x + 1, y), horiz(x, y + 1), horiz(x + 1, y + 1),
                             vertical.at({x, y}), vertical.at({wrap(x + 2, w), y})});
    }
  }
  return hc;
}

int count_loops(const Honeycomb& lattice, BitView config) {
  require(config.size() == lattice.edges.size(), "configuration length does not match edge count");
  for (const auto& inc : lattice.vertex_edges) {
    int deg = 0;
    for (int e : inc) deg += config[static_cast<std::size_t>(e)];
    if (deg % 2) return -1;
  }
  DisjointSets sets(lattice.n_vertices);
  std::vector<char> touched(static_cast<std::size_t>(lattice.n_vertices), 0);
  for (std::size_t e = 0; e < lattice.edges.size(); ++e) {
    if (!config[e]) continue;
    const auto [a, b] = lattice.edges[e];
    sets.unite(a, b);
    touched[static_cast<std::size_t>(a)] = 1;
    touched[static_cast<std::size_t>(b)] = 1;
  }
  int loops = 0;
  for (int v = 0; v < lattice.n_vertices; ++v) {
    if (touched[static_cast<std::size_t>(v)] && sets.find(v) == v) ++loops;
  }
  return loops;
}

ModelBundle double_semion(int lx, int ly) {
  const Honeycomb hc = honeycomb_torus(lx, ly);
  const int n = static_cast<int>(hc.edges.size());

  // Loop configurations are the kernel of the vertex-edge incidence matrix.
  gf2::BitMatrix incidence(0, n);
  for (const auto& inc : hc.vertex_edges) {
    gf2::BitVector row(n);
    for (int e : inc) row.flip(e);
    incidence.append_row(std::move(row));
  }
  const gf2::BitMatrix cycles = gf2::null_space(incidence);
  require(cycles.rows() <= 30, "too many independent loops to enumerate");
  std::vector<BitString> support;
  std::vector<int> signs;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << cycles.rows()); ++c) {
    gf2::BitVector x(n);
    for (int r = 0; r < cycles.rows(); ++r) {
      if ((c >> r) & 1U) x ^= cycles.row(r);
    }
    BitString v(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) v[static_cast<std::size_t>(e)] = x.get(e);
    signs.push_back(count_loops(hc, v) % 2 ? -1 : 1);
    support.push_back(std::move(v));
  }

  ClosedFormState state(n);
  state.phase = fit_cubic_phase(support, signs, n);
  // The vertex constraints sum to zero on a connected lattice; drop the last.
  for (std::size_t v = 0; v + 1 < hc.vertex_edges.size(); ++v) {
    state.parities.push_back(make_parity(hc.vertex_edges[v], 0));
  }

  ModelBundle m;
  m.name = "double_semion";
  m.params = {{"lx", lx}, {"ly", ly}};
  m.rbm = compile_to_rbm(state);
  m.oracle = [hc](BitView v) {
    const int loops = count_loops(hc, v);
    if (loops < 0) return Complex(0.0, 0.0);
    return Complex(loops % 2 ? -1.0 : 1.0, 0.0);
  };
  m.correlation_terms = hc.n_vertices + static_cast<int>(hc.hexagons.size());
  m.terms_label = "vertex and plaquette stabilizers";
  return m;
}

// ---------------------------------------------------------------------------
// AKLT

CliffordCircuit aklt_circuit(int n_sites) {
  require(n_sites >= 3, "periodic AKLT chain needs at least 3 sites");
  const int n = n_sites;
  // Site i: outputs 3i..3i+2, virtual spins left = 3n+2i, right = 3n+2i+1.
  auto out = [&](int i, int k) { return 3 * i + k; };
  auto left = [&](int i) { return 3 * n + 2 * wrap(i, n); };
  auto right = [&](int i) { return 3 * n + 2 * wrap(i, n) + 1; };
  CliffordCircuit c(5 * n);
  for (int i = 0; i < n; ++i) {
    c.inputs[static_cast<std::size_t>(out(i, 2))] = WireInput::Zero;
    c.inputs[static_cast<std::size_t>(left(i))] = WireInput::Zero;
  }
  // Bond (i, i+1): copy the right spin of site i into the left spin of i+1.
  for (int i = 0; i < n; ++i) c.add(Gate::cnot(right(i), left(i + 1)));
  // Site block: amplitude A_a[left, right] on the unary outputs, with
  // A = X, Y, Z for outputs 100, 010, 001.
  for (int i = 0; i < n; ++i) {
    const int a = left(i);
    const int b = right(i);
    const int o2 = out(i, 1);
    const int o3 = out(i, 2);
    c.add(Gate::cnot(a, o3)).add(Gate::cnot(b, o3));
    c.add(Gate::h(o3)).add(Gate::s(o3)).add(Gate::s(o3)).add(Gate::h(o3));  // X
    c.add(Gate::s(o2)).add(Gate::s(o2)).add(Gate::s(o2));
    c.add(Gate::cz(a, o2)).add(Gate::cz(a, o3));
  }
  for (int i = 0; i < n; ++i) c.add(Gate::post_plus(left(i))).add(Gate::post_plus(right(i)));
  return c;
}

ModelBundle aklt_chain(int n_sites, bool periodic) {
  require(periodic, "only periodic AKLT chains are supported");
  const int n = 3 * n_sites;
  RbmNetwork net = compile_to_rbm(eliminate(circuit_to_dbm(aklt_circuit(n_sites))));
  for (int i = 0; i < n_sites; ++i) {
    net = compose(net, indicator_weight({3 * i, 3 * i + 1, 3 * i + 2}, 1).embed(n));
  }
  ModelBundle m;
  m.name = "aklt";
  m.params = {{"n", n_sites}};
  m.rbm = std::move(net);
  m.oracle = [n_sites](BitView v) {
    using Mat = std::array<Complex, 4>;  // row-major 2x2
    const Complex i1{0.0, 1.0};
    const Mat mats[3] = {{0, 1, 1, 0}, {0, -i1, i1, 0}, {1, 0, 0, -1}};
    Mat acc{1, 0, 0, 1};
    for (int s = 0; s < n_sites; ++s) {
      const auto* t = &v[static_cast<std::size_t>(3 * s)];
      if (t[0] + t[1] + t[2] != 1) return Complex(0.0, 0.0);
      const Mat& a = mats[t[0] ? 0 : (t[1] ? 1 : 2)];
      acc = {acc[0] * a[0] + acc[1] * a[2], acc[0] * a[1] + acc[1] * a[3],
             acc[2] * a[0] + acc[3] * a[2], acc[2] * a[1] + acc[3] * a[3]};
    }
    return acc[0] + acc[3];
  };
  m.correlation_terms = 2 * n_sites;
  m.terms_label = "bonds and site projections";
  return m;
}

// ---------------------------------------------------------------------------
// Remaining models

ModelBundle czx_ground(int lx, int ly) {
  require(lx >= 1 && ly >= 1, "CZX tiling needs Lx, Ly >= 1");
  const int plaquettes = lx * ly;
  const int n = 4 * plaquettes;
  NetworkBuilder builder(n);
  for (int p = 0; p < plaquettes; ++p) {
    for (int k = 0; k < 3; ++k) parity_gadget({4 * p + k, 4 * p + k + 1}, 0).add_to(builder);
  }
  ModelBundle m;
  m.name = "czx";
  m.params = {{"lx", lx}, {"ly", ly}};
  m.rbm = builder.build();
  m.oracle = [plaquettes](BitView v) {
    for (int p = 0; p < plaquettes; ++p) {
      const auto* t = &v[static_cast<std::size_t>(4 * p)];
      if (t[0] != t[1] || t[1] != t[2] || t[2] != t[3]) return Complex(0.0, 0.0);
    }
    return Complex(1.0, 0.0);
  };
  m.correlation_terms = 3 * plaquettes;
  m.terms_label = "plaquette GHZ links";
  return m;
}

Hypergraph triangular_ccz_lattice(int lx, int ly) {
  require(lx >= 3 && ly >= 3, "triangular torus needs Lx, Ly >= 3");
  auto id = [&](int x, int y) { return wrap(y, ly) * lx + wrap(x, lx); };
  Hypergraph hg;
  hg.n = lx * ly;
  for (int y = 0; y < ly; ++y) {
    for (int x = 0; x < lx; ++x) {
      hg.edges.push_back({id(x, y), id(x + 1, y), id(x, y + 1)});
      hg.edges.push_back({id(x + 1, y), id(x, y + 1), id(x + 1, y + 1)});
    }
  }
  return hg;
}

ModelBundle ccz_model(const Hypergraph& lattice) {
  for (const auto& e : lattice.edges) require(e.size() == 3, "CCZ model needs 3-vertex hyperedges");
  auto m = hypergraph_state(lattice);
  m.name = "ccz";
  return m;
}

ModelBundle dicke_state(int n, int k) {
  require(n >= 1, "Dicke state needs n >= 1");
  require(k >= 0 && k <= n, "Dicke state needs 0 <= k <= n");
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  ModelBundle m;
  m.name = "dicke";
  m.params = {{"n", n}, {"k", k}};
  m.rbm = indicator_weight(all, k).embed(n);
  m.oracle = [k](BitView v) { return Complex(hamming_weight(v) == k ? 1.0 : 0.0, 0.0); };
  m.correlation_terms = 1;
  m.terms_label = "weight constraint";
  return m;
}

ModelBundle cluster_ring(int n) {
  require(n >= 3, "ring cluster state needs n >= 3");
  Graph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  auto m = graph_state(g);
  m.name = "cluster";
  return m;
}

ModelBundle stabilizer_bundle(const StabilizerGenerators& gens) {
  gens.validate();
  ModelBundle m;
  m.name = "stabilizers";
  m.params = {{"n", gens.n}};
  m.rbm = stabilizer_state_to_rbm(gens);
  // Projecting any state with nonzero overlap yields the stabilizer state.
  m.dense_oracle = [gens] {
    const int n = gens.n;
    DenseState start(n, std::vector<Complex>(std::uint64_t{1} << n, Complex(1.0, 0.0)));
    DenseState out = project_onto_stabilizers(start, gens.generators);
    for (std::uint64_t b = 0; out.is_zero() && b < start.size(); ++b) {
      DenseState basis = DenseState::zeros(n);
      basis.amplitudes[b] = 1.0;
      out = project_onto_stabilizers(std::move(basis), gens.generators);
    }
    return out;
  };
  m.oracle = lookup_oracle(std::make_shared<LazyDense>(m.dense_oracle));
  m.correlation_terms = gens.n;
  m.terms_label = "stabilizer generators";
  return m;
}

ModelBundle circuit_bundle(const CliffordCircuit& circuit) {
  circuit.validate();
  ModelBundle m;
  m.name = "circuit";
  m.params = {{"wires", circuit.n_wires}};
  m.rbm = compile_to_rbm(eliminate(circuit_to_dbm(circuit)));
  m.dense_oracle = [circuit] { return dense_simulate(circuit, dense_cap_from_env()); };
  m.oracle = lookup_oracle(std::make_shared<LazyDense>(m.dense_oracle));
  m.correlation_terms = static_cast<int>(circuit.gates.size());
  m.terms_label = "gates";
  return m;
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<ModelInfo>& model_registry() {
  static const std::vector<ModelInfo> registry{
      {"toric", "toric code ground state on an Lx x Ly torus", {{"lx", 2}, {"ly", 2}}},
      {"haah", "Haah cubic code ground state on an L^3 torus", {{"l", 2}}},
      {"double_semion", "double semion loop gas on a brick-wall honeycomb torus", {{"lx", 2}, {"ly", 2}}},
      {"aklt", "periodic spin-1 AKLT chain, unary encoding", {{"n", 3}}},
      {"czx", "CZX model ground state, one GHZ plaquette per cell", {{"lx", 2}, {"ly", 2}}},
      {"ccz", "CCZ hypergraph state on a triangular torus", {{"lx", 3}, {"ly", 3}}},
      {"dicke", "Dicke state W_{n,k}", {{"n", 3}, {"k", 1}}},
      {"cluster", "ring cluster (graph) state", {{"n", 6}}},
  };
  return registry;
}

ModelBundle build_model(const std::string& name, const std::vector<std::pair<std::string, int>>& params) {
  const auto& reg = model_registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const ModelInfo& m) { return m.name == name; });
  if (it == reg.end()) throw ContractError("unknown model '" + name + "'");
  std::map<std::string, int> p(it->defaults.begin(), it->defaults.end());
  for (const auto& [key, value] : params) {
    if (!p.count(key)) throw ContractError("model '" + name + "' has no parameter '" + key + "'");
    p[key] = value;
  }
  if (name == "toric") return toric_code(p["lx"], p["ly"]);
  if (name == "haah") return haah_code(p["l"]);
  if (name == "double_semion") return double_semion(p["lx"], p["ly"]);
  if (name == "aklt") return aklt_chain(p["n"], true);
  if (name == "czx") return czx_ground(p["lx"], p["ly"]);
  if (name == "ccz") {
    auto m = ccz_model(triangular_ccz_lattice(p["lx"], p["ly"]));
    m.params = {{"lx", p["lx"]}, {"ly", p["ly"]}};
    return m;
  }
  if (name == "dicke") return dicke_state(p["n"], p["k"]);
  auto m = cluster_ring(p["n"]);
  m.params = {{"n", p["n"]}};
  return m;
}

}  // namespace rbmtopo
