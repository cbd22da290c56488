#include "rbmtopo/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/gf2.hpp"
#include "rbmtopo/kernels.hpp"

namespace rbmtopo {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

Complex ipow(int k) { return alpha_power(2 * mod4(k)); }

constexpr int kMaxHiddenSum = 30;

}  // namespace

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CCZ: return "CCZ";
    case GateKind::PostPlus: return "POSTPLUS";
  }
  return "?";
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::CZ:
    case GateKind::CNOT: return 2;
    case GateKind::CCZ: return 3;
    default: return 1;
  }
}

void CliffordCircuit::validate() const {
  if (n_wires < 0) throw ContractError("negative wire count");
  if (inputs.size() != static_cast<std::size_t>(n_wires)) {
    throw ContractError("circuit needs one input flag per wire");
  }
  std::vector<char> closed(static_cast<std::size_t>(n_wires), 0);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    const int k = gate.arity();
    for (int a = 0; a < k; ++a) {
      const int w = gate.wires[static_cast<std::size_t>(a)];
      if (w < 0 || w >= n_wires) {
        throw ContractError("gate " + std::to_string(g) + " uses wire " + std::to_string(w) +
                            " outside [0, " + std::to_string(n_wires) + ")");
      }
      if (closed[static_cast<std::size_t>(w)]) {
        throw ContractError("gate " + std::to_string(g) + " acts on wire " + std::to_string(w) +
                            " after POSTPLUS");
      }
      for (int b = 0; b < a; ++b) {
        if (gate.wires[static_cast<std::size_t>(b)] == w) {
          throw ContractError("gate " + std::to_string(g) + " repeats wire " + std::to_string(w));
        }
      }
    }
    if (gate.kind == GateKind::PostPlus) closed[static_cast<std::size_t>(gate.wires[0])] = 1;
  }
}

std::vector<int> CliffordCircuit::output_wires() const {
  std::vector<char> projected(static_cast<std::size_t>(n_wires), 0);
  for (const auto& g : gates) {
    if (g.kind == GateKind::PostPlus) projected[static_cast<std::size_t>(g.wires[0])] = 1;
  }
  std::vector<int> out;
  for (int q = 0; q < n_wires; ++q) {
    if (!projected[static_cast<std::size_t>(q)]) out.push_back(q);
  }
  return out;
}

CliffordCircuit parse_circuit(std::istream& in) {
  CliffordCircuit c;
  bool have_wires = false;
  bool have_inputs = false;
  std::string line;
  int line_no = 0;
  auto parse_input = [&](const std::string& tok) {
    if (tok == "plus") return WireInput::Plus;
    if (tok == "zero") return WireInput::Zero;
    throw ParseError("input must be 'plus' or 'zero', got '" + tok + "'", line_no);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    std::string upper = head;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    std::vector<std::string> args;
    for (std::string tok; ss >> tok;) args.push_back(tok);

    if (upper == "WIRES") {
      if (have_wires) throw ParseError("duplicate 'wires' header", line_no);
      if (args.size() != 1) throw ParseError("'wires' takes one integer", line_no);
      try {
        std::size_t used = 0;
        c.n_wires = std::stoi(args[0], &used);
        if (used != args[0].size() || c.n_wires < 0) throw std::invalid_argument("");
      } catch (const std::logic_error&) {
        throw ParseError("invalid wire count '" + args[0] + "'", line_no);
      }
      c.inputs.assign(static_cast<std::size_t>(c.n_wires), WireInput::Plus);
      have_wires = true;
      continue;
    }
    if (!have_wires) throw ParseError("'wires <n>' must come first", line_no);
    if (upper == "INPUTS") {
      if (have_inputs) throw ParseError("duplicate 'inputs' header", line_no);
      if (args.size() == 1) {
        c.inputs.assign(static_cast<std::size_t>(c.n_wires), parse_input(args[0]));
      } else if (args.size() == static_cast<std::size_t>(c.n_wires)) {
        for (std::size_t q = 0; q < args.size(); ++q) c.inputs[q] = parse_input(args[q]);
      } else {
        throw ParseError("'inputs' takes one flag or one flag per wire", line_no);
      }
      have_inputs = true;
      continue;
    }
    Gate g;
    if (upper == "H") g.kind = GateKind::H;
    else if (upper == "S") g.kind = GateKind::S;
    else if (upper == "CZ") g.kind = GateKind::CZ;
    else if (upper == "CNOT" || upper == "CX") g.kind = GateKind::CNOT;
    else if (upper == "CCZ") g.kind = GateKind::CCZ;
    else if (upper == "POSTPLUS") g.kind = GateKind::PostPlus;
    else throw ParseError("unknown gate '" + head + "'", line_no);
    if (args.size() != static_cast<std::size_t>(g.arity())) {
      throw ParseError(std::string(to_string(g.kind)) + " takes " + std::to_string(g.arity()) +
                           " wire(s)",
                       line_no);
    }
    for (std::size_t a = 0; a < args.size(); ++a) {
      try {
        std::size_t used = 0;
        g.wires[a] = std::stoi(args[a], &used);
        if (used != args[a].size()) throw std::invalid_argument("");
      } catch (const std::logic_error&) {
        throw ParseError("invalid wire index '" + args[a] + "'", line_no);
      }
    }
    c.gates.push_back(g);
  }
  if (!have_wires) throw ParseError("missing 'wires <n>' header", 0);
  try {
    c.validate();
  } catch (const ContractError& e) {
    throw ParseError(e.what(), 0);
  }
  return c;
}

std::string format_circuit(const CliffordCircuit& circuit) {
  std::ostringstream out;
  out << "wires " << circuit.n_wires << "\n";
  const bool uniform = std::all_of(circuit.inputs.begin(), circuit.inputs.end(),
                                   [&](WireInput w) { return w == circuit.inputs.front(); });
  out << "inputs";
  if (uniform && !circuit.inputs.empty()) {
    out << (circuit.inputs.front() == WireInput::Plus ? " plus" : " zero");
  } else if (circuit.inputs.empty()) {
    out << " plus";
  } else {
    for (auto w : circuit.inputs) out << (w == WireInput::Plus ? " plus" : " zero");
  }
  out << "\n";
  for (const auto& g : circuit.gates) {
    out << to_string(g.kind);
    for (int a = 0; a < g.arity(); ++a) out << ' ' << g.wires[static_cast<std::size_t>(a)];
    out << "\n";
  }
  return out.str();
}

CliffordCircuit random_circuit(int n, int n_gates, std::mt19937_64& rng, bool with_cnot) {
  if (n < 1) throw ContractError("random circuit needs at least one wire");
  CliffordCircuit c(n);
  const int kinds = n >= 2 ? (with_cnot ? 4 : 3) : 2;
  std::uniform_int_distribution<int> pick_kind(0, kinds - 1);
  std::uniform_int_distribution<int> pick_wire(0, n - 1);
  for (int g = 0; g < n_gates; ++g) {
    const int kind = pick_kind(rng);
    const int a = pick_wire(rng);
    if (kind == 0) {
      c.add(Gate::h(a));
    } else if (kind == 1) {
      c.add(Gate::s(a));
    } else {
      int b = pick_wire(rng);
      while (b == a) b = pick_wire(rng);
      c.add(kind == 2 ? Gate::cz(a, b) : Gate::cnot(a, b));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// DBM

int DbmNetwork::new_variable(bool is_hidden) {
  hidden.push_back(is_hidden ? 1 : 0);
  alive.push_back(1);
  pinned_zero.push_back(0);
  lin.push_back(0);
  adj.emplace_back();
  return n_vars++;
}

void DbmNetwork::toggle_quadratic(int a, int b) {
  if (a == b) {
    add_linear(a, 2);
    return;
  }
  auto& na = adj[static_cast<std::size_t>(a)];
  auto& nb = adj[static_cast<std::size_t>(b)];
  if (na.erase(b)) {
    nb.erase(a);
  } else {
    na.insert(b);
    nb.insert(a);
  }
}

void DbmNetwork::add_linear(int a, int c) {
  auto& l = lin[static_cast<std::size_t>(a)];
  l = mod4(l + c);
}

void DbmNetwork::add_cubic(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw ContractError("cubic term needs three distinct variables");
  if (!cubic.erase(t)) cubic.insert(t);
}

std::vector<int> DbmNetwork::live_hidden() const {
  std::vector<int> out;
  for (int v = 0; v < n_vars; ++v) {
    if (hidden[static_cast<std::size_t>(v)] && alive[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::size_t DbmNetwork::quadratic_count() const {
  std::size_t total = 0;
  for (const auto& s : adj) total += s.size();
  return total / 2;
}

Complex DbmNetwork::weight(BitView x) const {
  for (int v = 0; v < n_vars; ++v) {
    if (alive[static_cast<std::size_t>(v)] && pinned_zero[static_cast<std::size_t>(v)] &&
        x[static_cast<std::size_t>(v)]) {
      return {0.0, 0.0};
    }
  }
  for (const auto& p : constraints) {
    if (!p.satisfied(x)) return {0.0, 0.0};
  }
  int e = constant;
  for (int v = 0; v < n_vars; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    if (!x[vi]) continue;
    e += lin[vi];
    for (int u : adj[vi]) {
      if (u > v && x[static_cast<std::size_t>(u)]) e += 2;
    }
  }
  for (const auto& t : cubic) {
    if (x[static_cast<std::size_t>(t[0])] && x[static_cast<std::size_t>(t[1])] &&
        x[static_cast<std::size_t>(t[2])]) {
      e += 2;
    }
  }
  return scale * ipow(e);
}

DbmNetwork circuit_to_dbm(const CliffordCircuit& circuit) {
  circuit.validate();
  DbmNetwork d;
  std::vector<int> cur(static_cast<std::size_t>(circuit.n_wires));
  for (int q = 0; q < circuit.n_wires; ++q) {
    const int v = d.new_variable(false);
    if (circuit.inputs[static_cast<std::size_t>(q)] == WireInput::Zero) {
      d.pinned_zero[static_cast<std::size_t>(v)] = 1;
    }
    cur[static_cast<std::size_t>(q)] = v;
  }
  // A pinned variable is identically 0, so every term it would join vanishes.
  auto pinned = [&](int q) { return d.pinned_zero[static_cast<std::size_t>(cur[static_cast<std::size_t>(q)])] != 0; };
  auto var = [&](int q) { return cur[static_cast<std::size_t>(q)]; };
  auto apply_h = [&](int q) {
    const int old = var(q);
    d.hidden[static_cast<std::size_t>(old)] = 1;
    const int next = d.new_variable(false);
    if (!d.pinned_zero[static_cast<std::size_t>(old)]) d.toggle_quadratic(old, next);
    cur[static_cast<std::size_t>(q)] = next;
  };
  auto apply_cz = [&](int a, int b) {
    if (!pinned(a) && !pinned(b)) d.toggle_quadratic(var(a), var(b));
  };
  for (const auto& g : circuit.gates) {
    const auto& w = g.wires;
    switch (g.kind) {
      case GateKind::H: apply_h(w[0]); break;
      case GateKind::S:
        if (!pinned(w[0])) d.add_linear(var(w[0]), 1);
        break;
      case GateKind::CZ: apply_cz(w[0], w[1]); break;
      case GateKind::CNOT:
        apply_h(w[1]);
        apply_cz(w[0], w[1]);
        apply_h(w[1]);
        break;
      case GateKind::CCZ:
        if (!pinned(w[0]) && !pinned(w[1]) && !pinned(w[2])) d.add_cubic(var(w[0]), var(w[1]), var(w[2]));
        break;
      case GateKind::PostPlus: d.hidden[static_cast<std::size_t>(var(w[0]))] = 1; break;
    }
  }
  for (int q : circuit.output_wires()) d.visible.push_back(var(q));
  return d;
}

Complex dbm_amplitude(const DbmNetwork& dbm, BitView visible_bits) {
  if (visible_bits.size() != dbm.visible.size()) {
    throw ContractError("visible assignment has " + std::to_string(visible_bits.size()) +
                        " bits, network has " + std::to_string(dbm.visible.size()));
  }
  const auto hid = dbm.live_hidden();
  if (hid.size() > static_cast<std::size_t>(kMaxHiddenSum)) {
    throw ResourceError("brute-force hidden sum over " + std::to_string(hid.size()) + " variables");
  }
  BitString x(static_cast<std::size_t>(dbm.n_vars), 0);
  for (std::size_t q = 0; q < visible_bits.size(); ++q) {
    x[static_cast<std::size_t>(dbm.visible[q])] = visible_bits[q] ? 1 : 0;
  }
  Complex total{0.0, 0.0};
  const std::uint64_t count = std::uint64_t{1} << hid.size();
  for (std::uint64_t h = 0; h < count; ++h) {
    for (std::size_t k = 0; k < hid.size(); ++k) {
      x[static_cast<std::size_t>(hid[k])] = static_cast<std::uint8_t>((h >> k) & 1U);
    }
    total += dbm.weight(x);
  }
  return total;
}

DenseState dbm_dense(const DbmNetwork& dbm, int cap) {
  const int n = static_cast<int>(dbm.visible.size());
  check_dense_cap(n, cap);
  DenseState out = DenseState::zeros(n);
  BitString v(static_cast<std::size_t>(n));
  for (std::uint64_t b = 0; b < out.size(); ++b) {
    bits_from_index(b, v);
    out.amplitudes[b] = dbm_amplitude(dbm, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

void detach(DbmNetwork& w, int v) {
  auto& nv = w.adj[static_cast<std::size_t>(v)];
  for (int u : nv) w.adj[static_cast<std::size_t>(u)].erase(v);
  nv.clear();
}

void eliminate_pinned(DbmNetwork& w, int h) {
  detach(w, h);
  w.lin[static_cast<std::size_t>(h)] = 0;
  for (auto it = w.cubic.begin(); it != w.cubic.end();) {
    if (std::find(it->begin(), it->end(), h) != it->end()) {
      it = w.cubic.erase(it);
    } else {
      ++it;
    }
  }
  w.alive[static_cast<std::size_t>(h)] = 0;
}

EliminationStep eliminate_one(DbmNetwork& w, int h) {
  const auto hi = static_cast<std::size_t>(h);
  const int a = mod4(w.lin[hi]);
  const std::vector<int> nbrs(w.adj[hi].begin(), w.adj[hi].end());
  detach(w, h);
  w.lin[hi] = 0;
  w.alive[hi] = 0;

  if (a % 2 == 1) {
    // sum_h i^{a h} (-1)^{h L'} = (1+i) i^{3 L'^2} for a = 1, (1-i) i^{L'^2} for a = 3,
    // with L'^2 = sum y + 2 sum_{y<y'} y y' (mod 4).
    const int e = a == 1 ? 3 : 1;
    w.scale *= a == 1 ? Complex(1.0, 1.0) : Complex(1.0, -1.0);
    for (std::size_t p = 0; p < nbrs.size(); ++p) {
      w.add_linear(nbrs[p], e);
      for (std::size_t r = p + 1; r < nbrs.size(); ++r) w.toggle_quadratic(nbrs[p], nbrs[r]);
    }
    return {h, -1, "2"};
  }

  // sum_h (-1)^{h (L' + kappa)} = 2 delta(L' + kappa = 0 mod 2)
  const int kappa = a / 2;
  w.scale *= 2.0;
  const auto partner = std::find_if(nbrs.begin(), nbrs.end(), [&](int y) {
    return w.hidden[static_cast<std::size_t>(y)] != 0;
  });
  if (partner == nbrs.end()) {
    if (!nbrs.empty() || kappa == 1) w.constraints.push_back(make_parity(nbrs, kappa));
    return {h, -1, "1.1"};
  }

  // Solve the constraint for h_j and substitute h_j = M = sum(rest) + kappa.
  const int j = *partner;
  const auto ji = static_cast<std::size_t>(j);
  std::vector<int> rest;
  for (int y : nbrs) {
    if (y != j) rest.push_back(y);
  }
  const std::vector<int> nj(w.adj[ji].begin(), w.adj[ji].end());
  detach(w, j);
  // (-1)^{h_j z} -> (-1)^{M z}
  for (int z : nj) {
    for (int y : rest) w.toggle_quadratic(y, z);
    if (kappa) w.add_linear(z, 2);
  }
  // i^{c h_j} -> i^{c M^2}, M^2 = sum y + 2 sum_{y<y'} y y' + 2 kappa sum y + kappa (mod 4)
  const int c = w.lin[ji];
  w.lin[ji] = 0;
  if (c != 0) {
    for (std::size_t p = 0; p < rest.size(); ++p) {
      w.add_linear(rest[p], c * (1 + 2 * kappa));
      if (c % 2 == 1) {
        for (std::size_t r = p + 1; r < rest.size(); ++r) w.toggle_quadratic(rest[p], rest[r]);
      }
    }
    w.constant = mod4(w.constant + c * kappa);
  }
  w.alive[ji] = 0;
  return {h, j, "1.2"};
}

}  // namespace

Elimination eliminate_with_trace(const DbmNetwork& dbm, bool keep_snapshots) {
  DbmNetwork w = dbm;
  for (const auto& t : w.cubic) {
    for (int v : t) {
      const auto vi = static_cast<std::size_t>(v);
      if (w.hidden[vi] && !w.pinned_zero[vi]) {
        throw StructureError("cubic term touches hidden variable " + std::to_string(v) +
                             "; only visible cubic terms can be eliminated");
      }
    }
  }
  Elimination result;
  if (keep_snapshots) result.snapshots.push_back(w);
  auto record = [&](EliminationStep step) {
    result.steps.push_back(std::move(step));
    if (keep_snapshots) result.snapshots.push_back(w);
  };
  for (int v = 0; v < w.n_vars; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    if (w.hidden[vi] && w.alive[vi] && w.pinned_zero[vi]) {
      eliminate_pinned(w, v);
      record({v, -1, "pin"});
    }
  }
  for (int v = 0; v < w.n_vars; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    if (!w.hidden[vi] || !w.alive[vi]) continue;
    record(eliminate_one(w, v));
  }

  const int n = static_cast<int>(w.visible.size());
  std::vector<int> qubit_of(static_cast<std::size_t>(w.n_vars), -1);
  for (int q = 0; q < n; ++q) qubit_of[static_cast<std::size_t>(w.visible[static_cast<std::size_t>(q)])] = q;
  auto qubit = [&](int v) {
    const int q = qubit_of[static_cast<std::size_t>(v)];
    if (q < 0) throw StructureError("term on variable " + std::to_string(v) + " survived elimination");
    return q;
  };

  ClosedFormState state(n);
  state.phase.add_constant(2 * w.constant);
  for (int v = 0; v < w.n_vars; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    if (w.lin[vi]) state.phase.add_linear(qubit(v), 2 * w.lin[vi]);
    for (int u : w.adj[vi]) {
      if (u > v) state.phase.add_quadratic(qubit(v), qubit(u), 2);
    }
    if (w.alive[vi] && w.pinned_zero[vi]) state.parities.push_back(make_parity({qubit(v)}, 0));
  }
  for (const auto& t : w.cubic) state.phase.add_cubic(qubit(t[0]), qubit(t[1]), qubit(t[2]), 1);
  for (const auto& p : w.constraints) {
    std::vector<int> support;
    for (int v : p.support) support.push_back(qubit(v));
    state.parities.push_back(make_parity(std::move(support), p.constant));
  }
  result.state = std::move(state);
  result.scale = w.scale;
  return result;
}

ClosedFormState eliminate(const DbmNetwork& dbm) { return eliminate_with_trace(dbm).state; }

// ---------------------------------------------------------------------------
// Dense simulation

namespace {

template <typename ApplyH, typename ApplyS, typename ApplyZ>
DenseState simulate(const CliffordCircuit& circuit, int cap, ApplyH apply_h, ApplyS apply_s,
                    ApplyZ apply_z) {
  circuit.validate();
  const int n = circuit.n_wires;
  check_dense_cap(n, cap);
  std::uint64_t zero_mask = 0;
  for (int q = 0; q < n; ++q) {
    if (circuit.inputs[static_cast<std::size_t>(q)] == WireInput::Zero) zero_mask |= qubit_bit(q, n);
  }
  std::vector<Complex> psi(std::uint64_t{1} << n);
  for (std::uint64_t b = 0; b < psi.size(); ++b) psi[b] = (b & zero_mask) ? 0.0 : 1.0;

  int h_count = 0;
  auto h = [&](int q) {
    apply_h(std::span<Complex>(psi), n, q);
    ++h_count;
  };
  for (const auto& g : circuit.gates) {
    const auto& w = g.wires;
    switch (g.kind) {
      case GateKind::H: h(w[0]); break;
      case GateKind::S: apply_s(std::span<Complex>(psi), n, w[0]); break;
      case GateKind::CZ: apply_z(std::span<Complex>(psi), qubit_bit(w[0], n) | qubit_bit(w[1], n)); break;
      case GateKind::CNOT:
        h(w[1]);
        apply_z(std::span<Complex>(psi), qubit_bit(w[0], n) | qubit_bit(w[1], n));
        h(w[1]);
        break;
      case GateKind::CCZ:
        apply_z(std::span<Complex>(psi),
                qubit_bit(w[0], n) | qubit_bit(w[1], n) | qubit_bit(w[2], n));
        break;
      case GateKind::PostPlus: break;
    }
  }
  // Undo the 1/sqrt(2) of each normalised H.
  const double factor =
      std::ldexp(1.0, h_count / 2) * ((h_count % 2) ? std::numbers::sqrt2 : 1.0);
  for (auto& a : psi) a *= factor;

  const auto outputs = circuit.output_wires();
  const int m = static_cast<int>(outputs.size());
  if (m == n) return DenseState(n, std::move(psi));
  DenseState out = DenseState::zeros(m);
  for (std::uint64_t b = 0; b < psi.size(); ++b) {
    std::uint64_t idx = 0;
    for (int q : outputs) idx = (idx << 1) | ((b >> (n - 1 - q)) & 1U);
    out.amplitudes[idx] += psi[b];
  }
  return out;
}

}  // namespace

DenseState dense_simulate(const CliffordCircuit& circuit, int cap) {
  return simulate(circuit, cap, kernels::apply_h, kernels::apply_s, kernels::apply_controlled_z);
}

DenseState dense_simulate_serial(const CliffordCircuit& circuit, int cap) {
  return simulate(circuit, cap, kernels::serial::apply_h, kernels::serial::apply_s,
                  kernels::serial::apply_controlled_z);
}

// ---------------------------------------------------------------------------
// Stabilizer generators and synthesis

void StabilizerGenerators::validate() const {
  if (n < 1) throw ContractError("stabilizer state needs at least one qubit");
  if (generators.size() != static_cast<std::size_t>(n)) {
    throw ContractError("need " + std::to_string(n) + " generators for a state on " +
                        std::to_string(n) + " qubits, got " + std::to_string(generators.size()));
  }
  gf2::BitMatrix m(0, 2 * n);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    if (p.size() != n) throw ContractError("generator " + std::to_string(g) + " has wrong length");
    if (!p.is_hermitian()) throw ContractError("generator " + std::to_string(g) + " is not Hermitian");
    for (std::size_t h = 0; h < g; ++h) {
      if (!p.commutes_with(generators[h])) {
        throw ContractError("generators " + std::to_string(h) + " and " + std::to_string(g) +
                            " anticommute");
      }
    }
    gf2::BitVector row(2 * n);
    for (int q = 0; q < n; ++q) {
      row.set(q, p.x(q));
      row.set(n + q, p.z(q));
    }
    m.append_row(std::move(row));
  }
  const int r = gf2::rank(m);
  if (r != n) {
    throw ContractError("generators are dependent (rank " + std::to_string(r) + " of " +
                        std::to_string(n) + ")");
  }
}

StabilizerGenerators parse_stabilizers(std::istream& in) {
  StabilizerGenerators gens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    std::string extra;
    if (ss >> extra) throw ParseError("one Pauli string per line", line_no);
    try {
      auto p = PauliString::parse(tok);
      if (gens.generators.empty()) {
        gens.n = p.size();
      } else if (p.size() != gens.n) {
        throw ParseError("generator length " + std::to_string(p.size()) + " differs from " +
                             std::to_string(gens.n),
                         line_no);
      }
      gens.generators.push_back(std::move(p));
    } catch (const ContractError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (gens.generators.empty()) throw ParseError("no generators", 0);
  return gens;
}

CliffordCircuit synthesize_circuit(const StabilizerGenerators& gens) {
  gens.validate();
  const int n = gens.n;
  std::vector<PauliString> rows = gens.generators;
  std::vector<Gate> applied;
  auto apply = [&](Gate g) {
    for (auto& r : rows) {
      switch (g.kind) {
        case GateKind::H: r.conjugate_h(g.wires[0]); break;
        case GateKind::S: r.conjugate_s(g.wires[0]); break;
        case GateKind::CZ: r.conjugate_cz(g.wires[0], g.wires[1]); break;
        case GateKind::CNOT: r.conjugate_cnot(g.wires[0], g.wires[1]); break;
        default: break;
      }
    }
    applied.push_back(g);
  };

  // Bring row j to +/-X_j column by column; earlier rows stay untouched since
  // later gates never act on their qubit.
  for (int j = 0; j < n; ++j) {
    int r = -1;
    for (int i = j; i < n && r < 0; ++i) {
      if (rows[static_cast<std::size_t>(i)].x(j)) r = i;
    }
    if (r < 0) {
      for (int i = j; i < n && r < 0; ++i) {
        if (rows[static_cast<std::size_t>(i)].z(j)) r = i;
      }
      if (r < 0) throw ContractError("generators do not determine qubit " + std::to_string(j));
      apply(Gate::h(j));
    }
    std::swap(rows[static_cast<std::size_t>(j)], rows[static_cast<std::size_t>(r)]);
    for (int i = 0; i < n; ++i) {
      if (i != j && rows[static_cast<std::size_t>(i)].x(j)) {
        rows[static_cast<std::size_t>(i)] *= rows[static_cast<std::size_t>(j)];
      }
    }
    for (int k = j + 1; k < n; ++k) {
      if (rows[static_cast<std::size_t>(j)].x(k)) apply(Gate::cnot(j, k));
    }
    if (rows[static_cast<std::size_t>(j)].z(j)) apply(Gate::s(j));
    for (int k = 0; k < n; ++k) {
      if (k != j && rows[static_cast<std::size_t>(j)].z(k)) apply(Gate::cz(j, k));
    }
  }

  CliffordCircuit c(n);
  for (int j = 0; j < n; ++j) {
    const auto& r = rows[static_cast<std::size_t>(j)];
    for (int q = 0; q < n; ++q) {
      if (r.z(q) || r.x(q) != (q == j)) throw SynthesisError("tableau reduction did not reach X_j form");
    }
    if (r.sign() < 0) c.add(Gate::s(j)).add(Gate::s(j));  // |-> = S^2 |+>
  }
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    c.add(*it);
    if (it->kind == GateKind::S) c.add(*it).add(*it);  // S^dagger = S^3
  }
  return c;
}

ClosedFormState stabilizer_state_closed_form(const StabilizerGenerators& gens) {
  return eliminate(circuit_to_dbm(synthesize_circuit(gens)));
}

RbmNetwork stabilizer_state_to_rbm(const StabilizerGenerators& gens) {
  return compile_to_rbm(stabilizer_state_closed_form(gens));
}

}  // namespace rbmtopo
