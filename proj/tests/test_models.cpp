#include <gtest/gtest.h>

#include <array>
#include <bit>
#include <sstream>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/gf2.hpp"
#include "rbmtopo/models.hpp"
#include "rbmtopo/verify.hpp"
#include "test_util.hpp"

using namespace rbmtopo;

namespace {

const Complex kI{0.0, 1.0};

// Projector onto the +1 eigenspace of each generator, built from the printed
// letters so it does not share code with the library.
std::vector<Complex> project(std::vector<Complex> psi, const std::vector<PauliString>& gens) {
  for (const auto& g : gens) {
    const std::string text = g.to_string();
    const int n = g.size();
    std::vector<Complex> gpsi(psi.size());
    for (std::uint64_t b = 0; b < psi.size(); ++b) {
      std::uint64_t flipped = b;
      Complex factor = text[0] == '-' ? -1.0 : 1.0;
      for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = qubit_bit(q, n);
        const bool one = b & bit;
        switch (text[static_cast<std::size_t>(q) + 1]) {
          case 'X': flipped ^= bit; break;
          case 'Y': flipped ^= bit; factor *= one ? -kI : kI; break;
          case 'Z': if (one) factor = -factor; break;
          default: break;
        }
      }
      gpsi[flipped] += factor * psi[b];
    }
    for (std::size_t b = 0; b < psi.size(); ++b) psi[b] = 0.5 * (psi[b] + gpsi[b]);
  }
  return psi;
}

std::vector<Complex> basis_zero(int n) {
  std::vector<Complex> v(std::size_t{1} << n);
  v[0] = 1.0;
  return v;
}

int x_rank(const std::vector<PauliString>& gens, int n) {
  gf2::BitMatrix m(0, n);
  for (const auto& g : gens) {
    gf2::BitVector row(n);
    bool any = false;
    for (int q = 0; q < n; ++q) {
      row.set(q, g.x(q));
      any = any || g.x(q);
    }
    if (any) m.append_row(row);
  }
  return gf2::rank(m);
}

void expect_generators_commute(const std::vector<PauliString>& gens) {
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      EXPECT_TRUE(gens[a].commutes_with(gens[b])) << a << " " << b;
    }
  }
}

TEST(Models, GraphStateMatchesProductFormula) {
  const Graph g{4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}};
  const auto m = graph_state(g);
  EXPECT_EQ(m.rbm.hidden_count(), g.edges.size());
  const auto rep = resource_report(m);
  EXPECT_EQ(rep.hidden, g.edges.size());
  for (const auto& v : testutil::all_configs(4)) {
    int s = 0;
    for (auto [a, b] : g.edges) s += v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
    EXPECT_LE(std::abs(amplitude(m.rbm, v) - (s % 2 ? -1.0 : 1.0)), 1e-12);
  }
}

TEST(Models, HypergraphFileRoundTrip) {
  std::istringstream in("n 5\n0 1 2\n2 3 4\n");
  const auto hg = parse_hypergraph(in);
  EXPECT_EQ(hg.edges.size(), 2u);
  std::istringstream again(format_hypergraph(hg));
  EXPECT_EQ(parse_hypergraph(again).edges, hg.edges);
  std::istringstream dup("n 3\n0 1\n1 0\n");
  EXPECT_THROW(parse_hypergraph(dup), ParseError);
  std::istringstream range("n 3\n0 3\n");
  EXPECT_THROW(parse_hypergraph(range), ParseError);
  std::istringstream header("0 1\n");
  EXPECT_THROW(parse_hypergraph(header), ParseError);
}

TEST(Models, HypergraphStateSigns) {
  const Hypergraph hg{5, {{0, 1, 2}, {2, 3, 4}, {1, 4}, {3}}};
  const auto m = hypergraph_state(hg);
  for (const auto& v : testutil::all_configs(5)) {
    int s = 0;
    for (const auto& e : hg.edges) {
      int prod = 1;
      for (int i : e) prod *= v[static_cast<std::size_t>(i)];
      s += prod;
    }
    EXPECT_LE(std::abs(amplitude(m.rbm, v) - (s % 2 ? -1.0 : 1.0)), 1e-9);
  }
}

TEST(Models, ToricGeneratorsAndSupport) {
  const auto gens = toric_generators(2, 2);
  EXPECT_EQ(gens.size(), 8u);
  expect_generators_commute(gens);
  EXPECT_EQ(x_rank(gens, 8), 3);
  const auto m = toric_code(2, 2);
  const auto d = dense_state(m.rbm);
  EXPECT_EQ(d.support_size(), 8u);
  const DenseState oracle(8, project(basis_zero(8), gens));
  EXPECT_NEAR(fidelity(d, oracle), 1.0, 1e-12);
  EXPECT_THROW(toric_code(1, 2), ContractError);
}

TEST(Models, HaahSupport) {
  const auto gens = haah_generators(2);
  expect_generators_commute(gens);
  const int n = 16;
  const auto m = haah_code(2);
  const auto d = dense_state(m.rbm);
  EXPECT_EQ(d.support_size(), std::size_t{1} << x_rank(gens, n));
  EXPECT_EQ(d.support_size(), 32u);
  EXPECT_GT(std::abs(d.amplitudes[0]), 0.0);
  EXPECT_NEAR(fidelity(d, DenseState(n, project(basis_zero(n), gens))), 1.0, 1e-12);
}

TEST(Models, CssStateGeneratorsFixTheState) {
  const auto gens = toric_generators(2, 2);
  const auto sg = css_state_generators(8, gens);
  sg.validate();
  const auto d = dense_state(toric_code(2, 2).rbm);
  EXPECT_NEAR(fidelity(d, DenseState(8, project(d.amplitudes, sg.generators))), 1.0, 1e-12);
}

TEST(Models, HoneycombCounts) {
  const auto lat = honeycomb_torus(2, 2);
  EXPECT_EQ(lat.n_vertices, 8);
  EXPECT_EQ(lat.edges.size(), 12u);
  for (const auto& ve : lat.vertex_edges) EXPECT_EQ(ve.size(), 3u);
  BitString empty(12, 0);
  EXPECT_EQ(count_loops(lat, empty), 0);
  BitString hex(12, 0);
  for (int e : lat.hexagons[0]) hex[static_cast<std::size_t>(e)] = 1;
  EXPECT_EQ(count_loops(lat, hex), 1);
  BitString odd(12, 0);
  odd[0] = 1;
  EXPECT_EQ(count_loops(lat, odd), -1);
  EXPECT_THROW(honeycomb_torus(2, 3), ContractError);
}

TEST(Models, DoubleSemionLoopGas) {
  const auto lat = honeycomb_torus(2, 2);
  const auto m = double_semion(2, 2);
  const auto d = dense_state(m.rbm);
  EXPECT_EQ(d.support_size(), 32u);
  std::vector<Complex> oracle(d.size());
  int closed = 0;
  for (std::uint64_t b = 0; b < d.size(); ++b) {
    const int loops = count_loops(lat, bits_from_index(b, 12));
    if (loops < 0) continue;
    ++closed;
    oracle[b] = loops % 2 ? -1.0 : 1.0;
  }
  EXPECT_EQ(closed, 32);
  EXPECT_NEAR(fidelity(d, DenseState(12, oracle)), 1.0, 1e-12);
}

// Tr(prod_i M(s_i)) with -1 -> X, 0 -> Y, +1 -> Z.
Complex aklt_trace(const BitString& v, int n) {
  using M = std::array<Complex, 4>;
  const std::array<M, 3> mats{M{0.0, 1.0, 1.0, 0.0}, M{0.0, -kI, kI, 0.0}, M{1.0, 0.0, 0.0, -1.0}};
  M acc{1.0, 0.0, 0.0, 1.0};
  for (int s = 0; s < n; ++s) {
    int which = -1;
    int ones = 0;
    for (int k = 0; k < 3; ++k) {
      if (v[static_cast<std::size_t>(3 * s + k)]) {
        which = k;
        ++ones;
      }
    }
    if (ones != 1) return 0.0;
    const M& b = mats[static_cast<std::size_t>(which)];
    acc = {acc[0] * b[0] + acc[1] * b[2], acc[0] * b[1] + acc[1] * b[3], acc[2] * b[0] + acc[3] * b[2],
           acc[2] * b[1] + acc[3] * b[3]};
  }
  return acc[0] + acc[3];
}

TEST(Models, AkltMatchesTrace) {
  for (int n = 3; n <= 5; ++n) {
    const auto m = aklt_chain(n);
    const auto d = dense_state(m.rbm);
    std::vector<Complex> oracle(d.size());
    for (std::uint64_t b = 0; b < d.size(); ++b) oracle[b] = aklt_trace(bits_from_index(b, 3 * n), n);
    EXPECT_NEAR(fidelity(d, DenseState(3 * n, oracle)), 1.0, 1e-10) << n;
    const double peak = testutil::max_abs(d.amplitudes);
    for (std::uint64_t b = 0; b < d.size(); ++b) {
      if (oracle[b] == Complex{}) {
        EXPECT_LE(std::abs(d.amplitudes[b]), 1e-12 * peak);
      }
    }
  }
  EXPECT_THROW(aklt_chain(3, false), ContractError);
  EXPECT_THROW(aklt_chain(2), ContractError);
}

TEST(Models, AkltXyzRatio) {
  const auto m = aklt_chain(3);
  const auto xyz = parse_bits("100010001");
  const auto xxx = parse_bits("100100100");  // Tr(XXX) = 0
  const auto zzz = parse_bits("001001001");  // Tr(ZZZ) = 0
  const auto xxy = parse_bits("100100010");  // Tr(XXY) = Tr(Y) = 0
  const auto yyz = parse_bits("010010001");  // Tr(YYZ) = Tr(Z) = 0
  const auto xzx = parse_bits("100001100");  // Tr(XZX) = Tr(-Z) = 0
  const auto yxz = parse_bits("010100001");  // Tr(YXZ) = -2i
  EXPECT_EQ(aklt_trace(xyz, 3), Complex(0.0, 2.0));
  const Complex a = amplitude(m.rbm, xyz);
  for (const auto& v : {xxx, zzz, xxy, yyz, xzx}) EXPECT_LE(std::abs(amplitude(m.rbm, v)), 1e-12 * std::abs(a));
  EXPECT_LE(std::abs(amplitude(m.rbm, yxz) / a + 1.0), 1e-12);
}

TEST(Models, CzxPlaquettes) {
  const auto m = czx_ground(2, 2);
  const auto d = dense_state(m.rbm);
  EXPECT_EQ(d.support_size(), 16u);
  const double mag = testutil::max_abs(d.amplitudes);
  for (std::uint64_t b = 0; b < d.size(); ++b) {
    const auto v = bits_from_index(b, 16);
    bool ghz = true;
    for (int p = 0; p < 4; ++p) {
      for (int k = 1; k < 4; ++k) ghz = ghz && v[static_cast<std::size_t>(4 * p + k)] == v[static_cast<std::size_t>(4 * p)];
    }
    if (ghz) {
      EXPECT_NEAR(std::abs(d.amplitudes[b]), mag, 1e-10 * mag);
    } else {
      EXPECT_EQ(d.amplitudes[b], Complex{});
    }
  }
}

TEST(Models, CzxSinglePlaquette) {
  const auto d = dense_state(czx_ground(1, 1).rbm);
  EXPECT_EQ(d.support_size(), 2u);
  EXPECT_NEAR(std::abs(d.amplitudes[0]), std::abs(d.amplitudes[15]), 1e-12);
}

TEST(Models, DickeSupport) {
  const auto d = dense_state(dicke_state(5, 2).rbm);
  EXPECT_EQ(d.support_size(), 10u);
  for (std::uint64_t b = 0; b < d.size(); ++b) {
    if (std::popcount(b) == 2) {
      EXPECT_NEAR(std::abs(d.amplitudes[b]), 1.0, 1e-10);
    }
  }
}

TEST(Models, CczLattice) {
  const auto lat = triangular_ccz_lattice(3, 3);
  EXPECT_EQ(lat.edges.size(), 18u);
  lat.validate();
  const auto m = ccz_model(lat);
  EXPECT_NEAR(check_bundle(m).fidelity, 1.0, 1e-12);
  EXPECT_THROW(triangular_ccz_lattice(2, 3), ContractError);
}

TEST(Models, RegistryHasEightModelsThatVerify) {
  const auto& reg = model_registry();
  EXPECT_EQ(reg.size(), 8u);
  for (const auto& info : reg) {
    const auto m = build_model(info.name);
    const auto r = check_bundle(m);
    EXPECT_TRUE(r.pass) << info.name << " fidelity " << r.fidelity;
    EXPECT_LE(static_cast<long>(m.rbm.hidden_count()), m.hidden_bound()) << info.name;
  }
  EXPECT_THROW(build_model("nonsense"), ContractError);
  EXPECT_THROW(build_model("toric", {{"zz", 2}}), ContractError);
}

TEST(Models, CircuitAndStabilizerBundles) {
  std::mt19937_64 rng(81);
  const auto c = random_circuit(4, 20, rng);
  EXPECT_TRUE(check_bundle(circuit_bundle(c)).pass);
  const auto sg = css_state_generators(8, toric_generators(2, 2));
  const auto sb = stabilizer_bundle(sg);
  EXPECT_TRUE(check_bundle(sb).pass);
  EXPECT_NEAR(fidelity(dense_state(sb.rbm), dense_state(toric_code(2, 2).rbm)), 1.0, 1e-12);
}

}  // namespace
