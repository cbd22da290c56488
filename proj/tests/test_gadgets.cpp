#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/gadgets.hpp"
#include "test_util.hpp"

using namespace rbmtopo;
using std::numbers::pi;

namespace {

const Complex kI{0.0, 1.0};

int weight(const BitString& v) { return hamming_weight(v); }

// max over inputs of |gadget(v) - want(v)|
template <class F>
double table_error(const Gadget& g, int n, F want) {
  const auto net = g.embed(n);
  double err = 0.0;
  for (const auto& v : testutil::all_configs(n)) {
    err = std::max(err, std::abs(amplitude(net, v) - want(v)));
  }
  return err;
}

TEST(Gadgets, ParityTruthTable) {
  for (int k = 1; k <= 5; ++k) {
    for (int t : {0, 1}) {
      std::vector<int> support(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) support[static_cast<std::size_t>(i)] = i;
      const auto g = parity_gadget(support, t);
      EXPECT_EQ(g.hidden.size(), 1u);
      EXPECT_LE(table_error(g, k, [&](const BitString& v) {
                  return Complex((weight(v) + t) % 2 == 0 ? 1.0 : 0.0, 0.0);
                }),
                1e-12);
    }
  }
}

TEST(Gadgets, ParityZeroIsExact) {
  const auto net = parity_gadget({0, 2}).embed(3);
  EXPECT_FALSE(log_amplitude(net, parse_bits("100")).has_value());
}

TEST(Gadgets, TwoBodyPhase) {
  for (double phi : {pi, pi / 2, pi / 4, 1.234, -0.7}) {
    const auto g = two_body_phase(0, 1, phi);
    EXPECT_LE(g.hidden.size(), 1u);
    EXPECT_LE(table_error(g, 2, [&](const BitString& v) {
                return std::exp(kI * phi * static_cast<double>(v[0] * v[1]));
              }),
              1e-12);
  }
  EXPECT_TRUE(two_body_phase(0, 1, 2 * pi).hidden.empty());
  EXPECT_THROW(two_body_phase(1, 1, pi), ContractError);
}

TEST(Gadgets, CosPairFormula) {
  const double omega = 0.9;
  const double phi0 = 0.3;
  const Complex a(0.7, 0.2);
  const Complex b(2.1, -0.4);
  for (Branch br : {Branch::plus, Branch::minus}) {
    const auto g = cos_pair({0, 1, 2}, omega, phi0, a, b, br);
    EXPECT_EQ(g.hidden.size(), 2u);
    EXPECT_LE(table_error(g, 3, [&](const BitString& v) {
                return 2.0 * a * std::cos(omega * weight(v) + phi0) + b;
              }),
              1e-12);
  }
}

TEST(Gadgets, PureCosine) {
  const double phi0 = 0.4;
  const auto g = cos_pair({0, 1}, 1.1, phi0, 0.5, 0.0);
  const auto net = g.embed(2);
  EXPECT_LE(std::abs(amplitude(net, parse_bits("00")) - std::cos(phi0)), 1e-12);
}

TEST(Gadgets, SingleVisibleHyperedgeIsBias) {
  const auto g = hyperedge_phase({2}, pi);
  EXPECT_TRUE(g.hidden.empty());
  ASSERT_EQ(g.visible_biases.size(), 1u);
  EXPECT_EQ(g.visible_biases[0].visible, 2);
  EXPECT_LE(std::abs(g.visible_biases[0].value - kI * pi), 1e-15);
}

TEST(Gadgets, CczBothBranches) {
  for (Branch br : {Branch::plus, Branch::minus}) {
    const auto g = ccz_gadget({0, 1, 2}, br);
    EXPECT_EQ(g.hidden.size(), 2u);
    EXPECT_LE(table_error(g, 3, [](const BitString& v) {
                return Complex(v[0] && v[1] && v[2] ? -1.0 : 1.0, 0.0);
              }),
              1e-12);
  }
}

TEST(Gadgets, HyperedgePhaseRandomPhases) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      const double phi = trial == 0 ? pi : angle(rng);
      std::vector<int> support;
      for (int i = 0; i < k; ++i) support.push_back(i);
      const auto g = hyperedge_phase(support, phi);
      EXPECT_LE(static_cast<int>(g.hidden.size()), hyperedge_hidden_bound(k));
      EXPECT_LE(table_error(g, k, [&](const BitString& v) {
                  return weight(v) == k ? std::exp(kI * phi) : Complex(1.0, 0.0);
                }),
                1e-9)
          << "k=" << k << " phi=" << phi;
    }
  }
}

TEST(Gadgets, HyperedgeOnScatteredSupport) {
  const auto g = hyperedge_phase({4, 1, 3}, pi);
  EXPECT_LE(table_error(g, 5, [](const BitString& v) {
              return Complex(v[1] && v[3] && v[4] ? -1.0 : 1.0, 0.0);
            }),
            1e-12);
}

TEST(Gadgets, IndicatorWeight) {
  for (int k = 1; k <= 6; ++k) {
    for (int m = 0; m <= k; ++m) {
      std::vector<int> support;
      for (int i = 0; i < k; ++i) support.push_back(i);
      const auto g = indicator_weight(support, m);
      EXPECT_LE(table_error(g, k, [&](const BitString& v) {
                  return Complex(weight(v) == m ? 1.0 : 0.0, 0.0);
                }),
                1e-9)
          << "k=" << k << " m=" << m;
    }
  }
  EXPECT_THROW(indicator_weight({0, 1}, 3), ContractError);
}

TEST(Gadgets, SynthesizeDispatch) {
  GadgetSpec spec;
  spec.kind = GadgetKind::parity;
  spec.support = {0, 1};
  spec.target = 1;
  EXPECT_EQ(synthesize(spec).hidden, parity_gadget({0, 1}, 1).hidden);
  spec.kind = GadgetKind::indicator;
  spec.support = {0, 1, 2};
  spec.target = 1;
  EXPECT_LE(table_error(synthesize(spec), 3,
                        [](const BitString& v) { return Complex(weight(v) == 1 ? 1.0 : 0.0, 0.0); }),
            1e-12);
}

TEST(Gadgets, BadSupportRejected) {
  EXPECT_THROW(parity_gadget({}), ContractError);
  EXPECT_THROW(parity_gadget({0, 0}), ContractError);
  EXPECT_THROW(parity_gadget({-1}), ContractError);
  EXPECT_THROW(ccz_gadget({0, 1}), ContractError);
  EXPECT_THROW(cos_pair({0}, 1.0, 0.0, 0.0, 1.0), ContractError);
}

TEST(Gadgets, EmbedChecksRange) {
  EXPECT_THROW(parity_gadget({0, 3}).embed(3), ContractError);
}

}  // namespace
