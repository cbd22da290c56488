#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>

#include "rbmtopo/dense.hpp"
#include "rbmtopo/errors.hpp"
#include "rbmtopo/gadgets.hpp"
#include "rbmtopo/rbm.hpp"
#include "test_util.hpp"

using namespace rbmtopo;
using std::numbers::pi;

namespace {

const Complex kI{0.0, 1.0};

TEST(Bits, BigEndianIndexing) {
  EXPECT_EQ(index_from_bits(parse_bits("100")), 4u);
  EXPECT_EQ(index_from_bits(parse_bits("001")), 1u);
  EXPECT_EQ(format_bits(bits_from_index(6, 3)), "110");
  EXPECT_EQ(qubit_bit(0, 3), 4u);
  EXPECT_EQ(hamming_weight(parse_bits("10110")), 3);
  EXPECT_THROW(parse_bits("10a"), ContractError);
}

TEST(Rbm, EmptyNetworkIsUniform) {
  const RbmNetwork net(1);
  EXPECT_EQ(log_amplitude(net, parse_bits("0")).value(), Complex(0.0, 0.0));
  EXPECT_EQ(amplitude(net, parse_bits("1")), Complex(1.0, 0.0));
}

TEST(Rbm, ParityUnitEvenAndOdd) {
  HiddenUnit u{{0.0, 0.0}, {{0, kI * pi}, {1, kI * pi}, {2, kI * pi}}};
  const RbmNetwork net(3, {0.0, 0.0, 0.0}, {u}, 0.0);
  const auto even = log_amplitude(net, parse_bits("101"));
  ASSERT_TRUE(even.has_value());
  EXPECT_NEAR(even->real(), std::log(2.0), 1e-15);
  EXPECT_NEAR(std::remainder(even->imag(), 2 * pi), 0.0, 1e-12);
  EXPECT_FALSE(log_amplitude(net, parse_bits("100")).has_value());
  EXPECT_EQ(amplitude(net, parse_bits("100")), Complex(0.0, 0.0));
}

TEST(Rbm, DimensionMismatchIsContractError) {
  const RbmNetwork net(3);
  EXPECT_THROW(log_amplitude(net, parse_bits("10")), ContractError);
}

TEST(Rbm, ConstructorValidates) {
  HiddenUnit bad{{0.0, 0.0}, {{5, 1.0}}};
  EXPECT_THROW(RbmNetwork(3, {0.0, 0.0, 0.0}, {bad}, 0.0), ContractError);
  EXPECT_THROW(RbmNetwork(2, {0.0}, {}, 0.0), ContractError);
  EXPECT_THROW(RbmNetwork(1, {std::nan("")}, {}, 0.0), ContractError);
}

TEST(Rbm, DuplicateWeightsMerge) {
  HiddenUnit u{{0.0, 0.0}, {{1, 0.5}, {0, 0.25}, {1, 0.5}}};
  const RbmNetwork net(2, {0.0, 0.0}, {u}, 0.0);
  ASSERT_EQ(net.hidden()[0].weights.size(), 2u);
  EXPECT_EQ(net.hidden()[0].weights[0].visible, 0);
  EXPECT_EQ(net.hidden()[0].weights[1].value, Complex(1.0, 0.0));
}

TEST(Rbm, OverflowIsNumericError) {
  const RbmNetwork net(1, {Complex(800.0, 0.0)}, {}, 0.0);
  EXPECT_THROW(amplitude(net, parse_bits("1")), NumericError);
}

TEST(RbmProperty, LogSumMatchesDirectProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto net = testutil::random_network(rng, n, 1 + static_cast<int>(rng() % 6));
    for (const auto& v : testutil::all_configs(n)) {
      const Complex direct = testutil::product_amplitude(net, v);
      EXPECT_LE(std::abs(amplitude(net, v) - direct), 1e-12 * std::abs(direct));
    }
  }
}

TEST(RbmProperty, ComposeMultiplies) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto a = testutil::random_network(rng, n, 3);
    const auto b = testutil::random_network(rng, n, 2);
    const auto ab = compose(a, b);
    EXPECT_EQ(ab.hidden_count(), a.hidden_count() + b.hidden_count());
    for (const auto& v : testutil::all_configs(n)) {
      const Complex want = amplitude(a, v) * amplitude(b, v);
      EXPECT_LE(std::abs(amplitude(ab, v) - want), 1e-12 * std::abs(want));
    }
  }
}

TEST(RbmProperty, TensorActsOnDisjointBlocks) {
  std::mt19937_64 rng(13);
  const auto a = testutil::random_network(rng, 3, 2);
  const auto b = testutil::random_network(rng, 2, 2);
  const auto ab = tensor(a, b);
  ASSERT_EQ(ab.n_visible(), 5);
  for (const auto& v : testutil::all_configs(5)) {
    const BitString va(v.begin(), v.begin() + 3);
    const BitString vb(v.begin() + 3, v.end());
    const Complex want = amplitude(a, va) * amplitude(b, vb);
    EXPECT_LE(std::abs(amplitude(ab, v) - want), 1e-12 * std::abs(want));
  }
}

TEST(RbmProperty, ZeroFactorGivesExactZero) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto net = compose(testutil::random_network(rng, n, 3), parity_gadget({0, 1}).embed(n));
    for (const auto& v : testutil::all_configs(n)) {
      if (v[0] != v[1]) {
        EXPECT_EQ(amplitude(net, v), Complex(0.0, 0.0));
      }
    }
  }
}

TEST(RbmProperty, PermutationPreservesNorm) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto net = testutil::random_network(rng, n, 4);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto moved = permute_visibles(net, perm);
    const auto a = dense_state(net);
    const auto b = dense_state(moved);
    EXPECT_NEAR(a.norm2(), b.norm2(), 1e-10 * a.norm2());
    for (const auto& v : testutil::all_configs(n)) {
      BitString w(v.size());
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = v[static_cast<std::size_t>(i)];
      EXPECT_LE(std::abs(amplitude(moved, w) - amplitude(net, v)), 1e-12 * std::abs(amplitude(net, v)));
    }
  }
}

TEST(Rbm, ComposeParitiesGivesGhzSupport) {
  const auto net = compose(parity_gadget({0, 1}).embed(3), parity_gadget({1, 2}).embed(3));
  const auto d = dense_state(net);
  EXPECT_EQ(d.support_size(), 2u);
  EXPECT_NE(d.amplitudes[0], Complex(0.0, 0.0));
  EXPECT_NE(d.amplitudes[7], Complex(0.0, 0.0));
  const RbmNetwork empty(3);
  EXPECT_EQ(dense_state(compose(empty, net)).amplitudes, d.amplitudes);
}

TEST(Rbm, TriangleGraphPhase) {
  NetworkBuilder b(3);
  two_body_phase(0, 1, pi).add_to(b);
  two_body_phase(1, 2, pi).add_to(b);
  two_body_phase(0, 2, pi).add_to(b);
  const auto net = b.build();
  const Complex ratio = amplitude(net, parse_bits("110")) / amplitude(net, parse_bits("000"));
  EXPECT_LE(std::abs(ratio + 1.0), 1e-12);
}

TEST(Dense, CapIsEnforced) {
  EXPECT_THROW(dense_state(RbmNetwork(6), 5), ResourceError);
  EXPECT_NO_THROW(dense_state(RbmNetwork(5), 5));
}

TEST(Dense, CapFromEnvironment) {
  ::setenv("RBMTOPO_DENSE_CAP", "7", 1);
  EXPECT_EQ(dense_cap_from_env(), 7);
  ::setenv("RBMTOPO_DENSE_CAP", "junk", 1);
  EXPECT_EQ(dense_cap_from_env(), kDefaultDenseCap);
  ::unsetenv("RBMTOPO_DENSE_CAP");
  EXPECT_EQ(dense_cap_from_env(), kDefaultDenseCap);
}

TEST(Dense, Fidelity) {
  const DenseState zero(1, {1.0, 0.0});
  const DenseState one(1, {0.0, 1.0});
  const DenseState plus_phase(1, {Complex(0.0, 2.0), 0.0});
  EXPECT_DOUBLE_EQ(fidelity(zero, one), 0.0);
  EXPECT_DOUBLE_EQ(fidelity(zero, plus_phase), 1.0);
  EXPECT_THROW(fidelity(zero, DenseState::zeros(1)), NumericError);
}

TEST(Dense, EnumerationMatchesPointwise) {
  std::mt19937_64 rng(16);
  const auto net = testutil::random_network(rng, 7, 5);
  const auto d = dense_state(net);
  for (std::uint64_t b = 0; b < d.size(); ++b) {
    EXPECT_EQ(d.amplitudes[b], amplitude(net, bits_from_index(b, 7)));
  }
}

}  // namespace
