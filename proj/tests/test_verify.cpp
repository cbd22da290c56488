#include <gtest/gtest.h>

#include "json.hpp"

#include "rbmtopo/errors.hpp"
#include "rbmtopo/models.hpp"
#include "rbmtopo/verify.hpp"
#include "test_util.hpp"

using namespace rbmtopo;

namespace {

RbmNetwork with_log_scale(const RbmNetwork& net, Complex extra) {
  const auto b = net.visible_biases();
  const auto h = net.hidden();
  return RbmNetwork(net.n_visible(), {b.begin(), b.end()}, {h.begin(), h.end()}, net.log_scale() + extra);
}

TEST(Verify, ToricPasses) {
  const auto r = check_bundle(toric_code(2, 2));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.mode, "dense");
  EXPECT_EQ(r.samples, 256u);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  EXPECT_LE(r.max_aligned_amp_error, 1e-12);
}

TEST(Verify, CorruptedWeightFails) {
  const auto m = toric_code(2, 2);
  const auto bad = perturb_weight(m.rbm, 0, 0, 0.01);
  const auto r = check_network(bad, m);
  EXPECT_FALSE(r.pass);
  EXPECT_LT(r.fidelity, 1.0 - 1e-6);
}

TEST(Verify, GlobalPhaseAndScaleAreIgnored) {
  const auto m = aklt_chain(3);
  for (Complex extra : {Complex(0.0, 1.3), Complex(2.0, -0.4), Complex(-5.0, 3.0)}) {
    const auto r = check_network(with_log_scale(m.rbm, extra), m);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.max_aligned_amp_error, 1e-10);
  }
}

TEST(Verify, SpotCheckModeIsSeeded) {
  const auto m = toric_code(3, 3);  // 18 qubits
  VerifyOptions opt;
  opt.dense_cap = 10;
  opt.seed = 7;
  opt.spot_samples = 500;
  const auto a = check_bundle(m, opt);
  const auto b = check_bundle(m, opt);
  EXPECT_EQ(a.mode, "spot");
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(a.fidelity, b.fidelity);
  EXPECT_EQ(a.max_aligned_amp_error, b.max_aligned_amp_error);
}

TEST(Verify, ZeroStates) {
  VerifyReport r;
  r.tol = 1e-9;
  compare_amplitudes({0.0, 0.0}, {0.0, 0.0}, r);
  EXPECT_TRUE(r.zero_state);
  EXPECT_TRUE(r.pass);
  VerifyReport s;
  s.tol = 1e-9;
  compare_amplitudes({1.0, 0.0}, {0.0, 0.0}, s);
  EXPECT_FALSE(s.pass);
}

TEST(Verify, TolIsHonored) {
  const auto m = toric_code(2, 2);
  const auto bad = perturb_weight(m.rbm, 0, 0, 1e-7);
  VerifyOptions loose;
  loose.tol = 1e-3;
  EXPECT_TRUE(check_network(bad, m, loose).pass);
  EXPECT_FALSE(check_network(bad, m).pass);
}

TEST(Verify, PerturbWeightRange) {
  const auto m = dicke_state(3, 1);
  EXPECT_THROW(perturb_weight(m.rbm, 99, 0, 0.1), ContractError);
  EXPECT_THROW(perturb_weight(m.rbm, 0, 99, 0.1), ContractError);
}

TEST(Resource, GraphHiddenEqualsEdges) {
  const auto m = graph_state(Graph{5, {{0, 1}, {1, 2}, {3, 4}}});
  const auto r = resource_report(m);
  EXPECT_EQ(r.hidden, 3u);
  EXPECT_EQ(r.correlation_terms, 3);
  EXPECT_EQ(r.bound, 8 * (3 + 5));
  EXPECT_TRUE(r.within_bound);
}

TEST(Resource, BoundViolationIsReported) {
  std::mt19937_64 rng(91);
  const auto net = testutil::random_network(rng, 2, 20);
  const auto r = resource_report(net, 0, "none");
  EXPECT_EQ(r.bound, 16);
  EXPECT_FALSE(r.within_bound);
}

TEST(Report, JsonFields) {
  const auto r = check_bundle(dicke_state(4, 2));
  const auto j = nlohmann::json::parse(report_json(r));
  for (const char* key : {"model", "n", "mode", "samples", "seed", "fidelity", "max_aligned_amp_error",
                          "hidden_count", "bound", "pass"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["model"], "dicke");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_NE(report_table({r}).find("dicke"), std::string::npos);
}

}  // namespace
