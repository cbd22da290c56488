#include <gtest/gtest.h>

#include <filesystem>

#include "rbmtopo/errors.hpp"
#include "rbmtopo/io.hpp"
#include "rbmtopo/models.hpp"
#include "test_util.hpp"

using namespace rbmtopo;

namespace {

TEST(Io, RbmRoundTripIsBitExact) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const auto net = testutil::random_network(rng, 1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 7), 3.0);
    const auto file = rbm_from_json(rbm_to_json(net));
    EXPECT_EQ(file.net, net);
    EXPECT_FALSE(file.source_json.has_value());
  }
}

TEST(Io, SourceIsPassedThrough) {
  const auto m = haah_code(2);
  const auto file = rbm_from_json(rbm_to_json(m.rbm, R"({"kind":"model","name":"haah","params":{"l":2}})"));
  EXPECT_EQ(file.net, m.rbm);
  ASSERT_TRUE(file.source_json.has_value());
  EXPECT_NE(file.source_json->find("haah"), std::string::npos);
}

TEST(Io, MalformedRbmFiles) {
  EXPECT_THROW(rbm_from_json("{"), ParseError);
  EXPECT_THROW(rbm_from_json(R"({"n": 2})"), ParseError);
  EXPECT_THROW(rbm_from_json(
                   R"({"n":1,"bit_order":"big_endian","log_scale":[0,0],"visible_biases":[[0,0]],"hidden":[{"bias":[0,0],"weights":[[3,1,0]]}]})"),
               ParseError);
  EXPECT_THROW(rbm_from_json(
                   R"({"n":1,"bit_order":"little_endian","log_scale":[0,0],"visible_biases":[[0,0]],"hidden":[]})"),
               ParseError);
}

TEST(Io, DenseRoundTrip) {
  std::mt19937_64 rng(102);
  std::vector<Complex> amps(8);
  for (auto& z : amps) z = testutil::gauss_complex(rng, 1.0);
  const DenseState d(3, amps);
  const auto back = dense_from_json(dense_to_json(d));
  EXPECT_EQ(back.n, 3);
  EXPECT_EQ(back.amplitudes, d.amplitudes);
  EXPECT_THROW(dense_from_json(R"({"n":2,"bit_order":"big_endian","amplitudes":[[1,0]]})"), ParseError);
}

TEST(Io, TextFiles) {
  const auto path = (std::filesystem::temp_directory_path() / "rbmtopo_io_test.txt").string();
  write_text_file(path, "hello\n");
  EXPECT_EQ(read_text_file(path), "hello\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file(path), ContractError);
}

}  // namespace
