#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "rbmtopo/io.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RBMTOPO_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rbmtopo_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  fs::path dir_;
};

TEST_F(Cli, BuildVerifyDeterministic) {
  ASSERT_EQ(run("build --model toric --lx 2 --ly 2 -o " + path("t.json")).code, 0);
  const auto a = run("verify " + path("t.json") + " --format json --seed 3");
  const auto b = run("verify " + path("t.json") + " --format json --seed 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"pass\": true"), std::string::npos);
}

TEST_F(Cli, BuildIsByteIdentical) {
  const auto a = run("build --model double_semion");
  const auto b = run("build --model double_semion");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, CorruptedFileFailsVerify) {
  ASSERT_EQ(run("build --model dicke --n 4 --k 2 -o " + path("d.json")).code, 0);
  auto file = rbmtopo::rbm_from_json(rbmtopo::read_text_file(path("d.json")));
  std::vector<rbmtopo::HiddenUnit> hidden(file.net.hidden().begin(), file.net.hidden().end());
  hidden[0].weights[0].value += 0.01;
  const auto b = file.net.visible_biases();
  const rbmtopo::RbmNetwork bad(file.net.n_visible(), {b.begin(), b.end()}, hidden, file.net.log_scale());
  rbmtopo::write_text_file(path("bad.json"), rbmtopo::rbm_to_json(bad, *file.source_json));
  EXPECT_EQ(run("verify " + path("bad.json")).code, 1);
  EXPECT_EQ(run("verify " + path("bad.json") + " --tol 0.5").code, 0);
}

TEST_F(Cli, ExportRoundTrip) {
  ASSERT_EQ(run("build --model aklt --n 3 -o " + path("a.json")).code, 0);
  ASSERT_EQ(run("export " + path("a.json") + " -o " + path("b.json")).code, 0);
  const auto a = rbmtopo::rbm_from_json(rbmtopo::read_text_file(path("a.json")));
  const auto b = rbmtopo::rbm_from_json(rbmtopo::read_text_file(path("b.json")));
  EXPECT_EQ(a.net, b.net);
  ASSERT_EQ(run("export " + path("a.json") + " --format dense -o " + path("dense.json")).code, 0);
  const auto d = rbmtopo::dense_from_json(rbmtopo::read_text_file(path("dense.json")));
  EXPECT_EQ(d.n, 9);
  EXPECT_EQ(run("verify " + path("a.json") + " --oracle " + path("dense.json")).code, 0);
}

TEST_F(Cli, AmpParity) {
  write("h.txt", "n 3\n0 1 2\n");
  ASSERT_EQ(run("build --hypergraph " + path("h.txt") + " -o " + path("h.json")).code, 0);
  const auto r = run("amp " + path("h.json") + " --basis 111");
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  double re = 0.0;
  double im = 0.0;
  in >> re >> im;
  EXPECT_NEAR(re, -1.0, 1e-9);
  EXPECT_NEAR(im, 0.0, 1e-9);

  ASSERT_EQ(run("build --model czx --lx 1 --ly 1 -o " + path("c.json")).code, 0);
  EXPECT_EQ(run("amp " + path("c.json") + " --basis 1000").out, "0 0\n");
  EXPECT_EQ(run("amp " + path("c.json") + " --basis 10").code, 2);
}

TEST_F(Cli, ErrorsAndListing) {
  EXPECT_EQ(run("build --model nonsense").code, 2);
  EXPECT_EQ(run("build --model toric --lx 1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  const auto list = run("list-models");
  EXPECT_EQ(list.code, 0);
  for (const char* name : {"toric", "haah", "double_semion", "aklt", "czx", "ccz", "dicke", "cluster"}) {
    EXPECT_NE(list.out.find(name), std::string::npos) << name;
  }
}

TEST_F(Cli, CircuitAndStabilizerInputs) {
  write("c.txt", "wires 3\nH 0\nCNOT 0 1\nCZ 1 2\nS 2\n");
  ASSERT_EQ(run("build --circuit " + path("c.txt") + " -o " + path("c.json")).code, 0);
  EXPECT_EQ(run("verify " + path("c.json")).code, 0);
  write("s.txt", "+ZZ\n+XX\n");
  ASSERT_EQ(run("build --stabilizers " + path("s.txt") + " -o " + path("s.json")).code, 0);
  EXPECT_EQ(run("verify " + path("s.json")).code, 0);
  write("bad.txt", "+XI\n+ZI\n");
  EXPECT_NE(run("build --stabilizers " + path("bad.txt")).code, 0);
}

TEST_F(Cli, FitCommand) {
  std::string lines;
  for (int b = 0; b < 8; ++b) {
    lines += std::to_string((b >> 2) & 1) + std::to_string((b >> 1) & 1) + std::to_string(b & 1);
    lines += b == 7 ? " -1\n" : " +1\n";
  }
  write("f.txt", lines);
  const auto r = run("fit --support " + path("f.txt") + " --n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cub: 0 1 2"), std::string::npos);
  std::string quartic;
  for (int b = 0; b < 16; ++b) {
    for (int k = 3; k >= 0; --k) quartic += std::to_string((b >> k) & 1);
    quartic += b == 15 ? " -1\n" : " +1\n";
  }
  write("q.txt", quartic);
  EXPECT_EQ(run("fit --support " + path("q.txt") + " --n 4").code, 3);
}

TEST_F(Cli, StatsJson) {
  ASSERT_EQ(run("build --model cluster --n 6 -o " + path("g.json")).code, 0);
  const auto r = run("stats " + path("g.json") + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"hidden\": 6"), std::string::npos);
}

}  // namespace
