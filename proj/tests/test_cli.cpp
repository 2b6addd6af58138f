#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "minoru/cli.hpp"
#include "minoru/fixtures.hpp"
#include "minoru/io.hpp"

using namespace minoru;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "minoru-cli");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("minoru_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_F(CliTest, UniversalReportsSizeAndSewing) {
  const Outcome r = run_cli({"universal", "--signature", "a1", "a2", "a1", "a2", "--m", "2", "--out", path("u.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j["size"], io::Json::parse("[2, 28]"));
  EXPECT_LE(j["sewn_vertices"].get<int>(), j["sewn_upper_bound"].get<int>());
  EXPECT_TRUE(io::is_polygonal(io::read_file(path("u.json"))));
}

TEST_F(CliTest, BadSignatureIsBadInput) {
  const Outcome r = run_cli({"universal", "--signature", "a1", "a2", "--m", "2"});
  EXPECT_EQ(r.code, cli::kBadInput);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, MissingFileIsBadInput) {
  EXPECT_EQ(run_cli({"outerplanarize", path("absent.json")}).code, cli::kBadInput);
  EXPECT_EQ(run_cli({"no-such-command"}).code, cli::kBadInput);
}

TEST_F(CliTest, GenFixtureIsDeterministic) {
  const auto a = run_cli({"gen-fixture", "random-triangulated", "--seed", "42", "--m", "3", "--n", "5"});
  const auto b = run_cli({"gen-fixture", "random-triangulated", "--seed", "42", "--m", "3", "--n", "5"});
  const auto c = run_cli({"gen-fixture", "random-triangulated", "--seed", "43", "--m", "3", "--n", "5"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(run_cli({"gen-fixture", "moebius"}).code, cli::kBadInput);
}

TEST_F(CliTest, PipelineOnK6Passes) {
  io::write_file(path("k6.json"), io::to_json(fixtures::k6_torus()));
  const Outcome r = run_cli({"pipeline", path("k6.json"), "--out-dir", path("run")});
  ASSERT_EQ(r.code, cli::kOk) << r.err << r.out;
  const auto manifest = io::read_file(path("run/manifest.json"));
  for (const auto& [name, passed] : manifest["checks"].items()) EXPECT_TRUE(passed.get<bool>()) << name;
  for (const char* file : {"outerplanar.json", "universal.json", "witness.json"}) {
    EXPECT_TRUE(fs::exists(path("run/") + file)) << file;
  }

  const Outcome check = run_cli({"verify-witness", path("k6.json"), path("run/universal.json"), path("run/witness.json")});
  EXPECT_EQ(check.code, cli::kOk) << check.out;
  EXPECT_TRUE(io::Json::parse(check.out)["valid"].get<bool>());
}

TEST_F(CliTest, VerifyWitnessFlagsBrokenWitness) {
  io::write_file(path("k6.json"), io::to_json(fixtures::k6_torus()));
  ASSERT_EQ(run_cli({"embed", path("k6.json"), "--out-universal", path("u.json"), "--out-witness", path("w.json")}).code,
            cli::kOk);
  auto w = io::witness_from_json(io::read_file(path("w.json")));
  w.branch_sets.begin()->second.clear();
  io::write_file(path("w.json"), io::to_json(w));
  const Outcome r = run_cli({"verify-witness", path("k6.json"), path("u.json"), path("w.json")});
  EXPECT_EQ(r.code, cli::kVerificationFailed);
  EXPECT_FALSE(io::Json::parse(r.out)["valid"].get<bool>());
}

TEST_F(CliTest, HamiltonianMajorOnOctahedron) {
  io::write_file(path("oct.json"), io::to_json(fixtures::octahedron()));
  const Outcome r = run_cli({"hamiltonian-major", path("oct.json"), "--circuit", "0,3,1,2", "--out", path("h.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(io::Json::parse(r.out)["verified"].get<bool>());
  EXPECT_EQ(io::plane_graph_from_json(io::read_file(path("h.json"))).vertex_count(), 8u);
  EXPECT_EQ(run_cli({"hamiltonian-major", path("oct.json"), "--circuit", "1,2,5,3"}).code, cli::kBadInput);
}

TEST_F(CliTest, ExportDrawsWitnessClusters) {
  io::write_file(path("k6.json"), io::to_json(fixtures::k6_torus()));
  ASSERT_EQ(run_cli({"embed", path("k6.json"), "--out-universal", path("u.json"), "--out-witness", path("w.json")}).code,
            cli::kOk);
  const Outcome dot = run_cli({"export", path("u.json"), "--format", "dot", "--sewn", "--witness", path("w.json")});
  ASSERT_EQ(dot.code, cli::kOk) << dot.err;
  EXPECT_NE(dot.out.find("graph"), std::string::npos);
  EXPECT_NE(dot.out.find("subgraph cluster_"), std::string::npos);

  ASSERT_EQ(run_cli({"export", path("u.json"), "--format", "svg", "--out", path("u.svg")}).code, cli::kOk);
  EXPECT_NE(slurp(path("u.svg")).find("<svg"), std::string::npos);
  EXPECT_EQ(run_cli({"export", path("u.json"), "--format", "png"}).code, cli::kBadInput);
}
