#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "oracles.hpp"

using namespace ultratree;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ultratree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = ULTRATREE_DATA_DIR;
const std::string kPath = kData + "/path_tree.json";

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ultratree_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CenterOfTree) {
  const auto r = run({"center", kPath});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{0, 2}\n");
  EXPECT_EQ(run({"center", kData + "/x3.csv"}).out, "{0, 2}\n");
}

TEST_F(Cli, ValidateReportsDegenerateEdge) {
  EXPECT_EQ(run({"validate", kPath}).out, "valid: 4 vertices, 3 edges, non-degenerate\n");
  const auto bad = run({"validate", kData + "/degenerate_tree.json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "degenerate: edge {a, b} has both labels 0\n");
  const auto degenerate = run({"distances", kData + "/degenerate_tree.json"});
  EXPECT_EQ(degenerate.code, 1);
  EXPECT_NE(degenerate.err.find("DegenerateLabeling"), std::string::npos);
}

TEST_F(Cli, DiametricalWithDot) {
  const auto r = run({"diametrical", kPath, "--dot", path("g.dot")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("edges: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("parts: {{x1}, {x2}, {x3, x4}}\n"), std::string::npos);
  EXPECT_NE(r.out.find("star center: x1\n"), std::string::npos);
  const std::string dot = read_file(path("g.dot"));
  EXPECT_EQ(dot, diametrical_dot(oracle::path_space()));
  EXPECT_NE(dot.find("star center"), std::string::npos);
}

TEST_F(Cli, DistancesRoundTrip) {
  ASSERT_EQ(run({"distances", kPath, "-o", path("m.csv")}).code, 0);
  EXPECT_EQ(parse_matrix_csv(read_file(path("m.csv"))), distance_matrix(oracle::path_tree()));
  EXPECT_EQ(run({"center", path("m.csv")}).out, run({"center", kPath}).out);
  EXPECT_EQ(run({"distances", kPath}).out, read_file(path("m.csv")));
}

TEST_F(Cli, CanonicalWritesTree) {
  ASSERT_EQ(run({"canonical", kPath, "-o", path("c.json")}).code, 0);
  EXPECT_EQ(validate_tree(parse_tree_json(read_file(path("c.json")))), oracle::path_tree());
}

TEST_F(Cli, Spheres) {
  const auto all = run({"spheres", kData + "/x3.csv", "--subsets"});
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("7 of 7 non-empty subsets are centered spheres"), std::string::npos);
  const auto fig = run({"spheres", kPath, "--subsets"});
  EXPECT_NE(fig.out.find("{x1, x2} not a sphere"), std::string::npos);
  EXPECT_NE(run({"spheres", kPath}).out.find("centered spheres\n"), std::string::npos);
}

TEST_F(Cli, CheckSuite) {
  const auto tree = run({"check", kPath});
  EXPECT_EQ(tree.code, 0);
  const auto doc = nlohmann::json::parse(tree.out);
  EXPECT_EQ(doc["facts"]["star_center"], "x1");
  EXPECT_EQ(doc["all_passed"], true);
  const auto clusters = run({"check", kData + "/two_clusters.csv"});
  EXPECT_EQ(clusters.code, 0);
  EXPECT_NE(clusters.out.find("COUNTEREXAMPLE"), std::string::npos);
}

TEST_F(Cli, EnumerateHol) {
  const auto r = run({"enumerate", "--n", "3", "--check", "hol"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["facts"]["satisfying_count"], "1");
  EXPECT_EQ(doc["facts"]["satisfying_1"], "2(*,1(*,*)) (weakly similar to X3)");
}

TEST_F(Cli, EnumerateWritesReportFile) {
  ASSERT_EQ(run({"enumerate", "--n", "4", "--check", "con3", "-o", path("r.json")}).code, 0);
  const auto doc = nlohmann::json::parse(read_file(path("r.json")));
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["facts"]["max_center_size"], "3");
}

TEST_F(Cli, RandomClosedBalls) {
  const auto r = run({"enumerate", "--n", "8", "--check", "closed-balls", "--random", "50", "--seed", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["classes_checked"], 50);
  EXPECT_EQ(run({"enumerate", "--n", "4", "--check", "con3", "--random", "5"}).code, 1);
}

TEST_F(Cli, JobsNeverChangeOutput) {
  for (const char* check : {"con3", "hol", "closed-balls", "suite"}) {
    const auto one = run({"enumerate", "--n", "5", "--check", check});
    const auto many = run({"--jobs", "4", "enumerate", "--n", "5", "--check", check});
    EXPECT_EQ(one.code, 0) << check;
    EXPECT_EQ(one.out, many.out) << check;
  }
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"random-tree", "--n", "9", "--seed", "4", "--pool", "0,1/2,3"},
                                             {"enumerate", "--n", "6", "--check", "suite"},
                                             {"diametrical", kPath},
                                             {"padic", "--p", "3", "--sample", "0,1,1/3,9,2/9"}})
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, Samplers) {
  const auto p = run({"padic", "--p", "2", "--sample", "0,1,2,3"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "0,1,2,3\n0,1,1/2,1\n1,0,1,1/2\n1/2,1,0,1\n1,1/2,1,0\n");
  const auto d = run({"dplus", "--sample", "0,1,2", "-o", path("d.csv")});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(read_file(path("d.csv")), "0,1,2\n0,1,2\n1,0,2\n2,2,0\n");
  EXPECT_EQ(run({"padic", "--p", "4", "--sample", "0,1"}).code, 1);
  EXPECT_EQ(run({"padic", "--p", "2", "--sample", "0,0.5"}).code, 1);
}

TEST_F(Cli, IsUt) {
  ASSERT_EQ(run({"distances", kPath, "-o", path("m.csv")}).code, 0);
  const auto yes = run({"is-ut", path("m.csv")});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out.rfind("UT-space: generated by\n", 0), 0u);
  const auto tree = validate_tree(parse_tree_json(yes.out.substr(yes.out.find('{'))));
  EXPECT_EQ(distance_matrix(tree), distance_matrix(oracle::path_tree()));
  ASSERT_EQ(run({"padic", "--p", "2", "--sample", "0,1,2,3", "-o", path("p.csv")}).code, 0);
  EXPECT_EQ(run({"is-ut", path("p.csv")}).out, "not a UT-space\n");
}

TEST_F(Cli, RandomTreeIsDeterministic) {
  const auto a = run({"random-tree", "--n", "12", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(validate_tree(parse_tree_json(a.out)), random_labeled_tree(12, {Rational(0), Rational(1), Rational(2), Rational(3)}, 7));
  EXPECT_EQ(run({"random-tree", "--n", "3", "--seed", "1", "--pool", "0"}).code, 1);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n", "3", "--check", "nope"}).code, 2);
  EXPECT_EQ(run({"--jobs", "0", "enumerate", "--n", "3", "--check", "con3"}).code, 2);
  EXPECT_EQ(run({"center", "/no/such/file.csv"}).code, 1);
  const auto big = run({"enumerate", "--n", "11", "--check", "con3"});
  EXPECT_EQ(big.code, 3);
  EXPECT_NE(big.err.find("TooLarge"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "--n", "9", "--check", "hol"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, EnvironmentLowersFence) {
  setenv("ULTRATREE_MAX_N", "3", 1);
  const auto r = run({"enumerate", "--n", "4", "--check", "con3"});
  unsetenv("ULTRATREE_MAX_N");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"enumerate", "--n", "4", "--check", "con3"}).code, 0);
}
