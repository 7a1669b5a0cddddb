#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tensorbound-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args) const {
    const fs::path err_file = dir_ / "stderr.txt";
    const std::string cmd =
        "cd '" + dir_.string() + "' && '" TENSORBOUND_CLI "' " + args + " 2>'" + err_file.string() + "'";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.err = ss.str();
    return r;
  }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
};

TEST_F(Cli, GoldenDemos) {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(TENSORBOUND_GOLDEN_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    const json golden = json::parse(in);
    const std::string name = golden.at("demo");
    const std::string m = std::to_string(golden.at("m").get<int>());
    SCOPED_TRACE(name);

    const Result r = run("--output json demo " + name + " --m " + m + " --write " + name + ".json");
    ASSERT_EQ(r.code, 0) << r.err;
    const json report = json::parse(r.out);
    for (const auto& [key, value] : golden.at("expect").items()) {
      ASSERT_TRUE(report.contains(key)) << key;
      EXPECT_NEAR(report.at(key).get<double>(), value.get<double>(), 1e-9) << key;
    }

    // The written instance reproduces the same report through `bound`.
    const Result again = run("--output json bound " + name + ".json");
    ASSERT_EQ(again.code, 0) << again.err;
    const json report2 = json::parse(again.out);
    EXPECT_EQ(report2.at("complete_bound"), report.at("complete_bound"));
    EXPECT_EQ(report2.at("exact_norm_squared"), report.at("exact_norm_squared"));
    ++count;
  }
  EXPECT_GE(count, 7u);
}

TEST_F(Cli, DemoWritesDefaultPath) {
  const Result r = run("demo heisenberg");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "demo-heisenberg.json"));
  EXPECT_NE(r.out.find("complete bound"), std::string::npos) << r.out;
}

TEST_F(Cli, DemoNoWrite) {
  const Result r = run("demo two-spin --no-write");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(fs::exists(dir_ / "demo-two-spin.json"));
}

TEST_F(Cli, UnknownDemoIsUsageError) {
  EXPECT_EQ(run("demo nonsense --no-write").code, 2);
}

TEST_F(Cli, BoundWithGraphFromFile) {
  ASSERT_EQ(run("demo star --m 5 --write s.json").code, 0);
  const Result r = run("--output json bound s.json --graph");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j.at("graph_constant").get<double>(), 7.0, 1e-12);
  EXPECT_NEAR(j.at("sparse_bound").get<double>(), 5.0 + 7.0 * 8.0, 1e-9);
  EXPECT_TRUE(j.at("domination").at("satisfied").get<bool>());
}

TEST_F(Cli, BoundWithoutGraphIgnoresFileGraph) {
  ASSERT_EQ(run("demo star --m 4 --write s.json").code, 0);
  const json j = json::parse(run("--output json bound s.json").out);
  EXPECT_FALSE(j.at("graph_supplied").get<bool>());
  EXPECT_FALSE(j.contains("sparse_bound"));
}

TEST_F(Cli, BoundNamedGraphs) {
  ASSERT_EQ(run("demo clifford --m 4 --write c.json").code, 0);
  const json star = json::parse(run("--output json bound c.json --graph star").out);
  EXPECT_NEAR(star.at("graph_constant").get<double>(), 5.0, 1e-12);
  const json complete = json::parse(run("--output json bound c.json --graph complete").out);
  EXPECT_NEAR(complete.at("sparse_bound").get<double>(), complete.at("complete_bound").get<double>(), 1e-12);
  EXPECT_EQ(run("bound c.json --graph wheel").code, 2);
  ASSERT_EQ(run("demo heisenberg --write h.json").code, 0);
  EXPECT_EQ(run("bound h.json --graph file").code, 2);
}

TEST_F(Cli, CounterexampleGraphFails) {
  ASSERT_EQ(run("demo counterexample --write ce.json").code, 0);
  const Result r = run("--output json bound ce.json --graph");
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  const json& v = j.at("domination").at("violations");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].at("pair"), json::parse("[0, 2]"));
  EXPECT_DOUBLE_EQ(v[0].at("lhs").get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(v[0].at("rhs").get<double>(), 0.0);
  EXPECT_FALSE(j.contains("sparse_bound"));
  EXPECT_NE(r.err.find("domination"), std::string::npos) << r.err;
}

TEST_F(Cli, CheckDomination) {
  ASSERT_EQ(run("demo counterexample --write ce.json").code, 0);
  ASSERT_EQ(run("demo chain --m 5 --write ch.json").code, 0);
  EXPECT_EQ(run("check-domination ce.json").code, 1);
  const Result ok = run("--output json check-domination ch.json");
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(json::parse(ok.out).at("weighted").get<bool>());
  EXPECT_FALSE(json::parse(run("--output json check-domination ch.json --unweighted").out).at("weighted").get<bool>());
  EXPECT_EQ(run("check-domination ch.json --graph none").code, 2);
}

TEST_F(Cli, CsvOutput) {
  ASSERT_EQ(run("demo chsh --write c.json").code, 0);
  const Result r = run("--output csv bound c.json");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("quantity,value,source\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("complete_bound,"), std::string::npos);
  EXPECT_EQ(run("--output csv exact c.json").code, 2);
}

TEST_F(Cli, Exact) {
  ASSERT_EQ(run("demo heisenberg --write h.json").code, 0);
  const Result r = run("--output json exact h.json");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const auto eig = j.at("eigenvalues").get<std::vector<double>>();
  ASSERT_EQ(eig.size(), 4u);
  EXPECT_NEAR(eig[0], -3.0, 1e-10);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(eig[k], 1.0, 1e-10);
  EXPECT_EQ(run("--dim-cap 2 exact h.json").code, 1);
}

TEST_F(Cli, DimCapSkipsExactInBound) {
  ASSERT_EQ(run("demo clifford --m 6 --write c.json").code, 0);
  const Result r = run("--output json --dim-cap 16 bound c.json");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_FALSE(j.contains("exact_norm_squared"));
  EXPECT_TRUE(j.contains("exact_skipped_reason"));
}

TEST_F(Cli, CertifyFromWeights) {
  const Result r = run("--output json certify --beta 3 --weights 1,1,1 -t 2 -t 1");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("beta_source"), "external");
  EXPECT_DOUBLE_EQ(j.at("excess").get<double>(), 6.0);
  ASSERT_EQ(j.at("counting").size(), 2u);
  EXPECT_EQ(j.at("counting")[0].at("pairs_lower_bound").get<int>(), 3);
  EXPECT_EQ(j.at("counting")[1].at("pairs_lower_bound").get<int>(), 6);
}

TEST_F(Cli, CertifyFromInstanceUsesLambdaMax) {
  ASSERT_EQ(run("demo chsh --write c.json").code, 0);
  const Result r = run("--output json certify c.json --threshold 2");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("beta_source"), "computed");
  EXPECT_NEAR(j.at("beta").get<double>(), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_EQ(j.at("counting")[0].at("pairs_lower_bound").get<int>(), 2);
}

TEST_F(Cli, CertifyWithGraphAndPhiThreshold) {
  ASSERT_EQ(run("demo star --m 4 --write s.json").code, 0);
  const Result r = run("--output json certify s.json --graph -t 1 --phi-threshold 1 --c-max 1");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("domination"), "verified");
  EXPECT_NEAR(j.at("graph_constant").get<double>(), 5.0, 1e-12);
  EXPECT_TRUE(j.contains("phi_threshold"));
  const Result asserted = run("--output json certify --beta 4 --weights 1,1,1,1 --graph star -t 1");
  ASSERT_EQ(asserted.code, 0) << asserted.err;
  EXPECT_EQ(json::parse(asserted.out).at("domination"), "asserted_not_verified");
}

TEST_F(Cli, CertifyUsageErrors) {
  EXPECT_EQ(run("certify --weights 1,1").code, 2);
  EXPECT_EQ(run("certify --beta 2").code, 2);
  EXPECT_EQ(run("certify --beta 2 --weights 1,1 --phi-threshold 1").code, 2);
  EXPECT_EQ(run("certify --beta 2 --weights 1,1 -t 0").code, 1);
  EXPECT_EQ(run("certify --beta 2 --weights 1,1 --phi-threshold 1 --c-max 0.5").code, 1);
}

TEST_F(Cli, Sweep) {
  const Result r = run("--output json --seed 5 sweep --trials 60");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("config").at("seed").get<int>(), 5);
  const Result serial = run("--output json --seed 5 sweep --trials 60 --serial");
  EXPECT_EQ(json::parse(serial.out), j);
  EXPECT_EQ(run("sweep --ensemble gaussian").code, 2);
  EXPECT_EQ(run("sweep --trials 0").code, 2);
}

TEST_F(Cli, ViolationExitCode) {
  // A negative tolerance turns an attained bound into a reported violation.
  ASSERT_EQ(run("demo clifford --m 3 --write c.json").code, 0);
  EXPECT_EQ(run("--tol -1 bound c.json").code, 4);
  EXPECT_EQ(run("--tol -1 sweep --trials 10").code, 4);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("bound").code, 2);
  EXPECT_EQ(run("--output xml bound x.json").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, IoAndValidationErrors) {
  EXPECT_EQ(run("bound missing.json").code, 3);
  write("broken.json", "{ not json");
  EXPECT_EQ(run("bound broken.json").code, 1);
  write("bad.json", R"({"schema_version":"tensorbound/1","dim_h":1,"dim_k":1,"x":[[[[2,0]]]],"y":[[[[1,0]]]]})");
  const Result r = run("bound bad.json");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("x[0]"), std::string::npos) << r.err;
  EXPECT_EQ(run("demo chsh --write /nonexistent/dir/c.json").code, 3);
}

}  // namespace
