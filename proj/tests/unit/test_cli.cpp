#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(TORIC_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("toric_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("p2.json", R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"coeffs":["1","1","1"]})");
    write("bad.json", R"({"dim":1,"rays":[[1],[-1]],"coeffs":["0","1"]})");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, MldOfP2) {
  const CliRun r = run("mld " + path("p2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST_F(CliTest, TableValues) {
  const CliRun r = run("table --dim 2 --epsilons 1,1/2 --csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dim,epsilon,lambda,sum_bound\n2,1,18,42\n2,1/2,60,156\n");
  const CliRun j = run("table --dim 3 --epsilons 1");
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"lambda\": \"1812\""), std::string::npos);
}

TEST_F(CliTest, ConstructThenVerify) {
  const CliRun c = run("construct " + path("p2.json") + " -o " + path("cert.json"));
  EXPECT_EQ(c.code, 0) << c.out;
  const CliRun v = run("verify " + path("p2.json") + " " + path("cert.json"));
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("\"passed\": true"), std::string::npos);
}

TEST_F(CliTest, VerifyDetectsTampering) {
  write("cert.json", run("construct " + path("p2.json")).out);
  std::ifstream in(path("cert.json"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto pos = text.find("\"divisor_coeffs\": [\n    \"1\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(text.find("\"1\"", pos), 3, "\"2\"");
  write("tampered.json", text);
  const CliRun v = run("verify " + path("p2.json") + " " + path("tampered.json"));
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("\"passed\": false"), std::string::npos);
}

TEST_F(CliTest, DeterministicOutput) {
  const CliRun a = run("construct " + path("p2.json") + " --mode sharp");
  const CliRun b = run("construct " + path("p2.json") + " --mode sharp");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"mode\": \"sharp\""), std::string::npos);
}

TEST_F(CliTest, ValidateReportsViolations) {
  EXPECT_EQ(run("validate " + path("p2.json")).code, 0);
  const CliRun r = run("validate " + path("bad.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("coefficient must be in (0,1]"), std::string::npos);
}

TEST_F(CliTest, ErrorsAreJson) {
  const CliRun r = run("mld " + path("bad.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.rfind("{\"error\":", 0), 0u);
  const CliRun missing = run("mld " + path("nope.json"));
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("construct " + path("p2.json") + " --n 1").code, 2);
  EXPECT_EQ(run("construct " + path("p2.json") + " --epsilon 2").code, 2);
}

TEST_F(CliTest, WidthOracleVolume) {
  const CliRun w = run("width " + path("p2.json"));
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("\"width\": \"2\""), std::string::npos);
  const CliRun o = run("oracle-lambda " + path("p2.json") + " --cap 18");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"lambda\": \"2\""), std::string::npos);
  const CliRun v = run("volume " + path("p2.json"));
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("\"volume\": \"9\""), std::string::npos);
  EXPECT_NE(v.out.find("\"witness_power\": \"1/4\""), std::string::npos);
}

TEST_F(CliTest, CorpusIsReproducible) {
  const CliRun a = run("corpus --dim 2 --count 3 --seed 5 --out " + path("a"));
  const CliRun b = run("corpus --dim 2 --count 3 --seed 5 --out " + path("b"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  for (const char* name : {"pair-0000.json", "pair-0001.json", "pair-0002.json"}) {
    std::ifstream fa(dir_ / "a" / name);
    std::ifstream fb(dir_ / "b" / name);
    const std::string ta((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    const std::string tb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    EXPECT_FALSE(ta.empty());
    EXPECT_EQ(ta, tb);
    EXPECT_EQ(run("validate " + (dir_ / "a" / name).string()).code, 0);
  }
}
