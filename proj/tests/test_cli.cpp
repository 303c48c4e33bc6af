#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(ISOSCHUB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t k = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, ExpandInSchurBasis) {
  CliResult r = run("expand --family qtilde --partition 2,1 --vars 5 --basis schur");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s[2,1] - s[1,1,1]\n");
  EXPECT_EQ(run("expand --family qtilde --partition 2,1 --vars 2").out, "x1^2*x2 + x1*x2^2\n");
}

TEST(Cli, MaximalLocus) {
  CliResult r = run("locus --geometry lagrangian --kind maximal --k 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Qt[1](E~) + Qt[1](F~)\n");
  EXPECT_EQ(run("locus --geometry odd_orth --kind single --i 1 --naming rv").out, "1/2*(c[1](R~) + s[1](V_n~))\n");
}

TEST(Cli, VerifyOrthogonality) {
  CliResult r = run("verify --suite orthogonality --n 3 --geometry lagrangian");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "64/64 pairs OK\n");
}

TEST(Cli, OtherVerbs) {
  EXPECT_EQ(run("convert --poly 'x1^2*x2 + x1*x2^2' --vars 2 --basis qtilde").out, "Qt[2,1]\n");
  EXPECT_EQ(run("pieri --family qtilde --partition 1 --r 1 --vars 3 --check").out, "2*Qt[2] + Qt[1,1]\ncheck: OK\n");
  EXPECT_EQ(run("pushforward --geometry lagrangian --partition 2,1,1,1 --n 2 --check").out, "-c[2](V)\ncheck: OK\n");
  EXPECT_EQ(run("diagonal --geometry lagrangian --n 1 --expand").out, "c[1](R1~) + c[1](R2~)\n");
  EXPECT_EQ(run("schubert --w -1,2").out, "x1 + x2\n");
  EXPECT_EQ(run("schubert --partition 2,1 --n 2").out, "x1^2*x2 + x1*x2^2\n");
}

TEST(Cli, JsonOutputIsVersioned) {
  CliResult r = run("expand --family qtilde --partition 2,1 --vars 5 --basis schur --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["verb"], "expand");
  EXPECT_EQ(j["result"]["text"], "s[2,1] - s[1,1,1]");
  EXPECT_EQ(j["result"]["terms"].size(), 2u);
  EXPECT_EQ(j["result"]["terms"][1]["coeff"], "-1");
  auto v = nlohmann::json::parse(run("verify --suite thm-5-23 --n 2 --format json").out);
  EXPECT_EQ(v["reports"][0]["cases"], 16 + 16 + 4);
  EXPECT_EQ(v["ok"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("expand --family qtilde --vars 3 --bogus").code, 2);
  EXPECT_EQ(run("expand --family nonsense --partition 1 --vars 3").code, 2);
  EXPECT_EQ(run("verify --suite no-such-suite").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("expand --family qtilde --partition 5,4 --vars 5", "ISOSCHUB_MAX_DEGREE=5").code, 2);
  EXPECT_EQ(run("expand --family qtilde --partition 5,4 --vars 5", "ISOSCHUB_MAX_DEGREE=9").code, 0);
}

TEST(Cli, Deterministic) {
  const std::string args = "locus --geometry lagrangian --kind two --i 3 --j 1 --n 4";
  EXPECT_EQ(run(args).out, run(args).out);
}
