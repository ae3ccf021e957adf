#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DALC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const char* name) {
  return std::string(DALC_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("verdicts ride the payload, exit code stays 0") {
  auto t = run("entails " + fixture("kb1.dl") + " --method mp \"T(Penguin) <= HasNiceFeather\"");
  CHECK(t.exit_code == 0);
  CHECK(t.out == "true\n");
  auto f = run("entails " + fixture("kb1.dl") + " --method rc \"T(Penguin) <= HasNiceFeather\"");
  CHECK(f.exit_code == 0);
  CHECK(f.out == "false\n");
}

TEST_CASE("rank output") {
  auto r = run("rank " + fixture("kb1.dl") + " Penguin");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rank(Penguin) = 1") != std::string::npos);
  CHECK(r.out.find("stratum 0: T(Bird) <= Fly, T(Bird) <= HasNiceFeather") !=
        std::string::npos);
  auto inf = run("rank " + fixture("kb1.dl") + " \"A and not A\"");
  CHECK(inf.out.find("= inf") != std::string::npos);
}

TEST_CASE("json schema fields") {
  auto r = run("entails " + fixture("kb4.dl") +
               " --method mp --json \"T(BabyPenguin) <= not Fly\"");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "mp");
  CHECK(j["query"] == "T(BabyPenguin) <= not Fly");
  CHECK(j["entailed"] == true);
  CHECK(j["rank_lhs"] == "2");
  CHECK(j["rank_lhs_and_neg_rhs"] == "2");
  CHECK(j.contains("bases"));
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("structured output is deterministic modulo timing") {
  const std::string cmd =
      "bases " + fixture("kb2.dl") + " --method mp --json Penguin";
  auto a = nlohmann::json::parse(run(cmd).out);
  auto b = nlohmann::json::parse(run(cmd).out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
  CHECK(a["bases"].size() == 2);
}

TEST_CASE("explain lists per-base outcomes") {
  auto r = run("entails " + fixture("kb2.dl") +
               " --method mp --explain \"T(Penguin) <= A\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("holds {T(Bird) <= A, T(Penguin) <= not Fly}") !=
        std::string::npos);
  CHECK(r.out.find("fails {T(Bird) <= H, T(Penguin) <= not Fly}") !=
        std::string::npos);
}

TEST_CASE("error exit codes") {
  auto parse = run("entails " + fixture("kb1.dl") + " --method rc \"T(Penguin <= Fly\"");
  CHECK(parse.exit_code == 2);

  FILE* bad = fopen("bad_abox.dl", "w");
  REQUIRE(bad);
  fputs("A <= Bot. A(x).\n", bad);
  fclose(bad);
  CHECK(run("entails bad_abox.dl --method rc \"A <= B\"").exit_code == 3);
  CHECK(run("check bad_abox.dl").exit_code == 3);
  CHECK(run("check " + fixture("kb1.dl")).exit_code == 0);
  remove("bad_abox.dl");

  FILE* role = fopen("role_kb.dl", "w");
  REQUIRE(role);
  fputs("A <= exists r.B. T(A) <= B.\n", role);
  fclose(role);
  CHECK(run("entails role_kb.dl --method oracle-rc \"T(A) <= B\"").exit_code ==
        5);
  remove("role_kb.dl");

  auto budget = run("entails " + fixture("kb4.dl") +
                    " --method rc --max-nodes 3 \"T(Penguin) <= not Fly\"");
  CHECK(budget.exit_code == 4);
}

TEST_CASE("environment variable mirrors --max-nodes") {
  auto r = run("entails " + fixture("kb4.dl") +
               " --method rc \"T(Penguin) <= not Fly\"");
  CHECK(r.exit_code == 0);
  std::string cmd = std::string("DEFEASIBLE_ALC_MAX_NODES=3 ") + DALC_CLI_PATH +
                    " entails " + fixture("kb4.dl") +
                    " --method rc \"T(Penguin) <= not Fly\" 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) {
  }
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 4);
}
