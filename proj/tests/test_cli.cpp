// Runs the installed command line tool as a child process.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(QLJUNG_CLI) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return o;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) o.out += buf.data();
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

TEST(Cli, CheckPasses) {
  const Outcome o = run_cli("check --statements q_ljunggren --p 5,7,11,13 --a-max 4");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("60 passed, 0 failed"), std::string::npos) << o.out;
}

TEST(Cli, ClassicalAtThreeExitsOne) {
  EXPECT_EQ(run_cli("check --statements classical --p 3 --a-max 2").code, 1);
  EXPECT_EQ(run_cli("check --statements classical --p 3 --a-max 2 --negative-controls").code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("check --statements bogus").code, 2);
  EXPECT_EQ(run_cli("check --statements clark --p x").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("reduce --n 10 --k 5 --p 4").code, 2);
}

TEST(Cli, ReduceGolden) {
  const Outcome o = run_cli("reduce --n 26 --k 13 --p 13 --power 3");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("remainder: 53 - 115*q^13 + 64*q^26"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("at q=1: 2 (mod 2197)"), std::string::npos);
}

TEST(Cli, AllWritesJson) {
  const auto path = std::filesystem::temp_directory_path() / "qljung_cli_all.json";
  const Outcome o = run_cli("all --p-max 13 --a-max 4 --out " + path.string());
  EXPECT_EQ(o.code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::ordered_json::parse(in);
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_EQ(j["summary"]["errored"], 0);
  std::filesystem::remove(path);
}

TEST(Cli, AllSmallPrimesIdentitiesOnly) {
  EXPECT_EQ(run_cli("all --p-max 4 --a-max 1").code, 0);
}

}  // namespace
