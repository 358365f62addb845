#include "fanoweb/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace fanoweb;

namespace {

struct CliRun {
  int code;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

CliRun run(const std::vector<std::string>& args) {
  std::string cmd = quote(FANOWEB_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kInf = "[[1,0],[0,1],[-1,-1]]";
const std::string kSInf = "[[0,1],[-1,0],[1,-1]]";
const std::string kNabla2 = "[[1,0],[0,1],[-1,0],[-2,-1]]";

}  // namespace

TEST(Cli, Classify) {
  CliRun r = run({"classify", kNabla2});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_TRUE(j["canonical"].get<bool>());
  EXPECT_FALSE(j["terminal"].get<bool>());
}

TEST(Cli, InvalidInputExitsOne) {
  CliRun r = run({"classify", "[[1,0],"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["error"], "invalid_input");
  EXPECT_EQ(run({"classify", "/nonexistent/file.json"}).code, 1);
  EXPECT_EQ(run({"connect", kNabla2, kInf, "--class", "terminal"}).code, 1);
}

TEST(Cli, ConnectThenVerify) {
  auto dir = std::filesystem::temp_directory_path() / "fanoweb_cli_test";
  std::filesystem::create_directories(dir);
  std::string cert = (dir / "cert.json").string();
  CliRun r = run({"--out", cert, "connect", kInf, kSInf});
  ASSERT_EQ(r.code, 0) << r.out;
  CliRun v = run({"verify", cert});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_TRUE(json::parse(v.out)["ok"].get<bool>());

  json c;
  std::ifstream(cert) >> c;
  c["chain"][1] = json::parse(R"({"dim":2,"vertices":[[1,0],[0,1],[-1,0],[0,-1]]})");
  std::ofstream(cert) << c.dump();
  CliRun bad = run({"verify", cert});
  EXPECT_EQ(bad.code, 3);
  EXPECT_FALSE(json::parse(bad.out)["ok"].get<bool>());

  CliRun svg = run({"render", (dir / "cert.json").string()});
  EXPECT_EQ(svg.code, 0);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BfsNotFoundExitsTwo) {
  CliRun r = run({"bfs", "[[1,0],[0,1],[-1,0],[0,-1]]", kNabla2, "--class", "canonical", "--box", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["error"], "not_found");
}

TEST(Cli, EnumerateWithSeed) {
  CliRun r = run({"enumerate", "--class", "reflexive", "--box", "3", "--seed", "42"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["classes"].size(), 16u);
  EXPECT_EQ(j["orbit_mismatches"], 0);
}

TEST(Cli, LinksFromAFiberedSet) {
  CliRun r = run({"links", R"({"set":[[-1,-1],[-1,0],[0,1],[1,0]],"fiber":[[-1,0],[1,0]]})", "--box", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(json::parse(r.out)["links"].empty());
}

TEST(Cli, Bundles) {
  CliRun r = run({"bundles"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_TRUE(j["impure_sequence"]["valid"].get<bool>());
  EXPECT_EQ(j["impure_sequence"]["impure"].size(), 2u);
  EXPECT_TRUE(j["fano_sequence"]["impure"].empty());
  EXPECT_TRUE(j["v4_in_hull_A12357"].get<bool>());
  EXPECT_FALSE(j["v6_in_hull_A12357"].get<bool>());
}

TEST(Cli, UnknownSubcommandFails) { EXPECT_NE(run({"frobnicate"}).code, 0); }
