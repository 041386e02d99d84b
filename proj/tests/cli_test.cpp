#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "starsep/starsep.hpp"

using namespace starsep;
namespace fs = std::filesystem;

namespace {

const std::string samples = STARSEP_SAMPLES_DIR;

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "starsep_cli_test";
  fs::create_directories(dir);
  return dir;
}

int exit_status(const std::string& args) {
  std::string cmd = std::string(STARSEP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

RunConfig config(std::string command, std::vector<std::string> inputs) {
  RunConfig cfg;
  cfg.command = std::move(command);
  cfg.inputs = std::move(inputs);
  return cfg;
}

}  // namespace

TEST(Cli, RecognizeExitCodes) {
  EXPECT_EQ(exit_status("recognize " + samples + "/w5.json"), exit_non_member);
  EXPECT_EQ(exit_status("recognize " + samples + "/w93.json"), exit_ok);
  EXPECT_EQ(exit_status("recognize --variant star " + samples + "/c6.json"), exit_ok);
  EXPECT_EQ(exit_status("recognize --variant bogus " + samples + "/c6.json"), exit_input);
}

TEST(Cli, DecomposeWritesAValidCertificate) {
  fs::path out = scratch() / "w93_td.json";
  ASSERT_EQ(exit_status("-o " + out.string() + " decompose " + samples + "/w93.json"), exit_ok);
  auto report = read_json(out);
  ASSERT_TRUE(report.contains("decomposition"));
  EXPECT_EQ(exit_status("verify-cert " + samples + "/w93.json " + out.string()), exit_ok);

  nlohmann::json broken = report["decomposition"];
  broken["bags"] = nlohmann::json::array({nlohmann::json::array({0, 1})});
  broken["edges"] = nlohmann::json::array();
  fs::path bad = scratch() / "broken_td.json";
  std::ofstream(bad) << broken.dump();
  EXPECT_EQ(exit_status("verify-cert " + samples + "/w93.json " + bad.string()), exit_input);
}

TEST(Cli, SeparatorOnW93) {
  fs::path out = scratch() / "w93_sep.json";
  ASSERT_EQ(exit_status("-o " + out.string() + " separator " + samples + "/w93.json"), exit_ok);
  auto j = read_json(out);
  EXPECT_EQ(j["separator"]["separator"], nlohmann::json::array({0, 3, 6, 9}));
  EXPECT_TRUE(j["c_balanced"].get<bool>());
  EXPECT_EQ(exit_status("separator --c 1.5 " + samples + "/w93.json"), exit_input);
  EXPECT_EQ(exit_status("separator " + samples + "/p9.json"), exit_hypothesis);
}

TEST(Cli, CapacityAndInputErrors) {
  fs::path k20 = scratch() / "k20.json";
  ASSERT_EQ(exit_status("-o " + k20.string() + " gen --kind K20"), exit_ok);
  EXPECT_EQ(exit_status("exact-tw " + k20.string()), exit_capacity);
  fs::path junk = scratch() / "junk.json";
  std::ofstream(junk) << "{ not json";
  EXPECT_EQ(exit_status("atoms " + junk.string()), exit_input);
  EXPECT_EQ(exit_status("atoms /nonexistent/file.json"), exit_input);
  EXPECT_EQ(exit_status("no-such-command"), exit_input);
}

TEST(Cli, GenIsSeeded) {
  fs::path a = scratch() / "gen_a.json", b = scratch() / "gen_b.json";
  ASSERT_EQ(exit_status("-o " + a.string() + " gen --n 12 --seed 5"), exit_ok);
  ASSERT_EQ(exit_status("-o " + b.string() + " gen --n 12 --seed 5"), exit_ok);
  EXPECT_EQ(read_json(a), read_json(b));
  EXPECT_EQ(read_json(a)["n"], 12);
}

TEST(Cli, BatchOverSamples) {
  fs::path out = scratch() / "batch.json";
  ASSERT_EQ(exit_status("-o " + out.string() + " batch --jobs 2 " + samples), exit_ok);
  auto j = read_json(out);
  EXPECT_FALSE(j.dump().empty());
}

TEST(CliRun, InProcessValidation) {
  std::ostringstream out, err;
  RunConfig cfg = config("separator", {samples + "/w93.json"});
  cfg.c = Ratio{1, 1};
  EXPECT_EQ(run(cfg, out, err), exit_input);
  cfg.c = one_half;
  cfg.t = 3;
  EXPECT_EQ(run(cfg, out, err), exit_input);
  cfg.t = 4;
  EXPECT_EQ(run(cfg, out, err), exit_ok);
  auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["separator"]["separator"], nlohmann::json::array({0, 3, 6, 9}));
}

TEST(CliRun, ExactTreewidthOfSamples) {
  for (auto [name, tw] : std::vector<std::pair<std::string, int>>{{"p9", 1}, {"c6", 2}, {"k5", 4}}) {
    std::ostringstream out, err;
    ASSERT_EQ(run(config("exact-tw", {samples + "/" + name + ".json"}), out, err), exit_ok) << err.str();
    EXPECT_EQ(nlohmann::json::parse(out.str())["treewidth"], tw) << name;
  }
}
