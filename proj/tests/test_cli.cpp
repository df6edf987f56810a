#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using adjspec::cli::run_command;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_witness(const json& j) {
  if (j.is_object()) {
    if (j.contains("witness")) return true;
    for (const auto& [k, v] : j.items()) {
      if (has_witness(v)) return true;
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (has_witness(v)) return true;
    }
  }
  return false;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("adjspec_cli_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST(Cli, GenerateThenAnalyzeFromFile) {
  const CliRun gen = run({"generate", "--family", "lattice", "--dim", "2", "--width", "3"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const auto path = temp_file("plane.json", gen.out);
  const CliRun analyze = run({"analyze", "--input", path.string()});
  EXPECT_EQ(analyze.code, 0) << analyze.err;
  const json report = json::parse(analyze.out);
  EXPECT_TRUE(report.at("pass").get<bool>());
  EXPECT_TRUE(report.at("admissible").get<bool>());
  EXPECT_FALSE(has_witness(report));
  std::filesystem::remove(path);
}

TEST(Cli, FailingCheckCarriesWitness) {
  const CliRun r = run({"analyze", "--family", "fock", "--base-dim", "2", "--base-width", "4", "--n", "2"});
  EXPECT_EQ(r.code, 1);
  const json report = json::parse(r.out);
  EXPECT_FALSE(report.at("pass").get<bool>());
  EXPECT_TRUE(has_witness(report));
  const std::string text = report.dump();
  EXPECT_NE(text.find("{(1,0),(1,1)}"), std::string::npos);
  EXPECT_NE(text.find("{(0,1),(1,1)}"), std::string::npos);
}

TEST(Cli, WitnessIffNonZeroExit) {
  const std::vector<std::vector<std::string>> cases{
      {"analyze", "--family", "lattice", "--dim", "1", "--width", "5"},
      {"analyze", "--family", "half-plane", "--width", "4"},
      {"analyze", "--family", "ladder-rungs", "--width", "3"},
      {"analyze", "--family", "ladder-alt", "--width", "3", "--checks", "admissible,adapted,kernel,spectrum"},
      {"analyze", "--family", "dproduct", "--factors", "lattice:1:3,lattice:1:3", "--d", "10,11", "--checks",
       "admissible,adapted,tensor"},
  };
  for (const auto& args : cases) {
    const CliRun r = run(args);
    ASSERT_TRUE(r.code == 0 || r.code == 1) << r.err;
    EXPECT_EQ(has_witness(json::parse(r.out)), r.code == 1) << args[2];
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "--family", "nonsense"}).code, 2);
  EXPECT_EQ(run({"analyze", "--family", "lattice", "--width", "x"}).code, 2);
  EXPECT_EQ(run({"analyze", "--family", "lattice", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"probe", "--family", "lattice", "--kind", "resolvent", "--mu", "0"}).code, 2);
  const auto bad = temp_file("bad.json", "{\"format\": \"dgraph-v1\", \"vertices\": [");
  const CliRun r = run({"analyze", "--input", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
  std::filesystem::remove(bad);
  EXPECT_EQ(run({"analyze", "--input", "/nonexistent/graph.json"}).code, 2);
}

TEST(Cli, ResourceCap) {
  ::setenv("SPECTRA_MAX_VERTICES", "100", 1);
  const CliRun r = run({"analyze", "--family", "fock", "--base-width", "8", "--n", "3"});
  ::unsetenv("SPECTRA_MAX_VERTICES");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("ResourceCap"), std::string::npos);
}

TEST(Cli, ByteStableReports) {
  const std::vector<std::vector<std::string>> cases{
      {"analyze", "--family", "fock", "--base-width", "5", "--n", "2", "--checks", "admissible,adapted,identities,kernel"},
      {"kernel", "--family", "ladder-alt", "--width", "4", "--mode", "all", "--symmetry", "flip"},
      {"spectrum", "--family", "half-plane", "--width", "3", "--operator", "K"},
      {"probe", "--family", "fock", "--n", "2", "--kind", "compact", "--sizes", "4,5"},
  };
  for (const auto& args : cases) {
    const CliRun a = run(args);
    const CliRun b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, SpectrumCsvAndJsonAgree) {
  const CliRun csv = run({"spectrum", "--family", "lattice", "--dim", "1", "--width", "3", "--format", "csv"});
  const CliRun js = run({"spectrum", "--family", "lattice", "--dim", "1", "--width", "3"});
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(js.code, 0);
  std::istringstream in(csv.out);
  std::vector<double> values;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) values.push_back(std::stod(line));
  }
  const json report = json::parse(js.out);
  EXPECT_EQ(values.size(), 7u);
  EXPECT_NE(report.dump().find("eigenvalues"), std::string::npos);
}

TEST(Cli, OutFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "adjspec_cli_out.json";
  const CliRun r = run({"generate", "--family", "ladder-alt", "--width", "2", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j.at("format"), "dgraph-v1");
  std::filesystem::remove(path);
}
