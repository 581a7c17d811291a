#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "reproduce.hpp"

using qrf::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, usage_errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"sweep", "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"sweep", "--group", "D4"}).code, 2);
  EXPECT_EQ(run({"sweep", "--pair", "C_e"}).code, 2);
  EXPECT_EQ(run({"sweep", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"reproduce", "bogus"}).code, 2);
  EXPECT_EQ(run({"validate-group"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli, reproduce_fixtures) {
  for (const char* id : {"z2-example", "z3-counterexample", "chsh", "s3-imperfect"}) {
    const auto r = run({"reproduce", id});
    EXPECT_EQ(r.code, 0) << id << "\n" << r.out << r.err;
  }
  EXPECT_EQ(run({"reproduce", "s3-imperfect-params"}).code, 1);
}

TEST(cli, reproduce_json_shape) {
  const auto r = run({"reproduce", "z2-example"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("command"), "reproduce");
  EXPECT_EQ(j.at("id"), "z2-example");
  EXPECT_TRUE(j.at("pass").get<bool>());
  ASSERT_FALSE(j.at("rows").empty());
  EXPECT_EQ(j.at("rows")[0].at("quantity"), "fidelity");
}

TEST(cli, sweep_is_deterministic_across_jobs) {
  const auto a = run({"sweep", "--group", "S3", "--samples", "200", "--seed", "7", "--jobs", "1"});
  const auto b = run({"sweep", "--group", "S3", "--samples", "200", "--seed", "7", "--jobs", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"sweep", "--group", "S3", "--samples", "200", "--seed", "8"});
  EXPECT_NE(a.out, c.out);
}

TEST(cli, sweep_csv_header_and_rows) {
  const auto r = run({"sweep", "--group", "Z2", "--samples", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "state_id,group,pair,C_before,E_before,C_after,E_after,delta_sum,product");
  int rows = 0;
  while (std::getline(in, line)) rows += line.empty() ? 0 : 1;
  EXPECT_EQ(rows, 5);
}

TEST(cli, search_verdicts) {
  EXPECT_EQ(run({"search", "--group", "Z3", "--samples", "300", "--climb-steps", "20"}).code, 0);
  const auto mixed = run({"search", "--group", "Z3", "--pair", "C_l2,E_e", "--samples", "2000"});
  EXPECT_EQ(mixed.code, 0);
}

TEST(cli, bell_and_imperfect) {
  EXPECT_EQ(run({"bell"}).code, 0);
  EXPECT_EQ(run({"imperfect"}).code, 0);
  EXPECT_EQ(run({"imperfect", "--demo", "params"}).code, 0);
  EXPECT_EQ(run({"bell", "--state", "/nonexistent.json"}).code, 2);
}

TEST(cli, validate_group) {
  EXPECT_EQ(run({"validate-group", "--group", "S3"}).code, 0);
  const auto path = std::filesystem::temp_directory_path() / "qrf_cli_bad_table.json";
  {
    std::ofstream f(path);
    f << R"({"name": "bad", "compose": [[0, 1], [1, 1]]})";
  }
  const auto r = run({"validate-group", "--table", path.string()});
  EXPECT_EQ(r.code, 1);
  std::filesystem::remove(path);
}

TEST(cli, out_file) {
  const auto path = std::filesystem::temp_directory_path() / "qrf_cli_out.csv";
  const auto r = run({"sweep", "--group", "Z2", "--samples", "3", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line.rfind("state_id,", 0), 0u);
  std::filesystem::remove(path);
}

TEST(cli, fixture_env_override) {
  const auto dir = std::filesystem::temp_directory_path() / "qrf_cli_empty_fixtures";
  std::filesystem::create_directories(dir);
  ::setenv("QRF_FIXTURES", dir.c_str(), 1);
  EXPECT_EQ(qrf::cli::fixture_dir(), dir);
  EXPECT_EQ(run({"reproduce", "z2-example"}).code, 2);
  ::unsetenv("QRF_FIXTURES");
  EXPECT_EQ(qrf::cli::fixture_dir(), std::filesystem::path(QRF_FIXTURE_DIR));
  EXPECT_EQ(run({"reproduce", "z2-example"}).code, 0);
  std::filesystem::remove(dir);
}
