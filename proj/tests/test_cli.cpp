#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperfpp/cli/run.hpp"

using namespace hyperfpp;
using namespace hyperfpp::cli;

namespace {

std::string render(const RunConfig& cfg, Format format = Format::csv) {
  std::ostringstream os;
  if (format == Format::csv)
    write_csv(os, echo_config(cfg), run(cfg));
  else
    write_json(os, echo_config(cfg), run(cfg));
  return os.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find("\r\n", pos);
    out.push_back(text.substr(pos, end - pos));
    pos = end + 2;
  }
  return out;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(HYPERFPP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Format, Doubles) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-300), "-2.5e-300");
}

TEST(Format, CsvEscape) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_escape("x\ny"), "\"x\ny\"");
}

TEST(Sample, SmallestCube) {
  RunConfig cfg;
  cfg.subcommand = "sample";
  cfg.n = 2;
  cfg.seed = 1;
  cfg.reps = 1;
  const auto out = lines(render(cfg));
  ASSERT_GE(out.size(), 3u);
  EXPECT_EQ(out[0].rfind("# version=", 0), 0u);
  EXPECT_EQ(out[1], "kind,replica,statistic,value,argmin");
  const Table t = run(cfg);
  const auto stream = derive_replica(Seed{1}, 0);
  // n = 2: paths (1 2) and (2 1).
  const double a = stream(edge_id(0, 0, 2)) + stream(edge_id(1, 1, 2));
  const double b = stream(edge_id(0, 1, 2)) + stream(edge_id(2, 0, 2));
  EXPECT_EQ(std::get<double>(t.rows[0][3]), std::min(a, b));
  EXPECT_EQ(std::get<std::string>(t.rows[0][4]), a <= b ? "1 2" : "2 1");
  EXPECT_EQ(t.rows.size(), 1u + 9u);
}

TEST(Sample, ThreadCountDoesNotChangeOutput) {
  RunConfig cfg;
  cfg.subcommand = "sample";
  cfg.n = 12;
  cfg.seed = 9;
  cfg.reps = 20;
  cfg.threads = 1;
  const std::string one = render(cfg);
  cfg.threads = 8;
  EXPECT_EQ(render(cfg), one);
}

TEST(Echo, OmitsSchedulingAndDestination) {
  RunConfig cfg;
  cfg.subcommand = "fnk";
  cfg.output = "somewhere.csv";
  const auto head = lines(render(cfg))[0];
  EXPECT_EQ(head.find("threads"), std::string::npos);
  EXPECT_EQ(head.find("output"), std::string::npos);
  EXPECT_NE(head.find("subcommand=fnk"), std::string::npos);
}

TEST(Fnk, SmallTable) {
  RunConfig cfg;
  cfg.subcommand = "fnk";
  cfg.n = 3;
  const Table t = run(cfg);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(std::get<std::int64_t>(t.rows[0][1]), 5);
  EXPECT_EQ(std::get<std::int64_t>(t.rows[1][1]), 1);
  EXPECT_TRUE(std::holds_alternative<std::monostate>(t.rows[2][1]));
  EXPECT_TRUE(std::holds_alternative<std::monostate>(t.rows[0][3]));
  EXPECT_EQ(std::get<std::int64_t>(t.rows[1][3]), 1);
  const std::int64_t f1[] = {3, 2, 0, 1};
  for (int k = 0; k < 4; ++k) EXPECT_EQ(std::get<std::int64_t>(t.rows[k][2]), f1[k]);
}

TEST(Json, Structure) {
  RunConfig cfg;
  cfg.subcommand = "tail";
  cfg.ns = {3, 5};
  cfg.xs = {0.5};
  const auto doc = nlohmann::json::parse(render(cfg, Format::json));
  ASSERT_TRUE(doc.contains("config"));
  ASSERT_TRUE(doc.contains("rows"));
  EXPECT_EQ(doc["config"]["subcommand"], "tail");
  EXPECT_FALSE(doc["config"].contains("threads"));
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["n"], 3);
  EXPECT_DOUBLE_EQ(doc["rows"][0]["cdf"].get<double>(), gamma_lower_cdf(3, 0.5).cdf);
}

TEST(Cap, Resolution) {
  EXPECT_EQ(resolve_cap(std::nullopt, nullptr), kDefaultDimensionCap);
  EXPECT_EQ(resolve_cap(std::nullopt, "20"), 20);
  EXPECT_EQ(resolve_cap(18, "20"), 18);
  EXPECT_THROW(resolve_cap(std::nullopt, "abc"), ValidationError);
  EXPECT_THROW(resolve_cap(std::nullopt, "99"), ValidationError);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("fnk --n 3"), 0);
  EXPECT_EQ(run_binary("--help"), 0);
  EXPECT_EQ(run_binary("sample --bogus 1"), 2);
  EXPECT_EQ(run_binary("nosuch"), 2);
  EXPECT_EQ(run_binary("sample --n 1"), 2);
  EXPECT_EQ(run_binary("sample --n 30 --reps 1"), 3);
  EXPECT_EQ(run_binary("sample --n 20 --reps 1 --cap 16"), 3);
  EXPECT_EQ(run_binary("tail --ns 3 --xs 800"), 2);
}

TEST(Binary, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "hyperfpp_cli_test.csv";
  std::filesystem::remove(path);
  ASSERT_EQ(run_binary("fnk --n 4 --output " + path.string()), 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(lines(ss.str())[1], "k,f,f1,bound_iii,f1_sandwich,f_small_gap,f_large_gap,bound_ii_log,bound_ii_in_regime");
  std::filesystem::remove(path);
}
