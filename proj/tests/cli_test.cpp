#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "capsid/cli.hpp"

namespace capsid {
namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return std::string(CAPSID_GOLDEN_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in.good()) << path;
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct GoldenCase {
  std::vector<std::string> args;
  std::string file;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.file; }

class CliGolden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(CliGolden, MatchesBytes) {
  std::vector<std::string> args;
  for (const auto& a : GetParam().args) args.push_back(a == "@k1" ? golden("k1.group") : a);
  const auto first = run_cli(args);
  EXPECT_EQ(first.exit_code, 0) << first.err;
  EXPECT_EQ(first.err, "");
  EXPECT_EQ(first.out, read_file(golden(GetParam().file)));
  EXPECT_EQ(run_cli(args).out, first.out);
}

INSTANTIATE_TEST_SUITE_P(
    Commands, CliGolden,
    ::testing::Values(GoldenCase{{"pathways", "--group", "klein4"}, "pathways_klein4.txt"},
                      GoldenCase{{"pathways", "--group", "klein4", "--format", "csv"}, "pathways_klein4.csv"},
                      GoldenCase{{"series", "--group", "trivial:1", "--order", "9"}, "series_trivial.txt"},
                      GoldenCase{{"series", "--group", "klein4", "--order", "6", "--egf", "--format", "csv"},
                                 "series_klein4_egf.csv"},
                      GoldenCase{{"blocks", "--group", "@k1"}, "blocks_k1.txt"},
                      GoldenCase{{"fixed-trees", "--group", "@k1"}, "fixed_trees_k1.txt"},
                      GoldenCase{{"mobius", "--group", "klein4", "--format", "csv"}, "mobius_klein4.csv"},
                      GoldenCase{{"stabilizer", "--group", "klein4", "--tree", "((1,2),3,4)"},
                                 "stabilizer_klein4.txt"},
                      GoldenCase{{"enumerate-trees", "--n", "4"}, "enumerate_trees_4.txt"},
                      GoldenCase{{"icosa-report"}, "icosa_report.txt"}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.file.substr(0, info.param.file.find('.'));
      if (info.param.file.ends_with(".csv")) name += "_csv";
      return name;
    });

TEST(Cli, Fixes) {
  auto r = run_cli({"fixes", "--group", "klein4", "--perm", "(1 2)(3 4)", "--tree", "((1,2),3,4)"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run_cli({"fixes", "--perm", "(1 3)", "--tree", "((1,2),3,4)"});
  EXPECT_EQ(r.out, "false\n");
}

TEST(Cli, CountOnly) {
  EXPECT_EQ(run_cli({"enumerate-trees", "--n", "4", "--count-only"}).out, "26\n");
  EXPECT_EQ(run_cli({"enumerate-trees", "--n", "60", "--count-only"}).out,
            "19244655101324373947201847309221875711203467545347429175471623201123413757255887164786849155167691997184\n");
  EXPECT_EQ(run_cli({"fixed-trees", "--group", "klein4", "--count-only"}).out, "4\n");
}

TEST(Cli, PathwaysRows) {
  const auto r = run_cli({"pathways", "--group", "klein4", "--format", "csv"});
  EXPECT_NE(r.out.find("1,4,"), std::string::npos);
  EXPECT_NE(r.out.find("2,3,"), std::string::npos);
  EXPECT_NE(r.out.find("4,4,"), std::string::npos);
}

void expect_one_line_error(const CliResult& r, int code, const std::string& prefix) {
  EXPECT_EQ(r.exit_code, code);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err.rfind(prefix, 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}

TEST(Cli, Errors) {
  expect_one_line_error(run_cli({"frobnicate"}), 2, "unknown subcommand: frobnicate");
  expect_one_line_error(run_cli({}), 2, "usage error:");
  expect_one_line_error(run_cli({"series", "--group", "klein4", "--order", "x"}), 2, "usage error:");
  expect_one_line_error(run_cli({"pathways", "--group", "dodecahedral"}), 1, "parse error:");
  expect_one_line_error(run_cli({"stabilizer", "--group", "klein4", "--tree", "((1,2),3"}), 1, "parse error:");
  expect_one_line_error(run_cli({"fixes", "--perm", "(1 2", "--tree", "(1,2)"}), 1, "parse error:");
  expect_one_line_error(run_cli({"fixes", "--group", "klein4", "--perm", "(1 2)", "--tree", "(1,2,3,4)"}), 1,
                        "invalid input:");
  expect_one_line_error(run_cli({"series", "--group", "cyclic:121", "--order", "2"}), 1, "limit exceeded:");
  expect_one_line_error(run_cli({"enumerate-trees", "--n", "10"}), 1, "limit exceeded:");
  expect_one_line_error(run_cli({"blocks", "--group", "@missing-file"}), 1, "parse error:");
}

TEST(Cli, Help) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("icosa-report"), std::string::npos);
}

}  // namespace
}  // namespace capsid
