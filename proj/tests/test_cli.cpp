#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "fpslab/bernoulli.hpp"
#include "fpslab/changevar.hpp"
#include "fpslab/jacobi.hpp"

namespace fpslab::cli {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

std::vector<std::string> fields(const std::string& line, char sep) {
  std::vector<std::string> v;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, sep);) v.push_back(f);
  return v;
}

std::string last_column(const std::string& line) {
  return line.substr(line.find_last_of(' ') + 1);
}

TEST(Cli, DecomposeExpPrettyTable) {
  const auto r = invoke({"decompose", "--func", "exp", "--order", "15", "--format", "pretty"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u + 14u);
  EXPECT_EQ(rows[0].substr(0, 9), "f = x + 1");
  const std::vector<std::string> scaled = {
      "1/2", "-1/6", "0", "-1/20", "0", "5/84", "0", "-7/24",
      "0", "35/22", "0", "-4279/312", "0", "3003/16"};
  for (int n = 1; n <= 14; ++n) {
    EXPECT_EQ(last_column(rows[n + 1]), scaled[n - 1]) << rows[n + 1];
  }
}

TEST(Cli, DecomposeAndSumFormJsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"decompose", "--func", "exp", "--a", "1/3", "--order", "12", "--format", "json"},
           {"decompose", "--func", "custom", "--coeffs", "1,-1/2,0,7", "--order", "9",
            "--format", "json"}}) {
    const auto r = invoke(args);
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const auto d = changevar::decomposition_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(changevar::to_json(d).dump(2) + "\n", r.out);
  }
  const auto s = invoke({"sumform", "--func", "exp", "--order", "8", "--format", "json"});
  ASSERT_EQ(s.status, kExitOk);
  const auto form = changevar::sum_form_from_json(nlohmann::json::parse(s.out));
  EXPECT_EQ(form.A(1), Rational(1, 2));
  EXPECT_EQ(form.A(2), Rational(-1, 12));
  EXPECT_EQ(changevar::to_json(form).dump(2) + "\n", s.out);
}

TEST(Cli, CbhPassesOnCustomSeries) {
  const auto r = invoke({"cbh", "--func", "custom", "--coeffs", "1", "--order", "12",
                         "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["first_mismatch_degree"].is_null());
}

TEST(Cli, VerifyAllExitsZeroAndIsDeterministic) {
  const std::vector<std::string> args = {"verify", "--suite", "all", "--max-order", "20",
                                         "--format", "json"};
  const auto first = invoke(args);
  ASSERT_EQ(first.status, kExitOk) << first.out;
  const auto j = nlohmann::json::parse(first.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 16u);
  EXPECT_EQ(invoke(args).out, first.out);

  const auto pretty = invoke({"verify", "--suite", "jacobi"});
  EXPECT_EQ(pretty.status, kExitOk);
  EXPECT_EQ(lines(pretty.out).back(), "2/2 checks passed");
}

TEST(Cli, ResiduesCsv) {
  const auto r = invoke({"residues", "--m", "-12..12", "--n", "1..12", "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 301u);
  EXPECT_EQ(rows[0], "m,n,formula,oracle");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i], ',');
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f[2], f[3]) << rows[i];
  }
}

TEST(Cli, ResiduesJsonRoundTrip) {
  const auto r = invoke({"residues", "--m", "-3..3", "--n", "1..4", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
}

TEST(Cli, QTableRoundTrips) {
  const auto csv = invoke({"qtable", "--m", "-2..2", "--n", "-1..3", "--order", "6",
                           "--format", "csv"});
  ASSERT_EQ(csv.status, kExitOk) << csv.err;
  EXPECT_EQ(bernoulli::to_csv(bernoulli::qtables_from_csv(csv.out)), csv.out);

  const auto json = invoke({"qtable", "--m", "1", "--n", "2", "--format", "json"});
  ASSERT_EQ(json.status, kExitOk);
  nlohmann::json again = nlohmann::json::array();
  for (const auto& t : nlohmann::json::parse(json.out)) {
    again.push_back(bernoulli::to_json(bernoulli::qtable_from_json(t)));
  }
  EXPECT_EQ(again.dump(2) + "\n", json.out);
}

TEST(Cli, RecursionMatchesExpansionOutput) {
  const auto rec = invoke({"qrecur", "--n", "-3..5", "--jmax", "8", "--format", "csv"});
  const auto direct = invoke({"qtable", "--m", "1", "--n", "-3..5", "--order", "8",
                              "--format", "csv"});
  ASSERT_EQ(rec.status, kExitOk);
  EXPECT_EQ(rec.out, direct.out);
}

TEST(Cli, CommutatorTables) {
  const auto r = invoke({"commutator", "--w", "2", "--n", "-1", "--j", "-2..2", "--k",
                         "-1..4", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto t = jacobi::coefficient_table_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(t.entries.size(), 30u);
  EXPECT_EQ(jacobi::to_json(t).dump(2) + "\n", r.out);

  const auto csv = invoke({"commutator", "--format", "csv"});
  ASSERT_EQ(csv.status, kExitOk);
  EXPECT_EQ(lines(csv.out).size(), 1u + 7u * 7u);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "fpslab_cli_out.csv";
  const auto r = invoke({"residues", "--m", "0..1", "--n", "1..2", "--format", "csv",
                         "--out", path});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "m,n,formula,oracle\n0,1,1,1\n0,2,-1,-1\n1,1,1,1\n1,2,0,0\n");
}

TEST(Cli, UsageErrors) {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"decompose", "--order", "0"},
      {"decompose", "--func", "sine"},
      {"decompose", "--func", "exp", "--a", "0"},
      {"decompose", "--func", "exp", "--a", "1/x"},
      {"decompose", "--func", "custom"},
      {"decompose", "--format", "xml"},
      {"residues", "--m", "3..1"},
      {"residues", "--n", "0..3"},
      {"qtable", "--m", "a..b"},
      {"commutator", "--n", "2", "--k", "0..3"},
      {"verify", "--suite", "everything"},
      {"verify", "--max-order", "0"},
  };
  for (const auto& args : bad) {
    const auto r = invoke(args);
    EXPECT_EQ(r.status, kExitUsage) << ::testing::PrintToString(args);
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_EQ(invoke({"--help"}).status, kExitOk);
}

}  // namespace
}  // namespace fpslab::cli
