#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "errorball/cli.hpp"
#include "errorball/sweep.hpp"
#include "test_util.hpp"

using namespace errorball;

namespace {

int run_tool(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::vector<const char*> argv{"errorball"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("channel and range parsing") {
  CHECK(cli_detail::parse_channel("0,1,2") == channel_spec{0, 1, 2});
  CHECK_THROWS_AS(cli_detail::parse_channel("012"), range_error);
  CHECK_THROWS_AS(cli_detail::parse_channel("0,1,-2"), range_error);
  CHECK_THROWS_AS(cli_detail::parse_channel("0,1,2,3"), range_error);
  CHECK(cli_detail::parse_range("7") == std::pair<std::size_t, std::size_t>{7, 7});
  CHECK(cli_detail::parse_range("5..9") == std::pair<std::size_t, std::size_t>{5, 9});
  CHECK_THROWS_AS(cli_detail::parse_range("9..5"), range_error);
  CHECK_THROWS_AS(cli_detail::parse_range("x"), range_error);
  CHECK_THROWS_AS(cli_detail::parse_range("0"), range_error);
  CHECK(run_tool({"verify", "--q", "2", "--n", "0", "--channel", "0,1,1"}) == 2);
}

TEST_CASE("sequence files: comments and blank lines") {
  std::istringstream in("# header\n0101\n\n  1010  # trailing\n01 \n");
  auto lines = cli_detail::read_sequence_lines(in);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == std::pair<std::size_t, std::string>{2, "0101"});
  CHECK(lines[1] == std::pair<std::size_t, std::string>{4, "1010"});
  CHECK(lines[2] == std::pair<std::size_t, std::string>{5, "01"});
}

TEST_CASE("compute emits a record per sequence") {
  std::string out;
  int code = run_tool({"compute", "--seq", "01011010", "--q", "2", "--channel", "0,1,2", "--check",
                  "--output", "csv"},
                 &out);
  CHECK(code == 0);
  std::istringstream in(out);
  auto records = parse_csv(in);
  REQUIRE(records.size() == 1);
  CHECK(records[0].formula_size == 165);
  CHECK(records[0].oracle_size == 165);
  CHECK(records[0].match == true);

  code = run_tool({"compute", "--seq", "01110021", "--q", "3", "--channel", "0,1,2", "--check",
              "--output", "json"},
             &out);
  CHECK(code == 0);
  std::istringstream jin(out);
  auto [jrecords, jsummary] = parse_json(jin);
  REQUIRE(jrecords.size() == 1);
  CHECK(jrecords[0].formula_size == 670);
  CHECK(jrecords[0].oracle_size == 670);
  CHECK(jrecords[0].match == true);
  CHECK(!jsummary.has_value());
}

TEST_CASE("compute reports parse errors with nonzero exit") {
  std::string out, err;
  CHECK(run_tool({"compute", "--seq", "012", "--q", "2", "--channel", "0,1,2"}, &out, &err) == 2);
  CHECK(err.find("position 3") != std::string::npos);

  // file input: errors carry line numbers, good lines still emit records
  std::string path = "cli_test_input.txt";
  {
    std::ofstream f(path);
    f << "# comment\n0101\n012\n";
  }
  CHECK(run_tool({"compute", "--file", path, "--q", "2", "--channel", "0,1,1", "--output", "csv"},
            &out, &err) == 2);
  CHECK(err.find("line 3") != std::string::npos);
  std::istringstream in(out);
  CHECK(parse_csv(in).size() == 1);
  std::remove(path.c_str());
}

TEST_CASE("compute without input or with a bad flag is a usage error") {
  CHECK(run_tool({"compute", "--channel", "0,1,2"}) == 2);
  CHECK(run_tool({"compute", "--seq", "01"}) == 2);           // missing required --channel
  CHECK(run_tool({"verify", "--n", "2..3"}) == 2);            // missing required --channel
  CHECK(run_tool({"frobnicate"}) == 2);
  CHECK(run_tool({"--help"}) == 0);
}

TEST_CASE("verify exits 0 on a clean sweep and honors output formats") {
  std::string out, err;
  int code = run_tool({"verify", "--q", "2", "--n", "1..3", "--channel", "0,1,2", "--output", "json"},
                 &out, &err);
  CHECK(code == 0);
  std::istringstream in(out);
  auto [records, summary] = parse_json(in);
  CHECK(records.empty());
  REQUIRE(summary.has_value());
  CHECK(summary->checked == 2 + 4 + 8);
  CHECK(summary->mismatches == 0);
}

TEST_CASE("verify respects the budget and reports a resume cursor") {
  std::string out, err;
  int code = run_tool({"verify", "--q", "2", "--n", "8", "--channel", "0,1,2", "--budget", "40",
                  "--jobs", "1"},
                 &out, &err);
  CHECK(code == 3);
  CHECK(err.find("resume cursor") != std::string::npos);
}

TEST_CASE("exit codes") {
  verify_outcome with_mismatch;
  with_mismatch.summary.mismatches = 1;
  CHECK(with_mismatch.exit_code() == 1);
  verify_outcome clean;
  CHECK(clean.exit_code() == 0);
  verify_outcome exhausted;
  exhausted.budget_exhausted = true;
  CHECK(exhausted.exit_code() == 3);

  // budget exhaustion inside compute
  std::string out, err;
  CHECK(run_tool({"compute", "--seq", "01010101", "--q", "2", "--channel", "1,1,1", "--budget",
                  "20"},
                 &out, &err) == 3);
}

TEST_CASE("verify validates the resume cursor") {
  CHECK(run_tool({"verify", "--q", "2", "--n", "5..6", "--channel", "0,1,1", "--resume", "01"}) ==
        2);
  CHECK(run_tool({"verify", "--q", "2", "--n", "3", "--channel", "0,1,1", "--resume", "012"}) ==
        2);  // cursor not parseable at q=2
}

TEST_CASE("verify resume skips through the cursor") {
  sweep_config config;
  config.q = 2;
  config.n_min = 3;
  config.n_max = 3;
  config.channels = {{0, 1, 1}};
  config.resume_after = "011";  // four sequences remain: 100, 101, 110, 111
  verify_outcome outcome = run_verify(config);
  CHECK(outcome.summary.checked == 4);
  CHECK(outcome.exit_code() == 0);
}

TEST_CASE("stats finds extremes with witnesses") {
  std::string out;
  int code = run_tool({"stats", "--q", "2", "--n", "8", "--channel", "1,0,1", "--output", "csv"},
                 &out);
  CHECK(code == 0);
  CHECK(out.find("74,01010101") != std::string::npos);  // max and its witness
  CHECK(out.find("46,00000000") != std::string::npos);  // min at the constant sequence

  CHECK(run_tool({"stats", "--q", "2", "--n", "0..2", "--channel", "1,0,1"}) == 2);  // empty range
  CHECK(run_tool({"stats", "--q", "2", "--n", "4..3", "--channel", "1,0,1"}) == 2);
}

TEST_CASE("stats output is deterministic across worker counts") {
  std::string one, many;
  CHECK(run_tool({"stats", "--q", "3", "--n", "5", "--channel", "0,1,1", "--jobs", "1", "--output",
             "csv"},
            &one) == 0);
  CHECK(run_tool({"stats", "--q", "3", "--n", "5", "--channel", "0,1,1", "--jobs", "4", "--output",
             "csv"},
            &many) == 0);
  CHECK(one == many);
}
