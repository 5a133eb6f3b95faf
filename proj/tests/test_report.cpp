#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "errorball/report.hpp"
#include "test_util.hpp"

using namespace errorball;
using ebtest::seq;

namespace {

verification_record random_record(std::mt19937& rng) {
  verification_record r;
  int q = 2 + int(rng() % 3);
  std::size_t n = 1 + rng() % 8;
  sequence w = ebtest::random_sequence(rng, q, n);
  r.seq = w.str();
  r.q = q;
  r.n = n;
  r.rho = runs_decomposition(w).rho();
  r.channel = {int(rng() % 3), int(rng() % 2), int(rng() % 3)};
  if (rng() % 4) r.formula_size = rng() % 100000;
  if (rng() % 2) r.oracle_size = rng() % 100000;
  if (r.formula_size && r.oracle_size) r.match = *r.formula_size == *r.oracle_size;
  r.method = (rng() % 2) ? "formula" : "oracle";
  return r;
}

}  // namespace

TEST_CASE("csv header is pinned") {
  CHECK(std::string(csv_header) == "seq,q,n,rho,t1,t2,t3,formula_size,oracle_size,match,method");
}

TEST_CASE("csv round-trips") {
  std::mt19937 rng(61);
  std::vector<verification_record> records;
  for (int i = 0; i < 50; ++i) records.push_back(random_record(rng));

  std::ostringstream out;
  write_csv(out, records);
  std::istringstream in(out.str());
  CHECK(parse_csv(in) == records);

  std::istringstream bad("not,a,header\n");
  CHECK_THROWS_AS(parse_csv(bad), parse_error);
}

TEST_CASE("json round-trips with summary") {
  std::mt19937 rng(67);
  std::vector<verification_record> records;
  for (int i = 0; i < 30; ++i) records.push_back(random_record(rng));
  sweep_summary summary{12345, 2, 1.5, std::string("0101")};

  std::ostringstream out;
  write_json(out, records, summary);
  std::istringstream in(out.str());
  auto [parsed, parsed_summary] = parse_json(in);
  CHECK(parsed == records);
  REQUIRE(parsed_summary.has_value());
  CHECK(parsed_summary->checked == 12345);
  CHECK(parsed_summary->mismatches == 2);
  CHECK(parsed_summary->resume_cursor == "0101");

  std::ostringstream no_summary;
  write_json(no_summary, records);
  std::istringstream in2(no_summary.str());
  auto [parsed2, summary2] = parse_json(in2);
  CHECK(parsed2 == records);
  CHECK(!summary2.has_value());
}

TEST_CASE("make_record carries the report fields") {
  sequence w = seq("01011010");
  ball_report report = size_generic(w, {0, 1, 2});
  attach_oracle_check(w, report);
  verification_record rec = make_record(w, report);
  CHECK(rec.seq == "01011010");
  CHECK(rec.q == 2);
  CHECK(rec.n == 8);
  CHECK(rec.rho == 7);
  CHECK(rec.formula_size == 165);
  CHECK(rec.oracle_size == 165);
  CHECK(rec.match == true);
  CHECK(rec.method == "formula");
}
