#pragma once
// Command-line surface: compute, verify, stats. Exit codes: 0 success or no
// mismatch, 1 mismatch found, 2 usage error, 3 enumeration budget exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "errorball/ballsize.hpp"
#include "errorball/report.hpp"
#include "errorball/sequence.hpp"
#include "errorball/sweep.hpp"

namespace errorball {

namespace cli_detail {

inline channel_spec parse_channel(const std::string& text) {
  int t1 = 0, t2 = 0, t3 = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> t1 >> c1 >> t2 >> c2 >> t3) || c1 != ',' || c2 != ',' || !in.eof() || t1 < 0 ||
      t2 < 0 || t3 < 0)
    throw range_error("channel must be t1,t2,t3 with non-negative integers, got '" + text + "'");
  return {t1, t2, t3};
}

inline std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  try {
    std::size_t lo, hi;
    if (dots == std::string::npos) {
      lo = hi = std::stoull(text);
    } else {
      lo = std::stoull(text.substr(0, dots));
      hi = std::stoull(text.substr(dots + 2));
    }
    if (lo > hi || lo == 0) throw range_error("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw range_error("range must be N or LO..HI with 1 <= LO <= HI, got '" + text + "'");
  }
}

// One sequence per line; '#' starts a comment, blank lines are skipped.
inline std::vector<std::pair<std::size_t, std::string>> read_sequence_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    out.emplace_back(line_no, line.substr(first, last - first + 1));
  }
  return out;
}

inline void emit_records(std::ostream& out, const std::string& format,
                         const std::vector<verification_record>& records,
                         const std::optional<sweep_summary>& summary) {
  if (format == "csv")
    write_csv(out, records);
  else if (format == "json")
    write_json(out, records, summary);
  else
    write_table(out, records);
}

inline void emit_stats(std::ostream& out, const std::string& format,
                       const std::vector<stats_row>& rows) {
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const stats_row& r : rows) {
      nlohmann::json j;
      j["q"] = r.q;
      j["n"] = r.n;
      j["t1"] = r.channel.substitutions;
      j["t2"] = r.channel.deletions;
      j["t3"] = r.channel.insertions;
      j["count"] = r.count;
      j["min"] = r.min_size;
      j["argmin"] = r.argmin;
      j["max"] = r.max_size;
      j["argmax"] = r.argmax;
      j["mean"] = r.mean;
      doc.push_back(j);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "q,n,t1,t2,t3,count,min,argmin,max,argmax,mean\n";
    for (const stats_row& r : rows)
      out << r.q << ',' << r.n << ',' << r.channel.substitutions << ',' << r.channel.deletions
          << ',' << r.channel.insertions << ',' << r.count << ',' << r.min_size << ','
          << r.argmin << ',' << r.max_size << ',' << r.argmax << ',' << r.mean << '\n';
    return;
  }
  for (const stats_row& r : rows) {
    out << "q=" << r.q << " n=" << r.n << " channel=" << r.channel.substitutions << ','
        << r.channel.deletions << ',' << r.channel.insertions << " count=" << r.count
        << " min=" << r.min_size << " (" << r.argmin << ")"
        << " max=" << r.max_size << " (" << r.argmax << ")" << std::setprecision(10)
        << " mean=" << r.mean << '\n';
  }
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  CLI::App app{"exact error-ball sizes for edit channels, with brute-force verification"};
  app.require_subcommand(1);

  int q = 2;
  std::string output = "table";
  unsigned jobs = 0;
  std::uint64_t budget = default_oracle_budget;
  app.add_option("--q", q, "alphabet size")->check(CLI::Range(2, 36));
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--jobs", jobs, "worker count (0: all cores)");
  app.add_option("--budget", budget, "oracle candidate cap per query");

  CLI::App* compute = app.add_subcommand("compute", "ball sizes for given sequences");
  compute->fallthrough();
  std::vector<std::string> seq_args;
  std::string file_arg, compute_channel;
  bool check = false;
  compute->add_option("--seq", seq_args, "sequence text (repeatable)");
  compute->add_option("--file", file_arg, "file with one sequence per line");
  compute->add_option("--channel", compute_channel, "channel t1,t2,t3")->required();
  compute->add_flag("--check", check, "recompute via the oracle and report match");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive formula-vs-oracle sweep");
  verify->fallthrough();
  std::string verify_range;
  std::vector<std::string> verify_channels;
  std::string resume;
  verify->add_option("--n", verify_range, "length range N or LO..HI")->required();
  verify->add_option("--channel", verify_channels, "channel t1,t2,t3 (repeatable)")->required();
  verify->add_option("--resume", resume, "resume after this cursor sequence");

  CLI::App* stats = app.add_subcommand("stats", "ball-size distribution over Sigma_q^n");
  stats->fallthrough();
  std::string stats_range, stats_channel;
  stats->add_option("--n", stats_range, "length range N or LO..HI")->required();
  stats->add_option("--channel", stats_channel, "channel t1,t2,t3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // --help exits 0; anything else is a usage error
  }

  try {
    if (compute->parsed()) {
      channel_spec channel = cli_detail::parse_channel(compute_channel);
      std::vector<std::pair<std::size_t, std::string>> inputs;
      for (const std::string& s : seq_args) inputs.emplace_back(0, s);
      if (!file_arg.empty()) {
        std::ifstream in(file_arg);
        if (!in) {
          err << "cannot open " << file_arg << '\n';
          return 2;
        }
        auto lines = cli_detail::read_sequence_lines(in);
        inputs.insert(inputs.end(), lines.begin(), lines.end());
      }
      if (inputs.empty()) {
        err << "compute needs --seq or --file\n";
        return 2;
      }

      std::vector<verification_record> records;
      bool parse_failed = false, budget_failed = false;
      for (const auto& [line_no, text] : inputs) {
        try {
          sequence w = sequence::parse(text, q);
          ball_report report = size_generic(w, channel, size_mode::formula_preferred, budget);
          if (check) attach_oracle_check(w, report, budget);
          records.push_back(make_record(w, report));
        } catch (const budget_exceeded_error& e) {
          err << text << ": " << e.what() << '\n';
          budget_failed = true;
        } catch (const error& e) {
          if (line_no > 0)
            err << "line " << line_no << ": " << e.what() << '\n';
          else
            err << text << ": " << e.what() << '\n';
          parse_failed = true;
        }
      }
      cli_detail::emit_records(out, output, records, std::nullopt);
      if (parse_failed) return 2;
      if (budget_failed) return 3;
      return 0;
    }

    if (verify->parsed()) {
      auto [n_min, n_max] = cli_detail::parse_range(verify_range);
      sweep_config config;
      config.q = q;
      config.n_min = n_min;
      config.n_max = n_max;
      for (const std::string& c : verify_channels)
        config.channels.push_back(cli_detail::parse_channel(c));
      config.jobs = jobs;
      config.budget = budget;
      if (!resume.empty()) {
        sequence cursor = sequence::parse(resume, q);  // validates the cursor
        if (cursor.size() < n_min || cursor.size() > n_max) {
          err << "resume cursor length " << cursor.size() << " outside range\n";
          return 2;
        }
        config.resume_after = resume;
      }
      verify_outcome outcome = run_verify(config);
      cli_detail::emit_records(out, output, outcome.mismatches,
                               output == "json" ? std::optional(outcome.summary) : std::nullopt);
      err << "checked=" << outcome.summary.checked
          << " mismatches=" << outcome.summary.mismatches << " seconds=" << std::fixed
          << std::setprecision(3) << outcome.summary.seconds << '\n';
      if (outcome.budget_exhausted) {
        err << "budget exceeded; resume cursor: "
            << outcome.summary.resume_cursor.value_or("(none)") << '\n';
      }
      return outcome.exit_code();
    }

    // stats
    auto [n_min, n_max] = cli_detail::parse_range(stats_range);
    sweep_config config;
    config.q = q;
    config.n_min = n_min;
    config.n_max = n_max;
    config.channels = {cli_detail::parse_channel(stats_channel)};
    config.jobs = jobs;
    config.budget = budget;
    cli_detail::emit_stats(out, output, run_stats(config));
    return 0;
  } catch (const budget_exceeded_error& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const error& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace errorball
