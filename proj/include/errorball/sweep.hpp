#pragma once
// Exhaustive sweeps over Sigma_q^n: formula-vs-oracle verification and ball
// size statistics. Work is partitioned into lexicographic prefix blocks
// handed to a thread pool; results merge in block order, so the output is
// deterministic for a fixed configuration regardless of the worker count.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "errorball/ballsize.hpp"
#include "errorball/errors.hpp"
#include "errorball/math.hpp"
#include "errorball/report.hpp"
#include "errorball/sequence.hpp"

namespace errorball {

struct sweep_config {
  int q = 2;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::vector<channel_spec> channels;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::uint64_t budget = default_oracle_budget;
  std::optional<std::string> resume_after;
};

inline sequence sequence_from_index(std::uint64_t index, int q, std::size_t n) {
  std::vector<symbol> digits(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = static_cast<symbol>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return sequence(std::move(digits), q);
}

inline std::uint64_t sequence_to_index(const sequence& w) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    index = index * static_cast<std::uint64_t>(w.q()) + w[i];
  return index;
}

template <typename Fn>
void for_each_sequence(int q, std::size_t n, Fn&& fn) {
  std::vector<symbol> digits(n, 0);
  while (true) {
    fn(sequence(digits, q));
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
}

namespace detail {

inline unsigned effective_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Contiguous index ranges aligned to symbol prefixes: q^p blocks with p just
// large enough to keep every worker busy.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> prefix_blocks(int q, std::size_t n,
                                                                          unsigned jobs) {
  std::size_t p = 0;
  std::uint64_t blocks = 1;
  while (p < n && blocks < 4ull * jobs) {
    ++p;
    blocks *= static_cast<std::uint64_t>(q);
  }
  const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), n);
  const std::uint64_t width = total / blocks;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) out.emplace_back(b * width, (b + 1) * width);
  return out;
}

// Runs fn(block_id, begin, end) over all blocks on a small pool. fn must not
// throw; it reports failure through its own channel.
template <typename Fn>
void run_blocks(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& blocks, unsigned jobs,
                Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t b = next.fetch_add(1);
      if (b >= blocks.size()) break;
      fn(b, blocks[b].first, blocks[b].second);
    }
  };
  unsigned workers = std::min<unsigned>(effective_jobs(jobs), blocks.size());
  if (workers <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

}  // namespace detail

struct verify_outcome {
  std::vector<verification_record> mismatches;
  sweep_summary summary;
  bool budget_exhausted = false;
  int exit_code() const { return budget_exhausted ? 3 : (summary.mismatches > 0 ? 1 : 0); }
};

// Checks formula-preferred against oracle-only for every sequence and channel
// in the configuration. Emits mismatch records only. On budget exhaustion the
// outcome carries the last fully verified sequence as a resume cursor.
inline verify_outcome run_verify(const sweep_config& config) {
  if (config.n_min == 0 || config.n_min > config.n_max || config.channels.empty())
    throw range_error("verify needs a non-empty sequence range and channel list");
  const auto start_time = std::chrono::steady_clock::now();

  verify_outcome outcome;
  std::optional<std::string> cursor = config.resume_after;

  struct block_result {
    std::vector<verification_record> records;
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> budget_hit;  // index of first unverified sequence
    std::string last_seq;
  };

  for (std::size_t n = config.n_min; n <= config.n_max && !outcome.budget_exhausted; ++n) {
    if (config.resume_after && n < config.resume_after->size()) continue;
    std::uint64_t skip_through = 0;
    bool skipping = false;
    if (config.resume_after && n == config.resume_after->size()) {
      skip_through = sequence_to_index(sequence::parse(*config.resume_after, config.q));
      skipping = true;
    }

    auto blocks = detail::prefix_blocks(config.q, n, detail::effective_jobs(config.jobs));
    std::vector<block_result> results(blocks.size());
    detail::run_blocks(blocks, config.jobs, [&](std::size_t b, std::uint64_t begin,
                                                std::uint64_t end) {
      block_result& res = results[b];
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (skipping && idx <= skip_through) continue;
        sequence w = sequence_from_index(idx, config.q, n);
        try {
          for (const channel_spec& channel : config.channels) {
            ball_report formula = size_generic(w, channel, size_mode::formula_preferred,
                                               config.budget);
            ball_report oracle = size_generic(w, channel, size_mode::oracle_only, config.budget);
            ++res.checked;
            if (formula.size != oracle.size) {
              verification_record rec = make_record(w, formula);
              rec.oracle_size = oracle.size;
              rec.match = false;
              res.records.push_back(std::move(rec));
            }
          }
          res.last_seq = w.str();
        } catch (const budget_exceeded_error&) {
          res.budget_hit = idx;
          return;
        }
      }
    });

    // Merge in block order; everything past the first budget failure is
    // discarded so the cursor marks a contiguous verified prefix.
    for (std::size_t b = 0; b < results.size(); ++b) {
      block_result& res = results[b];
      outcome.summary.checked += res.checked;
      for (verification_record& rec : res.records) outcome.mismatches.push_back(std::move(rec));
      if (!res.last_seq.empty()) cursor = res.last_seq;
      if (res.budget_hit) {
        outcome.budget_exhausted = true;
        break;
      }
    }
  }

  outcome.summary.mismatches = outcome.mismatches.size();
  if (outcome.budget_exhausted) outcome.summary.resume_cursor = cursor;
  outcome.summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return outcome;
}

struct stats_row {
  int q = 2;
  std::size_t n = 0;
  channel_spec channel;
  std::uint64_t count = 0;
  std::uint64_t min_size = 0;
  std::string argmin;
  std::uint64_t max_size = 0;
  std::string argmax;
  double mean = 0.0;
};

// Min / max / mean ball size over Sigma_q^n per channel, with the
// lexicographically first witnesses.
inline std::vector<stats_row> run_stats(const sweep_config& config) {
  if (config.n_min == 0 || config.n_min > config.n_max || config.channels.empty())
    throw range_error("stats needs a non-empty sequence range and channel list");

  std::vector<stats_row> rows;
  for (const channel_spec& channel : config.channels) {
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
      struct block_acc {
        bool any = false;
        std::uint64_t min_size = 0, max_size = 0, sum = 0, count = 0;
        std::string argmin, argmax;
        std::optional<std::pair<std::uint64_t, std::uint64_t>> budget_error;  // used, limit
      };
      auto blocks = detail::prefix_blocks(config.q, n, detail::effective_jobs(config.jobs));
      std::vector<block_acc> accs(blocks.size());
      detail::run_blocks(blocks, config.jobs, [&](std::size_t b, std::uint64_t begin,
                                                  std::uint64_t end) {
        block_acc& acc = accs[b];
        try {
          for (std::uint64_t idx = begin; idx < end; ++idx) {
            sequence w = sequence_from_index(idx, config.q, n);
            std::uint64_t size =
                size_generic(w, channel, size_mode::formula_preferred, config.budget).size;
            if (!acc.any || size < acc.min_size) acc.min_size = size, acc.argmin = w.str();
            if (!acc.any || size > acc.max_size) acc.max_size = size, acc.argmax = w.str();
            acc.sum += size;
            ++acc.count;
            acc.any = true;
          }
        } catch (const budget_exceeded_error& e) {
          acc.budget_error = {e.used(), e.limit()};
        }
      });

      stats_row row{config.q, n, channel, 0, 0, "", 0, "", 0.0};
      bool any = false;
      for (const block_acc& acc : accs) {
        if (acc.budget_error)
          throw budget_exceeded_error(acc.budget_error->first, acc.budget_error->second);
        if (!acc.any) continue;
        if (!any || acc.min_size < row.min_size)
          row.min_size = acc.min_size, row.argmin = acc.argmin;
        if (!any || acc.max_size > row.max_size)
          row.max_size = acc.max_size, row.argmax = acc.argmax;
        row.count += acc.count;
        row.mean += static_cast<double>(acc.sum);
        any = true;
      }
      row.mean = row.count ? row.mean / static_cast<double>(row.count) : 0.0;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace errorball
