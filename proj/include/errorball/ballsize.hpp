#pragma once
// The headline ball sizes: single-deletion double-insertion, single-deletion
// double-substitution, single-insertion single-substitution and
// single-deletion single-insertion, plus the pair/triple counts feeding the
// first of these.

#include <cstdint>
#include <optional>
#include <string>

#include "errorball/intersect.hpp"
#include "errorball/math.hpp"
#include "errorball/oracle.hpp"
#include "errorball/sequence.hpp"

namespace errorball {

// A(w): pairs of 1-subsequences with |I_2 cap I_2| = 2|I_1(w)| - 2;
// B(w), C(w): pairs at |I_1(w)| + 2 and |I_1(w)| + 1;
// D(w): triples at |I_1(w)| + 1.
struct pair_counts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  friend bool operator==(const pair_counts&, const pair_counts&) = default;
};

enum class size_method { formula, oracle, formula_oracle_fallback };

inline const char* to_string(size_method m) {
  switch (m) {
    case size_method::formula: return "formula";
    case size_method::oracle: return "oracle";
    case size_method::formula_oracle_fallback: return "formula-with-oracle-fallback";
  }
  return "?";
}

struct ball_diagnostics {
  std::size_t rho = 0;
  std::size_t psi = 0;
  std::size_t psi_modified = 0;
  std::optional<pair_counts> counts;
};

struct ball_report {
  channel_spec spec;
  std::uint64_t size = 0;
  size_method method = size_method::formula;
  ball_diagnostics diagnostics;
  std::optional<std::uint64_t> oracle_size;
  std::optional<bool> oracle_match;
};

namespace detail {

inline ball_diagnostics diagnostics_for(const sequence& w) {
  ball_diagnostics d;
  if (w.empty()) return d;
  d.rho = runs_decomposition(w).rho();
  segments_profile prof = alternating_segments(w);
  d.psi = prof.psi();
  d.psi_modified = prof.psi_modified();
  return d;
}

}  // namespace detail

// A from the segments profile, D from the modified profile, B and C by
// classifying all run pairs. No closed form exists for B and C beyond the
// binary alphabet, so the pair classification is the general route; below the
// n >= 5 threshold of the pair formulas the spheres are enumerated instead.
inline pair_counts count_abcd(const sequence& w,
                              std::uint64_t budget_limit = default_oracle_budget) {
  const std::size_t n = w.size();
  if (n < 2) throw precondition_error("pair counts need n >= 2");
  segments_profile prof = alternating_segments(w);
  runs_decomposition rd(w);

  pair_counts out;
  for (std::size_t len : prof.lengths()) out.a += binomial(len, 2);
  const std::vector<std::size_t> mod = prof.modified_lengths();
  for (std::size_t l = 0; l < mod.size(); ++l) {
    out.d += binomial(mod[l], 3);
    if (l + 1 < mod.size()) out.d += std::uint64_t(mod[l] - 1) * (mod[l + 1] - 1);
  }

  // Bucket precedence matters below n = 5, where 2|I_1| - 2 can collide with
  // |I_1| + 2: a pair counts as A first, then B, then C.
  const std::uint64_t part = std::uint64_t(n + 1) * (std::uint64_t(w.q()) - 1);
  auto bucket = [&](std::uint64_t v) {
    if (v == 2 * part) return;  // A, already counted via the profile
    if (v == 3 + part)
      ++out.b;
    else if (v == 2 + part)
      ++out.c;
  };
  if (n >= 5) {
    for (std::size_t i = 0; i < rd.rho(); ++i)
      for (std::size_t j = i + 1; j < rd.rho(); ++j) bucket(subseq_pair_i2_size(w, i, j));
  } else {
    enumeration_budget budget{budget_limit};
    std::vector<sequence_set> spheres;
    for (std::size_t i = 0; i < rd.rho(); ++i)
      spheres.push_back(detail::insertion_sphere(delete_from_run(w, i), 2, budget));
    for (std::size_t i = 0; i < rd.rho(); ++i)
      for (std::size_t j = i + 1; j < rd.rho(); ++j)
        bucket(intersection_size(spheres[i], spheres[j]));
  }
  return out;
}

// Lemma 8 closed forms for B and C, valid for the binary alphabet only; kept
// as a cross-check against the pair classification.
inline std::pair<std::uint64_t, std::uint64_t> binary_profile_pair_counts(
    std::span<const std::size_t> profile) {
  std::uint64_t b = 0, c = 0;
  for (std::size_t k = 0; k + 1 < profile.size(); ++k)
    b += std::uint64_t(profile[k] - 1) * (profile[k + 1] - 1);
  for (std::size_t i = 0; i + 2 < profile.size(); ++i) {
    for (std::size_t j = i + 2; j < profile.size(); ++j) {
      bool all3 = true, all1 = true;
      for (std::size_t k = i + 1; k < j; ++k) {
        all3 = all3 && profile[k] == 3;
        all1 = all1 && profile[k] == 1;
      }
      std::uint64_t ends = std::uint64_t(profile[i] - 1) * (profile[j] - 1);
      if (all3) c += ends;
      if (all1) c += ends;
    }
  }
  return {b, c};
}

// |B_{0,1,2}(w)|: rho C(n+1,2)(q-1)^2 - (A-1)(1+(n+1)(q-1)) + 2A - 2B - C + D
// for n >= 5; smaller sequences are enumerated.
inline ball_report size_b012(const sequence& w,
                             std::uint64_t budget_limit = default_oracle_budget) {
  const channel_spec spec{0, 1, 2};
  if (w.empty()) throw range_error("single-deletion balls need n >= 1");
  ball_report report{spec, 0, size_method::formula, detail::diagnostics_for(w), {}, {}};
  const std::size_t n = w.size();
  if (n < 5) {
    report.size = error_ball(w, spec, budget_limit).size();
    report.method = size_method::oracle;
    return report;
  }
  pair_counts counts = count_abcd(w, budget_limit);
  const std::int64_t q1 = w.q() - 1;
  const std::int64_t rho = static_cast<std::int64_t>(report.diagnostics.rho);
  const std::int64_t i1 = 1 + std::int64_t(n + 1) * q1;
  const std::int64_t a = static_cast<std::int64_t>(counts.a);
  std::int64_t total = checked_mul_signed(rho, checked_mul_signed(
                                                   static_cast<std::int64_t>(binomial(n + 1, 2)),
                                                   checked_mul_signed(q1, q1)));
  total = checked_add_signed(total, -checked_mul_signed(a - 1, i1));
  total = checked_add_signed(total, 2 * a);
  total = checked_add_signed(total, -2 * static_cast<std::int64_t>(counts.b));
  total = checked_add_signed(total, -static_cast<std::int64_t>(counts.c));
  total = checked_add_signed(total, static_cast<std::int64_t>(counts.d));
  report.size = static_cast<std::uint64_t>(total);
  report.diagnostics.counts = counts;
  return report;
}

// |B_{2,1,0}(w)| by run count, five cases.
inline ball_report size_b210(const sequence& w,
                             std::uint64_t budget_limit = default_oracle_budget) {
  const channel_spec spec{2, 1, 0};
  if (w.empty()) throw range_error("single-deletion balls need n >= 1");
  ball_report report{spec, 0, size_method::formula, detail::diagnostics_for(w), {}, {}};
  const std::size_t n = w.size();
  if (n < 5) {
    report.size = error_ball(w, spec, budget_limit).size();
    report.method = size_method::oracle;
    return report;
  }
  const std::int64_t q1 = w.q() - 1;
  const std::int64_t nn = static_cast<std::int64_t>(n);
  const std::int64_t rho = static_cast<std::int64_t>(report.diagnostics.rho);
  const std::int64_t c2 = static_cast<std::int64_t>(binomial(n - 1, 2));
  std::int64_t total = 0;
  switch (rho) {
    case 1: total = 1 + (nn - 1) * q1 + c2 * q1 * q1; break;
    case 2: total = 1 + (nn - 1) * q1 + (nn - 2) * (nn - 2) * q1 * q1; break;
    case 3: total = 1 + 2 * q1 + (3 * nn - 7) * (nn - 2) / 2 * q1 * q1; break;
    case 4: total = 2 - (nn - 4) * q1 + (2 * nn * nn - 9 * nn + 10) * q1 * q1; break;
    default:
      total = checked_add_signed(
          2 + ((3 - rho) * nn + 2 * rho - 4) * q1,
          checked_mul_signed(checked_mul_signed(rho, c2) - (rho - 1) * (nn - 2),
                             checked_mul_signed(q1, q1)));
      break;
  }
  report.size = static_cast<std::uint64_t>(total);
  return report;
}

// |B_{1,0,1}(w)| = 1 + (n+1)(q-1) + (n^2 - sum C(l_j, 2))(q-1)^2.
inline ball_report size_b101(const sequence& w) {
  const channel_spec spec{1, 0, 1};
  if (w.empty()) throw range_error("needs n >= 1");
  ball_report report{spec, 0, size_method::formula, detail::diagnostics_for(w), {}, {}};
  const std::uint64_t q1 = std::uint64_t(w.q()) - 1;
  const std::uint64_t n = w.size();
  runs_decomposition rd(w);
  std::uint64_t run_pairs = 0;
  for (const run& r : rd.runs()) run_pairs += binomial(r.length, 2);
  report.size = checked_add(1 + (n + 1) * q1,
                            checked_mul(checked_mul(n, n) - run_pairs, checked_mul(q1, q1)));
  return report;
}

// |B_{0,1,1}(w)| = rho (n(q-1) - 1) + 2 - sum C(s_i - 1, 2) for n >= 2.
inline ball_report size_b011(const sequence& w,
                             std::uint64_t budget_limit = default_oracle_budget) {
  const channel_spec spec{0, 1, 1};
  if (w.empty()) throw range_error("single-deletion balls need n >= 1");
  ball_report report{spec, 0, size_method::formula, detail::diagnostics_for(w), {}, {}};
  const std::size_t n = w.size();
  if (n < 2) {
    report.size = error_ball(w, spec, budget_limit).size();
    report.method = size_method::oracle;
    return report;
  }
  std::int64_t total = checked_mul_signed(static_cast<std::int64_t>(report.diagnostics.rho),
                                          std::int64_t(n) * (w.q() - 1) - 1) +
                       2;
  for (std::size_t len : alternating_segments(w).lengths())
    total -= static_cast<std::int64_t>(binomial(len - 1, 2));
  report.size = static_cast<std::uint64_t>(total);
  return report;
}

enum class size_mode { formula_preferred, oracle_only };

// Dispatch over the closed forms; channels without one go to the oracle.
inline ball_report size_generic(const sequence& w, const channel_spec& spec,
                                size_mode mode = size_mode::formula_preferred,
                                std::uint64_t budget_limit = default_oracle_budget) {
  if (spec.substitutions < 0 || spec.deletions < 0 || spec.insertions < 0)
    throw range_error("channel spec entries must be non-negative");
  if (static_cast<std::size_t>(spec.deletions) > w.size())
    throw range_error("cannot delete " + std::to_string(spec.deletions) +
                      " symbols from length " + std::to_string(w.size()));

  if (mode == size_mode::formula_preferred) {
    const int t1 = spec.substitutions, t2 = spec.deletions, t3 = spec.insertions;
    if (t1 == 0 && t2 == 1 && t3 == 2) return size_b012(w, budget_limit);
    if (t1 == 2 && t2 == 1 && t3 == 0) return size_b210(w, budget_limit);
    if (t1 == 1 && t2 == 0 && t3 == 1) return size_b101(w);
    if (t1 == 0 && t2 == 1 && t3 == 1) return size_b011(w, budget_limit);
    const std::uint64_t q1 = std::uint64_t(w.q()) - 1;
    if (t2 == 0 && t3 == 0) {  // Hamming ball
      std::uint64_t total = 0;
      for (int i = 0; i <= t1; ++i)
        total = checked_add(total, checked_mul(binomial(w.size(), i), pow_u64(q1, i)));
      return {spec, total, size_method::formula, detail::diagnostics_for(w), {}, {}};
    }
    if (t1 == 0 && t2 == 0) {  // insertion sphere
      std::uint64_t total = 0;
      for (int i = 0; i <= t3; ++i)
        total = checked_add(total, checked_mul(binomial(w.size() + t3, i), pow_u64(q1, i)));
      return {spec, total, size_method::formula, detail::diagnostics_for(w), {}, {}};
    }
    if (t1 == 0 && t2 == 1 && t3 == 0) {  // deletion sphere, |D_1| = rho
      ball_report report{spec, 0, size_method::formula, detail::diagnostics_for(w), {}, {}};
      report.size = report.diagnostics.rho;
      return report;
    }
  }
  ball_report report{spec, 0, size_method::oracle, detail::diagnostics_for(w), {}, {}};
  report.size = error_ball(w, spec, budget_limit).size();
  return report;
}

// Recompute through the oracle and attach the comparison to the report.
inline void attach_oracle_check(const sequence& w, ball_report& report,
                                std::uint64_t budget_limit = default_oracle_budget) {
  report.oracle_size = error_ball(w, report.spec, budget_limit).size();
  report.oracle_match = *report.oracle_size == report.size;
}

}  // namespace errorball
