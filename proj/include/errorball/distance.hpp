#pragma once
// Hamming, indel-only (Levenshtein) and full edit distances.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "errorball/errors.hpp"
#include "errorball/sequence.hpp"

namespace errorball {

inline std::size_t hamming_distance(const sequence& x, const sequence& y) {
  if (x.size() != y.size())
    throw dimension_error("hamming distance needs equal lengths, got " +
                          std::to_string(x.size()) + " and " + std::to_string(y.size()));
  if (x.q() != y.q()) throw dimension_error("hamming distance needs a common alphabet");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

namespace detail {

inline std::size_t lcs_length(const sequence& x, const sequence& y) {
  const std::size_t m = y.size();
  std::vector<std::size_t> row(m + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t saved = row[j];
      row[j] = (x[i - 1] == y[j - 1]) ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = saved;
    }
  }
  return row[m];
}

}  // namespace detail

// Insertions and deletions only: |x| + |y| - 2 lcs(x, y).
inline std::size_t levenshtein_distance(const sequence& x, const sequence& y) {
  if (x.q() != y.q()) throw dimension_error("levenshtein distance needs a common alphabet");
  return x.size() + y.size() - 2 * detail::lcs_length(x, y);
}

inline std::size_t edit_distance(const sequence& x, const sequence& y) {
  if (x.q() != y.q()) throw dimension_error("edit distance needs a common alphabet");
  const std::size_t m = y.size();
  std::vector<std::size_t> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) row[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t saved = row[j];
      std::size_t sub = diag + (x[i - 1] != y[j - 1]);
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
      diag = saved;
    }
  }
  return row[m];
}

}  // namespace errorball
