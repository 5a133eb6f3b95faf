#pragma once
// Shared helpers for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "errorball/sequence.hpp"
#include "errorball/sweep.hpp"

namespace ebtest {

using errorball::sequence;

inline sequence seq(const char* text, int q = 2) { return sequence::parse(text, q); }

inline std::vector<sequence> all_sequences(int q, std::size_t n) {
  std::vector<sequence> out;
  errorball::for_each_sequence(q, n, [&](const sequence& w) { out.push_back(w); });
  return out;
}

inline sequence random_sequence(std::mt19937& rng, int q, std::size_t n) {
  std::uniform_int_distribution<int> dist(0, q - 1);
  std::vector<errorball::symbol> symbols(n);
  for (auto& s : symbols) s = static_cast<errorball::symbol>(dist(rng));
  return sequence(std::move(symbols), q);
}

// Applies a symbol permutation; perm has q entries.
inline sequence relabel(const sequence& w, const std::vector<int>& perm) {
  std::vector<errorball::symbol> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = static_cast<errorball::symbol>(perm[w[i]]);
  return sequence(std::move(out), w.q());
}

}  // namespace ebtest
