#pragma once
// Sequences over Sigma_q and their structural decompositions: runs and
// maximal alternating segments. Everything downstream consumes these.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errorball/errors.hpp"

namespace errorball {

using symbol = std::uint8_t;

inline constexpr int min_alphabet = 2;
inline constexpr int max_alphabet = 36;

namespace detail {

inline char symbol_to_char(symbol s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

inline int char_to_symbol(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  if (c >= 'A' && c <= 'Z') return 10 + (c - 'A');
  return -1;
}

}  // namespace detail

class sequence {
public:
  sequence() = default;

  sequence(std::vector<symbol> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
    if (q < min_alphabet || q > max_alphabet)
      throw dimension_error("alphabet size must be in [2, 36], got " + std::to_string(q));
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] >= q_)
        throw parse_error("symbol " + std::to_string(int(symbols_[i])) +
                              " outside alphabet of size " + std::to_string(q),
                          i + 1);
  }

  // Text encoding: characters 0-9 then a-z for symbol values 0-35,
  // case-insensitive on input.
  static sequence parse(std::string_view text, int q) {
    if (q < min_alphabet || q > max_alphabet)
      throw dimension_error("alphabet size must be in [2, 36], got " + std::to_string(q));
    std::vector<symbol> symbols;
    symbols.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      int v = detail::char_to_symbol(text[i]);
      if (v < 0) throw parse_error(std::string("invalid character '") + text[i] + "'", i + 1);
      if (v >= q)
        throw parse_error("symbol " + std::to_string(v) + " outside alphabet of size " +
                              std::to_string(q),
                          i + 1);
      symbols.push_back(static_cast<symbol>(v));
    }
    return sequence(std::move(symbols), q);
  }

  int q() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<symbol>& symbols() const { return symbols_; }

  std::string str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (symbol s : symbols_) out.push_back(detail::symbol_to_char(s));
    return out;
  }

  sequence reversed() const {
    std::vector<symbol> rev(symbols_.rbegin(), symbols_.rend());
    return sequence(std::move(rev), q_);
  }

  // Lexicographic on symbols, alphabet size as tie-break.
  friend auto operator<=>(const sequence&, const sequence&) = default;

private:
  std::vector<symbol> symbols_;
  int q_ = min_alphabet;
};

struct run {
  symbol value;
  std::size_t length;
  friend bool operator==(const run&, const run&) = default;
};

// The factorization w = sigma_1^{l_1} ... sigma_rho^{l_rho} with adjacent
// symbols distinct.
class runs_decomposition {
public:
  explicit runs_decomposition(const sequence& w) {
    if (w.empty()) throw empty_input_error("cannot decompose an empty sequence into runs");
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (runs_.empty() || runs_.back().value != w[i]) {
        starts_.push_back(i);
        runs_.push_back({w[i], 1});
      } else {
        ++runs_.back().length;
      }
    }
  }

  std::size_t rho() const { return runs_.size(); }
  const run& operator[](std::size_t r) const { return runs_[r]; }
  const std::vector<run>& runs() const { return runs_; }

  // 0-based position of the first symbol of run r.
  std::size_t start_of(std::size_t r) const { return starts_[r]; }

  std::size_t run_of_position(std::size_t pos) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), pos);
    return static_cast<std::size_t>(it - starts_.begin()) - 1;
  }

private:
  std::vector<run> runs_;
  std::vector<std::size_t> starts_;
};

inline runs_decomposition runs_decompose(const sequence& w) { return runs_decomposition(w); }

// Maximal alternating window [begin, end).
struct segment {
  std::size_t begin;
  std::size_t end;
  std::size_t length() const { return end - begin; }
  friend bool operator==(const segment&, const segment&) = default;
};

class segments_profile {
public:
  explicit segments_profile(std::vector<segment> segments) : segments_(std::move(segments)) {}

  const std::vector<segment>& segments() const { return segments_; }
  std::size_t psi() const { return segments_.size(); }

  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    out.reserve(segments_.size());
    for (const segment& s : segments_) out.push_back(s.length());
    return out;
  }

  // Lengths with the 1-segments dropped, order preserved.
  std::vector<std::size_t> modified_lengths() const {
    std::vector<std::size_t> out;
    for (const segment& s : segments_)
      if (s.length() >= 2) out.push_back(s.length());
    return out;
  }

  std::size_t psi_modified() const {
    std::size_t count = 0;
    for (const segment& s : segments_) count += s.length() >= 2;
    return count;
  }

private:
  std::vector<segment> segments_;
};

// Left-to-right scan. A window grows while the period-2 condition holds; the
// next maximal window starts at the previous end position when the boundary
// symbols differ (one-position overlap) and right after it otherwise.
inline segments_profile alternating_segments(const sequence& w) {
  if (w.empty()) throw empty_input_error("cannot segment an empty sequence");
  const std::size_t n = w.size();
  std::vector<segment> segments;
  std::size_t i = 0;
  while (true) {
    std::size_t j = i;
    while (j + 1 < n) {
      bool extends = (j == i) ? w[i] != w[i + 1] : w[j + 1] == w[j - 1];
      if (!extends) break;
      ++j;
    }
    segments.push_back({i, j + 1});
    if (j + 1 >= n) break;
    i = (w[j] != w[j + 1]) ? j : j + 1;
  }
  return segments_profile(std::move(segments));
}

struct channel_spec {
  int substitutions = 0;  // t1, "at most"
  int deletions = 0;      // t2, exact
  int insertions = 0;     // t3, exact
  friend bool operator==(const channel_spec&, const channel_spec&) = default;
};

// w^(i): one symbol removed from run r (0-based). When the run has length 1
// it vanishes and its neighbours merge.
inline sequence delete_from_run(const sequence& w, std::size_t r) {
  runs_decomposition rd(w);
  if (r >= rd.rho())
    throw index_error("run index " + std::to_string(r) + " out of range [0, " +
                      std::to_string(rd.rho()) + ")");
  std::vector<symbol> out = w.symbols();
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(rd.start_of(r)));
  return sequence(std::move(out), w.q());
}

namespace detail {

// Symbols distinct from w[pos] (0-based), ascending, except that when pos ends
// its run mid-sequence the next run's symbol is moved to the back. That makes
// index (i-1)(q-1)+(q-1) at a run boundary coincide with extending the next
// run, which the insertion-index arithmetic below relies on.
inline std::vector<symbol> insertion_alternatives(const sequence& w, std::size_t pos) {
  std::vector<symbol> out;
  out.reserve(static_cast<std::size_t>(w.q()) - 1);
  for (int c = 0; c < w.q(); ++c)
    if (static_cast<symbol>(c) != w[pos]) out.push_back(static_cast<symbol>(c));
  if (pos + 1 < w.size() && w[pos + 1] != w[pos]) {
    auto it = std::find(out.begin(), out.end(), w[pos + 1]);
    std::rotate(it, it + 1, out.end());
  }
  return out;
}

struct insertion_point {
  std::size_t position;  // insert after this many leading symbols
  symbol value;
};

inline insertion_point decode_insertion_index(const sequence& w, std::int64_t index) {
  if (w.empty()) throw empty_input_error("insertion variants need a non-empty sequence");
  const std::int64_t q1 = w.q() - 1;
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  if (index < -q1 || index > n * q1)
    throw index_error("insertion index " + std::to_string(index) + " out of range [" +
                      std::to_string(-q1) + ", " + std::to_string(n * q1) + "]");
  if (index == 0) return {0, w[0]};
  if (index < 0) {
    int skip = static_cast<int>(-index);
    for (int c = 0; c < w.q(); ++c) {
      if (static_cast<symbol>(c) == w[0]) continue;
      if (--skip == 0) return {0, static_cast<symbol>(c)};
    }
  }
  std::size_t pos = static_cast<std::size_t>((index - 1) / q1);       // 0-based
  std::size_t j = static_cast<std::size_t>(index - static_cast<std::int64_t>(pos) * q1);
  return {pos + 1, insertion_alternatives(w, pos)[j - 1]};
}

}  // namespace detail

inline std::int64_t insertion_index_min(const sequence& w) { return -(w.q() - 1); }
inline std::int64_t insertion_index_max(const sequence& w) {
  return static_cast<std::int64_t>(w.size()) * (w.q() - 1);
}

// The indexed 1-supersequence of Definition 8; over the full index range this
// enumerates the insertion 1-sphere exactly once each.
inline sequence insertion_variant(const sequence& w, std::int64_t index) {
  detail::insertion_point p = detail::decode_insertion_index(w, index);
  std::vector<symbol> out = w.symbols();
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(p.position), p.value);
  return sequence(std::move(out), w.q());
}

}  // namespace errorball
