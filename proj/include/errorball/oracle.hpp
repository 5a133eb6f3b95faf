#pragma once
// Brute-force enumeration of spheres, balls and their intersections. This is
// the ground truth every closed form is checked against, so it stays as
// literal as possible: generate, deduplicate, count.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errorball/distance.hpp"
#include "errorball/errors.hpp"
#include "errorball/math.hpp"
#include "errorball/sequence.hpp"

namespace errorball {

inline constexpr std::uint64_t default_oracle_budget = 100'000'000;

struct enumeration_budget {
  std::uint64_t limit = default_oracle_budget;
  std::uint64_t used = 0;
  void charge(std::uint64_t amount) {
    used = checked_add(used, amount);
    if (used > limit) throw budget_exceeded_error(used, limit);
  }
};

// Deduplicated set of sequences of uniform length and alphabet, kept sorted
// so that iteration order (and CSV output downstream) is deterministic.
class sequence_set {
public:
  sequence_set() = default;

  static sequence_set of(std::vector<sequence> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    for (const sequence& s : items) {
      if (s.size() != items.front().size())
        throw dimension_error("sequence set elements must have uniform length");
      if (s.q() != items.front().q())
        throw dimension_error("sequence set elements must share an alphabet");
    }
    sequence_set out;
    out.elements_ = std::move(items);
    return out;
  }

  const std::vector<sequence>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(const sequence& s) const {
    return std::binary_search(elements_.begin(), elements_.end(), s);
  }

  friend bool operator==(const sequence_set&, const sequence_set&) = default;

private:
  std::vector<sequence> elements_;
};

inline std::size_t intersection_size(const sequence_set& a, const sequence_set& b) {
  std::size_t count = 0;
  auto ia = a.elements().begin(), ib = b.elements().begin();
  while (ia != a.elements().end() && ib != b.elements().end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      ++count, ++ia, ++ib;
  }
  return count;
}

inline sequence_set intersection(std::span<const sequence_set> sets) {
  if (sets.empty()) throw dimension_error("intersection needs at least one set");
  for (const sequence_set& s : sets) {
    if (s.empty()) return {};
    if (s.elements().front().size() != sets.front().elements().front().size())
      throw dimension_error("intersection needs sets of uniform length");
    if (s.elements().front().q() != sets.front().elements().front().q())
      throw dimension_error("intersection needs sets over a common alphabet");
  }
  std::vector<sequence> acc = sets.front().elements();
  for (std::size_t i = 1; i < sets.size() && !acc.empty(); ++i) {
    std::vector<sequence> next;
    std::set_intersection(acc.begin(), acc.end(), sets[i].elements().begin(),
                          sets[i].elements().end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return sequence_set::of(std::move(acc));
}

namespace detail {

inline void enumerate_deletions(const sequence& w, std::size_t t, enumeration_budget& budget,
                                std::vector<sequence>& out) {
  const std::size_t n = w.size();
  if (t > n) throw range_error("cannot delete " + std::to_string(t) + " symbols from length " +
                               std::to_string(n));
  // Iterate over t-subsets of positions in lexicographic order.
  std::vector<std::size_t> pick(t);
  for (std::size_t i = 0; i < t; ++i) pick[i] = i;
  while (true) {
    budget.charge(1);
    std::vector<symbol> rest;
    rest.reserve(n - t);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (k < t && pick[k] == i)
        ++k;
      else
        rest.push_back(w[i]);
    }
    out.emplace_back(std::move(rest), w.q());
    if (t == 0) break;
    std::size_t j = t;
    while (j > 0 && pick[j - 1] == n - t + (j - 1)) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t i = j; i < t; ++i) pick[i] = pick[i - 1] + 1;
  }
}

inline void enumerate_substitutions(const sequence& w, std::size_t pos, std::size_t budget_left,
                                    std::vector<symbol>& scratch, enumeration_budget& budget,
                                    std::vector<sequence>& out) {
  budget.charge(1);
  out.emplace_back(scratch, w.q());
  if (budget_left == 0) return;
  for (std::size_t i = pos; i < w.size(); ++i) {
    for (int c = 0; c < w.q(); ++c) {
      if (static_cast<symbol>(c) == w[i]) continue;
      symbol saved = scratch[i];
      scratch[i] = static_cast<symbol>(c);
      enumerate_substitutions(w, i + 1, budget_left - 1, scratch, budget, out);
      scratch[i] = saved;
    }
  }
}

inline std::vector<sequence> single_insertions(const sequence& w, enumeration_budget& budget) {
  std::vector<sequence> out;
  out.reserve((w.size() + 1) * static_cast<std::size_t>(w.q()));
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    for (int c = 0; c < w.q(); ++c) {
      budget.charge(1);
      std::vector<symbol> next = w.symbols();
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<symbol>(c));
      out.emplace_back(std::move(next), w.q());
    }
  }
  return out;
}

inline sequence_set deletion_sphere(const sequence& w, std::size_t t, enumeration_budget& budget) {
  std::vector<sequence> out;
  enumerate_deletions(w, t, budget, out);
  return sequence_set::of(std::move(out));
}

inline sequence_set hamming_ball(const sequence& w, std::size_t t, enumeration_budget& budget) {
  std::vector<sequence> out;
  std::vector<symbol> scratch = w.symbols();
  enumerate_substitutions(w, 0, std::min(t, w.size()), scratch, budget, out);
  return sequence_set::of(std::move(out));
}

inline sequence_set insertion_sphere(const sequence& w, std::size_t t,
                                     enumeration_budget& budget) {
  std::vector<sequence> level{w};
  for (std::size_t round = 0; round < t; ++round) {
    std::vector<sequence> next;
    for (const sequence& s : level) {
      std::vector<sequence> ins = single_insertions(s, budget);
      next.insert(next.end(), std::make_move_iterator(ins.begin()),
                  std::make_move_iterator(ins.end()));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return sequence_set::of(std::move(level));
}

}  // namespace detail

// All distinct t-subsequences; |D_1(w)| equals the run count.
inline sequence_set deletion_sphere(const sequence& w, std::size_t t,
                                    std::uint64_t budget_limit = default_oracle_budget) {
  enumeration_budget budget{budget_limit};
  return detail::deletion_sphere(w, t, budget);
}

// All distinct t-supersequences; the size depends only on n, q and t.
inline sequence_set insertion_sphere(const sequence& w, std::size_t t,
                                     std::uint64_t budget_limit = default_oracle_budget) {
  enumeration_budget budget{budget_limit};
  return detail::insertion_sphere(w, t, budget);
}

// All sequences within Hamming distance t.
inline sequence_set hamming_ball(const sequence& w, std::size_t t,
                                 std::uint64_t budget_limit = default_oracle_budget) {
  enumeration_budget budget{budget_limit};
  return detail::hamming_ball(w, t, budget);
}

enum class edit_stage { deletion, substitution, insertion };

inline constexpr std::array<edit_stage, 3> canonical_stage_order{
    edit_stage::deletion, edit_stage::substitution, edit_stage::insertion};

// Error ball with an explicit stage order; the resulting set is the same for
// all six orders, which the property suite checks.
inline sequence_set error_ball_staged(const sequence& w, const channel_spec& spec,
                                      const std::array<edit_stage, 3>& order,
                                      std::uint64_t budget_limit = default_oracle_budget) {
  if (spec.substitutions < 0 || spec.deletions < 0 || spec.insertions < 0)
    throw range_error("channel spec entries must be non-negative");
  if (static_cast<std::size_t>(spec.deletions) > w.size())
    throw range_error("cannot delete " + std::to_string(spec.deletions) +
                      " symbols from length " + std::to_string(w.size()));
  enumeration_budget budget{budget_limit};
  std::vector<sequence> current{w};
  for (edit_stage stage : order) {
    std::vector<sequence> next;
    for (const sequence& s : current) {
      sequence_set grown;
      switch (stage) {
        case edit_stage::deletion:
          grown = detail::deletion_sphere(s, static_cast<std::size_t>(spec.deletions), budget);
          break;
        case edit_stage::substitution:
          grown = detail::hamming_ball(s, static_cast<std::size_t>(spec.substitutions), budget);
          break;
        case edit_stage::insertion:
          grown = detail::insertion_sphere(s, static_cast<std::size_t>(spec.insertions), budget);
          break;
      }
      next.insert(next.end(), grown.elements().begin(), grown.elements().end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return sequence_set::of(std::move(current));
}

// B_{t1,t2,t3}(w): at most t1 substitutions, exactly t2 deletions, exactly t3
// insertions.
inline sequence_set error_ball(const sequence& w, const channel_spec& spec,
                               std::uint64_t budget_limit = default_oracle_budget) {
  return error_ball_staged(w, spec, canonical_stage_order, budget_limit);
}

namespace detail {

inline void for_each_word(int q, std::size_t n, auto&& fn) {
  std::vector<symbol> digits(n, 0);
  while (true) {
    fn(digits);
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
}

}  // namespace detail

// max |I_t(x) cap I_t(y)| over pairs with d_L(x, y) >= 2*ell. The Levenshtein
// floor is the only constraint, so ell = 0 admits x = y and the maximum is the
// full sphere size.
inline std::uint64_t brute_max_intersection(std::size_t n, int q, std::size_t t, std::size_t ell,
                                            std::uint64_t budget_limit = default_oracle_budget) {
  if (q < min_alphabet || q > max_alphabet) throw dimension_error("bad alphabet size");
  if (n < ell || t < ell) throw range_error("need n, t >= ell >= 0");
  if (n == 0) throw range_error("need n >= 1");
  enumeration_budget budget{budget_limit};

  std::vector<sequence> words;
  words.reserve(pow_u64(static_cast<std::uint64_t>(q), n));
  detail::for_each_word(q, n, [&](const std::vector<symbol>& digits) {
    budget.charge(1);
    words.emplace_back(digits, q);
  });

  std::vector<sequence_set> spheres;
  spheres.reserve(words.size());
  for (const sequence& w : words) spheres.push_back(detail::insertion_sphere(w, t, budget));

  std::uint64_t best = 0;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a; b < words.size(); ++b) {
      if (a == b && ell > 0) continue;
      budget.charge(1);
      if (levenshtein_distance(words[a], words[b]) < 2 * ell) continue;
      best = std::max<std::uint64_t>(best, intersection_size(spheres[a], spheres[b]));
    }
  }
  return best;
}

}  // namespace errorball
