#pragma once
// Pair classification: whether two equal-length sequences share 2, 1 or 0
// common single-edit neighbours, and the run-index shortcut for pairs of
// 1-subsequences of a common word.

#include <cstdint>
#include <string>
#include <vector>

#include "errorball/errors.hpp"
#include "errorball/sequence.hpp"

namespace errorball {

enum class pair_kind { equal, hamming_one, type_a, type_b, other };

inline const char* to_string(pair_kind k) {
  switch (k) {
    case pair_kind::equal: return "equal";
    case pair_kind::hamming_one: return "hamming-one";
    case pair_kind::type_a: return "type-a";
    case pair_kind::type_b: return "type-b";
    case pair_kind::other: return "other";
  }
  return "?";
}

// x = u v w and y = u v' w with u the longest common prefix and w the longest
// common suffix of the remainders; the middles automatically differ at both
// ends, which makes the decomposition unique.
struct pair_relation {
  pair_kind kind;
  sequence prefix;    // u
  sequence middle_x;  // v
  sequence middle_y;  // v'
  sequence suffix;    // w
};

namespace detail {

inline sequence slice(const sequence& w, std::size_t begin, std::size_t end) {
  std::vector<symbol> part(w.symbols().begin() + static_cast<std::ptrdiff_t>(begin),
                           w.symbols().begin() + static_cast<std::ptrdiff_t>(end));
  return sequence(std::move(part), w.q());
}

inline bool shifted_equal(const sequence& v, const sequence& vp) {
  // v[2..m] == v'[1..m-1] in 1-based terms.
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] != vp[i]) return false;
  return true;
}

}  // namespace detail

// Precedence: equal > hamming-one > type-a > type-b > other. A pair at
// Hamming distance one is reported as hamming-one even when a shift condition
// also holds.
inline pair_relation classify_pair(const sequence& x, const sequence& y) {
  if (x.size() != y.size())
    throw dimension_error("pair classification needs equal lengths, got " +
                          std::to_string(x.size()) + " and " + std::to_string(y.size()));
  if (x.q() != y.q()) throw dimension_error("pair classification needs a common alphabet");
  if (x == y) return {pair_kind::equal, x, sequence({}, x.q()), sequence({}, x.q()),
                      sequence({}, x.q())};

  const std::size_t n = x.size();
  std::size_t p = 0;
  while (x[p] == y[p]) ++p;
  std::size_t s = 0;
  while (s < n - p - 1 && x[n - 1 - s] == y[n - 1 - s]) ++s;

  pair_relation rel{pair_kind::other, detail::slice(x, 0, p), detail::slice(x, p, n - s),
                    detail::slice(y, p, n - s), detail::slice(x, n - s, n)};
  if (rel.middle_x.size() == 1) {
    rel.kind = pair_kind::hamming_one;
    return rel;
  }
  bool forward = detail::shifted_equal(rel.middle_x, rel.middle_y);
  bool backward = detail::shifted_equal(rel.middle_y, rel.middle_x);
  if (forward && backward)
    rel.kind = pair_kind::type_a;
  else if (forward || backward)
    rel.kind = pair_kind::type_b;
  return rel;
}

enum class single_edit { deletion, insertion };

// |D_1(x) cap D_1(y)| or |I_1(x) cap I_1(y)| for distinct x, y of equal
// length: 2 for type-A pairs, 1 for type-B, 0 otherwise; at Hamming distance
// one the deletion spheres share 1 element and the insertion spheres 2.
inline std::size_t single_intersection_size(const sequence& x, const sequence& y,
                                            single_edit kind) {
  if (x == y) throw degenerate_pair_error("intersection size is defined for distinct pairs");
  switch (classify_pair(x, y).kind) {
    case pair_kind::hamming_one: return kind == single_edit::deletion ? 1 : 2;
    case pair_kind::type_a: return 2;
    case pair_kind::type_b: return 1;
    default: return 0;
  }
}

namespace detail {

inline void append_run(std::vector<symbol>& out, symbol value, std::size_t count) {
  out.insert(out.end(), count, value);
}

// True when all runs strictly between i and j have length one and the symbol
// pattern is period-2 across [i, j-2]; by Corollary 1 exactly these
// 1-subsequence pairs are type-A.
inline bool subsequence_pair_type_a(const runs_decomposition& rd, std::size_t i, std::size_t j) {
  for (std::size_t k = i + 1; k < j; ++k)
    if (rd[k].length != 1) return false;
  for (std::size_t k = i; k + 2 <= j; ++k)
    if (rd[k].value != rd[k + 2].value) return false;
  return true;
}

}  // namespace detail

// Relation between w^(i) and w^(j) for run indices i < j (0-based), computed
// from the run structure alone: adjacent indices give Hamming distance one,
// otherwise the pair is type-A exactly under the Corollary 1 conditions and
// type-B in every other case.
inline pair_relation classify_subsequence_pair(const sequence& w, std::size_t i, std::size_t j) {
  runs_decomposition rd(w);
  if (i >= j || j >= rd.rho())
    throw index_error("need run indices i < j < rho, got " + std::to_string(i) + ", " +
                      std::to_string(j) + " with rho " + std::to_string(rd.rho()));

  std::vector<symbol> u, v, vp, suffix;
  for (std::size_t k = 0; k < i; ++k) detail::append_run(u, rd[k].value, rd[k].length);
  detail::append_run(u, rd[i].value, rd[i].length - 1);
  for (std::size_t k = i + 1; k < j; ++k) detail::append_run(v, rd[k].value, rd[k].length);
  v.push_back(rd[j].value);
  vp.push_back(rd[i].value);
  for (std::size_t k = i + 1; k < j; ++k) detail::append_run(vp, rd[k].value, rd[k].length);
  detail::append_run(suffix, rd[j].value, rd[j].length - 1);
  for (std::size_t k = j + 1; k < rd.rho(); ++k)
    detail::append_run(suffix, rd[k].value, rd[k].length);

  pair_kind kind;
  if (j == i + 1)
    kind = pair_kind::hamming_one;
  else
    kind = detail::subsequence_pair_type_a(rd, i, j) ? pair_kind::type_a : pair_kind::type_b;
  return {kind, sequence(std::move(u), w.q()), sequence(std::move(v), w.q()),
          sequence(std::move(vp), w.q()), sequence(std::move(suffix), w.q())};
}

}  // namespace errorball
