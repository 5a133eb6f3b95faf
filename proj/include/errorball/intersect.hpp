#pragma once
// Closed-form intersection sizes: insertion 2-spheres of sequence pairs and
// of 1-subsequences of a common word, double- and single-substitution balls,
// and the Levenshtein-constrained maxima N+(n,q,t[,ell]).

#include <cstdint>
#include <span>
#include <vector>

#include "errorball/confusability.hpp"
#include "errorball/distance.hpp"
#include "errorball/errors.hpp"
#include "errorball/math.hpp"
#include "errorball/oracle.hpp"
#include "errorball/sequence.hpp"

namespace errorball {

// Maximum intersection of two insertion t-spheres over distinct pairs:
// sum_{i<t} C(n+t, i) (1 - (-1)^{t-i}) (q-1)^i.
inline std::uint64_t n_plus(std::size_t n, int q, std::size_t t) {
  if (q < min_alphabet || q > max_alphabet) throw dimension_error("bad alphabet size");
  if (n < 1 || t < 1) throw range_error("need n >= 1 and t >= 1");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if ((t - i) % 2 == 0) continue;  // 1 - (-1)^{t-i} vanishes
    total = checked_add(total, checked_mul(2, checked_mul(binomial(n + t, i),
                                                          pow_u64(std::uint64_t(q) - 1, i))));
  }
  return total;
}

// Maximum under the floor d_L >= 2*ell. At ell = 0 the floor admits a pair
// with itself and the value is the full sphere size.
inline std::uint64_t n_plus_ell(std::size_t n, int q, std::size_t t, std::size_t ell) {
  if (q < min_alphabet || q > max_alphabet) throw dimension_error("bad alphabet size");
  if (n < ell || t < ell) throw range_error("need n, t >= ell >= 0");
  std::int64_t total = 0;
  for (std::size_t j = ell; j <= t; ++j) {
    for (std::size_t i = 0; i + j <= t; ++i) {
      std::int64_t term = checked_mul_signed(
          static_cast<std::int64_t>(checked_mul(binomial(2 * j, j), binomial(t + j - i, 2 * j))),
          static_cast<std::int64_t>(
              checked_mul(binomial(n + t, i), pow_u64(std::uint64_t(q) - 1, i))));
      total = checked_add_signed(total, (t + j - i) % 2 ? -term : term);
    }
  }
  if (total < 0) throw overflow_error("negative intersection size from alternating sum");
  return static_cast<std::uint64_t>(total);
}

// |I_2(x) cap I_2(y)| for distinct x, y of length n >= 4. Pairs with two
// common 1-supersequences reach 2(n+2)(q-1); type-B pairs resolve through the
// shifted-overlap decomposition; pairs with disjoint 1-spheres have no closed
// form (the value is at most 6) and fall back to enumeration.
inline std::uint64_t i2_pair_size(const sequence& x, const sequence& y,
                                  std::uint64_t budget_limit = default_oracle_budget) {
  if (x.size() != y.size() || x.q() != y.q())
    throw dimension_error("pair intersection needs equal length and alphabet");
  const std::size_t n = x.size();
  if (n < 4) throw precondition_error("closed forms need n >= 4; query the oracle below that");
  if (x == y) throw degenerate_pair_error("intersection size is defined for distinct pairs");

  const std::uint64_t base = std::uint64_t(n + 2) * (std::uint64_t(x.q()) - 1);
  pair_relation rel = classify_pair(x, y);
  switch (rel.kind) {
    case pair_kind::hamming_one:
    case pair_kind::type_a:
      return 2 * base;
    case pair_kind::type_b: {
      sequence v = rel.middle_x, vp = rel.middle_y;
      if (!detail::shifted_equal(v, vp)) std::swap(v, vp);  // orient x = u a m w, y = u m d w
      if (v.size() == 2) return 3 + base;
      // m = v[2..]; the overlap words are a = alpha m[..-1] and b = m[2..] delta.
      std::vector<symbol> av{v[0]}, bv;
      av.insert(av.end(), v.symbols().begin() + 1, v.symbols().end() - 1);
      bv.assign(v.symbols().begin() + 2, v.symbols().end());
      bv.push_back(vp[vp.size() - 1]);
      pair_relation inner = classify_pair(sequence(std::move(av), x.q()),
                                          sequence(std::move(bv), x.q()));
      if (inner.kind == pair_kind::hamming_one || inner.kind == pair_kind::type_a)
        return 3 + base;
      if (inner.kind == pair_kind::type_b) return 2 + base;
      return 1 + base;
    }
    default: {
      enumeration_budget budget{budget_limit};
      return intersection_size(detail::insertion_sphere(x, 2, budget),
                               detail::insertion_sphere(y, 2, budget));
    }
  }
}

// Run-pattern indicators for type-B pairs of 1-subsequences with j >= i+3.
// At most one fires; the sweep tests surface any overlap as a failure.
struct lemma4_flags {
  bool c1 = false, c2 = false, c3 = false, c4 = false, c5 = false;
  std::size_t t = static_cast<std::size_t>(-1);
  std::size_t s = static_cast<std::size_t>(-1);
  int fired() const { return int(c1) + int(c2) + int(c3) + int(c4) + int(c5); }
};

inline lemma4_flags evaluate_lemma4_flags(const runs_decomposition& rd, std::size_t i,
                                          std::size_t j) {
  if (i >= j || j >= rd.rho() || j < i + 3)
    throw index_error("condition flags need run indices i < j with j >= i+3");
  auto period2 = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t k = lo; k <= hi; ++k)
      if (rd[static_cast<std::size_t>(k)].value != rd[static_cast<std::size_t>(k) + 2].value)
        return false;
    return true;
  };

  std::vector<std::size_t> big;
  for (std::size_t k = i + 1; k < j; ++k)
    if (rd[k].length >= 2) big.push_back(k);

  lemma4_flags f;
  if (big.empty()) {
    // C5: all middle runs length one, exactly one period-2 defect.
    std::size_t defects = 0, where = 0;
    for (std::size_t k = i; k + 2 <= j; ++k)
      if (rd[k].value != rd[k + 2].value) ++defects, where = k;
    if (defects == 1) f.c5 = true, f.t = where;
  } else if (big.size() == 1) {
    const std::size_t t = big.front();
    bool sides = period2(static_cast<std::int64_t>(i), static_cast<std::int64_t>(t) - 2) &&
                 period2(static_cast<std::int64_t>(t), static_cast<std::int64_t>(j) - 2);
    if (sides) {
      if (rd[t].length >= 3)
        f.c2 = true, f.t = t;  // one long run, period-2 on both sides
      else if (rd[t - 1].value == rd[t + 1].value)
        f.c4 = true, f.t = t;  // one double run inside a fully period-2 stretch
      else
        f.c3 = true, f.t = t;  // one double run splitting two period-2 stretches
    }
  } else {
    // C1: double runs at t, t+2, ..., s with single runs between, fully
    // period-2 symbols.
    const std::size_t t = big.front(), s = big.back();
    bool ok = s >= t + 2 && (s - t) % 2 == 0;
    for (std::size_t k = t; ok && k <= s; ++k)
      ok = rd[k].length == (((k - t) % 2 == 0) ? 2u : 1u);
    if (ok && period2(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j) - 2))
      f.c1 = true, f.t = t, f.s = s;
  }
  return f;
}

// |I_2(w^(i)) cap I_2(w^(j))| from the run structure alone, n >= 5. The value
// is one of 2(n+1)(q-1) and {1,2,3} + (n+1)(q-1).
//
// For a type-B pair the two spheres share the unique 1-supersequence z of
// both 1-subsequences plus the common 1-supersequences of the two overlap
// words sigma_i ... sigma_{j-1}^{l_{j-1}-1} and sigma_{i+1}^{l_{i+1}-1} ...
// sigma_j, so the size is 1 + (n+1)(q-1) + |I_1 cap I_1| of that word pair.
// The published condition list (the flags above) characterizes the extra term
// only for binary alphabets; the reduction itself is exact for every q.
inline std::uint64_t subseq_pair_i2_size(const sequence& w, std::size_t i, std::size_t j) {
  const std::size_t n = w.size();
  if (n < 5)
    throw precondition_error("subsequence pair intersections need n >= 5; use the oracle");
  runs_decomposition rd(w);
  if (i >= j || j >= rd.rho())
    throw index_error("need run indices i < j < rho, got " + std::to_string(i) + ", " +
                      std::to_string(j));
  const std::uint64_t part = std::uint64_t(n + 1) * (std::uint64_t(w.q()) - 1);
  if (j == i + 1 || detail::subsequence_pair_type_a(rd, i, j)) return 2 * part;

  std::vector<symbol> left{rd[i].value}, right;
  for (std::size_t k = i + 1; k < j; ++k) {
    detail::append_run(left, rd[k].value, rd[k].length - (k == j - 1));
    detail::append_run(right, rd[k].value, rd[k].length - (k == i + 1));
  }
  right.push_back(rd[j].value);
  sequence x_ov(std::move(left), w.q()), y_ov(std::move(right), w.q());
  if (x_ov == y_ov) return 2 * part;  // unreachable for non-type-A pairs
  switch (classify_pair(x_ov, y_ov).kind) {
    case pair_kind::hamming_one:
    case pair_kind::type_a:
      return 3 + part;
    case pair_kind::type_b:
      return 2 + part;
    default:
      return 1 + part;
  }
}

// |I_2(w^(i)) cap I_2(w^(j)) cap I_2(w^(k))|: one more than |I_1(w)| exactly
// when both adjacent pairs share two common 1-supersequences.
inline std::uint64_t subseq_triple_i2_size(const sequence& w, std::size_t i, std::size_t j,
                                           std::size_t k) {
  const std::size_t n = w.size();
  if (n < 5)
    throw precondition_error("subsequence triple intersections need n >= 5; use the oracle");
  runs_decomposition rd(w);
  if (!(i < j && j < k) || k >= rd.rho())
    throw index_error("need run indices i < j < k < rho");
  const std::uint64_t i1 = 1 + std::uint64_t(n + 1) * (std::uint64_t(w.q()) - 1);
  auto shares_two = [&](std::size_t a, std::size_t b) {
    return b == a + 1 || detail::subsequence_pair_type_a(rd, a, b);
  };
  return (shares_two(i, j) && shares_two(j, k)) ? i1 + 1 : i1;
}

// Four or more distinct 1-subsequences: the intersection collapses to I_1(w).
inline std::uint64_t subseq_quad_i2_size(const sequence& w, std::span<const std::size_t> indices) {
  if (indices.size() < 4)
    throw precondition_error("need at least four run indices, got " +
                             std::to_string(indices.size()));
  runs_decomposition rd(w);
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= rd.rho()) throw index_error("run index out of range");
    if (a > 0 && indices[a] <= indices[a - 1])
      throw index_error("run indices must be strictly increasing");
  }
  return 1 + std::uint64_t(w.size() + 1) * (std::uint64_t(w.q()) - 1);
}

// |B_{2,0,0}(x) cap B_{2,0,0}(y)| by Hamming distance.
inline std::uint64_t sub2_pair_size(const sequence& x, const sequence& y) {
  if (x.size() != y.size() || x.q() != y.q())
    throw dimension_error("pair intersection needs equal length and alphabet");
  const std::uint64_t n = x.size();
  if (n < 2) throw precondition_error("double-substitution intersections need n >= 2");
  const std::uint64_t q = x.q(), q1 = q - 1;
  switch (hamming_distance(x, y)) {
    case 0: return 1 + n * q1 + binomial(n, 2) * q1 * q1;  // the ball itself
    case 1: return q * (1 + (n - 1) * q1);
    case 2: return q * q + 2 * (n - 2) * q1;
    case 3: return 6 * q1;
    case 4: return 6;
    default: return 0;
  }
}

// Intersections of double-substitution balls of three, four or five
// 1-subsequences, by their offset pattern from a base run index. Patterns
// spanning five or more runs contain a pair at Hamming distance >= 5 and
// vanish; in-span patterns outside the table are rejected.
inline std::uint64_t sub2_multi_size(const sequence& w, std::size_t base,
                                     std::span<const int> offsets,
                                     bool* vanished_by_distance = nullptr) {
  if (vanished_by_distance) *vanished_by_distance = false;
  if (offsets.size() < 3) throw precondition_error("offset patterns have at least three entries");
  for (std::size_t a = 0; a < offsets.size(); ++a) {
    if (offsets[a] < 0) throw pattern_error("offsets must be non-negative");
    if (a > 0 && offsets[a] <= offsets[a - 1])
      throw pattern_error("offsets must be strictly increasing");
  }
  if (offsets.front() != 0) throw pattern_error("offset patterns are anchored at 0");
  runs_decomposition rd(w);
  if (base + static_cast<std::size_t>(offsets.back()) >= rd.rho())
    throw index_error("offset pattern exceeds the run count");

  if (offsets.back() >= 5) {
    if (vanished_by_distance) *vanished_by_distance = true;
    return 0;
  }

  const std::uint64_t n = w.size(), q = w.q(), q1 = q - 1;
  auto is = [&](std::initializer_list<int> want) {
    return std::equal(offsets.begin(), offsets.end(), want.begin(), want.end());
  };
  if (is({0, 1, 2})) return q * q + (n - 3) * q1;
  if (is({0, 1, 3}) || is({0, 2, 3})) return 4 * q - 3;
  if (is({0, 1, 4}) || is({0, 3, 4})) return 3;
  if (is({0, 2, 4})) return 5;
  if (is({0, 1, 2, 3})) return 3 * q - 2;
  if (is({0, 2, 3, 4})) return 3;
  if (is({0, 1, 3, 4})) return 2;
  if (is({0, 1, 2, 3, 4})) return 2;
  throw pattern_error("no closed form for this offset pattern");
}

// Hamming distance between two insertion variants, from the index arithmetic
// alone. A variant at the last position of run h with the top alternative
// index extends run h+1 and sits one closer to everything on its right.
inline std::size_t ins1_hamming(const sequence& w, std::int64_t a, std::int64_t b) {
  (void)detail::decode_insertion_index(w, a);
  (void)detail::decode_insertion_index(w, b);
  if (a == b) return 0;
  if (a <= 0 && b <= 0) return 1;

  const std::int64_t q1 = w.q() - 1;
  auto position_of = [&](std::int64_t k) { return static_cast<std::size_t>((k - 1) / q1); };
  auto alt_of = [&](std::int64_t k) {
    return k - static_cast<std::int64_t>(position_of(k)) * q1;  // j in [1, q-1]
  };

  runs_decomposition rd(w);
  if (a > 0 && b > 0) {
    if (position_of(a) == position_of(b)) return 1;
    if (position_of(a) > position_of(b)) std::swap(a, b);
    const std::size_t pa = position_of(a), pb = position_of(b);
    const std::size_t ha = rd.run_of_position(pa), hb = rd.run_of_position(pb);
    const std::size_t t = hb - ha;
    const bool last_of_run = pa == rd.start_of(ha) + rd[ha].length - 1;
    if (last_of_run && alt_of(a) == q1) return t;
    if (last_of_run) return t + 1;
    return t + 2;
  }
  const std::int64_t neg = std::min(a, b), pos = std::max(a, b);
  const std::size_t h = rd.run_of_position(position_of(pos)) + 1;
  return neg == 0 ? h : h + 1;
}

// |B_{1,0,0}(z) cap B_{1,0,0}(z~)| by Hamming distance: q, 2 or 0.
inline std::uint64_t sub1_pair_size(const sequence& z, const sequence& zt) {
  if (z.size() != zt.size() || z.q() != zt.q())
    throw dimension_error("pair intersection needs equal length and alphabet");
  switch (hamming_distance(z, zt)) {
    case 0: return 1 + std::uint64_t(z.size()) * (std::uint64_t(z.q()) - 1);
    case 1: return z.q();
    case 2: return 2;
    default: return 0;
  }
}

// |B_{1,0,0}(w^(k)) cap union over k' < k of B_{1,0,0}(w^(k'))| in the
// Definition 8 index order: 0 for the very first index, q for the remaining
// front insertions, and j(q-1) + q when position i is the j-th symbol of its
// run.
inline std::uint64_t sub1_prefix_union_size(const sequence& w, std::int64_t k) {
  (void)detail::decode_insertion_index(w, k);
  const std::int64_t q1 = w.q() - 1;
  if (k == -q1) return 0;
  if (k <= 0) return w.q();
  runs_decomposition rd(w);
  const std::size_t pos = static_cast<std::size_t>((k - 1) / q1);
  const std::size_t h = rd.run_of_position(pos);
  const std::uint64_t j = pos - rd.start_of(h) + 1;
  return j * static_cast<std::uint64_t>(q1) + w.q();
}

}  // namespace errorball
