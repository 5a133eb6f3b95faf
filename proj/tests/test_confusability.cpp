#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "errorball/confusability.hpp"
#include "errorball/distance.hpp"
#include "errorball/oracle.hpp"
#include "test_util.hpp"

using namespace errorball;
using ebtest::all_sequences;
using ebtest::seq;

namespace {

// Literal definition check: search all decompositions x = uvw, y = uv'w with
// middles differing at both ends, and evaluate the shift conditions there.
pair_kind brute_classify(const sequence& x, const sequence& y) {
  if (x == y) return pair_kind::equal;
  if (hamming_distance(x, y) == 1) return pair_kind::hamming_one;
  const std::size_t n = x.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t s = 0; p + s < n; ++s) {
      std::size_t m = n - p - s;
      if (m < 2) continue;
      bool same_outside = true;
      for (std::size_t k = 0; k < p && same_outside; ++k) same_outside = x[k] == y[k];
      for (std::size_t k = 0; k < s && same_outside; ++k)
        same_outside = x[n - 1 - k] == y[n - 1 - k];
      if (!same_outside || x[p] == y[p] || x[p + m - 1] == y[p + m - 1]) continue;
      bool fwd = true, bwd = true;
      for (std::size_t k = 0; k + 1 < m; ++k) {
        fwd = fwd && x[p + k + 1] == y[p + k];
        bwd = bwd && x[p + k] == y[p + k + 1];
      }
      if (fwd && bwd) return pair_kind::type_a;
      if (fwd || bwd) return pair_kind::type_b;
    }
  }
  return pair_kind::other;
}

}  // namespace

TEST_CASE("classify_pair on the worked pairs") {
  CHECK(classify_pair(seq("0101"), seq("1010")).kind == pair_kind::type_a);
  CHECK(classify_pair(seq("0111"), seq("1110")).kind == pair_kind::type_b);
  CHECK(classify_pair(seq("0101"), seq("0101")).kind == pair_kind::equal);
  CHECK(classify_pair(seq("00"), seq("01")).kind == pair_kind::hamming_one);
  CHECK(classify_pair(seq("0011"), seq("1100")).kind == pair_kind::other);
  CHECK_THROWS_AS(classify_pair(seq("01"), seq("010")), dimension_error);
}

TEST_CASE("classify_pair witness decomposition") {
  pair_relation rel = classify_pair(seq("0012", 3), seq("0122", 3));
  CHECK(rel.kind == pair_kind::type_b);
  CHECK(rel.prefix == seq("0", 3));
  CHECK(rel.middle_x == seq("01", 3));
  CHECK(rel.middle_y == seq("12", 3));
  CHECK(rel.suffix == seq("2", 3));

  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    int q = 2 + trial % 3;
    std::size_t n = 2 + trial % 7;
    sequence x = ebtest::random_sequence(rng, q, n);
    sequence y = ebtest::random_sequence(rng, q, n);
    if (x == y) continue;
    pair_relation r = classify_pair(x, y);
    // reconstruct both words from the witness
    std::vector<symbol> xs = r.prefix.symbols(), ys = r.prefix.symbols();
    xs.insert(xs.end(), r.middle_x.symbols().begin(), r.middle_x.symbols().end());
    ys.insert(ys.end(), r.middle_y.symbols().begin(), r.middle_y.symbols().end());
    xs.insert(xs.end(), r.suffix.symbols().begin(), r.suffix.symbols().end());
    ys.insert(ys.end(), r.suffix.symbols().begin(), r.suffix.symbols().end());
    CHECK(sequence(xs, q) == x);
    CHECK(sequence(ys, q) == y);
    CHECK(r.middle_x.size() == r.middle_y.size());
    REQUIRE(r.middle_x.size() >= 1);
    CHECK(r.middle_x[0] != r.middle_y[0]);
    CHECK(r.middle_x[r.middle_x.size() - 1] != r.middle_y[r.middle_y.size() - 1]);
    if (r.kind == pair_kind::type_a || r.kind == pair_kind::type_b)
      CHECK(r.middle_x.size() >= 2);
    // symmetric up to swapping the middles
    pair_relation rs = classify_pair(y, x);
    CHECK(rs.kind == r.kind);
    CHECK(rs.middle_x == r.middle_y);
    CHECK(rs.middle_y == r.middle_x);
  }
}

TEST_CASE("classify_pair equals the definition checker exhaustively") {
  for (int q : {2, 3}) {
    for (std::size_t n = 2; n <= (q == 2 ? 7u : 5u); ++n) {
      std::vector<sequence> words = all_sequences(q, n);
      for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = 0; b < words.size(); ++b)
          REQUIRE(classify_pair(words[a], words[b]).kind == brute_classify(words[a], words[b]));
    }
  }
}

TEST_CASE("single_intersection_size on the worked pairs") {
  CHECK(single_intersection_size(seq("0101"), seq("1010"), single_edit::deletion) == 2);
  CHECK(single_intersection_size(seq("0111"), seq("1110"), single_edit::deletion) == 1);
  CHECK(single_intersection_size(seq("00"), seq("01"), single_edit::insertion) == 2);
  CHECK(single_intersection_size(seq("00"), seq("01"), single_edit::deletion) == 1);
  CHECK_THROWS_AS(single_intersection_size(seq("01"), seq("01"), single_edit::deletion),
                  degenerate_pair_error);
}

TEST_CASE("theorem-1 sizes match the oracle and the type-B biconditional holds") {
  for (int q : {2, 3}) {
    for (std::size_t n = 2; n <= (q == 2 ? 6u : 5u); ++n) {
      std::vector<sequence> words = all_sequences(q, n);
      std::vector<sequence_set> d1, i1;
      for (const sequence& w : words) {
        d1.push_back(deletion_sphere(w, 1));
        i1.push_back(insertion_sphere(w, 1));
      }
      for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
          std::size_t ds = intersection_size(d1[a], d1[b]);
          std::size_t is = intersection_size(i1[a], i1[b]);
          REQUIRE(single_intersection_size(words[a], words[b], single_edit::deletion) == ds);
          REQUIRE(single_intersection_size(words[a], words[b], single_edit::insertion) == is);
          bool type_b = classify_pair(words[a], words[b]).kind == pair_kind::type_b;
          REQUIRE((ds == 1 && is == 1) == type_b);
        }
      }
    }
  }
}

TEST_CASE("classify_subsequence_pair on the worked examples") {
  CHECK(classify_subsequence_pair(seq("01010"), 0, 2).kind == pair_kind::type_a);
  CHECK(classify_subsequence_pair(seq("01110021", 3), 0, 2).kind == pair_kind::type_b);
  CHECK(classify_subsequence_pair(seq("01110021", 3), 0, 1).kind == pair_kind::hamming_one);
  CHECK_THROWS_AS(classify_subsequence_pair(seq("0101"), 2, 2), index_error);
  CHECK_THROWS_AS(classify_subsequence_pair(seq("0101"), 0, 7), index_error);
}

TEST_CASE("classify_subsequence_pair agrees with classify_pair on the materialized pair") {
  for (int q : {2, 3}) {
    for (std::size_t n = 2; n <= 10; ++n) {
      errorball::for_each_sequence(q, n, [&](const sequence& w) {
        runs_decomposition rd(w);
        for (std::size_t i = 0; i < rd.rho(); ++i) {
          for (std::size_t j = i + 1; j < rd.rho(); ++j) {
            pair_relation shortcut = classify_subsequence_pair(w, i, j);
            pair_relation direct = classify_pair(delete_from_run(w, i), delete_from_run(w, j));
            REQUIRE(shortcut.kind == direct.kind);
            REQUIRE(shortcut.prefix == direct.prefix);
            REQUIRE(shortcut.middle_x == direct.middle_x);
            REQUIRE(shortcut.middle_y == direct.middle_y);
            REQUIRE(shortcut.suffix == direct.suffix);
          }
        }
      });
    }
  }
}
