#include <stdexcept>
#include <algorithm>
#include <map>

#include "clusterword/bwt.hpp"
#include "doctest.h"

using namespace clusterword;

namespace {

// Last column of the explicitly materialized rotation array.
Word naive_bwt(const Word& w) {
  std::vector<std::vector<Letter>> rows;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<Letter> row;
    for (std::size_t j = 0; j < w.size(); ++j) row.push_back(w[(i + j) % w.size()]);
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<Letter> last;
  for (const auto& row : rows) last.push_back(row.back());
  return Word(last);
}

// Rebuilds the array column by column: prepend the last column to the rows
// and re-sort, n times. Returns the first row.
Word column_reconstruction(const Word& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<Letter>> rows(n);
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t i = 0; i < n; ++i) rows[i].insert(rows[i].begin(), b[i]);
    std::sort(rows.begin(), rows.end());
  }
  return Word(rows.front());
}

std::vector<Word> all_words(std::size_t r, std::size_t n) {
  std::vector<Word> out;
  std::vector<Letter> letters(n, 1);
  while (true) {
    out.emplace_back(letters);
    std::size_t pos = n;
    while (pos > 0 && letters[pos - 1] == r) letters[--pos] = 1;
    if (pos == 0) return out;
    ++letters[pos - 1];
  }
}

}  // namespace

TEST_CASE("golden transforms") {
  CHECK(bwt(parse_word("1322313223")) == parse_word("3333222211"));
  CHECK(bwt(parse_word("123131312")) == parse_word("323311112"));
  CHECK(bwt(parse_word("122131313")) == parse_word("333221111"));
  CHECK(bwt(Word{2, 1}) == Word{2, 1});
  CHECK(bwt(parse_word("121")) == parse_word("211"));
  CHECK(bwt(Word{1}) == Word{1});
}

TEST_CASE("bwt matches the materialized array and preserves Parikh vectors") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& w : all_words(3, n)) {
      const Word b = bwt(w);
      REQUIRE(b == naive_bwt(w));
      REQUIRE(parikh(b, 3) == parikh(w, 3));
    }
  }
}

TEST_CASE("bwt is constant on conjugacy classes") {
  for (const auto& w : all_words(3, 6)) {
    const Word b = bwt(w);
    for (std::size_t s = 1; s < w.size(); ++s) REQUIRE(bwt(w.rotation(s)) == b);
  }
}

TEST_CASE("tie-breaking never changes the image of a non-primitive word") {
  for (const auto& u : all_words(2, 4)) {
    for (std::size_t k = 2; k <= 3; ++k) {
      const Word w = u.power(k);
      auto sorted = sorted_conjugates(w);
      for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].word == sorted[i - 1].word) REQUIRE(sorted[i].rotation_index > sorted[i - 1].rotation_index);
      }
      REQUIRE(bwt(w) == naive_bwt(w));
    }
  }
}

TEST_CASE("clustering reports on known words") {
  auto ex1 = clustering_report(parse_word("122131313"));
  CHECK(ex1.is_clustering);
  CHECK(*ex1.permutation == Permutation{3, 2, 1});
  CHECK(ex1.perfect);
  CHECK(ex1.bwt_image == parse_word("333221111"));

  auto ex6 = clustering_report(parse_word("4123231312412"));
  CHECK(ex6.is_clustering);
  CHECK(*ex6.permutation == Permutation{4, 3, 1, 2});
  CHECK_FALSE(ex6.perfect);

  auto single = clustering_report(parse_word("11"));
  CHECK_FALSE(single.is_clustering);
  CHECK_FALSE(single.permutation.has_value());

  auto ex5 = clustering_report(parse_word("5252434252516152516161525161"));
  CHECK(ex5.is_clustering);
  CHECK(ex5.perfect);
  CHECK(ex5.occurring_letters == std::vector<Letter>{1, 2, 3, 4, 5, 6});

  auto two = clustering_report(parse_word("123131312"));
  CHECK_FALSE(two.is_clustering);
}

TEST_CASE("clustering on a restricted alphabet") {
  // 41 and 323 from a non-minimal 4-letter exchange.
  auto a = clustering_report(parse_word("41"));
  CHECK(a.is_clustering);
  CHECK(a.perfect);
  CHECK(a.occurring_letters == std::vector<Letter>{1, 4});
  auto b = clustering_report(parse_word("323"));
  CHECK(b.is_clustering);
  CHECK(*b.permutation == Permutation{2, 1});
}

TEST_CASE("clustering verdict equals the clustering image test") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& w : all_words(3, n)) {
      const auto report = clustering_report(w);
      const Word u = w.reindexed();
      const auto d = report.occurring_letters.size();
      bool matches_some_image = false;
      if (d >= 2) {
        for (const auto& pi : Permutation::all(d)) {
          if (!pi.is_identity() && bwt(u) == clustering_image(pi, parikh(u))) {
            matches_some_image = true;
            REQUIRE(report.permutation == pi);
          }
        }
      }
      REQUIRE(report.is_clustering == matches_some_image);
    }
  }
}

TEST_CASE("clustering depends only on the order type of the word") {
  const std::vector<Letter> increasing{2, 5, 7};
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& w : all_words(3, n)) {
      std::vector<Letter> renamed;
      for (Letter c : w) renamed.push_back(increasing[c - 1]);
      const auto a = clustering_report(w);
      const auto b = clustering_report(Word(renamed));
      REQUIRE(a.is_clustering == b.is_clustering);
      REQUIRE(a.permutation == b.permutation);
      REQUIRE(a.perfect == b.perfect);
    }
  }
}

TEST_CASE("inverse transform on known images") {
  auto sq = inverse_bwt(parse_word("3333222211"));
  CHECK(sq.status == AntecedentStatus::NonPrimitiveAntecedent);
  CHECK(sq.antecedent->power == 2);
  CHECK(are_conjugate(sq.antecedent->root, parse_word("13223")));
  CHECK(sq.cycle_words.size() == 2);

  auto none = inverse_bwt(parse_word("32221"));
  CHECK(none.status == AntecedentStatus::NoAntecedent);
  CHECK_FALSE(none.antecedent.has_value());

  auto prim = inverse_bwt(parse_word("211"));
  CHECK(prim.status == AntecedentStatus::PrimitiveAntecedent);
  CHECK(prim.antecedent->root == parse_word("112"));

  CHECK(inverse_bwt(Word{2, 1}).antecedent->root == Word{1, 2});
  CHECK_THROWS_AS(inverse_bwt(Word{}), std::invalid_argument);
}

TEST_CASE("round trips through the inverse") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : all_words(2, n)) {
      const auto [u, k] = primitive_root(w);
      const auto inv = inverse_bwt(bwt(w));
      REQUIRE(inv.antecedent.has_value());
      REQUIRE(inv.antecedent->root == canonical_conjugate(u));
      REQUIRE(inv.antecedent->power == k);
      REQUIRE(inv.status == (k == 1 ? AntecedentStatus::PrimitiveAntecedent
                                    : AntecedentStatus::NonPrimitiveAntecedent));
      for (const auto& c : inv.cycle_words) REQUIRE(are_conjugate(c, u));
    }
  }
}

TEST_CASE("rank matching agrees with column-by-column reconstruction") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& b : all_words(3, n)) {
      const Word candidate = column_reconstruction(b);
      const bool has_antecedent = bwt(candidate) == b;
      const auto inv = inverse_bwt(b);
      REQUIRE(has_antecedent == (inv.status != AntecedentStatus::NoAntecedent));
      if (has_antecedent) {
        const auto root = primitive_root(candidate);
        REQUIRE(inv.antecedent->root == canonical_conjugate(root.root));
        REQUIRE(inv.antecedent->power == root.power);
        REQUIRE(bwt(inv.antecedent->root.power(inv.antecedent->power)) == b);
      }
    }
  }
}

TEST_CASE("clustering images") {
  CHECK(clustering_image(Permutation{3, 2, 1}, ParikhVector({4, 2, 3})) == parse_word("333221111"));
  CHECK(clustering_image(Permutation::identity(2), ParikhVector({1, 1})) == parse_word("12"));
  CHECK(clustering_image(Permutation{4, 3, 2, 1}, ParikhVector({3, 1, 2, 3})) == parse_word("444332111"));
  CHECK_THROWS_AS(clustering_image(Permutation{2, 1}, ParikhVector({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(clustering_image(Permutation{2, 1}, ParikhVector({1, 1, 1})), std::invalid_argument);
}
