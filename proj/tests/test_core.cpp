#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

#include "delbound/counting.hpp"
#include "delbound/qary_string.hpp"
#include "delbound/rational.hpp"

using namespace delbound;

namespace {

std::set<std::string> as_set(const StringSet& s) {
  std::set<std::string> out;
  for (const auto& x : s) out.insert(x.str());
  return out;
}

QaryString word(const std::string& digits, int q) { return QaryString::parse(digits, q); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  const Rational a(BigInt(6), BigInt(-4));
  CHECK(a.str() == "-3/2");
  CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
  CHECK(Rational(7).str() == "7/1");
  CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("-7/2").floor() == -4);
  CHECK(Rational::parse("-7/2").ceil() == -3);
  CHECK(Rational::from_double(0.375) == Rational(BigInt(3), BigInt(8)));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("runs") {
  CHECK(word("120010", 3).runs() == 5);
  CHECK(word("0000", 2).runs() == 1);
  CHECK(word("0101", 2).runs() == 4);
  CHECK(QaryString().runs() == 0);
  CHECK_THROWS_AS(word("2", 2), std::invalid_argument);
}

TEST_CASE("deletion sets") {
  CHECK(as_set(deletion_set(word("120010", 3), 1)) == std::set<std::string>{"20010", "10010", "12010", "12000", "12001"});
  CHECK(as_set(deletion_set(word("000", 2), 1)) == std::set<std::string>{"00"});
  CHECK(as_set(deletion_set(word("0101", 2), 0)) == std::set<std::string>{"0101"});
  CHECK_THROWS_AS(deletion_set(word("01", 2), 3), std::domain_error);

  for (auto [q, n] : {std::pair{2, 8}, {3, 5}})
    for (const auto& w : oracle::all_words(q, n))
      for (int s = 0; s <= 3 && s <= n; ++s) {
        const auto x = word(w, q);
        const auto ds = deletion_set(x, s);
        REQUIRE(as_set(ds) == oracle::deletions(w, s));
        CHECK(deletion_set_size(x, s) == ds.size());
        if (s == 1) CHECK(ds.size() == static_cast<std::size_t>(oracle::runs(w)));
      }
}

TEST_CASE("insertion sets") {
  CHECK(as_set(insertion_set(word("01", 2), 1)) == std::set<std::string>{"001", "010", "011", "101"});
  CHECK(as_set(insertion_set(QaryString(), 1)) == std::set<std::string>{"0", "1"});
  for (auto [q, m, s] : {std::tuple{2, 4, 1}, {2, 3, 2}, {3, 3, 1}, {3, 2, 2}})
    for (const auto& w : oracle::all_words(q, m)) {
      const auto is = insertion_set(word(w, q), s);
      REQUIRE(as_set(is) == oracle::insertions(w, q, s));
      CHECK(iota(q, s, m + s) == is.size());
    }
}

TEST_CASE("subsequence and edit distance") {
  CHECK(is_subsequence(word("01", 2), word("010", 2)));
  CHECK_FALSE(is_subsequence(word("11", 2), word("010", 2)));
  CHECK(edit_distance(word("00", 2), word("11", 2)) == 4);

  const auto words = oracle::all_words(2, 4);
  for (const auto& a : words)
    for (const auto& b : oracle::all_words(2, 3)) {
      CHECK(is_subsequence(word(b, 2), word(a, 2)) == oracle::subsequence(b, a));
      CHECK(edit_distance(word(a, 2), word(b, 2)) == oracle::bfs_distance(a, b, 2));
    }
  for (const auto& a : oracle::all_words(3, 3))
    for (const auto& b : oracle::all_words(3, 3)) CHECK(edit_distance(word(a, 3), word(b, 3)) == oracle::bfs_distance(a, b, 3));
}

TEST_CASE("confusability equivalences on all binary pairs") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = all_strings(2, n);
    for (int s = 1; s <= 2 && s <= n; ++s) {
      std::vector<StringSet> del, ins;
      for (const auto& x : all) {
        del.push_back(deletion_set(x, s));
        ins.push_back(n <= 6 ? insertion_set(x, s) : StringSet{});
      }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          const bool close = edit_distance(all[i], all[j]) <= 2 * s;
          REQUIRE(close == !set_intersection(del[i], del[j]).empty());
          if (n <= 6) REQUIRE(close == !set_intersection(ins[i], ins[j]).empty());
        }
    }
  }
}

TEST_CASE("insertion never shrinks runs or deletion sets") {
  for (auto [q, n_max, s_max] : {std::tuple{2, 8, 3}, {3, 5, 2}})
    for (int n = 1; n <= n_max; ++n)
      for (const auto& x : all_strings(q, n)) {
        for (const auto& y : insertion_set(x, 1)) CHECK(x.runs() <= y.runs());
        for (int s = 1; s <= s_max && s <= n; ++s) {
          const auto dx = deletion_set_size(x, s);
          for (const auto& y : insertion_set(x, s)) REQUIRE(dx <= deletion_set_size(y, s));
        }
      }
}

TEST_CASE("rank round trip and set order") {
  for (const auto& x : all_strings(3, 4)) CHECK(QaryString::from_rank(x.rank(), 4, 3) == x);
  const auto all = all_strings(2, 5);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].rank() == i);
  CHECK(all.index_of(word("00111", 2)) == 7);
  CHECK(word("1", 2) < word("00", 2));
}

TEST_CASE("binomials against Pascal's triangle") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(2, 3) == 0);
  const auto t = oracle::pascal(40);
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == BigInt(std::to_string(t[n][k])));
}

TEST_CASE("composition counts against enumeration") {
  CHECK(composition_count(4, 2, 1) == 3);
  CHECK(composition_count(5, 2, 2) == 2);
  for (int n = 1; n <= 15; ++n)
    for (int k = 1; k <= n; ++k)
      for (int d = 1; d <= 4; ++d) REQUIRE(composition_count(n, k, d) == oracle::compositions(n, k, d));
}

TEST_CASE("delta cases") {
  CHECK(delta(3, 1) == 3);
  CHECK(delta(4, 4) == 1);
  CHECK(delta(2, -1) == 0);
  CHECK(delta(2, 3) == 0);
  for (int r = 0; r <= 10; ++r) CHECK(delta(r, 0) == 1);
}

TEST_CASE("iota") {
  CHECK(iota(2, 1, 3) == 4);
  CHECK(iota(3, 1, 4) == 9);
}

TEST_CASE("deletion-set size bounds hold on all binary strings") {
  CHECK(dset_size_lower(4, 2, 6) == 5);
  CHECK(dset_size_lower(3, 1, 20) == 3);
  CHECK_THROWS_AS(dset_size_lower(2, 1, 5), std::domain_error);
  CHECK(dset_size_upper(5, 1) == 5);
  CHECK(dset_size_upper(3, 2) == 6);
  for (int n = 1; n <= 10; ++n)
    for (const auto& x : all_strings(2, n))
      for (int s = 1; s <= 3 && s < n; ++s) {
        const auto size = deletion_set_size(x, s);
        REQUIRE(size <= dset_size_upper(x.runs(), s));
        if (x.runs() > 2) {
          const auto lower = dset_size_lower(x.runs(), s, n);
          REQUIRE(lower >= 1);
          REQUIRE(lower <= size);
        }
      }
}

TEST_CASE("run-count census") {
  CHECK(count_strings_with_runs(2, 4, 1) == 2);
  CHECK(count_strings_with_runs(3, 3, 3) == 12);
  for (int q = 2; q <= 4; ++q)
    for (int m = 1; m <= (q == 4 ? 7 : 10); ++m) {
      std::vector<long> census(static_cast<std::size_t>(m + 1), 0);
      for (const auto& w : oracle::all_words(q, m)) ++census[static_cast<std::size_t>(oracle::runs(w))];
      BigInt total = 0;
      for (int r = 1; r <= m; ++r) {
        REQUIRE(count_strings_with_runs(q, m, r) == census[static_cast<std::size_t>(r)]);
        total += count_strings_with_runs(q, m, r);
      }
      CHECK(total == power(q, m));
    }
}
