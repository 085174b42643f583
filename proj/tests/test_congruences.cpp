#include <atomic>  // for atomic
#include <set>     // for set

#include "catch_amalgamated.hpp"

#include "freegrowth/congruences.hpp"
#include "freegrowth/errors.hpp"
#include "freegrowth/ideals.hpp"

namespace freegrowth {

  namespace {
    CayleyTable table(std::string_view rows) {
      return CayleyTable::parse(rows);
    }

    std::vector<BigInt> big(std::initializer_list<long> values) {
      return std::vector<BigInt>(values.begin(), values.end());
    }

    // Unlabelled partition: the set of non-empty classes.
    std::set<std::vector<std::string>>
    partition(std::vector<std::vector<Word>> const& classes) {
      std::set<std::vector<std::string>> out;
      for (auto const& c : classes) {
        if (!c.empty()) {
          std::vector<std::string> texts;
          for (Word const& w : c) {
            texts.push_back(w.to_string());
          }
          out.insert(texts);
        }
      }
      return out;
    }
  }  // namespace

  TEST_CASE("Cayley table text form", "[congruences][quick]") {
    CayleyTable const t = table("231,312,123");
    REQUIRE(t.order() == 3);
    REQUIRE(t.at(1, 1) == 2);
    REQUIRE(t.at(3, 2) == 2);
    REQUIRE(t.to_string() == "231,312,123");
    REQUIRE(CayleyTable({{1, 2}, {2, 1}}) == table("12,21"));
    REQUIRE_THROWS_AS(table("12,2"), Error);
    REQUIRE_THROWS_AS(table("13,21"), Error);
  }

  TEST_CASE("associativity", "[congruences][quick]") {
    REQUIRE(is_associative(table("1")));
    REQUIRE(is_associative(table("12,21")));
    REQUIRE(!is_associative(table("21,11")));
    REQUIRE(is_associative(table("231,312,123")));
  }

  TEST_CASE("generated closure", "[congruences][quick]") {
    REQUIRE(generated_closure(table("12,21"), 2) == std::vector<std::size_t>{1, 2});
    REQUIRE(generated_closure(table("231,312,123"), 1)
            == std::vector<std::size_t>{1, 2, 3});
    REQUIRE(generated_closure(table("11,11"), 1) == std::vector<std::size_t>{1});
  }

  TEST_CASE("minimal decompositions", "[congruences][quick]") {
    auto const dec = minimal_decompositions(table("231,312,123"), 1);
    REQUIRE(dec[0] == Word::parse("a", 1));
    REQUIRE(dec[1] == Word::parse("aa", 1));
    REQUIRE(dec[2] == Word::parse("aaa", 1));
    auto const two = minimal_decompositions(table("12,21"), 2);
    REQUIRE(two[0] == Word::parse("a", 2));
    REQUIRE(two[1] == Word::parse("b", 2));
    REQUIRE_THROWS_AS(minimal_decompositions(table("11,11"), 1), Error);
  }

  TEST_CASE("ascending generation", "[congruences][quick]") {
    REQUIRE(is_ascendingly_generated(table("231,312,123"), 1));
    // The same group with w_2 and w_3 swapped.
    REQUIRE(!is_ascendingly_generated(table("312,123,231"), 1));
    REQUIRE(is_ascendingly_generated(table("312,123,231"), 3));
    REQUIRE(!is_ascendingly_generated(table("11,11"), 1));
  }

  TEST_CASE("table counts", "[congruences][quick]") {
    REQUIRE(enumerate_T(1) == big({1}));
    REQUIRE(enumerate_T(2) == big({2, 8}));
    REQUIRE(enumerate_T(3) == big({3, 37, 113}));
    auto const t4 = enumerate_T(4, {2});
    REQUIRE(t4 == big({4, 145, 1257, 3492}));
    REQUIRE(enumerate_T(4, {1}) == t4);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const t = enumerate_T(n);
      REQUIRE(t[0] == n);
      for (std::size_t k = 1; k < n; ++k) {
        REQUIRE(t[k - 1] <= t[k]);
      }
    }
    REQUIRE_THROWS_AS(enumerate_T(5), ResourceLimit);
    TableSearchOptions long_opts;
    long_opts.allow_long = true;
    REQUIRE_THROWS_AS(enumerate_T(6, long_opts), ResourceLimit);
  }

  TEST_CASE("associative table count", "[congruences][quick]") {
    std::vector<long> const expected{1, 8, 113, 3492};
    for (std::size_t n = 1; n <= 4; ++n) {
      std::atomic<long>  seen{0};
      TableSearchOptions opts;
      opts.threads = 2;
      for_each_associative_table(
          n,
          [&](CayleyTable const& t) {
            REQUIRE(is_associative(t));
            ++seen;
          },
          opts);
      REQUIRE(seen == expected[n - 1]);
    }
  }

  TEST_CASE("table stream", "[congruences][quick]") {
    auto const lines = table_stream(2, 1);
    REQUIRE(lines.size() == 2);
    for (auto const& line : lines) {
      REQUIRE(line.rfind("n=2;k=1;rows=", 0) == 0);
      REQUIRE(is_ascendingly_generated(table(line.substr(13)), 1));
    }
    REQUIRE(table_stream(3, 2).size() == 37);
  }

  TEST_CASE("assignments", "[congruences][quick]") {
    REQUIRE(Assignment({1, 2, 1}).image_size() == 2);
    REQUIRE_THROWS_AS(Assignment({2, 1}), Error);
    REQUIRE_THROWS_AS(Assignment({1, 3}), Error);
    for (std::size_t r = 1; r <= 7; ++r) {
      for (std::size_t k = 1; k <= r; ++k) {
        auto const all = enumerate_assignments(r, k);
        REQUIRE(all.size() == stirling2(r, k));
        std::set<std::vector<std::size_t>> distinct;
        for (auto const& f : all) {
          REQUIRE(f.rank() == r);
          REQUIRE(f.image_size() == k);
          distinct.insert(f.images());
        }
        REQUIRE(distinct.size() == all.size());
      }
    }
  }

  TEST_CASE("congruence counts", "[congruences][quick]") {
    REQUIRE(count_congruences(3, 2) == 40);
    REQUIRE(count_congruences(2, 3) == 26);
    REQUIRE(count_congruences(4, 2) == 149);
    REQUIRE(count_congruences(2, 1) == 2);
    REQUIRE(congruence_exponential_form(2).to_string() == "4*2^r - 6");
    REQUIRE(congruence_exponential_form(3).to_string()
            == "113/6*3^r - 38*2^r + 45/2");
    REQUIRE(congruence_exponential_form(2).evaluate(5) == 122);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const t    = enumerate_T(n);
      auto const form = congruence_exponential_form(t);
      for (std::size_t r = 1; r <= 10; ++r) {
        REQUIRE(form.evaluate(r) == count_congruences(n, r, t));
      }
    }
  }

  TEST_CASE("Rees congruences", "[congruences][quick]") {
    REQUIRE(rees_congruence_classes(GapSet::parse("r=2; gaps=a,b")) == 3);
    REQUIRE(rees_congruence_classes(GapSet(2)) == 1);
    REQUIRE_THROWS_AS(rees_congruence_classes(GapSet::parse("r=2; gaps=a,aba")),
                      Error);
    // Each index-n ideal gives an (n + 1)-class congruence.
    auto const ideals = count_two_sided_ideals(2, 3);
    for (std::size_t n = 1; n <= 3; ++n) {
      REQUIRE(ideals[n - 1] <= count_congruences(n + 1, 2));
    }
  }

  TEST_CASE("congruence from a table", "[congruences][quick]") {
    auto const classes
        = congruence_from_table(table("22,22"), Assignment({1, 1}), 3);
    REQUIRE(classes.size() == 2);
    REQUIRE(classes[0].size() == 2);
    REQUIRE(classes[0][0] == Word::parse("a", 2));
    REQUIRE(classes[1].size() == 12);
    REQUIRE(classes[1][0] == Word::parse("aa", 2));
    auto const single = congruence_from_table(table("1"), Assignment({1, 1}), 2);
    REQUIRE(single.size() == 1);
    REQUIRE(single[0].size() == 6);
    REQUIRE_THROWS_AS(congruence_from_table(table("11,11"), Assignment({1}), 2),
                      Error);
  }

  TEST_CASE("tables and assignments give distinct congruences",
            "[congruences][quick]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::set<std::set<std::vector<std::string>>> seen;
      std::size_t                                  pairs = 0;
      for (std::size_t k = 1; k <= std::min<std::size_t>(n, 2); ++k) {
        for (auto const& line : table_stream(n, k)) {
          CayleyTable const t = table(line.substr(line.find("rows=") + 5));
          for (auto const& f : enumerate_assignments(2, k)) {
            auto const classes = congruence_from_table(t, f, 2 * n);
            REQUIRE(partition(classes).size() == n);
            seen.insert(partition(classes));
            ++pairs;
          }
        }
      }
      REQUIRE(seen.size() == pairs);
      REQUIRE(pairs == count_congruences(n, 2));
    }
  }

}  // namespace freegrowth
