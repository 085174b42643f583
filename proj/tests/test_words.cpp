#include <random>  // for mt19937

#include "catch_amalgamated.hpp"

#include "freegrowth/errors.hpp"
#include "freegrowth/words.hpp"

namespace freegrowth {

  namespace {
    Word w(std::string_view text, std::size_t rank = 2) {
      return Word::parse(text, rank);
    }

    // Every word of length 1..max_len over the rank, in shortlex order.
    std::vector<Word> all_words(std::size_t rank, std::size_t max_len) {
      std::vector<Word> out;
      std::uint64_t     total = 0, layer = 1;
      for (std::size_t len = 1; len <= max_len; ++len) {
        layer *= rank;
        total += layer;
      }
      for (std::uint64_t k = 1; k <= total; ++k) {
        out.push_back(word_from_rank(k, rank));
      }
      return out;
    }
  }  // namespace

  TEST_CASE("word construction", "[words][quick]") {
    REQUIRE(w("aba").length() == 3);
    REQUIRE(w("aba")[1] == 2);
    REQUIRE(w("cab", 3).to_string() == "cab");
    REQUIRE_THROWS_AS(w("c"), Error);
    REQUIRE_THROWS_AS(w(""), Error);
    REQUIRE_THROWS_AS(Word(2, {0}), Error);
  }

  TEST_CASE("shortlex comparison", "[words][quick]") {
    REQUIRE(shortlex_cmp(w("b"), w("aa")) < 0);
    REQUIRE(shortlex_cmp(w("ab"), w("ba")) < 0);
    REQUIRE(shortlex_cmp(w("aba"), w("aba")) == 0);
    REQUIRE_THROWS_AS(shortlex_cmp(w("a", 2), w("a", 3)), Error);
  }

  TEST_CASE("shortlex is a total order on random triples", "[words][quick]") {
    std::mt19937                               rng(17);
    std::uniform_int_distribution<std::size_t> len(1, 5), letter(1, 3);
    auto random_word = [&] {
      std::vector<letter_type> letters(len(rng));
      for (auto& x : letters) {
        x = static_cast<letter_type>(letter(rng));
      }
      return Word(3, letters);
    };
    for (int i = 0; i < 1000; ++i) {
      Word const u = random_word(), v = random_word(), x = random_word();
      auto const uv = shortlex_cmp(u, v);
      REQUIRE((uv < 0) + (uv == 0) + (uv > 0) == 1);
      REQUIRE((uv == 0) == (u == v));
      REQUIRE(shortlex_cmp(v, u) == (0 <=> uv));
      if (uv <= 0 && shortlex_cmp(v, x) <= 0) {
        REQUIRE(shortlex_cmp(u, x) <= 0);
      }
    }
  }

  TEST_CASE("shortlex rank", "[words][quick]") {
    REQUIRE(shortlex_rank(w("a")) == 1);
    REQUIRE(shortlex_rank(w("ba")) == 5);
    REQUIRE(shortlex_rank(w("aaa")) == 7);
    REQUIRE(word_from_rank(1, 2) == w("a"));
    REQUIRE(word_from_rank(6, 2) == w("bb"));
    REQUIRE(word_from_rank(4, 3) == w("aa", 3));
    REQUIRE(shortlex_rank(w("aaaa", 1)) == 4);
  }

  TEST_CASE("rank round trip is exhaustive and monotone", "[words][quick]") {
    for (std::size_t r = 1; r <= 4; ++r) {
      auto const words = all_words(r, 6);
      for (std::size_t i = 0; i < words.size(); ++i) {
        REQUIRE(shortlex_rank(words[i]) == i + 1);
        if (i > 0) {
          REQUIRE(shortlex_cmp(words[i - 1], words[i]) < 0);
        }
      }
    }
  }

  TEST_CASE("prefix, suffix and support", "[words][quick]") {
    REQUIRE(prefix(w("aba"), 1) == w("a"));
    REQUIRE(suffix(w("aba"), 2) == w("ba"));
    REQUIRE(prefix(w("aab"), 2) == w("aa"));
    REQUIRE(prefix(w("aab"), 3) == w("aab"));
    REQUIRE_THROWS_AS(prefix(w("aab"), 0), Error);
    REQUIRE_THROWS_AS(suffix(w("aab"), 4), Error);
    REQUIRE(support(w("aba")) == std::vector<letter_type>{1, 2});
    REQUIRE(support(w("aaa")) == std::vector<letter_type>{1});
    REQUIRE(support(w("cab", 3)) == std::vector<letter_type>{1, 2, 3});
    REQUIRE(reversed(w("aab")) == w("baa"));
  }

  TEST_CASE("permutations", "[words][quick]") {
    Permutation const swap({2, 1});
    REQUIRE(apply_permutation(swap, w("aab")) == w("bba"));
    REQUIRE(apply_permutation(Permutation::identity(2), w("aab")) == w("aab"));
    REQUIRE(apply_permutation(Permutation({2, 3, 1}), w("abc", 3)) == w("bca", 3));
    REQUIRE_THROWS_AS(Permutation({1, 1}), Error);
    REQUIRE_THROWS_AS(apply_permutation(swap, w("ab", 3)), Error);

    Permutation const cycle({2, 3, 1});
    for (Word const& u : all_words(3, 5)) {
      Word const image = apply_permutation(cycle, u);
      REQUIRE(image.length() == u.length());
      for (std::size_t i = 1; i <= u.length(); ++i) {
        REQUIRE(apply_permutation(cycle, prefix(u, i)) == prefix(image, i));
        REQUIRE(apply_permutation(cycle, suffix(u, i)) == suffix(image, i));
      }
    }
  }

  TEST_CASE("a times the longest proper prefix never exceeds the word",
            "[words][quick]") {
    for (std::size_t r = 1; r <= 3; ++r) {
      for (Word const& u : all_words(r, 6)) {
        if (u.length() < 2) {
          continue;
        }
        std::vector<letter_type> letters{1};
        auto const               pre = prefix(u, u.length() - 1).letters();
        letters.insert(letters.end(), pre.begin(), pre.end());
        REQUIRE(shortlex_cmp(Word(r, letters), u) <= 0);
      }
    }
  }

  TEST_CASE("packed words agree with words", "[words][quick]") {
    for (std::size_t r = 1; r <= 3; ++r) {
      WordCodec const& codec = WordCodec::get(r);
      auto const       words = all_words(r, 5);
      for (std::size_t i = 0; i < words.size(); ++i) {
        Word const&      u = words[i];
        PackedWord const p = codec.pack(u);
        REQUIRE(codec.unpack(p) == u);
        REQUIRE(codec.rank_of(p) == i + 1);
        REQUIRE(codec.to_string(p) == u.to_string());
        if (i > 0) {
          REQUIRE(codec.pack(words[i - 1]) < p);
        }
        for (std::size_t j = 0; j < u.length(); ++j) {
          REQUIRE(codec.letter(p, j) == u[j]);
        }
        for (std::size_t j = 1; j < u.length(); ++j) {
          REQUIRE(codec.unpack(codec.prefix(p, j)) == prefix(u, j));
          REQUIRE(codec.unpack(codec.suffix(p, j)) == suffix(u, j));
          REQUIRE(codec.concat(codec.prefix(p, j), codec.suffix(p, u.length() - j))
                  == p);
        }
      }
    }
    REQUIRE(WordCodec::get(2).max_length() == 58);
    std::vector<letter_type> const too_long(59, 1);
    REQUIRE_THROWS_AS(WordCodec::get(2).pack(Word(2, too_long)), ResourceLimit);
  }

}  // namespace freegrowth
