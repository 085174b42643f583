// Words over a finite ordered alphabet g_1 < g_2 < ... < g_r, the shortlex
// order, and the packed 64-bit encoding used by every enumeration hot path.
//
// A Word is a value: its letters are stored 1-based (1 is g_1, rendered 'a').
// A PackedWord stores the same information as a single integer whose natural
// ordering *is* the shortlex order: the top 6 bits hold the length and the low
// 58 bits hold the base-r value of the letters (g_1 -> digit 0). Prefixes,
// suffixes and concatenation become integer division, remainder and
// multiply-add with powers of r, which WordCodec precomputes per rank.

#ifndef FREEGROWTH_WORDS_HPP_
#define FREEGROWTH_WORDS_HPP_

#include <array>        // for array
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t, uint8_t
#include <functional>   // for hash
#include <ostream>      // for ostream
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace freegrowth {

  using letter_type = std::uint8_t;
  using PackedWord  = std::uint64_t;

  // Largest rank with a textual form ('a' .. 'z').
  inline constexpr std::size_t max_rank = 26;

  class Alphabet {
   public:
    explicit Alphabet(std::size_t rank);

    std::size_t rank() const noexcept {
      return _rank;
    }

    friend bool operator==(Alphabet, Alphabet) = default;

   private:
    std::size_t _rank;
  };

  class Word {
   public:
    // Throws if letters is empty or some letter lies outside [1, rank].
    Word(std::size_t rank, std::vector<letter_type> letters);

    // Parses "aba" over the given rank.
    static Word parse(std::string_view text, std::size_t rank);

    std::size_t rank() const noexcept {
      return _rank;
    }

    std::size_t length() const noexcept {
      return _letters.size();
    }

    letter_type operator[](std::size_t i) const {
      return _letters[i];
    }

    std::vector<letter_type> const& letters() const noexcept {
      return _letters;
    }

    std::string to_string() const;

    friend bool operator==(Word const&, Word const&) = default;

   private:
    std::size_t              _rank;
    std::vector<letter_type> _letters;
  };

  std::ostream& operator<<(std::ostream& os, Word const& w);

  // Throws freegrowth::Error if u and v are over different alphabets.
  std::strong_ordering shortlex_cmp(Word const& u, Word const& v);

  // 1-based position of w in the shortlex enumeration a, b, ..., aa, ab, ...
  // Throws ResourceLimit if the rank does not fit in 64 bits.
  std::uint64_t shortlex_rank(Word const& w);
  Word          word_from_rank(std::uint64_t k, std::size_t rank);

  // 1 <= i <= |w|; i == |w| returns w.
  Word prefix(Word const& w, std::size_t i);
  Word suffix(Word const& w, std::size_t i);

  // Distinct letters of w, ascending.
  std::vector<letter_type> support(Word const& w);

  Word reversed(Word const& w);

  // A bijection of {1, ..., rank}; images()[i - 1] is the image of letter i.
  class Permutation {
   public:
    explicit Permutation(std::vector<letter_type> images);
    static Permutation identity(std::size_t rank);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    letter_type operator()(letter_type x) const {
      return _images[x - 1];
    }

    std::vector<letter_type> const& images() const noexcept {
      return _images;
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<letter_type> _images;
  };

  Word apply_permutation(Permutation const& sigma, Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Packed words
  ////////////////////////////////////////////////////////////////////////

  class WordCodec {
   public:
    static constexpr unsigned    length_shift = 58;
    static constexpr PackedWord  code_mask = (PackedWord(1) << length_shift) - 1;
    static constexpr std::size_t length_limit = 63;

    // Shared, immutable codec for a rank in [1, max_rank].
    static WordCodec const& get(std::size_t rank);

    std::size_t rank() const noexcept {
      return _rank;
    }

    // Longest word length representable for this rank.
    std::size_t max_length() const noexcept {
      return _max_length;
    }

    static std::size_t length(PackedWord w) noexcept {
      return static_cast<std::size_t>(w >> length_shift);
    }

    static PackedWord code(PackedWord w) noexcept {
      return w & code_mask;
    }

    static PackedWord make(std::size_t len, PackedWord code) noexcept {
      return (PackedWord(len) << length_shift) | code;
    }

    PackedWord pow(std::size_t e) const noexcept {
      return _pow[e];
    }

    PackedWord letter_word(letter_type x) const noexcept {
      return make(1, x - 1);
    }

    // i-th letter, 0-based from the left.
    letter_type letter(PackedWord w, std::size_t i) const noexcept {
      std::size_t const len = length(w);
      return static_cast<letter_type>((code(w) / _pow[len - 1 - i]) % _rank
                                      + 1);
    }

    PackedWord prefix(PackedWord w, std::size_t i) const noexcept {
      return make(i, code(w) / _pow[length(w) - i]);
    }

    PackedWord suffix(PackedWord w, std::size_t i) const noexcept {
      return make(i, code(w) % _pow[i]);
    }

    bool fits(std::size_t len) const noexcept {
      return len <= _max_length;
    }

    // Caller guarantees length(u) + length(v) <= max_length().
    PackedWord concat(PackedWord u, PackedWord v) const noexcept {
      std::size_t const lv = length(v);
      return make(length(u) + lv, code(u) * _pow[lv] + code(v));
    }

    // Throws ResourceLimit if the word is too long for this rank.
    PackedWord pack(Word const& w) const;
    Word       unpack(PackedWord w) const;

    // 1-based shortlex rank; throws ResourceLimit on overflow.
    std::uint64_t rank_of(PackedWord w) const;

    std::string to_string(PackedWord w) const;

   private:
    explicit WordCodec(std::size_t rank);

    std::size_t                             _rank;
    std::size_t                             _max_length;
    std::array<PackedWord, length_limit + 1> _pow;
  };

}  // namespace freegrowth

template <>
struct std::hash<freegrowth::Word> {
  std::size_t operator()(freegrowth::Word const& w) const noexcept;
};

#endif  // FREEGROWTH_WORDS_HPP_
