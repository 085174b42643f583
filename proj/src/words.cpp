#include "freegrowth/words.hpp"

#include <algorithm>  // for sort, unique, reverse
#include <memory>     // for unique_ptr
#include <mutex>      // for once_flag, call_once

#include "freegrowth/errors.hpp"

namespace freegrowth {

  namespace {
    void check_rank(std::size_t rank) {
      if (rank == 0 || rank > max_rank) {
        throw Error("alphabet rank must lie in [1, " + std::to_string(max_rank)
                    + "], found " + std::to_string(rank));
      }
    }

    // Overflow-checked a * b + c in 64 bits.
    bool mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                 std::uint64_t& out) {
      std::uint64_t t;
      return !__builtin_mul_overflow(a, b, &t) && !__builtin_add_overflow(t, c, &out);
    }
  }  // namespace

  Alphabet::Alphabet(std::size_t rank) : _rank(rank) {
    check_rank(rank);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::size_t rank, std::vector<letter_type> letters)
      : _rank(rank), _letters(std::move(letters)) {
    check_rank(rank);
    if (_letters.empty()) {
      throw Error("words are non-empty");
    }
    for (letter_type x : _letters) {
      if (x < 1 || x > rank) {
        throw Error("letter " + std::to_string(x) + " outside alphabet of rank "
                    + std::to_string(rank));
      }
    }
  }

  Word Word::parse(std::string_view text, std::size_t rank) {
    std::vector<letter_type> letters;
    letters.reserve(text.size());
    for (char c : text) {
      if (c < 'a' || c > 'z') {
        throw Error("invalid letter '" + std::string(1, c) + "' in word \""
                    + std::string(text) + "\"");
      }
      letters.push_back(static_cast<letter_type>(c - 'a' + 1));
    }
    return Word(rank, std::move(letters));
  }

  std::string Word::to_string() const {
    std::string out;
    out.reserve(_letters.size());
    for (letter_type x : _letters) {
      out.push_back(static_cast<char>('a' + x - 1));
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << w.to_string();
  }

  std::strong_ordering shortlex_cmp(Word const& u, Word const& v) {
    if (u.rank() != v.rank()) {
      throw Error("cannot compare words over alphabets of rank "
                  + std::to_string(u.rank()) + " and "
                  + std::to_string(v.rank()));
    }
    if (auto c = u.length() <=> v.length(); c != 0) {
      return c;
    }
    return u.letters() <=> v.letters();
  }

  std::uint64_t shortlex_rank(Word const& w) {
    std::uint64_t const r      = w.rank();
    std::uint64_t       offset = 0;  // words strictly shorter than w
    std::uint64_t       block  = 1;  // r^j
    for (std::size_t j = 1; j < w.length(); ++j) {
      if (!mul_add(block, r, 0, block) || __builtin_add_overflow(offset, block, &offset)) {
        throw ResourceLimit("shortlex rank of " + w.to_string()
                            + " overflows 64 bits");
      }
    }
    std::uint64_t pos = 0;
    for (letter_type x : w.letters()) {
      if (!mul_add(pos, r, x - 1, pos)) {
        throw ResourceLimit("shortlex rank of " + w.to_string()
                            + " overflows 64 bits");
      }
    }
    std::uint64_t result;
    if (__builtin_add_overflow(offset, pos + 1, &result)) {
      throw ResourceLimit("shortlex rank of " + w.to_string()
                          + " overflows 64 bits");
    }
    return result;
  }

  Word word_from_rank(std::uint64_t k, std::size_t rank) {
    check_rank(rank);
    if (k == 0) {
      throw Error("shortlex ranks start at 1");
    }
    std::uint64_t remaining = k - 1;  // 0-based
    std::size_t   len       = 1;
    std::uint64_t block     = rank;  // number of words of length len
    while (remaining >= block) {
      remaining -= block;
      ++len;
      if (__builtin_mul_overflow(block, std::uint64_t(rank), &block)) {
        block = UINT64_MAX;
      }
    }
    std::vector<letter_type> letters(len);
    for (std::size_t i = len; i-- > 0;) {
      letters[i] = static_cast<letter_type>(remaining % rank + 1);
      remaining /= rank;
    }
    return Word(rank, std::move(letters));
  }

  Word prefix(Word const& w, std::size_t i) {
    if (i == 0 || i > w.length()) {
      throw Error("prefix length " + std::to_string(i) + " out of range for "
                  + w.to_string());
    }
    return Word(w.rank(), {w.letters().begin(), w.letters().begin() + i});
  }

  Word suffix(Word const& w, std::size_t i) {
    if (i == 0 || i > w.length()) {
      throw Error("suffix length " + std::to_string(i) + " out of range for "
                  + w.to_string());
    }
    return Word(w.rank(), {w.letters().end() - i, w.letters().end()});
  }

  std::vector<letter_type> support(Word const& w) {
    std::vector<letter_type> out(w.letters());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Word reversed(Word const& w) {
    std::vector<letter_type> letters(w.letters().rbegin(), w.letters().rend());
    return Word(w.rank(), std::move(letters));
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<letter_type> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size() + 1, false);
    for (letter_type x : _images) {
      if (x < 1 || x > _images.size() || seen[x]) {
        throw Error("not a permutation of {1, ..., "
                    + std::to_string(_images.size()) + "}");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t rank) {
    std::vector<letter_type> images(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      images[i] = static_cast<letter_type>(i + 1);
    }
    return Permutation(std::move(images));
  }

  Word apply_permutation(Permutation const& sigma, Word const& w) {
    if (sigma.degree() != w.rank()) {
      throw Error("permutation degree does not match alphabet rank");
    }
    std::vector<letter_type> letters;
    letters.reserve(w.length());
    for (letter_type x : w.letters()) {
      letters.push_back(sigma(x));
    }
    return Word(w.rank(), std::move(letters));
  }

  ////////////////////////////////////////////////////////////////////////
  // WordCodec
  ////////////////////////////////////////////////////////////////////////

  WordCodec::WordCodec(std::size_t rank) : _rank(rank), _max_length(0), _pow{} {
    _pow[0] = 1;
    bool overflowed = false;
    for (std::size_t e = 1; e <= length_limit; ++e) {
      PackedWord next;
      if (overflowed || __builtin_mul_overflow(_pow[e - 1], PackedWord(rank), &next)
          || next > code_mask + 1) {
        overflowed = true;
        _pow[e]    = 0;
      } else {
        _pow[e]     = next;
        _max_length = e;
      }
    }
  }

  WordCodec const& WordCodec::get(std::size_t rank) {
    check_rank(rank);
    static std::array<std::unique_ptr<WordCodec>, max_rank + 1> codecs;
    static std::once_flag                                       once;
    std::call_once(once, [] {
      for (std::size_t r = 1; r <= max_rank; ++r) {
        codecs[r].reset(new WordCodec(r));
      }
    });
    return *codecs[rank];
  }

  PackedWord WordCodec::pack(Word const& w) const {
    if (w.rank() != _rank) {
      throw Error("word rank does not match codec rank");
    }
    if (!fits(w.length())) {
      throw ResourceLimit("word of length " + std::to_string(w.length())
                          + " too long to pack over rank "
                          + std::to_string(_rank));
    }
    PackedWord c = 0;
    for (letter_type x : w.letters()) {
      c = c * _rank + (x - 1);
    }
    return make(w.length(), c);
  }

  Word WordCodec::unpack(PackedWord w) const {
    std::size_t const        len = length(w);
    std::vector<letter_type> letters(len);
    PackedWord               c = code(w);
    for (std::size_t i = len; i-- > 0;) {
      letters[i] = static_cast<letter_type>(c % _rank + 1);
      c /= _rank;
    }
    return Word(_rank, std::move(letters));
  }

  std::uint64_t WordCodec::rank_of(PackedWord w) const {
    return shortlex_rank(unpack(w));
  }

  std::string WordCodec::to_string(PackedWord w) const {
    std::size_t const len = length(w);
    std::string       out(len, 'a');
    PackedWord        c = code(w);
    for (std::size_t i = len; i-- > 0;) {
      out[i] = static_cast<char>('a' + c % _rank);
      c /= _rank;
    }
    return out;
  }

}  // namespace freegrowth

std::size_t std::hash<freegrowth::Word>::operator()(
    freegrowth::Word const& w) const noexcept {
  std::size_t h = w.rank();
  for (auto x : w.letters()) {
    h = h * 31 + x;
  }
  return h;
}
