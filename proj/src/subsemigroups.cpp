#include "freegrowth/subsemigroups.hpp"

#include <algorithm>  // for sort, unique, binary_search
#include <cassert>    // for assert
#include <sstream>    // for ostringstream

#include "freegrowth/errors.hpp"

namespace freegrowth {

  namespace {
    std::vector<PackedWord> pack_all(std::vector<Word> const& words,
                                     std::size_t              rank) {
      WordCodec const&        codec = WordCodec::get(rank);
      std::vector<PackedWord> keys;
      keys.reserve(words.size());
      for (Word const& w : words) {
        if (w.rank() != rank) {
          throw Error("gap " + w.to_string() + " is over rank "
                      + std::to_string(w.rank()) + ", expected "
                      + std::to_string(rank));
        }
        keys.push_back(codec.pack(w));
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      return keys;
    }

    bool closed_complement(WordCodec const&            codec,
                           std::span<PackedWord const> gaps) {
      for (PackedWord w : gaps) {
        std::size_t const len = WordCodec::length(w);
        for (std::size_t i = 1; i < len; ++i) {
          if (!packed::contains(gaps, codec.prefix(w, i))
              && !packed::contains(gaps, codec.suffix(w, len - i))) {
            return false;
          }
        }
      }
      return true;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty()
             && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Packed kernels
  ////////////////////////////////////////////////////////////////////////

  namespace packed {

    bool is_minimal_generator(WordCodec const&            codec,
                              std::span<PackedWord const> gaps,
                              PackedWord                  w) {
      if (contains(gaps, w)) {
        return false;
      }
      std::size_t const len = WordCodec::length(w);
      for (std::size_t i = 1; i < len; ++i) {
        if (!contains(gaps, codec.prefix(w, i))
            && !contains(gaps, codec.suffix(w, len - i))) {
          return false;
        }
      }
      return true;
    }

    void minimal_generators(WordCodec const&             codec,
                            std::span<PackedWord const>  gaps,
                            std::span<letter_type const> letters,
                            PackedWord                   lower_bound,
                            std::vector<PackedWord>&     out) {
      std::size_t const min_len
          = lower_bound == 0 ? 0 : WordCodec::length(lower_bound);
      std::size_t const start = out.size();
      // Index gaps.size() stands for the empty word.
      for (std::size_t xi = 0; xi <= gaps.size(); ++xi) {
        bool const        x_empty = xi == gaps.size();
        std::size_t const lx      = x_empty ? 0 : WordCodec::length(gaps[xi]);
        for (std::size_t yi = 0; yi <= gaps.size(); ++yi) {
          bool const        y_empty = yi == gaps.size();
          std::size_t const ly = y_empty ? 0 : WordCodec::length(gaps[yi]);
          std::size_t const len = lx + 1 + ly;
          if (len < min_len) {
            continue;
          }
          if (!codec.fits(len)) {
            throw ResourceLimit("candidate generator of length "
                                + std::to_string(len)
                                + " exceeds the packed word limit for rank "
                                + std::to_string(codec.rank()));
          }
          for (letter_type g : letters) {
            PackedWord h = codec.letter_word(g);
            if (!x_empty) {
              h = codec.concat(gaps[xi], h);
            }
            if (!y_empty) {
              h = codec.concat(h, gaps[yi]);
            }
            if (h > lower_bound && is_minimal_generator(codec, gaps, h)) {
              out.push_back(h);
            }
          }
        }
      }
      std::sort(out.begin() + start, out.end());
      out.erase(std::unique(out.begin() + start, out.end()), out.end());
    }

    void descendant_generators(WordCodec const&            codec,
                               std::span<PackedWord const> gaps,
                               std::vector<PackedWord>&    out) {
      static thread_local std::vector<letter_type> all_letters;
      all_letters.clear();
      for (std::size_t x = 1; x <= codec.rank(); ++x) {
        all_letters.push_back(static_cast<letter_type>(x));
      }
      PackedWord const bound = gaps.empty() ? 0 : gaps.back();
      minimal_generators(codec, gaps, all_letters, bound, out);
    }

  }  // namespace packed

  ////////////////////////////////////////////////////////////////////////
  // GapSet
  ////////////////////////////////////////////////////////////////////////

  GapSet::GapSet(std::size_t rank) : _rank(rank), _keys() {
    static_cast<void>(Alphabet(rank));
  }

  GapSet::GapSet(std::size_t rank, std::vector<Word> const& gaps)
      : _rank(rank), _keys(pack_all(gaps, rank)) {
    if (!closed_complement(codec(), _keys)) {
      throw Error("the complement of " + to_string()
                  + " is not a subsemigroup");
    }
  }

  GapSet GapSet::from_keys_unchecked(std::size_t             rank,
                                     std::vector<PackedWord> keys) {
    GapSet result(rank);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    result._keys = std::move(keys);
    return result;
  }

  GapSet GapSet::parse(std::string_view text) {
    auto const semi = text.find(';');
    if (semi == std::string_view::npos) {
      throw Error("malformed gap set \"" + std::string(text) + "\"");
    }
    std::string_view head = trim(text.substr(0, semi));
    std::string_view tail = trim(text.substr(semi + 1));
    if (head.substr(0, 2) != "r=" || tail.substr(0, 5) != "gaps=") {
      throw Error("malformed gap set \"" + std::string(text) + "\"");
    }
    std::size_t rank;
    try {
      rank = std::stoul(std::string(head.substr(2)));
    } catch (std::exception const&) {
      throw Error("malformed rank in gap set \"" + std::string(text) + "\"");
    }
    std::vector<Word> gaps;
    tail.remove_prefix(5);
    while (!tail.empty()) {
      auto const       comma = tail.find(',');
      std::string_view item  = trim(tail.substr(0, comma));
      gaps.push_back(Word::parse(item, rank));
      if (comma == std::string_view::npos) {
        break;
      }
      tail.remove_prefix(comma + 1);
    }
    return GapSet(rank, gaps);
  }

  std::vector<Word> GapSet::words() const {
    std::vector<Word> out;
    out.reserve(_keys.size());
    for (PackedWord k : _keys) {
      out.push_back(codec().unpack(k));
    }
    return out;
  }

  bool GapSet::contains(Word const& w) const {
    if (w.rank() != _rank || !codec().fits(w.length())) {
      return false;
    }
    return packed::contains(_keys, codec().pack(w));
  }

  std::string GapSet::to_string() const {
    std::string out = "r=" + std::to_string(_rank) + "; gaps=";
    for (std::size_t i = 0; i < _keys.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += codec().to_string(_keys[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  bool validate_gap_set(std::vector<Word> const& gaps, std::size_t rank) {
    auto const keys = pack_all(gaps, rank);
    return closed_complement(WordCodec::get(rank), keys);
  }

  Word frobenius(GapSet const& g) {
    if (g.empty()) {
      throw Error("FS_r has no Frobenius (the gap set is empty)");
    }
    return g.codec().unpack(g.keys().back());
  }

  Word multiplicity(GapSet const& g) {
    // Gaps are a prefix of the shortlex order up to the first hole.
    std::uint64_t k = 1;
    for (PackedWord key : g.keys()) {
      if (g.codec().rank_of(key) != k) {
        break;
      }
      ++k;
    }
    return word_from_rank(k, g.rank());
  }

  bool is_minimal_generator(Word const& w, GapSet const& g) {
    if (w.rank() != g.rank()) {
      throw Error("word and gap set are over different alphabets");
    }
    return packed::is_minimal_generator(g.codec(), g.keys(),
                                        g.codec().pack(w));
  }

  std::vector<Word> minimal_generators(GapSet const& g) {
    std::vector<letter_type> letters;
    for (std::size_t x = 1; x <= g.rank(); ++x) {
      letters.push_back(static_cast<letter_type>(x));
    }
    std::vector<PackedWord> keys;
    packed::minimal_generators(g.codec(), g.keys(), letters, 0, keys);
    std::vector<Word> out;
    out.reserve(keys.size());
    for (PackedWord k : keys) {
      out.push_back(g.codec().unpack(k));
    }
    return out;
  }

  GapSet add_frobenius(GapSet const& g) {
    if (g.empty()) {
      throw Error("cannot add the Frobenius of FS_r: the gap set is empty");
    }
    std::vector<PackedWord> keys(g.keys().begin(), g.keys().end() - 1);
    return GapSet::from_keys_unchecked(g.rank(), std::move(keys));
  }

  GapSet remove_generator(GapSet const& g, Word const& h) {
    if (!is_minimal_generator(h, g)) {
      throw Error(h.to_string() + " is not a minimal generator of the "
                  + "complement of " + g.to_string());
    }
    std::vector<PackedWord> keys(g.keys());
    keys.push_back(g.codec().pack(h));
    return GapSet::from_keys_unchecked(g.rank(), std::move(keys));
  }

  std::vector<GapSet> descendants(GapSet const& g) {
    std::vector<PackedWord> hs;
    packed::descendant_generators(g.codec(), g.keys(), hs);
    std::vector<GapSet> out;
    out.reserve(hs.size());
    for (PackedWord h : hs) {
      std::vector<PackedWord> keys(g.keys());
      keys.push_back(h);
      out.push_back(GapSet::from_keys_unchecked(g.rank(), std::move(keys)));
    }
    return out;
  }

  bool is_ordinary(GapSet const& g) {
    if (g.empty()) {
      return true;
    }
    return shortlex_cmp(frobenius(g), multiplicity(g)) < 0;
  }

  GapSet ordinary_gap_set(std::size_t n, std::size_t rank) {
    std::vector<Word> gaps;
    gaps.reserve(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      gaps.push_back(word_from_rank(k, rank));
    }
    return GapSet(rank, gaps);
  }

  std::vector<letter_type> support(GapSet const& g) {
    std::vector<bool> seen(g.rank() + 1, false);
    for (PackedWord k : g.keys()) {
      for (std::size_t i = 0; i < WordCodec::length(k); ++i) {
        seen[g.codec().letter(k, i)] = true;
      }
    }
    std::vector<letter_type> out;
    for (std::size_t x = 1; x <= g.rank(); ++x) {
      if (seen[x]) {
        out.push_back(static_cast<letter_type>(x));
      }
    }
    return out;
  }

}  // namespace freegrowth
