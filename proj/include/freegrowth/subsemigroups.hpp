// Finite-index subsemigroups of FS_r, represented by their finite set of
// gaps (the complement). The gaps are kept as a shortlex-sorted vector of
// packed words, so membership is a binary search and the Frobenius is the
// last element.

#ifndef FREEGROWTH_SUBSEMIGROUPS_HPP_
#define FREEGROWTH_SUBSEMIGROUPS_HPP_

#include <cstddef>      // for size_t
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "freegrowth/words.hpp"

namespace freegrowth {

  class GapSet {
   public:
    // The empty gap set, i.e. FS_r itself.
    explicit GapSet(std::size_t rank);

    // Throws unless the complement of gaps is a subsemigroup.
    GapSet(std::size_t rank, std::vector<Word> const& gaps);

    // No closure check; keys are sorted and deduplicated. For hot paths that
    // already know the set is valid.
    static GapSet from_keys_unchecked(std::size_t rank,
                                      std::vector<PackedWord> keys);

    // "r=2; gaps=a,b,aa"
    static GapSet parse(std::string_view text);

    std::size_t rank() const noexcept {
      return _rank;
    }

    std::size_t index() const noexcept {
      return _keys.size();
    }

    bool empty() const noexcept {
      return _keys.empty();
    }

    std::vector<PackedWord> const& keys() const noexcept {
      return _keys;
    }

    WordCodec const& codec() const {
      return WordCodec::get(_rank);
    }

    std::vector<Word> words() const;

    bool contains(Word const& w) const;

    std::string to_string() const;

    friend bool operator==(GapSet const&, GapSet const&) = default;
    friend auto operator<=>(GapSet const&, GapSet const&) = default;

   private:
    std::size_t             _rank;
    std::vector<PackedWord> _keys;
  };

  // True iff FS_r minus gaps is closed under multiplication. Duplicates in
  // gaps are ignored.
  bool validate_gap_set(std::vector<Word> const& gaps, std::size_t rank);

  // Shortlex-largest gap; throws on the empty gap set.
  Word frobenius(GapSet const& g);

  // Shortlex-least non-gap.
  Word multiplicity(GapSet const& g);

  bool is_minimal_generator(Word const& w, GapSet const& g);

  // MG of the complement of g, shortlex-sorted.
  std::vector<Word> minimal_generators(GapSet const& g);

  // Removes the Frobenius from the gaps (adds it to the subsemigroup).
  GapSet add_frobenius(GapSet const& g);

  // Adds h to the gaps (removes it from the subsemigroup). Throws unless h is
  // a minimal generator.
  GapSet remove_generator(GapSet const& g, Word const& h);

  // Children in the subsemigroup tree: remove a minimal generator larger than
  // the Frobenius. Every minimal generator qualifies at the root.
  std::vector<GapSet> descendants(GapSet const& g);

  bool   is_ordinary(GapSet const& g);
  GapSet ordinary_gap_set(std::size_t n, std::size_t rank);

  // Letters occurring in some gap, ascending.
  std::vector<letter_type> support(GapSet const& g);

  namespace packed {
    // Packed-word kernels shared by the enumeration engine and Z-set code.
    // gaps must be shortlex sorted.

    inline bool contains(std::span<PackedWord const> gaps, PackedWord w) {
      // Gap sets are small; a branch-light lower bound is fastest here.
      std::size_t lo = 0, hi = gaps.size();
      while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (gaps[mid] < w) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      return lo < gaps.size() && gaps[lo] == w;
    }

    bool is_minimal_generator(WordCodec const&            codec,
                              std::span<PackedWord const> gaps,
                              PackedWord                  w);

    // Every x g y with x, y in gaps or empty, g in letters, that is a minimal
    // generator and strictly larger than lower_bound (pass 0 for no bound).
    // Appended to out, then out is sorted and deduplicated.
    void minimal_generators(WordCodec const&              codec,
                            std::span<PackedWord const>   gaps,
                            std::span<letter_type const> letters,
                            PackedWord                    lower_bound,
                            std::vector<PackedWord>&      out);

    // The candidates h of descendants(g), in increasing order.
    void descendant_generators(WordCodec const&            codec,
                               std::span<PackedWord const> gaps,
                               std::vector<PackedWord>&    out);
  }  // namespace packed

}  // namespace freegrowth

#endif  // FREEGROWTH_SUBSEMIGROUPS_HPP_
