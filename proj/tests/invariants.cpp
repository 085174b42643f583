#include "invariants.hpp"

#include <algorithm>  // for sort, max
#include <span>       // for span

#include "freegrowth/engine.hpp"
#include "freegrowth/tree.hpp"

namespace freegrowth::testing {

  namespace {
    std::size_t longest_gap(GapSet const& g) {
      std::size_t len = 0;
      for (Word const& w : g.words()) {
        len = std::max(len, w.length());
      }
      return len;
    }

    bool every_split_hits_a_gap(GapSet const& g, Word const& w) {
      for (std::size_t i = 1; i < w.length(); ++i) {
        if (!g.contains(prefix(w, i)) && !g.contains(suffix(w, w.length() - i))) {
          return false;
        }
      }
      return true;
    }

    // The closure of gens under concatenation agrees with the complement of
    // g on words of length <= 2L + 1, L the longest gap, and no generator is
    // a product of two closure elements. Longer words split into two
    // non-gaps of length > L, so checking these lengths is enough.
    bool regenerates(GapSet const&            g,
                     std::vector<Word> const& gens,
                     std::string&             why) {
      WordCodec const&  codec   = g.codec();
      std::size_t const max_len = 2 * longest_gap(g) + 1;
      // offset[len] + code indexes the words of length len.
      std::vector<std::uint64_t> offset(max_len + 2, 0);
      for (std::size_t len = 1; len <= max_len; ++len) {
        offset[len + 1] = offset[len] + codec.pow(len);
      }
      auto index = [&](PackedWord w) {
        return offset[WordCodec::length(w)] + WordCodec::code(w);
      };
      std::vector<char> in_closure(offset[max_len + 1], 0);
      std::vector<char> is_gen(offset[max_len + 1], 0);
      for (Word const& h : gens) {
        if (h.length() <= max_len) {
          is_gen[index(codec.pack(h))] = 1;
        }
      }
      for (std::size_t len = 1; len <= max_len; ++len) {
        for (PackedWord c = 0; c < codec.pow(len); ++c) {
          PackedWord const w       = WordCodec::make(len, c);
          bool             product = false;
          for (std::size_t i = 1; i < len && !product; ++i) {
            product = in_closure[index(codec.prefix(w, i))]
                      && in_closure[index(codec.suffix(w, len - i))];
          }
          std::uint64_t const k = index(w);
          if (is_gen[k] && product) {
            why = "generator " + codec.to_string(w) + " is redundant";
            return false;
          }
          in_closure[k] = is_gen[k] || product;
          if (static_cast<bool>(in_closure[k])
              == packed::contains(g.keys(), w)) {
            why = "closure disagrees with the complement at "
                  + codec.to_string(w);
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  std::vector<Word> brute_force_minimal_generators(GapSet const& g) {
    std::size_t const        rank    = g.rank();
    std::size_t const        longest = longest_gap(g);
    std::vector<Word>        out;
    std::vector<letter_type> letters;
    // first_non_gap: length of the shortest prefix outside g, or 0.
    auto rec = [&](auto&& self, std::size_t first_non_gap) -> void {
      for (std::size_t x = 1; x <= rank; ++x) {
        letters.push_back(static_cast<letter_type>(x));
        Word const        w   = Word(rank, letters);
        std::size_t const fng = first_non_gap != 0 ? first_non_gap
                                : g.contains(w)    ? 0
                                                   : w.length();
        if (!g.contains(w) && every_split_hits_a_gap(g, w)) {
          out.push_back(w);
        }
        // Past first_non_gap + longest, the split after the first non-gap
        // prefix has a non-gap suffix as well.
        if (fng == 0 || w.length() < fng + longest) {
          self(self, fng);
        }
        letters.pop_back();
      }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](Word const& u, Word const& v) {
      return shortlex_cmp(u, v) < 0;
    });
    return out;
  }

  StructuralReport check_structure(std::size_t rank, std::size_t n_max) {
    StructuralReport report;
    auto fail = [&](GapSet const& g, std::string const& what) {
      if (report.violations.size() < 20) {
        report.violations.push_back(g.to_string() + ": " + what);
      }
    };
    visit_tree(
        TreeKind::subsemigroup, rank, n_max,
        [&](std::span<PackedWord const> keys) {
          ++report.nodes;
          GapSet const g = GapSet::from_keys_unchecked(
              rank, std::vector<PackedWord>(keys.begin(), keys.end()));
          std::size_t const n = g.index();
          if (!validate_gap_set(g.words(), rank)) {
            fail(g, "complement is not closed");
          }
          if (frobenius(g).length() > 2 * n - 1) {
            fail(g, "Frobenius longer than 2n - 1");
          }
          auto const mg = minimal_generators(g);
          if (mg != brute_force_minimal_generators(g)) {
            fail(g, "minimal generators differ from brute force");
          }
          std::string why;
          if (!regenerates(g, mg, why)) {
            fail(g, why);
          }
          if (support(g).size() > n) {
            fail(g, "support larger than the index");
          }
          bool const ordinary = is_ordinary(g);
          if (!ordinary) {
            GapSet const swapped
                = remove_generator(add_frobenius(g), multiplicity(g));
            if (mg.size() > minimal_generators(swapped).size()) {
              fail(g, "more minimal generators than " + swapped.to_string());
            }
          }
          BigInt const p    = ordinary_descendant_count(n, rank);
          BigInt const kids = descendants(g).size();
          if (kids > p || (ordinary && kids != p)) {
            fail(g, "descendant count " + kids.str() + " against p = " + p.str());
          }
        });
    return report;
  }

}  // namespace freegrowth::testing
