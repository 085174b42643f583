#include "freegrowth/ideals.hpp"

#include <algorithm>  // for sort, unique

#include "freegrowth/errors.hpp"
#include "freegrowth/patterns.hpp"

namespace freegrowth {

  namespace {
    bool prefix_closed(WordCodec const& codec, std::span<PackedWord const> gaps) {
      for (PackedWord w : gaps) {
        std::size_t const len = WordCodec::length(w);
        if (len > 1 && !packed::contains(gaps, codec.prefix(w, len - 1))) {
          return false;
        }
      }
      return true;
    }

    bool suffix_closed(WordCodec const& codec, std::span<PackedWord const> gaps) {
      for (PackedWord w : gaps) {
        std::size_t const len = WordCodec::length(w);
        if (len > 1 && !packed::contains(gaps, codec.suffix(w, len - 1))) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  namespace packed {

    void ideal_descendant_generators(WordCodec const&            codec,
                                     std::span<PackedWord const> gaps,
                                     std::vector<PackedWord>&    out) {
      std::size_t const rank = codec.rank();
      if (gaps.empty()) {
        for (std::size_t g = 1; g <= rank; ++g) {
          out.push_back(codec.letter_word(static_cast<letter_type>(g)));
        }
        return;
      }
      PackedWord const  f     = gaps.back();
      std::size_t const len_f = WordCodec::length(f);
      if (len_f == 1) {
        for (std::size_t g = codec.letter(f, 0) + 1; g <= rank; ++g) {
          out.push_back(codec.letter_word(static_cast<letter_type>(g)));
        }
      }
      // Gaps are sorted, and x g increases with (x, g); so does the output.
      for (PackedWord x : gaps) {
        std::size_t const lx = WordCodec::length(x);
        if (lx + 1 < len_f) {
          continue;
        }
        if (!codec.fits(lx + 1)) {
          throw ResourceLimit("ideal candidate of length " + std::to_string(lx + 1)
                              + " exceeds the packed word limit for rank "
                              + std::to_string(rank));
        }
        for (std::size_t g = 1; g <= rank; ++g) {
          PackedWord const h
              = codec.concat(x, codec.letter_word(static_cast<letter_type>(g)));
          if (h > f && contains(gaps, codec.suffix(h, lx))) {
            out.push_back(h);
          }
        }
      }
    }

    void ideal_generators(WordCodec const&             codec,
                          std::span<PackedWord const>  gaps,
                          std::span<letter_type const> letters,
                          std::vector<PackedWord>&     out) {
      std::size_t const start = out.size();
      for (letter_type g : letters) {
        PackedWord const h = codec.letter_word(g);
        if (!contains(gaps, h)) {
          out.push_back(h);
        }
      }
      for (PackedWord x : gaps) {
        std::size_t const lx = WordCodec::length(x);
        if (!codec.fits(lx + 1)) {
          throw ResourceLimit("ideal candidate of length " + std::to_string(lx + 1)
                              + " exceeds the packed word limit for rank "
                              + std::to_string(codec.rank()));
        }
        for (letter_type g : letters) {
          PackedWord const h = codec.concat(x, codec.letter_word(g));
          if (!contains(gaps, h) && contains(gaps, codec.suffix(h, lx))) {
            out.push_back(h);
          }
        }
      }
      std::sort(out.begin() + start, out.end());
      out.erase(std::unique(out.begin() + start, out.end()), out.end());
    }

  }  // namespace packed

  bool is_right_ideal(GapSet const& g) {
    return prefix_closed(g.codec(), g.keys());
  }

  bool is_left_ideal(GapSet const& g) {
    return suffix_closed(g.codec(), g.keys());
  }

  bool is_two_sided_ideal(GapSet const& g) {
    return is_right_ideal(g) && is_left_ideal(g);
  }

  std::vector<GapSet> ideal_descendants(GapSet const& g) {
    if (!is_two_sided_ideal(g)) {
      throw Error(g.to_string() + " is not the gap set of a two-sided ideal");
    }
    std::vector<PackedWord> hs;
    packed::ideal_descendant_generators(g.codec(), g.keys(), hs);
    std::vector<GapSet> out;
    out.reserve(hs.size());
    for (PackedWord h : hs) {
      std::vector<PackedWord> keys(g.keys());
      keys.push_back(h);
      out.push_back(GapSet::from_keys_unchecked(g.rank(), std::move(keys)));
    }
    return out;
  }

  BigInt fuss_catalan_right_ideals(std::size_t n, std::size_t rank) {
    if (n == 0 || rank == 0) {
      throw Error("Fuss-Catalan count needs n >= 1 and r >= 1");
    }
    if (rank == 1) {
      return 1;
    }
    BigInt const m = n + 1;
    return binomial(BigInt(rank) * m, n + 1) / ((BigInt(rank) - 1) * m + 1);
  }

  GrowthPolynomial right_ideal_polynomial(std::size_t n) {
    if (n == 0) {
      throw Error("right_ideal_polynomial needs n >= 1");
    }
    // (1/(n+1)!) * prod_{i=0}^{n-1} ((n+1) r - i)
    std::vector<Rational> coeffs(n);
    BigInt const          denom = factorial(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
      coeffs[k - 1] = Rational(stirling1(n, k) * power(BigInt(n + 1), k), denom);
    }
    return GrowthPolynomial(std::move(coeffs));
  }

  std::vector<BigInt> count_two_sided_ideals(std::size_t               rank,
                                             std::size_t               n_max,
                                             EnumerationOptions const& opts) {
    auto const          raw = count_tree_levels(TreeKind::ideal, rank, n_max, opts);
    std::vector<BigInt> out(raw.begin(), raw.end());
    return out;
  }

  std::size_t ordinary_ideal_descendant_count(std::size_t n, std::size_t rank) {
    GapSet const            o = ordinary_gap_set(n, rank);
    std::vector<PackedWord> hs;
    packed::ideal_descendant_generators(o.codec(), o.keys(), hs);
    return hs.size();
  }

  std::size_t ideal_h_floor(std::size_t n, std::size_t rank) {
    if (rank == 0) {
      throw Error("rank must be at least 1");
    }
    return ((rank - 1) * n + 2 * rank - 1) / rank;
  }

  std::size_t ideal_lower_bound_K(std::size_t n, std::size_t rank) {
    std::size_t k = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (ideal_h_floor(n - i, rank) < i + 1) {
        break;
      }
      k = i;
    }
    return k;
  }

  BigInt ideal_lower_bound(std::size_t n, std::size_t rank) {
    if (rank < 2) {
      throw Error("the ideal lower bound is only defined for r >= 2");
    }
    if (n == 0) {
      throw Error("the ideal lower bound needs n >= 1");
    }
    BigInt            total = 0;
    std::size_t const K     = ideal_lower_bound_K(n, rank);
    for (std::size_t i = 0; i <= K; ++i) {
      total += binomial(static_cast<std::int64_t>(ideal_h_floor(n - i, rank)) - 1,
                        i);
    }
    return total;
  }

  std::vector<CentralBinomialRow>
  central_binomial_comparison(std::size_t               n_max,
                              EnumerationOptions const& opts) {
    auto const                      counts = count_two_sided_ideals(2, n_max, opts);
    std::vector<CentralBinomialRow> rows;
    for (std::size_t n = 1; n <= n_max; ++n) {
      BigInt const c = binomial(static_cast<std::int64_t>(n + 1), (n + 1) / 2);
      rows.push_back({n, counts[n - 1], c, c - counts[n - 1]});
    }
    return rows;
  }

  GrowthPolynomial ideal_polynomial_from_Z(std::size_t n, std::size_t threads) {
    auto const levels = compute_Z_sets(TreeKind::ideal, n, threads);
    return polynomial_from_Z(levels.back());
  }

}  // namespace freegrowth
