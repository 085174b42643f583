// One-sided and two-sided ideals of FS_r of finite Rees index.
//
// A right ideal has a prefix-closed gap set, a left ideal a suffix-closed one
// and a two-sided ideal both. Right ideals of index n are rooted r-ary trees
// with n + 1 vertices, counted by the Fuss-Catalan numbers. Two-sided ideals
// are enumerated by the restriction of the subsemigroup tree in which a child
// adds a gap h > f whose maximal proper prefix and suffix are already gaps.

#ifndef FREEGROWTH_IDEALS_HPP_
#define FREEGROWTH_IDEALS_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "freegrowth/arith.hpp"
#include "freegrowth/engine.hpp"
#include "freegrowth/polynomial.hpp"
#include "freegrowth/subsemigroups.hpp"
#include "freegrowth/words.hpp"

namespace freegrowth {

  bool is_right_ideal(GapSet const& g);
  bool is_left_ideal(GapSet const& g);
  bool is_two_sided_ideal(GapSet const& g);

  // Children of g in the ideal subtree; throws unless g is a two-sided ideal.
  std::vector<GapSet> ideal_descendants(GapSet const& g);

  // C(r(n+1), n+1) / ((r-1)(n+1) + 1); equal to 1 when r = 1.
  BigInt fuss_catalan_right_ideals(std::size_t n, std::size_t rank);

  // Left ideals are counted via word reversal, so this is the same number.
  inline BigInt fuss_catalan_left_ideals(std::size_t n, std::size_t rank) {
    return fuss_catalan_right_ideals(n, rank);
  }

  // Coefficient of r^k is s(n, k) (n+1)^k / (n+1)!.
  GrowthPolynomial right_ideal_polynomial(std::size_t n);

  std::vector<BigInt> count_two_sided_ideals(std::size_t               rank,
                                             std::size_t               n_max,
                                             EnumerationOptions const& opts
                                             = {});

  // Number of ideal-subtree children of the ordinary gap set O_r(n).
  std::size_t ordinary_ideal_descendant_count(std::size_t n, std::size_t rank);

  // floor(((r-1) n + 2r - 1) / r)
  std::size_t ideal_h_floor(std::size_t n, std::size_t rank);

  // Largest i <= n with floor(h(n - i, r)) - 1 >= i.
  std::size_t ideal_lower_bound_K(std::size_t n, std::size_t rank);

  // sum_{i=0}^{K} C(floor(h(n - i, r)) - 1, i); throws when r = 1.
  BigInt ideal_lower_bound(std::size_t n, std::size_t rank);

  struct CentralBinomialRow {
    std::size_t n;
    BigInt      ideals;
    BigInt      central_binomial;  // binom(n + 1, floor((n + 1) / 2))
    BigInt      difference;  // central_binomial - ideals
  };

  std::vector<CentralBinomialRow>
  central_binomial_comparison(std::size_t               n_max,
                              EnumerationOptions const& opts = {});

  GrowthPolynomial ideal_polynomial_from_Z(std::size_t n,
                                           std::size_t threads = 1);

  namespace packed {
    // Tree children of a two-sided ideal gap set: letters above the Frobenius
    // and words x g > f with x a gap and the length |x| suffix a gap. Output
    // is appended in increasing order.
    void ideal_descendant_generators(WordCodec const&            codec,
                                     std::span<PackedWord const> gaps,
                                     std::vector<PackedWord>&    out);

    // Every h (not a gap) such that adding h keeps the gaps an ideal gap set,
    // using only the given letters as the last letter of h (letters) or as h
    // itself. No Frobenius bound. Sorted and deduplicated.
    void ideal_generators(WordCodec const&             codec,
                          std::span<PackedWord const>  gaps,
                          std::span<letter_type const> letters,
                          std::vector<PackedWord>&     out);
  }  // namespace packed

}  // namespace freegrowth

#endif  // FREEGROWTH_IDEALS_HPP_
