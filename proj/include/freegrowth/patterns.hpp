// Gap patterns: gap sets up to relabelling of the generators.
//
// A gap set with support S (|S| = k) is canonicalised by trying every
// bijection S -> {g_1, ..., g_k}, re-sorting the relabelled gaps in shortlex
// order and keeping the image whose concatenation is lexicographically least.
// Because all images share the same multiset of word lengths, comparing the
// sorted packed keys element by element is the same comparison.
//
// Z(n, k, i) collects the canonical patterns of index n, support k and orbit
// size i. The index-n level is grown from level n - 1: children over X_k of
// the support-k patterns, plus children of the support-(k-1) patterns that
// use the fresh letter g_k. Summing |orbit| * binom(r, k) over a level
// counts index-n subsemigroups (or ideals) of FS_r for every r at once.

#ifndef FREEGROWTH_PATTERNS_HPP_
#define FREEGROWTH_PATTERNS_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <utility>  // for pair
#include <vector>   // for vector

#include "freegrowth/arith.hpp"
#include "freegrowth/engine.hpp"
#include "freegrowth/polynomial.hpp"
#include "freegrowth/subsemigroups.hpp"
#include "freegrowth/words.hpp"

namespace freegrowth {

  struct GapPattern {
    GapSet      canonical;  // over rank support_size
    std::size_t support_size;
    std::size_t orbit_size;

    friend bool operator==(GapPattern const&, GapPattern const&) = default;
  };

  struct Canonicalization {
    GapPattern pattern;
    // Degree = rank of the input; maps the support onto 1..k in the minimising
    // order and the remaining letters onto k+1..r in increasing order.
    Permutation sigma;
  };

  // Throws on the empty gap set.
  Canonicalization canonicalize(GapSet const& g);

  // Number of distinct images of g under permutations of its support.
  std::size_t orbit_size(GapSet const& g);

  class ZLevel {
   public:
    using key_type = std::vector<PackedWord>;
    // canonical keys (over rank k) -> orbit size
    using bucket_type = std::map<key_type, std::size_t>;

    ZLevel(TreeKind kind, std::size_t n);

    TreeKind kind() const noexcept {
      return _kind;
    }

    std::size_t index() const noexcept {
      return _n;
    }

    // Largest support with a pattern (never above the index).
    std::size_t max_support() const noexcept;

    bucket_type const& bucket(std::size_t k) const;

    // Z(n, k, i) as patterns, in canonical-key order.
    std::vector<GapPattern> patterns(std::size_t k, std::size_t i) const;

    // Distinct orbit sizes occurring for support k, ascending.
    std::vector<std::size_t> orbit_sizes(std::size_t k) const;

    // c(n, k) = sum_i |Z(n, k, i)| * i.
    BigInt c(std::size_t k) const;

    // sum_k c(n, k) * binom(r, k).
    BigInt count_at_rank(std::size_t rank) const;

    void insert(std::size_t k, key_type keys, std::size_t orbit);

   private:
    TreeKind                 _kind;
    std::size_t              _n;
    std::vector<bucket_type> _buckets;  // indexed by k = 0..n
  };

  // Levels 1..n_max (element i is index i + 1). Parents within a level are
  // processed by up to `threads` workers; the merge is ordered, so the result
  // is independent of the thread count.
  std::vector<ZLevel> compute_Z_sets(TreeKind    kind,
                                     std::size_t n_max,
                                     std::size_t threads = 1);

  // Next level from the previous one (level 0 = {empty pattern}).
  ZLevel next_Z_level(ZLevel const& previous, std::size_t threads = 1);

  BigInt pattern_coefficient_c(ZLevel const& level, std::size_t k);

  // sum_k c(n, k) / k! * r (r-1) ... (r-k+1)
  GrowthPolynomial polynomial_from_Z(ZLevel const& level);
  GrowthPolynomial polynomial_from_Z(std::size_t n, std::size_t threads = 1);

}  // namespace freegrowth

#endif  // FREEGROWTH_PATTERNS_HPP_
