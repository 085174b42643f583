// Counting index-n subsemigroups of FS_r over the subsemigroup tree, and the
// closed-form bounds on those counts.

#ifndef FREEGROWTH_TREE_HPP_
#define FREEGROWTH_TREE_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "freegrowth/arith.hpp"
#include "freegrowth/engine.hpp"

namespace freegrowth {

  // a_1(FS_r), ..., a_{n_max}(FS_r).
  std::vector<BigInt> count_subsemigroups(std::size_t               rank,
                                          std::size_t               n_max,
                                          EnumerationOptions const& opts = {});

  // p(n, r) = (r-1)n^2 + (2r-1)n + r, the number of children of the
  // ordinary subsemigroup of index n.
  BigInt ordinary_descendant_count(std::size_t n, std::size_t rank);

  // Largest i in [0, n] with p(n - i, r) - 1 >= i, found by scanning.
  std::size_t lower_bound_J(std::size_t n, std::size_t rank);

  // L(n, r) = sum_{i=0}^{J} binom(p(n - i, r) - 1, i) <= a_n(FS_r).
  BigInt lower_bound_L(std::size_t n, std::size_t rank);

  // U(n, r) = (r-1)^n (n+1) (n!)^2 >= a_n(FS_r); only for r >= 2.
  BigInt upper_bound_U(std::size_t n, std::size_t rank);

}  // namespace freegrowth

#endif  // FREEGROWTH_TREE_HPP_
