#include "freegrowth/tree.hpp"

#include "freegrowth/errors.hpp"

namespace freegrowth {

  std::vector<BigInt> count_subsemigroups(std::size_t               rank,
                                          std::size_t               n_max,
                                          EnumerationOptions const& opts) {
    auto const          raw = count_tree_levels(TreeKind::subsemigroup, rank,
                                       n_max, opts);
    std::vector<BigInt> out(raw.begin(), raw.end());
    return out;
  }

  BigInt ordinary_descendant_count(std::size_t n, std::size_t rank) {
    BigInt const r(rank), m(n);
    return (r - 1) * m * m + (2 * r - 1) * m + r;
  }

  std::size_t lower_bound_J(std::size_t n, std::size_t rank) {
    std::size_t j = 0;
    while (j + 1 <= n
           && ordinary_descendant_count(n - (j + 1), rank) - 1 >= j + 1) {
      ++j;
    }
    return j;
  }

  BigInt lower_bound_L(std::size_t n, std::size_t rank) {
    if (n == 0) {
      throw Error("the lower bound L(n, r) needs n >= 1");
    }
    BigInt            total = 0;
    std::size_t const J     = lower_bound_J(n, rank);
    for (std::size_t i = 0; i <= J; ++i) {
      total += binomial(ordinary_descendant_count(n - i, rank) - 1, i);
    }
    return total;
  }

  BigInt upper_bound_U(std::size_t n, std::size_t rank) {
    if (rank < 2) {
      throw Error("the upper bound U(n, r) is only stated for r >= 2");
    }
    if (n == 0) {
      throw Error("the upper bound U(n, r) needs n >= 1");
    }
    BigInt const f = factorial(n);
    return power(BigInt(rank - 1), n) * (n + 1) * f * f;
  }

}  // namespace freegrowth
