// Brute-force counters used to validate the fast paths on small instances.
// They depend only on the words module.

#ifndef FREEGROWTH_ORACLES_HPP_
#define FREEGROWTH_ORACLES_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <map>      // for map

namespace freegrowth {

  // Index-n subsemigroups of FS_r; r <= 3 and n <= 4.
  std::uint64_t brute_force_subsemigroups(std::size_t rank, std::size_t n);

  // Prefix-closed n-element sets of words; r <= 3 and n <= 6.
  std::uint64_t brute_force_right_ideals(std::size_t rank, std::size_t n);

  // Prefix- and suffix-closed n-element sets of words; r <= 3 and n <= 6.
  std::uint64_t brute_force_two_sided_ideals(std::size_t rank, std::size_t n);

  // k -> |T_{n,k}| by scanning all n^(n^2) tables; n <= 3.
  std::map<std::size_t, std::uint64_t> brute_force_tables(std::size_t n);

}  // namespace freegrowth

#endif  // FREEGROWTH_ORACLES_HPP_
