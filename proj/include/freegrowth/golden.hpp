// Published reference values shipped as CSV files under data/.

#ifndef FREEGROWTH_GOLDEN_HPP_
#define FREEGROWTH_GOLDEN_HPP_

#include <cstddef>     // for size_t
#include <filesystem>  // for path
#include <map>         // for map
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "freegrowth/arith.hpp"
#include "freegrowth/polynomial.hpp"

namespace freegrowth {

  struct CsvTable {
    std::vector<std::string>              header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(std::string const& name) const;
  };

  // Lines starting with '#' and blank lines are skipped; the first remaining
  // line is the header. Throws on a missing file or a ragged row.
  CsvTable read_csv(std::filesystem::path const& path);

  // $FREEGROWTH_DATA_DIR if set, otherwise the data/ directory of the source
  // tree this library was built from.
  std::filesystem::path default_data_dir();

  struct GoldenData {
    // (r, n) -> value
    std::map<std::pair<std::size_t, std::size_t>, BigInt> subsemigroups;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> ideals;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> congruences;
    // (n, k) -> |T_{n,k}|
    std::map<std::pair<std::size_t, std::size_t>, BigInt> tables;

    std::map<std::size_t, GrowthPolynomial> subsemigroup_polynomials;
    std::map<std::size_t, GrowthPolynomial> ideal_polynomials;
    std::map<std::size_t, ExponentialForm>  congruence_forms;

    struct CentralRow {
      std::size_t n;
      BigInt      ideals;
      BigInt      central_binomial;
      BigInt      difference;
    };
    std::vector<CentralRow> central_binomial;
  };

  GoldenData load_golden(std::filesystem::path const& dir = default_data_dir());

}  // namespace freegrowth

#endif  // FREEGROWTH_GOLDEN_HPP_
