// Congruences of FS_r with finitely many classes, via Cayley tables.
//
// An n-class congruence of FS_r corresponds to a pair (T, f): an associative
// table T on w_1, ..., w_n that is ascendingly generated by w_1, ..., w_k,
// and an assignment f of the r free generators onto w_1, ..., w_k. Hence
// a_n^C(FS_r) = sum_k S(r, k) |T_{n,k}|.

#ifndef FREEGROWTH_CONGRUENCES_HPP_
#define FREEGROWTH_CONGRUENCES_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <functional>   // for function
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "freegrowth/arith.hpp"
#include "freegrowth/polynomial.hpp"
#include "freegrowth/subsemigroups.hpp"
#include "freegrowth/words.hpp"

namespace freegrowth {

  // Carrier elements are 1-based: at(i, j) is the index of w_i w_j.
  class CayleyTable {
   public:
    // rows[i - 1][j - 1] = at(i, j); throws on ragged rows or entries
    // outside [1, n].
    explicit CayleyTable(std::vector<std::vector<std::size_t>> const& rows);

    // "123,231,312"
    static CayleyTable parse(std::string_view rows);

    std::size_t order() const noexcept {
      return _n;
    }

    std::size_t at(std::size_t i, std::size_t j) const {
      return _entries[(i - 1) * _n + (j - 1)] + 1;
    }

    // Same format as parse; entries above 9 are not representable.
    std::string to_string() const;

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

   private:
    CayleyTable() = default;
    friend class TableBuilder;

    std::size_t               _n = 0;
    std::vector<std::uint8_t> _entries;  // 0-based values, row-major
  };

  bool is_associative(CayleyTable const& t);

  // Least subset containing w_1, ..., w_k closed under the product, ascending.
  std::vector<std::size_t> generated_closure(CayleyTable const& t, std::size_t k);

  // dec[i - 1] is the shortlex-least word over {w_1 < ... < w_k} (letters
  // 1..k, as a rank-k Word) evaluating to w_i. Throws unless the first k
  // elements generate the table.
  std::vector<Word> minimal_decompositions(CayleyTable const& t, std::size_t k);

  bool is_ascendingly_generated(CayleyTable const& t, std::size_t k);

  struct TableSearchOptions {
    std::size_t threads = 1;
    // Required for n = 5; n >= 6 is always refused.
    bool allow_long = false;
  };

  // Calls visit on every associative n x n table, in a deterministic order.
  // With more than one thread, visit must be safe to call concurrently.
  void for_each_associative_table(
      std::size_t                                    n,
      std::function<void(CayleyTable const&)> const& visit,
      TableSearchOptions const&                      opts = {});

  // counts[k - 1] = |T_{n,k}| for k = 1..n.
  std::vector<BigInt> enumerate_T(std::size_t               n,
                                  TableSearchOptions const& opts = {});

  // Tables of T_{n,k} in the stream format "n=3;k=2;rows=123,231,312".
  std::vector<std::string> table_stream(std::size_t n, std::size_t k);

  // f(g_1) = w_1 and f(g_j) <= 1 + max_{i<j} f(g_i).
  class Assignment {
   public:
    // images[j - 1] = index of f(g_j); throws unless the rule holds.
    explicit Assignment(std::vector<std::size_t> images);

    std::size_t rank() const noexcept {
      return _images.size();
    }

    // Number of distinct images, which are exactly w_1, ..., w_k.
    std::size_t image_size() const noexcept;

    std::size_t operator()(std::size_t j) const {
      return _images.at(j - 1);
    }

    std::vector<std::size_t> const& images() const noexcept {
      return _images;
    }

   private:
    std::vector<std::size_t> _images;
  };

  std::vector<Assignment> enumerate_assignments(std::size_t rank, std::size_t k);

  // sum_{k=1}^{min(r, n)} S(r, k) t_counts[k - 1]
  BigInt count_congruences(std::size_t                n,
                           std::size_t                rank,
                           std::vector<BigInt> const& t_counts);

  // Uses enumerate_T(n).
  BigInt count_congruences(std::size_t n, std::size_t rank);

  // beta_j = sum_{k=j}^{n} (-1)^{k-j} C(k, j) |T_{n,k}| / k!
  ExponentialForm congruence_exponential_form(std::vector<BigInt> const& t_counts);
  ExponentialForm congruence_exponential_form(std::size_t n);

  // |G| + 1; throws unless g is a two-sided ideal.
  std::size_t rees_congruence_classes(GapSet const& g);

  // Words of length <= depth over f.rank() letters, grouped by the carrier
  // element they evaluate to; result[i - 1] is the class of w_i in shortlex
  // order. Throws unless t is ascendingly generated by the image of f.
  std::vector<std::vector<Word>> congruence_from_table(CayleyTable const& t,
                                                       Assignment const&  f,
                                                       std::size_t depth);

}  // namespace freegrowth

#endif  // FREEGROWTH_CONGRUENCES_HPP_
