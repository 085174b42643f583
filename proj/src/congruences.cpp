#include "freegrowth/congruences.hpp"

#include <algorithm>  // for max
#include <atomic>     // for atomic
#include <cmath>      // for pow
#include <exception>  // for exception_ptr
#include <mutex>      // for mutex
#include <thread>     // for thread

#include "freegrowth/errors.hpp"
#include "freegrowth/ideals.hpp"

namespace freegrowth {

  ////////////////////////////////////////////////////////////////////////
  // CayleyTable
  ////////////////////////////////////////////////////////////////////////

  class TableBuilder {
   public:
    static CayleyTable make(std::size_t n, std::vector<std::uint8_t> entries) {
      CayleyTable t;
      t._n       = n;
      t._entries = std::move(entries);
      return t;
    }
  };

  CayleyTable::CayleyTable(std::vector<std::vector<std::size_t>> const& rows)
      : _n(rows.size()), _entries() {
    if (_n == 0) {
      throw Error("a Cayley table needs at least one element");
    }
    if (_n > 255) {
      throw ResourceLimit("Cayley tables are limited to 255 elements");
    }
    for (auto const& row : rows) {
      if (row.size() != _n) {
        throw Error("Cayley table rows must all have length "
                    + std::to_string(_n));
      }
      for (std::size_t v : row) {
        if (v < 1 || v > _n) {
          throw Error("Cayley table entry " + std::to_string(v)
                      + " is outside [1, " + std::to_string(_n) + "]");
        }
        _entries.push_back(static_cast<std::uint8_t>(v - 1));
      }
    }
  }

  CayleyTable CayleyTable::parse(std::string_view text) {
    std::vector<std::vector<std::size_t>> rows(1);
    for (char c : text) {
      if (c == ',') {
        rows.emplace_back();
      } else if (c >= '1' && c <= '9') {
        rows.back().push_back(static_cast<std::size_t>(c - '0'));
      } else {
        throw Error("malformed Cayley table \"" + std::string(text) + "\"");
      }
    }
    return CayleyTable(rows);
  }

  std::string CayleyTable::to_string() const {
    if (_n > 9) {
      throw Error("tables with more than 9 elements have no compact text form");
    }
    std::string out;
    for (std::size_t i = 0; i < _n * _n; ++i) {
      if (i != 0 && i % _n == 0) {
        out += ',';
      }
      out += static_cast<char>('1' + _entries[i]);
    }
    return out;
  }

  bool is_associative(CayleyTable const& t) {
    std::size_t const n = t.order();
    for (std::size_t x = 1; x <= n; ++x) {
      for (std::size_t y = 1; y <= n; ++y) {
        for (std::size_t z = 1; z <= n; ++z) {
          if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> generated_closure(CayleyTable const& t,
                                             std::size_t        k) {
    std::size_t const n = t.order();
    if (k < 1 || k > n) {
      throw Error("generator count must lie in [1, " + std::to_string(n) + "]");
    }
    std::vector<bool>        in(n + 1, false);
    std::vector<std::size_t> members;
    for (std::size_t i = 1; i <= k; ++i) {
      in[i] = true;
      members.push_back(i);
    }
    // Right multiplication by generators suffices: every product of
    // generators is reached one letter at a time.
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      for (std::size_t g = 1; g <= k; ++g) {
        std::size_t const v = t.at(members[idx], g);
        if (!in[v]) {
          in[v] = true;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  namespace {
    // Breadth-first search by right multiplication with w_1, ..., w_k;
    // returns the elements in order of first arrival and the parent links.
    struct Discovery {
      std::vector<std::size_t> order;
      std::vector<std::size_t> parent;  // 0 for generators
      std::vector<std::size_t> letter;
    };

    Discovery discover(CayleyTable const& t, std::size_t k) {
      std::size_t const n = t.order();
      if (k < 1 || k > n) {
        throw Error("generator count must lie in [1, " + std::to_string(n)
                    + "]");
      }
      Discovery d;
      d.parent.assign(n + 1, 0);
      d.letter.assign(n + 1, 0);
      std::vector<bool> seen(n + 1, false);
      for (std::size_t g = 1; g <= k; ++g) {
        seen[g]     = true;
        d.letter[g] = g;
        d.order.push_back(g);
      }
      for (std::size_t idx = 0; idx < d.order.size(); ++idx) {
        std::size_t const u = d.order[idx];
        for (std::size_t g = 1; g <= k; ++g) {
          std::size_t const v = t.at(u, g);
          if (!seen[v]) {
            seen[v]     = true;
            d.parent[v] = u;
            d.letter[v] = g;
            d.order.push_back(v);
          }
        }
      }
      return d;
    }

    // The same test as is_ascendingly_generated on raw 0-based entries.
    bool ascending_raw(std::uint8_t const* e, std::size_t n, std::size_t k) {
      std::uint8_t queue[16];
      std::size_t  len  = k;
      std::uint32_t seen = 0;
      for (std::size_t g = 0; g < k; ++g) {
        queue[g] = static_cast<std::uint8_t>(g);
        seen |= 1u << g;
      }
      for (std::size_t idx = 0; idx < len; ++idx) {
        std::size_t const u = queue[idx];
        for (std::size_t g = 0; g < k; ++g) {
          std::uint8_t const v = e[u * n + g];
          if (!(seen >> v & 1u)) {
            if (v != len) {
              return false;
            }
            seen |= 1u << v;
            queue[len++] = v;
          }
        }
      }
      return len == n;
    }
  }  // namespace

  std::vector<Word> minimal_decompositions(CayleyTable const& t, std::size_t k) {
    std::size_t const n = t.order();
    Discovery const   d = discover(t, k);
    if (d.order.size() != n) {
      throw Error("the first " + std::to_string(k)
                  + " elements do not generate the table");
    }
    std::vector<std::vector<letter_type>> letters(n + 1);
    for (std::size_t v : d.order) {
      if (d.parent[v] != 0) {
        letters[v] = letters[d.parent[v]];
      }
      letters[v].push_back(static_cast<letter_type>(d.letter[v]));
    }
    std::vector<Word> out;
    for (std::size_t i = 1; i <= n; ++i) {
      out.emplace_back(k, letters[i]);
    }
    return out;
  }

  bool is_ascendingly_generated(CayleyTable const& t, std::size_t k) {
    std::size_t const n = t.order();
    Discovery const   d = discover(t, k);
    if (d.order.size() != n) {
      return false;
    }
    // Elements are discovered in shortlex order of their decompositions.
    for (std::size_t i = k; i < n; ++i) {
      if (d.order[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Backtracking search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::int8_t unset = -1;

    class TableSearch {
     public:
      explicit TableSearch(std::size_t n) : _n(n), _cells(n * n, unset) {}

      std::size_t size() const noexcept {
        return _cells.size();
      }

      // Sets cell c to v if that keeps every fully determined triple
      // associative.
      bool place(std::size_t c, std::int8_t v) {
        _cells[c] = v;
        if (consistent(c / _n, c % _n, v)) {
          return true;
        }
        _cells[c] = unset;
        return false;
      }

      void clear(std::size_t c) {
        _cells[c] = unset;
      }

      template <typename F>
      void fill(std::size_t c, F&& complete) {
        if (c == _cells.size()) {
          complete(_cells);
          return;
        }
        for (std::int8_t v = 0; v < static_cast<std::int8_t>(_n); ++v) {
          if (place(c, v)) {
            fill(c + 1, complete);
            clear(c);
          }
        }
      }

     private:
      std::int8_t get(std::int8_t x, std::int8_t y) const {
        return _cells[x * _n + y];
      }

      bool consistent(std::size_t a8, std::size_t b8, std::int8_t v) const {
        std::int8_t const a = static_cast<std::int8_t>(a8);
        std::int8_t const b = static_cast<std::int8_t>(b8);
        std::int8_t const n = static_cast<std::int8_t>(_n);
        auto clash = [](std::int8_t l, std::int8_t r) {
          return l != unset && r != unset && l != r;
        };
        for (std::int8_t i = 0; i < n; ++i) {
          // (a b) i = a (b i)
          std::int8_t q = get(b, i);
          if (clash(get(v, i), q == unset ? unset : get(a, q))) {
            return false;
          }
          // (i a) b = i (a b)
          std::int8_t p = get(i, a);
          if (clash(p == unset ? unset : get(p, b), get(i, v))) {
            return false;
          }
          for (std::int8_t j = 0; j < n; ++j) {
            // (i j) b = i (j b) where i j = a
            if (get(i, j) == a) {
              q = get(j, b);
              if (clash(v, q == unset ? unset : get(i, q))) {
                return false;
              }
            }
            // (a i) j = a (i j) where i j = b
            if (get(i, j) == b) {
              p = get(a, i);
              if (clash(p == unset ? unset : get(p, j), v)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      std::size_t              _n;
      std::vector<std::int8_t> _cells;
    };

    void check_table_order(std::size_t n, bool allow_long) {
      if (n == 0) {
        throw Error("table order must be at least 1");
      }
      if (n >= 6) {
        throw ResourceLimit("enumerating associative tables of order "
                            + std::to_string(n) + " is out of scope (n <= 5)");
      }
      if (n == 5 && !allow_long) {
        throw ResourceLimit("order 5 tables need the long-running flag");
      }
    }

    std::vector<std::uint8_t> to_entries(std::vector<std::int8_t> const& cells) {
      return std::vector<std::uint8_t>(cells.begin(), cells.end());
    }
  }  // namespace

  void for_each_associative_table(
      std::size_t                                    n,
      std::function<void(CayleyTable const&)> const& visit,
      TableSearchOptions const&                      opts) {
    check_table_order(n, opts.allow_long);
    std::size_t const threads = std::max<std::size_t>(opts.threads, 1);
    auto emit = [&](std::vector<std::int8_t> const& cells) {
      visit(TableBuilder::make(n, to_entries(cells)));
    };
    if (threads == 1) {
      TableSearch(n).fill(0, emit);
      return;
    }
    // Split on the first row.
    std::size_t const split = n;
    std::vector<std::vector<std::int8_t>> prefixes;
    {
      TableSearch s(n);
      std::vector<std::int8_t> row(split, 0);
      auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == split) {
          prefixes.push_back(row);
          return;
        }
        for (std::int8_t v = 0; v < static_cast<std::int8_t>(n); ++v) {
          if (s.place(c, v)) {
            row[c] = v;
            self(self, c + 1);
            s.clear(c);
          }
        }
      };
      rec(rec, 0);
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               mtx;
    auto work = [&] {
      try {
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
          TableSearch s(n);
          for (std::size_t c = 0; c < split; ++c) {
            s.place(c, prefixes[i][c]);
          }
          s.fill(split, emit);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mtx);
        if (!error) {
          error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

  std::vector<BigInt> enumerate_T(std::size_t n, TableSearchOptions const& opts) {
    check_table_order(n, opts.allow_long);
    std::mutex                 mtx;
    std::vector<std::uint64_t> totals(n, 0);
    std::size_t const          threads = std::max<std::size_t>(opts.threads, 1);
    for_each_associative_table(
        n,
        [&](CayleyTable const& t) {
          std::vector<std::uint64_t> hit(n, 0);
          std::vector<std::uint8_t>  e(n * n);
          for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
              e[(i - 1) * n + (j - 1)] = static_cast<std::uint8_t>(t.at(i, j) - 1);
            }
          }
          for (std::size_t k = 1; k <= n; ++k) {
            hit[k - 1] = ascending_raw(e.data(), n, k) ? 1 : 0;
          }
          if (threads == 1) {
            for (std::size_t k = 0; k < n; ++k) {
              totals[k] += hit[k];
            }
          } else {
            std::lock_guard<std::mutex> lock(mtx);
            for (std::size_t k = 0; k < n; ++k) {
              totals[k] += hit[k];
            }
          }
        },
        opts);
    return std::vector<BigInt>(totals.begin(), totals.end());
  }

  std::vector<std::string> table_stream(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) {
      throw Error("generator count must lie in [1, n]");
    }
    std::vector<std::string> out;
    for_each_associative_table(
        n,
        [&](CayleyTable const& t) {
          if (is_ascendingly_generated(t, k)) {
            out.push_back("n=" + std::to_string(n) + ";k=" + std::to_string(k)
                          + ";rows=" + t.to_string());
          }
        },
        TableSearchOptions{1, true});
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Assignments and counts
  ////////////////////////////////////////////////////////////////////////

  Assignment::Assignment(std::vector<std::size_t> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw Error("an assignment needs at least one generator");
    }
    std::size_t max_so_far = 0;
    for (std::size_t j = 0; j < _images.size(); ++j) {
      std::size_t const v = _images[j];
      if (v < 1 || v > max_so_far + 1) {
        throw Error("assignment image " + std::to_string(v) + " of g_"
                    + std::to_string(j + 1) + " breaks the first-appearance rule");
      }
      max_so_far = std::max(max_so_far, v);
    }
  }

  std::size_t Assignment::image_size() const noexcept {
    return *std::max_element(_images.begin(), _images.end());
  }

  std::vector<Assignment> enumerate_assignments(std::size_t rank, std::size_t k) {
    std::vector<Assignment> out;
    if (rank == 0 || k == 0 || k > rank) {
      return out;
    }
    std::vector<std::size_t> images(rank);
    auto rec = [&](auto&& self, std::size_t j, std::size_t max_so_far) -> void {
      if (max_so_far + (rank - j) < k) {
        return;
      }
      if (j == rank) {
        out.emplace_back(images);
        return;
      }
      for (std::size_t v = 1; v <= std::min(max_so_far + 1, k); ++v) {
        images[j] = v;
        self(self, j + 1, std::max(max_so_far, v));
      }
    };
    rec(rec, 0, 0);
    return out;
  }

  BigInt count_congruences(std::size_t                n,
                           std::size_t                rank,
                           std::vector<BigInt> const& t_counts) {
    if (t_counts.size() < std::min(n, rank)) {
      throw Error("need |T_{n,k}| for every k <= min(n, r)");
    }
    BigInt total = 0;
    for (std::size_t k = 1; k <= std::min(n, rank); ++k) {
      total += stirling2(rank, k) * t_counts[k - 1];
    }
    return total;
  }

  BigInt count_congruences(std::size_t n, std::size_t rank) {
    return count_congruences(n, rank, enumerate_T(n));
  }

  ExponentialForm congruence_exponential_form(std::vector<BigInt> const& t) {
    std::size_t const     n = t.size();
    std::vector<Rational> betas(n);
    for (std::size_t j = 1; j <= n; ++j) {
      Rational beta = 0;
      for (std::size_t k = j; k <= n; ++k) {
        Rational term(binomial(static_cast<std::int64_t>(k), j) * t[k - 1],
                      factorial(k));
        beta += (k - j) % 2 == 0 ? term : Rational(-term);
      }
      betas[j - 1] = beta;
    }
    return ExponentialForm(std::move(betas));
  }

  ExponentialForm congruence_exponential_form(std::size_t n) {
    return congruence_exponential_form(enumerate_T(n));
  }

  std::size_t rees_congruence_classes(GapSet const& g) {
    if (!is_two_sided_ideal(g)) {
      throw Error(g.to_string() + " is not the gap set of a two-sided ideal");
    }
    return g.index() + 1;
  }

  std::vector<std::vector<Word>> congruence_from_table(CayleyTable const& t,
                                                       Assignment const&  f,
                                                       std::size_t depth) {
    std::size_t const n = t.order();
    std::size_t const k = f.image_size();
    if (k > n || !is_associative(t) || !is_ascendingly_generated(t, k)) {
      throw Error("the table is not ascendingly generated by the image of "
                  "the assignment");
    }
    std::size_t const rank  = f.rank();
    double            words = 0;
    for (std::size_t len = 1; len <= depth; ++len) {
      words += std::pow(static_cast<double>(rank), static_cast<double>(len));
    }
    if (words > 1e7) {
      throw ResourceLimit("too many words up to length " + std::to_string(depth));
    }
    std::vector<std::vector<Word>> classes(n);
    // Words of one length in lexicographic order, with their values.
    std::vector<std::pair<std::vector<letter_type>, std::size_t>> level;
    for (std::size_t g = 1; g <= rank; ++g) {
      level.push_back({{static_cast<letter_type>(g)}, f(g)});
    }
    for (std::size_t len = 1; len <= depth; ++len) {
      for (auto const& [letters, value] : level) {
        classes[value - 1].emplace_back(rank, letters);
      }
      if (len == depth) {
        break;
      }
      std::vector<std::pair<std::vector<letter_type>, std::size_t>> next;
      next.reserve(level.size() * rank);
      for (auto const& [letters, value] : level) {
        for (std::size_t g = 1; g <= rank; ++g) {
          auto w = letters;
          w.push_back(static_cast<letter_type>(g));
          next.emplace_back(std::move(w), t.at(value, f(g)));
        }
      }
      level = std::move(next);
    }
    return classes;
  }

}  // namespace freegrowth
