#include "freegrowth/oracles.hpp"

#include <set>     // for set
#include <vector>  // for vector

#include "freegrowth/errors.hpp"
#include "freegrowth/words.hpp"

namespace freegrowth {

  namespace {
    void guard(bool ok, std::string const& what) {
      if (!ok) {
        throw ResourceLimit(what);
      }
    }

    // All words of length 1..max_len in shortlex order.
    std::vector<Word> words_up_to(std::size_t rank, std::size_t max_len) {
      std::vector<Word>                     out;
      std::vector<std::vector<letter_type>> level;
      for (std::size_t g = 1; g <= rank; ++g) {
        level.push_back({static_cast<letter_type>(g)});
      }
      for (std::size_t len = 1; len <= max_len; ++len) {
        for (auto const& w : level) {
          out.emplace_back(rank, w);
        }
        std::vector<std::vector<letter_type>> next;
        for (auto const& w : level) {
          for (std::size_t g = 1; g <= rank; ++g) {
            next.push_back(w);
            next.back().push_back(static_cast<letter_type>(g));
          }
        }
        level = std::move(next);
      }
      return out;
    }

    struct ShortlexLess {
      bool operator()(Word const& u, Word const& v) const {
        return shortlex_cmp(u, v) < 0;
      }
    };

    using WordSet = std::set<Word, ShortlexLess>;

    enum class Verdict { accept, reject, stop };

    // Counts n-element subsets S of candidates (taken in shortlex order) such
    // that admissible(S, w) accepts each w as it joins S. admissible may only
    // consult words shorter than w, all of which are decided by then; stop
    // means no later candidate can be accepted either.
    template <typename Admissible>
    std::uint64_t count_sets(std::vector<Word> const& candidates,
                             std::size_t              n,
                             Admissible&&             admissible) {
      WordSet       chosen;
      std::uint64_t total = 0;
      auto rec = [&](auto&& self, std::size_t from) -> void {
        if (chosen.size() == n) {
          ++total;
          return;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
          Word const& w = candidates[i];
          Verdict const v = admissible(chosen, w);
          if (v == Verdict::stop) {
            break;
          } else if (v == Verdict::accept) {
            chosen.insert(w);
            self(self, i + 1);
            chosen.erase(w);
          }
        }
      };
      rec(rec, 0);
      return total;
    }

    // Value of a product w_{i_1} ... w_{i_m} in a row-major 0-based table.
    std::size_t evaluate(std::vector<std::size_t> const& table,
                         std::size_t                     n,
                         Word const&                     w) {
      std::size_t v = w[0] - 1u;
      for (std::size_t i = 1; i < w.length(); ++i) {
        v = table[v * n + (w[i] - 1u)];
      }
      return v;
    }
  }  // namespace

  std::uint64_t brute_force_subsemigroups(std::size_t rank, std::size_t n) {
    guard(rank >= 1 && rank <= 3 && n >= 1 && n <= 4,
          "brute_force_subsemigroups supports 1 <= r <= 3, 1 <= n <= 4");
    // A word may be a gap only if every factorisation u v has a gap factor;
    // gaps have length at most 2n - 1.
    auto const candidates = words_up_to(rank, 2 * n - 1);
    return count_sets(candidates, n, [](WordSet const& s, Word const& w) {
      std::size_t const longest = s.empty() ? 0 : s.rbegin()->length();
      if (w.length() > 2 * longest + 1) {
        return Verdict::stop;  // the middle factorisation has no gap factor
      }
      for (std::size_t i = 1; i < w.length(); ++i) {
        if (s.count(prefix(w, i)) == 0 && s.count(suffix(w, w.length() - i)) == 0) {
          return Verdict::reject;
        }
      }
      return Verdict::accept;
    });
  }

  std::uint64_t brute_force_right_ideals(std::size_t rank, std::size_t n) {
    guard(rank >= 1 && rank <= 3 && n >= 1 && n <= 6,
          "brute_force_right_ideals supports 1 <= r <= 3, 1 <= n <= 6");
    auto const candidates = words_up_to(rank, n);
    return count_sets(candidates, n, [](WordSet const& s, Word const& w) {
      std::size_t const longest = s.empty() ? 0 : s.rbegin()->length();
      if (w.length() > longest + 1) {
        return Verdict::stop;
      }
      return w.length() == 1 || s.count(prefix(w, w.length() - 1)) != 0
                 ? Verdict::accept
                 : Verdict::reject;
    });
  }

  std::uint64_t brute_force_two_sided_ideals(std::size_t rank, std::size_t n) {
    guard(rank >= 1 && rank <= 3 && n >= 1 && n <= 6,
          "brute_force_two_sided_ideals supports 1 <= r <= 3, 1 <= n <= 6");
    auto const candidates = words_up_to(rank, n);
    return count_sets(candidates, n, [](WordSet const& s, Word const& w) {
      std::size_t const longest = s.empty() ? 0 : s.rbegin()->length();
      if (w.length() > longest + 1) {
        return Verdict::stop;
      }
      return w.length() == 1
                     || (s.count(prefix(w, w.length() - 1)) != 0
                         && s.count(suffix(w, w.length() - 1)) != 0)
                 ? Verdict::accept
                 : Verdict::reject;
    });
  }

  std::map<std::size_t, std::uint64_t> brute_force_tables(std::size_t n) {
    guard(n >= 1 && n <= 3,
          "brute_force_tables scans n^(n^2) tables and supports n <= 3; use "
          "enumerate_T for larger orders");
    std::map<std::size_t, std::uint64_t> counts;
    for (std::size_t k = 1; k <= n; ++k) {
      counts[k] = 0;
    }
    std::size_t const cells = n * n;
    std::size_t       total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= n;
    }
    std::vector<std::size_t> table(cells);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < cells; ++i) {
        table[i] = c % n;
        c /= n;
      }
      bool assoc = true;
      for (std::size_t x = 0; x < n && assoc; ++x) {
        for (std::size_t y = 0; y < n && assoc; ++y) {
          for (std::size_t z = 0; z < n && assoc; ++z) {
            assoc = table[table[x * n + y] * n + z]
                    == table[x * n + table[y * n + z]];
          }
        }
      }
      if (!assoc) {
        continue;
      }
      for (std::size_t k = 1; k <= n; ++k) {
        // First arrival of each element over all words in shortlex order;
        // decompositions never need more than n letters.
        std::vector<bool> seen(n, false);
        std::vector<Word> dec(n, Word(k, {1}));
        for (Word const& w : words_up_to(k, n)) {
          std::size_t const v = evaluate(table, n, w);
          if (!seen[v]) {
            seen[v] = true;
            dec[v]  = w;
          }
        }
        bool ok = true;
        for (std::size_t v = 0; v < n; ++v) {
          ok = ok && seen[v];
        }
        for (std::size_t v = 0; ok && v < k; ++v) {
          ok = dec[v].length() == 1 && dec[v][0] == v + 1;
        }
        for (std::size_t v = k; ok && v + 1 < n; ++v) {
          ok = shortlex_cmp(dec[v], dec[v + 1]) < 0;
        }
        if (ok) {
          ++counts[k];
        }
      }
    }
    return counts;
  }

}  // namespace freegrowth
