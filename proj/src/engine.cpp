#include "freegrowth/engine.hpp"

#include <atomic>     // for atomic
#include <cassert>    // for assert
#include <exception>  // for exception_ptr
#include <filesystem> // for exists
#include <mutex>      // for mutex
#include <thread>     // for thread

#include "freegrowth/checkpoint.hpp"
#include "freegrowth/errors.hpp"
#include "freegrowth/ideals.hpp"
#include "freegrowth/subsemigroups.hpp"

namespace freegrowth {

  std::string_view to_string(TreeKind kind) {
    switch (kind) {
      case TreeKind::subsemigroup:
        return "subsemigroup";
      case TreeKind::ideal:
        return "ideal";
    }
    return "?";
  }

  TreeKind tree_kind_from_string(std::string_view text) {
    if (text == "subsemigroup") {
      return TreeKind::subsemigroup;
    } else if (text == "ideal") {
      return TreeKind::ideal;
    }
    throw Error("unknown tree kind \"" + std::string(text) + "\"");
  }

  void tree_children(TreeKind                    kind,
                     WordCodec const&            codec,
                     std::span<PackedWord const> gaps,
                     std::vector<PackedWord>&    out) {
    if (kind == TreeKind::subsemigroup) {
      packed::descendant_generators(codec, gaps, out);
    } else {
      packed::ideal_descendant_generators(codec, gaps, out);
    }
  }

  namespace {
    using Frontier = std::vector<std::vector<PackedWord>>;

    constexpr std::size_t default_checkpoint_depth = 5;
    constexpr std::size_t nodes_per_clock_check    = 1 << 14;

    Frontier expand(TreeKind kind, WordCodec const& codec, Frontier const& level,
                    std::uint64_t& count) {
      Frontier                next;
      std::vector<PackedWord> kids;
      for (auto const& gaps : level) {
        kids.clear();
        tree_children(kind, codec, gaps, kids);
        for (PackedWord h : kids) {
          auto child = gaps;
          child.push_back(h);
          next.push_back(std::move(child));
        }
      }
      count = next.size();
      return next;
    }

    class Worker {
     public:
      Worker(TreeKind                 kind,
             WordCodec const&         codec,
             std::size_t              n_max,
             std::optional<Deadline>  deadline,
             std::atomic<bool>&       abort)
          : _kind(kind),
            _codec(codec),
            _n_max(n_max),
            _deadline(deadline),
            _abort(abort),
            _counts(n_max, 0),
            _scratch(n_max),
            _since_check(0) {}

      // Counts every proper descendant of the node, down to depth n_max.
      void run(std::vector<PackedWord> const& root) {
        _gaps = root;
        dfs(root.size());
      }

      std::vector<std::uint64_t> const& counts() const noexcept {
        return _counts;
      }

     private:
      void dfs(std::size_t depth) {
        if (depth >= _n_max || _abort.load(std::memory_order_relaxed)) {
          return;
        }
        if (++_since_check == nodes_per_clock_check) {
          _since_check = 0;
          if (_deadline && std::chrono::steady_clock::now() > *_deadline) {
            _abort = true;
            return;
          }
        }
        auto& kids = _scratch[depth];
        kids.clear();
        tree_children(_kind, _codec, _gaps, kids);
        _counts[depth] += kids.size();
        if (depth + 1 == _n_max) {
          return;
        }
        for (PackedWord h : kids) {
          // Gap length bound for an index (depth + 1) subsemigroup.
          assert(WordCodec::length(h) <= 2 * (depth + 1) - 1);
          _gaps.push_back(h);
          dfs(depth + 1);
          _gaps.pop_back();
        }
      }

      TreeKind                             _kind;
      WordCodec const&                     _codec;
      std::size_t                          _n_max;
      std::optional<Deadline>              _deadline;
      std::atomic<bool>&                   _abort;
      std::vector<std::uint64_t>           _counts;
      std::vector<std::vector<PackedWord>> _scratch;
      std::vector<PackedWord>              _gaps;
      std::size_t                          _since_check;
    };

    void check_deadline(std::optional<Deadline> const& deadline) {
      if (deadline && std::chrono::steady_clock::now() > *deadline) {
        throw BudgetExhausted();
      }
    }
  }  // namespace

  std::vector<std::uint64_t> count_tree_levels(TreeKind                  kind,
                                               std::size_t               rank,
                                               std::size_t               n_max,
                                               EnumerationOptions const& opts) {
    WordCodec const& codec = WordCodec::get(rank);
    if (n_max == 0) {
      throw Error("the maximum index must be at least 1");
    }
    std::size_t const threads = std::max<std::size_t>(opts.threads, 1);

    Frontier                   frontier{{}};
    std::size_t                depth = 0;
    std::vector<std::uint64_t> counts;

    if (!opts.checkpoint_path.empty()) {
      if (std::filesystem::exists(opts.checkpoint_path)) {
        Checkpoint ckpt = read_checkpoint(opts.checkpoint_path);
        if (ckpt.kind != kind || ckpt.rank != rank) {
          throw Error("checkpoint " + opts.checkpoint_path + " is for kind="
                      + std::string(to_string(ckpt.kind))
                      + " r=" + std::to_string(ckpt.rank));
        }
        frontier = std::move(ckpt.frontier);
        depth    = ckpt.depth;
        counts   = std::move(ckpt.counts);
      }
      std::size_t const target = std::min(
          n_max,
          opts.checkpoint_depth == 0 ? default_checkpoint_depth
                                     : opts.checkpoint_depth);
      while (depth < target) {
        check_deadline(opts.deadline);
        std::uint64_t c;
        frontier = expand(kind, codec, frontier, c);
        counts.push_back(c);
        ++depth;
        write_checkpoint(opts.checkpoint_path,
                         Checkpoint{kind, rank, depth, frontier, counts});
      }
    }

    if (depth >= n_max) {
      counts.resize(n_max);
      return counts;
    }

    // Split the remaining work into enough independent subtrees.
    while (depth + 1 < n_max && frontier.size() < 64 * threads
           && !frontier.empty()) {
      std::uint64_t c;
      frontier = expand(kind, codec, frontier, c);
      counts.push_back(c);
      ++depth;
    }
    counts.resize(n_max, 0);

    std::atomic<std::size_t> next{0};
    std::atomic<bool>        abort{false};
    std::exception_ptr       error;
    std::mutex               mtx;
    std::vector<std::vector<std::uint64_t>> partial;

    auto work = [&] {
      Worker worker(kind, codec, n_max, opts.deadline, abort);
      try {
        for (std::size_t i = next++; i < frontier.size() && !abort;
             i           = next++) {
          worker.run(frontier[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mtx);
        if (!error) {
          error = std::current_exception();
        }
        abort = true;
      }
      std::lock_guard<std::mutex> lock(mtx);
      partial.push_back(worker.counts());
    };

    if (threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }
    if (abort) {
      throw BudgetExhausted();
    }
    for (auto const& p : partial) {
      for (std::size_t d = 0; d < n_max; ++d) {
        counts[d] += p[d];
      }
    }
    return counts;
  }

  void visit_tree(TreeKind    kind,
                  std::size_t rank,
                  std::size_t n_max,
                  std::function<void(std::span<PackedWord const>)> const& visit) {
    WordCodec const&                     codec = WordCodec::get(rank);
    std::vector<PackedWord>              gaps;
    std::vector<std::vector<PackedWord>> scratch(n_max);
    auto dfs = [&](auto&& self, std::size_t depth) -> void {
      if (depth == n_max) {
        return;
      }
      auto& kids = scratch[depth];
      kids.clear();
      tree_children(kind, codec, gaps, kids);
      for (PackedWord h : kids) {
        gaps.push_back(h);
        visit(gaps);
        self(self, depth + 1);
        gaps.pop_back();
      }
    };
    dfs(dfs, 0);
  }

}  // namespace freegrowth
