// Level-by-level counting over the subsemigroup tree and its ideal subtree.
//
// The tree is rooted at FS_r (the empty gap set); a node's children append
// one word larger than every existing gap, so a node at depth d has exactly d
// gaps and the d-th level holds every index-d subsemigroup (resp. ideal)
// exactly once. Traversal is depth-first from a breadth-first frontier; the
// frontier nodes are handed to worker threads on demand and per-level
// counters are summed after the join, so the result does not depend on the
// number of threads or on scheduling.

#ifndef FREEGROWTH_ENGINE_HPP_
#define FREEGROWTH_ENGINE_HPP_

#include <chrono>       // for steady_clock
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <functional>   // for function
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "freegrowth/words.hpp"

namespace freegrowth {

  enum class TreeKind { subsemigroup, ideal };

  std::string_view to_string(TreeKind kind);
  TreeKind         tree_kind_from_string(std::string_view text);

  using Deadline = std::chrono::steady_clock::time_point;

  struct EnumerationOptions {
    std::size_t threads = 1;
    // When non-empty, the breadth-first frontier is saved here after each
    // level up to checkpoint_depth, and an existing file is resumed from.
    std::string checkpoint_path;
    // 0 picks a default.
    std::size_t checkpoint_depth = 0;
    // Workers abandon the run and BudgetExhausted is thrown once passed.
    std::optional<Deadline> deadline;
  };

  // Appends the children of a node (as the words h to add to the gaps) to
  // out in increasing order.
  void tree_children(TreeKind                    kind,
                     WordCodec const&            codec,
                     std::span<PackedWord const> gaps,
                     std::vector<PackedWord>&    out);

  // Element d - 1 is the number of nodes at depth d, for 1 <= d <= n_max.
  std::vector<std::uint64_t> count_tree_levels(TreeKind                  kind,
                                               std::size_t               rank,
                                               std::size_t               n_max,
                                               EnumerationOptions const& opts
                                               = {});

  // Single-threaded pre-order walk over every node of depth 1..n_max.
  void visit_tree(TreeKind    kind,
                  std::size_t rank,
                  std::size_t n_max,
                  std::function<void(std::span<PackedWord const>)> const& visit);

}  // namespace freegrowth

#endif  // FREEGROWTH_ENGINE_HPP_
