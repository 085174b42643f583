// Text checkpoints of a breadth-first frontier:
//
//   freegrowth-ckpt v1; kind=subsemigroup; r=2; depth=5
//   r=2; gaps=a,aa,aaa,aaaa,aaaaa
//   ...
//   counts=2,11,62,382,2562

#ifndef FREEGROWTH_CHECKPOINT_HPP_
#define FREEGROWTH_CHECKPOINT_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

#include "freegrowth/engine.hpp"
#include "freegrowth/words.hpp"

namespace freegrowth {

  struct Checkpoint {
    TreeKind                             kind  = TreeKind::subsemigroup;
    std::size_t                          rank  = 1;
    std::size_t                          depth = 0;
    std::vector<std::vector<PackedWord>> frontier;
    // Level counts for depths 1..depth.
    std::vector<std::uint64_t> counts;

    friend bool operator==(Checkpoint const&, Checkpoint const&) = default;
  };

  // Writes to a temporary file and renames it over path, so a crash leaves
  // either the old or the new checkpoint.
  void write_checkpoint(std::string const& path, Checkpoint const& ckpt);

  // Throws freegrowth::Error on a malformed or inconsistent file.
  Checkpoint read_checkpoint(std::string const& path);

}  // namespace freegrowth

#endif  // FREEGROWTH_CHECKPOINT_HPP_
