#include <filesystem>  // for temp_directory_path, remove
#include <fstream>     // for ofstream

#include "catch_amalgamated.hpp"

#include "freegrowth/checkpoint.hpp"
#include "freegrowth/engine.hpp"
#include "freegrowth/errors.hpp"
#include "freegrowth/tree.hpp"
#include "invariants.hpp"

namespace freegrowth {

  namespace {
    std::vector<BigInt> big(std::initializer_list<long> values) {
      return std::vector<BigInt>(values.begin(), values.end());
    }

    std::string temp_path(std::string const& name) {
      auto p = std::filesystem::temp_directory_path()
               / ("freegrowth-test-" + name + ".ckpt");
      std::filesystem::remove(p);
      return p.string();
    }
  }  // namespace

  TEST_CASE("subsemigroup counts", "[tree][quick]") {
    REQUIRE(count_subsemigroups(2, 4) == big({2, 11, 62, 382}));
    REQUIRE(count_subsemigroups(1, 9) == big({1, 2, 4, 7, 12, 23, 39, 67, 118}));
    REQUIRE(count_subsemigroups(3, 3) == big({3, 27, 250}));
    REQUIRE_THROWS_AS(count_subsemigroups(2, 0), Error);
    REQUIRE_THROWS_AS(count_subsemigroups(0, 3), Error);
  }

  TEST_CASE("ordinary descendant count", "[tree][quick]") {
    REQUIRE(ordinary_descendant_count(1, 2) == 6);
    REQUIRE(ordinary_descendant_count(2, 2) == 12);
    REQUIRE(ordinary_descendant_count(0, 2) == 2);
    for (std::size_t r = 1; r <= 3; ++r) {
      for (std::size_t n = 0; n <= 4; ++n) {
        REQUIRE(descendants(ordinary_gap_set(n, r)).size()
                == ordinary_descendant_count(n, r));
      }
    }
  }

  TEST_CASE("lower bound L", "[tree][quick]") {
    REQUIRE(lower_bound_L(4, 1) == 5);
    REQUIRE(lower_bound_L(1, 2) == 2);
    REQUIRE(lower_bound_L(2, 2) <= 11);
    for (std::size_t n = 1; n <= 20; ++n) {
      REQUIRE(lower_bound_L(n, 1) == fibonacci(n + 1));
    }
    // J is the largest i with p(n - i, r) - 1 >= i.
    for (std::size_t r = 1; r <= 4; ++r) {
      for (std::size_t n = 1; n <= 15; ++n) {
        std::size_t const j = lower_bound_J(n, r);
        REQUIRE(ordinary_descendant_count(n - j, r) - 1 >= j);
        for (std::size_t i = j + 1; i <= n; ++i) {
          REQUIRE(ordinary_descendant_count(n - i, r) - 1 < i);
        }
      }
    }
  }

  TEST_CASE("upper bound U", "[tree][quick]") {
    REQUIRE(upper_bound_U(2, 2) == 12);
    REQUIRE(upper_bound_U(3, 2) == 144);
    REQUIRE(upper_bound_U(2, 3) == 48);
    REQUIRE_THROWS_AS(upper_bound_U(3, 1), Error);
  }

  TEST_CASE("bounds sandwich the counts", "[tree][quick]") {
    for (std::size_t r = 2; r <= 3; ++r) {
      auto const counts = count_subsemigroups(r, r == 2 ? 7 : 5);
      for (std::size_t n = 1; n <= counts.size(); ++n) {
        REQUIRE(lower_bound_L(n, r) <= counts[n - 1]);
        REQUIRE(counts[n - 1] <= upper_bound_U(n, r));
      }
    }
  }

  TEST_CASE("counts do not depend on the thread count", "[tree][quick]") {
    auto const one = count_tree_levels(TreeKind::subsemigroup, 2, 7);
    for (std::size_t threads : {2, 3, 8}) {
      EnumerationOptions opts;
      opts.threads = threads;
      REQUIRE(count_tree_levels(TreeKind::subsemigroup, 2, 7, opts) == one);
    }
    REQUIRE(one.back() == 140968);
  }

  TEST_CASE("checkpoint write and read", "[tree][quick]") {
    std::string const path = temp_path("roundtrip");
    Checkpoint const  ckpt{TreeKind::ideal, 2, 2,
                          {GapSet::parse("r=2; gaps=a,aa").keys(),
                           GapSet::parse("r=2; gaps=a,b").keys(),
                           GapSet::parse("r=2; gaps=b,bb").keys()},
                          {2, 3}};
    write_checkpoint(path, ckpt);
    Checkpoint const back = read_checkpoint(path);
    REQUIRE(back == ckpt);
    // Frontier lines use the gap set text form.
    std::ifstream in(path);
    std::string   header, line;
    std::getline(in, header);
    std::getline(in, line);
    REQUIRE(header == "freegrowth-ckpt v1; kind=ideal; r=2; depth=2");
    REQUIRE(line == "r=2; gaps=a,aa");
    std::filesystem::remove(path);
  }

  TEST_CASE("malformed checkpoints are rejected", "[tree][quick]") {
    std::string const path = temp_path("malformed");
    auto              write = [&](std::string const& text) {
      std::ofstream(path) << text;
    };
    write("not a checkpoint\n");
    REQUIRE_THROWS_AS(read_checkpoint(path), Error);
    write("freegrowth-ckpt v1; kind=subsemigroup; r=2; depth=1\nr=2; gaps=a\n");
    REQUIRE_THROWS_AS(read_checkpoint(path), Error);
    write("freegrowth-ckpt v1; kind=subsemigroup; r=2; depth=1\n"
          "r=2; gaps=a\ncounts=2\n");
    REQUIRE_THROWS_AS(read_checkpoint(path), Error);
    write("freegrowth-ckpt v1; kind=subsemigroup; r=2; depth=1\n"
          "r=2; gaps=a,b\ncounts=1\n");
    REQUIRE_THROWS_AS(read_checkpoint(path), Error);
    std::filesystem::remove(path);
    REQUIRE_THROWS_AS(read_checkpoint(path), Error);
  }

  TEST_CASE("resuming from a checkpoint matches a fresh run", "[tree][quick]") {
    for (TreeKind kind : {TreeKind::subsemigroup, TreeKind::ideal}) {
      std::string const  path = temp_path("resume");
      EnumerationOptions opts;
      opts.checkpoint_path  = path;
      opts.checkpoint_depth = 4;
      // An interrupted run leaves a frontier at depth 4.
      auto const partial = count_tree_levels(kind, 2, 4, opts);
      REQUIRE(read_checkpoint(path).depth == 4);
      opts.threads     = 2;
      auto const resumed = count_tree_levels(kind, 2, 7, opts);
      auto const fresh   = count_tree_levels(kind, 2, 7);
      REQUIRE(resumed == fresh);
      REQUIRE(std::vector<std::uint64_t>(fresh.begin(), fresh.begin() + 4)
              == partial);
      // A checkpoint for another rank is refused.
      REQUIRE_THROWS_AS(count_tree_levels(kind, 3, 5, opts), Error);
      std::filesystem::remove(path);
    }
  }

  TEST_CASE("an elapsed deadline stops the count", "[tree][quick]") {
    EnumerationOptions opts;
    opts.deadline = std::chrono::steady_clock::now();
    REQUIRE_THROWS_AS(count_tree_levels(TreeKind::subsemigroup, 2, 9, opts),
                      BudgetExhausted);
  }

  TEST_CASE("brute-force minimal generators", "[tree][quick]") {
    using testing::brute_force_minimal_generators;
    GapSet const a = GapSet::parse("r=2; gaps=a");
    REQUIRE(brute_force_minimal_generators(a) == minimal_generators(a));
    REQUIRE(brute_force_minimal_generators(GapSet(3)).size() == 3);
  }

  TEST_CASE("structural invariants over the tree", "[tree]") {
    for (auto [r, n] : {std::pair<std::size_t, std::size_t>{1, 8}, {2, 4}, {3, 3}}) {
      auto const report = testing::check_structure(r, n);
      CAPTURE(r, n, report.violations);
      REQUIRE(report.violations.empty());
      BigInt total = 0;
      for (auto const& c : count_subsemigroups(r, n)) {
        total += c;
      }
      REQUIRE(report.nodes == total);
    }
  }

}  // namespace freegrowth
