#include "freegrowth/patterns.hpp"

#include <algorithm>  // for sort, next_permutation, upper_bound
#include <atomic>     // for atomic
#include <exception>  // for exception_ptr
#include <mutex>      // for mutex
#include <numeric>    // for iota
#include <thread>     // for thread

#include "freegrowth/errors.hpp"
#include "freegrowth/ideals.hpp"

namespace freegrowth {

  namespace {
    // Rewrites w (over src) letter by letter through map (1-based, indexed by
    // source letter) into a word over dst.
    PackedWord relabel(WordCodec const&                codec_src,
                       WordCodec const&                codec_dst,
                       PackedWord                      w,
                       std::vector<letter_type> const& map) {
      std::size_t const len  = WordCodec::length(w);
      PackedWord        code = 0;
      for (std::size_t i = 0; i < len; ++i) {
        code = code * codec_dst.rank() + (map[codec_src.letter(w, i)] - 1);
      }
      return WordCodec::make(len, code);
    }

    struct CanonicalResult {
      std::vector<PackedWord>  keys;       // over rank k
      std::vector<letter_type> best_map;   // source letter -> 1..k
      std::size_t              stabilizer;
    };

    // keys over codec_src with support `support`; the result is over rank
    // support.size().
    CanonicalResult canonical_form(WordCodec const&                codec_src,
                                   std::span<PackedWord const>     keys,
                                   std::vector<letter_type> const& support) {
      std::size_t const        k         = support.size();
      WordCodec const&         codec_dst = WordCodec::get(k);
      std::vector<letter_type> images(k);
      std::iota(images.begin(), images.end(), letter_type(1));
      std::vector<letter_type> map(codec_src.rank() + 1, 0);
      std::vector<PackedWord>  image(keys.size());

      CanonicalResult best;
      best.stabilizer = 0;
      do {
        for (std::size_t i = 0; i < k; ++i) {
          map[support[i]] = images[i];
        }
        for (std::size_t i = 0; i < keys.size(); ++i) {
          image[i] = relabel(codec_src, codec_dst, keys[i], map);
        }
        std::sort(image.begin(), image.end());
        if (best.stabilizer == 0 || image < best.keys) {
          best.keys       = image;
          best.best_map   = map;
          best.stabilizer = 1;
        } else if (image == best.keys) {
          ++best.stabilizer;
        }
      } while (std::next_permutation(images.begin(), images.end()));
      return best;
    }

    std::size_t factorial_size(std::size_t k) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        f *= i;
      }
      return f;
    }

    // Canonical forms try every permutation of the support, and supports
    // reach the index.
    constexpr std::size_t max_pattern_index = 9;

    void check_pattern_support(std::size_t k) {
      if (k > max_pattern_index) {
        throw ResourceLimit("gap patterns of index above "
                            + std::to_string(max_pattern_index)
                            + " are not supported");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  Canonicalization canonicalize(GapSet const& g) {
    if (g.empty()) {
      throw Error("cannot canonicalize the empty gap set");
    }
    auto const sup = support(g);
    auto const res = canonical_form(g.codec(), g.keys(), sup);
    std::size_t const k = sup.size();

    std::vector<letter_type> images(g.rank());
    letter_type              next = static_cast<letter_type>(k + 1);
    for (std::size_t x = 1; x <= g.rank(); ++x) {
      images[x - 1] = res.best_map[x] != 0 ? res.best_map[x] : next++;
    }
    return Canonicalization{
        GapPattern{GapSet::from_keys_unchecked(k, res.keys),
                   k,
                   factorial_size(k) / res.stabilizer},
        Permutation(std::move(images))};
  }

  std::size_t orbit_size(GapSet const& g) {
    if (g.empty()) {
      return 1;
    }
    auto const sup = support(g);
    return factorial_size(sup.size())
           / canonical_form(g.codec(), g.keys(), sup).stabilizer;
  }

  ////////////////////////////////////////////////////////////////////////
  // ZLevel
  ////////////////////////////////////////////////////////////////////////

  ZLevel::ZLevel(TreeKind kind, std::size_t n)
      : _kind(kind), _n(n), _buckets(n + 1) {}

  std::size_t ZLevel::max_support() const noexcept {
    for (std::size_t k = _buckets.size(); k-- > 0;) {
      if (!_buckets[k].empty()) {
        return k;
      }
    }
    return 0;
  }

  ZLevel::bucket_type const& ZLevel::bucket(std::size_t k) const {
    static bucket_type const empty;
    return k < _buckets.size() ? _buckets[k] : empty;
  }

  std::vector<GapPattern> ZLevel::patterns(std::size_t k, std::size_t i) const {
    std::vector<GapPattern> out;
    for (auto const& [keys, orbit] : bucket(k)) {
      if (orbit == i) {
        out.push_back(GapPattern{
            GapSet::from_keys_unchecked(std::max<std::size_t>(k, 1), keys),
            k,
            orbit});
      }
    }
    return out;
  }

  std::vector<std::size_t> ZLevel::orbit_sizes(std::size_t k) const {
    std::vector<std::size_t> out;
    for (auto const& entry : bucket(k)) {
      out.push_back(entry.second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  BigInt ZLevel::c(std::size_t k) const {
    BigInt total = 0;
    for (auto const& entry : bucket(k)) {
      total += entry.second;
    }
    return total;
  }

  BigInt ZLevel::count_at_rank(std::size_t rank) const {
    BigInt total = 0;
    for (std::size_t k = 0; k < _buckets.size() && k <= rank; ++k) {
      total += c(k) * binomial(static_cast<std::int64_t>(rank), k);
    }
    return total;
  }

  void ZLevel::insert(std::size_t k, key_type keys, std::size_t orbit) {
    if (k >= _buckets.size()) {
      throw InternalError("pattern support " + std::to_string(k)
                          + " exceeds the index " + std::to_string(_n));
    }
    auto [it, inserted] = _buckets[k].emplace(std::move(keys), orbit);
    if (!inserted && it->second != orbit) {
      throw InternalError("inconsistent orbit sizes for one gap pattern");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Level construction
  ////////////////////////////////////////////////////////////////////////

  // Every index-n gap set G is its Frobenius f added to an index-(n-1) gap
  // set G'. If P' = sigma(G') is canonical then sigma(G) = P' + sigma(f) with
  // sigma(f) a child generator of P', but sigma(f) need not exceed the
  // Frobenius of P'. Children are therefore taken over every generator, not
  // only those above the Frobenius, and then canonicalised and deduplicated.
  ZLevel next_Z_level(ZLevel const& previous, std::size_t threads) {
    std::size_t const n    = previous.index() + 1;
    TreeKind const    kind = previous.kind();
    check_pattern_support(n);

    struct Job {
      std::size_t                    k;       // support of the children
      bool                           fresh;   // parent has support k - 1
      ZLevel::key_type const*        parent;
    };
    std::vector<Job> jobs;
    for (std::size_t k = 1; k <= n; ++k) {
      for (auto const& entry : previous.bucket(k)) {
        jobs.push_back({k, false, &entry.first});
      }
      for (auto const& entry : previous.bucket(k - 1)) {
        jobs.push_back({k, true, &entry.first});
      }
    }

    using Found = std::vector<std::pair<ZLevel::key_type, std::size_t>>;
    std::vector<Found> found(jobs.size());

    auto run_job = [&](std::size_t j) {
      Job const&       job   = jobs[j];
      WordCodec const& codec = WordCodec::get(job.k);
      std::vector<PackedWord> parent;
      if (job.fresh && job.k > 1) {
        WordCodec const&         src = WordCodec::get(job.k - 1);
        std::vector<letter_type> id(job.k, 0);
        std::iota(id.begin(), id.end(), letter_type(0));
        for (PackedWord w : *job.parent) {
          parent.push_back(relabel(src, codec, w, id));
        }
      } else {
        parent = *job.parent;
      }
      std::vector<letter_type> letters;
      if (job.fresh) {
        letters.push_back(static_cast<letter_type>(job.k));
      } else {
        for (std::size_t x = 1; x <= job.k; ++x) {
          letters.push_back(static_cast<letter_type>(x));
        }
      }
      std::vector<PackedWord> hs;
      if (kind == TreeKind::subsemigroup) {
        packed::minimal_generators(codec, parent, letters, 0, hs);
      } else {
        packed::ideal_generators(codec, parent, letters, hs);
      }
      std::vector<letter_type> full(job.k);
      std::iota(full.begin(), full.end(), letter_type(1));
      Found out;
      for (PackedWord h : hs) {
        std::vector<PackedWord> child(parent);
        child.insert(std::upper_bound(child.begin(), child.end(), h), h);
        auto res = canonical_form(codec, child, full);
        out.emplace_back(std::move(res.keys),
                         factorial_size(job.k) / res.stabilizer);
      }
      found[j] = std::move(out);
    };

    std::size_t const workers
        = std::max<std::size_t>(1, std::min(threads, jobs.size()));
    if (workers == 1) {
      for (std::size_t j = 0; j < jobs.size(); ++j) {
        run_job(j);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr       error;
      std::mutex               mtx;
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          try {
            for (std::size_t j = next++; j < jobs.size(); j = next++) {
              run_job(j);
            }
          } catch (...) {
            std::lock_guard<std::mutex> lock(mtx);
            if (!error) {
              error = std::current_exception();
            }
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

    ZLevel level(kind, n);
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      for (auto& [keys, orbit] : found[j]) {
        level.insert(jobs[j].k, std::move(keys), orbit);
      }
    }
    return level;
  }

  std::vector<ZLevel> compute_Z_sets(TreeKind    kind,
                                     std::size_t n_max,
                                     std::size_t threads) {
    if (n_max == 0) {
      throw Error("Z-sets need n >= 1");
    }
    check_pattern_support(n_max);
    ZLevel seed(kind, 0);
    seed.insert(0, {}, 1);
    std::vector<ZLevel> levels;
    levels.push_back(next_Z_level(seed, threads));
    while (levels.size() < n_max) {
      levels.push_back(next_Z_level(levels.back(), threads));
    }
    return levels;
  }

  BigInt pattern_coefficient_c(ZLevel const& level, std::size_t k) {
    return level.c(k);
  }

  GrowthPolynomial polynomial_from_Z(ZLevel const& level) {
    std::vector<BigInt> c(level.index() + 1, 0);
    for (std::size_t k = 1; k <= level.index(); ++k) {
      c[k] = level.c(k);
    }
    if (level.c(0) != 0) {
      throw InternalError("a level above 0 contains the empty pattern");
    }
    return polynomial_from_falling_factorials(c);
  }

  GrowthPolynomial polynomial_from_Z(std::size_t n, std::size_t threads) {
    return polynomial_from_Z(
        compute_Z_sets(TreeKind::subsemigroup, n, threads).back());
  }

}  // namespace freegrowth
