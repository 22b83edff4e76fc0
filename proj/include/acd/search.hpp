#ifndef ACD_SEARCH_HPP
#define ACD_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "acd/additive_code.hpp"

namespace acd {

/**
 * splitmix64: the fixed PRNG behind all seeded searches, chosen so results
 * reproduce across implementations. Update per draw:
 *
 *     state += 0x9E3779B97F4A7C15
 *     z = state
 *     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *     return z ^ (z >> 31)
 */
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

  private:
    uint64_t state_;
};

struct SearchConfig {
    size_t n = 0;
    size_t k = 0;
    size_t d_min = 1;
    Form form = Form::TraceEuclidean;
    uint64_t seed = 0;
    uint64_t max_trials = 100000;
};

struct SearchResult {
    std::optional<AdditiveCode> found;
    uint64_t trials_used = 0;  // accepted trial index + 1, or max_trials when exhausted
    uint64_t seed = 0;
};

/**
 * Draws uniformly random k x n generator matrices (trial t uses a fresh
 * SplitMix64 seeded with seed ^ t; entries row-major, each `next() & 3`),
 * rejects 2-rank < k, and accepts the first code that is ACD under cfg.form
 * with min distance >= cfg.d_min. Deterministic for a fixed config: with
 * threads > 1, trials are partitioned into contiguous chunks and the accept
 * with the smallest trial index is reported.
 */
SearchResult random_search(const SearchConfig& cfg, unsigned threads = 1);

/**
 * Searches scale vectors s in {1, w, w^2}^n, multiplying column j of the
 * generator by s_j, for a scaling that makes the code ACD under `form`.
 * Candidate 0 is all-ones (the input itself). For n <= 12 candidates are
 * enumerated lexicographically (candidate i has digit (i / 3^j) % 3 at
 * coordinate j, with digits 0,1,2 meaning 1,w,w^2); for larger n candidate
 * i >= 1 draws each s_j as {1,w,w^2}[next() % 3] from SplitMix64(seed ^ i).
 * Column scaling by units never changes n, k or the weight distribution.
 */
SearchResult column_scaling_search(const AdditiveCode& c, Form form, uint64_t seed,
                                   uint64_t max_trials);

}  // namespace acd

#endif
