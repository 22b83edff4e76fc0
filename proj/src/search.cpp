#include "acd/search.hpp"

#include <atomic>
#include <future>
#include <thread>
#include <vector>

#include "acd/errors.hpp"

namespace acd {

namespace {

void validate(const SearchConfig& cfg) {
    if (cfg.k == 0 || cfg.k > 2 * cfg.n)
        throw PreconditionError("search needs 0 < k <= 2n");
    if (cfg.d_min > cfg.n) throw PreconditionError("search needs d_min <= n");
    if (cfg.max_trials == 0) throw PreconditionError("search needs max_trials > 0");
    if (cfg.k > AdditiveCode::kDefaultEnumLimit)
        throw LimitExceeded("search distance check needs k <= " +
                            std::to_string(AdditiveCode::kDefaultEnumLimit));
}

std::optional<AdditiveCode> evaluate_trial(const SearchConfig& cfg, uint64_t t) {
    SplitMix64 rng(cfg.seed ^ t);
    F4Matrix m(cfg.k, cfg.n);
    for (size_t r = 0; r < cfg.k; ++r)
        for (size_t c = 0; c < cfg.n; ++c) m.set(r, c, Gf4(unsigned(rng.next() & 3)));
    if (m.rank2() != cfg.k) return std::nullopt;
    AdditiveCode code = AdditiveCode::from_generator(m);
    if (!code.is_acd(cfg.form)) return std::nullopt;
    auto d = code.min_distance();
    if (!d || *d < cfg.d_min) return std::nullopt;
    return code;
}

}  // namespace

SearchResult random_search(const SearchConfig& cfg, unsigned threads) {
    validate(cfg);
    SearchResult res;
    res.seed = cfg.seed;

    if (threads <= 1) {
        for (uint64_t t = 0; t < cfg.max_trials; ++t) {
            if (auto code = evaluate_trial(cfg, t)) {
                res.found = std::move(code);
                res.trials_used = t + 1;
                return res;
            }
        }
        res.trials_used = cfg.max_trials;
        return res;
    }

    // Contiguous chunks; every chunk reports its first accept and the smallest
    // trial index wins, so the outcome matches the sequential scan exactly.
    std::atomic<uint64_t> best{cfg.max_trials};
    uint64_t chunk = (cfg.max_trials + threads - 1) / threads;
    auto scan = [&](uint64_t lo, uint64_t hi) -> std::optional<uint64_t> {
        for (uint64_t t = lo; t < hi; ++t) {
            if (t >= best.load(std::memory_order_relaxed)) return std::nullopt;
            if (evaluate_trial(cfg, t)) {
                uint64_t cur = best.load(std::memory_order_relaxed);
                while (t < cur && !best.compare_exchange_weak(cur, t)) {
                }
                return t;
            }
        }
        return std::nullopt;
    };

    std::vector<std::future<std::optional<uint64_t>>> parts;
    for (unsigned i = 0; i < threads; ++i) {
        uint64_t lo = std::min<uint64_t>(uint64_t(i) * chunk, cfg.max_trials);
        uint64_t hi = std::min<uint64_t>(lo + chunk, cfg.max_trials);
        parts.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    uint64_t winner = cfg.max_trials;
    for (auto& p : parts) {
        auto t = p.get();
        if (t && *t < winner) winner = *t;
    }
    if (winner < cfg.max_trials) {
        res.found = evaluate_trial(cfg, winner);
        res.trials_used = winner + 1;
    } else {
        res.trials_used = cfg.max_trials;
    }
    return res;
}

SearchResult column_scaling_search(const AdditiveCode& c, Form form, uint64_t seed,
                                   uint64_t max_trials) {
    if (max_trials == 0) throw PreconditionError("search needs max_trials > 0");
    size_t n = c.length();
    static constexpr Gf4 kUnits[3] = {gf4_one, gf4_w, gf4_w2};

    uint64_t total = max_trials;
    bool enumerate = n <= 12;
    if (enumerate) {
        uint64_t space = 1;
        for (size_t j = 0; j < n; ++j) space *= 3;
        total = std::min<uint64_t>(total, space);
    }

    SearchResult res;
    res.seed = seed;
    std::vector<Gf4> scale(n, gf4_one);
    for (uint64_t i = 0; i < total; ++i) {
        if (i > 0) {
            if (enumerate) {
                uint64_t v = i;
                for (size_t j = 0; j < n; ++j) {
                    scale[j] = kUnits[v % 3];
                    v /= 3;
                }
            } else {
                SplitMix64 rng(seed ^ i);
                for (size_t j = 0; j < n; ++j) scale[j] = kUnits[rng.next() % 3];
            }
        }
        AdditiveCode cand = AdditiveCode::from_generator(c.generator().scaled_columns(scale));
        if (cand.is_acd(form)) {
            res.found = std::move(cand);
            res.trials_used = i + 1;
            return res;
        }
    }
    res.trials_used = total;
    return res;
}

}  // namespace acd
