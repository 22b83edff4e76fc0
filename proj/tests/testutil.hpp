#ifndef ACD_TESTS_TESTUTIL_HPP
#define ACD_TESTS_TESTUTIL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "acd/additive_code.hpp"
#include "acd/binary_code.hpp"
#include "acd/search.hpp"

namespace testutil {

using namespace acd;

inline std::string data_dir() {
#ifdef ACD4_DATA_DIR
    return ACD4_DATA_DIR;
#else
    return "data";
#endif
}

inline F2Matrix random_f2(SplitMix64& rng, size_t rows, size_t cols) {
    F2Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.set(r, c, rng.next() & 1);
    return m;
}

inline F4Matrix random_f4(SplitMix64& rng, size_t rows, size_t cols) {
    F4Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.set(r, c, Gf4(unsigned(rng.next() & 3)));
    return m;
}

inline Gf4Vector random_gf4_vector(SplitMix64& rng, size_t n) {
    Gf4Vector v(n);
    for (size_t i = 0; i < n; ++i) v.set(i, Gf4(unsigned(rng.next() & 3)));
    return v;
}

inline AdditiveCode random_additive(SplitMix64& rng, size_t n, size_t draw_rows) {
    return AdditiveCode::from_generator(random_f4(rng, draw_rows, n));
}

// Rejection-samples until the 2-rank is exactly k.
inline AdditiveCode random_additive_exact_k(SplitMix64& rng, size_t n, size_t k) {
    for (;;) {
        AdditiveCode c = random_additive(rng, n, k);
        if (c.k() == k) return c;
    }
}

inline BinaryCode random_binary(SplitMix64& rng, size_t n, size_t draw_rows) {
    return BinaryCode::from_generator(random_f2(rng, draw_rows, n));
}

// Random self-dual [2h, h] code: G = [I | A] with A a random product of
// orthogonal transvections x -> x + (x.u)u, wt(u) even.
inline BinaryCode random_self_dual(SplitMix64& rng, size_t h) {
    F2Matrix a = F2Matrix::identity(h);
    for (size_t iter = 0; iter < 4 * h + 4; ++iter) {
        F2Vector u(h);
        for (size_t i = 0; i < h; ++i) u.set(i, rng.next() & 1);
        if (u.weight() % 2 == 1) u.flip(rng.next() % h);
        for (size_t r = 0; r < h; ++r) {
            if (a.row(r).dot(u)) {
                F2Vector nr = a.row(r);
                nr ^= u;
                a.set_row(r, nr);
            }
        }
    }
    F2Matrix g(h, 2 * h);
    for (size_t r = 0; r < h; ++r) {
        g.set(r, r, true);
        for (size_t c = 0; c < h; ++c) g.set(r, h + c, a.get(r, c));
    }
    return BinaryCode::from_generator(g);
}

// Independent codeword enumeration (plain mask loop over generator rows, no
// shared code with the library's Gray-code walk). Packs n <= 32 coordinates
// as a_bits | b_bits << 32.
inline std::vector<uint64_t> enumerate_packed(const F4Matrix& gen) {
    size_t k = gen.rows(), n = gen.cols();
    std::vector<uint64_t> rows_packed(k);
    for (size_t r = 0; r < k; ++r) {
        uint64_t a = 0, b = 0;
        for (size_t c = 0; c < n; ++c) {
            a |= uint64_t(gen.get(r, c).a_bit()) << c;
            b |= uint64_t(gen.get(r, c).b_bit()) << c;
        }
        rows_packed[r] = a | (b << 32);
    }
    std::vector<uint64_t> words;
    words.reserve(size_t(1) << k);
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
        uint64_t w = 0;
        for (size_t r = 0; r < k; ++r)
            if ((mask >> r) & 1) w ^= rows_packed[r];
        words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

// Brute-force check that two additive codes meet only in zero.
inline bool intersects_trivially(const AdditiveCode& c, const AdditiveCode& d) {
    std::vector<uint64_t> cw = enumerate_packed(c.generator());
    std::vector<uint64_t> dw = enumerate_packed(d.generator());
    std::vector<uint64_t> common;
    std::set_intersection(cw.begin(), cw.end(), dw.begin(), dw.end(), std::back_inserter(common));
    return common.size() == 1;  // the zero word only
}

}  // namespace testutil

#endif
