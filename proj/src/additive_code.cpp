#include "acd/additive_code.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "acd/errors.hpp"

namespace acd {

const char* form_name(Form f) {
    return f == Form::TraceHermitian ? "trace-Hermitian" : "trace-Euclidean";
}

Gf4 inner_hermitian(const Gf4Vector& x, const Gf4Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner product length mismatch");
    Gf4 acc;
    for (size_t i = 0; i < x.size(); ++i) acc += x.get(i) * y.get(i).conj();
    return acc;
}

bool inner_trace_hermitian(const Gf4Vector& x, const Gf4Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner product length mismatch");
    const auto& xa = x.a_plane().words();
    const auto& xb = x.b_plane().words();
    const auto& ya = y.a_plane().words();
    const auto& yb = y.b_plane().words();
    uint64_t acc = 0;
    for (size_t w = 0; w < xa.size(); ++w) acc ^= (xa[w] & yb[w]) ^ (xb[w] & ya[w]);
    return std::popcount(acc) & 1u;
}

bool inner_trace_euclidean(const Gf4Vector& x, const Gf4Vector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner product length mismatch");
    const auto& xa = x.a_plane().words();
    const auto& xb = x.b_plane().words();
    const auto& ya = y.a_plane().words();
    const auto& yb = y.b_plane().words();
    uint64_t acc = 0;
    for (size_t w = 0; w < xa.size(); ++w)
        acc ^= (xa[w] & yb[w]) ^ (xb[w] & ya[w]) ^ (xb[w] & yb[w]);
    return std::popcount(acc) & 1u;
}

namespace {

// Incremental echelon set over GF(2) for binary expansions.
class ExpansionReducer {
  public:
    bool insert(const F2Vector& v) {
        F2Vector r = reduce(v);
        if (r.is_zero()) return false;
        rows_.emplace(leading(r), std::move(r));
        return true;
    }

    F2Vector reduce(F2Vector v) const {
        while (!v.is_zero()) {
            auto it = rows_.find(leading(v));
            if (it == rows_.end()) break;
            v ^= it->second;
        }
        return v;
    }

  private:
    static size_t leading(const F2Vector& v) {
        const auto& w = v.words();
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return i * 64 + size_t(std::countr_zero(w[i]));
        return v.size();
    }

    std::map<size_t, F2Vector> rows_;
};

}  // namespace

AdditiveCode AdditiveCode::from_generator(const F4Matrix& rows) {
    AdditiveCode c;
    c.n_ = rows.cols();
    ExpansionReducer red;
    std::vector<Gf4Vector> kept;
    for (size_t r = 0; r < rows.rows(); ++r) {
        Gf4Vector v = rows.row(r);
        if (red.insert(v.expand_binary())) kept.push_back(std::move(v));
    }
    c.k_ = kept.size();
    c.gen_ = kept.empty() ? F4Matrix(0, c.n_) : F4Matrix::from_rows(kept);
    c.canon_ = c.gen_.expand_binary().rref(&c.pivots_);
    return c;
}

AdditiveCode AdditiveCode::from_generator(const std::vector<Gf4Vector>& rows, size_t n) {
    if (rows.empty()) return zero(n);
    return from_generator(F4Matrix::from_rows(rows));
}

AdditiveCode AdditiveCode::from_linear(const F4Matrix& gen4) {
    F4Matrix basis = gen4.f4_row_basis();
    std::vector<Gf4Vector> rows;
    rows.reserve(2 * basis.rows());
    for (size_t r = 0; r < basis.rows(); ++r) rows.push_back(basis.row(r));
    for (size_t r = 0; r < basis.rows(); ++r) rows.push_back(basis.row(r).scaled(gf4_w));
    return from_generator(rows, gen4.cols());
}

AdditiveCode AdditiveCode::zero(size_t n) {
    return from_generator(F4Matrix(0, n));
}

AdditiveCode AdditiveCode::full(size_t n) {
    return from_linear(F4Matrix::identity(n));
}

AdditiveCode AdditiveCode::dual(Form form) const {
    // Binary expansion of the constraint system: y is in the dual iff
    // B M y_exp^T = 0, where B is the generator expansion and M the block
    // matrix of the form. Row-wise, B M maps the (a, b) pair of coordinate c
    // to (b, a) for the trace Hermitian form and (b, a+b) for trace Euclidean.
    F2Matrix bm(k_, 2 * n_);
    for (size_t r = 0; r < k_; ++r) {
        for (size_t c = 0; c < n_; ++c) {
            bool a = gen_.a_plane().get(r, c);
            bool b = gen_.b_plane().get(r, c);
            bm.set(r, 2 * c, b);
            bm.set(r, 2 * c + 1, form == Form::TraceHermitian ? a : (a ^ b));
        }
    }
    std::vector<F2Vector> basis = bm.nullspace();
    std::vector<Gf4Vector> rows;
    rows.reserve(basis.size());
    for (const F2Vector& e : basis) rows.push_back(Gf4Vector::from_expanded(e));
    return from_generator(rows, n_);
}

F2Matrix AdditiveCode::gram(Form form) const {
    F2Matrix g(k_, k_);
    std::vector<Gf4Vector> rows;
    rows.reserve(k_);
    for (size_t r = 0; r < k_; ++r) rows.push_back(gen_.row(r));
    for (size_t i = 0; i < k_; ++i) {
        for (size_t j = i; j < k_; ++j) {
            bool v = form == Form::TraceHermitian ? inner_trace_hermitian(rows[i], rows[j])
                                                  : inner_trace_euclidean(rows[i], rows[j]);
            g.set(i, j, v);
            g.set(j, i, v);
        }
    }
    return g;
}

bool AdditiveCode::is_acd(Form form) const {
    return gram(form).inverse().has_value();
}

Gf4Vector AdditiveCode::projection(const Gf4Vector& v) const {
    if (v.size() != n_) throw std::invalid_argument("projection input length mismatch");
    auto inv = gram(Form::TraceEuclidean).inverse();
    if (!inv)
        throw PreconditionError(
            "projection requires a trace-Euclidean ACD code (the Gram matrix is singular)");
    // u = Tr(v G^T) * inverse Gram, result = u G.
    F2Vector w(k_);
    for (size_t i = 0; i < k_; ++i)
        if (inner_trace_euclidean(v, gen_.row(i))) w.set(i, true);
    F2Vector u(k_);
    for (size_t i = 0; i < k_; ++i)
        if (w.get(i)) u ^= inv->row(i);
    Gf4Vector out(n_);
    for (size_t j = 0; j < k_; ++j)
        if (u.get(j)) out += gen_.row(j);
    return out;
}

std::vector<uint64_t> AdditiveCode::weight_distribution(size_t max_k) const {
    if (k_ > max_k)
        throw LimitExceeded("codeword enumeration over 2^" + std::to_string(k_) +
                            " exceeds the configured limit 2^" + std::to_string(max_k));
    std::vector<uint64_t> dist(n_ + 1, 0);
    std::vector<Gf4Vector> rows;
    rows.reserve(k_);
    for (size_t r = 0; r < k_; ++r) rows.push_back(gen_.row(r));
    Gf4Vector cur(n_);
    dist[0] = 1;
    for (uint64_t i = 1; i < (uint64_t(1) << k_); ++i) {
        cur += rows[size_t(std::countr_zero(i))];
        ++dist[cur.weight()];
    }
    return dist;
}

std::optional<size_t> AdditiveCode::min_distance(size_t max_k) const {
    std::vector<uint64_t> dist = weight_distribution(max_k);
    for (size_t w = 1; w <= n_; ++w)
        if (dist[w]) return w;
    return std::nullopt;
}

std::vector<Gf4Vector> AdditiveCode::codewords(size_t max_k) const {
    if (k_ > max_k)
        throw LimitExceeded("codeword enumeration over 2^" + std::to_string(k_) +
                            " exceeds the configured limit 2^" + std::to_string(max_k));
    std::vector<Gf4Vector> words;
    words.reserve(size_t(1) << k_);
    Gf4Vector cur(n_);
    words.push_back(cur);
    for (uint64_t i = 1; i < (uint64_t(1) << k_); ++i) {
        cur += gen_.row(size_t(std::countr_zero(i)));
        words.push_back(cur);
    }
    return words;
}

bool AdditiveCode::contains(const Gf4Vector& v) const {
    if (v.size() != n_) return false;
    F2Vector r = v.expand_binary();
    for (size_t i = 0; i < pivots_.size(); ++i)
        if (r.get(pivots_[i])) r ^= canon_.row(i);
    return r.is_zero();
}

bool AdditiveCode::is_linear() const {
    for (size_t r = 0; r < k_; ++r)
        if (!contains(gen_.row(r).scaled(gf4_w))) return false;
    return true;
}

uint64_t AdditiveCode::paut_order(size_t max_n) const {
    if (n_ > max_n)
        throw LimitExceeded("permutation search over " + std::to_string(n_) +
                            "! permutations exceeds the configured length limit " +
                            std::to_string(max_n));
    // Per-column symbol counts over all codewords; a coordinate permutation can
    // only map a column to one with an identical profile.
    std::vector<std::array<uint64_t, 4>> profile(n_, {0, 0, 0, 0});
    for (const Gf4Vector& w : codewords(k_)) {
        for (size_t c = 0; c < n_; ++c) ++profile[c][w.get(c).code()];
    }

    std::vector<size_t> image(n_, 0);
    std::vector<bool> used(n_, false);
    uint64_t count = 0;

    auto equal_under = [&]() {
        F4Matrix perm(k_, n_);
        for (size_t r = 0; r < k_; ++r)
            for (size_t c = 0; c < n_; ++c) perm.set(r, c, gen_.get(r, image[c]));
        return perm.expand_binary().rref() == canon_;
    };

    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == n_) {
            if (equal_under()) ++count;
            return;
        }
        for (size_t cand = 0; cand < n_; ++cand) {
            if (used[cand] || profile[cand] != profile[pos]) continue;
            used[cand] = true;
            image[pos] = cand;
            self(self, pos + 1);
            used[cand] = false;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace acd
