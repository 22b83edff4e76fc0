#include "acd/binary_code.hpp"

#include <bit>
#include <map>

#include "acd/errors.hpp"

namespace acd {

namespace {

// Incremental echelon set over GF(2), keyed by leading bit position.
class F2Reducer {
  public:
    // Reduces v; returns the residual (zero iff v was in the span).
    F2Vector reduce(F2Vector v) const {
        while (!v.is_zero()) {
            size_t lead = leading(v);
            auto it = rows_.find(lead);
            if (it == rows_.end()) break;
            v ^= it->second;
        }
        return v;
    }

    // Returns true if v extended the span (v independent of current rows).
    bool insert(const F2Vector& v) {
        F2Vector r = reduce(v);
        if (r.is_zero()) return false;
        rows_.emplace(leading(r), std::move(r));
        return true;
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

BinaryCode BinaryCode::from_generator(const F2Matrix& rows) {
    BinaryCode c;
    c.n_ = rows.cols();
    F2Reducer red;
    std::vector<F2Vector> kept;
    for (size_t r = 0; r < rows.rows(); ++r) {
        F2Vector v = rows.row(r);
        if (red.insert(v)) kept.push_back(std::move(v));
    }
    c.k_ = kept.size();
    c.gen_ = kept.empty() ? F2Matrix(0, c.n_) : F2Matrix::from_rows(kept);
    c.canon_ = c.gen_.rref(&c.pivots_);
    return c;
}

BinaryCode BinaryCode::zero(size_t n) {
    return from_generator(F2Matrix(0, n));
}

BinaryCode BinaryCode::full(size_t n) {
    return from_generator(F2Matrix::identity(n));
}

BinaryCode BinaryCode::dual() const {
    std::vector<F2Vector> basis = gen_.nullspace();
    if (basis.empty()) return zero(n_);
    return from_generator(F2Matrix::from_rows(basis));
}

bool BinaryCode::is_lcd() const {
    return (gen_ * gen_.transpose()).inverse().has_value();
}

bool BinaryCode::is_self_dual() const {
    return n_ == 2 * k_ && (gen_ * gen_.transpose()).is_zero();
}

BinaryCode BinaryCode::complement() const {
    F2Reducer red;
    for (size_t r = 0; r < k_; ++r) red.insert(gen_.row(r));
    std::vector<F2Vector> comp;
    for (size_t i = 0; i < n_; ++i) {
        F2Vector e(n_);
        e.set(i, true);
        if (red.insert(e)) comp.push_back(std::move(e));
    }
    if (comp.empty()) return zero(n_);
    return from_generator(F2Matrix::from_rows(comp));
}

std::vector<uint64_t> BinaryCode::weight_distribution(size_t max_k) const {
    if (k_ > max_k)
        throw LimitExceeded("codeword enumeration over 2^" + std::to_string(k_) +
                            " exceeds the configured limit 2^" + std::to_string(max_k));
    std::vector<uint64_t> dist(n_ + 1, 0);
    std::vector<F2Vector> rows;
    rows.reserve(k_);
    for (size_t r = 0; r < k_; ++r) rows.push_back(gen_.row(r));
    F2Vector cur(n_);
    dist[0] = 1;
    // Gray-code walk: step i flips generator row countr_zero(i).
    for (uint64_t i = 1; i < (uint64_t(1) << k_); ++i) {
        cur ^= rows[size_t(std::countr_zero(i))];
        ++dist[cur.weight()];
    }
    return dist;
}

std::optional<size_t> BinaryCode::min_distance(size_t max_k) const {
    std::vector<uint64_t> dist = weight_distribution(max_k);
    for (size_t w = 1; w <= n_; ++w)
        if (dist[w]) return w;
    return std::nullopt;
}

bool BinaryCode::is_cyclic() const {
    for (size_t r = 0; r < k_; ++r) {
        F2Vector v = gen_.row(r);
        F2Vector s(n_);
        for (size_t i = 0; i < n_; ++i)
            if (v.get(i)) s.set((i + 1) % n_, true);
        if (!contains(s)) return false;
    }
    return true;
}

bool BinaryCode::contains(const F2Vector& v) const {
    F2Vector r = v;
    for (size_t i = 0; i < pivots_.size(); ++i)
        if (r.get(pivots_[i])) r ^= canon_.row(i);
    return r.is_zero();
}

}  // namespace acd
