#include "acd/f2linalg.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace acd {

F2Vector F2Vector::from_string(std::string_view s) {
    F2Vector v(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("binary vector literal must use only 0/1");
    }
    return v;
}

F2Vector& F2Vector::operator^=(const F2Vector& o) {
    assert(n_ == o.n_);
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
}

bool F2Vector::dot(const F2Vector& o) const {
    assert(n_ == o.n_);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1u;
}

size_t F2Vector::weight() const {
    size_t c = 0;
    for (uint64_t w : words_) c += size_t(std::popcount(w));
    return c;
}

bool F2Vector::is_zero() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

std::string F2Vector::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix F2Matrix::identity(size_t n) {
    F2Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_strings(const std::vector<std::string_view>& rows) {
    if (rows.empty()) return F2Matrix();
    F2Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix literal");
        for (size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] == '1')
                m.set(r, c, true);
            else if (rows[r][c] != '0')
                throw std::invalid_argument("binary matrix literal must use only 0/1");
        }
    }
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vector>& rows) {
    if (rows.empty()) return F2Matrix();
    F2Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

F2Vector F2Matrix::row(size_t r) const {
    F2Vector v(cols_);
    for (size_t w = 0; w < wpr_; ++w) v.words()[w] = word(r, w);
    return v;
}

void F2Matrix::set_row(size_t r, const F2Vector& v) {
    assert(v.size() == cols_);
    for (size_t w = 0; w < wpr_; ++w) word(r, w) = v.words()[w];
}

void F2Matrix::xor_rows(size_t dst, size_t src) {
    for (size_t w = 0; w < wpr_; ++w) word(dst, w) ^= word(src, w);
}

void F2Matrix::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t w = 0; w < wpr_; ++w) std::swap(word(a, w), word(b, w));
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    F2Matrix out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (!get(r, c)) continue;
            for (size_t w = 0; w < out.wpr_; ++w) out.word(r, w) ^= o.word(c, w);
        }
    }
    return out;
}

F2Matrix F2Matrix::stacked(const F2Matrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw std::invalid_argument("stack column mismatch");
    F2Matrix out(rows_ + below.rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t w = 0; w < wpr_; ++w) out.word(r, w) = word(r, w);
    for (size_t r = 0; r < below.rows_; ++r)
        for (size_t w = 0; w < wpr_; ++w) out.word(rows_ + r, w) = below.word(r, w);
    return out;
}

size_t F2Matrix::rank() const {
    std::vector<size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

F2Matrix F2Matrix::rref(std::vector<size_t>* pivots) const {
    F2Matrix m = *this;
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = r;
        while (sel < rows_ && !m.get(sel, c)) ++sel;
        if (sel == rows_) continue;
        m.swap_rows(r, sel);
        for (size_t i = 0; i < rows_; ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::optional<F2Matrix> F2Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = rows_;
    F2Matrix m = *this;
    F2Matrix inv = identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && !m.get(sel, c)) ++sel;
        if (sel == n) return std::nullopt;
        m.swap_rows(c, sel);
        inv.swap_rows(c, sel);
        for (size_t i = 0; i < n; ++i) {
            if (i != c && m.get(i, c)) {
                m.xor_rows(i, c);
                inv.xor_rows(i, c);
            }
        }
    }
    return inv;
}

std::vector<F2Vector> F2Matrix::nullspace() const {
    std::vector<size_t> pivots;
    F2Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<F2Vector> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        F2Vector x(cols_);
        x.set(f, true);
        for (size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, f)) x.set(pivots[i], true);
        basis.push_back(std::move(x));
    }
    return basis;
}

bool F2Matrix::is_zero() const {
    for (uint64_t w : bits_)
        if (w) return false;
    return true;
}

bool F2Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

bool F2Matrix::has_zero_diagonal() const {
    for (size_t i = 0; i < std::min(rows_, cols_); ++i)
        if (get(i, i)) return false;
    return true;
}

std::string F2Matrix::to_string() const {
    std::string s;
    for (size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

}  // namespace acd
