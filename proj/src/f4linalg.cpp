#include "acd/f4linalg.hpp"

#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>

namespace acd {

Gf4Vector::Gf4Vector(F2Vector a, F2Vector b) : a_(std::move(a)), b_(std::move(b)) {
    assert(a_.size() == b_.size());
}

Gf4Vector Gf4Vector::from_string(std::string_view s) {
    Gf4Vector v(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        auto x = Gf4::from_symbol(s[i]);
        if (!x) throw std::invalid_argument("GF(4) vector literal must use only 0/1/w/W");
        v.set(i, *x);
    }
    return v;
}

Gf4Vector Gf4Vector::scaled(Gf4 s) const {
    switch (s.code()) {
        case 0: return Gf4Vector(size());
        case 1: return *this;
        case 2: {  // w*(a + w b) = b + w(a + b)
            F2Vector na = b_;
            F2Vector nb = a_;
            nb ^= b_;
            return Gf4Vector(std::move(na), std::move(nb));
        }
        default: {  // w^2*(a + w b) = (a + b) + w a
            F2Vector na = a_;
            na ^= b_;
            return Gf4Vector(std::move(na), a_);
        }
    }
}

Gf4Vector Gf4Vector::conj() const {
    F2Vector na = a_;
    na ^= b_;
    return Gf4Vector(std::move(na), b_);
}

size_t Gf4Vector::weight() const {
    size_t c = 0;
    for (size_t w = 0; w < a_.words().size(); ++w)
        c += size_t(std::popcount(a_.words()[w] | b_.words()[w]));
    return c;
}

F2Vector Gf4Vector::expand_binary() const {
    F2Vector e(2 * size());
    for (size_t i = 0; i < size(); ++i) {
        if (a_.get(i)) e.set(2 * i, true);
        if (b_.get(i)) e.set(2 * i + 1, true);
    }
    return e;
}

Gf4Vector Gf4Vector::from_expanded(const F2Vector& e) {
    assert(e.size() % 2 == 0);
    Gf4Vector v(e.size() / 2);
    for (size_t i = 0; i < v.size(); ++i) {
        v.a_.set(i, e.get(2 * i));
        v.b_.set(i, e.get(2 * i + 1));
    }
    return v;
}

std::string Gf4Vector::to_string() const {
    std::string s(size(), '0');
    for (size_t i = 0; i < size(); ++i) s[i] = get(i).symbol();
    return s;
}

F4Matrix::F4Matrix(F2Matrix a, F2Matrix b)
    : rows_(a.rows()), cols_(a.cols()), a_(std::move(a)), b_(std::move(b)) {
    assert(a_.rows() == b_.rows() && a_.cols() == b_.cols());
}

F4Matrix F4Matrix::identity(size_t n) {
    return F4Matrix(F2Matrix::identity(n), F2Matrix(n, n));
}

F4Matrix F4Matrix::from_strings(const std::vector<std::string_view>& rows) {
    if (rows.empty()) return F4Matrix();
    F4Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix literal");
        for (size_t c = 0; c < m.cols_; ++c) {
            auto x = Gf4::from_symbol(rows[r][c]);
            if (!x) throw std::invalid_argument("GF(4) matrix literal must use only 0/1/w/W");
            m.set(r, c, *x);
        }
    }
    return m;
}

F4Matrix F4Matrix::from_rows(const std::vector<Gf4Vector>& rows) {
    if (rows.empty()) return F4Matrix();
    F4Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

F4Matrix F4Matrix::from_binary(const F2Matrix& m) {
    return F4Matrix(m, F2Matrix(m.rows(), m.cols()));
}

void F4Matrix::set_row(size_t r, const Gf4Vector& v) {
    assert(v.size() == cols_);
    a_.set_row(r, v.a_plane());
    b_.set_row(r, v.b_plane());
}

F4Matrix F4Matrix::operator+(const F4Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    F4Matrix out = *this;
    for (size_t r = 0; r < rows_; ++r) {
        Gf4Vector v = out.row(r) + o.row(r);
        out.set_row(r, v);
    }
    return out;
}

F4Matrix F4Matrix::operator*(const F4Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    F4Matrix out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        Gf4Vector acc(o.cols_);
        for (size_t k = 0; k < cols_; ++k) {
            Gf4 s = get(r, k);
            if (!s.is_zero()) acc += o.row(k).scaled(s);
        }
        out.set_row(r, acc);
    }
    return out;
}

F4Matrix F4Matrix::scaled(Gf4 s) const {
    F4Matrix out(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r) out.set_row(r, row(r).scaled(s));
    return out;
}

F4Matrix F4Matrix::transpose() const {
    return F4Matrix(a_.transpose(), b_.transpose());
}

F4Matrix F4Matrix::conj() const {
    // (a, b) -> (a^b, b) entrywise.
    F2Matrix na = a_;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (b_.get(r, c)) na.set(r, c, !na.get(r, c));
    return F4Matrix(std::move(na), b_);
}

F4Matrix F4Matrix::conj_transpose() const {
    return conj().transpose();
}

F2Matrix F4Matrix::entrywise_trace() const {
    return b_;
}

F2Matrix F4Matrix::expand_binary() const {
    F2Matrix e(rows_, 2 * cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (a_.get(r, c)) e.set(r, 2 * c, true);
            if (b_.get(r, c)) e.set(r, 2 * c + 1, true);
        }
    }
    return e;
}

F4Matrix F4Matrix::from_expanded(const F2Matrix& e) {
    assert(e.cols() % 2 == 0);
    F4Matrix m(e.rows(), e.cols() / 2);
    for (size_t r = 0; r < e.rows(); ++r) {
        for (size_t c = 0; c < m.cols_; ++c) {
            m.a_.set(r, c, e.get(r, 2 * c));
            m.b_.set(r, c, e.get(r, 2 * c + 1));
        }
    }
    return m;
}

namespace {

constexpr Gf4 gf4_inverse(Gf4 x) {
    // 1 -> 1, w -> w^2, w^2 -> w
    return x * x;  // x^2 = x^{-1} for nonzero x since x^3 = 1
}

// Row echelon reduction over GF(4); returns pivot columns. `m` becomes RREF.
std::vector<size_t> f4_rref_in_place(std::vector<Gf4Vector>& rows, size_t cols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel].get(c).is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Gf4 p = rows[r].get(c);
        if (p != gf4_one) rows[r] = rows[r].scaled(gf4_inverse(p));
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Gf4 e = rows[i].get(c);
            if (!e.is_zero()) rows[i] += rows[r].scaled(e);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t F4Matrix::f4_rank() const {
    std::vector<Gf4Vector> rows;
    rows.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) rows.push_back(row(r));
    return f4_rref_in_place(rows, cols_).size();
}

F4Matrix F4Matrix::f4_row_basis() const {
    std::vector<Gf4Vector> kept;
    std::map<size_t, Gf4Vector> echelon;  // leading position -> leading-1 vector
    for (size_t r = 0; r < rows_; ++r) {
        Gf4Vector cand = row(r);
        while (!cand.is_zero()) {
            size_t lead = 0;
            while (cand.get(lead).is_zero()) ++lead;
            auto it = echelon.find(lead);
            if (it == echelon.end()) {
                kept.push_back(row(r));
                echelon.emplace(lead, cand.scaled(gf4_inverse(cand.get(lead))));
                break;
            }
            cand += it->second.scaled(cand.get(lead));
        }
    }
    if (kept.empty()) return F4Matrix(0, cols_);
    return from_rows(kept);
}

F4Matrix F4Matrix::f4_nullspace() const {
    std::vector<Gf4Vector> rows;
    rows.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) rows.push_back(row(r));
    std::vector<size_t> pivots = f4_rref_in_place(rows, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<Gf4Vector> basis;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Gf4Vector x(cols_);
        x.set(f, gf4_one);
        for (size_t i = 0; i < pivots.size(); ++i) {
            Gf4 e = rows[i].get(f);
            if (!e.is_zero()) x.set(pivots[i], e);  // -e = e in characteristic 2
        }
        basis.push_back(std::move(x));
    }
    if (basis.empty()) return F4Matrix(0, cols_);
    return from_rows(basis);
}

bool F4Matrix::f4_invertible() const {
    if (rows_ != cols_) throw std::invalid_argument("invertibility of non-square matrix");
    return f4_rank() == rows_;
}

F4Matrix F4Matrix::scaled_columns(const std::vector<Gf4>& scale) const {
    if (scale.size() != cols_) throw std::invalid_argument("column scale length mismatch");
    F4Matrix out(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.set(r, c, get(r, c) * scale[c]);
    return out;
}

std::vector<std::string> F4Matrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) out.push_back(row(r).to_string());
    return out;
}

std::string F4Matrix::to_string() const {
    std::string s;
    for (size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

}  // namespace acd
