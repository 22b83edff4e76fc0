#ifndef ACD_F4LINALG_HPP
#define ACD_F4LINALG_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "acd/f2linalg.hpp"
#include "acd/gf4.hpp"

namespace acd {

/**
 * Vector over GF(4), bit-sliced into an a-plane and a b-plane (x = a + w*b).
 * Addition is two XORs; the Hamming weight is popcount(a | b).
 */
class Gf4Vector {
  public:
    Gf4Vector() = default;
    explicit Gf4Vector(size_t n) : a_(n), b_(n) {}
    Gf4Vector(F2Vector a, F2Vector b);

    static Gf4Vector from_string(std::string_view s);

    size_t size() const { return a_.size(); }

    Gf4 get(size_t i) const { return Gf4(a_.get(i) | (unsigned(b_.get(i)) << 1)); }
    void set(size_t i, Gf4 x) {
        a_.set(i, x.a_bit());
        b_.set(i, x.b_bit());
    }

    const F2Vector& a_plane() const { return a_; }
    const F2Vector& b_plane() const { return b_; }

    Gf4Vector& operator+=(const Gf4Vector& o) {
        a_ ^= o.a_;
        b_ ^= o.b_;
        return *this;
    }
    friend Gf4Vector operator+(Gf4Vector x, const Gf4Vector& y) { return x += y; }

    /// Coordinatewise multiple s*v (bit-slice of the field multiplication).
    Gf4Vector scaled(Gf4 s) const;

    /// Entrywise conjugate.
    Gf4Vector conj() const;

    size_t weight() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Binary expansion of length 2n: coordinate i maps to bits (2i, 2i+1) = (a, b).
    F2Vector expand_binary() const;
    static Gf4Vector from_expanded(const F2Vector& e);

    friend bool operator==(const Gf4Vector&, const Gf4Vector&) = default;

    std::string to_string() const;

  private:
    F2Vector a_;
    F2Vector b_;
};

/// Matrix over GF(4) stored as two F2Matrix bit-planes.
class F4Matrix {
  public:
    F4Matrix() = default;
    F4Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, cols), b_(rows, cols) {}
    F4Matrix(F2Matrix a, F2Matrix b);

    static F4Matrix identity(size_t n);
    static F4Matrix from_strings(const std::vector<std::string_view>& rows);
    static F4Matrix from_rows(const std::vector<Gf4Vector>& rows);
    /// Embed a binary matrix (b-plane zero).
    static F4Matrix from_binary(const F2Matrix& m);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Gf4 get(size_t r, size_t c) const { return Gf4(a_.get(r, c) | (unsigned(b_.get(r, c)) << 1)); }
    void set(size_t r, size_t c, Gf4 x) {
        a_.set(r, c, x.a_bit());
        b_.set(r, c, x.b_bit());
    }

    const F2Matrix& a_plane() const { return a_; }
    const F2Matrix& b_plane() const { return b_; }

    Gf4Vector row(size_t r) const { return Gf4Vector(a_.row(r), b_.row(r)); }
    void set_row(size_t r, const Gf4Vector& v);

    F4Matrix operator+(const F4Matrix& o) const;
    F4Matrix operator*(const F4Matrix& o) const;
    F4Matrix scaled(Gf4 s) const;
    F4Matrix transpose() const;
    F4Matrix conj() const;
    F4Matrix conj_transpose() const;

    /// Entrywise trace bits (Tr(a + w*b) = b).
    F2Matrix entrywise_trace() const;

    /// rows x 2cols binary expansion; column c maps to columns (2c, 2c+1) = (a, b).
    F2Matrix expand_binary() const;
    static F4Matrix from_expanded(const F2Matrix& e);

    /// GF(2) rank of the binary row expansion (the rank relevant to additive codes).
    size_t rank2() const { return expand_binary().rank(); }

    /// Rank over GF(4) itself.
    size_t f4_rank() const;

    /// The rows of this matrix that extend an F4-independent set, original values
    /// kept, scanned top to bottom.
    F4Matrix f4_row_basis() const;

    /// Basis (as rows) of {x : M x^T = 0} over GF(4), echelon-derived.
    F4Matrix f4_nullspace() const;

    /// Invertibility over GF(4); requires square. 0x0 counts as invertible.
    bool f4_invertible() const;

    /// Copy with column j multiplied by scale[j].
    F4Matrix scaled_columns(const std::vector<Gf4>& scale) const;

    friend bool operator==(const F4Matrix&, const F4Matrix&) = default;

    std::vector<std::string> to_strings() const;
    std::string to_string() const;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    F2Matrix a_;
    F2Matrix b_;
};

}  // namespace acd

#endif
