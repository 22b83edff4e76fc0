#ifndef ACD_F2LINALG_HPP
#define ACD_F2LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acd {

/// Bit-packed binary vector. Unused tail bits of the last word stay zero.
class F2Vector {
  public:
    F2Vector() = default;
    explicit F2Vector(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static F2Vector from_string(std::string_view s);

    size_t size() const { return n_; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    F2Vector& operator^=(const F2Vector& o);
    friend F2Vector operator^(F2Vector x, const F2Vector& y) { return x ^= y; }

    /// Parity of the coordinatewise AND (the standard dot product over GF(2)).
    bool dot(const F2Vector& o) const;

    size_t weight() const;
    bool is_zero() const;

    friend bool operator==(const F2Vector&, const F2Vector&) = default;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    std::string to_string() const;

  private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/**
 * Dense bit-packed matrix over GF(2), row-major. 0x0, 0xn and nx0 shapes are
 * all legal; the 0x0 matrix counts as invertible (empty product convention).
 */
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static F2Matrix identity(size_t n);
    static F2Matrix from_strings(const std::vector<std::string_view>& rows);
    static F2Matrix from_rows(const std::vector<F2Vector>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return (word(r, c >> 6) >> (c & 63)) & 1u; }
    void set(size_t r, size_t c, bool v) {
        uint64_t mask = uint64_t(1) << (c & 63);
        if (v)
            word(r, c >> 6) |= mask;
        else
            word(r, c >> 6) &= ~mask;
    }

    F2Vector row(size_t r) const;
    void set_row(size_t r, const F2Vector& v);
    void xor_rows(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    F2Matrix transpose() const;
    F2Matrix operator*(const F2Matrix& o) const;
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    /// This matrix with `below` appended underneath (same column count).
    F2Matrix stacked(const F2Matrix& below) const;

    size_t rank() const;

    /// Reduced row echelon form; pivot column indices out via `pivots`.
    F2Matrix rref(std::vector<size_t>* pivots = nullptr) const;

    /// Inverse over GF(2), or nullopt when singular. 0x0 inverts to 0x0.
    std::optional<F2Matrix> inverse() const;

    /**
     * Basis of {x : M x^T = 0}, in the deterministic order produced by
     * free-column back-substitution on the RREF (ascending free column).
     */
    std::vector<F2Vector> nullspace() const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool has_zero_diagonal() const;

    std::string to_string() const;

  private:
    uint64_t& word(size_t r, size_t w) { return bits_[r * wpr_ + w]; }
    const uint64_t& word(size_t r, size_t w) const { return bits_[r * wpr_ + w]; }

    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t wpr_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace acd

#endif
