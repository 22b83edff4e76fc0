#ifndef ACD_GF4_HPP
#define ACD_GF4_HPP

#include <cstdint>
#include <optional>

namespace acd {

/**
 * Element of GF(4) = {0, 1, w, w^2} with w^2 = w + 1 and w^3 = 1.
 *
 * Stored as the 2-bit code a + 2b for x = a + w*b, so that addition is XOR,
 * the trace to GF(2) is the b bit, and conjugation (the Frobenius x -> x^2)
 * is (a, b) -> (a^b, b). Text symbols: '0', '1', 'w' (= w), 'W' (= w^2),
 * case-sensitive.
 */
class Gf4 {
  public:
    constexpr Gf4() = default;
    constexpr explicit Gf4(unsigned code) : c_(static_cast<uint8_t>(code & 3u)) {}

    constexpr unsigned code() const { return c_; }
    constexpr unsigned a_bit() const { return c_ & 1u; }
    constexpr unsigned b_bit() const { return (c_ >> 1) & 1u; }
    constexpr bool is_zero() const { return c_ == 0; }

    friend constexpr Gf4 operator+(Gf4 x, Gf4 y) { return Gf4(x.c_ ^ y.c_); }
    friend constexpr Gf4 operator*(Gf4 x, Gf4 y) { return Gf4(mul_table[x.c_][y.c_]); }
    constexpr Gf4& operator+=(Gf4 y) { c_ ^= y.c_; return *this; }
    constexpr Gf4& operator*=(Gf4 y) { c_ = mul_table[c_][y.c_]; return *this; }

    /// Frobenius conjugate x^2; fixes 0 and 1, swaps w and w^2.
    constexpr Gf4 conj() const { return Gf4((a_bit() ^ b_bit()) | (c_ & 2u)); }

    /// Trace to GF(2): Tr(x) = x + x^2. Zero on {0,1}, one on {w, w^2}.
    constexpr unsigned trace() const { return b_bit(); }

    friend constexpr bool operator==(Gf4 x, Gf4 y) = default;

    char symbol() const { return "01wW"[c_]; }
    static std::optional<Gf4> from_symbol(char ch) {
        switch (ch) {
            case '0': return Gf4(0);
            case '1': return Gf4(1);
            case 'w': return Gf4(2);
            case 'W': return Gf4(3);
            default: return std::nullopt;
        }
    }

  private:
    static constexpr uint8_t mul_table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };

    uint8_t c_ = 0;
};

inline constexpr Gf4 gf4_zero{0};
inline constexpr Gf4 gf4_one{1};
inline constexpr Gf4 gf4_w{2};
inline constexpr Gf4 gf4_w2{3};

}  // namespace acd

#endif
