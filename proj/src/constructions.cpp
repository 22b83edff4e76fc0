#include "acd/constructions.hpp"

#include "acd/errors.hpp"

namespace acd {

namespace {

Gf4Vector scaled_binary_row(const F2Vector& row, Gf4 s) {
    return Gf4Vector(row, F2Vector(row.size())).scaled(s);
}

}  // namespace

AdditiveCode lift_binary_lcd(const BinaryCode& c2) {
    if (!c2.is_lcd())
        throw PreconditionError(
            "lift requires a binary LCD input (G*G^T is singular over GF(2))");
    return AdditiveCode::from_linear(F4Matrix::from_binary(c2.generator()));
}

AdditiveCode mix(Gf4 a, const BinaryCode& c, Gf4 b, const BinaryCode& d) {
    if (a.is_zero() || b.is_zero() || a == b)
        throw PreconditionError("mixing scalars must be nonzero and distinct");
    if (c.length() != d.length())
        throw PreconditionError("mixed codes must have the same length");
    std::vector<Gf4Vector> rows;
    rows.reserve(c.dim() + d.dim());
    for (size_t r = 0; r < c.dim(); ++r) rows.push_back(scaled_binary_row(c.generator().row(r), a));
    for (size_t r = 0; r < d.dim(); ++r) rows.push_back(scaled_binary_row(d.generator().row(r), b));
    return AdditiveCode::from_generator(rows, c.length());
}

AdditiveCode self_dual_complement_acd(const BinaryCode& c, Gf4 a, Gf4 b) {
    if (!c.is_self_dual())
        throw PreconditionError("input must be a binary self-dual code (C = C-dual)");
    return mix(a, c, b, c.complement());
}

AdditiveCode mix_lcd_pair(const BinaryCode& c, const BinaryCode& d) {
    if (!c.is_lcd() || !d.is_lcd())
        throw PreconditionError("both inputs must be binary LCD codes");
    return mix(gf4_w, c, gf4_w2, d);
}

AdditiveCode fold(const BinaryCode& c1) {
    if (c1.length() % 2 != 0)
        throw PreconditionError("fold requires a code of even length");
    size_t n = c1.length() / 2;
    size_t k = c1.dim();
    // [A|B] -> wA + w^2 B. In bit planes that is (a, b) = (B, A xor B).
    F4Matrix g(k, n);
    for (size_t r = 0; r < k; ++r) {
        for (size_t c = 0; c < n; ++c) {
            bool av = c1.generator().get(r, c);
            bool bv = c1.generator().get(r, n + c);
            g.set(r, c, Gf4(unsigned(bv) | (unsigned(av ^ bv) << 1)));
        }
    }
    return AdditiveCode::from_generator(g);
}

BinaryCode unfold(const AdditiveCode& c) {
    size_t n = c.length();
    size_t k = c.k();
    // For g = a + w b: Tr(w g) = a xor b, Tr(w^2 g) = a.
    F2Matrix g(k, 2 * n);
    for (size_t r = 0; r < k; ++r) {
        for (size_t j = 0; j < n; ++j) {
            bool av = c.generator().a_plane().get(r, j);
            bool bv = c.generator().b_plane().get(r, j);
            g.set(r, j, av ^ bv);
            g.set(r, n + j, av);
        }
    }
    return BinaryCode::from_generator(g);
}

}  // namespace acd
