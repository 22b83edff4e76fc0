#include <doctest.h>

#include "acd/f2linalg.hpp"
#include "acd/search.hpp"
#include "testutil.hpp"

using namespace acd;

TEST_CASE("rank of simple matrices") {
    for (size_t k = 0; k <= 6; ++k) CHECK(F2Matrix::identity(k).rank() == k);
    CHECK(F2Matrix(3, 5).rank() == 0);
    CHECK(F2Matrix::from_strings({"11", "11"}).rank() == 1);
}

TEST_CASE("rank equals rank of transpose") {
    SplitMix64 rng(11);
    for (int t = 0; t < 200; ++t) {
        F2Matrix m = testutil::random_f2(rng, 1 + rng.next() % 8, 1 + rng.next() % 8);
        CHECK(m.rank() == m.transpose().rank());
    }
}

TEST_CASE("inverse of simple matrices") {
    CHECK(*F2Matrix::identity(4).inverse() == F2Matrix::identity(4));
    F2Matrix swap2 = F2Matrix::from_strings({"01", "10"});
    CHECK(*swap2.inverse() == swap2);
    CHECK(!F2Matrix::from_strings({"11", "11"}).inverse().has_value());
}

TEST_CASE("0x0 matrix is invertible and k x 0 shapes are legal") {
    F2Matrix empty;
    CHECK(empty.rank() == 0);
    auto inv = empty.inverse();
    REQUIRE(inv.has_value());
    CHECK(inv->rows() == 0);
    CHECK(F2Matrix(0, 5).rank() == 0);
    CHECK(F2Matrix(0, 5).nullspace().size() == 5);  // no constraints
    CHECK(F2Matrix(4, 0).rank() == 0);
    CHECK(F2Matrix(4, 0).nullspace().empty());
}

TEST_CASE("inverse is an involution and a true inverse on random invertible matrices") {
    SplitMix64 rng(12);
    int done = 0;
    while (done < 60) {
        size_t n = 1 + rng.next() % 9;
        F2Matrix m = testutil::random_f2(rng, n, n);
        auto inv = m.inverse();
        if (!inv) continue;
        ++done;
        CHECK(m * *inv == F2Matrix::identity(n));
        CHECK(*inv->inverse() == m);
    }
}

TEST_CASE("nullspace of simple matrices") {
    CHECK(F2Matrix::identity(5).nullspace().empty());
    CHECK(F2Matrix(1, 4).nullspace().size() == 4);  // zero row constrains nothing

    // Oracle: enumerate all 8 vectors of F2^3 and keep the kernel of [1 1 0].
    F2Matrix m = F2Matrix::from_strings({"110"});
    std::vector<F2Vector> kernel;
    for (unsigned v = 0; v < 8; ++v) {
        F2Vector x(3);
        for (size_t i = 0; i < 3; ++i) x.set(i, (v >> i) & 1);
        if (!m.row(0).dot(x)) kernel.push_back(x);
    }
    REQUIRE(kernel.size() == 4);
    std::vector<F2Vector> basis = m.nullspace();
    REQUIRE(basis.size() == 2);
    for (const F2Vector& b : basis)
        CHECK(std::count(kernel.begin(), kernel.end(), b) == 1);
    // The four GF(2)-combinations of the basis are exactly the kernel.
    std::vector<F2Vector> span{F2Vector(3), basis[0], basis[1], basis[0] ^ basis[1]};
    for (const F2Vector& s : span) CHECK(std::count(kernel.begin(), kernel.end(), s) == 1);
    CHECK(F2Matrix::from_rows(basis).rank() == 2);
}

TEST_CASE("nullspace basis is independent and annihilated, with the right count") {
    SplitMix64 rng(13);
    for (int t = 0; t < 200; ++t) {
        size_t rows = rng.next() % 7, cols = 1 + rng.next() % 9;
        F2Matrix m = testutil::random_f2(rng, rows, cols);
        std::vector<F2Vector> basis = m.nullspace();
        CHECK(basis.size() == cols - m.rank());
        for (const F2Vector& x : basis)
            for (size_t r = 0; r < rows; ++r) CHECK(!m.row(r).dot(x));
        if (!basis.empty()) CHECK(F2Matrix::from_rows(basis).rank() == basis.size());
    }
}

TEST_CASE("symmetric zero-diagonal matrices have even rank") {
    SplitMix64 rng(14);
    for (int t = 0; t < 200; ++t) {
        size_t n = 1 + rng.next() % 12;
        F2Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                bool b = rng.next() & 1;
                m.set(i, j, b);
                m.set(j, i, b);
            }
        }
        CHECK(m.rank() % 2 == 0);
    }
}

TEST_CASE("matrix product and stacking") {
    F2Matrix m = F2Matrix::from_strings({"110", "011"});
    CHECK(F2Matrix::identity(2) * m == m);
    F2Matrix s = m.stacked(F2Matrix::from_strings({"101"}));
    CHECK(s.rows() == 3);
    CHECK(s.rank() == 2);  // third row is the sum of the first two
}
