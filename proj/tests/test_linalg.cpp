#include <catch2/catch_amalgamated.hpp>

#include "hypercount/linalg.hpp"
#include "hypercount/rng.hpp"

using namespace hypercount;

namespace {

QMat random_matrix(SplitMix64& rng, std::size_t r, std::size_t c, int bound) {
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = BigRat(rng.range(-bound, bound));
    return m;
}

} // namespace

TEST_CASE("rref, rank, kernel") {
    QMat m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(1, 2) = 6;
    REQUIRE(rank(m) == 1);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        BigRat s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += m(0, j) * v[j];
        REQUIRE(s == 0);
    }
}

TEST_CASE("fraction-free rank agrees with rational rank") {
    SplitMix64 rng(5);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        IMat im(r, c);
        QMat qm(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                auto v = rng.range(-4, 4);
                im(i, j) = v;
                qm(i, j) = v;
            }
        REQUIRE(rank_fraction_free(im) == rank(qm));
    }
}

TEST_CASE("kernel vectors satisfy the system") {
    SplitMix64 rng(9);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(5);
        QMat m = random_matrix(rng, r, c, 5);
        auto ker = kernel_basis(m);
        REQUIRE(ker.size() == c - rank(m));
        for (const auto& v : ker) {
            for (std::size_t i = 0; i < r; ++i) {
                BigRat s = 0;
                for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
                REQUIRE(s == 0);
            }
        }
    }
}

TEST_CASE("inverse and determinant") {
    SplitMix64 rng(3);
    int built = 0;
    while (built < 50) {
        QMat m = random_matrix(rng, 3, 3, 5);
        if (determinant(m) == 0) continue;
        ++built;
        QMat inv = inverse(m);
        REQUIRE(m * inv == QMat::identity(3));
        REQUIRE(determinant(inv) * determinant(m) == 1);
    }
    QMat sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    REQUIRE_THROWS_AS(inverse(sing), DomainError);
    REQUIRE(determinant(sing) == 0);
}

TEST_CASE("span membership") {
    std::vector<std::vector<BigRat>> span{{BigRat(1), BigRat(0), BigRat(1)}, {BigRat(0), BigRat(1), BigRat(0)}};
    REQUIRE(in_span(span, {BigRat(2), BigRat(3), BigRat(2)}));
    REQUIRE_FALSE(in_span(span, {BigRat(1), BigRat(0), BigRat(0)}));
    REQUIRE(in_span({}, {BigRat(0), BigRat(0)}));
    REQUIRE_FALSE(in_span({}, {BigRat(1), BigRat(0)}));
}

TEST_CASE("primitive integer vectors") {
    auto v = primitive_integer_vector({BigRat(1, 2), BigRat(-3, 4), BigRat(0)});
    REQUIRE(v == std::vector<BigInt>{2, -3, 0});
    auto w = primitive_integer_vector({BigRat(-2), BigRat(4)});
    REQUIRE(w == std::vector<BigInt>{1, -2});
}
