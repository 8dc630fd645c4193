#include <random>

#include "doctest.h"
#include "rspin/matrix.hpp"

using namespace rspin;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int order, int zero_pct) {
    std::uniform_int_distribution<int> v(-4, 4), pct(0, 99), k(0, order - 1);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (pct(rng) >= zero_pct) m(i, j) = CycScalar(v(rng)) * CycScalar::zeta(order, k(rng));
    return m;
}

}  // namespace

TEST_CASE("kernel, image and rank-nullity") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix m = random_matrix(rng, r, c, 5, 50);
        Matrix k = kernel_basis(m);
        Matrix im = image_basis(m);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
        CHECK(k.cols() + im.cols() == c);
        CHECK(rank(hstack(im, m)) == im.cols());
    }
}

TEST_CASE("inverse and solve") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 4, 4, 3, 20);
        if (rank(m) < 4) {
            CHECK_THROWS_AS(inverse(m), DivisionByZero);
            continue;
        }
        Matrix inv = inverse(m);
        CHECK(m * inv == Matrix::identity(4));
        Matrix b = random_matrix(rng, 4, 2, 3, 0);
        auto x = solve(m, b);
        REQUIRE(x);
        CHECK(m * *x == b);
    }
    Matrix a(2, 1);
    a(0, 0) = CycScalar(1);
    Matrix b(2, 1);
    b(1, 0) = CycScalar(1);
    CHECK_FALSE(solve(a, b));
}

TEST_CASE("kronecker mixed product") {
    std::mt19937 rng(5);
    Matrix a = random_matrix(rng, 2, 3, 4, 0), b = random_matrix(rng, 3, 2, 4, 0);
    Matrix c = random_matrix(rng, 3, 2, 4, 0), d = random_matrix(rng, 2, 2, 4, 0);
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
}
