#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schfin/linalg.hpp"

#include <random>

using namespace schfin;

namespace {

Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, int r, int c) {
    std::uniform_int_distribution<int> v(-4, 4);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = v(rng);
    return m;
}

} // namespace

TEST_CASE("rank and kernel on a known matrix") {
    Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    Matrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    // Kernel vector must be annihilated.
    std::vector<Rational> v(3);
    for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] = k.at(i, 0);
    for (Rational x : m.apply(v)) CHECK(x == 0);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(rng, 4, 6);
        Matrix k = kernel_basis(m);
        CHECK(rank(m) + k.cols() == m.cols());
        for (int c = 0; c < k.cols(); ++c) {
            std::vector<Rational> v(6);
            for (int i = 0; i < 6; ++i) v[static_cast<std::size_t>(i)] = k.at(i, c);
            for (Rational x : m.apply(v)) CHECK(x == 0);
        }
    }
}

TEST_CASE("solve finds consistent solutions and rejects inconsistent systems") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(rng, 4, 3);
        std::vector<Rational> x(3);
        std::uniform_int_distribution<int> v(-3, 3);
        for (auto& e : x) e = v(rng);
        auto sol = solve(m, m.apply(x));
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == m.apply(x));
    }

    Matrix m = from_rows({{1, 0}, {1, 0}});
    auto none = solve(m, {Rational(0), Rational(1)});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("quotient basis coordinates") {
    // kernel = span(e1, e2, e3) of Q^4 written as columns; image = span(e1 + e2).
    Matrix kernel(4, 3);
    kernel.at(0, 0) = 1;
    kernel.at(1, 1) = 1;
    kernel.at(2, 2) = 1;
    Matrix image(4, 1);
    image.at(0, 0) = 1;
    image.at(1, 0) = 1;
    QuotientBasis q = quotient_basis(kernel, image);
    CHECK(q.dim() == 2);
    // e1 = (e1 + e2) - e2: class of e1 equals minus the class of e2.
    std::vector<Rational> e1{Rational(1), Rational(0), Rational(0), Rational(0)};
    std::vector<Rational> e2{Rational(0), Rational(1), Rational(0), Rational(0)};
    auto c1 = q.coordinates(e1);
    auto c2 = q.coordinates(e2);
    REQUIRE(c1.size() == 2);
    for (std::size_t i = 0; i < c1.size(); ++i) CHECK(c1[i] == -c2[i]);
}

TEST_CASE("exact arithmetic survives awkward pivots") {
    // A Hilbert-like matrix has full rank; floating point would struggle.
    Matrix h(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h.at(i, j) = Rational(1, i + j + 1);
    CHECK(rank(h) == 4);
    CHECK(kernel_basis(h).cols() == 0);
}
