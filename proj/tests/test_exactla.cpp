#include <gmpxx.h>
#include <gtest/gtest.h>

#include <random>

#include "liemod/error.hpp"
#include "liemod/linalg.hpp"
#include "support.hpp"

using namespace liemod;
using liemod::support::random_matrix;
using liemod::support::random_vec;

namespace {

// Textbook elimination on raw mpq values: forward pass, then back substitution.
// Free variables are set to zero. Returns false when inconsistent.
bool naive_solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, std::vector<mpq_class>& x) {
    std::size_t n = a.size(), m = n ? a[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < n; ++c) {
        std::size_t p = row;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        for (std::size_t i = row + 1; i < n; ++i) {
            mpq_class f = a[i][c] / a[row][c];
            for (std::size_t j = c; j < m; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (b[i] != 0) return false;
    x.assign(m, 0);
    for (std::size_t k = row; k-- > 0;) {
        auto c = static_cast<std::size_t>(pivot_col[k]);
        mpq_class s = b[k];
        for (std::size_t j = c + 1; j < m; ++j) s -= a[k][j] * x[j];
        x[c] = s / a[k][c];
    }
    return true;
}

}  // namespace

TEST(Rational, LowestTerms) {
    Rational q(6, -4);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7").str(), "-7");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, OverflowPromotesToBig) {
    Rational big(INT64_MAX);
    Rational sq = big * big;
    mpq_class expect = mpq_class(INT64_MAX) * mpq_class(INT64_MAX);
    EXPECT_EQ(sq.to_mpq(), expect);
    Rational back = sq / big;
    EXPECT_EQ(back, big);
    EXPECT_EQ(back.str(), std::to_string(INT64_MAX));
    Rational tiny(1, INT64_MAX);
    EXPECT_EQ((tiny * tiny * big * big), Rational(1));
}

TEST(Rational, MatchesGmpOnRandomOps) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-(1LL << 40), 1LL << 40);
    for (int it = 0; it < 2000; ++it) {
        long a = d(rng), b = d(rng) | 1, c = d(rng), e = d(rng) | 1;
        Rational x(a, b), y(c, e);
        mpq_class mx{mpz_class{a}, mpz_class{b}}, my{mpz_class{c}, mpz_class{e}};
        mx.canonicalize();
        my.canonicalize();
        EXPECT_EQ((x + y).to_mpq(), mx + my);
        EXPECT_EQ((x - y).to_mpq(), mx - my);
        EXPECT_EQ((x * y).to_mpq(), mx * my);
        if (!y.is_zero()) EXPECT_EQ((x / y).to_mpq(), mx / my);
        EXPECT_EQ(x < y, mx < my);
    }
}

TEST(SolveLinear, Identity) {
    auto s = solve_linear(Matrix::identity(2), Vec{1, 2});
    ASSERT_TRUE(s.consistent);
    EXPECT_EQ(s.particular, (Vec{1, 2}));
    EXPECT_TRUE(s.kernel.empty());
}

TEST(SolveLinear, ZeroMap) {
    auto s = solve_linear(Matrix::zero(2, 2), Vec{0, 0});
    ASSERT_TRUE(s.consistent);
    EXPECT_EQ(s.particular, (Vec{0, 0}));
    EXPECT_EQ(s.kernel.size(), 2u);
}

TEST(SolveLinear, RankOneMatchesNaiveEliminator) {
    Matrix a{{1, 2}, {2, 4}};
    auto s = solve_linear(a, Vec{1, 2});
    ASSERT_TRUE(s.consistent);
    EXPECT_EQ(s.particular, (Vec{1, 0}));
    ASSERT_EQ(s.kernel.size(), 1u);
    EXPECT_EQ(s.kernel[0], (Vec{-2, 1}));

    std::vector<mpq_class> x;
    ASSERT_TRUE(naive_solve({{1, 2}, {2, 4}}, {1, 2}, x));
    EXPECT_EQ(x[0], 1);
    EXPECT_EQ(x[1], 0);
}

TEST(SolveLinear, Inconsistent) {
    auto s = solve_linear(Matrix{{1, 2}, {2, 4}}, Vec{1, 3});
    EXPECT_FALSE(s.consistent);
}

TEST(SolveLinear, DimensionMismatch) {
    try {
        solve_linear(Matrix::identity(2), Vec{1, 2, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(Invert, Examples) {
    EXPECT_EQ(invert(Matrix::identity(3)), Matrix::identity(3));
    Matrix a{{1, 1}, {0, 1}};
    Matrix ai = invert(a);
    EXPECT_EQ(ai, (Matrix{{1, -1}, {0, 1}}));
    EXPECT_EQ(a * ai, Matrix::identity(2));
    try {
        invert(Matrix{{1, 2}, {2, 4}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Singular);
        EXPECT_TRUE(is_zero(Matrix{{1, 2}, {2, 4}} * e.defect()));
    }
}

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel(Matrix::zero(2, 2)).size(), 2u);
    EXPECT_TRUE(kernel(Matrix::identity(2)).empty());
    auto k = kernel(Matrix{{1, 2}, {2, 4}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (Vec{-2, 1}));
    EXPECT_TRUE(is_zero(Matrix{{1, 2}, {2, 4}} * k[0]));
}

TEST(ExactLaProperties, RandomSystems) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int it = 0; it < 300; ++it) {
        std::size_t r = dim(rng), c = dim(rng);
        Matrix a = random_matrix(rng, r, c, -3, 3);
        // Sparsify half of the time so rank deficiency is common.
        if (it % 2)
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if ((i + j + it) % 3 == 0) a(i, j) = 0;
        Vec x = random_vec(rng, c, -4, 4);
        Vec b = a * x;
        auto s = solve_linear(a, b);
        ASSERT_TRUE(s.consistent);
        EXPECT_EQ(a * s.particular, b);

        std::vector<std::vector<mpq_class>> raw(r, std::vector<mpq_class>(c));
        std::vector<mpq_class> rb(r), nx;
        for (std::size_t i = 0; i < r; ++i) {
            rb[i] = b[i].to_mpq();
            for (std::size_t j = 0; j < c; ++j) raw[i][j] = a(i, j).to_mpq();
        }
        ASSERT_TRUE(naive_solve(raw, rb, nx));

        auto k = kernel(a);
        EXPECT_EQ(rank(a) + k.size(), c);
        EXPECT_TRUE(are_independent(k, c));
        for (const auto& v : k) EXPECT_TRUE(is_zero(a * v));

        if (r == c && is_invertible(a)) {
            Matrix ai = invert(a);
            EXPECT_EQ(ai * a, Matrix::identity(r));
            EXPECT_EQ(a * ai, Matrix::identity(r));
        }
    }
}
