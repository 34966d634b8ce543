#include <random>

#include <gtest/gtest.h>

#include "cgasym/series.hpp"

using namespace cgasym;

namespace {

Series random_series(std::mt19937& rng, int order, bool unit_constant = false) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = make_rat(num(rng), den(rng));
    if (unit_constant) c[0] = 1;
    return Series(std::move(c));
}

} // namespace

TEST(Series, DifferenceOfSquares) {
    const Series a({1, 1}, 4), b({1, -1}, 4);
    EXPECT_EQ(a * b, Series({1, 0, -1}, 4));
}

TEST(Series, AdditiveIdentity) {
    const Series a({3, make_rat(1, 2), -7}, 5);
    EXPECT_EQ(a + Series::zero(5), a);
}

TEST(Series, HandExpansion) {
    const Series a({0, 1, 1}, 6);
    EXPECT_EQ(a * a, Series({0, 0, 1, 2, 1}, 6));
}

TEST(Series, MismatchedOrdersTruncate) {
    const Series a({1, 2, 3, 4}, 3), b({1, 1}, 1);
    const Series s = a + b;
    EXPECT_EQ(s.order(), 1);
    EXPECT_EQ(s[1], 3);
    EXPECT_EQ((a * b).order(), 1);
    EXPECT_THROW((void)s[2], error);
}

TEST(Series, ScaleAndSubtract) {
    const Series a({1, 2, 3}, 2);
    EXPECT_EQ(Rat(2) * a - a, a);
}

TEST(Series, Mercator) {
    const int n = 12;
    const Series l = ps_log(Series({1, 1}, n));
    EXPECT_EQ(l[0], 0);
    for (int j = 1; j <= n; ++j) EXPECT_EQ(l[j], make_rat(j % 2 ? 1 : -1, j)) << j;
}

TEST(Series, LogOfOne) { EXPECT_EQ(ps_log(Series::constant(1, 7)), Series::zero(7)); }

TEST(Series, LogRequiresUnitConstant) {
    try {
        (void)ps_log(Series({2, 1}, 3));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::constant_term_not_one);
    }
}

TEST(Series, ExpCoefficients) {
    const int n = 15;
    const Series e = ps_exp(Series::variable(n));
    for (int j = 0; j <= n; ++j) EXPECT_EQ(e[j], make_rat(BigInt(1), factorial(static_cast<unsigned long>(j))));
    EXPECT_EQ(ps_exp(Series::zero(5)), Series::constant(1, 5));
}

TEST(Series, ExpRequiresZeroConstant) {
    try {
        (void)ps_exp(Series({1, 1}, 3));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::nonzero_constant_term);
    }
}

TEST(Series, ExpLogInverse) {
    EXPECT_EQ(ps_exp(ps_log(Series({1, 1}, 10))), Series({1, 1}, 10));
    EXPECT_EQ(ps_log(ps_exp(Series::variable(10))), Series::variable(10));
}

TEST(Series, PowMatchesBinomial) {
    const Series p = ps_pow(Series({1, 1}, 8), 5);
    for (int j = 0; j <= 8; ++j) EXPECT_EQ(p[j], Rat(binomial(5, j)));
    const Series inv = ps_pow(Series({1, -1}, 8), -1);
    for (int j = 0; j <= 8; ++j) EXPECT_EQ(inv[j], 1);
    const Series inv3 = ps_pow(Series({1, -1}, 8), -3);
    for (int j = 0; j <= 8; ++j) EXPECT_EQ(inv3[j], Rat(binomial(j + 2, 2)));
}

TEST(Series, PowWithZeroConstant) {
    const Series z2 = ps_pow(Series({0, 1, 1}, 6), 3);
    EXPECT_EQ(z2, Series({0, 0, 0, 1, 3, 3, 1}, 6));
    try {
        (void)ps_pow(Series({0, 1}, 4), -1);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::noninvertible_constant_term);
    }
}

TEST(Series, Compose) {
    // exp(z) o (z + z^2) against exp(z) exp(z^2)
    const int n = 10;
    const Series inner({0, 1, 1}, n);
    const Series lhs = ps_compose(ps_exp(Series::variable(n)), inner);
    const Series rhs = ps_exp(Series::variable(n)) * ps_exp(Series({0, 0, 1}, n));
    EXPECT_EQ(lhs, rhs);
    try {
        (void)ps_compose(lhs, Series({1, 1}, n));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::nonzero_inner_constant);
    }
}

TEST(Series, TreeFunctionCoefficients) {
    const int n = 20;
    const Series t = tree_function(n);
    EXPECT_EQ(t[0], 0);
    for (int j = 1; j <= n; ++j)
        EXPECT_EQ(t[j], make_rat(ipow(j, static_cast<unsigned long>(j - 1)), factorial(static_cast<unsigned long>(j))));
}

TEST(Series, TreeFunctionFixedPoint) {
    const int n = 200;
    const Series t = tree_function(n);
    EXPECT_EQ(t, shift_up(ps_exp(t), 1).truncated(n));
}

TEST(SeriesProperty, RingLaws) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 8;
        const Series a = random_series(rng, n), b = random_series(rng, n), c = random_series(rng, n);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Series::zero(n));
        EXPECT_EQ(a * Series::constant(1, n), a);
    }
}

TEST(SeriesProperty, ExpLogRoundTrip) {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        const Series a = random_series(rng, 9, true);
        EXPECT_EQ(ps_exp(ps_log(a)), a);
        EXPECT_EQ(ps_log(a * a), Rat(2) * ps_log(a));
        EXPECT_EQ(ps_pow(a, 3), a * a * a);
        EXPECT_EQ(ps_pow(a, -2) * a * a, Series::constant(1, 9));
        EXPECT_EQ(ps_div(a * a, a), a);
    }
}

TEST(SeriesProperty, DerivativeIntegral) {
    std::mt19937 rng(99);
    const Series a = random_series(rng, 10);
    const Series back = integral(derivative(a));
    for (int j = 1; j <= back.order(); ++j) EXPECT_EQ(back[j], a[j]);
}
