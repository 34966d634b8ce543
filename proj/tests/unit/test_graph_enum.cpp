#include <gtest/gtest.h>

#include "cgasym/graph_enum.hpp"
#include "cgasym/reference_tables.hpp"
#include "oracles.hpp"

using namespace cgasym;

TEST(GraphEgf, Coefficients) {
    const WPolySeries g = graph_egf(5, 2);
    // n = 3: (1+w)^3 / 3!
    EXPECT_EQ(g.coeff(3, 0), make_rat(1, 6));
    EXPECT_EQ(g.coeff(3, 2), make_rat(3, 6));
    EXPECT_EQ(g.coeff(3, 3), make_rat(1, 6));
    EXPECT_EQ(g.coeff(0, 0), 1);
}

TEST(ConnectedCounts, SmallValues) {
    const CountTable t = connected_counts(6, 3);
    EXPECT_EQ(t.at(2, 1), 1);
    EXPECT_EQ(t.at(3, 2), 3);
    EXPECT_EQ(t.at(3, 3), 1);
    EXPECT_EQ(t.at(4, 3), 16);
    EXPECT_EQ(t.at(4, 4), 15);
    EXPECT_EQ(t.at(4, 5), 6);
    EXPECT_EQ(t.at(4, 6), 1);
    EXPECT_EQ(t.at(5, 5), 222);
    EXPECT_EQ(t.at(6, 6), 3660);
    EXPECT_EQ(t.at(5, 6), 205);
    EXPECT_EQ(t.at(6, 7), 5700);
    EXPECT_EQ(t.at(4, 2), 0);
    EXPECT_THROW((void)t.at(4, 8), error);
}

TEST(ConnectedCounts, TreesAreCayley) {
    const CountTable t = connected_counts(30, 0);
    for (int n = 1; n <= 30; ++n) EXPECT_EQ(t.at(n, n - 1), ipow(n, static_cast<unsigned long>(std::max(n - 2, 0)))) << n;
}

TEST(ConnectedCounts, MatchesBruteForce) {
    for (int n = 1; n <= 6; ++n) {
        const auto brute = oracle::brute_force_connected(n);
        const int kmax = static_cast<int>(CountTable::max_edges(n)) - n;
        const CountTable t = connected_counts(n, std::max(kmax, -1));
        for (long m = 0; m <= CountTable::max_edges(n); ++m) {
            const auto it = brute.find(static_cast<int>(m));
            const BigInt want = it == brute.end() ? BigInt(0) : it->second;
            EXPECT_EQ(t.at(n, m), want) << "n=" << n << " m=" << m;
        }
    }
}

TEST(ConnectedCounts, RowSumsAreConnectedGraphTotals) {
    // all connected labelled graphs on n nodes: 1, 1, 4, 38, 728, 26704
    const std::vector<long> totals{1, 1, 4, 38, 728, 26704};
    const CountTable t = connected_counts(6, 15);
    for (int n = 1; n <= 6; ++n) {
        BigInt s = 0;
        for (long m = 0; m <= CountTable::max_edges(n); ++m) s += t.at(n, m);
        EXPECT_EQ(s, totals[static_cast<std::size_t>(n - 1)]) << n;
    }
}

TEST(WSeries, ClosedFormsMatchCounts) {
    for (int k = -1; k <= 1; ++k) EXPECT_EQ(w_series_closed_form(k, 14), w_series_from_counts(k, 14)) << k;
}

TEST(WSeries, Unicycles) {
    const Series w = w_series(0, 6);
    const std::vector<long> want{0, 0, 0, 1, 15, 222, 3660};
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(w[n] * Rat(factorial(static_cast<unsigned long>(n))), want[static_cast<std::size_t>(n)]);
}

TEST(WSeries, Bicycles) {
    const Series w = w_series(1, 6);
    EXPECT_EQ(w[4] * 24, 6);
    EXPECT_EQ(w[5] * 120, 205);
    EXPECT_EQ(w[6] * 720, 5700);
}

TEST(RecoverAk, MatchesPublishedConstants) {
    for (const auto& row : printed_ak_table().rows) {
        const AkPolynomial a = recover_ak(row.k);
        EXPECT_EQ(a.at_one(), parse_rat(row.cells[0])) << row.k;
        EXPECT_EQ(a.derivative_at_one(), parse_rat(row.cells[1])) << row.k;
        EXPECT_EQ(a.poly.degree(), 3 * row.k + 2) << row.k;
    }
}

TEST(RecoverAk, BicyclePolynomial) {
    // W_1 = (6T^4 - T^5) / (24 (1-T)^3)
    const AkPolynomial a = recover_ak(1);
    EXPECT_EQ(a.poly, RatPoly({0, 0, 0, 0, make_rat(1, 4), make_rat(-1, 24)}));
}

TEST(RecoverAk, Errors) {
    const Series w = w_series(2, 10);
    try {
        (void)recover_ak_at(2, 10, w);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::underdetermined_system);
    }
    try {
        (void)recover_ak_at(2, 3, w);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::residual_nonzero);
    }
}
