#include <gtest/gtest.h>

#include "cgasym/ramanujan_q.hpp"
#include "cgasym/reference_tables.hpp"
#include "cgasym/remainder.hpp"
#include "oracles.hpp"

using namespace cgasym;

TEST(QExact, SmallValues) {
    EXPECT_EQ(q_exact(1), 1);
    EXPECT_EQ(q_exact(2), make_rat(3, 2));
    EXPECT_EQ(q_exact(3), make_rat(17, 9));
}

TEST(QExact, MatchesDirectSum) {
    for (long n = 1; n <= 60; ++n) EXPECT_EQ(q_exact(n), oracle::q_direct(n)) << n;
}

TEST(QExact, EgfIdentity) { EXPECT_TRUE(q_egf_check(40)); }

TEST(DNumeric, AgreesWithDirectR) {
    for (long n : {1L, 5L, 30L, 200L}) {
        const Certified d = d_numeric(n, 256);
        const Certified r = r_numeric(n, 256);
        const BigFloat dr = r.value - BigFloat(q_exact(n), 300);
        EXPECT_LT(abs(dr - d.value).to_double(), (d.error_bound + r.error_bound).to_double() * 2 + 1e-60) << n;
    }
}

TEST(DNumeric, BoundIsRelative) {
    const Certified d = d_numeric(1000, 128);
    EXPECT_LT((d.error_bound / abs(d.value)).to_double(), 1e-37);
}

TEST(DeltaLog, FirstCoefficients) {
    const auto c = delta_log_series(3);
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[1], make_rat(2, 3));
}

TEST(DAsym, MatchesClosedForm) {
    const AsymSeries d = d_asym(5);
    const auto& printed = printed_d_series();
    for (int s = 0; s <= 5; ++s) EXPECT_EQ(d.at(-2 * s), parse_symconst(printed[static_cast<std::size_t>(s)])) << s;
    for (int s = 0; s < 5; ++s) EXPECT_TRUE(d.at(-2 * s - 1).is_zero());
}

TEST(DAsym, RemainderScaling) {
    const long bits = 256;
    const auto ns = doubling_grid(64, 1024);
    std::vector<BigFloat> exact;
    for (long n : ns) exact.push_back(d_numeric(n, bits).value);
    for (const auto& r : remainder_scaling(d_asym(4), ns, exact, bits))
        EXPECT_TRUE(r.within(0.2)) << r.terms << " " << r.observed_exponent << " vs " << r.expected_exponent;
}

TEST(QAsym, Coefficients) {
    const AsymSeries q = q_asym(6);
    EXPECT_EQ(q.at(1), SymConst::xi(make_rat(1, 2)));
    EXPECT_EQ(q.at(0), SymConst(make_rat(-1, 3)));
    EXPECT_EQ(q.at(-1), SymConst::xi(make_rat(1, 24)));
    EXPECT_EQ(q.at(-2), SymConst(make_rat(-4, 135)));
    EXPECT_EQ(q.at(-3), SymConst::xi(make_rat(1, 576)));
    EXPECT_EQ(q.at(-4), SymConst(make_rat(8, 2835)));
    EXPECT_EQ(q.floor(), -5);
}

TEST(QAsym, RemainderScaling) {
    const long bits = 256;
    const auto ns = doubling_grid(128, 4096);
    std::vector<BigFloat> exact;
    for (long n : ns) exact.push_back(BigFloat(q_exact(n), bits));
    const auto rows = remainder_scaling(q_asym(7), ns, exact, bits);
    ASSERT_GE(rows.size(), 6U);
    for (const auto& r : rows)
        EXPECT_TRUE(r.within(0.2)) << r.terms << " " << r.observed_exponent << " vs " << r.expected_exponent;
}
