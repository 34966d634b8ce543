#include <gtest/gtest.h>

#include "cgasym/fitting.hpp"
#include "cgasym/reference_tables.hpp"

using namespace cgasym;

namespace {

BigFloat relerr(const BigFloat& est, const SymConst& exact, long bits) { return relative_error(est, exact.evaluate(bits)); }

} // namespace

TEST(LsqFit, UnicycleLeadingCoefficient) {
    const FitResult r = lsq_fit(0, 100, 1000, 6, 256);
    EXPECT_EQ(r.npoints, 901);
    EXPECT_LT(relerr(r.estimates[0], SymConst::xi(make_rat(1, 4)), 256).to_double(), 1e-4);
    EXPECT_GE(r.residual_rms.sign(), 0);
}

TEST(LsqFit, BicycleSecondCoefficient) {
    const FitResult r = lsq_fit(1, 100, 1000, 6, 256);
    EXPECT_LT(relerr(r.estimates[1], SymConst::xi(make_rat(-7, 24)), 256).to_double(), 1e-3);
}

TEST(LsqFit, InsufficientPoints) {
    try {
        (void)lsq_fit(0, 3, 5, 5, 256);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::insufficient_points);
    }
}

TEST(LsqFit, RankDeficientIsIllConditioned) {
    std::vector<BigFloat> x(5, BigFloat(0.5, 128)), y(5, BigFloat(1L, 128));
    try {
        (void)lsq_fit_data(x, y, 2, 128);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::ill_conditioned);
    }
}

TEST(LsqFit, HighDegreeTripsConditionLimit) {
    std::vector<BigFloat> x, y;
    for (long n = 100; n <= 1000; n += 10) {
        x.push_back(BigFloat(1L, 64) / sqrt(BigFloat(n, 64)));
        y.push_back(BigFloat(1L, 64));
    }
    EXPECT_THROW((void)lsq_fit_data(x, y, 40, 64), error);
}

TEST(LsqFit, SyntheticDataRecoversCoefficients) {
    const long bits = 256;
    const ExpansionTable c = asym_c(1, 6);
    std::vector<BigFloat> x, y;
    for (long n = 100; n <= 400; ++n) {
        const BigFloat nf(n, bits);
        x.push_back(BigFloat(1L, bits) / sqrt(nf));
        y.push_back(c.series.evaluate(nf));
    }
    const FitResult r = lsq_fit_data(x, y, 6, bits);
    for (int j = 0; j <= 6; ++j) {
        const SymConst want = c.column(j);
        const BigFloat err = want.is_zero() ? abs(r.estimates[j]) : relerr(r.estimates[j], want, bits);
        EXPECT_LT(err.to_double(), 1e-32) << j;
    }
}

TEST(LsqFit, PowerWeightingStillRecovers) {
    const FitResult r = lsq_fit(0, 100, 600, 6, 256, Weighting::power, false);
    EXPECT_LT(relerr(r.estimates[0], SymConst::xi(make_rat(1, 4)), 256).to_double(), 1e-4);
}

TEST(LsqFit, ConvergesWithRange) {
    for (int k = 0; k <= 2; ++k) {
        const ExpansionTable c = asym_c(k, 2);
        const FitResult small = lsq_fit(k, 100, 250, 6, 256, Weighting::uniform, false);
        const FitResult large = lsq_fit(k, 100, 1000, 6, 256, Weighting::uniform, false);
        for (int j = 0; j < 3; ++j)
            EXPECT_LT(relerr(large.estimates[j], c.column(j), 256).to_double(),
                      relerr(small.estimates[j], c.column(j), 256).to_double())
                << k << " " << j;
    }
}

TEST(Reconstruct, Examples) {
    const auto a = reconstruct_symbolic(BigFloat::parse("0.6266570687", 256), BigInt(1000000));
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(*a, SymConst::xi(make_rat(1, 4)));
    const auto b = reconstruct_symbolic(BigFloat::parse("0.2083333333", 256), BigInt(1000000));
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(*b, SymConst(make_rat(5, 24)));
    EXPECT_FALSE(reconstruct_symbolic(BigFloat::parse("0.123456", 256), BigInt(10)).has_value());
}

TEST(Reconstruct, RationalWinsTies) {
    const auto z = reconstruct_symbolic(BigFloat(0L, 128), BigInt(10));
    ASSERT_TRUE(z.has_value());
    EXPECT_TRUE(z->is_zero());
}

TEST(Reconstruct, RoundTripsEveryTableEntry) {
    const long bits = 256;
    const BigFloat tol = power_of_two(-150, bits);
    for (const PrintedTable* t : {&printed_conjectured_table(), &printed_connected_table(), &printed_total_table(),
                                  &printed_probability_table(), &printed_literature_table(), &printed_dq_table()}) {
        for (const auto& row : t->rows)
            for (const auto& cell : row.cells) {
                if (cell.empty()) continue;
                const SymConst s = parse_symconst(cell);
                if (s.xi_part().get_den() > 1000000 || s.rational_part().get_den() > 1000000) continue;
                const auto r = reconstruct_symbolic(s.evaluate(bits), BigInt(1000000), tol);
                ASSERT_TRUE(r.has_value()) << cell;
                EXPECT_EQ(*r, s) << cell;
            }
    }
}

TEST(Reconstruct, ConfidenceFlagsWeakMatches) {
    const auto strong = reconstruct_symbolic_detailed(BigFloat::parse("0.20833333333333", 256), BigInt(1000000),
                                                      BigFloat(1e-13, 256));
    ASSERT_TRUE(strong);
    EXPECT_TRUE(strong->confident());
    const auto weak = reconstruct_symbolic_detailed(BigFloat::parse("0.0014", 256), BigInt(1000000), BigFloat(1e-4, 256));
    ASSERT_TRUE(weak);
    EXPECT_FALSE(weak->confident());
}
