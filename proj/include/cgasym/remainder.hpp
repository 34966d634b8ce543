#pragma once

// Remainder scaling: truncating an expansion after t terms should leave an
// error that decays like the first omitted power of n.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "cgasym/asym_series.hpp"
#include "cgasym/bigfloat.hpp"
#include "cgasym/errors.hpp"

namespace cgasym {

struct ScalingRow {
    int terms = 0;                     // coefficients 0..terms-1 are summed
    int next_half_exponent = 0;        // first omitted nonzero term is n^(e/2)
    std::vector<BigFloat> errors;      // exact - partial sum, per n
    double observed_exponent = 0.0;    // log-log slope over the last two n
    double expected_exponent = 0.0;    // e/2
    BigFloat coefficient_estimate;     // error * n^(-e/2) at the largest n

    /// Relative to |e/2|, but never tighter than rel * 1/2 so that an n^0
    /// remainder still has a tolerance.
    bool within(double rel) const {
        return std::abs(observed_exponent - expected_exponent) <= rel * std::max(std::abs(expected_exponent), 0.5);
    }
};

/// One row per truncation whose first omitted term lies inside the series
/// depth. `exact[i]` is the normalized exact value at `ns[i]`, with ns
/// increasing.
inline std::vector<ScalingRow> remainder_scaling(const AsymSeries& s, const std::vector<long>& ns,
                                                 const std::vector<BigFloat>& exact, long bits) {
    if (ns.size() < 2 || ns.size() != exact.size())
        throw error(errc::invalid_argument, "remainder scaling needs at least two points with exact values");
    std::vector<ScalingRow> rows;
    for (int t = 1; t <= s.depth(); ++t) {
        int next = -1;
        for (int j = t; j <= s.depth(); ++j)
            if (!s[j].is_zero()) {
                next = j;
                break;
            }
        if (next < 0) break;
        ScalingRow r;
        r.terms = t;
        r.next_half_exponent = s.lead() - next;
        r.expected_exponent = r.next_half_exponent / 2.0;
        for (std::size_t i = 0; i < ns.size(); ++i) r.errors.push_back(exact[i] - s.evaluate(BigFloat(ns[i], bits), t));
        const std::size_t a = ns.size() - 2, b = ns.size() - 1;
        const BigFloat ratio = abs(r.errors[b]) / abs(r.errors[a]);
        r.observed_exponent = log(ratio).to_double() / std::log(static_cast<double>(ns[b]) / static_cast<double>(ns[a]));
        const BigFloat nb(ns[b], bits);
        r.coefficient_estimate = r.errors[b] / pow(sqrt(nb), static_cast<long>(r.next_half_exponent));
        rows.push_back(std::move(r));
    }
    return rows;
}

/// n = 128, 256, ..., 4096
inline std::vector<long> doubling_grid(long from = 128, long to = 4096) {
    std::vector<long> ns;
    for (long n = from; n <= to; n *= 2) ns.push_back(n);
    return ns;
}

} // namespace cgasym
