#pragma once

#include <cstddef>
#include <vector>

#include "cgasym/asym_series.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/series.hpp"

namespace cgasym {

/// B_0 .. B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0, with B_1 = -1/2.
inline std::vector<Rat> bernoulli_table(int m) {
    if (m < 0) throw error(errc::invalid_argument, "negative Bernoulli index");
    std::vector<Rat> b(static_cast<std::size_t>(m) + 1);
    b[0] = 1;
    for (int k = 1; k <= m; ++k) {
        Rat acc = 0;
        for (int j = 0; j < k; ++j) acc += Rat(binomial(k + 1, j)) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(k)] = -acc / (k + 1);
    }
    return b;
}

inline Rat bernoulli(int m) { return bernoulli_table(m).back(); }

/// log Gamma tail sum_{m>=1} B_{2m} / (2m (2m-1)) x^(2m-1), x = 1/n, to order K.
inline Series log_gamma_tail(int order) {
    const auto b = bernoulli_table(order + 1);
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    for (int p = 1; p <= order; p += 2) {
        const int m2 = p + 1; // 2m
        c[static_cast<std::size_t>(p)] = b[static_cast<std::size_t>(m2)] / (m2 * (m2 - 1));
    }
    return Series(std::move(c));
}

/// n! e^n / n^n = xi n^(1/2) (1 + 1/(12n) + 1/(288n^2) - ...), to depth J on the
/// half-integer grid (only even offsets are nonzero).
inline AsymSeries stirling_series(int depth) {
    if (depth < 0) throw error(errc::invalid_argument, "negative depth");
    const int order = depth / 2;
    const Series rel = ps_exp(log_gamma_tail(order));
    std::vector<SymConst> v(static_cast<std::size_t>(depth) + 1);
    for (int i = 0; i <= order; ++i) v[static_cast<std::size_t>(2 * i)] = SymConst::xi(rel[i]);
    return AsymSeries(1, std::move(v));
}

} // namespace cgasym
