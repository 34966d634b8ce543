#pragma once

// Independent reference computations for the tests. None of these call the
// library code paths they are used to check.

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "cgasym/rational.hpp"

namespace oracle {

using cgasym::BigInt;
using cgasym::Rat;

/// Connected labelled graphs on n <= 7 nodes by edge count, by running over
/// every edge subset and checking connectivity with union-find.
inline std::map<int, BigInt> brute_force_connected(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    const int e = static_cast<int>(edges.size());
    std::map<int, BigInt> out;
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
                                                              parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        int comps = n, m = 0;
        for (int b = 0; b < e; ++b) {
            if (!((mask >> b) & 1U)) continue;
            ++m;
            const int a = find(edges[static_cast<std::size_t>(b)].first);
            const int c = find(edges[static_cast<std::size_t>(b)].second);
            if (a != c) {
                parent[static_cast<std::size_t>(a)] = c;
                --comps;
            }
        }
        if (comps == 1) out[m] += 1;
    }
    return out;
}

/// Bernoulli numbers by the Akiyama-Tanigawa algorithm, returned with the
/// B_1 = -1/2 convention.
inline std::vector<Rat> akiyama_tanigawa(int m) {
    std::vector<Rat> a(static_cast<std::size_t>(m) + 1), b(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        a[static_cast<std::size_t>(i)] = cgasym::make_rat(1, i + 1);
        for (int j = i; j >= 1; --j)
            a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
        b[static_cast<std::size_t>(i)] = a[0];
    }
    if (m >= 1) b[1] = -b[1];
    return b;
}

/// Q(n) = sum_k prod_{i<k} (1 - i/n), summed term by term.
inline Rat q_direct(long n) {
    Rat sum = 0, term = 1;
    for (long k = 1; k <= n; ++k) {
        term *= cgasym::make_rat(n - k + 1, n);
        sum += term;
    }
    return sum;
}

/// n! [z^n] T^r = r n^(n-r-1) n!/(n-r)! by Lagrange inversion, as a Rat.
inline Rat tree_power_coeff(long n, long r) {
    if (r == 0) return n == 0 ? 1 : 0;
    if (r > n) return 0;
    BigInt fall = 1;
    for (long i = 0; i < r; ++i) fall *= n - i;
    return Rat(BigInt(r) * fall) * cgasym::rpow(Rat(n), n - r - 1);
}

} // namespace oracle
