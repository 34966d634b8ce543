#pragma once

// Ramanujan's Q-function
//
//     Q(n) = sum_{k>=1} n(n-1)...(n-k+1) / n^k,
//     R(n) = sum_{k>=0} n^k / ((n+1)...(n+k)),
//
// with Q + R = n! e^n / n^n and the smooth correction D = R - Q.

#include <cstddef>
#include <string>
#include <vector>

#include "cgasym/asym_series.hpp"
#include "cgasym/bigfloat.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/series.hpp"
#include "cgasym/stirling.hpp"

namespace cgasym {

/// Q(n) n^n = sum_{k=1}^{n} n^(falling k) n^(n-k), an integer.
inline BigInt q_scaled(long n) {
    if (n < 1) throw error(errc::invalid_argument, "Q(n) needs n >= 1");
    BigInt power = ipow(n, static_cast<unsigned long>(n)); // n^(n-k) for k = 0
    BigInt fall = 1;
    BigInt sum = 0;
    for (long k = 1; k <= n; ++k) {
        fall *= n - k + 1;
        mpz_divexact_ui(power.get_mpz_t(), power.get_mpz_t(), static_cast<unsigned long>(n));
        sum += fall * power;
    }
    return sum;
}

inline Rat q_exact(long n) { return make_rat(q_scaled(n), ipow(n, static_cast<unsigned long>(n))); }

/// Checks sum Q(n) n^(n-1) z^n / n! = -log(1 - T(z)) coefficient-wise through z^N.
inline bool q_egf_check(int order) {
    if (order < 1) throw error(errc::invalid_argument, "order must be >= 1");
    const Series t = tree_function(order);
    const Series rhs = -ps_log(Series::constant(1, order) - t);
    if (sgn(rhs[0]) != 0) throw error(errc::identity_violation, "constant term of -log(1 - T) is nonzero");
    for (int n = 1; n <= order; ++n) {
        const Rat lhs = q_exact(n) * Rat(ipow(n, static_cast<unsigned long>(n - 1))) / Rat(factorial(static_cast<unsigned long>(n)));
        if (lhs != rhs[n])
            throw error(errc::identity_violation, "coefficient of z^" + std::to_string(n) + ": " + to_string(lhs) +
                                                      " != " + to_string(rhs[n]));
    }
    return true;
}

/// A numeric value with an absolute error bound.
struct Certified {
    BigFloat value;
    BigFloat error_bound;
};

/// n! e^n / n^n at `bits` working precision; relative error below 2^(4 - bits).
inline BigFloat stirling_ratio_numeric(long n, long bits) {
    const Rat ratio = make_rat(factorial(static_cast<unsigned long>(n)), ipow(n, static_cast<unsigned long>(n)));
    return BigFloat(ratio, bits) * exp(BigFloat(n, bits));
}

/// D(n) = n! e^n / n^n - 2 Q(n) to `bits` bits, with a certified error
/// bound from the e^n evaluation and the cancellation. The working precision
/// is raised until the bound is below 2^(-bits) |D|.
inline Certified d_numeric(long n, long bits = default_precision_bits) {
    if (n < 1) throw error(errc::invalid_argument, "D(n) needs n >= 1");
    BigFloat::check_precision(bits);
    const Rat q = q_exact(n);
    for (long work = bits + 64; work <= 8 * bits + 256; work *= 2) {
        const BigFloat s = stirling_ratio_numeric(n, work);
        const BigFloat d = s - BigFloat(Rat(2 * q), work);
        // Three roundings in s (conversion, exp, product) plus one each for
        // 2Q and the difference; each is at most 2^-work relative.
        const BigFloat bound = ldexp(s * BigFloat(8L, work) + abs(d), -work);
        if (bound <= ldexp(abs(d), -bits)) {
            BigFloat v(bits);
            mpfr_set(v.get(), d.get(), MPFR_RNDN);
            return {v, bound + ldexp(abs(d), -bits)};
        }
    }
    throw error(errc::precision_unachievable, "D(" + std::to_string(n) + ") to " + std::to_string(bits) + " bits");
}

/// R(n) by direct summation. Summing stops once the term falls below
/// 2^(-bits-8); the remaining tail is bounded by term * n / (k + 1)
/// (geometric with ratio n / (n + k + 1)), doubled.
inline Certified r_numeric(long n, long bits = default_precision_bits) {
    if (n < 1) throw error(errc::invalid_argument, "R(n) needs n >= 1");
    BigFloat::check_precision(bits);
    const long work = bits + 32;
    const BigFloat cutoff = power_of_two(-bits - 8, work);
    BigFloat term(1L, work);
    BigFloat sum(1L, work);
    const BigFloat nf(n, work);
    long k = 0;
    while (term >= cutoff) {
        ++k;
        term = term * nf / BigFloat(n + k, work);
        sum += term;
    }
    const BigFloat tail = ldexp(term * nf / BigFloat(k + 1, work), 1);
    // Rounding: at most 3 roundings per step, 2^-work relative each.
    const BigFloat rounding = ldexp(sum * BigFloat(3 * (k + 1), work), -work);
    return {sum, tail + rounding};
}

/// Coefficients of log(delta^2 / (2 (1 - (1 + delta) e^{-delta}))) through delta^J.
inline std::vector<Rat> delta_log_series(int order) {
    if (order < 1) throw error(errc::invalid_argument, "order must be >= 1");
    // 2 (1 - (1 + d) e^{-d}) / d^2 = sum_i 2 (-1)^i (i + 1) / (i + 2)! d^i
    std::vector<Rat> f(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        Rat c = make_rat(BigInt(2 * (i + 1)), factorial(static_cast<unsigned long>(i + 2)));
        f[static_cast<std::size_t>(i)] = (i % 2) ? Rat(-c) : c;
    }
    const Series l = -ps_log(Series(std::move(f)));
    return {l.coeffs().begin(), l.coeffs().end()};
}

/// n! [z^n] (T - 1)^k / n^(n-1) as a polynomial in 1/n (exact for fixed k),
/// via n! [z^n] T^r = r n^(n-r-1) n^(falling r).
inline std::vector<Rat> t_minus_one_power_coeffs(int k) {
    std::vector<Rat> out(static_cast<std::size_t>(k) + 1);
    // prod_{i<r} (1 - i x), built incrementally in r
    std::vector<Rat> prod{Rat(1)};
    for (int r = 1; r <= k; ++r) {
        if (r > 1) {
            std::vector<Rat> next(prod.size() + 1);
            for (std::size_t s = 0; s < prod.size(); ++s) {
                next[s] += prod[s];
                next[s + 1] -= prod[s] * (r - 1);
            }
            prod = std::move(next);
        }
        const Rat w = Rat(binomial(k, r)) * r * (((k - r) % 2) ? -1 : 1);
        for (std::size_t s = 0; s < prod.size() && s < out.size(); ++s) out[s] += w * prod[s];
    }
    return out;
}

/// D(n) ~ sum_s d_s n^(-s), s = 0..J, on the half-integer grid (depth 2J).
/// d_s collects c(k) n! [z^n] (T - 1)^k / n^(n-1) over k <= 2s + 1; larger k
/// cannot reach n^(-s) because the k-th difference annihilates the
/// degree-(2s+1) polynomial in r that carries that power.
inline AsymSeries d_asym(int depth) {
    if (depth < 0) throw error(errc::invalid_argument, "negative depth");
    const int kmax = 2 * depth + 1;
    const std::vector<Rat> c = delta_log_series(kmax);
    std::vector<Rat> d(static_cast<std::size_t>(depth) + 1);
    for (int k = 1; k <= kmax; ++k) {
        const auto p = t_minus_one_power_coeffs(k);
        for (int s = 0; s <= depth && s < static_cast<int>(p.size()); ++s)
            d[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(s)];
    }
    std::vector<SymConst> v(static_cast<std::size_t>(2 * depth) + 1);
    for (int s = 0; s <= depth; ++s) v[static_cast<std::size_t>(2 * s)] = d[static_cast<std::size_t>(s)];
    return AsymSeries(0, std::move(v));
}

/// Q(n) = (n! e^n / n^n - D(n)) / 2 on the half-integer grid, lead n^(1/2),
/// depth J.
inline AsymSeries q_asym(int depth) {
    if (depth < 0) throw error(errc::invalid_argument, "negative depth");
    const int ddepth = depth >= 1 ? depth / 2 : 0;
    const AsymSeries q = Rat(1, 2) * (stirling_series(depth) - d_asym(ddepth));
    return q.truncated_to_floor(1 - depth);
}

} // namespace cgasym
