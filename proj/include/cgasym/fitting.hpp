#pragma once

// Least-squares polynomial fits in x = n^(-1/2) to normalized exact counts
// c(n, n+k) / n^(n + (3k-1)/2), and reconstruction of the fitted numbers as
// small-denominator rationals or rational multiples of xi.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgasym/assembly.hpp"
#include "cgasym/bigfloat.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/symconst.hpp"

namespace cgasym {

enum class Weighting {
    uniform,
    power, // weight n^(degree/2) per squared residual
};

struct FitResult {
    int k = 0;
    int degree = 0;
    std::vector<BigFloat> estimates;   // coefficient of x^j
    std::vector<BigFloat> uncertainty; // |b_j(degree) - b_j(degree+1)|, empty if not computed
    BigFloat residual_rms;
    BigFloat condition;                // 1-norm condition estimate of the scaled design matrix
    long npoints = 0;
    long nmin = 0, nmax = 0;
    long precision = default_precision_bits;
    Weighting weighting = Weighting::uniform;
};

/// c(n, n+k) / n^(n + (3k-1)/2) for n in [nmin, nmax].
inline std::vector<BigFloat> normalized_counts(int k, long nmin, long nmax, long bits) {
    const Decomposition d = decompose(k);
    std::vector<BigFloat> y;
    y.reserve(static_cast<std::size_t>(nmax - nmin + 1));
    for (long n = nmin; n <= nmax; ++n) {
        const BigFloat nf(n, bits);
        const BigFloat c(exact_count_via_t(n, d), bits);
        y.push_back(c / pow(nf, n) / pow(sqrt(nf), static_cast<long>(3 * k - 1)));
    }
    return y;
}

namespace detail {

struct LsqSolution {
    std::vector<BigFloat> coeffs;
    BigFloat condition;
};

/// Householder QR least squares for a dense m x p matrix (row-major).
inline LsqSolution householder_lsq(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat> b, long bits) {
    const std::size_t m = a.size();
    const std::size_t p = a.front().size();
    const BigFloat zero(0L, bits);
    for (std::size_t j = 0; j < p; ++j) {
        BigFloat norm2 = zero;
        for (std::size_t i = j; i < m; ++i) norm2 += a[i][j] * a[i][j];
        if (norm2.is_zero()) throw error(errc::ill_conditioned, "rank-deficient design matrix");
        BigFloat alpha = sqrt(norm2);
        if (a[j][j].sign() > 0) alpha = -alpha;
        std::vector<BigFloat> v(m - j, zero);
        for (std::size_t i = j; i < m; ++i) v[i - j] = a[i][j];
        v[0] -= alpha;
        BigFloat vnorm2 = zero;
        for (const auto& e : v) vnorm2 += e * e;
        if (vnorm2.is_zero()) continue;
        auto reflect = [&](auto&& get) {
            BigFloat dot = zero;
            for (std::size_t i = j; i < m; ++i) dot += v[i - j] * get(i);
            const BigFloat f = ldexp(dot, 1) / vnorm2;
            for (std::size_t i = j; i < m; ++i) get(i) -= f * v[i - j];
        };
        for (std::size_t c = j; c < p; ++c) reflect([&](std::size_t i) -> BigFloat& { return a[i][c]; });
        reflect([&](std::size_t i) -> BigFloat& { return b[i]; });
    }

    // back substitution with R = a[0..p-1][0..p-1]
    std::vector<BigFloat> x(p, zero);
    for (std::size_t jj = p; jj-- > 0;) {
        BigFloat s = b[jj];
        for (std::size_t c = jj + 1; c < p; ++c) s -= a[jj][c] * x[c];
        x[jj] = s / a[jj][jj];
    }

    // cond_1(R) = |R|_1 |R^-1|_1, R^-1 by columns
    std::vector<std::vector<BigFloat>> inv(p, std::vector<BigFloat>(p, zero));
    for (std::size_t c = 0; c < p; ++c) {
        for (std::size_t jj = c + 1; jj-- > 0;) {
            BigFloat s = jj == c ? BigFloat(1L, bits) : zero;
            for (std::size_t t = jj + 1; t <= c; ++t) s -= a[jj][t] * inv[t][c];
            inv[jj][c] = s / a[jj][jj];
        }
    }
    BigFloat rnorm = zero, inorm = zero;
    for (std::size_t c = 0; c < p; ++c) {
        BigFloat rs = zero, is = zero;
        for (std::size_t r = 0; r <= c; ++r) {
            rs += abs(a[r][c]);
            is += abs(inv[r][c]);
        }
        if (rs > rnorm) rnorm = rs;
        if (is > inorm) inorm = is;
    }
    return {std::move(x), rnorm * inorm};
}

} // namespace detail

/// Fit sum_j b_j x^j to (x_i, y_i). x is mapped affinely onto [-1, 1] before
/// the solve and the coefficients are mapped back. Row weights multiply the
/// squared residuals.
inline FitResult lsq_fit_data(const std::vector<BigFloat>& x, const std::vector<BigFloat>& y, int degree, long bits,
                              const std::vector<BigFloat>& weights = {}) {
    BigFloat::check_precision(bits);
    if (degree < 0) throw error(errc::invalid_argument, "negative degree");
    if (x.size() != y.size() || (!weights.empty() && weights.size() != x.size()))
        throw error(errc::invalid_argument, "data vectors differ in length");
    const std::size_t m = x.size();
    const std::size_t p = static_cast<std::size_t>(degree) + 1;
    if (m < p)
        throw error(errc::insufficient_points,
                    std::to_string(m) + " points cannot determine a degree-" + std::to_string(degree) + " fit");

    BigFloat lo = x[0], hi = x[0];
    for (const auto& v : x) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    const BigFloat one(1L, bits);
    BigFloat alpha = one, beta(0L, bits);
    if (hi > lo) {
        alpha = BigFloat(2L, bits) / (hi - lo);
        beta = -(hi + lo) / (hi - lo);
    }

    std::vector<std::vector<BigFloat>> a(m, std::vector<BigFloat>(p, BigFloat(0L, bits)));
    std::vector<BigFloat> rhs(m, BigFloat(0L, bits));
    for (std::size_t i = 0; i < m; ++i) {
        const BigFloat s = weights.empty() ? one : sqrt(weights[i]);
        const BigFloat t = alpha * x[i] + beta;
        BigFloat tp = s;
        for (std::size_t j = 0; j < p; ++j) {
            a[i][j] = tp;
            tp *= t;
        }
        rhs[i] = s * y[i];
    }
    detail::LsqSolution sol = detail::householder_lsq(std::move(a), std::move(rhs), bits);
    if (sol.condition > power_of_two(bits / 2, bits))
        throw error(errc::ill_conditioned, "design matrix condition estimate " + sol.condition.to_string(6) +
                                               " exceeds 2^" + std::to_string(bits / 2));

    // b_i = sum_j c_j C(j, i) alpha^i beta^(j-i)
    std::vector<BigFloat> b(p, BigFloat(0L, bits));
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            const BigFloat w(binomial(static_cast<long>(j), static_cast<long>(i)), bits);
            b[i] += sol.coeffs[j] * w * pow(alpha, static_cast<long>(i)) * pow(beta, static_cast<long>(j - i));
        }
    }

    BigFloat ss(0L, bits);
    for (std::size_t i = 0; i < m; ++i) {
        BigFloat fit(0L, bits);
        for (std::size_t j = p; j-- > 0;) fit = fit * x[i] + b[j];
        const BigFloat r = y[i] - fit;
        ss += r * r;
    }

    FitResult out;
    out.degree = degree;
    out.estimates = std::move(b);
    out.residual_rms = sqrt(ss / BigFloat(static_cast<long>(m), bits));
    out.condition = std::move(sol.condition);
    out.npoints = static_cast<long>(m);
    out.precision = bits;
    return out;
}

/// Least-squares fit of degree `degree` in x = n^(-1/2) to the normalized
/// counts for n in [nmin, nmax]. With `with_uncertainty`, a degree+1 fit is
/// also run and the coefficient differences are reported.
inline FitResult lsq_fit(int k, long nmin, long nmax, int degree, long bits = default_precision_bits,
                         Weighting weighting = Weighting::uniform, bool with_uncertainty = true) {
    BigFloat::check_precision(bits);
    if (k < 0) throw error(errc::invalid_argument, "fits need k >= 0");
    if (nmin < 3 || nmax <= nmin) throw error(errc::invalid_argument, "need nmax > nmin >= 3");
    if (degree < 0) throw error(errc::invalid_argument, "negative degree");
    if (nmax - nmin + 1 < degree + 1)
        throw error(errc::insufficient_points, std::to_string(nmax - nmin + 1) + " points cannot determine a degree-" +
                                                   std::to_string(degree) + " fit");

    const std::vector<BigFloat> y = normalized_counts(k, nmin, nmax, bits);
    std::vector<BigFloat> x, w;
    for (long n = nmin; n <= nmax; ++n) {
        const BigFloat nf(n, bits);
        x.push_back(BigFloat(1L, bits) / sqrt(nf));
        if (weighting == Weighting::power) w.push_back(pow(sqrt(nf), static_cast<long>(degree)));
    }
    FitResult r = lsq_fit_data(x, y, degree, bits, w);
    if (with_uncertainty && static_cast<long>(x.size()) >= degree + 2) {
        if (weighting == Weighting::power)
            for (std::size_t i = 0; i < w.size(); ++i) w[i] *= sqrt(BigFloat(nmin + static_cast<long>(i), bits));
        const FitResult up = lsq_fit_data(x, y, degree + 1, bits, w);
        for (int j = 0; j <= degree; ++j) r.uncertainty.push_back(abs(r.estimates[j] - up.estimates[j]));
    }
    r.k = k;
    r.nmin = nmin;
    r.nmax = nmax;
    r.weighting = weighting;
    return r;
}

namespace detail {

inline BigInt floor_rat(const Rat& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

/// The rational with the smallest denominator in [lo, hi], 0 <= lo <= hi.
inline Rat simplest_between(const Rat& lo, const Rat& hi) {
    const BigInt f = floor_rat(lo);
    if (Rat(f) == lo) return lo;
    if (Rat(f + 1) <= hi) return Rat(f + 1);
    const Rat inner = simplest_between(Rat(1) / (hi - f), Rat(1) / (lo - f));
    return Rat(f) + Rat(1) / inner;
}

inline Rat exact_rat(const BigFloat& x) {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), x.get());
    return q;
}

/// Smallest-denominator rational within [x - tol, x + tol].
inline Rat simplest_near(const BigFloat& x, const BigFloat& tol) {
    const Rat lo = exact_rat(x - tol), hi = exact_rat(x + tol);
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
    if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
    return simplest_between(lo, hi);
}

} // namespace detail

struct Reconstruction {
    SymConst value;
    BigInt denominator;
    bool xi = false;
    /// Chance that a random number lands this close to some fraction with at
    /// most this denominator; large values mean the match is weak.
    double coincidence = 0.0;
    bool confident() const { return coincidence < 1e-2; }
};

/// p/q or (p/q) xi with q <= max_den within absolute `tol` of x. The smaller
/// denominator wins; the plain rational wins an exact tie.
inline std::optional<Reconstruction> reconstruct_symbolic_detailed(const BigFloat& x, const BigInt& max_den,
                                                                   const BigFloat& tol) {
    if (max_den < 1) throw error(errc::invalid_argument, "max_den must be >= 1");
    const long bits = x.precision();
    const BigFloat xi = xi_value(bits);
    const Rat r = detail::simplest_near(x, abs(tol));
    const Rat s = detail::simplest_near(x / xi, abs(tol) / xi);
    const bool r_ok = r.get_den() <= max_den;
    const bool s_ok = s.get_den() <= max_den;
    if (!r_ok && !s_ok) return std::nullopt;
    Reconstruction out;
    if (r_ok && (!s_ok || r.get_den() <= s.get_den())) {
        out.value = SymConst(r);
        out.denominator = r.get_den();
    } else {
        out.value = SymConst::xi(s);
        out.denominator = s.get_den();
        out.xi = true;
    }
    const double q = out.denominator.get_d();
    const double width = out.xi ? (abs(tol) / xi).to_double() : abs(tol).to_double();
    out.coincidence = 2.0 * width * q * q;
    return out;
}

inline std::optional<SymConst> reconstruct_symbolic(const BigFloat& x, const BigInt& max_den, const BigFloat& tol) {
    auto r = reconstruct_symbolic_detailed(x, max_den, tol);
    if (!r) return std::nullopt;
    return r->value;
}

/// Default tolerance 1e-9 relative to max(1, |x|).
inline std::optional<SymConst> reconstruct_symbolic(const BigFloat& x, const BigInt& max_den) {
    const long bits = x.precision();
    BigFloat scale = abs(x);
    if (scale < BigFloat(1L, bits)) scale = BigFloat(1L, bits);
    return reconstruct_symbolic(x, max_den, scale * BigFloat(1e-9, bits));
}

} // namespace cgasym
