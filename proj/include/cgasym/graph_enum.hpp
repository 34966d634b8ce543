#pragma once

// Exact counts c(n, m) of connected labelled graphs from the bivariate EGF
//
//     g(w, z) = sum_n (1 + w)^C(n,2) z^n / n!,      c(w, z) = log g(w, z),
//
// the excess-k diagonals W_k(z) = sum_n c(n, n+k) z^n / n!, and the
// polynomials A_k with W_k(z) = A_k(T(z)) / (1 - T(z))^(3k).

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cgasym/errors.hpp"
#include "cgasym/polynomial.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/series.hpp"

namespace cgasym {

/// Series in z whose coefficients are polynomials in w of degree <= wcap.
class WPolySeries {
public:
    WPolySeries(std::vector<std::vector<Rat>> zcoeffs, int wcap) : z_(std::move(zcoeffs)), wcap_(wcap) {
        if (wcap_ < 0) throw error(errc::invalid_argument, "negative w-degree cap");
        if (z_.empty()) throw error(errc::invalid_argument, "bivariate series needs at least one coefficient");
        for (auto& p : z_) p.resize(static_cast<std::size_t>(wcap_) + 1);
    }

    int order() const noexcept { return static_cast<int>(z_.size()) - 1; }
    int wcap() const noexcept { return wcap_; }

    /// Polynomial in w multiplying z^n (length wcap + 1).
    const std::vector<Rat>& operator[](int n) const { return z_.at(static_cast<std::size_t>(n)); }

    /// [w^m z^n]
    const Rat& coeff(int n, int m) const { return z_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(m)); }

private:
    std::vector<std::vector<Rat>> z_;
    int wcap_;
};

/// g(w, z) to order N in z with the w-degree capped at N + kmax.
inline WPolySeries graph_egf(int order, int kmax) {
    if (order < 0) throw error(errc::invalid_argument, "negative order");
    if (kmax < -1) throw error(errc::invalid_argument, "excess must be >= -1");
    const int wcap = std::max(order + kmax, 0);
    std::vector<std::vector<Rat>> z(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const long slots = static_cast<long>(n) * (n - 1) / 2;
        const BigInt nf = factorial(static_cast<unsigned long>(n));
        auto& p = z[static_cast<std::size_t>(n)];
        p.resize(static_cast<std::size_t>(wcap) + 1);
        for (long i = 0; i <= std::min<long>(slots, wcap); ++i) p[static_cast<std::size_t>(i)] = make_rat(binomial(slots, i), nf);
    }
    return WPolySeries(std::move(z), wcap);
}

namespace detail {

// A polynomial with a common denominator: value = num / den.
struct ScaledPoly {
    std::vector<BigInt> num;
    BigInt den = 1;
};

inline ScaledPoly to_scaled(const std::vector<Rat>& p) {
    ScaledPoly s;
    s.den = 1;
    for (const auto& c : p) s.den = lcm(s.den, BigInt(c.get_den()));
    s.num.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) s.num[i] = p[i].get_num() * (s.den / p[i].get_den());
    return s;
}

inline std::vector<Rat> to_rat(const ScaledPoly& s) {
    std::vector<Rat> p(s.num.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = make_rat(s.num[i], s.den);
    return p;
}

inline void reduce(ScaledPoly& s) {
    BigInt g = s.den;
    for (const auto& c : s.num) {
        if (g == 1) break;
        if (c != 0) g = gcd(g, c);
    }
    if (g != 1) {
        s.den /= g;
        for (auto& c : s.num) c /= g;
    }
}

} // namespace detail

/// log g(w, z) by the derivative identity n c_n = n g_n - sum_{j<n} j c_j g_{n-j},
/// with g_0 = 1. Polynomial products are truncated at the w-degree cap.
/// Each z-coefficient is carried as an integer polynomial over a common
/// denominator, which keeps the inner products in integer arithmetic.
inline WPolySeries wps_log(const WPolySeries& g) {
    const int order = g.order();
    const int wcap = g.wcap();
    const std::size_t width = static_cast<std::size_t>(wcap) + 1;
    for (int m = 0; m <= wcap; ++m)
        if (g.coeff(0, m) != (m == 0 ? 1 : 0))
            throw error(errc::constant_term_not_one, "log needs g(w, 0) = 1");

    std::vector<detail::ScaledPoly> gs(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) gs[static_cast<std::size_t>(n)] = detail::to_scaled(g[n]);

    std::vector<detail::ScaledPoly> cs(static_cast<std::size_t>(order) + 1);
    cs[0].num.assign(width, 0);
    cs[0].den = 1;

    BigInt t;
    for (int n = 1; n <= order; ++n) {
        // acc / accden = sum_{j=1}^{n-1} j c_j g_{n-j}
        BigInt accden = 1;
        for (int j = 1; j < n; ++j)
            accden = lcm(accden, cs[static_cast<std::size_t>(j)].den * gs[static_cast<std::size_t>(n - j)].den);
        std::vector<BigInt> acc(width, 0);
        for (int j = 1; j < n; ++j) {
            const auto& cj = cs[static_cast<std::size_t>(j)];
            const auto& gk = gs[static_cast<std::size_t>(n - j)];
            const BigInt scale = accden / (cj.den * gk.den) * j;
            for (std::size_t a = 0; a < width; ++a) {
                if (cj.num[a] == 0) continue;
                t = cj.num[a] * scale;
                for (std::size_t b = 0; a + b < width; ++b) {
                    if (gk.num[b] == 0) continue;
                    mpz_addmul(acc[a + b].get_mpz_t(), t.get_mpz_t(), gk.num[b].get_mpz_t());
                }
            }
        }
        // c_n = g_n - acc / (n accden)
        const auto& gn = gs[static_cast<std::size_t>(n)];
        const BigInt sden = accden * n;
        detail::ScaledPoly cn;
        cn.den = lcm(gn.den, sden);
        const BigInt fg = cn.den / gn.den;
        const BigInt fs = cn.den / sden;
        cn.num.resize(width);
        for (std::size_t a = 0; a < width; ++a) cn.num[a] = gn.num[a] * fg - acc[a] * fs;
        detail::reduce(cn);
        cs[static_cast<std::size_t>(n)] = std::move(cn);
    }

    std::vector<std::vector<Rat>> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) out[static_cast<std::size_t>(n)] = detail::to_rat(cs[static_cast<std::size_t>(n)]);
    return WPolySeries(std::move(out), wcap);
}

/// c(n, m) for 1 <= n <= nmax and m <= n + kmax.
class CountTable {
public:
    CountTable(int nmax, int kmax) : nmax_(nmax), kmax_(kmax) {}

    int nmax() const noexcept { return nmax_; }
    int kmax() const noexcept { return kmax_; }

    static long max_edges(int n) { return static_cast<long>(n) * (n - 1) / 2; }

    /// Smallest and largest m stored for a given n.
    static long min_edges(int n) { return n - 1; }
    long top_edges(int n) const { return std::min<long>(n + kmax_, max_edges(n)); }

    /// Zero outside the support; an error outside the computed window.
    BigInt at(int n, long m) const {
        if (n < 1 || n > nmax_ || m > n + kmax_)
            throw error(errc::invalid_argument,
                        "c(" + std::to_string(n) + "," + std::to_string(m) + ") is outside the computed table");
        auto it = entries_.find({n, m});
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    void set(int n, long m, BigInt v) { entries_[{n, m}] = std::move(v); }

    const std::map<std::pair<int, long>, BigInt>& entries() const noexcept { return entries_; }

private:
    int nmax_;
    int kmax_;
    std::map<std::pair<int, long>, BigInt> entries_;
};

/// c(n, m) = n! [w^m z^n] log g(w, z), checked to be a nonnegative integer
/// and to vanish for m < n - 1.
inline CountTable connected_counts(int nmax, int kmax) {
    if (nmax < 1) throw error(errc::invalid_argument, "nmax must be >= 1");
    if (kmax < -1) throw error(errc::invalid_argument, "excess must be >= -1");
    const WPolySeries c = wps_log(graph_egf(nmax, kmax));
    CountTable table(nmax, kmax);
    for (int n = 1; n <= nmax; ++n) {
        const BigInt nf = factorial(static_cast<unsigned long>(n));
        const long top = std::min<long>(n + kmax, c.wcap());
        for (long m = 0; m <= top; ++m) {
            const Rat v = c.coeff(n, static_cast<int>(m)) * Rat(nf);
            const std::string where = "c(" + std::to_string(n) + "," + std::to_string(m) + ")";
            const BigInt count = to_integer(v, where);
            if (count < 0) throw error(errc::internal_inconsistency, where + " is negative");
            if (m < n - 1 || m > CountTable::max_edges(n)) {
                if (count != 0) throw error(errc::internal_inconsistency, where + " should vanish");
                continue;
            }
            table.set(n, m, count);
        }
    }
    return table;
}

/// EGF of the excess-k diagonal read off a count table: sum c(n, n+k) z^n / n!.
inline Series w_series_from_counts(int k, int order, const CountTable& table) {
    if (k > table.kmax() || order > table.nmax())
        throw error(errc::invalid_argument, "count table too small for the requested diagonal");
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = make_rat(table.at(n, n + k), factorial(static_cast<unsigned long>(n)));
    return Series(std::move(c));
}

inline Series w_series_from_counts(int k, int order) {
    if (k < -1) throw error(errc::invalid_argument, "excess must be >= -1");
    return w_series_from_counts(k, order, connected_counts(std::max(order, 1), k));
}

/// Closed forms in T for trees (k = -1), unicycles (k = 0) and bicycles (k = 1).
inline Series w_series_closed_form(int k, int order) {
    const Series t = tree_function(order);
    const Series t2 = t * t;
    const Series one = Series::constant(1, order);
    switch (k) {
    case -1:
        return t - Rat(1, 2) * t2;
    case 0:
        return Rat(-1, 2) * (ps_log(one - t) + t + Rat(1, 2) * t2);
    case 1: {
        const Series t4 = t2 * t2;
        const Series num = Rat(1, 24) * (Rat(6) * t4 - t4 * t);
        return num * ps_pow(one - t, -3);
    }
    default:
        throw error(errc::invalid_argument, "closed forms exist only for k in {-1, 0, 1}");
    }
}

/// W_k(z) to order N: closed form for k <= 1, the count-table diagonal otherwise.
inline Series w_series(int k, int order) {
    if (order < 1) throw error(errc::invalid_argument, "order must be >= 1");
    if (k < -1) throw error(errc::invalid_argument, "excess must be >= -1");
    if (k <= 1) return w_series_closed_form(k, order);
    return w_series_from_counts(k, order);
}

struct AkPolynomial {
    int k = 0;
    RatPoly poly; // A_k(u) in the monomial basis

    Rat at_one() const { return poly(Rat(1)); }
    Rat derivative_at_one() const { return poly.derivative()(Rat(1)); }
};

/// A(u) = W(u e^{-u}) (1 - u)^(3k), the power series whose truncation to
/// `degree` is A_k. Substituting z = u e^{-u} inverts T, so this is the
/// triangular solve of W_k = A_k(T) / (1 - T)^(3k).
inline Series ak_series(int k, const Series& w) {
    const int order = w.order();
    const Series u = Series::variable(order);
    const Series inner = u * ps_exp(-u);
    const Series one = Series::constant(1, order);
    return ps_compose(w, inner) * ps_pow(one - u, 3L * k);
}

/// Fit A_k of the given degree against W_k known to `working_order`.
inline AkPolynomial recover_ak_at(int k, int degree, const Series& w) {
    if (k < 1) throw error(errc::invalid_argument, "A_k is defined for k >= 1");
    if (w.order() <= degree)
        throw error(errc::underdetermined_system,
                    "working order " + std::to_string(w.order()) + " leaves no residual check for degree " +
                        std::to_string(degree));
    const Series a = ak_series(k, w);
    for (int j = degree + 1; j <= a.order(); ++j)
        if (sgn(a[j]) != 0)
            throw error(errc::residual_nonzero, "coefficient of u^" + std::to_string(j) + " is " + to_string(a[j]) +
                                                    " for k = " + std::to_string(k));
    std::vector<Rat> c(a.coeffs().begin(), a.coeffs().begin() + degree + 1);
    return {k, RatPoly(std::move(c))};
}

/// A_k with its degree found automatically: start at `degree_bound` and grow
/// it until every coefficient through the working order
/// (degree + 3k + 2) vanishes beyond the degree.
inline AkPolynomial recover_ak(int k, int degree_bound = 5, int max_degree = -1) {
    if (k < 1) throw error(errc::invalid_argument, "A_k is defined for k >= 1");
    if (degree_bound < 0) throw error(errc::invalid_argument, "negative degree bound");
    if (max_degree < 0) max_degree = 4 * k + 10;
    const int margin = 3 * k + 2;
    int degree = degree_bound;
    int order = degree + margin;
    while (degree <= max_degree) {
        const Series a = ak_series(k, w_series(k, order));
        for (; degree + margin <= order && degree <= max_degree; ++degree) {
            bool clean = true;
            for (int j = degree + 1; j <= order && clean; ++j) clean = sgn(a[j]) == 0;
            if (clean) {
                std::vector<Rat> c(a.coeffs().begin(), a.coeffs().begin() + degree + 1);
                return {k, RatPoly(std::move(c))};
            }
        }
        order += margin;
    }
    throw error(errc::residual_nonzero, "no polynomial of degree <= " + std::to_string(max_degree) +
                                            " fits W_" + std::to_string(k));
}

} // namespace cgasym
