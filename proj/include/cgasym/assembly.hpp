#pragma once

// c(n, n+k) as a linear combination of tree polynomials, and the symbolic
// expansions of
//
//     c(n, n+k) / n^(n + (3k-1)/2)                                 (connected)
//     g(n, n+k) / (sqrt(2/pi) e^(n-2) (n/2)^n n^((2k-1)/2))        (total)
//     P(n, n+k) / (2^n e^(2-n) n^(k/2) xi)                         (probability)
//
// where g(n, m) = C(C(n,2), m) and P = c / g.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cgasym/asym_series.hpp"
#include "cgasym/bigfloat.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/graph_enum.hpp"
#include "cgasym/polynomial.hpp"
#include "cgasym/ramanujan_q.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/series.hpp"
#include "cgasym/stirling.hpp"
#include "cgasym/tree_poly.hpp"

namespace cgasym {

/// c(n, n+k) = sum_l beta_l t_n(l) + qterm Q(n) n^(n-1) + constant.
struct Decomposition {
    int k = 0;
    std::map<int, Rat> beta;
    Rat qterm = 0;
    Rat constant = 0;

    int max_l() const { return beta.empty() ? 0 : beta.rbegin()->first; }

    /// Exact value at n >= 1. Q(n) is computed once and the positive-l tree
    /// polynomials come from a single run of the recurrence.
    Rat evaluate(long n) const {
        if (n < 1) throw error(errc::invalid_argument, "decomposition is evaluated at n >= 1");
        const int top = std::max(max_l(), 2);
        const bool need_q = sgn(qterm) != 0 || max_l() >= 2;
        const Rat q = need_q ? q_exact(n) : Rat(0);
        const Rat nn(ipow(n, static_cast<unsigned long>(n)));
        std::vector<Rat> tpos(static_cast<std::size_t>(top) + 1);
        tpos[1] = nn;
        tpos[2] = nn * (1 + q);
        for (int z = 1; z + 2 <= top; ++z)
            tpos[static_cast<std::size_t>(z + 2)] = Rat(n) / z * tpos[static_cast<std::size_t>(z)] + tpos[static_cast<std::size_t>(z + 1)];
        Rat sum = constant;
        for (const auto& [l, b] : beta) {
            if (l >= 1) sum += b * tpos[static_cast<std::size_t>(l)];
            else if (l < 0) sum += b * t_value(n, l);
            // t_n(0) = 0 for n >= 1
        }
        if (sgn(qterm) != 0) sum += qterm * q * Rat(ipow(n, static_cast<unsigned long>(n - 1)));
        return sum;
    }

    std::string to_string() const {
        std::string s;
        auto append = [&s](const Rat& c, const std::string& what) {
            if (sgn(c) == 0) return;
            std::string t = cgasym::to_string(c);
            if (!s.empty()) {
                s += t.front() == '-' ? " - " : " + ";
                if (t.front() == '-') t.erase(0, 1);
            }
            s += t + what;
        };
        append(qterm, "*Q(n)*n^(n-1)");
        for (auto it = beta.rbegin(); it != beta.rend(); ++it) append(it->second, "*t_n(" + std::to_string(it->first) + ")");
        append(constant, "");
        return s.empty() ? "0" : s;
    }
};

/// Decompose without checking against exact counts.
inline Decomposition decompose_unchecked(int k) {
    if (k < 0) throw error(errc::invalid_argument, "decomposition needs k >= 0");
    Decomposition d;
    d.k = k;
    if (k == 0) {
        // W_0 = -(log(1-T) + T + T^2/2)/2. The log part is Q(n) n^(n-1)/2.
        // The rest is a polynomial in v = 1 - T; v^j contributes t_n(-j).
        d.qterm = Rat(1, 2);
        const RatPoly t_of_v({Rat(1), Rat(-1)});
        const RatPoly rest = Rat(-1, 2) * (t_of_v + Rat(1, 2) * (t_of_v * t_of_v));
        for (int j = 1; j <= rest.degree(); ++j)
            if (sgn(rest[j]) != 0) d.beta[-j] = rest[j];
        // rest[0] multiplies t_n(0), which vanishes for n >= 1: no constant.
        return d;
    }
    // A_k(u) = sum_j alpha_j (1-u)^j, and (1-T)^(j-3k) has coefficients t_n(3k-j).
    const AkPolynomial a = recover_ak(k);
    const RatPoly in_v = a.poly.affine_substitute(Rat(1), Rat(-1));
    for (int j = 0; j <= in_v.degree(); ++j)
        if (sgn(in_v[j]) != 0) d.beta[3 * k - j] = in_v[j];
    return d;
}

/// Decomposition of c(n, n+k), verified against the bivariate-log counts for
/// 3 <= n <= 12.
inline Decomposition decompose(int k) {
    Decomposition d = decompose_unchecked(k);
    const CountTable table = connected_counts(12, k);
    for (int n = 3; n <= 12; ++n) {
        const Rat v = d.evaluate(n);
        const BigInt expected = table.at(n, n + k);
        if (v != Rat(expected))
            throw error(errc::verification_failure, "decomposition of c(" + std::to_string(n) + "," +
                                                        std::to_string(n + k) + ") gives " + to_string(v) +
                                                        ", expected " + to_string(expected));
    }
    return d;
}

inline BigInt exact_count_via_t(long n, const Decomposition& d) {
    return to_integer(d.evaluate(n), "c(" + std::to_string(n) + "," + std::to_string(n + d.k) + ")");
}

inline BigInt exact_count_via_t(long n, int k) { return exact_count_via_t(n, decompose(k)); }

enum class ExpansionKind { connected, total, probability };

inline const char* to_string(ExpansionKind k) {
    switch (k) {
    case ExpansionKind::connected: return "connected";
    case ExpansionKind::total: return "total";
    case ExpansionKind::probability: return "probability";
    }
    return "?";
}

/// prefactor = n^(n_per_n*n + n_const) * e^(e_per_n*n + e_const)
///           * 2^(two_per_n*n + two_const) * xi^xi_power * pi^pi_power
struct Normalization {
    Rat n_per_n = 0, n_const = 0;
    Rat e_per_n = 0, e_const = 0;
    Rat two_per_n = 0, two_const = 0;
    Rat xi_power = 0, pi_power = 0;
    std::string formula;

    /// log of the prefactor at n.
    BigFloat log_value(long n, long bits) const {
        const BigFloat nf(n, bits);
        const BigFloat ln_n = log(nf);
        const BigFloat ln_2 = log(BigFloat(2L, bits));
        const BigFloat ln_pi = log(pi(bits));
        auto r = [bits](const Rat& q) { return BigFloat(q, bits); };
        BigFloat s = (r(n_per_n) * nf + r(n_const)) * ln_n;
        s += r(e_per_n) * nf + r(e_const);
        s += (r(two_per_n) * nf + r(two_const)) * ln_2;
        s += r(xi_power) * (ln_2 + ln_pi) / BigFloat(2L, bits);
        s += r(pi_power) * ln_pi;
        return s;
    }
};

struct ExpansionTable {
    ExpansionKind kind = ExpansionKind::connected;
    int k = 0;
    AsymSeries series;     // lead n^0
    int step = 1;          // 1: half-integer grid, 2: integer powers only
    Normalization normalization;

    /// Coefficients in table order: (power of n, coefficient).
    std::vector<std::pair<Rat, SymConst>> columns() const {
        std::vector<std::pair<Rat, SymConst>> out;
        for (int e = 0; e >= series.floor(); e -= step) out.emplace_back(make_rat(e, 2), series.at(e));
        return out;
    }

    /// Coefficient of n^(-j/2) for the half grid, n^(-j) for the integer grid.
    SymConst column(int j) const { return series.at(-j * step); }
};

inline Normalization connected_normalization(int k) {
    Normalization z;
    z.n_per_n = 1;
    z.n_const = make_rat(3 * k - 1, 2);
    z.formula = "n^(n+(3k-1)/2)";
    return z;
}

inline Normalization total_normalization(int k) {
    Normalization z;
    z.n_per_n = 1;
    z.n_const = make_rat(2 * k - 1, 2);
    z.e_per_n = 1;
    z.e_const = -2;
    z.two_per_n = -1;
    z.two_const = Rat(1, 2);
    z.pi_power = Rat(-1, 2);
    z.formula = "sqrt(2/pi)*e^(n-2)*(n/2)^n*n^((2k-1)/2)";
    return z;
}

inline Normalization probability_normalization(int k) {
    Normalization z;
    z.n_const = make_rat(k, 2);
    z.e_per_n = -1;
    z.e_const = 2;
    z.two_per_n = 1;
    z.xi_power = 1;
    z.formula = "2^n*e^(2-n)*n^(k/2)*xi";
    return z;
}

/// Parity rule for c(n, n+k): coefficient j carries xi exactly when k + j is even.
inline void check_parity(const AsymSeries& s, int k) {
    for (int j = 0; j <= -s.floor(); ++j) {
        const SymConst c = s.at(-j);
        if (c.is_zero()) continue;
        const bool want_xi = ((k + j) % 2 + 2) % 2 == 0;
        const bool ok = c.is_monomial() && c.terms().begin()->first.pi == 0 &&
                        c.terms().begin()->first.xi == (want_xi ? 1 : 0);
        if (!ok)
            throw error(errc::parity_violation, "coefficient " + std::to_string(j) + " for k = " + std::to_string(k) +
                                                    " is " + c.to_string());
    }
}

/// c(n, n+k) / n^(n + (3k-1)/2) to depth J from a given decomposition.
inline ExpansionTable asym_c(const Decomposition& d, int depth) {
    if (depth < 0) throw error(errc::invalid_argument, "negative depth");
    const int k = d.k;
    const int floor = (3 * k - 1) - depth;
    AsymSeries sum = AsymSeries::zero(floor);
    for (const auto& [l, b] : d.beta) {
        if (l == 0) continue; // t_n(0) = 0 for n >= 1
        sum = sum + SymConst(b) * t_asym_to_floor(l, floor);
    }
    if (sgn(d.qterm) != 0) {
        // Q(n) n^(n-1) / n^n = Q(n) / n
        const int qdepth = std::max(0, -1 - floor);
        sum = sum + SymConst(d.qterm) * q_asym(qdepth).shifted(-2).truncated_to_floor(floor);
    }
    AsymSeries s = sum.shifted(-(3 * k - 1)).truncated_to_floor(-depth);
    if (s.lead() != 0)
        throw error(errc::internal_inconsistency, "expansion of c(n,n+" + std::to_string(k) + ") has lead n^(" +
                                                      to_string(make_rat(s.lead(), 2)) + ")");
    check_parity(s, k);
    ExpansionTable t;
    t.kind = ExpansionKind::connected;
    t.k = k;
    t.series = std::move(s);
    t.step = 1;
    t.normalization = connected_normalization(k);
    return t;
}

inline ExpansionTable asym_c(int k, int depth) { return asym_c(decompose(k), depth); }

/// sum_{i=0}^{m-1} i^s = sum_d sigma_d m^d (Faulhaber, B_1 = -1/2).
inline RatPoly power_sum_poly(int s) {
    const auto b = bernoulli_table(s);
    std::vector<Rat> c(static_cast<std::size_t>(s) + 2);
    for (int j = 0; j <= s; ++j)
        c[static_cast<std::size_t>(s + 1 - j)] += Rat(binomial(s + 1, j)) * b[static_cast<std::size_t>(j)] / (s + 1);
    return RatPoly(std::move(c));
}

/// g(n, n+k) / (sqrt(2/pi) e^(n-2) (n/2)^n n^((2k-1)/2)) in powers of 1/n
/// through n^(-J), from log C(N, m) = m log N - log m! + sum_i log(1 - i/N)
/// with N = n(n-1)/2, m = n + k, and the Stirling series for log m!.
/// Every piece is multiplied by x = 1/n to make it a power series in x; the
/// x^0 and x^1 coefficients of the total are the e^n and e^(-2) factors.
inline ExpansionTable asym_g(int k, int depth) {
    if (k < -1) throw error(errc::invalid_argument, "excess must be >= -1");
    if (depth < 0) throw error(errc::invalid_argument, "negative depth");
    const int order = depth + 2;
    const Series x = Series::variable(order);
    const Series one = Series::constant(1, order);
    const Rat kr(k);
    const Series one_kx = one + kr * x;            // x m = 1 + k x
    const Series log_1mx = ps_log(one - x);
    const Series log_1kx = ps_log(one_kx);

    Series total = one_kx * log_1mx;                                        // (n+k) log(1 - 1/n)
    total = total - (one + (kr + Rat(1, 2)) * x) * log_1kx;                 // -(m+1/2) log(1 + k/n)
    total = total + one_kx;                                                 // +m
    total = total - x * ps_compose(log_gamma_tail(order), x * ps_inverse(one_kx)); // Stirling tail in 1/m
    const Series inv_1mx = ps_inverse(one - x);
    for (int s = 1; s <= order; ++s) {                                      // log prod (1 - i/N)
        const RatPoly sigma = power_sum_poly(s);
        Series inner = Series::zero(order);
        for (int d = 0; d <= sigma.degree(); ++d) {
            if (sgn(sigma[d]) == 0) continue;
            const int shift = 2 * s - d + 1;
            if (shift > order) continue;
            inner = inner + sigma[d] * shift_up(ps_pow(one_kx, d), shift);
        }
        total = total - (Rat(rpow(Rat(2), s)) / s) * (ps_pow(inv_1mx, s) * inner);
    }
    if (total[0] != 1 || total[1] != -2)
        throw error(errc::internal_inconsistency, "log-binomial expansion has unexpected e^n or e^-2 factors");

    std::vector<Rat> f(static_cast<std::size_t>(depth) + 1);
    for (int i = 1; i <= depth; ++i) f[static_cast<std::size_t>(i)] = total[i + 1];
    const Series rel = ps_exp(Series(std::move(f)));
    const Rat lead = rpow(Rat(2), -(k + 1));

    std::vector<SymConst> v(static_cast<std::size_t>(2 * depth) + 1);
    for (int i = 0; i <= depth; ++i) v[static_cast<std::size_t>(2 * i)] = Rat(lead * rel[i]);
    ExpansionTable t;
    t.kind = ExpansionKind::total;
    t.k = k;
    t.series = AsymSeries(0, std::move(v));
    t.step = 2;
    t.normalization = total_normalization(k);
    return t;
}

/// P(n, n+k) / (2^n e^(2-n) n^(k/2) xi) = C / (2 G), with C and G the
/// connected and total expansions. For k = -1, C = 1 exactly (Cayley).
inline ExpansionTable asym_p(int k, int depth) {
    if (k < -1) throw error(errc::invalid_argument, "excess must be >= -1");
    if (depth < 0) throw error(errc::invalid_argument, "negative depth");
    const AsymSeries c = k == -1 ? AsymSeries::constant(SymConst(1), depth) : asym_c(k, depth).series;
    const AsymSeries g = asym_g(k, (depth + 1) / 2).series;
    ExpansionTable t;
    t.kind = ExpansionKind::probability;
    t.k = k;
    t.series = (c / (SymConst(2) * g)).with_depth(depth);
    t.step = 1;
    t.normalization = probability_normalization(k);
    return t;
}

/// Exact g(n, m) = C(C(n,2), m).
inline BigInt total_count(long n, long m) {
    if (m < 0) return 0;
    return binomial(BigInt(n * (n - 1) / 2), static_cast<unsigned long>(m));
}

struct FssReport {
    int k = 0;
    BigFloat a0_derived, a0_formula, a0_relerr;
    BigFloat ratio_derived;        // a_1 / a_0 from the symbolic expansion
    BigFloat ratio_corrected;      // -(A'/A - k) sqrt2 Gamma(3k/2) / Gamma((3k-1)/2)
    BigFloat ratio_as_published;   // same with the original + sign
    BigFloat ratio_relerr;
    bool passed = false;
};

/// Compares the first two coefficients of the connected expansion with the
/// A_k(1), A'_k(1) formula after replacing (n/e)^n by n^n and negating the
/// second term.
inline FssReport fss_crosscheck(const ExpansionTable& c, const Rat& ak1, const Rat& dak1,
                                long bits = default_precision_bits, double tol = 1e-12) {
    if (c.kind != ExpansionKind::connected) throw error(errc::invalid_argument, "crosscheck needs the connected expansion");
    if (c.series.floor() > -1) throw error(errc::invalid_argument, "crosscheck needs depth >= 1");
    const int k = c.k;
    FssReport r;
    r.k = k;
    const BigFloat a0 = c.series.at(0).evaluate(bits);
    const BigFloat a1 = c.series.at(-1).evaluate(bits);
    const BigFloat g3k2 = gamma(BigFloat(make_rat(3 * k, 2), bits));
    const BigFloat g3k12 = gamma(BigFloat(make_rat(3 * k - 1, 2), bits));
    const BigFloat sqrt2 = sqrt(BigFloat(2L, bits));
    const BigFloat sqrtpi = sqrt(pi(bits));
    const BigFloat pow2 = pow(BigFloat(2L, bits), BigFloat(make_rat(3 * k - 1, 2), bits));
    r.a0_derived = a0;
    r.a0_formula = BigFloat(ak1, bits) * sqrtpi / (pow2 * g3k2);
    r.a0_relerr = relative_error(r.a0_derived, r.a0_formula);
    const BigFloat shape = BigFloat(Rat(dak1 / ak1 - k), bits) * sqrt2 * g3k2 / g3k12;
    r.ratio_derived = a1 / a0;
    r.ratio_corrected = -shape;
    r.ratio_as_published = shape;
    r.ratio_relerr = relative_error(r.ratio_derived, r.ratio_corrected);
    const BigFloat t(tol, bits);
    r.passed = r.a0_relerr < t && r.ratio_relerr < t;
    return r;
}

inline FssReport fss_crosscheck(int k, const Rat& ak1, const Rat& dak1, long bits = default_precision_bits) {
    if (k < 2 || k > 7) throw error(errc::invalid_argument, "crosscheck covers 2 <= k <= 7");
    FssReport r = fss_crosscheck(asym_c(k, 1), ak1, dak1, bits);
    if (!r.passed)
        throw error(errc::crosscheck_failure, "k = " + std::to_string(k) + ": a0 relerr " + r.a0_relerr.to_string(6) +
                                                  ", ratio relerr " + r.ratio_relerr.to_string(6));
    return r;
}

} // namespace cgasym
