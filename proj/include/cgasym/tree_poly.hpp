#pragma once

// Knuth-Pittel tree polynomials, (1 - T(z))^(-y) = sum_n t_n(y) z^n / n!.
//
// For y >= 1 the recurrence t_n(y+2) = (n/y) t_n(y) + t_n(y+1), seeded with
// t_n(1) = n^n and t_n(2) = n^n (1 + Q(n)), gives t_n(y) = n^n (P(n) + R(n) Q(n))
// with polynomials P, R. For y <= 0, (1 - T)^|y| expands binomially and
// n! [z^n] T^r = r n^(n-r-1) n^(falling r) gives t_n(y) = n^(n-1) E(1/n).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cgasym/asym_series.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/polynomial.hpp"
#include "cgasym/ramanujan_q.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/series.hpp"

namespace cgasym {

inline Series t_series(int y, int order) {
    const Series one = Series::constant(1, order);
    return ps_pow(one - tree_function(order), -static_cast<long>(y));
}

namespace detail {

/// t_n(-m) / n^(n-1) = sum_{r=1}^{m} C(m,r) (-1)^r r prod_{i<r} (1 - i/n), in x = 1/n.
inline RatPoly negative_t_poly(int m) {
    RatPoly e;
    RatPoly prod = RatPoly::constant(1);
    for (int r = 1; r <= m; ++r) {
        if (r > 1) prod = prod * RatPoly({Rat(1), Rat(-(r - 1))});
        const Rat w = Rat(binomial(m, r)) * r * ((r % 2) ? -1 : 1);
        e = e + w * prod;
    }
    return e;
}

} // namespace detail

/// Exact t_n(y) for n >= 0 and any integer y.
inline Rat t_value(long n, int y) {
    if (n < 0) throw error(errc::invalid_argument, "t_n(y) needs n >= 0");
    if (n == 0) return 1;
    if (y == 0) return 0;
    const BigInt nn = ipow(n, static_cast<unsigned long>(n));
    if (y >= 1) {
        Rat a = Rat(nn);                       // t_n(1)
        if (y == 1) return a;
        Rat b = Rat(nn) * (1 + q_exact(n));    // t_n(2)
        for (int z = 1; z + 2 <= y; ++z) {
            Rat c = Rat(n) / z * a + b;        // t_n(z+2)
            a = std::move(b);
            b = std::move(c);
        }
        return b;
    }
    const int m = -y;
    Rat sum = 0;
    for (int r = 1; r <= m && r <= n; ++r) {
        // r n^(n-r-1) n^(falling r)
        Rat term = Rat(falling(n, r) * r) * rpow(Rat(n), n - r - 1);
        sum += (r % 2) ? Rat(-term * binomial(m, r)) : Rat(term * binomial(m, r));
    }
    return sum;
}

struct TreePolyNormalForm {
    int y = 0;
    RatPoly p; // y >= 1: polynomial in n
    RatPoly r; // y >= 1: polynomial in n multiplying Q(n)
    RatPoly e; // y <= 0: polynomial in 1/n

    /// t_n(y) for n >= 1.
    Rat evaluate(long n) const {
        if (n < 1) throw error(errc::invalid_argument, "normal form is valid for n >= 1");
        const Rat nr(n);
        if (y >= 1) {
            Rat v = p(nr);
            if (!r.is_zero()) v += r(nr) * q_exact(n);
            return Rat(ipow(n, static_cast<unsigned long>(n))) * v;
        }
        return Rat(ipow(n, static_cast<unsigned long>(n - 1))) * e(Rat(1) / nr);
    }

    std::string to_string() const {
        if (y >= 1) return "n^n*((" + p.to_string() + ") + (" + r.to_string() + ")*Q(n))";
        return "n^(n-1)*(" + e.to_string("x") + "), x = 1/n";
    }
};

inline TreePolyNormalForm t_normal_form(int y) {
    TreePolyNormalForm f;
    f.y = y;
    if (y >= 1) {
        RatPoly pa = RatPoly::constant(1), ra;                       // y = 1
        RatPoly pb = RatPoly::constant(1), rb = RatPoly::constant(1); // y = 2
        if (y == 1) {
            f.p = pa;
            f.r = ra;
            return f;
        }
        for (int z = 1; z + 2 <= y; ++z) {
            const Rat inv = make_rat(1, z);
            RatPoly pc = inv * pa.times_x() + pb;
            RatPoly rc = inv * ra.times_x() + rb;
            pa = std::move(pb);
            ra = std::move(rb);
            pb = std::move(pc);
            rb = std::move(rc);
        }
        f.p = pb;
        f.r = rb;
        return f;
    }
    f.e = detail::negative_t_poly(-y);
    return f;
}

/// Expansion of t_n(y) / n^n down to n^(floor/2), any y.
inline AsymSeries t_asym_to_floor(int y, int floor) {
    const TreePolyNormalForm f = t_normal_form(y);
    if (y <= 0) {
        // t/n^n = x E(x): x^(s+1) sits at half-exponent -2(s+1)
        std::vector<std::pair<int, SymConst>> terms;
        for (int s = 0; s <= f.e.degree(); ++s) terms.emplace_back(-2 * (s + 1), f.e[s]);
        return AsymSeries::exact(terms, floor);
    }
    std::vector<std::pair<int, SymConst>> pterms;
    for (int i = 0; i <= f.p.degree(); ++i) pterms.emplace_back(2 * i, f.p[i]);
    AsymSeries result = AsymSeries::exact(pterms, floor);
    if (!f.r.is_zero()) {
        const int rdeg = f.r.degree();
        std::vector<std::pair<int, SymConst>> rterms;
        for (int i = 0; i <= rdeg; ++i) rterms.emplace_back(2 * i, f.r[i]);
        const int qdepth = std::max(0, 1 + 2 * rdeg - floor);
        const AsymSeries rq = AsymSeries::exact(rterms, floor - 1) * q_asym(qdepth);
        result = result + rq.truncated_to_floor(floor);
    }
    return result.truncated_to_floor(floor);
}

/// y >= 1: t_n(y)/n^n with lead n^((y-1)/2) and depth J.
/// y <= 0: t_n(y)/n^(n-1) down to n^(-J/2) (an exact polynomial in 1/n).
inline AsymSeries t_asym(int y, int depth) {
    if (depth < 0) throw error(errc::invalid_argument, "negative depth");
    if (y >= 1) return t_asym_to_floor(y, (y - 1) - depth);
    return t_asym_to_floor(y, -2 - depth).shifted(2);
}

} // namespace cgasym
