#pragma once

// Truncated univariate formal power series over Q.
//
// A Series of order N stores the coefficients of z^0 .. z^N and nothing
// beyond; binary operations on series of different orders truncate to the
// smaller order. All arithmetic is exact.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cgasym/errors.hpp"
#include "cgasym/rational.hpp"

namespace cgasym {

class Series {
public:
    /// The zero series of order 0.
    Series() : coeffs_(1) {}

    /// Takes ownership of coefficients c_0..c_N; the order is N.
    explicit Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw error(errc::invalid_argument, "series needs at least one coefficient");
    }

    Series(std::initializer_list<Rat> coeffs, int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw error(errc::invalid_argument, "negative truncation order");
        std::size_t j = 0;
        for (const auto& c : coeffs) {
            if (j > static_cast<std::size_t>(order)) break;
            coeffs_[j++] = c;
        }
    }

    static Series zero(int order) { return Series({}, order); }
    static Series constant(const Rat& c, int order) { return Series({c}, order); }
    /// The series z.
    static Series variable(int order) { return Series({0, 1}, order); }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of z^j; zero past the truncation order is NOT implied, so
    /// reading beyond order() is an error.
    const Rat& operator[](int j) const {
        if (j < 0 || j > order()) throw error(errc::invalid_argument, "coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(j)];
    }

    std::span<const Rat> coeffs() const noexcept { return coeffs_; }

    Series truncated(int order) const {
        order = std::min(order, this->order());
        return Series(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    bool operator==(const Series&) const = default;

private:
    std::vector<Rat> coeffs_;
};

inline Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rat> r(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) r[static_cast<std::size_t>(j)] = a[j] + b[j];
    return Series(std::move(r));
}

inline Series operator-(const Series& a) {
    std::vector<Rat> r(a.coeffs().begin(), a.coeffs().end());
    for (auto& c : r) c = -c;
    return Series(std::move(r));
}

inline Series operator-(const Series& a, const Series& b) { return a + (-b); }

inline Series operator*(const Rat& c, const Series& a) {
    std::vector<Rat> r(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : r) x *= c;
    return Series(std::move(r));
}

/// Cauchy product truncated to the smaller order.
inline Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rat> r(static_cast<std::size_t>(n) + 1);
    Rat t;
    for (int i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (sgn(b[j]) == 0) continue;
            t = a[i] * b[j];
            r[static_cast<std::size_t>(i + j)] += t;
        }
    }
    return Series(std::move(r));
}

/// Multiply by z^s (s >= 0), keeping the order.
inline Series shift_up(const Series& a, int s) {
    std::vector<Rat> r(a.coeffs().size());
    for (int j = 0; j + s <= a.order(); ++j) r[static_cast<std::size_t>(j + s)] = a[j];
    return Series(std::move(r));
}

inline Series derivative(const Series& a) {
    if (a.order() == 0) return Series::zero(0);
    std::vector<Rat> r(static_cast<std::size_t>(a.order()));
    for (int j = 1; j <= a.order(); ++j) r[static_cast<std::size_t>(j - 1)] = a[j] * j;
    return Series(std::move(r));
}

/// Antiderivative with zero constant term; order grows by one.
inline Series integral(const Series& a) {
    std::vector<Rat> r(a.coeffs().size() + 1);
    for (int j = 0; j <= a.order(); ++j) r[static_cast<std::size_t>(j + 1)] = a[j] / (j + 1);
    return Series(std::move(r));
}

/// a / b by term-by-term division; b(0) must be nonzero.
inline Series ps_div(const Series& a, const Series& b) {
    if (sgn(b[0]) == 0) throw error(errc::noninvertible_constant_term, "division by a series with zero constant term");
    const int n = std::min(a.order(), b.order());
    std::vector<Rat> q(static_cast<std::size_t>(n) + 1);
    const Rat inv0 = Rat(1) / b[0];
    Rat acc, t;
    for (int j = 0; j <= n; ++j) {
        acc = a[j];
        for (int i = 1; i <= j; ++i) {
            if (sgn(b[i]) == 0) continue;
            t = b[i] * q[static_cast<std::size_t>(j - i)];
            acc -= t;
        }
        q[static_cast<std::size_t>(j)] = acc * inv0;
    }
    return Series(std::move(q));
}

inline Series ps_inverse(const Series& b) { return ps_div(Series::constant(1, b.order()), b); }

/// Formal logarithm via (log a)' = a'/a; requires a(0) = 1.
inline Series ps_log(const Series& a) {
    if (a[0] != 1) throw error(errc::constant_term_not_one, "log needs constant term 1, got " + to_string(a[0]));
    if (a.order() == 0) return Series::zero(0);
    Series q = ps_div(derivative(a), a.truncated(a.order() - 1));
    return integral(q);
}

/// Formal exponential; requires a(0) = 0. Uses n e_n = sum_k k a_k e_{n-k}.
inline Series ps_exp(const Series& a) {
    if (sgn(a[0]) != 0) throw error(errc::nonzero_constant_term, "exp needs zero constant term, got " + to_string(a[0]));
    const int n = a.order();
    std::vector<Rat> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    Rat acc, t;
    for (int m = 1; m <= n; ++m) {
        acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (sgn(a[k]) == 0) continue;
            t = a[k] * e[static_cast<std::size_t>(m - k)];
            acc += t * k;
        }
        e[static_cast<std::size_t>(m)] = acc / m;
    }
    return Series(std::move(e));
}

/// a^e for any integer e. With a(0) != 0 this is the J.C.P. Miller
/// recurrence n a_0 b_n = sum_{k=1}^{n} (e k - n + k) a_k b_{n-k}; with
/// a(0) = 0 only e >= 0 is defined and binary powering is used.
inline Series ps_pow(const Series& a, long e) {
    const int n = a.order();
    if (sgn(a[0]) == 0) {
        if (e < 0) throw error(errc::noninvertible_constant_term, "negative power of a series with zero constant term");
        Series result = Series::constant(1, n);
        Series base = a;
        while (e) {
            if (e & 1L) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1);
    b[0] = rpow(a[0], e);
    const Rat inv0 = Rat(1) / a[0];
    Rat acc, t;
    for (int m = 1; m <= n; ++m) {
        acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (sgn(a[k]) == 0) continue;
            t = a[k] * b[static_cast<std::size_t>(m - k)];
            acc += t * (e * k - m + k);
        }
        b[static_cast<std::size_t>(m)] = acc * inv0 / m;
    }
    return Series(std::move(b));
}

/// outer(inner(z)) by Horner evaluation; inner(0) must be 0.
inline Series ps_compose(const Series& outer, const Series& inner) {
    if (sgn(inner[0]) != 0)
        throw error(errc::nonzero_inner_constant, "composition needs inner constant term 0, got " + to_string(inner[0]));
    const int n = std::min(outer.order(), inner.order());
    Series result = Series::constant(outer[n], n);
    const Series in = inner.truncated(n);
    for (int j = n - 1; j >= 0; --j) {
        result = result * in;
        std::vector<Rat> c(result.coeffs().begin(), result.coeffs().end());
        c[0] += outer[j];
        result = Series(std::move(c));
    }
    return result;
}

/// The rooted-tree function T(z) = sum_{n>=1} n^(n-1) z^n / n!.
inline Series tree_function(int order) {
    if (order < 0) throw error(errc::invalid_argument, "negative truncation order");
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = make_rat(ipow(n, static_cast<unsigned long>(n - 1)), factorial(static_cast<unsigned long>(n)));
    return Series(std::move(c));
}

} // namespace cgasym
