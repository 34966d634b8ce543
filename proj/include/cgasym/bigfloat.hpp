#pragma once

// Arbitrary-precision binary floating point, a value-semantic RAII wrapper
// over MPFR. Every value carries its own precision in bits; binary
// operations produce a result at the larger of the two operand precisions.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include <gmp.h>
#include <mpfr.h>

#include "cgasym/errors.hpp"
#include "cgasym/rational.hpp"

namespace cgasym {

inline constexpr long default_precision_bits = 256;
inline constexpr long min_precision_bits = 64;

class BigFloat {
public:
    explicit BigFloat(long bits = default_precision_bits) {
        check_precision(bits);
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(double x, long bits) : BigFloat(bits) { mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(long x, long bits) : BigFloat(bits) { mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const BigInt& x, long bits) : BigFloat(bits) { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    BigFloat(const Rat& x, long bits) : BigFloat(bits) { mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat parse(const std::string& s, long bits) {
        BigFloat r(bits);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw error(errc::invalid_argument, "not a decimal number: " + s);
        return r;
    }

    long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Scientific notation with `digits` significant decimal digits, in the
    /// "C" locale format MPFR always uses for its own printf.
    std::string to_string(int digits) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    /// Enough digits to round-trip the working precision.
    std::string to_string() const {
        return to_string(static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1);
    }

    static void check_precision(long bits) {
        if (bits < min_precision_bits || bits > (1L << 24))
            throw error(errc::invalid_argument, "precision must be between 64 and 2^24 bits, got " + std::to_string(bits));
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    template <class Op>
    static BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
        BigFloat r(std::max(a.precision(), b.precision()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

namespace detail {
template <class Op>
BigFloat unary(const BigFloat& x, Op op) {
    BigFloat r(x.precision());
    op(r.get(), x.get(), MPFR_RNDN);
    return r;
}
} // namespace detail

inline BigFloat abs(const BigFloat& x) { return detail::unary(x, mpfr_abs); }
inline BigFloat sqrt(const BigFloat& x) { return detail::unary(x, mpfr_sqrt); }
inline BigFloat exp(const BigFloat& x) { return detail::unary(x, mpfr_exp); }
inline BigFloat log(const BigFloat& x) { return detail::unary(x, mpfr_log); }
inline BigFloat gamma(const BigFloat& x) { return detail::unary(x, mpfr_gamma); }

inline BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat r(std::max(x.precision(), y.precision()));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

inline BigFloat pow(const BigFloat& x, long e) {
    BigFloat r(x.precision());
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

/// x * 2^e, exact.
inline BigFloat ldexp(const BigFloat& x, long e) {
    BigFloat r(x.precision());
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

inline BigFloat pi(long bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

/// sqrt(2 pi)
inline BigFloat xi_value(long bits) { return sqrt(ldexp(pi(bits), 1)); }

/// |a - b| / |b|, or |a| when b is zero.
inline BigFloat relative_error(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) return abs(a);
    return abs((a - b) / b);
}

/// 2^e at the given precision.
inline BigFloat power_of_two(long e, long bits) { return ldexp(BigFloat(1L, bits), e); }

} // namespace cgasym
