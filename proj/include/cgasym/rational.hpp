#pragma once

// Exact scalars. BigInt and Rat are GMP's C++ classes; mpq_class keeps its
// value canonical (lowest terms, positive denominator) after every
// arithmetic operation, so only explicit (num, den) construction needs care.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cgasym/errors.hpp"

namespace cgasym {

using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw error(errc::invalid_argument, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& x) { return x.get_str(10); }

inline Rat parse_rat(std::string_view s) {
    Rat r;
    if (r.set_str(std::string(s), 10) != 0)
        throw error(errc::invalid_argument, "not a rational: " + std::string(s));
    if (r.get_den() == 0) throw error(errc::invalid_argument, "zero denominator: " + std::string(s));
    r.canonicalize();
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt ipow(long base, unsigned long e) { return ipow(BigInt(base), e); }

inline Rat rpow(const Rat& base, long e) {
    Rat r = 1;
    Rat b = e >= 0 ? base : Rat(1) / base;
    unsigned long u = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    while (u) {
        if (u & 1UL) r *= b;
        b *= b;
        u >>= 1;
    }
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || (n >= 0 && k > n)) return 0;
    return binomial(BigInt(n), static_cast<unsigned long>(k));
}

/// n (n-1) ... (n-r+1)
inline BigInt falling(long n, long r) {
    BigInt p = 1;
    for (long i = 0; i < r; ++i) p *= n - i;
    return p;
}

/// Numerator and denominator collapsed to an integer, or throws.
inline BigInt to_integer(const Rat& r, std::string_view what) {
    if (!is_integer(r))
        throw error(errc::internal_inconsistency, std::string(what) + " is not integral: " + to_string(r));
    return r.get_num();
}

} // namespace cgasym
