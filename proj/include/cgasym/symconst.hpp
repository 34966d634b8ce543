#pragma once

// Exact constants of the form  sum  r_{a,b} * pi^a * xi^b,  xi = sqrt(2 pi),
// with integer a, b in {0, 1} and rational weights. Negative a only arises
// from dividing by xi (1/xi = xi / (2 pi)). Products reduce xi^2 to
// 2 pi, so the ring is closed and every value has a unique normal form.

#include <map>
#include <string>
#include <utility>

#include "cgasym/bigfloat.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/rational.hpp"

namespace cgasym {

struct Monomial {
    int pi = 0;
    int xi = 0; // 0 or 1

    auto operator<=>(const Monomial&) const = default;
};

class SymConst {
public:
    SymConst() = default;
    SymConst(const Rat& r) { add_term({0, 0}, r); } // NOLINT: implicit from rationals
    SymConst(long r) : SymConst(Rat(r)) {}          // NOLINT

    /// r * pi^a * xi^b; b > 1 is reduced.
    static SymConst monomial(const Rat& r, int pi_power, int xi_power) {
        if (xi_power < 0) throw error(errc::invalid_argument, "negative power of xi");
        SymConst c;
        Rat w = r * rpow(Rat(2), xi_power / 2);
        c.add_term({pi_power + xi_power / 2, xi_power % 2}, w);
        return c;
    }

    /// r * xi
    static SymConst xi(const Rat& r) { return monomial(r, 0, 1); }

    const std::map<Monomial, Rat>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Weight of pi^a xi^b (zero when absent).
    Rat weight(int pi_power, int xi_power) const {
        auto it = terms_.find({pi_power, xi_power});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat rational_part() const { return weight(0, 0); }
    Rat xi_part() const { return weight(0, 1); }

    /// Only rational and rational*xi terms present.
    bool is_rat_or_xi_combination() const {
        for (const auto& [m, w] : terms_)
            if (m.pi != 0) return false;
        return true;
    }

    BigFloat evaluate(long bits) const {
        BigFloat sum(bits);
        if (terms_.empty()) return sum;
        const BigFloat p = pi(bits);
        const BigFloat x = xi_value(bits);
        for (const auto& [m, w] : terms_) {
            BigFloat t(w, bits);
            if (m.pi) t *= pow(p, static_cast<long>(m.pi));
            if (m.xi) t *= x;
            sum += t;
        }
        return sum;
    }

    /// Human-readable form, e.g. "5/256*xi", "-7/6", "2*pi".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, w] : terms_) {
            std::string t = cgasym::to_string(w);
            if (!first) s += (t.front() == '-') ? " - " : " + ";
            if (!first && t.front() == '-') t.erase(0, 1);
            s += t;
            if (m.pi == 1) s += "*pi";
            if (m.pi != 0 && m.pi != 1) s += "*pi^" + std::to_string(m.pi);
            if (m.xi) s += "*xi";
            first = false;
        }
        return s;
    }

    friend SymConst operator+(SymConst a, const SymConst& b) {
        for (const auto& [m, w] : b.terms_) a.add_term(m, w);
        return a;
    }
    friend SymConst operator-(const SymConst& a) {
        SymConst r = a;
        for (auto& [m, w] : r.terms_) w = -w;
        return r;
    }
    friend SymConst operator-(const SymConst& a, const SymConst& b) { return a + (-b); }

    friend SymConst operator*(const SymConst& a, const SymConst& b) {
        SymConst r;
        for (const auto& [ma, wa] : a.terms_) {
            for (const auto& [mb, wb] : b.terms_) {
                Rat w = wa * wb;
                int xi = ma.xi + mb.xi;
                int p = ma.pi + mb.pi;
                if (xi == 2) {
                    xi = 0;
                    p += 1;
                    w *= 2;
                }
                r.add_term({p, xi}, w);
            }
        }
        return r;
    }

    /// Division is defined only by a single monomial r * pi^a * xi^b.
    friend SymConst operator/(const SymConst& a, const SymConst& b) {
        if (!b.is_monomial())
            throw error(errc::non_monomial_divisor, "divisor " + b.to_string() + " is not a single monomial");
        const auto& [m, w] = *b.terms_.begin();
        // 1/(w pi^a xi) = xi / (2 w pi^(a+1))
        SymConst r;
        for (const auto& [ma, wa] : a.terms_) {
            Rat nw = wa / w;
            int p = ma.pi - m.pi;
            int xi = ma.xi;
            if (m.xi) {
                nw /= 2;
                p -= 1;
                xi += 1;
                if (xi == 2) {
                    xi = 0;
                    p += 1;
                    nw *= 2;
                }
            }
            r.add_term({p, xi}, nw);
        }
        return r;
    }

    SymConst& operator+=(const SymConst& b) { return *this = *this + b; }
    SymConst& operator-=(const SymConst& b) { return *this = *this - b; }
    SymConst& operator*=(const SymConst& b) { return *this = *this * b; }

    bool operator==(const SymConst&) const = default;

private:
    void add_term(Monomial m, const Rat& w) {
        if (sgn(w) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, w);
        if (!inserted) {
            it->second += w;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rat> terms_;
};

} // namespace cgasym
