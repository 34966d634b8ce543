#pragma once

// Asymptotic expansions on the half-integer grid:
//
//     S(n) = sum_{j=0}^{J} c_j * n^((L - j)/2)
//
// with SymConst coefficients. L is the lead (in half-units), J the depth.
// The lowest exponent L - J is the floor: everything below it is unknown,
// so sums keep the higher of the two floors and products keep the smaller
// relative depth.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cgasym/bigfloat.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/symconst.hpp"

namespace cgasym {

class AsymSeries {
public:
    /// The zero series with floor 0.
    AsymSeries() : lead_(0), coeffs_(1) {}

    /// Leading zero coefficients are dropped; the floor is preserved.
    AsymSeries(int lead, std::vector<SymConst> coeffs) : lead_(lead), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw error(errc::invalid_argument, "asymptotic series needs at least one coefficient");
        normalize();
    }

    /// c * n^0, known down to n^(-depth/2).
    static AsymSeries constant(const SymConst& c, int depth) {
        std::vector<SymConst> v(static_cast<std::size_t>(depth) + 1);
        v[0] = c;
        return AsymSeries(0, std::move(v));
    }

    /// Zero, known down to n^(floor/2).
    static AsymSeries zero(int floor) { return AsymSeries(floor, {SymConst{}}); }

    /// Exact finite sum sum_e c_e n^(e/2) given as (half-exponent, coeff) pairs,
    /// padded with zeros down to `floor`.
    static AsymSeries exact(const std::vector<std::pair<int, SymConst>>& terms, int floor) {
        int lead = floor;
        for (const auto& [e, c] : terms)
            if (!c.is_zero()) lead = std::max(lead, e);
        std::vector<SymConst> v(static_cast<std::size_t>(lead - floor) + 1);
        for (const auto& [e, c] : terms)
            if (e >= floor && !c.is_zero()) v[static_cast<std::size_t>(lead - e)] += c;
        return AsymSeries(lead, std::move(v));
    }

    int lead() const noexcept { return lead_; }
    int depth() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int floor() const noexcept { return lead_ - depth(); }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    const std::vector<SymConst>& coeffs() const noexcept { return coeffs_; }

    /// c_j, the coefficient of n^((lead - j)/2).
    const SymConst& operator[](int j) const {
        if (j < 0 || j > depth()) throw error(errc::invalid_argument, "coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(j)];
    }

    /// Coefficient of n^(e/2): zero above the lead, an error below the floor.
    SymConst at(int half_exponent) const {
        if (half_exponent > lead_) return {};
        if (half_exponent < floor())
            throw error(errc::invalid_argument, "exponent " + std::to_string(half_exponent) + "/2 is below the floor");
        return coeffs_[static_cast<std::size_t>(lead_ - half_exponent)];
    }

    /// Drop everything below n^(floor/2).
    AsymSeries truncated_to_floor(int new_floor) const {
        if (new_floor <= floor()) return *this;
        if (new_floor > lead_) return zero(new_floor);
        return AsymSeries(lead_, std::vector<SymConst>(coeffs_.begin(), coeffs_.begin() + (lead_ - new_floor) + 1));
    }

    AsymSeries with_depth(int depth) const { return truncated_to_floor(lead_ - depth); }

    /// Multiply by n^(s/2).
    AsymSeries shifted(int s) const { return AsymSeries(lead_ + s, coeffs_); }

    /// Partial sum of the first `terms` coefficients at n (all when terms < 0).
    BigFloat evaluate(const BigFloat& n, int terms = -1) const {
        const long bits = n.precision();
        const int count = terms < 0 ? depth() + 1 : std::min(terms, depth() + 1);
        BigFloat sum(bits);
        const BigFloat root = sqrt(n);
        for (int j = 0; j < count; ++j) {
            const SymConst& c = coeffs_[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            sum += c.evaluate(bits) * pow(root, static_cast<long>(lead_ - j));
        }
        return sum;
    }

    BigFloat evaluate(long n, long bits, int terms = -1) const { return evaluate(BigFloat(n, bits), terms); }

    std::string to_string() const {
        std::string s;
        for (int j = 0; j <= depth(); ++j) {
            const SymConst& c = coeffs_[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*n^(" + cgasym::to_string(make_rat(lead_ - j, 2)) + ")";
        }
        if (s.empty()) s = "0";
        return s + " + O(n^(" + cgasym::to_string(make_rat(floor() - 1, 2)) + "))";
    }

    bool operator==(const AsymSeries&) const = default;

private:
    void normalize() {
        std::size_t z = 0;
        while (z + 1 < coeffs_.size() && coeffs_[z].is_zero()) ++z;
        if (z) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(z));
            lead_ -= static_cast<int>(z);
        }
    }

    int lead_;
    std::vector<SymConst> coeffs_;
};

inline AsymSeries operator+(const AsymSeries& x, const AsymSeries& y) {
    const int lead = std::max(x.lead(), y.lead());
    const int floor = std::max(x.floor(), y.floor());
    if (lead < floor) return AsymSeries::zero(floor);
    std::vector<SymConst> v(static_cast<std::size_t>(lead - floor) + 1);
    for (int e = lead; e >= floor; --e) v[static_cast<std::size_t>(lead - e)] = x.at(e) + y.at(e);
    return AsymSeries(lead, std::move(v));
}

inline AsymSeries operator-(const AsymSeries& x) {
    std::vector<SymConst> v = x.coeffs();
    for (auto& c : v) c = -c;
    return AsymSeries(x.lead(), std::move(v));
}

inline AsymSeries operator-(const AsymSeries& x, const AsymSeries& y) { return x + (-y); }

inline AsymSeries operator*(const SymConst& c, const AsymSeries& x) {
    if (c.is_zero()) return AsymSeries::zero(x.floor());
    std::vector<SymConst> v = x.coeffs();
    for (auto& a : v) a = c * a;
    return AsymSeries(x.lead(), std::move(v));
}

inline AsymSeries operator*(const AsymSeries& x, const AsymSeries& y) {
    if (x.is_zero() || y.is_zero()) return AsymSeries::zero(std::max(x.lead() + y.floor(), y.lead() + x.floor()));
    const int depth = std::min(x.depth(), y.depth());
    std::vector<SymConst> v(static_cast<std::size_t>(depth) + 1);
    for (int j = 0; j <= depth; ++j) {
        SymConst acc;
        for (int i = 0; i <= j; ++i) {
            if (x[i].is_zero() || y[j - i].is_zero()) continue;
            acc += x[i] * y[j - i];
        }
        v[static_cast<std::size_t>(j)] = std::move(acc);
    }
    return AsymSeries(x.lead() + y.lead(), std::move(v));
}

/// Division by recursive elimination of the leading term. The divisor's
/// leading coefficient must be a single monomial.
inline AsymSeries operator/(const AsymSeries& x, const AsymSeries& y) {
    if (y.is_zero() || y[0].is_zero())
        throw error(errc::zero_leading_coefficient, "division by a series with zero leading coefficient");
    if (x.is_zero()) return AsymSeries::zero(x.floor() - y.lead());
    const int depth = std::min(x.depth(), y.depth());
    std::vector<SymConst> q(static_cast<std::size_t>(depth) + 1);
    for (int j = 0; j <= depth; ++j) {
        SymConst acc = x[j];
        for (int i = 1; i <= j; ++i) {
            if (y[i].is_zero() || q[static_cast<std::size_t>(j - i)].is_zero()) continue;
            acc -= y[i] * q[static_cast<std::size_t>(j - i)];
        }
        q[static_cast<std::size_t>(j)] = acc / y[0];
    }
    return AsymSeries(x.lead() - y.lead(), std::move(q));
}

inline AsymSeries pow(const AsymSeries& x, long e) {
    if (e < 0) return AsymSeries::constant(SymConst(1), x.depth()) / pow(x, -e);
    AsymSeries result = AsymSeries::constant(SymConst(1), x.depth());
    AsymSeries base = x;
    while (e) {
        if (e & 1L) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

} // namespace cgasym
