#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cgasym/rational.hpp"

namespace cgasym {

/// Dense polynomial over Q, coefficient i multiplies x^i. Trailing zeros are
/// trimmed so equality is structural.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static RatPoly constant(const Rat& c) { return RatPoly({c}); }
    static RatPoly x() { return RatPoly({0, 1}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    Rat operator[](int i) const {
        return (i < 0 || i > degree()) ? Rat(0) : c_[static_cast<std::size_t>(i)];
    }
    const std::vector<Rat>& coeffs() const noexcept { return c_; }

    Rat operator()(const Rat& x) const {
        Rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    RatPoly derivative() const {
        std::vector<Rat> d;
        for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * i);
        return RatPoly(std::move(d));
    }

    /// p(x) -> p(a + b x)
    RatPoly affine_substitute(const Rat& a, const Rat& b) const {
        RatPoly r;
        const RatPoly lin({a, b});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
        return r;
    }

    /// Multiply by x.
    RatPoly times_x() const {
        if (is_zero()) return {};
        std::vector<Rat> v(c_.size() + 1);
        std::copy(c_.begin(), c_.end(), v.begin() + 1);
        return RatPoly(std::move(v));
    }

    std::string to_string(const std::string& var = "n") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Rat& c = c_[static_cast<std::size_t>(i)];
            if (sgn(c) == 0) continue;
            std::string t = cgasym::to_string(c);
            if (!s.empty()) {
                s += t.front() == '-' ? " - " : " + ";
                if (t.front() == '-') t.erase(0, 1);
            }
            s += t;
            if (i >= 1) s += "*" + var;
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s;
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> v(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
        return RatPoly(std::move(v));
    }
    friend RatPoly operator-(const RatPoly& a) {
        std::vector<Rat> v = a.c_;
        for (auto& c : v) c = -c;
        return RatPoly(std::move(v));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }
    friend RatPoly operator*(const Rat& s, const RatPoly& a) {
        std::vector<Rat> v = a.c_;
        for (auto& c : v) c *= s;
        return RatPoly(std::move(v));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> v(static_cast<std::size_t>(a.degree() + b.degree() + 1));
        for (int i = 0; i <= a.degree(); ++i)
            for (int j = 0; j <= b.degree(); ++j) v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        return RatPoly(std::move(v));
    }

    bool operator==(const RatPoly&) const = default;

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

} // namespace cgasym
