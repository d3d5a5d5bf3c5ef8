// Dense univariate polynomials over the rationals.
//
// Coefficients are stored ascending by degree with trailing zeros trimmed;
// the zero polynomial has an empty coefficient vector and degree -1.
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minmod/rational.hpp"

namespace minmod {

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("rational_roots: zero polynomial") {}
};

class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(const Rational& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly x() { return UPoly(std::vector<Rational>{0, 1}); }
    // a + b*x (convenience for linear factors).
    static UPoly linear(const Rational& a, const Rational& b) {
        return UPoly(std::vector<Rational>{a, b});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    Rational lead() const { return is_zero() ? Rational(0) : c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (b * Rational(-1)); }
    friend UPoly operator*(const UPoly& a, const Rational& s) {
        std::vector<Rational> c(a.c_);
        for (auto& v : c) v *= s;
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const Rational& s, const UPoly& a) { return a * s; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // p(-x): flips the sign of odd-degree coefficients.
    UPoly reflected() const {
        std::vector<Rational> c(c_);
        for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return UPoly(std::move(c));
    }

    // p(x)/lead: monic normalization (zero stays zero).
    UPoly monic() const {
        if (is_zero()) return UPoly();
        return *this * (Rational(1) / lead());
    }

    // Polynomial division with remainder; divisor must be nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("UPoly::divmod: division by zero");
        std::vector<Rational> rem(a.c_), quo;
        int db = b.degree();
        if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
        while (static_cast<int>(rem.size()) - 1 >= db) {
            int dr = static_cast<int>(rem.size()) - 1;
            Rational q = rem.back() / b.c_.back();
            quo[dr - db] = q;
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= q * b.c_[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }

    // Exact division; returns false if the remainder is nonzero.
    static bool try_exact_div(const UPoly& a, const UPoly& b, UPoly* out) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) return false;
        if (out) *out = q;
        return true;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Monic greatest common divisor; gcd(0,0) = 0.
inline UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = UPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace detail {
// All positive divisors of |n| by trial division (coefficients stay small here).
inline std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> lo, hi;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d * d != n) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}
}  // namespace detail

// All rational roots of f with multiplicity, by the rational-root theorem on
// the primitive integer form plus exact deflation.
inline std::multiset<Rational> rational_roots(const UPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    std::multiset<Rational> roots;
    UPoly g = f;
    // Deflate roots at zero first.
    while (!g.is_zero() && g.coeff(0) == 0) {
        std::vector<Rational> c(g.coeffs().begin() + 1, g.coeffs().end());
        g = UPoly(std::move(c));
        roots.insert(Rational(0));
    }
    if (g.degree() < 1) return roots;
    // Clear denominators to an integer polynomial.
    Integer den = 1;
    for (const auto& c : g.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> ic;
    for (const auto& c : g.coeffs()) ic.push_back(Integer(c * den));
    std::vector<Rational> candidates;
    for (const auto& p : detail::divisors(ic.front()))
        for (const auto& q : detail::divisors(ic.back()))
            for (int s : {1, -1}) {
                Rational r(Integer(s) * p, q);
                r.canonicalize();
                candidates.push_back(r);
            }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        while (g.degree() >= 1 && g.eval(r) == 0) {
            roots.insert(r);
            UPoly q;
            UPoly::try_exact_div(g, UPoly::linear(-r, Rational(1)), &q);
            g = q;
        }
    }
    return roots;
}

}  // namespace minmod
