// Sparse multivariate Laurent polynomials over the rationals.
//
// An MPoly has a fixed arity; terms map integer exponent vectors (negative
// exponents permitted, for Laurent variables such as w and the z_i in
// correlator contexts) to nonzero rational coefficients.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "minmod/rational.hpp"

namespace minmod {

struct NotDivisible : std::domain_error {
    NotDivisible() : std::domain_error("exact_div: no exact quotient exists") {}
};

class MPoly {
  public:
    using Exps = std::vector<int>;
    using Terms = std::map<Exps, Rational>;

    explicit MPoly(int arity = 0) : arity_(arity) {}

    static MPoly constant(int arity, const Rational& c) {
        MPoly p(arity);
        p.add_term(Exps(arity, 0), c);
        return p;
    }
    static MPoly one(int arity) { return constant(arity, 1); }
    static MPoly monomial(int arity, const Exps& e, const Rational& c) {
        MPoly p(arity);
        p.add_term(e, c);
        return p;
    }
    // The variable x_i, optionally raised to a (possibly negative) power.
    static MPoly var(int arity, int i, int power = 1) {
        Exps e(arity, 0);
        e.at(i) = power;
        return monomial(arity, e, 1);
    }

    int arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exps(arity_, 0));
    }
    Rational constant_term() const {
        auto it = terms_.find(Exps(arity_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exps& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.arity_);
        Exps e(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const MPoly& a, const Rational& s) {
        MPoly r(a.arity_);
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    friend MPoly operator*(const Rational& s, const MPoly& a) { return a * s; }
    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(long e) const {
        if (e < 0) throw std::domain_error("MPoly::pow: negative exponent");
        MPoly acc = one(arity_), b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    // Formal partial derivative with respect to variable i.
    MPoly derivative(int i) const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exps d = e;
            d[i] -= 1;
            r.add_term(d, c * e[i]);
        }
        return r;
    }

    // Substitutes variable i by the polynomial g (of the same arity).
    // Requires nonnegative exponents on variable i.
    MPoly substitute(int i, const MPoly& g) const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            if (e[i] < 0) throw std::domain_error("MPoly::substitute: Laurent exponent");
            Exps rest = e;
            rest[i] = 0;
            r += monomial(arity_, rest, c) * g.pow(e[i]);
        }
        return r;
    }

    // Evaluates variable i at a rational point (exponents may be negative).
    MPoly eval_var(int i, const Rational& x) const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            Exps rest = e;
            rest[i] = 0;
            r.add_term(rest, c * rat_pow(x, e[i]));
        }
        return r;
    }

    // Multiplies by x_i^k (k may be negative).
    MPoly shifted(int i, int k) const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            Exps d = e;
            d[i] += k;
            r.terms_.emplace(d, c);
        }
        return r;
    }

    // Extracts the coefficient of x_i^k (variable i removed, exponent set to 0).
    MPoly coeff_of(int i, int k) const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            if (e[i] != k) continue;
            Exps d = e;
            d[i] = 0;
            r.terms_.emplace(d, c);
        }
        return r;
    }

    int min_exp(int i) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[i] < m) m = e[i];
            first = false;
        }
        return m;
    }
    int max_exp(int i) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[i] > m) m = e[i];
            first = false;
        }
        return m;
    }

    // Applies a permutation of the variables: result(x_{perm[i]}) = this(x_i).
    MPoly permuted(const std::vector<int>& perm) const {
        MPoly r(arity_);
        Exps d(arity_);
        for (const auto& [e, c] : terms_) {
            for (int i = 0; i < arity_; ++i) d[perm[i]] = e[i];
            r.terms_.emplace(d, c);
        }
        return r;
    }

    // Inverts all exponents of the listed variables (z -> 1/z).
    MPoly inverted(const std::vector<int>& vars) const {
        MPoly r(arity_);
        for (const auto& [e, c] : terms_) {
            Exps d = e;
            for (int i : vars) d[i] = -d[i];
            r.terms_.emplace(d, c);
        }
        return r;
    }

    // Leading term under lexicographic exponent order (largest key).
    const std::pair<const Exps, Rational>& lead() const {
        if (terms_.empty()) throw std::domain_error("MPoly::lead: zero polynomial");
        return *terms_.rbegin();
    }

    // Graded-lex leading coefficient, used to normalize RatFun denominators.
    Rational grlex_lead_coeff() const;

  private:
    int arity_;
    Terms terms_;
};

inline Rational MPoly::grlex_lead_coeff() const {
    if (terms_.empty()) return Rational(0);
    const std::pair<const Exps, Rational>* best = nullptr;
    long best_deg = 0;
    for (const auto& t : terms_) {
        long deg = 0;
        for (int e : t.first) deg += e;
        if (!best || deg > best_deg || (deg == best_deg && t.first > best->first)) {
            best = &t;
            best_deg = deg;
        }
    }
    return best->second;
}

// Exact division of (Laurent) polynomials: returns q with a = q*b, or throws
// NotDivisible. Laurent content is cleared first, so monomial units divide
// everything.
inline MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (a.is_zero()) return MPoly(a.arity());
    int n = a.arity();
    // Normalize the Laurent content: shift both operands so every variable
    // has minimum exponent 0 (monomial units divide everything).
    MPoly ra = a, rb = b;
    std::vector<int> shift(n, 0);
    for (int i = 0; i < n; ++i) {
        int ma = ra.min_exp(i), mb = rb.min_exp(i);
        if (ma != 0) ra = ra.shifted(i, -ma);
        if (mb != 0) rb = rb.shifted(i, -mb);
        shift[i] = ma - mb;
    }
    MPoly q(n);
    while (!ra.is_zero()) {
        const auto& [ea, ca] = ra.lead();
        const auto& [eb, cb] = rb.lead();
        MPoly::Exps d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = ea[i] - eb[i];
            if (d[i] < 0) throw NotDivisible();
        }
        MPoly t = MPoly::monomial(n, d, ca / cb);
        q += t;
        ra -= t * rb;
    }
    // Undo the Laurent normalization: a/b = (ra/rb) * z^(ma - mb).
    for (int i = 0; i < n; ++i)
        if (shift[i] != 0) q = q.shifted(i, shift[i]);
    return q;
}

// Total order on MPoly values (for use as map keys in factored denominators).
struct MPolyLess {
    bool operator()(const MPoly& a, const MPoly& b) const {
        if (a.arity() != b.arity()) return a.arity() < b.arity();
        auto ia = a.terms().begin(), ib = b.terms().begin();
        for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ia == a.terms().end() && ib != b.terms().end();
    }
};

}  // namespace minmod
