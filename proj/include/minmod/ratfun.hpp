// Rational functions with a factored denominator.
//
// A RatFun is numerator * prod(factor^exponent)^-1. Denominator factors are
// kept in a canonical form (graded-lex leading coefficient 1, the scalar
// folded into the numerator) and cancelled against the numerator by trial
// exact division, which keeps pfaffian entries such as
// (z_i^m + z_j^m)/(z_i - z_j) small without a full factorization engine.
#pragma once

#include <map>
#include <stdexcept>

#include "minmod/mpoly.hpp"

namespace minmod {

class RatFun {
  public:
    using DenMap = std::map<MPoly, int, MPolyLess>;

    RatFun() : num_(0) {}
    explicit RatFun(MPoly num) : num_(std::move(num)) {}
    RatFun(MPoly num, const MPoly& den_factor, int power = 1) : num_(std::move(num)) {
        if (den_factor.is_zero()) throw std::domain_error("RatFun: zero denominator");
        push_den(den_factor, power);
        reduce();
    }

    static RatFun zero(int arity) { return RatFun(MPoly(arity)); }

    int arity() const { return num_.arity(); }
    bool is_zero() const { return num_.is_zero(); }
    const MPoly& num() const { return num_; }
    const DenMap& den() const { return den_; }

    MPoly den_product() const {
        MPoly d = MPoly::one(arity());
        for (const auto& [f, e] : den_) d *= f.pow(e);
        return d;
    }

    // Requires the denominator to have fully cancelled.
    MPoly as_mpoly() const {
        RatFun r = *this;
        r.reduce();
        if (!r.den_.empty())
            throw std::domain_error("RatFun::as_mpoly: nontrivial denominator");
        return r.num_;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        RatFun r;
        r.num_ = MPoly(a.arity());
        // Common denominator: the union of factors with maximal exponents.
        DenMap common = a.den_;
        for (const auto& [f, e] : b.den_) {
            auto it = common.find(f);
            if (it == common.end())
                common.emplace(f, e);
            else if (it->second < e)
                it->second = e;
        }
        MPoly na = a.num_, nb = b.num_;
        for (const auto& [f, e] : common) {
            auto ita = a.den_.find(f);
            auto itb = b.den_.find(f);
            int ea = (ita == a.den_.end()) ? 0 : ita->second;
            int eb = (itb == b.den_.end()) ? 0 : itb->second;
            if (e > ea) na *= f.pow(e - ea);
            if (e > eb) nb *= f.pow(e - eb);
        }
        r.num_ = na + nb;
        r.den_ = std::move(common);
        r.reduce();
        return r;
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        RatFun r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        for (const auto& [f, e] : b.den_) r.push_den(f, e);
        r.reduce();
        return r;
    }
    friend RatFun operator*(const RatFun& a, const Rational& s) {
        RatFun r = a;
        r.num_ = r.num_ * s;
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    // Equality by cross-multiplication (decidable without factorization).
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_product() == b.num_ * a.den_product();
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  private:
    // Inserts a factor in canonical (grlex-monic) form, folding scalars and
    // monomial units into the numerator.
    void push_den(MPoly f, int power) {
        if (power == 0 || f.is_zero()) return;
        // Pull out the Laurent monomial content.
        int n = f.arity();
        for (int i = 0; i < n; ++i) {
            int m = f.min_exp(i);
            if (m != 0) {
                f = f.shifted(i, -m);
                num_ = num_.shifted(i, -m * power);
            }
        }
        Rational lc = f.grlex_lead_coeff();
        if (lc != 1) {
            f = f * (Rational(1) / lc);
            num_ = num_ * rat_pow(Rational(1) / lc, -power);
        }
        if (f.is_constant()) return;  // fully absorbed
        auto [it, inserted] = den_.emplace(std::move(f), power);
        if (!inserted) it->second += power;
        if (it->second == 0) den_.erase(it);
    }

    // Cancels denominator factors against the numerator by trial division.
    void reduce() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                try {
                    MPoly q = exact_div(num_, it->first);
                    num_ = std::move(q);
                    --it->second;
                } catch (const NotDivisible&) {
                    break;
                }
            }
            it = (it->second == 0) ? den_.erase(it) : std::next(it);
        }
    }

    MPoly num_;
    DenMap den_;
};

}  // namespace minmod
