// Symmetric polynomials in n variables in the monomial basis, with exact
// rational coefficients, plus conversions to and from expanded MPoly form.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "minmod/mpoly.hpp"
#include "minmod/partitions.hpp"

namespace minmod {

struct NotSymmetric : std::domain_error {
    NotSymmetric() : std::domain_error("SymPoly: polynomial is not symmetric") {}
};

// Sum over partitions lam (length <= n) of coeff * m_lam.
struct SymPoly {
    int n = 0;
    std::map<Partition, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const Partition& lam, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(lam, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    SymPoly& operator+=(const SymPoly& o) {
        for (const auto& [l, c] : o.terms) add(l, c);
        return *this;
    }
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) {
        for (const auto& [l, c] : b.terms) a.add(l, -c);
        return a;
    }
    friend SymPoly operator*(const SymPoly& a, const Rational& s) {
        SymPoly r{a.n, {}};
        if (s == 0) return r;
        for (const auto& [l, c] : a.terms) r.terms.emplace(l, c * s);
        return r;
    }
    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.n == b.n && a.terms == b.terms;
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

    // Splits into degree-homogeneous components, keyed by degree.
    std::map<int, SymPoly> homogeneous_parts() const {
        std::map<int, SymPoly> parts;
        for (const auto& [l, c] : terms) {
            auto [it, ins] = parts.emplace(weight(l), SymPoly{n, {}});
            it->second.add(l, c);
        }
        return parts;
    }
};

// All distinct permutations of lam padded to n slots (the monomials of m_lam).
inline std::vector<std::vector<int>> monomial_orbit(const Partition& lam, int n) {
    std::vector<int> e(trimmed(lam));
    if (static_cast<int>(e.size()) > n)
        throw std::invalid_argument("monomial_orbit: partition longer than n");
    e.resize(n, 0);
    std::sort(e.begin(), e.end());
    std::vector<std::vector<int>> orbit;
    do {
        orbit.push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return orbit;
}

// m_lam as an expanded polynomial in n variables.
inline MPoly monomial_sym_mpoly(const Partition& lam, int n) {
    MPoly p(n);
    for (const auto& e : monomial_orbit(lam, n)) p.add_term(e, 1);
    return p;
}

inline MPoly to_mpoly(const SymPoly& f) {
    MPoly p(f.n);
    for (const auto& [lam, c] : f.terms) p += monomial_sym_mpoly(lam, f.n) * c;
    return p;
}

// Collects an expanded symmetric polynomial into the monomial basis; throws
// NotSymmetric if the expansion is not symmetric. Exponents must be >= 0.
inline SymPoly to_sympoly(const MPoly& p, int n) {
    if (p.arity() != n) throw std::invalid_argument("to_sympoly: arity mismatch");
    SymPoly f{n, {}};
    std::map<Partition, std::pair<Rational, size_t>> orbits;  // coeff, count
    for (const auto& [e, c] : p.terms()) {
        Partition lam(e);
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        if (!lam.empty() && lam.back() < 0) throw NotSymmetric();
        auto [it, inserted] = orbits.emplace(trimmed(lam), std::make_pair(c, size_t{1}));
        if (!inserted) {
            if (it->second.first != c) throw NotSymmetric();
            ++it->second.second;
        }
    }
    for (const auto& [lam, cc] : orbits) {
        if (cc.second != monomial_orbit(lam, n).size()) throw NotSymmetric();
        f.add(lam, cc.first);
    }
    return f;
}

}  // namespace minmod
