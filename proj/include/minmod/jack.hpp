// Jack symmetric polynomials P_lambda^(t) in n variables (monic "P"
// normalization, alpha-convention parameter: P_(2) = m_2 + 2/(t+1) m_11),
// the cycle-normalized inner product, norms, the constant-term oracle, the
// sigma-binomial pairing, and Taylor/translation expansions.
//
// At the special parameter t = -3 the coefficients are computed as truncated
// power series in t = -3 + eps and specialized at eps = 0; the result is
// certified exact by re-checking the Laplace-Beltrami eigen-equation in
// plain rational arithmetic.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "minmod/partitions.hpp"
#include "minmod/sympoly.hpp"
#include "minmod/upoly.hpp"

namespace minmod {

struct PoleAtParameter : std::domain_error {
    explicit PoleAtParameter(const std::string& what) : std::domain_error(what) {}
};
struct NotAdmissible : std::domain_error {
    explicit NotAdmissible(const std::string& what) : std::domain_error(what) {}
};
struct OutOfRange : std::out_of_range {
    explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Expansion sum_lam coeff * P_lam^(t).
struct JackExpansion {
    Rational t;
    std::map<Partition, Rational> terms;
};

// P_lambda^(t) in the monomial basis. Throws NotAdmissible for t = -3 with
// an inadmissible lambda, PoleAtParameter when a recursion denominator
// vanishes at a generic parameter.
SymPoly jack_poly(const Partition& lam, const Rational& t, int n);

// Triangular change of basis from monomials to Jack polynomials.
JackExpansion jack_expand(const SymPoly& f, const Rational& t, int n);

// <P_lam, P_lam> under the cycle normalization <1,1> = 1 (finite-n hook
// product; validated against constant_term_oracle by the tests).
Rational jack_norm(const Partition& lam, const Rational& t, int n);

// <f, g> at parameter t: sum over the shared Jack expansion.
Rational inner_product(const SymPoly& f, const SymPoly& g, int n, const Rational& t);

// Normalized constant term CT[prod_{i!=j}(1 - z_i/z_j)^k f(1/z) g(z)] /
// CT[prod_{i!=j}(1 - z_i/z_j)^k], the independent oracle for 1/t = k.
Rational constant_term_oracle(const SymPoly& f, const SymPoly& g, int n, int k);

// w^{|kappa|} <P_kappa^(-3), prod_i (1 + z_i/w)^{a sigma + b}>_n^t as an
// exact polynomial in sigma of degree |kappa|.
UPoly binomial_pairing(const Partition& kappa, const Rational& a, const Rational& b,
                       const Rational& t, int n);

// P_lam^(t)(z_1+w, ..., z_m+w) = sum_d w^d * (Jack expansion in z).
// Orders with zero coefficient are omitted.
std::map<int, JackExpansion> translate_expand(const Partition& lam, const Rational& t, int m);

// The unique admissible partition at w-order floor(m/2) - i in
// translate_expand(admp(m,1,0), -3, m); memoized.
Partition uniqp(int m, int i);

}  // namespace minmod
