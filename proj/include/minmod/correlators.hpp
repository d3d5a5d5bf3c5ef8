// Exact free-field correlation functions: bc-ghost pfaffian correlators,
// beta-gamma rising-factorial factors, Vandermonde-dressed correlator
// polynomials expanded in the t = -3 Jack basis, and Heisenberg
// vertex-operator prefactors.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "minmod/jack.hpp"
#include "minmod/ratfun.hpp"
#include "minmod/upoly.hpp"
#include "minmod/wick.hpp"

namespace minmod {

struct CountMismatch : std::invalid_argument {
    explicit CountMismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct NotPolynomial : std::domain_error {
    explicit NotPolynomial(const std::string& what) : std::domain_error(what) {}
};
struct NonIntegerExponent : std::domain_error {
    explicit NonIntegerExponent(const std::string& what) : std::domain_error(what) {}
};

// Vandermonde determinant prod_{i<j} (z_i - z_j) in the first nz of `arity`
// variables.
MPoly vandermonde(int arity, int nz);

// <prod_{i=1}^{2n_pairs} (c(z_i) z_i^m - b(z_i))> as an exact rational
// function: (-1)^n times the pfaffian of the sector's contraction kernel.
// Ramond results are in zeta variables (z_i = zeta_i^2).
RatFun bc_correlator(int n_pairs, int m, GhostFunctional f);

// Scalar part of the beta-gamma correlator with n insertions, as a
// polynomial in the ghost weight q: gamma_1^n -> n! (constant), gamma_0^n ->
// the rising factorial (q)_n; the gamma_0 case also dresses every beta
// argument by z^{-1} (reported through `per_variable_exponent`).
struct BgFactor {
    UPoly q_poly;
    int per_variable_exponent;  // 0 for gamma_1, -1 for gamma_0
};
BgFactor bg_factor(bool gamma_zero, int n);

// One dressed-correlator computation. The fields are n_fields copies of
// (beta(x_i) c(x_i) - b(x_i)) at x_i = z_i (+ w when shift_w), with optional
// zero-mode atoms; the beta contractions are folded into an effective
// c-dressing exponent m on each field.
struct CorrelatorSpec {
    GhostFunctional functional = GhostFunctional::NSPlus;
    int n_fields = 0;
    int m = 0;             // effective c-dressing exponent (0: gamma_1, -1: gamma_0)
    bool gamma_zero = false;  // selects (q)_g vs g! for the beta-gamma scalar
    int gamma_power = -1;  // expected insertion count; -1 = derive from atoms
    bool b0 = false;       // extra b_0 atom on the left
    bool cw = false;       // extra c(w) atom on the right
    bool shift_w = false;  // fields at z_i + w
    int zpow = 0;          // prefactor prod_i z_i^{zpow}
};

struct DressedCorrelator {
    UPoly q_scalar;        // (q)_g or g!
    int beta_count = 0;    // g: number of beta contractions per matching
    // The cleared object: prod z^zpow * Delta(z) * <...> * prod(z_i+w) [NS
    // shift] with Ramond half-integer prefactors removed; Laurent polynomial
    // in (z_1..z_N, w), w last.
    MPoly cleared;
    // Ramond bookkeeping for the removed prefactors: the correlator carries
    // an extra prod_i x_i^{-1/2} (x_i the field positions) and w^{+1/2} per
    // c(w) atom.
    bool ramond_half_powers = false;
    int w_half_power = 0;
    // cleared with z -> 1/z, normalized per z variable to minimum exponent 0
    // (shifts recorded), expanded per w-order in the t = -3 Jack basis.
    std::vector<int> z_shift;
    std::map<int, JackExpansion> orders;
};

DressedCorrelator dressed_correlator(const CorrelatorSpec& spec);

// Heisenberg vertex-operator prefactor <q_bra| V_{p_1}(z_1) ... V_{p_k}(z_k)
// |p_ket> for a lattice with the given symmetric pairing matrix: zero unless
// q_bra = p_ket + sum p_i, otherwise prod_{i<j} (z_i - z_j)^{(p_i,p_j)}
// prod_i z_i^{(p_ket, p_i)}.
struct VertexPrefactor {
    bool neutral = false;
    std::map<std::pair<int, int>, Rational> pair_exponents;  // (i,j), i<j
    std::vector<Rational> z_exponents;

    // Materializes the monomial factor; throws NonIntegerExponent if any
    // exponent is not an integer (z_i - z_j factors require nonnegative
    // integer exponents).
    MPoly as_mpoly(int arity) const;
};
VertexPrefactor heisenberg_prefactor(const std::vector<Rational>& q_bra,
                                     const std::vector<Rational>& p_ket,
                                     const std::vector<std::vector<Rational>>& charges,
                                     const std::vector<std::vector<Rational>>& pairing);

}  // namespace minmod
