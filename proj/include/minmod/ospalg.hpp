// Finite-dimensional osp(1|2) and sl(2) representations, Casimir spectra,
// centraliser identities, and the affine Lie superalgebra with its spectral
// flow and zeta automorphisms.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "minmod/rational.hpp"

namespace minmod {

struct NotScalar : std::domain_error {
    explicit NotScalar(const std::string& what) : std::domain_error(what) {}
};
struct SectorMismatch : std::invalid_argument {
    explicit SectorMismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct NoConsistentConstant : std::domain_error {
    explicit NoConsistentConstant(const std::string& what) : std::domain_error(what) {}
};

using Matrix = std::vector<std::vector<Rational>>;

Matrix mat_zero(int n);
Matrix mat_identity(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Rational& s);
bool mat_equal(const Matrix& a, const Matrix& b);

// A representation by matrices in a weight basis. For osp(1|2) the
// generators are e, x, h, y, f; for sl(2) only e, h, f are present. The
// parity vector marks odd basis vectors (osp case).
struct SuperRepMatrices {
    int dim = 0;
    bool has_odd = false;  // osp vs plain sl(2)
    std::vector<int> parity;
    std::map<char, Matrix> gens;  // keys from "exhyf"

    const Matrix& gen(char c) const { return gens.at(c); }
};

// The (2*lambda+1)-dimensional simple osp(1|2) module of highest weight
// lambda (h-eigenvalue of the highest weight vector). All relations are
// verified internally at construction.
SuperRepMatrices osp_irrep(int lambda);

// The (lambda+1)-dimensional simple sl(2) module.
SuperRepMatrices sl2_irrep(int lambda);

// Super-Casimir Sigma = xy - yx + 1/2 (osp) and quadratic Casimir
// Q = h^2/2 + ef + fe scalars. Throws NotScalar if an operator fails to act
// as a scalar on the relevant component.
struct CasimirSpectrum {
    bool osp = false;
    Rational sigma_even, sigma_odd;  // osp only
    Rational casimir;                // Q (sl2) or (1/2)Sigma^2 - 1/8 check value (osp)
};
CasimirSpectrum casimir_spectrum(const SuperRepMatrices& rep);

// Exact matrix checks of the centraliser identities:
// osp:  yx = (1/2)(h - Sigma + 1/2),  fe = -(1/4)(h + Sigma + 3/2)(h - Sigma + 1/2);
// sl2:  fe = (1/2)(Q - h^2/2 - h).
struct CentralizerReport {
    bool yx_ok = false;  // osp only; true for sl2
    bool fe_ok = false;
};
CentralizerReport centralizer_identities(int lambda, bool osp);

// ---------------------------------------------------------------------------
// Affine generators a_m = a (x) t^m and the central element K.
// ---------------------------------------------------------------------------

enum class GenLabel { E, X, H, Y, F, K };

bool label_odd(GenLabel l);
std::string label_str(GenLabel l);

struct AffineGen {
    GenLabel label;
    Rational mode;  // 0 for K

    friend bool operator<(const AffineGen& a, const AffineGen& b) {
        if (a.label != b.label) return a.label < b.label;
        return a.mode < b.mode;
    }
    friend bool operator==(const AffineGen& a, const AffineGen& b) {
        return a.label == b.label && a.mode == b.mode;
    }
};

// A finite linear combination of affine generators (no zero coefficients).
using GenCombo = std::map<AffineGen, Rational>;

GenCombo combo_add(GenCombo a, const GenCombo& b, const Rational& scale = 1);

// [a_m, b_n] = [a,b]_{m+n} + m kappa(a,b) delta_{m+n,0} K, with the super
// bracket (anticommutator for two odd generators). Throws SectorMismatch if
// the mode indices are not compatible with a single sector.
GenCombo affine_bracket(const AffineGen& a, const AffineGen& b);

// Bilinear extension (generator parities decide the bracket type pairwise).
GenCombo combo_bracket(const GenCombo& a, const GenCombo& b);

// Spectral flow sigma^ell: e_n -> e_{n-2 ell}, x_n -> x_{n-ell},
// h_n -> h_n - 2 ell delta_{n,0} K, y_n -> y_{n+ell}, f_n -> f_{n+2 ell}.
GenCombo spectral_flow(const AffineGen& g, const Rational& ell);

// The algebra isomorphism zeta: e_n -> -f_{n+1}, x_n -> -y_{n+1/2},
// y_n -> x_{n-1/2}, f_n -> -e_{n-1}, h_n -> -h_n + c delta_{n,0} K, with c
// the unique constant making the map bracket-preserving (solved, not
// transcribed).
GenCombo zeta_twist(const AffineGen& g);

// The solved central constant c; throws NoConsistentConstant if the
// constraint system had no (or no unique) solution.
Rational zeta_central_constant();

}  // namespace minmod
