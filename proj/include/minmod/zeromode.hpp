// Zero-mode polynomials of the singular vectors: two independent
// constructions (a dressed ghost correlator and a Jack binomial pairing) of
// the symmetric-function image, plus the comparison against the predicted
// Zhu-algebra image.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minmod/correlators.hpp"
#include "minmod/minmod.hpp"
#include "minmod/partitions.hpp"
#include "minmod/upoly.hpp"

namespace minmod {

// Everything the two constructions need for a given admissible pair and
// sector: the pairing parameters, the variable count, and the partition
// family with its Taylor coefficients.
struct Regime {
    AdmissiblePair pair;
    Sector sector = Sector::NS;
    bool v_dominant = false;  // v > u branch (u > v otherwise)
    int n = 0;                // number of z variables, min(u,v) - 1
    Rational t_prime;         // Jack parameter of the pairing
    Rational a, b;            // exponents of the binomial pairing
    std::vector<Partition> kappas;  // one summand per family member
    std::vector<Rational> coeffs;   // matching Taylor coefficients
};

Regime build_regime(const AdmissiblePair& pair, Sector sector);

// Path B: the binomial-pairing summands c_i * pairing(kappa_i, a, b, t', n),
// polynomials in sigma (s- or sqrt(2q+1)-variable).
std::vector<UPoly> summand_polynomials(const Regime& regime);

// Path A: the same summands extracted from the dressed free-field
// correlator; each w-order must reduce to a single Jack polynomial.
std::vector<UPoly> summand_polynomials_correlator(const Regime& regime);

// The monic predicted factor in the sigma variable: the NS product
// prod (sigma - s_{ij}) over the NS Kac table, or the negation-closed
// sigma-image prod (sigma - s)(sigma + s) of the R-sector g_P.
UPoly predicted_factors(const AdmissiblePair& pair, Sector sector);

// Cells dominated by every kappa in the family, and the rho-factor
// prod_{cells} (sigma - s_{index(cell)}) they induce.
Partition rho_partition(const Regime& regime);
UPoly rho_factor(const Regime& regime);

struct VerificationReport {
    int u = 0, v = 0;
    Sector sector = Sector::NS;
    std::vector<Partition> kappas;
    std::vector<UPoly> summands;          // path B
    std::vector<UPoly> summands_corr;     // path A
    std::vector<Rational> path_ratios;    // per-summand A/B leading ratio
    bool paths_agree = false;             // one global scalar relates A and B
    UPoly gcd;                            // monic gcd of the path-B summands
    UPoly predicted;                      // predicted_factors
    UPoly rho;                            // rho_factor
    bool rho_divides_all = false;
    bool predicted_roots_covered = false;  // roots(pred) within +-roots(rho)
    bool predicted_divides_sym = false;    // predicted | monic(G(s) G(-s))
    bool degrees_match = false;            // deg summand_i == |kappa_i|
    bool pass = false;
    std::string first_failure;
    std::int64_t elapsed_ms = 0;
};

VerificationReport verify_svimage(const AdmissiblePair& pair, Sector sector);

}  // namespace minmod
