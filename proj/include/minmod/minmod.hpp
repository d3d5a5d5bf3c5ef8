// Admissible-level arithmetic for the osp(1|2) minimal models: Kac tables
// and spectra, predicted Zhu-algebra images of the singular vectors, degree
// bounds, and the classification of simple relaxed modules.
#pragma once

#include <string>
#include <vector>

#include "minmod/jack.hpp"  // NotAdmissible
#include "minmod/rational.hpp"
#include "minmod/upoly.hpp"

namespace minmod {

enum class Sector { NS, R };

inline std::string sector_str(Sector s) { return s == Sector::NS ? "ns" : "r"; }

struct AdmissiblePair {
    int u = 0, v = 0;
    Rational k;    // level (u - 3v) / (2v)
    Rational xi2;  // u / v
};

// Validates u >= 2, v >= 1, u - v even, gcd(u, (u-v)/2) = 1; throws
// NotAdmissible naming the violated condition.
AdmissiblePair validate(int u, int v);

struct KacEntry {
    int i = 0, j = 0;
    Rational lambda, s, q;
};

struct KacTables {
    std::vector<KacEntry> ns, r;
    // One representative per class of (i,j) ~ (u-i, v-j), the lexicographic
    // minimum of each class.
    std::vector<KacEntry> r_reduced;
};

KacTables kac_tables(const AdmissiblePair& pair);

struct Spectrum {
    Rational lambda, s, q;
};

// lambda_{i,j}, s_{i,j}, q_{i,j} for arbitrary integers i, j.
Spectrum spectrum(const AdmissiblePair& pair, int i, int j);

// The predicted image of the singular vector in the (twisted) Zhu algebra:
// e^{e_power} [x] g(Sigma) in the NS sector, e^{e_power} g_P(Q) in the R
// sector, with g monic.
struct ZhuImage {
    Sector sector = Sector::NS;
    int e_power = 0;
    bool x_factor = false;
    UPoly g;  // variable Sigma (NS) or Q (R)
};

ZhuImage zhu_image(const AdmissiblePair& pair, Sector sector);

struct ModuleDescriptor {
    Sector sector = Sector::NS;
    enum Family { Finite, HighestWeight, LowestWeight, Dense } family = Finite;
    int i = 0, j = 0;       // Kac labels (j = 0 for the finite families)
    Rational lambda;        // weight parameter (finite/hw/lw)
    Rational sq;            // s_{i,j} (NS dense) or q_{i,j} (R dense)
    bool parity_reversal_listed = false;  // the theorem lists the reversal too
    std::string exclusion;  // symbolic constraint for the dense families

    friend bool operator==(const ModuleDescriptor& a, const ModuleDescriptor& b) {
        return a.sector == b.sector && a.family == b.family && a.i == b.i &&
               a.j == b.j && a.lambda == b.lambda && a.sq == b.sq;
    }
};

std::vector<ModuleDescriptor> classify(const AdmissiblePair& pair);

}  // namespace minmod
