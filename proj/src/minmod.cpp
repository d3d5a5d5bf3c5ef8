#include "minmod/minmod.hpp"

#include <algorithm>
#include <numeric>

namespace minmod {

AdmissiblePair validate(int u, int v) {
    if (u < 2) throw NotAdmissible("validate: u must be at least 2");
    if (v < 1) throw NotAdmissible("validate: v must be at least 1");
    if ((u - v) % 2 != 0) throw NotAdmissible("validate: u - v must be even");
    if (std::gcd(u, (u - v) / 2) != 1)
        throw NotAdmissible("validate: u and (u - v)/2 must be coprime");
    AdmissiblePair p;
    p.u = u;
    p.v = v;
    p.k = rat(u - 3 * v, 2 * v);
    p.xi2 = rat(u, v);
    return p;
}

Spectrum spectrum(const AdmissiblePair& pair, int i, int j) {
    Spectrum sp;
    int sign = ((i + j) % 2 == 0) ? 1 : -1;
    sp.lambda = rat(i - 1, 2) - rat(1 + sign, 4) - rat(pair.u * j, 2 * pair.v);
    sp.s = rat(i, 2) - rat(pair.u * j, 2 * pair.v);
    sp.q = (sp.s * sp.s - 1) / 2;
    return sp;
}

KacTables kac_tables(const AdmissiblePair& pair) {
    KacTables t;
    for (int i = 1; i <= pair.u - 1; ++i) {
        for (int j = 1; j <= pair.v - 1; ++j) {
            Spectrum sp = spectrum(pair, i, j);
            KacEntry e{i, j, sp.lambda, sp.s, sp.q};
            if ((i + j) % 2 != 0)
                t.ns.push_back(e);
            else
                t.r.push_back(e);
        }
    }
    for (const KacEntry& e : t.r) {
        std::pair<int, int> self{e.i, e.j};
        std::pair<int, int> partner{pair.u - e.i, pair.v - e.j};
        if (self <= partner) t.r_reduced.push_back(e);
    }
    return t;
}

ZhuImage zhu_image(const AdmissiblePair& pair, Sector sector) {
    KacTables t = kac_tables(pair);
    ZhuImage z;
    z.sector = sector;
    if (sector == Sector::NS) {
        z.e_power = (pair.u % 2 == 0) ? (pair.u - 2) / 2 : (pair.u - 1) / 2;
        z.x_factor = (pair.u % 2 == 0);
        z.g = UPoly(Rational(1));
        for (const KacEntry& e : t.ns) z.g = z.g * UPoly::linear(-e.s, 1);
    } else {
        z.e_power = (pair.u % 2 == 0) ? (pair.u - 2) / 2 : (pair.u - 1) / 2;
        z.x_factor = false;
        z.g = UPoly(Rational(1));
        for (const KacEntry& e : t.r_reduced) z.g = z.g * UPoly::linear(-e.q, 1);
    }
    return z;
}

std::vector<ModuleDescriptor> classify(const AdmissiblePair& pair) {
    KacTables t = kac_tables(pair);
    std::vector<ModuleDescriptor> out;
    auto add = [&](Sector sec, ModuleDescriptor::Family fam, int i, int j,
                   const Rational& lambda, const Rational& sq, bool rpar,
                   const std::string& excl) {
        ModuleDescriptor d;
        d.sector = sec;
        d.family = fam;
        d.i = i;
        d.j = j;
        d.lambda = lambda;
        d.sq = sq;
        d.parity_reversal_listed = rpar;
        d.exclusion = excl;
        out.push_back(d);
    };

    // NS sector: finite-dimensional F(lambda_{i,0}), i odd.
    for (int i = 1; i <= pair.u - 1; i += 2)
        add(Sector::NS, ModuleDescriptor::Finite, i, 0,
            spectrum(pair, i, 0).lambda, 0, true, "");
    // Highest- and lowest-weight modules over the NS Kac table.
    for (const KacEntry& e : t.ns) {
        add(Sector::NS, ModuleDescriptor::HighestWeight, e.i, e.j, e.lambda, 0,
            true, "");
        add(Sector::NS, ModuleDescriptor::LowestWeight, e.i, e.j, -e.lambda, 0,
            true, "");
    }
    // Dense (relaxed) modules R([lambda], s_{i,j}); the coset [lambda] must
    // avoid the highest/lowest-weight points.
    for (const KacEntry& e : t.ns)
        add(Sector::NS, ModuleDescriptor::Dense, e.i, e.j, 0, e.s, false,
            "s^2 != (mu + 1/2)^2 for all mu in [lambda] and [lambda + 1]");

    // R sector: finite-dimensional F(lambda_{i,0}), i even.
    for (int i = 2; i <= pair.u - 1; i += 2)
        add(Sector::R, ModuleDescriptor::Finite, i, 0,
            spectrum(pair, i, 0).lambda, 0, true, "");
    for (const KacEntry& e : t.r) {
        add(Sector::R, ModuleDescriptor::HighestWeight, e.i, e.j, e.lambda, 0,
            true, "");
        add(Sector::R, ModuleDescriptor::LowestWeight, e.i, e.j, -e.lambda, 0,
            true, "");
    }
    // Dense R-sector modules R([lambda], q_{i,j}), one per reduced class.
    for (const KacEntry& e : t.r_reduced)
        add(Sector::R, ModuleDescriptor::Dense, e.i, e.j, 0, e.q, true,
            "q != mu (mu + 2) for all mu in [lambda]");

    return out;
}

}  // namespace minmod
