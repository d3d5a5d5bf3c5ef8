// Minimal-model arithmetic: admissible pairs, Kac tables and spectra,
// predicted Zhu-algebra images, degree saturation, and the classification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "minmod/minmod.hpp"

using namespace minmod;

namespace {

std::string reject_message(int u, int v) {
    try {
        validate(u, v);
    } catch (const NotAdmissible& e) {
        return e.what();
    }
    return "";
}

std::vector<AdmissiblePair> all_pairs(int max_uv) {
    std::vector<AdmissiblePair> out;
    for (int u = 2; u <= max_uv; ++u)
        for (int v = 1; v <= max_uv; ++v) {
            if ((u - v) % 2 != 0) continue;
            if (std::gcd(u, std::abs(u - v) / 2) != 1) continue;
            out.push_back(validate(u, v));
        }
    return out;
}

}  // namespace

TEST_CASE("validate: levels and rejections") {
    AdmissiblePair p = validate(2, 4);
    CHECK(p.k == rat(-5, 4));
    CHECK(p.xi2 == rat(1, 2));
    CHECK(validate(4, 2).k == rat(-1, 2));
    CHECK(validate(3, 1).k == 0);
    CHECK(validate(3, 5).k == rat(-6, 5));

    CHECK(reject_message(1, 1) == "validate: u must be at least 2");
    CHECK(reject_message(2, 0) == "validate: v must be at least 1");
    CHECK(reject_message(3, 2) == "validate: u - v must be even");
    CHECK(reject_message(6, 2) == "validate: u and (u - v)/2 must be coprime");
    CHECK(reject_message(2, 6) == "validate: u and (u - v)/2 must be coprime");
}

TEST_CASE("spectrum hand values") {
    AdmissiblePair p = validate(2, 4);
    Spectrum s12 = spectrum(p, 1, 2);
    CHECK(s12.s == 0);
    CHECK(s12.lambda == rat(-1, 2));
    CHECK(s12.q == rat(-1, 2));
    Spectrum s11 = spectrum(p, 1, 1);
    CHECK(s11.s == rat(1, 4));
    CHECK(s11.q == rat(-15, 32));

    AdmissiblePair q = validate(3, 5);
    CHECK(spectrum(q, 1, 2).s == rat(-1, 10));
    CHECK(spectrum(q, 1, 4).s == rat(-7, 10));
    CHECK(spectrum(q, 2, 1).s == rat(7, 10));
    CHECK(spectrum(q, 2, 3).s == rat(1, 10));
}

TEST_CASE("kac tables for (2,4)") {
    KacTables t = kac_tables(validate(2, 4));
    REQUIRE(t.ns.size() == 1);
    CHECK(t.ns[0].i == 1);
    CHECK(t.ns[0].j == 2);
    REQUIRE(t.r.size() == 2);
    REQUIRE(t.r_reduced.size() == 1);
    CHECK(t.r_reduced[0].i == 1);
    CHECK(t.r_reduced[0].j == 1);
}

TEST_CASE("kac invariants for all admissible pairs with u, v <= 12") {
    for (const AdmissiblePair& p : all_pairs(12)) {
        KacTables t = kac_tables(p);
        // Sector split by parity of i + j, and the reflection antisymmetry
        // s_{u-i, v-j} = -s_{i,j}; q is determined by s.
        for (const KacEntry& e : t.ns) CHECK((e.i + e.j) % 2 == 1);
        std::vector<const std::vector<KacEntry>*> tabs{&t.ns, &t.r};
        for (const auto* tab : tabs)
            for (const KacEntry& e : *tab) {
                CHECK(1 <= e.i);
                CHECK(e.i <= p.u - 1);
                CHECK(1 <= e.j);
                CHECK(e.j <= p.v - 1);
                Spectrum refl = spectrum(p, p.u - e.i, p.v - e.j);
                CHECK(refl.s == -e.s);
                CHECK(e.q == (e.s * e.s - 1) / 2);
                CHECK(e.lambda == spectrum(p, e.i, e.j).lambda);
            }
        // Reduced table: one lex-min representative per reflection class.
        for (const KacEntry& e : t.r_reduced) {
            std::pair<int, int> self{e.i, e.j};
            std::pair<int, int> partner{p.u - e.i, p.v - e.j};
            CHECK(self <= partner);
        }
        CHECK(2 * t.r_reduced.size() >= t.r.size());
        // Degree saturation: slack in {0, 1/2}.
        Rational ns_slack =
            rat((p.u - 1) * (p.v - 1), 2) - Rational((long)t.ns.size());
        Rational r_slack = rat((p.u - 1) * (p.v - 1) + 1, 2) -
                           Rational(2 * (long)t.r_reduced.size());
        CHECK((ns_slack == 0 || ns_slack == rat(1, 2)));
        CHECK((r_slack == 0 || r_slack == rat(1, 2)));
    }
}

TEST_CASE("zhu image hand values") {
    AdmissiblePair p = validate(2, 4);
    ZhuImage ns = zhu_image(p, Sector::NS);
    CHECK(ns.e_power == 0);
    CHECK(ns.x_factor);
    CHECK(ns.g == UPoly::x());  // Sigma
    ZhuImage r = zhu_image(p, Sector::R);
    CHECK(r.e_power == 0);
    CHECK_FALSE(r.x_factor);
    CHECK(r.g == UPoly::x() + UPoly(rat(15, 32)));  // Q + 15/32

    AdmissiblePair q = validate(4, 2);
    ZhuImage qns = zhu_image(q, Sector::NS);
    CHECK(qns.e_power == 1);
    CHECK(qns.x_factor);
    CHECK(qns.g == UPoly::x());
    ZhuImage qr = zhu_image(q, Sector::R);
    CHECK(qr.e_power == 1);
    CHECK(qr.g == UPoly::x() + UPoly(rat(3, 8)));

    // Empty Kac table: pure power of e.
    ZhuImage triv = zhu_image(validate(3, 1), Sector::NS);
    CHECK(triv.e_power == 1);
    CHECK_FALSE(triv.x_factor);
    CHECK(triv.g == UPoly(Rational(1)));
}

TEST_CASE("zhu image structure for all pairs with u, v <= 12") {
    for (const AdmissiblePair& p : all_pairs(12)) {
        KacTables t = kac_tables(p);
        ZhuImage ns = zhu_image(p, Sector::NS);
        CHECK(ns.e_power == (p.u % 2 == 0 ? (p.u - 2) / 2 : (p.u - 1) / 2));
        CHECK(ns.x_factor == (p.u % 2 == 0));
        CHECK(ns.g.degree() == (int)t.ns.size());
        CHECK(ns.g.coeff(ns.g.degree()) == 1);
        for (const KacEntry& e : t.ns) CHECK(ns.g.eval(e.s) == 0);
        // The NS root multiset is negation-closed, so g(-Sigma) = +-g(Sigma).
        UPoly refl = ns.g.reflected();
        if (ns.g.degree() % 2 == 1) refl = refl * Rational(-1);
        CHECK(refl == ns.g);

        ZhuImage r = zhu_image(p, Sector::R);
        CHECK(r.e_power == ns.e_power);
        CHECK_FALSE(r.x_factor);
        CHECK(r.g.degree() == (int)t.r_reduced.size());
        CHECK(r.g.coeff(r.g.degree()) == 1);
        for (const KacEntry& e : t.r_reduced) CHECK(r.g.eval(e.q) == 0);
    }
}

TEST_CASE("classification sizes for the seven reference pairs") {
    struct Row {
        int u, v;
        size_t count;
    };
    for (const Row& row : std::vector<Row>{{2, 4, 9},
                                           {3, 5, 24},
                                           {4, 6, 44},
                                           {3, 1, 2},
                                           {5, 1, 4},
                                           {4, 2, 11},
                                           {5, 3, 26}}) {
        auto mods = classify(validate(row.u, row.v));
        CHECK(mods.size() == row.count);
        // All descriptors distinct.
        for (size_t a = 0; a < mods.size(); ++a)
            for (size_t b = a + 1; b < mods.size(); ++b)
                CHECK_FALSE(mods[a] == mods[b]);
    }
}

TEST_CASE("classification families for (2,4)") {
    auto mods = classify(validate(2, 4));
    int ns_fin = 0, ns_hw = 0, ns_lw = 0, ns_dense = 0;
    int r_fin = 0, r_hw = 0, r_lw = 0, r_dense = 0;
    for (const ModuleDescriptor& m : mods) {
        bool ns = m.sector == Sector::NS;
        switch (m.family) {
            case ModuleDescriptor::Finite: (ns ? ns_fin : r_fin)++; break;
            case ModuleDescriptor::HighestWeight: (ns ? ns_hw : r_hw)++; break;
            case ModuleDescriptor::LowestWeight: (ns ? ns_lw : r_lw)++; break;
            case ModuleDescriptor::Dense: (ns ? ns_dense : r_dense)++; break;
        }
        if (m.family == ModuleDescriptor::Dense) CHECK_FALSE(m.exclusion.empty());
    }
    CHECK(ns_fin == 1);
    CHECK(ns_hw == 1);
    CHECK(ns_lw == 1);
    CHECK(ns_dense == 1);
    CHECK(r_fin == 0);
    CHECK(r_hw == 2);
    CHECK(r_lw == 2);
    CHECK(r_dense == 1);
    // Highest- and lowest-weight partners carry opposite weight parameters.
    for (const ModuleDescriptor& m : mods)
        if (m.family == ModuleDescriptor::HighestWeight)
            CHECK(std::count_if(mods.begin(), mods.end(),
                                [&](const ModuleDescriptor& o) {
                                    return o.family ==
                                               ModuleDescriptor::LowestWeight &&
                                           o.sector == m.sector &&
                                           o.lambda == -m.lambda;
                                }) >= 1);
}
