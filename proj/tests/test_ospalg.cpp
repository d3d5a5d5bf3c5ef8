// osp(1|2) and sl(2) representation layer: irreps with verified relations,
// Casimir spectra, centraliser identities, affine brackets, spectral flow,
// and the zeta automorphism with its solved central constant.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "minmod/ospalg.hpp"

using namespace minmod;

namespace {

GenCombo combo_of(GenLabel l, const Rational& mode, const Rational& c = 1) {
    GenCombo g;
    g[AffineGen{l, mode}] = c;
    return g;
}

GenCombo map_combo(const GenCombo& in, GenCombo (*f)(const AffineGen&)) {
    GenCombo out;
    for (const auto& [g, c] : in) out = combo_add(out, f(g), c);
    return out;
}

GenCombo flow_combo(const GenCombo& in, const Rational& ell) {
    GenCombo out;
    for (const auto& [g, c] : in) out = combo_add(out, spectral_flow(g, ell), c);
    return out;
}

}  // namespace

TEST_CASE("osp irreps: dimensions and casimir spectra") {
    for (int lam = 0; lam <= 4; ++lam) {
        SuperRepMatrices rep = osp_irrep(lam);
        CHECK(rep.dim == 2 * lam + 1);
        CHECK(rep.has_odd == true);
        CasimirSpectrum cs = casimir_spectrum(rep);
        CHECK(cs.osp);
        // Sigma acts as +-(lambda + 1/2) on the two parity components, and
        // (1/2) Sigma^2 - 1/8 = lambda (lambda + 1) / 2 on both.
        CHECK(cs.sigma_even * cs.sigma_even == rat_pow(Rational(lam) + rat(1, 2), 2));
        if (lam > 0) {
            CHECK(cs.sigma_odd == -cs.sigma_even);
        }
        CHECK(cs.casimir == rat(lam * (lam + 1), 2));
    }
}

TEST_CASE("sl2 irreps: dimensions and quadratic casimir") {
    for (int lam = 0; lam <= 4; ++lam) {
        SuperRepMatrices rep = sl2_irrep(lam);
        CHECK(rep.dim == lam + 1);
        CHECK_FALSE(rep.has_odd);
        CasimirSpectrum cs = casimir_spectrum(rep);
        CHECK_FALSE(cs.osp);
        CHECK(cs.casimir == rat(lam * (lam + 2), 2));
    }
}

TEST_CASE("centraliser identities hold exactly") {
    for (int lam = 0; lam <= 4; ++lam) {
        CentralizerReport osp = centralizer_identities(lam, true);
        CHECK(osp.yx_ok);
        CHECK(osp.fe_ok);
        CentralizerReport sl2 = centralizer_identities(lam, false);
        CHECK(sl2.fe_ok);
    }
}

TEST_CASE("affine bracket hand values") {
    GenCombo ef = affine_bracket(AffineGen{GenLabel::E, 1}, AffineGen{GenLabel::F, -1});
    GenCombo expect_ef = combo_add(combo_of(GenLabel::H, 0), combo_of(GenLabel::K, 0));
    CHECK(ef == expect_ef);

    GenCombo xy = affine_bracket(AffineGen{GenLabel::X, rat(1, 2)},
                                 AffineGen{GenLabel::Y, rat(-1, 2)});
    CHECK(xy == expect_ef);  // {x_{1/2}, y_{-1/2}} = h_0 + K

    GenCombo hh = affine_bracket(AffineGen{GenLabel::H, 1}, AffineGen{GenLabel::H, -1});
    CHECK(hh == combo_of(GenLabel::K, 0, 2));

    // Non-central term only: [e_0, f_1] = h_1.
    CHECK(affine_bracket(AffineGen{GenLabel::E, 0}, AffineGen{GenLabel::F, 1}) ==
          combo_of(GenLabel::H, 1));

    // K is central.
    CHECK(affine_bracket(AffineGen{GenLabel::K, 0}, AffineGen{GenLabel::E, 1}).empty());
}

TEST_CASE("sector mismatch is rejected") {
    CHECK_THROWS_AS(affine_bracket(AffineGen{GenLabel::X, 0},
                                   AffineGen{GenLabel::X, rat(1, 2)}),
                    SectorMismatch);
}

TEST_CASE("graded jacobi identity on sample triples") {
    struct Triple {
        AffineGen a, b, c;
    };
    std::vector<Triple> triples = {
        {{GenLabel::E, 1}, {GenLabel::F, 0}, {GenLabel::H, -1}},
        {{GenLabel::X, rat(1, 2)}, {GenLabel::Y, rat(1, 2)}, {GenLabel::X, rat(-1, 2)}},
        {{GenLabel::E, 0}, {GenLabel::Y, rat(-1, 2)}, {GenLabel::X, rat(1, 2)}},
        {{GenLabel::H, 1}, {GenLabel::X, rat(-1, 2)}, {GenLabel::Y, rat(-1, 2)}},
    };
    for (const auto& t : triples) {
        GenCombo A = combo_of(t.a.label, t.a.mode);
        GenCombo B = combo_of(t.b.label, t.b.mode);
        GenCombo C = combo_of(t.c.label, t.c.mode);
        Rational sign = (label_odd(t.a.label) && label_odd(t.b.label)) ? -1 : 1;
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        GenCombo lhs = combo_bracket(A, combo_bracket(B, C));
        GenCombo rhs = combo_add(combo_bracket(combo_bracket(A, B), C),
                                 combo_bracket(B, combo_bracket(A, C)), sign);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("spectral flow composes additively") {
    std::vector<Rational> ells = {rat(1, 2), rat(-1, 2), Rational(1), Rational(-1)};
    std::vector<AffineGen> gens = {
        {GenLabel::E, 1},  {GenLabel::X, rat(1, 2)}, {GenLabel::H, 0},
        {GenLabel::Y, rat(-3, 2)}, {GenLabel::F, -2},     {GenLabel::K, 0}};
    for (const Rational& l1 : ells)
        for (const Rational& l2 : ells)
            for (const AffineGen& g : gens) {
                GenCombo once = flow_combo(spectral_flow(g, l2), l1);
                CHECK(once == spectral_flow(g, Rational(l1 + l2)));
            }
}

TEST_CASE("spectral flow preserves brackets") {
    std::vector<std::pair<AffineGen, AffineGen>> pairs = {
        {{GenLabel::E, 1}, {GenLabel::F, -1}},
        {{GenLabel::X, rat(1, 2)}, {GenLabel::Y, rat(-1, 2)}},
        {{GenLabel::H, 1}, {GenLabel::H, -1}},
        {{GenLabel::E, 0}, {GenLabel::Y, rat(1, 2)}},
        {{GenLabel::H, 0}, {GenLabel::X, rat(3, 2)}},
    };
    for (const Rational& ell : {rat(1, 2), Rational(-1)}) {
        for (const auto& [a, b] : pairs) {
            GenCombo lhs = flow_combo(affine_bracket(a, b), ell);
            GenCombo rhs = combo_bracket(spectral_flow(a, ell), spectral_flow(b, ell));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("zeta twist: solved constant and bracket preservation") {
    CHECK(zeta_central_constant() == 1);
    // Generator images.
    CHECK(zeta_twist(AffineGen{GenLabel::E, 0}) == combo_of(GenLabel::F, 1, -1));
    CHECK(zeta_twist(AffineGen{GenLabel::X, rat(1, 2)}) ==
          combo_of(GenLabel::Y, 1, -1));
    CHECK(zeta_twist(AffineGen{GenLabel::Y, rat(1, 2)}) == combo_of(GenLabel::X, 0));
    CHECK(zeta_twist(AffineGen{GenLabel::F, 0}) == combo_of(GenLabel::E, -1, -1));
    CHECK(zeta_twist(AffineGen{GenLabel::H, 0}) ==
          combo_add(combo_of(GenLabel::H, 0, -1),
                    combo_of(GenLabel::K, 0, zeta_central_constant())));
    CHECK(zeta_twist(AffineGen{GenLabel::K, 0}) == combo_of(GenLabel::K, 0));

    std::vector<std::pair<AffineGen, AffineGen>> pairs = {
        {{GenLabel::E, 1}, {GenLabel::F, -1}},
        {{GenLabel::X, rat(1, 2)}, {GenLabel::Y, rat(-1, 2)}},
        {{GenLabel::H, 1}, {GenLabel::H, -1}},
        {{GenLabel::E, 0}, {GenLabel::F, 0}},
        {{GenLabel::X, rat(1, 2)}, {GenLabel::X, rat(-1, 2)}},
        {{GenLabel::H, 0}, {GenLabel::E, 2}},
    };
    for (const auto& [a, b] : pairs) {
        GenCombo lhs = map_combo(affine_bracket(a, b), &zeta_twist);
        GenCombo rhs = combo_bracket(zeta_twist(a), zeta_twist(b));
        CHECK(lhs == rhs);
    }
}
