// Ghost correlators: pfaffian kernels against the Wick mode-expansion
// oracle, beta-gamma scalar factors, dressed correlators expanded in the
// t = -3 Jack basis, and Heisenberg vertex prefactors.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "minmod/correlators.hpp"
#include "minmod/pfaffian.hpp"

using namespace minmod;

namespace {

// Ramond correlators live in zeta variables; the matching Vandermonde is
// prod (zeta_i^2 - zeta_j^2).
MPoly sector_vandermonde(GhostFunctional f, int N) {
    if (f != GhostFunctional::Ramond) return vandermonde(N, N);
    MPoly v = MPoly::one(N);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            v = v * (MPoly::var(N, i, 2) - MPoly::var(N, j, 2));
    return v;
}

MPoly window(const MPoly& p, int bound) {
    MPoly w(p.arity());
    for (const auto& [e, c] : p.terms()) {
        bool ok = true;
        for (int x : e) ok = ok && std::abs(x) <= bound;
        if (ok) w.add_term(e, c);
    }
    return w;
}

}  // namespace

TEST_CASE("vandermonde") {
    MPoly v = vandermonde(2, 2);
    CHECK(v == MPoly::var(2, 0) - MPoly::var(2, 1));
    CHECK(vandermonde(3, 3).terms().size() == 6);
}

TEST_CASE("bc correlator hand values, two fields") {
    // NS+, m=0: <(c-b)(z1)(c-b)(z2)> = -2/(z1-z2).
    RatFun r = bc_correlator(1, 0, GhostFunctional::NSPlus);
    MPoly num = (r * RatFun(vandermonde(2, 2))).as_mpoly();
    CHECK(num == MPoly::constant(2, -2));
    // NS+, m=1: -(z1+z2)/(z1-z2).
    RatFun r1 = bc_correlator(1, 1, GhostFunctional::NSPlus);
    CHECK((r1 * RatFun(vandermonde(2, 2))).as_mpoly() ==
          MPoly::constant(2, -1) * (MPoly::var(2, 0) + MPoly::var(2, 1)));
}

TEST_CASE("wick oracle agreement, 2n = 2, all sectors") {
    for (auto f : {GhostFunctional::NSPlus, GhostFunctional::NSMinus,
                   GhostFunctional::Ramond}) {
        for (int m : {0, 1}) {
            RatFun c = bc_correlator(1, m, f);
            MPoly van = sector_vandermonde(f, 2);
            MPoly exact = (c * RatFun(van)).as_mpoly();
            MPoly oracle = wick_bc_correlator(2, m, f, 10) * van;
            CHECK(window(oracle, 6) == window(exact, 6));
        }
    }
}

TEST_CASE("wick oracle agreement, 2n = 4, all sectors") {
    for (auto f : {GhostFunctional::NSPlus, GhostFunctional::NSMinus,
                   GhostFunctional::Ramond}) {
        RatFun c = bc_correlator(2, 0, f);
        MPoly van = sector_vandermonde(f, 4);
        MPoly exact = (c * RatFun(van)).as_mpoly();
        MPoly oracle = wick_bc_correlator(4, 0, f, 8) * van;
        CHECK(window(oracle, 4) == window(exact, 4));
    }
}

TEST_CASE("bg_factor") {
    BgFactor g1 = bg_factor(false, 3);
    CHECK(g1.q_poly == UPoly(Rational(6)));
    CHECK(g1.per_variable_exponent == 0);
    BgFactor g0 = bg_factor(true, 2);
    // (q)_2 = q (q + 1).
    CHECK(g0.q_poly == UPoly::x() * (UPoly::x() + UPoly(Rational(1))));
    CHECK(g0.per_variable_exponent == -1);
}

TEST_CASE("dressed correlator: gamma_1 identity hits P_admp(2n,0,0)") {
    // prod z^{-2n+2} Delta <gamma_1^n prod (beta c - b)(z_i)>_+ is a scalar
    // multiple of P_{admp(2n,0,0)}(z^{-1}); with the n! reported separately
    // in q_scalar, the Jack coefficient is (-2)^n up to a fixed engine sign,
    // constant across n.
    Rational ratio_prev;
    bool have = false;
    for (int n : {1, 2}) {
        CorrelatorSpec s;
        s.functional = GhostFunctional::NSPlus;
        s.n_fields = 2 * n;
        s.m = 0;
        s.gamma_zero = false;
        s.zpow = -2 * n + 2;
        DressedCorrelator d = dressed_correlator(s);
        CHECK(d.beta_count == n);
        CHECK(d.q_scalar == UPoly(rat_factorial(n)));
        REQUIRE(d.orders.size() == 1);
        const JackExpansion& e = d.orders.at(0);
        REQUIRE(e.terms.size() == 1);
        Partition kappa = e.terms.begin()->first;
        kappa.resize(2 * n, 0);
        for (int& p : kappa) p += d.z_shift[0];
        CHECK(trimmed(kappa) == admp(2 * n, 0, 0));
        // The n! sits in q_scalar; the Jack coefficient carries (-2)^n up to
        // the engine sign.
        Rational ratio = e.terms.begin()->second / rat_pow(-2, n);
        if (have) CHECK(ratio == ratio_prev);
        ratio_prev = ratio;
        have = true;
        CHECK((ratio == 1 || ratio == -1));
    }
}

TEST_CASE("dressed correlator: corrformulae family at 2n = 2") {
    // gamma_0 version with shifted arguments: orders carry the Taylor family
    // {(1), (1,1)} with coefficients in ratio 1 : 2.
    CorrelatorSpec s;
    s.functional = GhostFunctional::NSPlus;
    s.n_fields = 2;
    s.m = -1;
    s.gamma_zero = true;
    s.shift_w = true;
    s.zpow = -1;
    DressedCorrelator d = dressed_correlator(s);
    CHECK(d.beta_count == 1);
    CHECK(d.q_scalar == UPoly::x());  // (q)_1
    REQUIRE(d.orders.size() == 2);
    REQUIRE(d.orders.at(0).terms.size() == 1);
    REQUIRE(d.orders.at(1).terms.size() == 1);
    CHECK(d.orders.at(0).terms.begin()->first == Partition{1});
    CHECK(d.orders.at(1).terms.begin()->first == Partition{1, 1});
    Rational c0 = d.orders.at(0).terms.begin()->second;
    Rational c1 = d.orders.at(1).terms.begin()->second;
    CHECK(c1 == 2 * c0);
}

TEST_CASE("dressed correlator beta-count bookkeeping") {
    CorrelatorSpec s;
    s.functional = GhostFunctional::NSPlus;
    s.n_fields = 3;
    s.m = 0;
    s.b0 = true;
    s.gamma_zero = false;
    DressedCorrelator d = dressed_correlator(s);
    CHECK(d.beta_count == 2);
    // Mismatched expected gamma power is rejected.
    s.gamma_power = 1;
    CHECK_THROWS_AS(dressed_correlator(s), CountMismatch);
}

TEST_CASE("ramond dressed correlator tracks half powers") {
    CorrelatorSpec s;
    s.functional = GhostFunctional::Ramond;
    s.n_fields = 1;
    s.m = -1;
    s.gamma_zero = true;
    s.shift_w = true;
    s.cw = true;
    s.zpow = 0;
    DressedCorrelator d = dressed_correlator(s);
    CHECK(d.ramond_half_powers);
    CHECK(d.w_half_power == 1);
    CHECK(d.beta_count == 0);
}

TEST_CASE("heisenberg prefactor") {
    // One free boson, pairing <a,a> = 1: <2| V_1(z1) V_1(z2) |0> is neutral
    // with (z1 - z2)^1 and no z powers.
    std::vector<std::vector<Rational>> pairing{{Rational(1)}};
    std::vector<std::vector<Rational>> charges{{Rational(1)}, {Rational(1)}};
    VertexPrefactor p = heisenberg_prefactor({Rational(2)}, {Rational(0)}, charges,
                                             pairing);
    CHECK(p.neutral);
    CHECK(p.pair_exponents.at({0, 1}) == 1);
    CHECK(p.z_exponents[0] == 0);
    CHECK(p.as_mpoly(2) == vandermonde(2, 2));
    // Non-neutral configuration.
    VertexPrefactor q = heisenberg_prefactor({Rational(1)}, {Rational(0)}, charges,
                                             pairing);
    CHECK_FALSE(q.neutral);
    // Fractional pair exponent cannot materialize.
    std::vector<std::vector<Rational>> half{{rat(1, 2)}};
    VertexPrefactor h = heisenberg_prefactor({Rational(2)}, {Rational(0)}, charges,
                                             half);
    CHECK_THROWS_AS(h.as_mpoly(2), NonIntegerExponent);
}
