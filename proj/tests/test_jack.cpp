// Jack polynomials: monomial expansions, Schur specialization, norms versus
// the constant-term oracle, the t = -3 specialization with its exact
// eigen-certificate, translate/Taylor families, and the binomial pairing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "minmod/jack.hpp"
#include "minmod/sympoly.hpp"

using namespace minmod;

namespace {
Rational coeff_of(const SymPoly& p, const Partition& mu) {
    auto it = p.terms.find(trimmed(mu));
    return it == p.terms.end() ? Rational(0) : it->second;
}
}  // namespace

TEST_CASE("jack in the alpha convention: P_(2) = m_2 + 2/(t+1) m_11") {
    for (const Rational& t : {rat(1, 2), Rational(2), Rational(5)}) {
        SymPoly p = jack_poly(Partition{2}, t, 2);
        CHECK(coeff_of(p, Partition{2}) == 1);
        CHECK(coeff_of(p, Partition{1, 1}) == Rational(2) / (t + 1));
    }
    CHECK_THROWS_AS(jack_poly(Partition{2}, Rational(-1), 2), PoleAtParameter);
}

TEST_CASE("t = 1 gives Schur polynomials") {
    // s_(2,1) in 3 variables: m_21 + 2 m_111.
    SymPoly p = jack_poly(Partition{2, 1}, Rational(1), 3);
    CHECK(coeff_of(p, Partition{2, 1}) == 1);
    CHECK(coeff_of(p, Partition{1, 1, 1}) == 2);
    // s_(2) = m_2 + m_11 (complete homogeneous).
    SymPoly q = jack_poly(Partition{2}, Rational(1), 2);
    CHECK(coeff_of(q, Partition{1, 1}) == 1);
}

TEST_CASE("monic dominance-triangular expansions") {
    for (const Rational& t : {rat(1, 3), Rational(2)}) {
        for (int w = 1; w <= 4; ++w) {
            for (const Partition& lam : partitions_of(w, 3, w)) {
                SymPoly p = jack_poly(lam, t, 3);
                CHECK(coeff_of(p, lam) == 1);
                for (const auto& [mu, c] : p.terms) {
                    CHECK(dominance_leq(mu, lam));
                    CHECK(c != 0);
                }
            }
        }
    }
}

TEST_CASE("partition longer than the variable count is rejected") {
    CHECK_THROWS_AS(jack_poly(Partition{1, 1, 1}, Rational(2), 2),
                    std::invalid_argument);
}

TEST_CASE("jack_expand round-trips and is exact") {
    Rational t = rat(1, 2);
    SymPoly f = jack_poly(Partition{2, 1}, t, 3) * rat(3, 7) +
                jack_poly(Partition{1, 1}, t, 3) * Rational(-2) +
                jack_poly(Partition{}, t, 3) * Rational(5);
    JackExpansion e = jack_expand(f, t, 3);
    CHECK(e.terms.size() == 3);
    CHECK(e.terms.at(Partition{2, 1}) == rat(3, 7));
    CHECK(e.terms.at(Partition{1, 1}) == Rational(-2));
    CHECK(e.terms.at(Partition{}) == Rational(5));
}

TEST_CASE("norm hook formula matches the constant-term oracle") {
    // Hand value: t = 1/2, n = 2, lambda = (1): norm 2/3.
    CHECK(jack_norm(Partition{1}, rat(1, 2), 2) == rat(2, 3));
    for (int k : {1, 2, 3}) {
        Rational t = rat(1, k);
        for (int n = 1; n <= 2; ++n)
            for (int w = 0; w <= 3; ++w)
                for (const Partition& lam : partitions_of(w, n, w)) {
                    SymPoly p = jack_poly(lam, t, n);
                    CHECK(constant_term_oracle(p, p, n, k) == jack_norm(lam, t, n));
                }
    }
    // <1, 1> = 1.
    CHECK(constant_term_oracle(jack_poly({}, rat(1, 2), 3), jack_poly({}, rat(1, 2), 3),
                               3, 2) == 1);
}

TEST_CASE("orthogonality under the constant-term pairing") {
    int k = 2;
    Rational t = rat(1, k);
    auto parts = partitions_of(3, 3, 3);
    for (const Partition& a : parts)
        for (const Partition& b : parts)
            if (a != b)
                CHECK(constant_term_oracle(jack_poly(a, t, 3), jack_poly(b, t, 3), 3,
                                           k) == 0);
}

TEST_CASE("inner_product is the normalized pairing") {
    Rational t = rat(1, 3);
    SymPoly p = jack_poly(Partition{2}, t, 2);
    CHECK(inner_product(p, p, 2, t) == jack_norm(Partition{2}, t, 2));
}

TEST_CASE("t = -3 specialization: admissibility precondition and certificate") {
    // Admissible partitions specialize; the engine certifies the eigenvalue
    // equation exactly at t = -3 (any failure throws).
    for (const Partition& lam :
         {Partition{}, Partition{1}, Partition{1, 1}, Partition{2, 2}, Partition{2, 1},
          Partition{3, 2, 1}}) {
        SymPoly p = jack_poly(lam, Rational(-3), 3);
        CHECK(coeff_of(p, lam) == (length(lam) <= 3 ? Rational(1) : Rational(0)));
    }
    CHECK_THROWS_AS(jack_poly(Partition{1, 1, 1}, Rational(-3), 3), NotAdmissible);
}

TEST_CASE("pfaffian-jack hand values at t = -3") {
    // 2n = 2: Delta * pf(1/(z1-z2)) = 1 = P_{admp(2,0,0)};
    //         Delta * pf((z1+z2)/(z1-z2)) = z1+z2 = P_{admp(2,1,0)}.
    SymPoly p00 = jack_poly(admp(2, 0, 0), Rational(-3), 2);
    CHECK(p00.terms.size() == 1);
    CHECK(coeff_of(p00, Partition{}) == 1);
    SymPoly p10 = jack_poly(admp(2, 1, 0), Rational(-3), 2);
    CHECK(coeff_of(p10, Partition{1}) == 1);
    CHECK(p10.terms.size() == 1);
}

TEST_CASE("translate_expand structure and uniqp") {
    // P_{admp(2n,0,0)} is translation invariant.
    for (int N : {2, 4}) {
        auto orders = translate_expand(admp(N, 0, 0), Rational(-3), N);
        REQUIRE(orders.size() == 1);
        CHECK(orders.count(0) == 1);
    }
    // Taylor family of P_{admp(2n,1,0)}: single admissible partition per
    // order, nonzero coefficients.
    for (int N : {2, 3, 4}) {
        auto orders = translate_expand(admp(N, 1, 0), Rational(-3), N);
        for (const auto& [o, exp] : orders) {
            REQUIRE(exp.terms.size() == 1);
            CHECK(is_admissible(exp.terms.begin()->first));
            CHECK(exp.terms.begin()->second != 0);
        }
    }
    CHECK(uniqp(2, 0) == Partition{});
    CHECK(uniqp(2, 1) == Partition{1});
    CHECK(uniqp(3, 0) == Partition{2});
    CHECK(uniqp(3, 1) == Partition{2, 1});
}

TEST_CASE("taylor coefficients for 2n = 2: P_(1)(z+w) = 2w + P_(1)(z)") {
    auto orders = translate_expand(admp(2, 1, 0), Rational(-3), 2);
    REQUIRE(orders.size() == 2);
    CHECK(orders.at(1).terms.at(Partition{}) == 2);
    CHECK(orders.at(0).terms.at(Partition{1}) == 1);
}

TEST_CASE("binomial pairing hand value") {
    // kappa = (2), a = -2, b = 1/2, t' = 2, n = 1  ->  2 sigma^2 - 1/8.
    UPoly p = binomial_pairing(Partition{2}, Rational(-2), rat(1, 2), Rational(2), 1);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == 2);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(0) == rat(-1, 8));
    // Empty kappa pairs to the constant 1.
    CHECK(binomial_pairing(Partition{}, Rational(1), Rational(0), Rational(2), 2) ==
          UPoly(Rational(1)));
}
