#include "minmod/zeromode.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace minmod {

namespace {

// Taylor family for the NS summands: the w-order expansion of the Jack
// polynomial P_{admp(n,1,0)} under z -> z + w supplies, at order
// floor(n/2) - i, the coefficient c_i attached to uniqp(n, i).
struct TaylorTerm {
    Partition kappa;
    Rational coeff;
};

std::vector<TaylorTerm> ns_family(int u, int v, int n) {
    std::vector<TaylorTerm> fam;
    int box = (u + v) / 2 - 2;
    auto orders = translate_expand(admp(n, 1, 0), Rational(-3), n);
    // Highest order first (i ascending).
    for (auto it = orders.rbegin(); it != orders.rend(); ++it) {
        int i = n / 2 - it->first;
        TaylorTerm t;
        t.kappa = complement(box, uniqp(n, i), n);
        t.coeff = it->second.terms.begin()->second;
        fam.push_back(t);
    }
    return fam;
}

}  // namespace

Regime build_regime(const AdmissiblePair& pair, Sector sector) {
    if (pair.u == pair.v) throw NotAdmissible("build_regime: requires u != v");
    Regime r;
    r.pair = pair;
    r.sector = sector;
    r.v_dominant = pair.v > pair.u;
    const int u = pair.u, v = pair.v;
    if (r.v_dominant) {
        r.n = u - 1;
        r.t_prime = rat(2 * u, v - u);
        r.a = rat(-v, u);
        r.b = rat(v, 2 * u) - ((sector == Sector::NS) ? Rational(1) : rat(1, 2));
    } else {
        r.n = v - 1;
        r.t_prime = rat(2 * v, u - v);
        r.a = 1;
        r.b = (sector == Sector::NS) ? rat(-3, 2) + rat(u + v, 2 * v)
                                     : rat(-1, 2) + rat(u, 2 * v);
    }
    if (r.n == 0) {
        r.kappas = {Partition{}};
        r.coeffs = {Rational(1)};
    } else if (sector == Sector::NS) {
        for (const TaylorTerm& t : ns_family(u, v, r.n)) {
            r.kappas.push_back(t.kappa);
            r.coeffs.push_back(t.coeff);
        }
    } else {
        int d = std::abs(u - v) / 2;
        r.kappas = {admp(r.n, d + 1, d + 1)};
        r.coeffs = {Rational(1)};
    }
    return r;
}

std::vector<UPoly> summand_polynomials(const Regime& regime) {
    std::vector<UPoly> out;
    if (regime.n == 0) {
        out.push_back(UPoly(Rational(1)));
        return out;
    }
    for (size_t i = 0; i < regime.kappas.size(); ++i)
        out.push_back(regime.coeffs[i] * binomial_pairing(regime.kappas[i], regime.a,
                                                          regime.b, regime.t_prime,
                                                          regime.n));
    return out;
}

std::vector<UPoly> summand_polynomials_correlator(const Regime& regime) {
    if (regime.n == 0) return {UPoly(Rational(1))};
    const int u = regime.pair.u, v = regime.pair.v;
    CorrelatorSpec spec;
    spec.n_fields = regime.n;
    spec.gamma_zero = true;
    spec.zpow = 2 - (u + v) / 2;
    if (regime.sector == Sector::NS) {
        spec.functional = GhostFunctional::NSPlus;
        spec.m = -1;
        spec.shift_w = true;
        if (regime.n % 2 == 0) {
            spec.gamma_power = regime.n / 2;
        } else {
            spec.gamma_power = (regime.n + 1) / 2;
            spec.b0 = true;
        }
    } else {
        spec.functional = GhostFunctional::Ramond;
        spec.m = -1;
        if (regime.n % 2 == 0) {
            spec.gamma_power = regime.n / 2;
        } else {
            spec.gamma_power = (regime.n - 1) / 2;
            spec.shift_w = true;
            spec.cw = true;
        }
    }
    DressedCorrelator d = dressed_correlator(spec);
    // The per-variable normalization absorbs a uniform translate of the
    // partition labels; it must be the same for every variable.
    for (int s : d.z_shift)
        if (s != d.z_shift[0])
            throw std::domain_error(
                "summand_polynomials_correlator: non-uniform variable shift");
    int shift = d.z_shift.empty() ? 0 : d.z_shift[0];
    // Each w-order must reduce to a single Jack polynomial whose label,
    // translated back, matches a regime kappa; align with the regime order.
    std::vector<UPoly> out(regime.kappas.size());
    std::vector<bool> seen(regime.kappas.size(), false);
    for (const auto& [order, exp] : d.orders) {
        if (exp.terms.empty()) continue;
        if (exp.terms.size() != 1)
            throw std::domain_error(
                "summand_polynomials_correlator: w-order is not a single Jack "
                "polynomial");
        Partition kappa = exp.terms.begin()->first;
        kappa.resize(regime.n, 0);
        for (int& pk : kappa) pk += shift;
        kappa = trimmed(kappa);
        const Rational& c = exp.terms.begin()->second;
        if (shift < 0 && !is_partition(kappa))
            throw std::domain_error(
                "summand_polynomials_correlator: negative translate");
        auto it = std::find(regime.kappas.begin(), regime.kappas.end(), kappa);
        if (it == regime.kappas.end())
            throw std::domain_error(
                "summand_polynomials_correlator: unexpected partition " +
                partition_str(kappa));
        size_t idx = static_cast<size_t>(it - regime.kappas.begin());
        if (seen[idx])
            throw std::domain_error(
                "summand_polynomials_correlator: duplicate partition " +
                partition_str(kappa));
        seen[idx] = true;
        out[idx] = c * binomial_pairing(kappa, regime.a, regime.b, regime.t_prime,
                                        regime.n);
    }
    for (size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw std::domain_error(
                "summand_polynomials_correlator: missing partition " +
                partition_str(regime.kappas[i]));
    return out;
}

UPoly predicted_factors(const AdmissiblePair& pair, Sector sector) {
    KacTables t = kac_tables(pair);
    UPoly p(Rational(1));
    if (sector == Sector::NS) {
        for (const KacEntry& e : t.ns) p = p * UPoly::linear(-e.s, 1);
    } else {
        for (const KacEntry& e : t.r_reduced)
            p = p * UPoly::linear(-e.s, 1) * UPoly::linear(e.s, 1);
    }
    return p.monic();
}

Partition rho_partition(const Regime& regime) {
    return dominated_cells(regime.kappas, regime.n);
}

UPoly rho_factor(const Regime& regime) {
    Partition rho = rho_partition(regime);
    UPoly p(Rational(1));
    bool ns = (regime.sector == Sector::NS);
    for (int row = 0; row < length(rho); ++row) {
        for (int col = 0; col < part(rho, row); ++col) {
            int lp = row, ap = col;  // leg and arm colengths of the cell
            int i, j;
            if (regime.v_dominant) {
                i = lp + 1;
                j = ns ? lp + 2 * ap + 2 : lp + 2 * ap + 1;
            } else {
                i = ns ? lp + 2 * ap + 2 : lp + 2 * ap + 1;
                j = lp + 1;
            }
            p = p * UPoly::linear(-spectrum(regime.pair, i, j).s, 1);
        }
    }
    return p;
}

VerificationReport verify_svimage(const AdmissiblePair& pair, Sector sector) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.u = pair.u;
    rep.v = pair.v;
    rep.sector = sector;
    Regime regime = build_regime(pair, sector);
    rep.kappas = regime.kappas;
    rep.summands = summand_polynomials(regime);
    rep.predicted = predicted_factors(pair, sector);
    rep.rho = rho_factor(regime);

    auto fail = [&](const std::string& what) {
        if (rep.first_failure.empty()) rep.first_failure = what;
    };

    // Two-path agreement: both constructions, one global nonzero scalar.
    try {
        rep.summands_corr = summand_polynomials_correlator(regime);
        rep.paths_agree = true;
        Rational ratio;
        bool have_ratio = false;
        for (size_t i = 0; i < rep.summands.size(); ++i) {
            const UPoly &a = rep.summands_corr[i], &b = rep.summands[i];
            if (a.is_zero() || b.is_zero() || a.degree() != b.degree() ||
                a * b.lead() != b * a.lead()) {
                rep.paths_agree = false;
                break;
            }
            Rational r = a.lead() / b.lead();
            rep.path_ratios.push_back(r);
            if (!have_ratio) {
                ratio = r;
                have_ratio = true;
            } else if (r != ratio) {
                rep.paths_agree = false;
            }
        }
    } catch (const std::exception& e) {
        rep.paths_agree = false;
        fail(std::string("correlator path: ") + e.what());
    }
    if (!rep.paths_agree) fail("two-path agreement");

    // Degree bookkeeping: sigma-degree of each summand equals |kappa|.
    rep.degrees_match = true;
    for (size_t i = 0; i < rep.summands.size(); ++i)
        if (rep.summands[i].degree() != weight(rep.kappas[i])) rep.degrees_match = false;
    if (!rep.degrees_match) fail("summand degree vs partition weight");

    // The rho-factor divides every individual summand.
    rep.rho_divides_all = true;
    for (const UPoly& s : rep.summands)
        if (!UPoly::try_exact_div(s, rep.rho, nullptr)) rep.rho_divides_all = false;
    if (!rep.rho_divides_all) fail("rho-factor does not divide every summand");

    // gcd of the summands, and the predicted polynomial against its
    // negation-closed closure G(s) G(-s).
    rep.gcd = UPoly(Rational(1));
    if (!rep.summands.empty()) {
        rep.gcd = rep.summands[0];
        for (size_t i = 1; i < rep.summands.size(); ++i)
            rep.gcd = upoly_gcd(rep.gcd, rep.summands[i]);
        rep.gcd = rep.gcd.monic();
    }
    UPoly sym = (rep.gcd * rep.gcd.reflected()).monic();
    rep.predicted_divides_sym = UPoly::try_exact_div(sym, rep.predicted, nullptr);
    if (!rep.predicted_divides_sym) fail("predicted does not divide gcd closure");

    // Every predicted root appears among the rho-factor roots up to sign.
    std::set<Rational> rho_roots;
    for (const Rational& r : rational_roots(rep.rho)) {
        rho_roots.insert(r);
        rho_roots.insert(-r);
    }
    rep.predicted_roots_covered = true;
    for (const Rational& r : rational_roots(rep.predicted))
        if (!rho_roots.count(r)) rep.predicted_roots_covered = false;
    if (!rep.predicted_roots_covered) fail("predicted root missing from rho roots");

    rep.pass = rep.paths_agree && rep.degrees_match && rep.rho_divides_all &&
               rep.predicted_divides_sym && rep.predicted_roots_covered;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

}  // namespace minmod
