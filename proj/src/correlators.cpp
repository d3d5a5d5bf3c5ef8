#include "minmod/correlators.hpp"

#include "minmod/pfaffian.hpp"

namespace minmod {
namespace {

// x^m as a rational function (m may be negative).
RatFun xpow(const MPoly& x, int m) {
    if (m >= 0) return RatFun(x.pow(m));
    return RatFun(MPoly::one(x.arity()), x, -m);
}

struct Atom {
    enum Kind { B0, Combo, C0, Cw } kind;
    int field = -1;  // z-variable index for Combo
};

MPoly drop_last_var(const MPoly& p) {
    int n = p.arity() - 1;
    MPoly r(n);
    for (const auto& [e, c] : p.terms()) {
        if (e.back() != 0)
            throw std::logic_error("drop_last_var: residual exponent");
        r.add_term(std::vector<int>(e.begin(), e.end() - 1), c);
    }
    return r;
}

}  // namespace

MPoly vandermonde(int arity, int nz) {
    MPoly v = MPoly::one(arity);
    for (int i = 0; i < nz; ++i)
        for (int j = i + 1; j < nz; ++j)
            v *= MPoly::var(arity, i) - MPoly::var(arity, j);
    return v;
}

RatFun bc_correlator(int n_pairs, int m, GhostFunctional f) {
    int nf = 2 * n_pairs;
    RatFun one = RatFun(MPoly::one(nf));
    std::vector<std::vector<RatFun>> K(nf, std::vector<RatFun>(nf, RatFun::zero(nf)));
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            MPoly zi = MPoly::var(nf, i), zj = MPoly::var(nf, j);
            RatFun num;
            MPoly den = zi - zj;
            switch (f) {
                case GhostFunctional::NSPlus:
                    num = xpow(zi, m) + xpow(zj, m);
                    break;
                case GhostFunctional::NSMinus:
                    num = xpow(zi, m + 1) * xpow(zj, -1) + xpow(zi, -1) * xpow(zj, m + 1);
                    break;
                case GhostFunctional::Ramond:
                    // zeta variables: z = zeta^2, z^{m+1/2}z'^{-1/2} =
                    // zeta^{2m+1} zeta'^{-1}.
                    num = xpow(zi, 2 * m + 1) * xpow(zj, -1) +
                          xpow(zi, -1) * xpow(zj, 2 * m + 1);
                    den = zi * zi - zj * zj;
                    break;
            }
            K[i][j] = num * RatFun(MPoly::one(nf), den);
        }
    RatFun pf = pfaffian(K, one);
    return (n_pairs % 2 == 0) ? pf : -pf;
}

BgFactor bg_factor(bool gamma_zero, int n) {
    if (n < 0) throw CountMismatch("bg_factor: negative insertion count");
    if (!gamma_zero) return {UPoly(rat_factorial(n)), 0};
    UPoly rising(Rational(1));
    for (int i = 1; i <= n; ++i) rising *= UPoly::linear(i - 1, 1);  // q + i - 1
    return {rising, -1};
}

DressedCorrelator dressed_correlator(const CorrelatorSpec& spec) {
    const int N = spec.n_fields;
    const int ar = N + 1;  // z_1..z_N, w
    const int wv = N;
    const bool ramond = spec.functional == GhostFunctional::Ramond;
    if (ramond && (spec.b0 || spec.functional == GhostFunctional::NSMinus))
        throw CountMismatch("dressed_correlator: b_0/c_0 atoms are NS-only");

    // Assemble the atom list left to right.
    std::vector<Atom> atoms;
    bool b0 = spec.b0 || spec.functional == GhostFunctional::NSMinus;
    bool c0 = spec.functional == GhostFunctional::NSMinus;
    if (b0) atoms.push_back({Atom::B0});
    for (int i = 0; i < N; ++i) atoms.push_back({Atom::Combo, i});
    if (c0) atoms.push_back({Atom::C0});
    if (spec.cw) atoms.push_back({Atom::Cw});
    int na = static_cast<int>(atoms.size());
    if (na % 2 != 0)
        throw CountMismatch("dressed_correlator: odd atom count");

    // Every perfect matching has the same number of beta contractions.
    int twice_g = N + (b0 ? 1 : 0) - (c0 ? 1 : 0) - (spec.cw ? 1 : 0);
    if (twice_g % 2 != 0 || twice_g < 0)
        throw CountMismatch("dressed_correlator: unbalanced ghost charge");
    int g = twice_g / 2;
    if (spec.gamma_power >= 0 && spec.gamma_power != g)
        throw CountMismatch("dressed_correlator: gamma insertion count mismatch");

    auto pos = [&](int i) {
        MPoly x = MPoly::var(ar, i);
        if (spec.shift_w) x += MPoly::var(ar, wv);
        return x;
    };

    RatFun one = RatFun(MPoly::one(ar));
    std::vector<std::vector<RatFun>> A(na, std::vector<RatFun>(na, RatFun::zero(ar)));
    for (int i = 0; i < na; ++i)
        for (int j = i + 1; j < na; ++j) {
            const Atom &ai = atoms[i], &aj = atoms[j];
            RatFun entry = RatFun::zero(ar);
            if (ai.kind == Atom::Combo && aj.kind == Atom::Combo) {
                MPoly x = pos(ai.field), y = pos(aj.field);
                // In the Ramond sector the per-atom x^{-1/2} prefactors are
                // pulled out, leaving integer exponents m+1.
                int me = ramond ? spec.m + 1 : spec.m;
                entry = -((xpow(x, me) + xpow(y, me)) *
                          RatFun(MPoly::one(ar),
                                 MPoly::var(ar, ai.field) - MPoly::var(ar, aj.field)));
            } else if (ai.kind == Atom::B0 && aj.kind == Atom::Combo) {
                entry = xpow(pos(aj.field), spec.m);
            } else if (ai.kind == Atom::B0 && (aj.kind == Atom::C0 || aj.kind == Atom::Cw)) {
                entry = one;
            } else if (ai.kind == Atom::Combo && aj.kind == Atom::C0) {
                entry = -xpow(pos(ai.field), -1);
            } else if (ai.kind == Atom::Combo && aj.kind == Atom::Cw) {
                // -<b(x) c(w)>; with x = z + w the denominator x - w = z.
                MPoly den = pos(ai.field) - MPoly::var(ar, wv);
                entry = -RatFun(MPoly::one(ar), den);
            } else {
                throw CountMismatch("dressed_correlator: unsupported atom pair");
            }
            A[i][j] = entry;
        }

    DressedCorrelator out;
    BgFactor bg = bg_factor(spec.gamma_zero, g);
    out.q_scalar = bg.q_poly;
    out.beta_count = g;
    out.ramond_half_powers = ramond;
    out.w_half_power = (ramond && spec.cw) ? 1 : 0;

    RatFun total = pfaffian(A, one) * RatFun(vandermonde(ar, N));
    if (!ramond && spec.shift_w) {
        for (int i = 0; i < N; ++i) total = total * RatFun(pos(i));
    }
    MPoly cleared;
    try {
        cleared = total.as_mpoly();
    } catch (const std::domain_error&) {
        throw NotPolynomial("dressed_correlator: denominator failed to cancel");
    }
    for (int i = 0; i < N; ++i) cleared = cleared.shifted(i, spec.zpow);
    out.cleared = cleared;

    // Invert the z variables and normalize to polynomial form.
    std::vector<int> zvars(N);
    for (int i = 0; i < N; ++i) zvars[i] = i;
    MPoly inv = cleared.inverted(zvars);
    out.z_shift.assign(N, 0);
    for (int i = 0; i < N; ++i) {
        int m0 = inv.min_exp(i);
        if (m0 != 0) {
            inv = inv.shifted(i, -m0);
            out.z_shift[i] = m0;
        }
    }
    for (int d = inv.min_exp(wv); d <= inv.max_exp(wv); ++d) {
        MPoly part = drop_last_var(inv.coeff_of(wv, d));
        if (part.is_zero()) continue;
        out.orders.emplace(d, jack_expand(to_sympoly(part, N), rat(-3), N));
    }
    return out;
}

MPoly VertexPrefactor::as_mpoly(int arity) const {
    if (!neutral) return MPoly(arity);
    MPoly p = MPoly::one(arity);
    for (const auto& [ij, e] : pair_exponents) {
        if (e.get_den() != 1 || e < 0)
            throw NonIntegerExponent("heisenberg prefactor: (z_i - z_j) exponent " +
                                     rat_str(e));
        p *= (MPoly::var(arity, ij.first) - MPoly::var(arity, ij.second))
                 .pow(e.get_num().get_si());
    }
    for (size_t i = 0; i < z_exponents.size(); ++i) {
        const Rational& e = z_exponents[i];
        if (e.get_den() != 1)
            throw NonIntegerExponent("heisenberg prefactor: z exponent " + rat_str(e));
        p = p.shifted(static_cast<int>(i), static_cast<int>(e.get_num().get_si()));
    }
    return p;
}

VertexPrefactor heisenberg_prefactor(const std::vector<Rational>& q_bra,
                                     const std::vector<Rational>& p_ket,
                                     const std::vector<std::vector<Rational>>& charges,
                                     const std::vector<std::vector<Rational>>& pairing) {
    size_t dim = pairing.size();
    for (size_t a = 0; a < dim; ++a)
        for (size_t b = 0; b < dim; ++b)
            if (pairing[a][b] != pairing[b][a])
                throw std::invalid_argument("heisenberg_prefactor: pairing not symmetric");
    auto pair = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational acc = 0;
        for (size_t r = 0; r < dim; ++r)
            for (size_t s = 0; s < dim; ++s) acc += a[r] * pairing[r][s] * b[s];
        return acc;
    };
    VertexPrefactor out;
    std::vector<Rational> sum = p_ket;
    for (const auto& p : charges)
        for (size_t r = 0; r < dim; ++r) sum[r] += p[r];
    out.neutral = (sum == q_bra);
    if (!out.neutral) return out;
    int k = static_cast<int>(charges.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j)
            out.pair_exponents[{i, j}] = pair(charges[i], charges[j]);
        out.z_exponents.push_back(pair(p_ket, charges[i]));
    }
    return out;
}

}  // namespace minmod
