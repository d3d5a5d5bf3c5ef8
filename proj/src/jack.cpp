#include "minmod/jack.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace minmod {
namespace {

// ---------------------------------------------------------------------------
// Laplace-Beltrami data. The operator
//   D(t) = (t/2) sum_i z_i^2 d_i^2 + sum_{i<j} (z_i^2 d_i - z_j^2 d_j)/(z_i - z_j)
// is dominance-triangular on monomial symmetric polynomials: D m_mu =
// d_mu(t) m_mu + lower terms. Jack polynomials are its eigenvectors.
// ---------------------------------------------------------------------------

struct LBData {
    std::vector<Partition> basis;       // descending lex; index 0 dominance-maximal
    std::map<Partition, int> index;
    // D m_{basis[j]} = sum_i (B0[i][j] + t B1[i][j]) m_{basis[i]}
    std::vector<std::vector<Rational>> B0, B1;
};

const LBData& lb_data(int d, int n) {
    static std::map<std::pair<int, int>, LBData> cache;
    auto key = std::make_pair(d, n);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    LBData data;
    data.basis = partitions_of(d, n, std::max(d, 1));
    std::sort(data.basis.begin(), data.basis.end(), std::greater<Partition>());
    int dim = static_cast<int>(data.basis.size());
    for (int i = 0; i < dim; ++i) data.index[data.basis[i]] = i;
    data.B0.assign(dim, std::vector<Rational>(dim, 0));
    data.B1.assign(dim, std::vector<Rational>(dim, 0));

    for (int j = 0; j < dim; ++j) {
        MPoly f = monomial_sym_mpoly(data.basis[j], n);
        std::vector<MPoly> zi2_di;
        for (int i = 0; i < n; ++i)
            zi2_di.push_back(f.derivative(i).shifted(i, 2));
        MPoly cross(n), lap(n);
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) {
                MPoly diff = zi2_di[i] - zi2_di[k];
                if (diff.is_zero()) continue;
                cross += exact_div(diff, MPoly::var(n, i) - MPoly::var(n, k));
            }
        for (int i = 0; i < n; ++i)
            lap += f.derivative(i).derivative(i).shifted(i, 2);
        SymPoly s0 = to_sympoly(cross, n);
        SymPoly s1 = to_sympoly(lap, n) * rat(1, 2);
        for (const auto& [rho, c] : s0.terms) data.B0[data.index.at(rho)][j] = c;
        for (const auto& [rho, c] : s1.terms) data.B1[data.index.at(rho)][j] = c;
    }
    return cache.emplace(key, std::move(data)).first->second;
}

// ---------------------------------------------------------------------------
// Truncated power series in eps (for the specialization t = -3 + eps).
// Coefficients below `lo` are exactly zero; coefficients in [lo, hi) are
// stored; above hi they are unknown (validity window).
// ---------------------------------------------------------------------------

struct Ser {
    int lo = 0, hi = 0;
    std::vector<Rational> c;  // size hi - lo

    Rational at(int k) const {
        if (k < lo) return 0;
        return c[k - lo];
    }
};

struct PrecisionExhausted {};

Ser ser_const(const Rational& a0, const Rational& a1, int K) {
    Ser s;
    s.lo = 0;
    s.hi = K;
    s.c.assign(K, Rational(0));
    s.c[0] = a0;
    if (K > 1) s.c[1] = a1;
    return s;
}

Ser ser_add(const Ser& a, const Ser& b) {
    Ser s;
    s.lo = std::min(a.lo, b.lo);
    s.hi = std::min(a.hi, b.hi);
    if (s.hi <= s.lo) throw PrecisionExhausted{};
    s.c.assign(s.hi - s.lo, Rational(0));
    for (int k = s.lo; k < s.hi; ++k) s.c[k - s.lo] = a.at(k) + b.at(k);
    return s;
}

// Multiplication by the exact linear polynomial a0 + a1 eps.
Ser ser_mul_linear(const Ser& a, const Rational& b0, const Rational& b1) {
    Ser s;
    s.lo = a.lo;
    s.hi = a.hi;  // exact multiplier: the validity window is preserved
    s.c.assign(s.hi - s.lo, Rational(0));
    for (int k = s.lo; k < s.hi; ++k) s.c[k - s.lo] = a.at(k) * b0 + a.at(k - 1) * b1;
    return s;
}

// Division by the exact linear polynomial d0 + d1 eps (not identically 0).
Ser ser_div_linear(const Ser& a, const Rational& d0, const Rational& d1) {
    Ser s;
    if (d0 != 0) {
        s.lo = a.lo;
        s.hi = a.hi;
        s.c.assign(s.hi - s.lo, Rational(0));
        for (int k = s.lo; k < s.hi; ++k) {
            Rational prev = (k - 1 >= s.lo) ? s.c[k - 1 - s.lo] : Rational(0);
            s.c[k - s.lo] = (a.at(k) - d1 * prev) / d0;
        }
        return s;
    }
    // d0 == 0: divide by d1 * eps (valuation shift).
    s.lo = a.lo - 1;
    s.hi = a.hi - 1;
    s.c = a.c;
    for (auto& v : s.c) v /= d1;
    return s;
}

// eps -> 0. Throws PrecisionExhausted if the window misses exponent 0 and
// PoleAtParameter if a strictly negative exponent carries a nonzero value.
Rational ser_specialize(const Ser& s, const Partition& lam) {
    for (int k = s.lo; k < std::min(0, s.hi); ++k)
        if (s.at(k) != 0)
            throw PoleAtParameter("jack_poly: pole at t = -3 for " + partition_str(lam));
    if (s.hi <= 0) throw PrecisionExhausted{};
    return s.at(0);
}

// ---------------------------------------------------------------------------
// Jack recursion.
// ---------------------------------------------------------------------------

// Coefficient vector of P_lam over the weight-|lam| monomial basis at a
// generic rational parameter.
std::vector<Rational> jack_coeffs_rational(const Partition& lam, const Rational& t, int n) {
    const LBData& lb = lb_data(weight(lam), n);
    int dim = static_cast<int>(lb.basis.size());
    int L = lb.index.at(lam);
    std::vector<Rational> c(dim, 0);
    c[L] = 1;
    Rational dlam = lb.B0[L][L] + t * lb.B1[L][L];
    for (int idx = L + 1; idx < dim; ++idx) {
        const Partition& mu = lb.basis[idx];
        if (!dominance_leq(mu, lam)) continue;
        Rational num = 0;
        for (int nu = L; nu < idx; ++nu) {
            if (c[nu] == 0) continue;
            Rational b = lb.B0[idx][nu] + t * lb.B1[idx][nu];
            if (b != 0) num += b * c[nu];
        }
        Rational den = dlam - (lb.B0[idx][idx] + t * lb.B1[idx][idx]);
        if (den == 0)
            throw PoleAtParameter("jack_poly: recursion denominator vanishes at t = " +
                                  rat_str(t) + " for " + partition_str(lam));
        c[idx] = num / den;
    }
    return c;
}

// Same recursion in truncated series around t = -3 + eps, with precision K.
std::vector<Rational> jack_coeffs_series(const Partition& lam, int n, int K) {
    const LBData& lb = lb_data(weight(lam), n);
    int dim = static_cast<int>(lb.basis.size());
    int L = lb.index.at(lam);
    std::vector<Ser> c(dim, ser_const(0, 0, K));
    c[L] = ser_const(1, 0, K);
    Rational d0lam = lb.B0[L][L] - 3 * lb.B1[L][L];
    Rational d1lam = lb.B1[L][L];
    std::vector<bool> nonzero(dim, false);
    nonzero[L] = true;
    for (int idx = L + 1; idx < dim; ++idx) {
        const Partition& mu = lb.basis[idx];
        if (!dominance_leq(mu, lam)) continue;
        Ser num = ser_const(0, 0, K);
        for (int nu = L; nu < idx; ++nu) {
            if (!nonzero[nu]) continue;
            Rational b0 = lb.B0[idx][nu] - 3 * lb.B1[idx][nu];
            Rational b1 = lb.B1[idx][nu];
            if (b0 == 0 && b1 == 0) continue;
            num = ser_add(num, ser_mul_linear(c[nu], b0, b1));
        }
        Rational den0 = d0lam - (lb.B0[idx][idx] - 3 * lb.B1[idx][idx]);
        Rational den1 = d1lam - lb.B1[idx][idx];
        c[idx] = ser_div_linear(num, den0, den1);
        nonzero[idx] = true;
    }
    std::vector<Rational> out(dim, 0);
    for (int idx = 0; idx < dim; ++idx)
        if (nonzero[idx]) out[idx] = ser_specialize(c[idx], lam);
    return out;
}

// Exact certificate: D(-3) c == d_lam(-3) c in rational arithmetic.
bool eigen_check_minus3(const Partition& lam, int n, const std::vector<Rational>& c) {
    const LBData& lb = lb_data(weight(lam), n);
    int dim = static_cast<int>(lb.basis.size());
    int L = lb.index.at(lam);
    Rational dlam = lb.B0[L][L] - 3 * lb.B1[L][L];
    for (int i = 0; i < dim; ++i) {
        Rational acc = 0;
        for (int j = 0; j < dim; ++j) {
            if (c[j] == 0) continue;
            acc += (lb.B0[i][j] - 3 * lb.B1[i][j]) * c[j];
        }
        if (acc != dlam * c[i]) return false;
    }
    return true;
}

SymPoly coeffs_to_sympoly(const std::vector<Rational>& c, int d, int n) {
    const LBData& lb = lb_data(d, n);
    SymPoly f{n, {}};
    for (size_t i = 0; i < c.size(); ++i) f.add(lb.basis[i], c[i]);
    return f;
}

// Optional on-disk memo for Jack expansions (MINMOD_CACHE_DIR).
std::string cache_path(const Partition& lam, const Rational& t, int n) {
    const char* dir = std::getenv("MINMOD_CACHE_DIR");
    if (!dir || !*dir) return "";
    std::ostringstream os;
    os << dir << "/jack";
    for (int p : lam) os << "_" << p;
    os << "_t" << t.get_num() << "_" << t.get_den() << "_n" << n << ".json";
    return os.str();
}

bool load_cached(const std::string& path, int n, SymPoly* out) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    in >> j;
    SymPoly f{n, {}};
    for (const auto& term : j.at("terms")) {
        Partition lam = term.at("partition").get<std::vector<int>>();
        f.add(lam, rat_parse(term.at("coeff").get<std::string>()));
    }
    *out = std::move(f);
    return true;
}

void store_cached(const std::string& path, const SymPoly& f) {
    nlohmann::json j;
    j["n"] = f.n;
    j["terms"] = nlohmann::json::array();
    for (const auto& [lam, c] : f.terms)
        j["terms"].push_back({{"partition", lam}, {"coeff", rat_str(c)}});
    std::ofstream out(path);
    if (out) out << j.dump();
}

}  // namespace

SymPoly jack_poly(const Partition& lam_in, const Rational& t, int n) {
    Partition lam = trimmed(lam_in);
    if (length(lam) > n)
        throw std::invalid_argument("jack_poly: partition longer than variable count");
    static std::map<std::tuple<Partition, Rational, int>, SymPoly> memo;
    auto key = std::make_tuple(lam, t, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    if (t == -3 && !is_admissible(lam))
        throw NotAdmissible("jack_poly: " + partition_str(lam) +
                            " is not (2,2)-admissible at t = -3");

    std::string path = cache_path(lam, t, n);
    SymPoly f;
    if (!path.empty() && load_cached(path, n, &f)) {
        memo.emplace(key, f);
        return f;
    }

    int d = weight(lam);
    if (t == -3) {
        std::vector<Rational> c;
        bool ok = false;
        for (int K = 12; K <= 192 && !ok; K *= 2) {
            try {
                c = jack_coeffs_series(lam, n, K);
                ok = eigen_check_minus3(lam, n, c);
            } catch (const PrecisionExhausted&) {
                ok = false;
            }
        }
        if (!ok)
            throw PoleAtParameter("jack_poly: series precision exhausted for " +
                                  partition_str(lam));
        f = coeffs_to_sympoly(c, d, n);
    } else {
        f = coeffs_to_sympoly(jack_coeffs_rational(lam, t, n), d, n);
    }
    if (!path.empty()) store_cached(path, f);
    memo.emplace(key, f);
    return f;
}

JackExpansion jack_expand(const SymPoly& f, const Rational& t, int n) {
    JackExpansion exp{t, {}};
    for (auto& [deg, partf] : f.homogeneous_parts()) {
        SymPoly residue = partf;
        while (!residue.is_zero()) {
            // Lex-maximal partition is dominance-maximal among those present.
            Partition lam = residue.terms.rbegin()->first;
            Rational c = residue.terms.rbegin()->second;
            residue = residue - jack_poly(lam, t, n) * c;
            exp.terms[lam] += c;
            if (exp.terms[lam] == 0) exp.terms.erase(lam);
        }
    }
    return exp;
}

Rational jack_norm(const Partition& lam, const Rational& t, int n) {
    if (length(lam) > n)
        throw std::invalid_argument("jack_norm: partition longer than variable count");
    Rational norm = 1;
    for (const Cell& b : cell_data(lam)) {
        Rational d1 = t * b.arm + b.leg + 1;
        Rational d2 = n + (b.arm_co + 1) * t - b.leg_co - 1;
        if (d1 == 0 || d2 == 0)
            throw PoleAtParameter("jack_norm: pole at t = " + rat_str(t) + " for " +
                                  partition_str(lam));
        norm *= (t * (b.arm + 1) + b.leg) / d1;
        norm *= (n + b.arm_co * t - b.leg_co) / d2;
    }
    return norm;
}

Rational inner_product(const SymPoly& f, const SymPoly& g, int n, const Rational& t) {
    JackExpansion ef = jack_expand(f, t, n), eg = jack_expand(g, t, n);
    Rational acc = 0;
    for (const auto& [lam, cf] : ef.terms) {
        auto it = eg.terms.find(lam);
        if (it == eg.terms.end()) continue;
        acc += cf * it->second * jack_norm(lam, t, n);
    }
    return acc;
}

Rational constant_term_oracle(const SymPoly& f, const SymPoly& g, int n, int k) {
    if (k < 1) throw std::invalid_argument("constant_term_oracle: need integer k >= 1");
    MPoly kernel = MPoly::one(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            MPoly factor = MPoly::one(n) - MPoly::var(n, i).shifted(j, -1);
            kernel *= factor.pow(k);
        }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    MPoly prod = kernel * to_mpoly(f).inverted(all) * to_mpoly(g);
    return prod.constant_term() / kernel.constant_term();
}

UPoly binomial_pairing(const Partition& kappa, const Rational& a, const Rational& b,
                       const Rational& t, int n) {
    SymPoly P = jack_poly(kappa, rat(-3), n);
    JackExpansion exp = jack_expand(P, t, n);
    UPoly result;
    for (const auto& [mu, cmu] : exp.terms) {
        UPoly term(cmu * jack_norm(mu, t, n));
        for (const Cell& cell : cell_data(mu)) {
            Rational den = t * (cell.arm + 1) + cell.leg;
            if (den == 0)
                throw PoleAtParameter("binomial_pairing: pole in binomial coefficient at t = " +
                                      rat_str(t));
            // t(lambda - a') + l' with lambda = a sigma + b.
            term *= UPoly::linear(t * (b - cell.arm_co) + cell.leg_co, t * a);
            term *= UPoly(Rational(1) / den);
        }
        result += term;
    }
    return result;
}

std::map<int, JackExpansion> translate_expand(const Partition& lam, const Rational& t, int m) {
    MPoly P = to_mpoly(jack_poly(lam, t, m));
    std::map<int, JackExpansion> out;
    Rational dfact = 1;
    MPoly g = P;  // E^d P, with E = sum_i d/dz_i
    for (int d = 0; !g.is_zero(); ++d) {
        if (d > 0) dfact *= d;
        SymPoly coeff = to_sympoly(g * (Rational(1) / dfact), m);
        if (!coeff.is_zero()) out.emplace(d, jack_expand(coeff, t, m));
        MPoly next(m);
        for (int i = 0; i < m; ++i) next += g.derivative(i);
        g = std::move(next);
    }
    return out;
}

Partition uniqp(int m, int i) {
    if (m < 1) throw InvalidLabels("uniqp: m must be >= 1");
    if (i < 0 || i > m / 2) throw OutOfRange("uniqp: index out of range");
    static std::map<int, std::map<int, Partition>> memo;
    auto it = memo.find(m);
    if (it == memo.end()) {
        std::map<int, Partition> table;
        for (const auto& [order, exp] : translate_expand(admp(m, 1, 0), rat(-3), m)) {
            if (exp.terms.size() != 1)
                throw std::logic_error("uniqp: expansion order is not a single Jack term");
            table[order] = exp.terms.begin()->first;
        }
        it = memo.emplace(m, std::move(table)).first;
    }
    auto jt = it->second.find(m / 2 - i);
    if (jt == it->second.end()) throw OutOfRange("uniqp: no partition at that order");
    return jt->second;
}

}  // namespace minmod
