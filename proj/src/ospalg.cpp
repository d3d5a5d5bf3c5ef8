#include "minmod/ospalg.hpp"

#include <optional>

namespace minmod {

Matrix mat_zero(int n) { return Matrix(n, std::vector<Rational>(n, 0)); }

Matrix mat_identity(int n) {
    Matrix m = mat_zero(n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    int n = static_cast<int>(a.size());
    Matrix r = mat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) r[i][j] += b[i][j];
    return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Matrix mat_scale(const Matrix& a, const Rational& s) {
    Matrix r = a;
    for (auto& row : r)
        for (auto& v : row) v *= s;
    return r;
}

bool mat_equal(const Matrix& a, const Matrix& b) { return a == b; }

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) {
    return mat_sub(mat_mul(a, b), mat_mul(b, a));
}
Matrix anticommutator(const Matrix& a, const Matrix& b) {
    return mat_add(mat_mul(a, b), mat_mul(b, a));
}

// Verifies every relation of the defining (anti-)commutation table.
void check_relations(const SuperRepMatrices& r) {
    const Matrix &e = r.gen('e'), &h = r.gen('h'), &f = r.gen('f');
    auto expect = [](const Matrix& got, const Matrix& want, const char* rel) {
        if (!mat_equal(got, want))
            throw std::logic_error(std::string("representation violates ") + rel);
    };
    expect(commutator(h, e), mat_scale(e, 2), "[h,e] = 2e");
    expect(commutator(h, f), mat_scale(f, -2), "[h,f] = -2f");
    expect(commutator(e, f), h, "[e,f] = h");
    if (r.has_odd) {
        const Matrix &x = r.gen('x'), &y = r.gen('y');
        expect(commutator(e, y), mat_scale(x, -1), "[e,y] = -x");
        expect(commutator(h, x), x, "[h,x] = x");
        expect(commutator(h, y), mat_scale(y, -1), "[h,y] = -y");
        expect(commutator(f, x), mat_scale(y, -1), "[f,x] = -y");
        expect(commutator(e, x), mat_zero(r.dim), "[e,x] = 0");
        expect(commutator(f, y), mat_zero(r.dim), "[f,y] = 0");
        expect(anticommutator(x, x), mat_scale(e, 2), "{x,x} = 2e");
        expect(anticommutator(x, y), h, "{x,y} = h");
        expect(anticommutator(y, y), mat_scale(f, -2), "{y,y} = -2f");
    }
}

}  // namespace

SuperRepMatrices osp_irrep(int lambda) {
    if (lambda < 0) throw std::invalid_argument("osp_irrep: lambda must be >= 0");
    int dim = 2 * lambda + 1;
    SuperRepMatrices r;
    r.dim = dim;
    r.has_odd = true;
    r.parity.resize(dim);
    for (int j = 0; j < dim; ++j) r.parity[j] = j % 2;
    Matrix h = mat_zero(dim), x = mat_zero(dim), y = mat_zero(dim);
    // Basis v_0, ..., v_{2 lambda}: h v_j = (lambda - j) v_j, y v_j = v_{j+1},
    // x v_j = c_j v_{j-1} with c_1 = lambda, c_{j+1} = (lambda - j) - c_j.
    for (int j = 0; j < dim; ++j) h[j][j] = lambda - j;
    for (int j = 0; j + 1 < dim; ++j) y[j + 1][j] = 1;
    Rational c = lambda;
    for (int j = 1; j < dim; ++j) {
        x[j - 1][j] = c;
        c = Rational(lambda - j) - c;
    }
    r.gens['h'] = h;
    r.gens['x'] = x;
    r.gens['y'] = y;
    r.gens['e'] = mat_mul(x, x);
    r.gens['f'] = mat_scale(mat_mul(y, y), -1);
    check_relations(r);
    return r;
}

SuperRepMatrices sl2_irrep(int lambda) {
    if (lambda < 0) throw std::invalid_argument("sl2_irrep: lambda must be >= 0");
    int dim = lambda + 1;
    SuperRepMatrices r;
    r.dim = dim;
    r.has_odd = false;
    r.parity.assign(dim, 0);
    Matrix h = mat_zero(dim), e = mat_zero(dim), f = mat_zero(dim);
    // h v_j = (lambda - 2j) v_j, f v_j = v_{j+1}, e v_j = j(lambda - j + 1) v_{j-1}.
    for (int j = 0; j < dim; ++j) h[j][j] = lambda - 2 * j;
    for (int j = 0; j + 1 < dim; ++j) f[j + 1][j] = 1;
    for (int j = 1; j < dim; ++j) e[j - 1][j] = Rational(j) * (lambda - j + 1);
    r.gens['h'] = h;
    r.gens['e'] = e;
    r.gens['f'] = f;
    check_relations(r);
    return r;
}

CasimirSpectrum casimir_spectrum(const SuperRepMatrices& rep) {
    CasimirSpectrum out;
    out.osp = rep.has_odd;
    const Matrix &e = rep.gen('e'), &h = rep.gen('h'), &f = rep.gen('f');
    Matrix q = mat_add(mat_scale(mat_mul(h, h), rat(1, 2)),
                       mat_add(mat_mul(e, f), mat_mul(f, e)));
    auto scalar_on = [&](const Matrix& op, int want_parity) {
        std::optional<Rational> val;
        for (int i = 0; i < rep.dim; ++i) {
            if (want_parity >= 0 && rep.parity[i] != want_parity) continue;
            for (int j = 0; j < rep.dim; ++j)
                if (j != i && op[i][j] != 0)
                    throw NotScalar("operator is not diagonal on the component");
            if (!val)
                val = op[i][i];
            else if (*val != op[i][i])
                throw NotScalar("operator is not scalar on the component");
        }
        return val.value_or(Rational(0));
    };
    if (rep.has_odd) {
        Matrix sigma = commutator(rep.gen('x'), rep.gen('y'));
        for (int i = 0; i < rep.dim; ++i) sigma[i][i] += rat(1, 2);
        out.sigma_even = scalar_on(sigma, 0);
        out.sigma_odd = (rep.dim > 1) ? scalar_on(sigma, 1) : out.sigma_even;
        // The osp quadratic Casimir scalar: (1/2) Sigma^2 - 1/8, which must
        // agree between the parity components.
        out.casimir = out.sigma_even * out.sigma_even / 2 - rat(1, 8);
        if (out.sigma_odd * out.sigma_odd / 2 - rat(1, 8) != out.casimir)
            throw NotScalar("Sigma^2 disagrees between the parity components");
    } else {
        out.casimir = scalar_on(q, -1);
    }
    return out;
}

CentralizerReport centralizer_identities(int lambda, bool osp) {
    CentralizerReport rep;
    if (osp) {
        SuperRepMatrices r = osp_irrep(lambda);
        const Matrix &h = r.gen('h'), &x = r.gen('x'), &y = r.gen('y');
        Matrix sigma = commutator(x, y);
        for (int i = 0; i < r.dim; ++i) sigma[i][i] += rat(1, 2);
        Matrix id = mat_identity(r.dim);
        // yx = (1/2)(h - Sigma + 1/2)
        Matrix rhs1 = mat_scale(mat_add(mat_sub(h, sigma), mat_scale(id, rat(1, 2))),
                                rat(1, 2));
        rep.yx_ok = mat_equal(mat_mul(y, x), rhs1);
        // fe = -(1/4)(h + Sigma + 3/2)(h - Sigma + 1/2)
        Matrix a = mat_add(mat_add(h, sigma), mat_scale(id, rat(3, 2)));
        Matrix b = mat_add(mat_sub(h, sigma), mat_scale(id, rat(1, 2)));
        Matrix rhs2 = mat_scale(mat_mul(a, b), rat(-1, 4));
        rep.fe_ok = mat_equal(mat_mul(r.gen('f'), r.gen('e')), rhs2);
    } else {
        SuperRepMatrices r = sl2_irrep(lambda);
        const Matrix &e = r.gen('e'), &h = r.gen('h'), &f = r.gen('f');
        Rational qval = Rational(lambda) * (lambda + 2) / 2;
        Matrix rhs = mat_scale(
            mat_sub(mat_sub(mat_scale(mat_identity(r.dim), qval),
                            mat_scale(mat_mul(h, h), rat(1, 2))),
                    h),
            rat(1, 2));
        rep.yx_ok = true;
        rep.fe_ok = mat_equal(mat_mul(f, e), rhs);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Affine algebra.
// ---------------------------------------------------------------------------

bool label_odd(GenLabel l) { return l == GenLabel::X || l == GenLabel::Y; }

std::string label_str(GenLabel l) {
    switch (l) {
        case GenLabel::E: return "e";
        case GenLabel::X: return "x";
        case GenLabel::H: return "h";
        case GenLabel::Y: return "y";
        case GenLabel::F: return "f";
        case GenLabel::K: return "K";
    }
    return "?";
}

GenCombo combo_add(GenCombo a, const GenCombo& b, const Rational& scale) {
    for (const auto& [g, c] : b) {
        auto [it, ins] = a.emplace(g, c * scale);
        if (!ins) {
            it->second += c * scale;
            if (it->second == 0) a.erase(it);
        } else if (it->second == 0) {
            a.erase(it);
        }
    }
    return a;
}

namespace {

bool integral(const Rational& m) { return m.get_den() == 1; }
bool half_integral(const Rational& m) { return Rational(m * 2).get_den() == 1; }

// Finite super bracket [a, b] as label -> coefficient.
std::map<GenLabel, Rational> finite_bracket(GenLabel a, GenLabel b) {
    using L = GenLabel;
    auto table = [](L a, L b) -> std::map<L, Rational> {
        if (a == L::H && b == L::E) return {{L::E, 2}};
        if (a == L::H && b == L::F) return {{L::F, -2}};
        if (a == L::E && b == L::F) return {{L::H, 1}};
        if (a == L::H && b == L::X) return {{L::X, 1}};
        if (a == L::H && b == L::Y) return {{L::Y, -1}};
        if (a == L::E && b == L::Y) return {{L::X, -1}};
        if (a == L::F && b == L::X) return {{L::Y, -1}};
        if (a == L::X && b == L::X) return {{L::E, 2}};
        if (a == L::X && b == L::Y) return {{L::H, 1}};
        if (a == L::Y && b == L::Y) return {{L::F, -2}};
        return {};
    };
    auto fwd = table(a, b);
    if (!fwd.empty() || a == b) return fwd;
    // Super antisymmetry: [b,a] = -(-1)^{|a||b|} [a,b]; for {x,y} the sign
    // cancels, giving {y,x} = {x,y}.
    auto rev = table(b, a);
    Rational sign = (label_odd(a) && label_odd(b)) ? 1 : -1;
    for (auto& [l, c] : rev) c *= sign;
    return rev;
}

Rational killing(GenLabel a, GenLabel b) {
    using L = GenLabel;
    if (a == L::H && b == L::H) return 2;
    if ((a == L::E && b == L::F) || (a == L::F && b == L::E)) return 1;
    if (a == L::X && b == L::Y) return 2;
    if (a == L::Y && b == L::X) return -2;
    return 0;
}

void check_sector(const AffineGen& a, const AffineGen& b) {
    auto valid = [](const AffineGen& g) {
        if (g.label == GenLabel::K) return g.mode == 0;
        return label_odd(g.label) ? half_integral(g.mode) : integral(g.mode);
    };
    if (!valid(a) || !valid(b))
        throw SectorMismatch("affine_bracket: invalid mode index");
    if (label_odd(a.label) && label_odd(b.label) && !integral(a.mode - b.mode))
        throw SectorMismatch("affine_bracket: generators from different sectors");
}

}  // namespace

GenCombo affine_bracket(const AffineGen& a, const AffineGen& b) {
    check_sector(a, b);
    GenCombo out;
    if (a.label == GenLabel::K || b.label == GenLabel::K) return out;
    Rational sum = a.mode + b.mode;
    for (const auto& [l, c] : finite_bracket(a.label, b.label))
        out = combo_add(out, {{AffineGen{l, sum}, c}});
    if (sum == 0) {
        Rational central = a.mode * killing(a.label, b.label);
        if (central != 0)
            out = combo_add(out, {{AffineGen{GenLabel::K, 0}, central}});
    }
    return out;
}

GenCombo combo_bracket(const GenCombo& a, const GenCombo& b) {
    GenCombo out;
    for (const auto& [ga, ca] : a)
        for (const auto& [gb, cb] : b)
            out = combo_add(out, affine_bracket(ga, gb), ca * cb);
    return out;
}

GenCombo spectral_flow(const AffineGen& g, const Rational& ell) {
    using L = GenLabel;
    switch (g.label) {
        case L::E: return {{AffineGen{L::E, g.mode - 2 * ell}, 1}};
        case L::X: return {{AffineGen{L::X, g.mode - ell}, 1}};
        case L::Y: return {{AffineGen{L::Y, g.mode + ell}, 1}};
        case L::F: return {{AffineGen{L::F, g.mode + 2 * ell}, 1}};
        case L::K: return {{AffineGen{L::K, 0}, 1}};
        case L::H: {
            GenCombo out{{AffineGen{L::H, g.mode}, 1}};
            if (g.mode == 0 && ell != 0)
                out = combo_add(out, {{AffineGen{L::K, 0}, -2 * ell}});
            return out;
        }
    }
    return {};
}

namespace {

GenCombo zeta_image(const AffineGen& g, const Rational& c) {
    using L = GenLabel;
    switch (g.label) {
        case L::E: return {{AffineGen{L::F, g.mode + 1}, -1}};
        case L::X: return {{AffineGen{L::Y, g.mode + rat(1, 2)}, -1}};
        case L::Y: return {{AffineGen{L::X, g.mode - rat(1, 2)}, 1}};
        case L::F: return {{AffineGen{L::E, g.mode - 1}, -1}};
        case L::K: return {{AffineGen{L::K, 0}, 1}};
        case L::H: {
            GenCombo out{{AffineGen{L::H, g.mode}, -1}};
            if (g.mode == 0 && c != 0)
                out = combo_add(out, {{AffineGen{L::K, 0}, c}});
            return out;
        }
    }
    return {};
}

GenCombo zeta_combo(const GenCombo& combo, const Rational& c) {
    GenCombo out;
    for (const auto& [g, coeff] : combo) out = combo_add(out, zeta_image(g, c), coeff);
    return out;
}

Rational solve_zeta_constant() {
    using L = GenLabel;
    // Constraint: zeta([a,b]) = [zeta(a), zeta(b)] for all generator pairs.
    // The unknown c enters linearly (through the image of h_0), so each pair
    // gives an affine condition; collect all of them and demand a unique
    // common root.
    std::optional<Rational> root;
    bool constrained = false;
    std::vector<AffineGen> gens;
    for (L l : {L::E, L::H, L::F})
        for (int m = -2; m <= 2; ++m) gens.push_back({l, m});
    for (L l : {L::X, L::Y})
        for (int m2 = -3; m2 <= 3; m2 += 2) gens.push_back({l, rat(m2, 2)});
    gens.push_back({L::K, 0});
    auto defect = [&](const AffineGen& a, const AffineGen& b, const Rational& c) {
        GenCombo lhs = zeta_combo(affine_bracket(a, b), c);
        GenCombo rhs = combo_bracket(zeta_image(a, c), zeta_image(b, c));
        return combo_add(lhs, rhs, -1);
    };
    for (const auto& a : gens)
        for (const auto& b : gens) {
            GenCombo d0 = defect(a, b, 0);
            GenCombo d1 = defect(a, b, 1);
            GenCombo slope = combo_add(d1, d0, -1);  // defect(c) = d0 + c*slope
            for (const auto& [g, s0] : combo_add(d0, slope, 0)) {
                auto it = slope.find(g);
                Rational sl = (it == slope.end()) ? Rational(0) : it->second;
                if (sl == 0) {
                    if (s0 != 0)
                        throw NoConsistentConstant(
                            "zeta_twist: inconsistent constraint on " + label_str(g.label));
                    continue;
                }
                Rational r = -s0 / sl;
                if (root && *root != r)
                    throw NoConsistentConstant("zeta_twist: conflicting constraints");
                root = r;
                constrained = true;
            }
            // Components present only in the slope force the root as well.
            for (const auto& [g, sl] : slope) {
                if (d0.count(g) || sl == 0) continue;
                if (root && *root != 0)
                    throw NoConsistentConstant("zeta_twist: conflicting constraints");
                root = 0;
                constrained = true;
            }
        }
    if (!constrained || !root)
        throw NoConsistentConstant("zeta_twist: constant is unconstrained");
    return *root;
}

}  // namespace

Rational zeta_central_constant() {
    static const Rational c = solve_zeta_constant();
    return c;
}

GenCombo zeta_twist(const AffineGen& g) { return zeta_image(g, zeta_central_constant()); }

}  // namespace minmod
