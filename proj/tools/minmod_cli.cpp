// Command-line front end: Kac tables, Zhu images, classification, spectra,
// Jack polynomials, ghost correlators, and the verification suites.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minmod/correlators.hpp"
#include "minmod/jsonio.hpp"
#include "minmod/ospalg.hpp"
#include "minmod/pfaffian.hpp"
#include "minmod/zeromode.hpp"

namespace {

using namespace minmod;

struct Output {
    std::string path;  // empty: stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path);
            f << text;
        }
    }
};

Sector parse_sector(const std::string& s) {
    if (s == "ns") return Sector::NS;
    if (s == "r") return Sector::R;
    throw CLI::ValidationError("--sector", "must be ns or r");
}

Partition parse_partition(const std::string& s) {
    Partition p;
    if (s.empty() || s == "-") return p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + s);
    return p;
}

std::string poly_str(const UPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Rational a = abs(c);
        if (a != 1 || k == 0) out += rat_str(a);
        if (k > 0) {
            if (a != 1) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

int cmd_kac_table(int u, int v, bool json, const Output& out) {
    KacTables t = kac_tables(validate(u, v));
    if (json) {
        Json j;
        j["u"] = u;
        j["v"] = v;
        Json body = to_json(t);
        for (auto& [k, val] : body.items()) j[k] = val;
        out.emit(canonical_dump(j));
        return 0;
    }
    std::ostringstream os;
    os << "Kac tables for (u, v) = (" << u << ", " << v << ")\n";
    auto dump = [&](const char* name, const std::vector<KacEntry>& rows) {
        os << name << ":\n";
        for (const KacEntry& e : rows)
            os << "  (" << e.i << "," << e.j << ")  lambda = " << rat_str(e.lambda)
               << "  s = " << rat_str(e.s) << "  q = " << rat_str(e.q) << "\n";
    };
    dump("NS", t.ns);
    dump("R", t.r);
    dump("R (reduced classes)", t.r_reduced);
    out.emit(os.str());
    return 0;
}

int cmd_zhu_image(int u, int v, Sector sec, bool json, const Output& out) {
    ZhuImage z = zhu_image(validate(u, v), sec);
    if (json) {
        Json j;
        j["u"] = u;
        j["v"] = v;
        Json body = to_json(z);
        for (auto& [k, val] : body.items()) j[k] = val;
        out.emit(canonical_dump(j));
        return 0;
    }
    std::ostringstream os;
    os << "Zhu image, " << sector_str(sec) << " sector, (u, v) = (" << u << ", "
       << v << "):\n  e^" << z.e_power << (z.x_factor ? " x" : "") << " * g, g = "
       << poly_str(z.g, sec == Sector::NS ? "Sigma" : "Q") << "\n";
    out.emit(os.str());
    return 0;
}

int cmd_classify(int u, int v, bool json, const Output& out) {
    auto mods = classify(validate(u, v));
    if (json) {
        Json j;
        j["u"] = u;
        j["v"] = v;
        j["modules"] = Json::array();
        for (const auto& d : mods) j["modules"].push_back(to_json(d));
        out.emit(canonical_dump(j));
        return 0;
    }
    std::ostringstream os;
    os << "Simple relaxed modules for (u, v) = (" << u << ", " << v << "): "
       << mods.size() << " descriptors\n";
    for (const auto& d : mods) {
        os << "  [" << sector_str(d.sector) << "] " << family_str(d.family);
        if (d.family == ModuleDescriptor::Dense)
            os << " (" << d.i << "," << d.j << ") "
               << (d.sector == Sector::NS ? "s = " : "q = ") << rat_str(d.sq);
        else
            os << " (" << d.i << "," << d.j << ") lambda = " << rat_str(d.lambda);
        if (d.parity_reversal_listed) os << "  [+ parity reversal]";
        if (!d.exclusion.empty()) os << "  {" << d.exclusion << "}";
        os << "\n";
    }
    out.emit(os.str());
    return 0;
}

int cmd_spectrum(int u, int v, int i, int j, bool json, const Output& out) {
    Spectrum sp = spectrum(validate(u, v), i, j);
    if (json) {
        Json o;
        o["u"] = u;
        o["v"] = v;
        o["i"] = i;
        o["j"] = j;
        o["lambda"] = rat_str(sp.lambda);
        o["s"] = rat_str(sp.s);
        o["q"] = rat_str(sp.q);
        out.emit(canonical_dump(o));
        return 0;
    }
    std::ostringstream os;
    os << "lambda_{" << i << "," << j << "} = " << rat_str(sp.lambda) << "  s = "
       << rat_str(sp.s) << "  q = " << rat_str(sp.q) << "\n";
    out.emit(os.str());
    return 0;
}

int cmd_jack(const std::string& lam_s, const std::string& t_s, int n, bool json,
             const Output& out) {
    Partition lam = parse_partition(lam_s);
    Rational t = rat_parse(t_s);
    SymPoly p = jack_poly(lam, t, n);
    if (json) {
        Json j;
        j["partition"] = to_json(lam);
        j["t"] = rat_str(t);
        j["n"] = n;
        j["monomial_expansion"] = Json::array();
        for (const auto& [mu, c] : p.terms) {
            Json term;
            term["partition"] = to_json(mu);
            term["coeff"] = rat_str(c);
            j["monomial_expansion"].push_back(term);
        }
        out.emit(canonical_dump(j));
        return 0;
    }
    std::ostringstream os;
    os << "P_" << partition_str(lam) << "^(" << rat_str(t) << ") in " << n
       << " variables:\n";
    for (const auto& [mu, c] : p.terms)
        os << "  " << rat_str(c) << " * m_" << partition_str(mu) << "\n";
    out.emit(os.str());
    return 0;
}

int cmd_correlator(int n_pairs, int m, Sector sec, bool minus, bool json,
                   const Output& out) {
    GhostFunctional f = (sec == Sector::R) ? GhostFunctional::Ramond
                        : minus            ? GhostFunctional::NSMinus
                                           : GhostFunctional::NSPlus;
    RatFun r = bc_correlator(n_pairs, m, f);
    auto mpoly_json = [](const MPoly& p) {
        Json a = Json::array();
        for (const auto& [e, c] : p.terms()) {
            Json term;
            term["exponents"] = e;
            term["coeff"] = rat_str(c);
            a.push_back(term);
        }
        return a;
    };
    if (json) {
        Json j;
        j["sector"] = (f == GhostFunctional::Ramond)  ? "r"
                      : (f == GhostFunctional::NSMinus) ? "ns-"
                                                        : "ns+";
        j["n_pairs"] = n_pairs;
        j["m"] = m;
        j["variables"] = (f == GhostFunctional::Ramond) ? "zeta (z_i = zeta_i^2)"
                                                        : "z";
        j["numerator"] = mpoly_json(r.num());
        j["denominator_factors"] = Json::array();
        for (const auto& [d, pw] : r.den()) {
            Json fac;
            fac["factor"] = mpoly_json(d);
            fac["power"] = pw;
            j["denominator_factors"].push_back(fac);
        }
        out.emit(canonical_dump(j));
        return 0;
    }
    std::ostringstream os;
    os << "bc correlator, " << 2 * n_pairs << " fields, m = " << m << ":\n";
    os << "  numerator terms: " << r.num().terms().size()
       << ", denominator factors: " << r.den().size() << "\n";
    out.emit(os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// Verification suites (exit 0 pass / 1 fail).
// ---------------------------------------------------------------------------

struct SuiteResult {
    Json report = Json::array();
    bool pass = true;

    void record(const std::string& name, bool ok, const std::string& detail = "") {
        Json j;
        j["check"] = name;
        j["pass"] = ok;
        if (!detail.empty()) j["detail"] = detail;
        report.push_back(j);
        if (!ok) pass = false;
    }
};

void suite_jack(SuiteResult& res, int max_n) {
    for (int invt : {1, 2, 3}) {
        Rational t = rat(1, invt);
        for (int n = 1; n <= max_n; ++n) {
            std::vector<Partition> lams;
            for (int w = 0; w <= 4; ++w)
                for (const Partition& p : partitions_of(w, n, w)) lams.push_back(p);
            for (const Partition& la : lams)
                for (const Partition& mu : lams) {
                    if (weight(la) != weight(mu)) continue;
                    Rational ip = constant_term_oracle(jack_poly(la, t, n),
                                                       jack_poly(mu, t, n), n, invt);
                    Rational want = (la == mu) ? jack_norm(la, t, n) : Rational(0);
                    res.record("norm 1/t=" + std::to_string(invt) + " n=" +
                                   std::to_string(n) + " " + partition_str(la) + "," +
                                   partition_str(mu),
                               ip == want);
                }
        }
    }
}

void suite_pfaffian(SuiteResult& res, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        int N = 2 * n;
        std::vector<std::vector<RatFun>> A(N, std::vector<RatFun>(N, RatFun(MPoly(N))));
        std::vector<std::vector<RatFun>> B = A;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                MPoly zi = MPoly::var(N, i), zj = MPoly::var(N, j);
                A[i][j] = RatFun(MPoly::constant(N, 1), zi - zj);
                B[i][j] = RatFun(zi + zj, zi - zj);
            }
        RatFun one(MPoly::constant(N, 1));
        MPoly van = vandermonde(N, N);
        MPoly lhs0 = (RatFun(van) * pfaffian(A, one)).as_mpoly();
        MPoly lhs1 = (RatFun(van) * pfaffian(B, one)).as_mpoly();
        MPoly rhs0 = to_mpoly(jack_poly(admp(N, 0, 0), Rational(-3), N));
        MPoly rhs1 = to_mpoly(jack_poly(admp(N, 1, 0), Rational(-3), N));
        res.record("pfaffian-jack 00 2n=" + std::to_string(N), lhs0 == rhs0);
        res.record("pfaffian-jack 10 2n=" + std::to_string(N), lhs1 == rhs1);
        // Translation invariance of P_{admp(2n,0,0)}.
        auto orders = translate_expand(admp(N, 0, 0), Rational(-3), N);
        bool inv = orders.size() == 1 && orders.count(0) == 1;
        res.record("translation invariance 2n=" + std::to_string(N), inv);
        // Taylor structure of P_{admp(2n,1,0)}.
        auto taylor = translate_expand(admp(N, 1, 0), Rational(-3), N);
        bool ok = true;
        for (const auto& [o, exp] : taylor) {
            if (exp.terms.size() != 1) ok = false;
            for (const auto& [p, c] : exp.terms)
                if (c == 0 || !is_admissible(p)) ok = false;
        }
        res.record("taylor structure 2n=" + std::to_string(N), ok);
    }
}

void suite_correlator(SuiteResult& res, int max_n) {
    for (int n = 1; n <= std::min(max_n, 2); ++n) {
        int N = 2 * n;
        for (auto f : {GhostFunctional::NSPlus, GhostFunctional::NSMinus,
                       GhostFunctional::Ramond}) {
            for (int m : {0, 1}) {
                bool ramond = (f == GhostFunctional::Ramond);
                RatFun c = bc_correlator(n, m, f);
                MPoly van(N);
                if (ramond) {
                    van = MPoly::constant(N, 1);
                    for (int i = 0; i < N; ++i)
                        for (int j = i + 1; j < N; ++j)
                            van = van * (MPoly::var(N, i) * MPoly::var(N, i) -
                                         MPoly::var(N, j) * MPoly::var(N, j));
                } else {
                    van = vandermonde(N, N);
                }
                MPoly exact = (c * RatFun(van)).as_mpoly();
                int M = 6 + 2 * N + 2 * std::abs(m);
                MPoly oracle = wick_bc_correlator(N, m, f, M) * van;
                int window = 4 + std::abs(m);
                MPoly win(N), ewin(N);
                for (const auto& [e, cc] : oracle.terms()) {
                    bool ok = true;
                    for (int x : e) ok = ok && std::abs(x) <= window;
                    if (ok) win.add_term(e, cc);
                }
                for (const auto& [e, cc] : exact.terms()) {
                    bool ok = true;
                    for (int x : e) ok = ok && std::abs(x) <= window;
                    if (ok) ewin.add_term(e, cc);
                }
                std::string name = std::string("wick ") +
                                   (ramond ? "r" : f == GhostFunctional::NSMinus
                                                       ? "ns-"
                                                       : "ns+") +
                                   " 2n=" + std::to_string(N) + " m=" +
                                   std::to_string(m);
                res.record(name, win == ewin);
            }
        }
    }
}

void suite_ospalg(SuiteResult& res, int max_n) {
    for (int lam = 0; lam <= std::max(2, max_n); ++lam) {
        CasimirSpectrum cs = casimir_spectrum(osp_irrep(lam));
        res.record("osp sigma lambda=" + std::to_string(lam),
                   cs.sigma_even == rat(2 * lam + 1, 2) &&
                       // lambda = 0 has no odd component.
                       (lam == 0 || cs.sigma_odd == -rat(2 * lam + 1, 2)) &&
                       cs.casimir == rat(lam * (lam + 1), 2));
        CentralizerReport cr = centralizer_identities(lam, true);
        res.record("osp centraliser lambda=" + std::to_string(lam), cr.yx_ok && cr.fe_ok);
        CasimirSpectrum cs2 = casimir_spectrum(sl2_irrep(lam));
        res.record("sl2 casimir lambda=" + std::to_string(lam),
                   cs2.casimir == rat(lam * (lam + 2), 2));
    }
    res.record("zeta central constant", zeta_central_constant() == 1,
               "solved value " + rat_str(zeta_central_constant()));
}

void suite_svimage(SuiteResult& res, std::vector<std::pair<int, int>> pairs,
                   std::vector<Sector> sectors, Json* reports) {
    for (auto [u, v] : pairs)
        for (Sector sec : sectors) {
            VerificationReport r = verify_svimage(validate(u, v), sec);
            res.record("svimage (" + std::to_string(u) + "," + std::to_string(v) +
                           ") " + sector_str(sec),
                       r.pass, r.first_failure);
            if (reports) reports->push_back(to_json(r));
        }
}

int cmd_verify(const std::string& suite, int u, int v, const std::string& sector,
               int max_n, bool json, const Output& out) {
    SuiteResult res;
    Json reports = Json::array();
    std::vector<Sector> sectors;
    if (sector == "ns")
        sectors = {Sector::NS};
    else if (sector == "r")
        sectors = {Sector::R};
    else
        sectors = {Sector::NS, Sector::R};

    if (suite == "jack") {
        suite_jack(res, max_n > 0 ? std::min(max_n, 3) : 2);
    } else if (suite == "pfaffian") {
        suite_pfaffian(res, max_n > 0 ? std::min(max_n, 3) : 2);
    } else if (suite == "correlator") {
        suite_correlator(res, max_n > 0 ? max_n : 2);
    } else if (suite == "ospalg") {
        suite_ospalg(res, max_n > 0 ? max_n : 4);
    } else if (suite == "svimage") {
        std::vector<std::pair<int, int>> pairs;
        if (u > 0 && v > 0)
            pairs = {{u, v}};
        else
            pairs = {{2, 4}, {3, 5}, {4, 6}, {3, 1}, {5, 1}, {4, 2}, {5, 3}};
        suite_svimage(res, pairs, sectors, &reports);
    } else {
        throw CLI::ValidationError("--suite",
                                   "must be jack|pfaffian|correlator|ospalg|svimage");
    }

    if (json) {
        Json j;
        j["suite"] = suite;
        j["pass"] = res.pass;
        j["checks"] = res.report;
        if (!reports.empty()) j["reports"] = reports;
        out.emit(canonical_dump(j));
    } else {
        std::ostringstream os;
        for (const auto& c : res.report)
            os << (c["pass"].get<bool>() ? "PASS " : "FAIL ")
               << c["check"].get<std::string>() << "\n";
        os << (res.pass ? "suite pass\n" : "suite FAIL\n");
        out.emit(os.str());
    }
    return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"osp(1|2) minimal-model exact toolkit"};
    app.require_subcommand(1);
    bool json = false;
    std::string out_path, sector = "ns", ver_sector = "both", suite, lam_s, t_s;
    int u = 0, v = 0, i = 0, jj = 0, n = 0, m = 0, max_n = 0, n_pairs = 0;
    bool minus = false;

    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json", json, "emit canonical JSON");
        c->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* kac = app.add_subcommand("kac-table", "Kac tables for (u, v)");
    kac->add_option("u", u)->required();
    kac->add_option("v", v)->required();
    add_common(kac);

    CLI::App* zhu = app.add_subcommand("zhu-image", "Zhu-algebra image of the singular vector");
    zhu->add_option("u", u)->required();
    zhu->add_option("v", v)->required();
    zhu->add_option("--sector", sector, "ns|r");
    add_common(zhu);

    CLI::App* cls = app.add_subcommand("classify", "simple relaxed module descriptors");
    cls->add_option("u", u)->required();
    cls->add_option("v", v)->required();
    add_common(cls);

    CLI::App* spec = app.add_subcommand("spectrum", "lambda, s, q at Kac labels (i, j)");
    spec->add_option("u", u)->required();
    spec->add_option("v", v)->required();
    spec->add_option("i", i)->required();
    spec->add_option("j", jj)->required();
    add_common(spec);

    CLI::App* jk = app.add_subcommand("jack", "Jack polynomial in the monomial basis");
    jk->add_option("partition", lam_s, "comma-separated parts, '-' for empty")->required();
    jk->add_option("t", t_s, "rational parameter, e.g. -3 or 1/2")->required();
    jk->add_option("n", n, "number of variables")->required();
    add_common(jk);

    CLI::App* corr = app.add_subcommand("correlator", "bc-ghost correlator (2 n_pairs fields)");
    corr->add_option("n_pairs", n_pairs)->required();
    corr->add_option("m", m, "c-field dressing exponent")->required();
    corr->add_option("--sector", sector, "ns|r");
    corr->add_flag("--minus", minus, "NS- functional");
    add_common(corr);

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite, "jack|pfaffian|correlator|ospalg|svimage")->required();
    ver->add_option("u", u);
    ver->add_option("v", v);
    ver->add_option("--sector", ver_sector, "ns|r|both");
    ver->add_option("--max-n", max_n, "size cap for the suite");
    add_common(ver);

    CLI11_PARSE(app, argc, argv);
    Output out{out_path};
    try {
        if (kac->parsed()) return cmd_kac_table(u, v, json, out);
        if (zhu->parsed()) return cmd_zhu_image(u, v, parse_sector(sector), json, out);
        if (cls->parsed()) return cmd_classify(u, v, json, out);
        if (spec->parsed()) return cmd_spectrum(u, v, i, jj, json, out);
        if (jk->parsed()) return cmd_jack(lam_s, t_s, n, json, out);
        if (corr->parsed())
            return cmd_correlator(n_pairs, m, sector == "r" ? Sector::R : Sector::NS,
                                  minus, json, out);
        if (ver->parsed()) return cmd_verify(suite, u, v, ver_sector, max_n, json, out);
    } catch (const NotAdmissible& e) {
        std::cerr << "NotAdmissible: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
