// Canonical JSON serialization for the CLI: deterministic key order, all
// rationals rendered as "num/den" strings, no floating point anywhere.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "minmod/minmod.hpp"
#include "minmod/partitions.hpp"
#include "minmod/rational.hpp"
#include "minmod/upoly.hpp"
#include "minmod/zeromode.hpp"

namespace minmod {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return rat_str(r); }

inline Json to_json(const Partition& p) {
    Json a = Json::array();
    for (int x : trimmed(p)) a.push_back(x);
    return a;
}

// Ascending coefficient list, constant term first.
inline Json to_json(const UPoly& p) {
    Json a = Json::array();
    for (const Rational& c : p.coeffs()) a.push_back(rat_str(c));
    return a;
}

inline Json to_json(const KacEntry& e) {
    Json j;
    j["i"] = e.i;
    j["j"] = e.j;
    j["lambda"] = rat_str(e.lambda);
    j["s"] = rat_str(e.s);
    j["q"] = rat_str(e.q);
    return j;
}

inline Json to_json(const KacTables& t) {
    Json j;
    j["ns"] = Json::array();
    for (const KacEntry& e : t.ns) j["ns"].push_back(to_json(e));
    j["r"] = Json::array();
    for (const KacEntry& e : t.r) j["r"].push_back(to_json(e));
    j["r_reduced"] = Json::array();
    for (const KacEntry& e : t.r_reduced) j["r_reduced"].push_back(to_json(e));
    return j;
}

inline Json to_json(const ZhuImage& z) {
    Json j;
    j["sector"] = sector_str(z.sector);
    j["e_power"] = z.e_power;
    j["x_factor"] = z.x_factor;
    j["g"] = to_json(z.g);
    return j;
}

inline std::string family_str(ModuleDescriptor::Family f) {
    switch (f) {
        case ModuleDescriptor::Finite: return "finite";
        case ModuleDescriptor::HighestWeight: return "highest-weight";
        case ModuleDescriptor::LowestWeight: return "lowest-weight";
        default: return "dense";
    }
}

inline Json to_json(const ModuleDescriptor& d) {
    Json j;
    j["sector"] = sector_str(d.sector);
    j["family"] = family_str(d.family);
    j["i"] = d.i;
    j["j"] = d.j;
    if (d.family == ModuleDescriptor::Dense)
        j[d.sector == Sector::NS ? "s" : "q"] = rat_str(d.sq);
    else
        j["lambda"] = rat_str(d.lambda);
    j["parity_reversal_listed"] = d.parity_reversal_listed;
    if (!d.exclusion.empty()) j["exclusion"] = d.exclusion;
    return j;
}

// The `meta` object carries the wall-clock duration and is the only part of
// a report excluded from determinism comparisons.
inline Json to_json(const VerificationReport& r) {
    Json j;
    j["u"] = r.u;
    j["v"] = r.v;
    j["sector"] = sector_str(r.sector);
    j["kappas"] = Json::array();
    for (const Partition& k : r.kappas) j["kappas"].push_back(to_json(k));
    j["summands"] = Json::array();
    for (const UPoly& s : r.summands) j["summands"].push_back(to_json(s));
    j["gcd"] = to_json(r.gcd);
    j["predicted"] = to_json(r.predicted);
    j["rho"] = to_json(r.rho);
    Json roots = Json::array();
    if (!r.gcd.is_zero())
        for (const Rational& x : rational_roots(r.gcd)) roots.push_back(rat_str(x));
    j["roots_found"] = roots;
    j["divides"] = r.predicted_divides_sym;
    j["paths_agree"] = r.paths_agree;
    j["rho_divides_all"] = r.rho_divides_all;
    j["predicted_roots_covered"] = r.predicted_roots_covered;
    j["degrees_match"] = r.degrees_match;
    j["pass"] = r.pass;
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    j["meta"] = Json{{"elapsed_ms", r.elapsed_ms}};
    return j;
}

// Serializes with a stable byte layout (2-space indent, '\n' terminated).
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace minmod
