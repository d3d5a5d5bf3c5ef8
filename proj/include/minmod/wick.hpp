// Independent oracle for bc-ghost correlators by direct mode expansion.
//
// b(z) = sum_r b_r z^{-r-1}, c(z) = sum_r c_r z^{-r}, {b_r, c_s} = d_{r+s,0};
// modes are integral in the Neveu-Schwarz sector and half-integral in the
// Ramond sector (realized in zeta variables with z = zeta^2 so that all
// exponents stay integral). The NS vacuum is annihilated by b_r (r >= 0) and
// c_s (s >= 1); c_0 is a creator, which realizes <NS|b_0 c_0|NS> = 1.
//
// Fields are truncated at |2r| <= 2M. Coefficients of monomials whose
// exponents are all well inside the truncation window are exact; callers
// compare on such a window only.
#pragma once

#include <map>
#include <vector>

#include "minmod/mpoly.hpp"

namespace minmod {

enum class GhostFunctional { NSPlus, NSMinus, Ramond };

namespace wick {

// A state is a sum of creator monomials (sorted id lists, fermionic signs
// folded into the coefficients, which are Laurent polynomials in z).
using State = std::map<std::vector<int>, MPoly>;

// Creator/annihilator ids: mode r encoded as r2 = 2r; id = r2 * 2 + type
// with type 0 = b, 1 = c. Any fixed total order works for canonical forms.
inline int mode_id(int r2, bool is_c) { return r2 * 2 + (is_c ? 1 : 0); }

inline bool is_annihilator(int r2, bool is_c, bool ramond) {
    if (ramond) return r2 >= 1;  // half-integral modes, no zero modes
    return is_c ? r2 >= 2 : r2 >= 0;
}

// Applies a single mode (times a monomial coefficient) on the left of every
// term of the state.
inline void apply_mode(const State& in, State& out, int r2, bool is_c, bool ramond,
                       const MPoly& coeff) {
    for (const auto& [creators, amp] : in) {
        if (is_annihilator(r2, is_c, ramond)) {
            // Contract with the matching creator, if present.
            int want = mode_id(-r2, !is_c);
            for (size_t p = 0; p < creators.size(); ++p) {
                if (creators[p] != want) continue;
                std::vector<int> rest = creators;
                rest.erase(rest.begin() + p);
                MPoly add = amp * coeff;
                if (p % 2 == 1) add = -add;
                auto [it, ins] = out.emplace(std::move(rest), add);
                if (!ins) it->second += add;
                break;
            }
        } else {
            int id = mode_id(r2, is_c);
            auto pos = std::lower_bound(creators.begin(), creators.end(), id);
            if (pos != creators.end() && *pos == id) continue;  // b^2 = c^2 = 0
            std::vector<int> ext = creators;
            size_t p = pos - creators.begin();
            ext.insert(ext.begin() + p, id);
            MPoly add = amp * coeff;
            if (p % 2 == 1) add = -add;
            auto [it, ins] = out.emplace(std::move(ext), add);
            if (!ins) it->second += add;
        }
    }
}

// Applies the full field b(z_var) or c(z_var), truncated at |2r| <= 2M.
// In the Ramond sector z_var is a zeta variable (z = zeta^2).
inline State apply_field(const State& in, int arity, int var, bool is_c, bool ramond,
                         int M) {
    State out;
    int first = ramond ? -2 * M + 1 : -2 * M;  // odd r2 in R, even r2 in NS
    for (int r2 = first; r2 <= 2 * M; r2 += 2) {
        // exponent of the position variable: b: z^{-r-1}, c: z^{-r};
        // in zeta variables (z = zeta^2) the exponents double.
        int e = is_c ? (ramond ? -r2 : -r2 / 2)
                     : (ramond ? -r2 - 2 : -r2 / 2 - 1);
        apply_mode(in, out, r2, is_c, ramond, MPoly::var(arity, var, e));
    }
    // Drop exact zeros to keep the state small.
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace wick

// <prod_{i=1}^{nf} (c(z_i) z_i^m - b(z_i))> in the requested functional,
// truncated at mode magnitude M. Ramond results are in zeta variables
// (z_i = zeta_i^2, so the dressing is zeta_i^{2m}).
inline MPoly wick_bc_correlator(int nf, int m, GhostFunctional f, int M) {
    bool ramond = (f == GhostFunctional::Ramond);
    wick::State state;
    state.emplace(std::vector<int>{}, MPoly::one(nf));
    if (f == GhostFunctional::NSMinus) {
        wick::State out;
        wick::apply_mode(state, out, 0, true, false, MPoly::one(nf));
        state = std::move(out);
    }
    for (int i = nf - 1; i >= 0; --i) {
        wick::State c_part = wick::apply_field(state, nf, i, true, ramond, M);
        wick::State b_part = wick::apply_field(state, nf, i, false, ramond, M);
        wick::State next;
        int mdress = ramond ? 2 * m : m;
        for (auto& [k, v] : c_part) {
            MPoly add = v.shifted(i, mdress);
            auto [it, ins] = next.emplace(k, add);
            if (!ins) it->second += add;
        }
        for (auto& [k, v] : b_part) {
            auto [it, ins] = next.emplace(k, -v);
            if (!ins) it->second -= v;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        state = std::move(next);
    }
    if (f == GhostFunctional::NSMinus) {
        wick::State out;
        wick::apply_mode(state, out, 0, false, false, MPoly::one(nf));
        state = std::move(out);
    }
    auto it = state.find(std::vector<int>{});
    return it == state.end() ? MPoly(nf) : it->second;
}

}  // namespace minmod
