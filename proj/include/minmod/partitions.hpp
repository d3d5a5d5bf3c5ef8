// Integer partitions, Young-diagram cell data, dominance order, the
// (2,2)-admissibility condition, complements, and the special partition
// families used by the correlator identities.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace minmod {

// Weakly decreasing nonnegative parts, trailing zeros trimmed.
using Partition = std::vector<int>;

struct WeightMismatch : std::invalid_argument {
    WeightMismatch() : std::invalid_argument("dominance_leq: weight mismatch") {}
};
struct DoesNotFit : std::invalid_argument {
    DoesNotFit() : std::invalid_argument("complement: partition does not fit the box") {}
};
struct InvalidLabels : std::invalid_argument {
    explicit InvalidLabels(const std::string& what) : std::invalid_argument(what) {}
};

inline Partition trimmed(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
inline int length(const Partition& p) { return static_cast<int>(trimmed(p).size()); }
inline int part(const Partition& p, int i) {  // 0-based, absent parts are 0
    return (i >= 0 && i < static_cast<int>(p.size())) ? p[i] : 0;
}

inline bool is_partition(const Partition& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) return false;
    return p.empty() || p.back() >= 0;
}

inline Partition conjugate(const Partition& p) {
    Partition q;
    for (int i = 0; i < part(p, 0); ++i) {
        int count = 0;
        for (int row : p)
            if (row > i) ++count;
        q.push_back(count);
    }
    return q;
}

// Dominance partial order on equal-weight partitions.
inline bool dominance_leq(const Partition& mu, const Partition& lam) {
    if (weight(mu) != weight(lam)) throw WeightMismatch();
    int sum_mu = 0, sum_lam = 0;
    size_t n = std::max(mu.size(), lam.size());
    for (size_t i = 0; i < n; ++i) {
        sum_mu += part(mu, static_cast<int>(i));
        sum_lam += part(lam, static_cast<int>(i));
        if (sum_mu > sum_lam) return false;
    }
    return true;
}

// Arm/leg lengths and colengths for one Young-diagram cell.
struct Cell {
    int row, col;          // 0-based coordinates
    int arm, leg;          // cells strictly right / strictly below
    int arm_co, leg_co;    // cells strictly left / strictly above (= col, row)
};

// All cells of the diagram, row-major.
inline std::vector<Cell> cell_data(const Partition& lam) {
    Partition p = trimmed(lam);
    Partition conj = conjugate(p);
    std::vector<Cell> cells;
    for (int r = 0; r < static_cast<int>(p.size()); ++r)
        for (int c = 0; c < p[r]; ++c)
            cells.push_back({r, c, p[r] - c - 1, conj[c] - r - 1, c, r});
    return cells;
}

// (2,2)-admissibility: lam_i - lam_{i+2} >= 2 for every pair of parts two
// apart within the partition. (The condition is interior-only: a trailing
// pair of equal parts is fine, which is what makes the families produced by
// the Taylor expansions admissible.)
inline bool is_admissible(const Partition& lam) {
    Partition p = trimmed(lam);
    for (int i = 0; i + 2 < static_cast<int>(p.size()); ++i)
        if (p[i] - p[i + 2] < 2) return false;
    return true;
}

// The reversed complement [k - lam] = (k - lam_m, ..., k - lam_1) in an
// m-row, k-column box.
inline Partition complement(int k, const Partition& lam, int m) {
    Partition p = trimmed(lam);
    if (part(p, 0) > k || static_cast<int>(p.size()) > m) throw DoesNotFit();
    Partition q;
    for (int i = m - 1; i >= 0; --i) q.push_back(k - part(p, i));
    return trimmed(q);
}

// All partitions of the given weight with at most max_len parts, each at
// most max_part (pass a large max_part for no bound).
inline std::vector<Partition> partitions_of(int w, int max_len, int max_part) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(remaining, bound); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, w, std::min(w, max_part));
    return out;
}

// All mu with |mu| = |kappa|, mu <= kappa in dominance, length(mu) <= n.
inline std::vector<Partition> dominated_list(const Partition& kappa, int n) {
    std::vector<Partition> out;
    for (const auto& mu : partitions_of(weight(kappa), n, part(kappa, 0) + weight(kappa)))
        if (dominance_leq(mu, kappa)) out.push_back(mu);
    return out;
}

// The partition of cells common to every mu dominated by some kappa in the
// list (with length <= n), intersected over all kappa.
inline Partition dominated_cells(const std::vector<Partition>& kappa_list, int n) {
    bool first = true;
    Partition rho;
    for (const auto& kappa : kappa_list) {
        for (const auto& mu : dominated_list(kappa, n)) {
            if (first) {
                rho = mu;
                first = false;
            } else {
                Partition next;
                for (size_t i = 0; i < std::max(rho.size(), mu.size()); ++i)
                    next.push_back(std::min(part(rho, static_cast<int>(i)),
                                            part(mu, static_cast<int>(i))));
                rho = trimmed(next);
            }
        }
    }
    return rho;
}

// The admissible partition family indexing the pfaffian-correlator Jack
// identities. For even m = 2n the closed form is
// (n1+2(n-1), n2+2(n-1), ..., n1+2, n2+2, n1, n2); for odd m it is the tail
// of the (m+1)-value (largest part dropped), the form pinned by the
// dressed-correlator oracle (see the tests' derived-constants section).
inline Partition admp(int m, int n1, int n2) {
    if (m < 1) throw InvalidLabels("admp: m must be >= 1");
    if (n2 > n1 || n1 > n2 + 2 || n2 < 0)
        throw InvalidLabels("admp: need 0 <= n2 <= n1 <= n2 + 2");
    if (m % 2 == 1) {
        Partition even = admp(m + 1, n1, n2);
        if (even.empty()) return even;
        Partition tail(even.begin() + 1, even.end());
        return trimmed(tail);
    }
    int n = m / 2;
    Partition p;
    for (int j = n - 1; j >= 0; --j) {
        p.push_back(n1 + 2 * j);
        p.push_back(n2 + 2 * j);
    }
    return trimmed(p);
}

inline std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace minmod
