// Pfaffians of skew-symmetric matrices over any exact coefficient ring
// (rationals, univariate polynomials, rational functions), by recursive
// expansion along the first remaining row, memoized on index subsets.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "minmod/rational.hpp"

namespace minmod {

struct OddSize : std::invalid_argument {
    OddSize() : std::invalid_argument("pfaffian: matrix size must be even") {}
};

// A skew-symmetric matrix is given by its upper-triangular entries
// A[i][j], i < j; entries on and below the diagonal are ignored.
// `one` supplies the multiplicative identity of the entry ring (needed for
// the empty pfaffian, e.g. a RatFun of the right arity).
template <typename T>
T pfaffian(const std::vector<std::vector<T>>& A, const T& one) {
    const int n = static_cast<int>(A.size());
    if (n % 2 != 0) throw OddSize();
    if (n > 62) throw std::invalid_argument("pfaffian: size too large");
    std::map<std::uint64_t, T> memo;
    auto rec = [&](auto&& self, std::uint64_t mask) -> const T& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        T acc = one * Rational(0);
        if (mask == 0) {
            acc = one;
        } else {
            int i = 0;
            while (!(mask >> i & 1)) ++i;
            std::uint64_t rest0 = mask & ~(std::uint64_t{1} << i);
            int k = 0;  // position of j among the remaining indices (1-based)
            for (int j = i + 1; j < n; ++j) {
                if (!(rest0 >> j & 1)) continue;
                ++k;
                std::uint64_t rest = rest0 & ~(std::uint64_t{1} << j);
                T term = A[i][j] * self(self, rest);
                if (k % 2 == 1)
                    acc = acc + term;
                else
                    acc = acc - term;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
    return rec(rec, full);
}

}  // namespace minmod
