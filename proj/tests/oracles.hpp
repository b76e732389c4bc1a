#pragma once

#include "mes/composition.hpp"
#include "mes/lincomb.hpp"
#include "mes/rational.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace mes::testing {

// Shuffle product straight from the permutation-set definition: choose the
// positions of the first word among |w1|+|w2| slots.  Independent of the
// recursive implementation; meant for words of length <= 8.
inline LinComb<BinaryWord> shuffle_brute(const BinaryWord& w1, const BinaryWord& w2)
{
    const int n = static_cast<int>(w1.size());
    const int total = n + static_cast<int>(w2.size());
    LinComb<BinaryWord> out;
    std::vector<int> pick(static_cast<std::size_t>(n));
    // enumerate all n-subsets of [0, total)
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (idx == n) {
            BinaryWord w(static_cast<std::size_t>(total), 2);
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] = w1[static_cast<std::size_t>(i)];
            std::size_t j = 0;
            for (auto& letter : w)
                if (letter == 2) letter = w2[j++];
            out.add(w, Rational(1));
            return;
        }
        for (int p = from; p < total; ++p) {
            pick[static_cast<std::size_t>(idx)] = p;
            rec(idx + 1, p + 1);
        }
    };
    if (n == 0) return LinComb<BinaryWord>::unit(w2);
    rec(0, 0);
    return out;
}

// Multiple divisor sum by exhaustive enumeration of (u, v) solutions.
inline Integer sigma_brute(const Composition& c, int n)
{
    const int r = c.depth();
    if (r == 0) return Integer(n == 0 ? 1 : 0);
    Integer total(0);
    std::vector<int> u(static_cast<std::size_t>(r)), v(static_cast<std::size_t>(r));
    std::function<void(int, int, int)> rec = [&](int level, int u_prev, int rest) {
        if (level == r) {
            if (rest == 0) {
                Integer prod(1);
                for (int i = 0; i < r; ++i)
                    prod *= int_pow(Integer(v[static_cast<std::size_t>(i)]),
                                    static_cast<unsigned long>(c.parts[static_cast<std::size_t>(i)] - 1));
                total += prod;
            }
            return;
        }
        for (int uu = u_prev + 1; uu <= rest; ++uu)
            for (int vv = 1; uu * vv <= rest; ++vv) {
                u[static_cast<std::size_t>(level)] = uu;
                v[static_cast<std::size_t>(level)] = vv;
                rec(level + 1, uu, rest - uu * vv);
            }
    };
    rec(0, 0, n);
    return total;
}

// Plain nested summation with a first-order integral tail on the outer
// variable; coarse (1e-4-ish for the indices used) but entirely independent
// of the production evaluator.
inline double zeta_nested(const Composition& c, int cutoff)
{
    const int r = c.depth();
    std::vector<double> prev(static_cast<std::size_t>(cutoff) + 1, 1.0); // cumulative
    for (int j = 0; j < r - 1; ++j) {
        std::vector<double> cum(static_cast<std::size_t>(cutoff) + 1, 0.0);
        for (int m = 1; m <= cutoff; ++m)
            cum[static_cast<std::size_t>(m)] =
                cum[static_cast<std::size_t>(m - 1)] +
                prev[static_cast<std::size_t>(m - 1)] *
                    std::pow(m, -c.parts[static_cast<std::size_t>(j)]);
        prev = std::move(cum);
    }
    double total = 0.0;
    for (int m = 1; m <= cutoff; ++m)
        total += prev[static_cast<std::size_t>(m - 1)] *
                 std::pow(m, -c.parts[static_cast<std::size_t>(r - 1)]);
    // first-order tail: inner sum frozen at the cutoff
    const int s = c.parts[static_cast<std::size_t>(r - 1)];
    total += prev[static_cast<std::size_t>(cutoff)] * std::pow(cutoff + 0.5, 1 - s) / (s - 1);
    return total;
}

} // namespace mes::testing
