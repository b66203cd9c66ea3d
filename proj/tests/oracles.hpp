#pragma once

// Test-only reference computations. Deliberately naive and independent of
// the library code paths they are used to check.

#include <cstdint>
#include <map>
#include <vector>

#include "carter/partition.hpp"

namespace oracle {

using Parts = std::vector<std::int64_t>;

inline bool in_diagram(const Parts& p, std::int64_t a, std::int64_t b)
{
    return a >= 1 && b >= 1 && a <= static_cast<std::int64_t>(p.size()) && b <= p[static_cast<std::size_t>(a - 1)];
}

/// Arm + leg + 1 by walking right and down from the cell.
inline std::int64_t hook_by_walking(const Parts& p, std::int64_t a, std::int64_t b)
{
    std::int64_t h = 1;
    for (auto c = b + 1; in_diagram(p, a, c); ++c)
        ++h;
    for (auto r = a + 1; in_diagram(p, r, b); ++r)
        ++h;
    return h;
}

/// Number of partitions of n into parts of size <= k.
inline std::int64_t partition_count(std::int64_t n, std::int64_t k)
{
    std::vector<std::vector<std::int64_t>> t(static_cast<std::size_t>(n + 1),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(k + 1), 0));
    for (std::int64_t j = 0; j <= k; ++j)
        t[0][static_cast<std::size_t>(j)] = 1;
    for (std::int64_t m = 1; m <= n; ++m)
        for (std::int64_t j = 1; j <= k; ++j)
            t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
                t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)]
                + (m >= j ? t[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(j)] : 0);
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Standard tableaux counted by removing the cell holding the largest entry.
inline std::int64_t tableau_count_by_corners(const Parts& p, std::map<Parts, std::int64_t>& memo)
{
    if (p.empty())
        return 1;
    if (auto it = memo.find(p); it != memo.end())
        return it->second;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool corner = i + 1 == p.size() || p[i + 1] < p[i];
        if (!corner)
            continue;
        Parts q = p;
        if (--q[i] == 0)
            q.pop_back();
        total += tableau_count_by_corners(q, memo);
    }
    return memo[p] = total;
}

/// All partitions of n with parts <= cap, recursively, largest first part first.
inline void all_partitions(std::int64_t n, std::int64_t cap, Parts& prefix, std::vector<Parts>& out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (auto first = std::min(n, cap); first >= 1; --first) {
        prefix.push_back(first);
        all_partitions(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

inline std::int64_t p_adic_valuation(std::int64_t r, std::int64_t p)
{
    std::int64_t v = 0;
    while (r % p == 0) {
        r /= p;
        ++v;
    }
    return v;
}

}  // namespace oracle
