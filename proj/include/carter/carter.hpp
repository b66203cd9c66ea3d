#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "carter/params.hpp"
#include "carter/partition.hpp"

namespace carter {

/// The (l,p)-adic valuation: 0 if l does not divide r, else 1 + nu_p(r/l).
/// At p = 0 it is the divisibility indicator.
std::int64_t nu_lp(std::int64_t r, const ModularParams& params);

struct ColumnValuationProfile {
    Partition shape;
    ModularParams params;
    /// per_column[b-1][a-1] = nu_lp(h(a,b)).
    std::vector<std::vector<std::int64_t>> per_column;
    std::optional<std::int64_t> first_violation;  // 1-based column
};

struct CarterResult {
    bool carter;
    ColumnValuationProfile profile;
};

/// Column-constancy of hook valuations. Regularity is not checked here.
CarterResult is_carter(const Partition& lambda, const ModularParams& params);

/// l-regular and Carter.
bool is_injective_via_carter(const Partition& lambda, const ModularParams& params);

}  // namespace carter
