#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carter/params.hpp"
#include "carter/partition.hpp"

namespace carter {

/// Injectivity by direct recursion on the standard form: restricted part an
/// l-core, quotient injective (for q = 1 in characteristic p), and
/// len(quotient) <= stind_l(restricted) + 1. Shares no code path with the
/// flattened per-regime conditions in is_injective.
bool injective_recursive(const Partition& lambda, const ModularParams& params);

/// The (l,p) pairs used for cross-engine checks.
std::vector<ModularParams> default_grid();

struct EquivalenceMismatch {
    Partition partition;
    ModularParams params;
    bool closed_form;
    bool recursive;
    bool via_carter;
};

struct EquivalenceReport {
    std::int64_t max_degree = 0;
    std::int64_t checked = 0;
    std::vector<EquivalenceMismatch> mismatches;
};

/// Closed form vs recursive vs l-regular Carter for every partition of degree
/// <= max_degree at every grid point.
EquivalenceReport check_equivalence(std::int64_t max_degree, const std::vector<ModularParams>& grid,
                                    unsigned threads = 1);

struct PropertyResult {
    std::string name;
    std::int64_t checked = 0;
    std::int64_t violations = 0;
    std::string first_counterexample;

    bool ok() const { return violations == 0; }
};

PropertyResult check_closure_under_column_removal(std::int64_t max_degree);
PropertyResult check_steinberg_family(std::int64_t max_n, std::int64_t max_mu_degree);
PropertyResult check_core_with_last_part_l_minus_1(std::int64_t max_n);
PropertyResult check_steinberg_index_consistency(std::int64_t max_n);
PropertyResult check_core_characterizations(std::int64_t max_degree);
PropertyResult check_core_confluence(std::int64_t max_degree);
PropertyResult check_adic_reconstruction(std::int64_t max_degree);
PropertyResult check_adic_uniqueness(std::int64_t max_degree);
PropertyResult check_split_inheritance(std::int64_t max_degree);

/// Everything above; degree-bounded checks use min(max_degree, their own cap).
std::vector<PropertyResult> run_properties(std::int64_t max_degree, unsigned threads = 1);

}  // namespace carter
