#pragma once

#include <cstdint>
#include <vector>

#include "carter/partition.hpp"

namespace carter {

/// First-column hook lengths of a partition padded to a fixed number of beads:
/// bead i (1-based) sits at shape[i] + n - i.
class BetaSet {
public:
    BetaSet(const Partition& shape, std::int64_t bead_count);

    const std::vector<std::int64_t>& beads() const noexcept { return beads_; }
    std::int64_t bead_count() const noexcept { return static_cast<std::int64_t>(beads_.size()); }
    bool occupied(std::int64_t position) const;

    /// Slide the bead at `from` to the empty position `to` and re-sort.
    void move(std::int64_t from, std::int64_t to);

    Partition decode() const;

private:
    std::vector<std::int64_t> beads_;  // strictly decreasing
};

/// One skew-hook removal, recorded as a bead move. The removed rim hook
/// spans rows `top_row`..`bottom_row` of the partition at that step.
struct HookRemoval {
    std::int64_t from;
    std::int64_t to;
    std::int64_t top_row;
    std::int64_t bottom_row;
};

struct CoreResult {
    Partition core;
    std::vector<HookRemoval> removals;
    std::int64_t weight = 0;
};

enum class RemovalOrder { LargestBeadFirst, SmallestBeadFirst };

CoreResult l_core(const Partition& lambda, std::int64_t l,
                  RemovalOrder order = RemovalOrder::LargestBeadFirst);

/// No hook length divisible by l.
bool is_l_core(const Partition& lambda, std::int64_t l);

bool same_block(const Partition& lambda, const Partition& mu, std::int64_t l);

}  // namespace carter
