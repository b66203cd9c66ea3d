#include "carter/abacus.hpp"

#include <algorithm>
#include <functional>

#include "carter/errors.hpp"

namespace carter {

BetaSet::BetaSet(const Partition& shape, std::int64_t bead_count)
{
    if (bead_count < shape.length())
        throw Error(ErrorKind::DomainError, "bead count smaller than partition length");
    beads_.reserve(static_cast<std::size_t>(bead_count));
    for (std::int64_t i = 1; i <= bead_count; ++i)
        beads_.push_back(shape[i] + bead_count - i);
}

bool BetaSet::occupied(std::int64_t position) const
{
    return std::binary_search(beads_.begin(), beads_.end(), position, std::greater<>());
}

void BetaSet::move(std::int64_t from, std::int64_t to)
{
    if (to < 0 || occupied(to))
        throw Error(ErrorKind::DomainError, "bead target occupied or negative");
    auto it = std::find(beads_.begin(), beads_.end(), from);
    if (it == beads_.end())
        throw Error(ErrorKind::DomainError, "no bead at source position");
    *it = to;
    std::sort(beads_.begin(), beads_.end(), std::greater<>());
}

Partition BetaSet::decode() const
{
    const auto n = bead_count();
    std::vector<std::int64_t> parts(beads_.size());
    for (std::int64_t i = 1; i <= n; ++i)
        parts[static_cast<std::size_t>(i - 1)] = beads_[static_cast<std::size_t>(i - 1)] - (n - i);
    return Partition(parts);
}

CoreResult l_core(const Partition& lambda, std::int64_t l, RemovalOrder order)
{
    require_modulus(l);
    BetaSet beta(lambda, lambda.length() + 1);
    CoreResult result;

    for (;;) {
        const auto& beads = beta.beads();
        std::int64_t pick = -1;
        std::int64_t pick_row = 0;
        for (std::size_t k = 0; k < beads.size(); ++k) {
            const auto b = beads[k];
            if (b >= l && !beta.occupied(b - l)) {
                pick = b;
                pick_row = static_cast<std::int64_t>(k) + 1;
                if (order == RemovalOrder::LargestBeadFirst)
                    break;
            }
        }
        if (pick < 0)
            break;
        // Beads strictly between the two positions are the rows the rim hook crosses.
        std::int64_t crossed = 0;
        for (auto b : beads)
            if (b < pick && b > pick - l)
                ++crossed;
        result.removals.push_back({pick, pick - l, pick_row, pick_row + crossed});
        beta.move(pick, pick - l);
    }
    result.core = beta.decode();
    result.weight = static_cast<std::int64_t>(result.removals.size());
    return result;
}

bool is_l_core(const Partition& lambda, std::int64_t l)
{
    require_modulus(l);
    const HookTable table(lambda);
    const auto& hooks = table.values();
    return std::none_of(hooks.begin(), hooks.end(), [l](std::int64_t h) { return h % l == 0; });
}

bool same_block(const Partition& lambda, const Partition& mu, std::int64_t l)
{
    require_modulus(l);
    if (lambda.degree() != mu.degree())
        throw Error(ErrorKind::DegreeMismatch, "same_block needs partitions of equal degree");
    return l_core(lambda, l).core == l_core(mu, l).core;
}

}  // namespace carter
