#include "carter/carter.hpp"

#include <algorithm>

#include "carter/errors.hpp"

namespace carter {

std::int64_t nu_lp(std::int64_t r, const ModularParams& params)
{
    if (r < 1)
        throw Error(ErrorKind::DomainError, "valuation needs a positive integer, got " + std::to_string(r));
    if (r % params.l() != 0)
        return 0;
    if (params.p() == 0)
        return 1;
    std::int64_t v = 1;
    for (std::int64_t m = r / params.l(); m % params.p() == 0; m /= params.p())
        ++v;
    return v;
}

CarterResult is_carter(const Partition& lambda, const ModularParams& params)
{
    const HookTable hooks(lambda);
    const Partition conj = transpose(lambda);
    CarterResult result{true, {lambda, params, {}, std::nullopt}};
    auto& profile = result.profile;
    profile.per_column.resize(static_cast<std::size_t>(lambda[1]));
    for (std::int64_t b = 1; b <= lambda[1]; ++b) {
        auto& column = profile.per_column[static_cast<std::size_t>(b - 1)];
        for (std::int64_t a = 1; a <= conj[b]; ++a)
            column.push_back(nu_lp(hooks.at(a, b), params));
        const bool constant = std::adjacent_find(column.begin(), column.end(), std::not_equal_to<>()) == column.end();
        if (!constant && !profile.first_violation)
            profile.first_violation = b;
    }
    result.carter = !profile.first_violation.has_value();
    return result;
}

bool is_injective_via_carter(const Partition& lambda, const ModularParams& params)
{
    return is_l_regular(lambda, params.l()) && is_carter(lambda, params).carter;
}

}  // namespace carter
