#include "carter/adic.hpp"

#include "carter/errors.hpp"

namespace carter {

AdicDecomposition l_adic_split(const Partition& lambda, std::int64_t l)
{
    require_modulus(l);
    const auto n = lambda.length();
    std::vector<std::int64_t> low(static_cast<std::size_t>(n));
    std::vector<std::int64_t> high(static_cast<std::size_t>(n));
    // Built from the bottom row up: differences of the restricted part are
    // the differences of lambda reduced mod l.
    std::int64_t below = 0;
    for (std::int64_t i = n; i >= 1; --i) {
        const auto idx = static_cast<std::size_t>(i - 1);
        low[idx] = below + (lambda[i] - lambda[i + 1]) % l;
        high[idx] = (lambda[i] - low[idx]) / l;
        below = low[idx];
    }
    AdicDecomposition d{l, Partition(low), Partition(high)};
    if (!is_l_restricted(d.restricted, l) || recompose(d) != lambda)
        throw Error(ErrorKind::DomainError, "standard form reconstruction failed for " + to_string(lambda));
    return d;
}

PAdicExpansion p_adic_expansion(const Partition& lambda, std::int64_t p)
{
    require_modulus(p);
    PAdicExpansion e{p, {}};
    Partition rest = lambda;
    while (!rest.is_zero()) {
        auto d = l_adic_split(rest, p);
        e.layers.push_back(std::move(d.restricted));
        rest = std::move(d.quotient);
    }
    return e;
}

Partition recompose(const AdicDecomposition& d)
{
    return add_scaled(d.restricted, d.quotient, d.modulus);
}

Partition recompose(const PAdicExpansion& e)
{
    Partition total;
    std::int64_t scale = 1;
    for (const auto& layer : e.layers) {
        total = add_scaled(total, layer, scale);
        scale *= e.prime;
    }
    return total;
}

}  // namespace carter
