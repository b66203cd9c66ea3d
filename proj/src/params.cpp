#include "carter/params.hpp"

#include "carter/errors.hpp"

namespace carter {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

ModularParams::ModularParams(std::int64_t l, std::int64_t p)
    : l_(l)
    , p_(p)
{
    if (l < 2)
        throw Error(ErrorKind::InvalidParams, "l must be at least 2, got " + std::to_string(l));
    if (p != 0 && !is_prime(p))
        throw Error(ErrorKind::InvalidParams, "p must be 0 or a prime, got " + std::to_string(p));
    if (p > 0 && l != p && l % p == 0)
        throw Error(ErrorKind::InvalidParams,
                    "p divides l with l != p: no root of unity in characteristic "
                        + std::to_string(p) + " has order " + std::to_string(l));
}

Regime ModularParams::regime() const noexcept
{
    if (p_ == 0)
        return Regime::CharacteristicZero;
    return p_ == l_ ? Regime::Classical : Regime::Mixed;
}

std::string to_string(const ModularParams& params)
{
    return "(l=" + std::to_string(params.l()) + ", p=" + std::to_string(params.p()) + ")";
}

const char* to_string(Regime regime)
{
    switch (regime) {
    case Regime::CharacteristicZero: return "char0";
    case Regime::Classical: return "classical";
    case Regime::Mixed: return "mixed";
    }
    return "unknown";
}

}  // namespace carter
