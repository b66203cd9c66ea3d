#pragma once

#include <cstdint>
#include <string>

namespace carter {

enum class Regime {
    CharacteristicZero,  // p = 0, q a primitive l-th root of unity
    Classical,           // p = l, q = 1
    Mixed,               // p > 0, l prime to p
};

/// Validated (l, p): l is the least integer with 1 + q + ... + q^(l-1) = 0,
/// p is the field characteristic (0 or a prime).
class ModularParams {
public:
    /// Throws InvalidParams unless l >= 2, p is 0 or prime, and either
    /// p = 0, p = l, or p does not divide l.
    ModularParams(std::int64_t l, std::int64_t p);

    std::int64_t l() const noexcept { return l_; }
    std::int64_t p() const noexcept { return p_; }
    Regime regime() const noexcept;

    friend bool operator==(const ModularParams&, const ModularParams&) = default;

private:
    std::int64_t l_;
    std::int64_t p_;
};

bool is_prime(std::int64_t n);
std::string to_string(const ModularParams& params);
const char* to_string(Regime regime);

}  // namespace carter
