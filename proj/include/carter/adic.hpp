#pragma once

#include <cstdint>
#include <vector>

#include "carter/partition.hpp"

namespace carter {

/// lambda = restricted + modulus * quotient, with `restricted` modulus-restricted.
struct AdicDecomposition {
    std::int64_t modulus;
    Partition restricted;
    Partition quotient;
};

/// lambda = sum_i prime^i * layers[i], every layer prime-restricted.
/// Trailing zero layers are trimmed; interior zero layers are kept.
struct PAdicExpansion {
    std::int64_t prime;
    std::vector<Partition> layers;
};

AdicDecomposition l_adic_split(const Partition& lambda, std::int64_t l);
PAdicExpansion p_adic_expansion(const Partition& lambda, std::int64_t p);

Partition recompose(const AdicDecomposition& d);
Partition recompose(const PAdicExpansion& e);

}  // namespace carter
