#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carter/params.hpp"
#include "carter/partition.hpp"

namespace carter {

/// Number of leading consecutive differences (zero-padded) equal to l - 1.
std::int64_t steinberg_index(const Partition& lambda, std::int64_t l);

/// (l-1) * (n, n-1, ..., 1).
Partition steinberg_partition(std::int64_t n, std::int64_t l);

/// One tagged step of an explanation. Rendered as "tag: detail".
struct TraceStep {
    std::string tag;
    std::string detail;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

std::string render(const TraceStep& step);
std::vector<std::string> render(const std::vector<TraceStep>& trace);

struct InjectivityResult {
    bool injective;
    std::vector<TraceStep> trace;
};

/// Closed-form injectivity test, dispatched on the regime of `params`.
InjectivityResult is_injective(const Partition& lambda, const ModularParams& params);

enum class YoungStatus { Yes, No, Unknown };

const char* to_string(YoungStatus status);
YoungStatus young_status_from_string(const std::string& s);

YoungStatus young_status(const Partition& lambda, const ModularParams& params);

struct WeylPredicates {
    bool weyl_projective;             // Delta(lambda) is projective polynomial
    bool conjugate_weyl_irreducible;  // Delta(lambda') is irreducible
};

WeylPredicates weyl_predicates(const Partition& lambda, const ModularParams& params);

/// Whether Delta(mu) is irreducible, i.e. transpose(mu) is injective.
bool weyl_irreducible(const Partition& mu, const ModularParams& params);

struct ClassificationReport {
    Partition partition;
    ModularParams params;
    bool injective;
    bool weyl_projective;
    bool conjugate_weyl_irreducible;
    YoungStatus young;
    bool l_regular;
    bool carter;
    std::vector<TraceStep> trace;
};

/// Runs the closed-form engine and the Carter engine; throws
/// CriterionDisagreement if they differ.
ClassificationReport classify(const Partition& lambda, const ModularParams& params);

/// Injective partitions of degree r in reverse-lexicographic order.
std::vector<Partition> enumerate_injective(std::int64_t r, const ModularParams& params);

}  // namespace carter
