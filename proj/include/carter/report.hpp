#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "carter/classifier.hpp"

namespace carter {

inline constexpr const char* kSchemaVersion = "1";

/// One line of batch input.
struct BatchRecord {
    std::vector<std::int64_t> partition;
    std::int64_t l = 0;
    std::int64_t p = 0;
    std::optional<std::string> id;

    friend bool operator==(const BatchRecord&, const BatchRecord&) = default;
};

struct ReportDocument {
    std::string schema_version = kSchemaVersion;
    BatchRecord input;
    Partition partition;
    std::int64_t l = 0;
    std::int64_t p = 0;
    bool injective = false;
    bool weyl_projective = false;
    bool conjugate_weyl_irreducible = false;
    YoungStatus young = YoungStatus::Unknown;
    bool l_regular = false;
    bool carter = false;
    std::vector<std::string> trace;
    double timing_ms = 0.0;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

using Json = nlohmann::ordered_json;

/// Throws Json exceptions on shape errors; carter::Error on bad values.
BatchRecord parse_batch_record(const Json& j);
Json to_json(const BatchRecord& r);

ReportDocument make_document(const BatchRecord& input, const ClassificationReport& report, double timing_ms);
Json to_json(const ReportDocument& doc);
ReportDocument document_from_json(const Json& j);

/// Classify one record end to end, timing the classification.
ReportDocument run_record(const BatchRecord& record);

}  // namespace carter
