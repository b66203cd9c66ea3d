#include "carter/report.hpp"

#include <chrono>

#include "carter/errors.hpp"

namespace carter {

namespace {

std::int64_t require_integer(const Json& j, const char* key)
{
    if (!j.contains(key))
        throw Error(ErrorKind::DomainError, std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw Error(ErrorKind::DomainError, std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

}  // namespace

BatchRecord parse_batch_record(const Json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::DomainError, "record must be a JSON object");
    BatchRecord r;
    if (!j.contains("partition") || !j.at("partition").is_array())
        throw Error(ErrorKind::DomainError, "field 'partition' must be an array of integers");
    for (const auto& v : j.at("partition")) {
        if (!v.is_number_integer())
            throw Error(ErrorKind::DomainError, "field 'partition' must be an array of integers");
        r.partition.push_back(v.get<std::int64_t>());
    }
    r.l = require_integer(j, "l");
    r.p = require_integer(j, "p");
    if (j.contains("id")) {
        if (!j.at("id").is_string())
            throw Error(ErrorKind::DomainError, "field 'id' must be a string");
        r.id = j.at("id").get<std::string>();
    }
    return r;
}

Json to_json(const BatchRecord& r)
{
    Json j;
    j["partition"] = r.partition;
    j["l"] = r.l;
    j["p"] = r.p;
    if (r.id)
        j["id"] = *r.id;
    return j;
}

ReportDocument make_document(const BatchRecord& input, const ClassificationReport& report, double timing_ms)
{
    ReportDocument doc;
    doc.input = input;
    doc.partition = report.partition;
    doc.l = report.params.l();
    doc.p = report.params.p();
    doc.injective = report.injective;
    doc.weyl_projective = report.weyl_projective;
    doc.conjugate_weyl_irreducible = report.conjugate_weyl_irreducible;
    doc.young = report.young;
    doc.l_regular = report.l_regular;
    doc.carter = report.carter;
    doc.trace = render(report.trace);
    doc.timing_ms = timing_ms;
    return doc;
}

Json to_json(const ReportDocument& doc)
{
    Json j;
    j["schema_version"] = doc.schema_version;
    j["input"] = to_json(doc.input);
    j["partition"] = doc.partition.parts();
    j["l"] = doc.l;
    j["p"] = doc.p;
    j["injective"] = doc.injective;
    j["weyl_projective"] = doc.weyl_projective;
    j["conjugate_weyl_irreducible"] = doc.conjugate_weyl_irreducible;
    j["young"] = to_string(doc.young);
    j["l_regular"] = doc.l_regular;
    j["carter"] = doc.carter;
    j["trace"] = doc.trace;
    j["timing_ms"] = doc.timing_ms;
    return j;
}

ReportDocument document_from_json(const Json& j)
{
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.input = parse_batch_record(j.at("input"));
    doc.partition = Partition(j.at("partition").get<std::vector<std::int64_t>>());
    doc.l = j.at("l").get<std::int64_t>();
    doc.p = j.at("p").get<std::int64_t>();
    doc.injective = j.at("injective").get<bool>();
    doc.weyl_projective = j.at("weyl_projective").get<bool>();
    doc.conjugate_weyl_irreducible = j.at("conjugate_weyl_irreducible").get<bool>();
    doc.young = young_status_from_string(j.at("young").get<std::string>());
    doc.l_regular = j.at("l_regular").get<bool>();
    doc.carter = j.at("carter").get<bool>();
    doc.trace = j.at("trace").get<std::vector<std::string>>();
    doc.timing_ms = j.at("timing_ms").get<double>();
    return doc;
}

ReportDocument run_record(const BatchRecord& record)
{
    const Partition lambda(record.partition);
    const ModularParams params(record.l, record.p);
    const auto start = std::chrono::steady_clock::now();
    const auto report = classify(lambda, params);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    return make_document(record, report, elapsed.count());
}

}  // namespace carter
