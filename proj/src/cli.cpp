#include "carter/cli.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "carter/carter.hpp"
#include "carter/classifier.hpp"
#include "carter/errors.hpp"
#include "carter/parallel.hpp"
#include "carter/report.hpp"
#include "carter/specht.hpp"
#include "carter/verify.hpp"

namespace carter {

std::vector<std::int64_t> parse_partition_flag(const std::string& text)
{
    std::vector<std::int64_t> parts;
    if (text.empty())
        return parts;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (token.empty() || used != token.size())
            throw Error(ErrorKind::NotWeaklyDecreasing, "malformed partition '" + text + "'");
        parts.push_back(v);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return parts;
}

namespace {

struct ClassifyOptions {
    std::string partition;
    std::int64_t l = 0;
    std::int64_t p = 0;
    bool explain = false;
    std::string format = "text";
};

struct EnumerateOptions {
    std::int64_t degree = 0;
    std::int64_t l = 0;
    std::int64_t p = 0;
    std::string filter = "injective";
    std::string format = "text";
};

struct VerifyOptions {
    std::int64_t max_degree = 12;
    std::string grid = "default";
    std::int64_t p = 3;
};

struct BatchOptions {
    std::string input;
};

const char* boolean(bool b) { return b ? "true" : "false"; }

// Parse flags before any work so bad input maps to its own exit code.
bool load_partition(const std::string& text, Partition& out, std::ostream& err)
{
    try {
        out = Partition(parse_partition_flag(text));
        return true;
    } catch (const Error& e) {
        err << "invalid partition: " << e.what() << '\n';
        return false;
    }
}

bool load_params(std::int64_t l, std::int64_t p, std::optional<ModularParams>& out, std::ostream& err)
{
    try {
        out.emplace(l, p);
        return true;
    } catch (const Error& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return false;
    }
}

void print_text(const ReportDocument& doc, bool explain, std::ostream& out)
{
    out << "partition: " << to_string(doc.partition) << '\n'
        << "l: " << doc.l << '\n'
        << "p: " << doc.p << '\n'
        << "injective: " << boolean(doc.injective) << '\n'
        << "weyl_projective: " << boolean(doc.weyl_projective) << '\n'
        << "conjugate_weyl_irreducible: " << boolean(doc.conjugate_weyl_irreducible) << '\n'
        << "young: " << to_string(doc.young) << '\n'
        << "l_regular: " << boolean(doc.l_regular) << '\n'
        << "carter: " << boolean(doc.carter) << '\n'
        << "timing_ms: " << std::fixed << std::setprecision(3) << doc.timing_ms << '\n';
    out.unsetf(std::ios::floatfield);
    if (explain) {
        out << "trace:\n";
        for (const auto& line : doc.trace)
            out << "  " << line << '\n';
    }
}

int classify_cmd(const ClassifyOptions& opt, std::ostream& out, std::ostream& err)
{
    Partition lambda;
    if (!load_partition(opt.partition, lambda, err))
        return kExitBadPartition;
    std::optional<ModularParams> params;
    if (!load_params(opt.l, opt.p, params, err))
        return kExitBadParams;

    const BatchRecord record{parse_partition_flag(opt.partition), opt.l, opt.p, std::nullopt};
    auto doc = run_record(record);
    if (opt.format == "json") {
        if (!opt.explain)
            doc.trace.clear();
        out << to_json(doc).dump() << '\n';
    } else {
        print_text(doc, opt.explain, out);
    }
    return kExitOk;
}

int enumerate_cmd(const EnumerateOptions& opt, std::ostream& out, std::ostream& err)
{
    std::optional<ModularParams> params;
    if (!load_params(opt.l, opt.p, params, err))
        return kExitBadParams;
    if (opt.degree < 0) {
        err << "degree must be nonnegative\n";
        return kExitBadPartition;
    }
    if (opt.format == "csv")
        out << "partition,injective,l_regular,carter,young\n";

    PartitionStream stream(opt.degree);
    while (auto lambda = stream.next()) {
        const auto report = classify(*lambda, *params);
        bool keep = true;
        if (opt.filter == "injective")
            keep = report.injective;
        else if (opt.filter == "carter")
            keep = report.carter;
        else if (opt.filter == "young-yes")
            keep = report.young == YoungStatus::Yes;
        if (!keep)
            continue;
        if (opt.format == "json") {
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["partition"] = lambda->parts();
            j["injective"] = report.injective;
            j["l_regular"] = report.l_regular;
            j["carter"] = report.carter;
            j["young"] = to_string(report.young);
            out << j.dump() << '\n';
        } else if (opt.format == "csv") {
            out << '"' << to_string(*lambda) << "\"," << boolean(report.injective) << ','
                << boolean(report.l_regular) << ',' << boolean(report.carter) << ',' << to_string(report.young)
                << '\n';
        } else {
            out << to_string(*lambda) << '\n';
        }
    }
    return kExitOk;
}

std::vector<ModularParams> parse_grid(const std::string& text)
{
    if (text == "default")
        return default_grid();
    std::vector<ModularParams> grid;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::InvalidParams, "grid entries look like l:p, got '" + item + "'");
        try {
            grid.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::InvalidParams, "grid entries look like l:p, got '" + item + "'");
        }
    }
    if (grid.empty())
        throw Error(ErrorKind::InvalidParams, "empty grid");
    return grid;
}

int verify_equivalence_cmd(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    std::vector<ModularParams> grid;
    try {
        grid = parse_grid(opt.grid);
    } catch (const Error& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kExitBadParams;
    }
    const auto report = check_equivalence(opt.max_degree, grid, worker_count());
    out << "equivalence: checked " << report.checked << " (partition, params) pairs up to degree "
        << opt.max_degree << " on " << grid.size() << " grid points\n"
        << "mismatches: " << report.mismatches.size() << '\n';
    if (!report.mismatches.empty()) {
        const auto& m = report.mismatches.front();
        out << "first counterexample: " << to_string(m.partition) << " at " << to_string(m.params)
            << " closed_form=" << boolean(m.closed_form) << " recursive=" << boolean(m.recursive)
            << " regular_carter=" << boolean(m.via_carter) << '\n';
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int verify_oracle_cmd(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    if (opt.p == 2) {
        err << "p=2 unsupported by oracle\n";
        return kExitBadParams;
    }
    if (!is_prime(opt.p)) {
        err << "oracle needs an odd prime, got " << opt.p << '\n';
        return kExitBadParams;
    }
    if (opt.max_degree > kGramDegreeLimit || opt.max_degree < 0) {
        err << "oracle max degree must lie in [0, " << kGramDegreeLimit << "]\n";
        return kExitBadParams;
    }
    const auto report = oracle_crosscheck(opt.max_degree, opt.p, worker_count());
    out << "oracle: p=" << opt.p << ", checked " << report.rows.size() << " " << opt.p
        << "-regular shapes up to degree " << opt.max_degree << '\n';
    std::int64_t irreducible = 0;
    for (const auto& row : report.rows)
        irreducible += row.specht_irreducible;
    out << "irreducible Specht modules: " << irreducible << '\n'
        << "mismatches: " << report.mismatches.size() << '\n';
    if (!report.mismatches.empty()) {
        out << "first counterexample: " << to_string(report.mismatches.front()) << '\n';
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int verify_properties_cmd(const VerifyOptions& opt, std::ostream& out)
{
    const auto results = run_properties(opt.max_degree, worker_count());
    int failures = 0;
    for (const auto& r : results) {
        out << (r.ok() ? "ok   " : "FAIL ") << r.name << " (checked " << r.checked << ", violations "
            << r.violations << ")\n";
        if (!r.ok()) {
            if (failures == 0)
                out << "first counterexample: " << r.first_counterexample << '\n';
            ++failures;
        }
    }
    out << "properties: " << results.size() - static_cast<std::size_t>(failures) << "/" << results.size()
        << " passed\n";
    return failures ? kExitVerificationFailed : kExitOk;
}

Json error_record(std::size_t line, const std::optional<std::string>& id, const std::string& message)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["line"] = line;
    if (id)
        j["id"] = *id;
    j["error"] = message;
    return j;
}

int batch_cmd(const BatchOptions& opt, std::istream& in, std::ostream& out, std::ostream& err)
{
    std::ifstream file;
    std::istream* source = &in;
    if (!opt.input.empty() && opt.input != "-") {
        file.open(opt.input);
        if (!file) {
            err << "cannot open " << opt.input << '\n';
            return kExitBatchPartial;
        }
        source = &file;
    }

    struct Line {
        std::size_t number;
        std::string text;
    };
    std::vector<Line> lines;
    std::string text;
    for (std::size_t n = 1; std::getline(*source, text); ++n) {
        if (text.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        lines.push_back({n, text});
    }

    std::vector<std::string> rendered(lines.size());
    std::vector<char> failed(lines.size(), 0);
    parallel_for(lines.size(), worker_count(), [&](std::size_t i) {
        std::optional<std::string> id;
        try {
            const auto j = Json::parse(lines[i].text);
            if (j.is_object() && j.contains("id") && j.at("id").is_string())
                id = j.at("id").get<std::string>();
            rendered[i] = to_json(run_record(parse_batch_record(j))).dump();
        } catch (const std::exception& e) {
            failed[i] = 1;
            rendered[i] = error_record(lines[i].number, id, e.what()).dump();
        }
    });

    bool any_failed = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out << rendered[i] << '\n';
        any_failed = any_failed || failed[i];
    }
    return any_failed ? kExitBatchPartial : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Injective partitions for quantised general linear groups", "carter-core"};
    app.require_subcommand(1);

    ClassifyOptions copt;
    auto* classify_sc = app.add_subcommand("classify", "Classify one partition");
    classify_sc->add_option("--partition", copt.partition, "Comma-separated parts, e.g. 20,9,6")->required();
    classify_sc->add_option("--l", copt.l, "Order parameter l >= 2")->required();
    classify_sc->add_option("--p", copt.p, "Characteristic (0 or a prime)")->required();
    classify_sc->add_flag("--explain", copt.explain, "Include the decision trace");
    classify_sc->add_option("--format", copt.format)->check(CLI::IsMember({"text", "json"}));

    EnumerateOptions eopt;
    auto* enumerate_sc = app.add_subcommand("enumerate", "List partitions of a degree with predicates");
    enumerate_sc->add_option("--degree", eopt.degree)->required();
    enumerate_sc->add_option("--l", eopt.l)->required();
    enumerate_sc->add_option("--p", eopt.p)->required();
    enumerate_sc->add_option("--filter", eopt.filter)->check(CLI::IsMember({"injective", "carter", "young-yes", "all"}));
    enumerate_sc->add_option("--format", eopt.format)->check(CLI::IsMember({"text", "json", "csv"}));

    VerifyOptions vopt;
    auto* verify_sc = app.add_subcommand("verify", "Run a verification suite");
    verify_sc->require_subcommand(1);
    auto* equivalence_sc = verify_sc->add_subcommand("equivalence", "Closed form vs recursion vs Carter");
    equivalence_sc->add_option("--max-degree", vopt.max_degree)->required();
    equivalence_sc->add_option("--grid", vopt.grid, "default, or a list like 2:0,3:3,4:3");
    auto* oracle_sc = verify_sc->add_subcommand("oracle", "Gram-matrix Specht oracle at l = p");
    oracle_sc->add_option("--max-degree", vopt.max_degree)->required();
    oracle_sc->add_option("--p", vopt.p)->required();
    auto* properties_sc = verify_sc->add_subcommand("properties", "Structural property suites");
    properties_sc->add_option("--max-degree", vopt.max_degree)->required();

    BatchOptions bopt;
    auto* batch_sc = app.add_subcommand("batch", "Classify JSON Lines records from stdin or a file");
    batch_sc->add_option("--input", bopt.input, "Input file (default stdin)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitBadPartition;
    }

    try {
        if (*classify_sc)
            return classify_cmd(copt, out, err);
        if (*enumerate_sc)
            return enumerate_cmd(eopt, out, err);
        if (*equivalence_sc)
            return verify_equivalence_cmd(vopt, out, err);
        if (*oracle_sc)
            return verify_oracle_cmd(vopt, out, err);
        if (*properties_sc)
            return verify_properties_cmd(vopt, out);
        if (*batch_sc)
            return batch_cmd(bopt, in, out, err);
    } catch (const Error& e) {
        err << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidParams ? kExitBadParams : kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace carter
