#include <doctest.h>

#include <sstream>

#include "carter/cli.hpp"
#include "carter/report.hpp"

using namespace carter;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("partition flag parsing")
{
    CHECK(parse_partition_flag("20,9,6") == std::vector<std::int64_t>{20, 9, 6});
    CHECK(parse_partition_flag("").empty());
    CHECK_THROWS(parse_partition_flag("3,,1"));
    CHECK_THROWS(parse_partition_flag("3,a"));
    CHECK_THROWS(parse_partition_flag("[3,1]"));
}

TEST_CASE("classify command")
{
    const auto a = run({"classify", "--partition", "20,9,6", "--l", "4", "--p", "3"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("injective: true") != std::string::npos);
    CHECK(a.out.find("young: yes") != std::string::npos);
    CHECK(a.out.find("trace:") == std::string::npos);

    const auto b = run({"classify", "--partition", "17,6,4", "--l", "4", "--p", "3", "--format", "json"});
    CHECK(b.code == kExitOk);
    const auto j = Json::parse(b.out);
    CHECK(j.at("injective") == false);
    CHECK(j.at("young") == "no");
    CHECK(j.at("schema_version") == "1");

    const auto c = run({"classify", "--partition", "3,1,1", "--l", "2", "--p", "2", "--explain"});
    CHECK(c.out.find("young: unknown") != std::string::npos);
    CHECK(c.out.find("core: layer[0] (1,1,1) is a 2-core: no") != std::string::npos);

    CHECK(run({"classify", "--partition", "2,5", "--l", "3", "--p", "0"}).code == kExitBadPartition);
    CHECK(run({"classify", "--partition", "x", "--l", "3", "--p", "0"}).code == kExitBadPartition);
    CHECK(run({"classify", "--partition", "2,1", "--l", "4", "--p", "2"}).code == kExitBadParams);
    CHECK(run({"classify", "--partition", "2,1", "--l", "1", "--p", "0"}).code == kExitBadParams);
    CHECK(run({"classify", "--partition", "2,1", "--l", "3", "--p", "4"}).code == kExitBadParams);
}

TEST_CASE("enumerate command")
{
    const auto a = run({"enumerate", "--degree", "4", "--l", "2", "--p", "2", "--filter", "injective"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == "(4)\n");

    const auto b = run({"enumerate", "--degree", "0", "--l", "3", "--p", "0"});
    CHECK(b.out == "()\n");

    const auto c = run({"enumerate", "--degree", "6", "--l", "3", "--p", "3", "--filter", "all"});
    CHECK(lines_of(c.out).size() == 11);

    const auto d = run({"enumerate", "--degree", "6", "--l", "3", "--p", "3", "--filter", "all", "--format", "csv"});
    CHECK(lines_of(d.out).size() == 12);
    CHECK(lines_of(d.out)[0] == "partition,injective,l_regular,carter,young");

    const auto e = run({"enumerate", "--degree", "4", "--l", "4", "--p", "3", "--format", "json"});
    const auto rows = lines_of(e.out);
    REQUIRE(rows.size() == 2);
    CHECK(Json::parse(rows[1]).at("partition") == Json::array({2, 2}));

    CHECK(run({"enumerate", "--degree", "4", "--l", "6", "--p", "3"}).code == kExitBadParams);
}

TEST_CASE("verify commands")
{
    const auto a = run({"verify", "equivalence", "--max-degree", "8"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("mismatches: 0") != std::string::npos);

    CHECK(run({"verify", "equivalence", "--max-degree", "6", "--grid", "2:0,3:3,4:3"}).code == kExitOk);
    CHECK(run({"verify", "equivalence", "--max-degree", "6", "--grid", "4:2"}).code == kExitBadParams);
    CHECK(run({"verify", "equivalence", "--max-degree", "6", "--grid", "nonsense"}).code == kExitBadParams);

    const auto b = run({"verify", "oracle", "--max-degree", "5", "--p", "3"});
    CHECK(b.code == kExitOk);
    CHECK(b.out.find("mismatches: 0") != std::string::npos);

    const auto c = run({"verify", "oracle", "--max-degree", "8", "--p", "2"});
    CHECK(c.code == kExitBadParams);
    CHECK(c.err.find("p=2 unsupported by oracle") != std::string::npos);

    const auto d = run({"verify", "properties", "--max-degree", "8"});
    CHECK(d.code == kExitOk);
    CHECK(d.out.find("FAIL") == std::string::npos);
}

TEST_CASE("batch command")
{
    const auto a = run({"batch"}, "{\"partition\":[20,9,6],\"l\":4,\"p\":3}\n");
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("\"injective\":true") != std::string::npos);

    const std::string mixed = "{\"partition\":[2,5],\"l\":3,\"p\":0}\n"
                              "\n"
                              "not json\n"
                              "{\"partition\":[3,1],\"l\":4,\"p\":2,\"id\":\"bad-params\"}\n"
                              "{\"partition\":[3,1],\"l\":3,\"p\":0,\"id\":\"ok\"}\n";
    const auto b = run({"batch"}, mixed);
    CHECK(b.code == kExitBatchPartial);
    const auto out = lines_of(b.out);
    REQUIRE(out.size() == 4);
    const auto e0 = Json::parse(out[0]);
    CHECK(e0.at("line") == 1);
    CHECK(e0.at("error").get<std::string>().find("not weakly decreasing") != std::string::npos);
    CHECK(Json::parse(out[1]).at("line") == 3);
    CHECK(Json::parse(out[2]).at("id") == "bad-params");
    CHECK(Json::parse(out[3]).at("input").at("id") == "ok");
    CHECK(Json::parse(out[3]).contains("injective"));

    const auto c = run({"batch"}, "");
    CHECK(c.code == kExitOk);
    CHECK(c.out.empty());

    CHECK(run({"batch", "--input", "/nonexistent/file.jsonl"}).code == kExitBatchPartial);
}

TEST_CASE("report documents round-trip")
{
    for (const auto& params : {ModularParams(4, 3), ModularParams(2, 2), ModularParams(3, 0)}) {
        for (std::int64_t r = 0; r <= 8; ++r) {
            for (const auto& p : enumerate_partitions(r)) {
                const BatchRecord rec{p.parts(), params.l(), params.p(), r % 2 ? std::optional<std::string>("x") : std::nullopt};
                const auto doc = run_record(rec);
                const auto text = to_json(doc).dump();
                REQUIRE(document_from_json(Json::parse(text)) == doc);
                REQUIRE(to_json(document_from_json(Json::parse(text))).dump() == text);
            }
        }
    }
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == kExitBadPartition);
    CHECK(run({"classify", "--l", "3", "--p", "0"}).code == kExitBadPartition);
    CHECK(run({"--help"}).code == kExitOk);
}
