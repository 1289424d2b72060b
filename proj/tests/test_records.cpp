#include "sl3coh/record.hpp"

#include "sl3coh/enumerate.hpp"

#include <doctest.h>

#include <fstream>

using namespace sl3coh;
using nlohmann::json;

namespace {

const TableSet& tables()
{
    static const TableSet t = TableSet::load_default();
    return t;
}

json schema()
{
    std::ifstream in(default_schema_path());
    REQUIRE(in);
    json s;
    in >> s;
    return s;
}

QueryRecord h2_record(long long p, const Weight& w)
{
    const Pipeline pipe(tables());
    const Classifier cls(tables());
    const Decomposition dec = steinberg_decompose(p, w);
    QueryRecord r;
    r.p = p;
    r.weight = w;
    r.twist = dec.twist();
    r.factors = dec.factors();
    r.route = "both";
    r.pipeline = pipe.h2_dim(dec);
    r.theorem = cls.classify(dec);
    r.agree = r.pipeline->total == r.theorem->dim;
    return r;
}

} // namespace

TEST_CASE("records round-trip and validate")
{
    const json s = schema();
    for (const Weight& w : {Weight{5, 5}, Weight{78, 78}, Weight{13, 16}, Weight{0, 0}}) {
        const QueryRecord r = h2_record(5, w);
        const json j = to_json(r);
        CHECK(schema_validate(s, j).empty());
        CHECK(query_record_from_json(j) == r);
        CHECK(json::parse(j.dump()).dump() == j.dump());
    }

    QueryRecord link;
    link.p = 5;
    link.weight = {3, 3};
    link.twist = 0;
    link.factors = {{3, 3}};
    link.route = "linkage";
    link.linkage = LinkageQuery{true, true};
    const json lj = to_json(link);
    CHECK(schema_validate(s, lj).empty());
    CHECK(query_record_from_json(lj) == link);

    QueryRecord ext;
    ext.p = 5;
    ext.weight = {3, 2};
    ext.twist = 0;
    ext.factors = {{3, 2}};
    ext.route = "ext1";
    ext.ext1 = Ext1Query{{1, 0}, 1, {"ext1:p>3;(1,0);(p-2,p-3)"}};
    const json ej = to_json(ext);
    CHECK(schema_validate(s, ej).empty());
    CHECK(query_record_from_json(ej) == ext);
}

TEST_CASE("schema rejects malformed records")
{
    const json s = schema();
    json j = to_json(h2_record(5, {5, 5}));
    j["route"] = "sideways";
    CHECK_FALSE(schema_validate(s, j).empty());
    j = to_json(h2_record(5, {5, 5}));
    j.erase("weight");
    CHECK_FALSE(schema_validate(s, j).empty());
    j = to_json(h2_record(5, {5, 5}));
    j["extra"] = 1;
    CHECK_FALSE(schema_validate(s, j).empty());
    j = to_json(h2_record(5, {5, 5}));
    j["pipeline"]["total"] = "one";
    CHECK_FALSE(schema_validate(s, j).empty());
}

TEST_CASE("compact match tokens")
{
    CHECK(compact_token({9, 2, 0, false, false}) == "9r2");
    CHECK(compact_token({2, -1, 0, true, true}) == "2dc");
    CHECK(compact_token({6, 1, 3, true, false}) == "6dr1");
    CHECK(compact_tokens({{9, 2, 0, false, false}, {2, -1, 0, true, true}}) == "9r2|2dc");
}

TEST_CASE("p=5 table census")
{
    // 21 = the family instantiations that fit in the 125x125 box: two twists
    // of (1,1)^[1], four weights each from families 2 and 3, two each from
    // 4, 5, 6 and 10, and three from family 9.
    const auto rows = compute_table(tables(), 5, 125);
    long long pipeline_ones = 0, theorem_ones = 0, disagreements = 0;
    for (const TableRow& r : rows) {
        pipeline_ones += r.pipeline_dim;
        theorem_ones += r.theorem_dim;
        disagreements += r.agree ? 0 : 1;
    }
    CHECK(rows.size() == 15625);
    CHECK(pipeline_ones == 21);
    CHECK(theorem_ones == 21);
    CHECK(disagreements == 0);
}

TEST_CASE("crosscheck is clean for p >= 5")
{
    const nlohmann::json report = crosscheck_report(tables(), {5, 7}, 2, 3, 1);
    for (const auto& prime_report : report["primes"])
        CHECK(prime_report["discrepancies"].empty());
}
