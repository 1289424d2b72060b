#pragma once

// Machine-readable query records emitted by the CLI, their JSON form, and a
// small structural validator for the schema shipped in schema/. One record
// shape covers every subcommand; serialization round-trips losslessly.

#include "sl3coh/classifier.hpp"
#include "sl3coh/pipeline.hpp"
#include "sl3coh/weight.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sl3coh {

struct LinkageQuery {
    bool g_linked = false;
    std::optional<bool> g1_linked; // only for restricted inputs

    friend bool operator==(const LinkageQuery&, const LinkageQuery&) = default;
};

struct Ext1Query {
    Weight row{0, 0};
    int dim = 0;
    std::vector<std::string> families;

    friend bool operator==(const Ext1Query&, const Ext1Query&) = default;
};

struct QueryRecord {
    long long p = 0;
    Weight weight{0, 0};
    int twist = 0;
    std::vector<Weight> factors;
    std::string route; // pipeline | theorem | both | linkage | ext1
    std::optional<PipelineResult> pipeline;
    std::optional<ClassifyResult> theorem;
    std::optional<bool> agree;
    std::optional<LinkageQuery> linkage;
    std::optional<Ext1Query> ext1;

    friend bool operator==(const QueryRecord&, const QueryRecord&);
};

bool operator==(const Trace&, const Trace&);
bool operator==(const PipelineResult&, const PipelineResult&);

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const TraceStep& s);
nlohmann::json to_json(const PipelineResult& r);
nlohmann::json to_json(const TheoremMatch& m);
nlohmann::json to_json(const ClassifyResult& r);
nlohmann::json to_json(const QueryRecord& r);

QueryRecord query_record_from_json(const nlohmann::json& j);

// Structural validation against the subset of JSON Schema used by
// schema/query_record.json: type, properties, required, items, enum,
// additionalProperties. Returns human-readable violations, empty when valid.
std::vector<std::string> schema_validate(const nlohmann::json& schema,
                                         const nlohmann::json& value);

std::string default_schema_path();

} // namespace sl3coh
