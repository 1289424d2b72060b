#include "sl3coh/record.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sl3coh {

using nlohmann::json;

bool operator==(const Trace& lhs, const Trace& rhs)
{
    return lhs.steps == rhs.steps && lhs.warnings == rhs.warnings;
}

bool operator==(const PipelineResult& lhs, const PipelineResult& rhs)
{
    return lhs.total == rhs.total && lhs.e2_02 == rhs.e2_02 && lhs.e2_11 == rhs.e2_11 &&
           lhs.e2_20 == rhs.e2_20 && lhs.trace == rhs.trace;
}

bool operator==(const QueryRecord& lhs, const QueryRecord& rhs)
{
    return lhs.p == rhs.p && lhs.weight == rhs.weight && lhs.twist == rhs.twist &&
           lhs.factors == rhs.factors && lhs.route == rhs.route &&
           lhs.pipeline == rhs.pipeline &&
           (lhs.theorem.has_value() == rhs.theorem.has_value() &&
            (!lhs.theorem || (lhs.theorem->dim == rhs.theorem->dim &&
                              lhs.theorem->matches == rhs.theorem->matches))) &&
           lhs.agree == rhs.agree && lhs.linkage == rhs.linkage && lhs.ext1 == rhs.ext1;
}

json to_json(const Weight& w)
{
    return json{{"a", w.a}, {"b", w.b}};
}

namespace {

Weight weight_from_json(const json& j)
{
    return {j.at("a").get<long long>(), j.at("b").get<long long>()};
}

E2Term term_from_string(const std::string& s)
{
    if (s == "E2_02")
        return E2Term::e02;
    if (s == "E2_11")
        return E2Term::e11;
    if (s == "E2_20")
        return E2Term::e20;
    if (s == "base")
        return E2Term::base;
    throw std::invalid_argument("unknown E2 term: " + s);
}

} // namespace

json to_json(const TraceStep& s)
{
    return json{{"depth", s.depth},
                {"term", to_string(s.term)},
                {"lambda0", to_json(s.lambda0)},
                {"remainder", to_json(s.remainder)},
                {"g1_row", s.g1_row},
                {"summand", to_json(s.summand)},
                {"family", s.family},
                {"contribution", s.contribution}};
}

json to_json(const PipelineResult& r)
{
    json steps = json::array();
    for (const TraceStep& s : r.trace.steps)
        steps.push_back(to_json(s));
    return json{{"total", r.total},
                {"e2_02", r.e2_02},
                {"e2_11", r.e2_11},
                {"e2_20", r.e2_20},
                {"trace", json{{"steps", steps}, {"warnings", r.trace.warnings}}}};
}

json to_json(const TheoremMatch& m)
{
    return json{{"id", m.id},
                {"r", m.r < 0 ? json(nullptr) : json(m.r)},
                {"d", m.d},
                {"dual", m.dual},
                {"collapsed", m.collapsed}};
}

json to_json(const ClassifyResult& r)
{
    json matches = json::array();
    for (const TheoremMatch& m : r.matches)
        matches.push_back(to_json(m));
    return json{{"dim", r.dim}, {"matches", matches}};
}

json to_json(const QueryRecord& r)
{
    json factors = json::array();
    for (const Weight& f : r.factors)
        factors.push_back(to_json(f));
    json out{{"p", r.p},
             {"weight", to_json(r.weight)},
             {"twist", r.twist},
             {"factors", factors},
             {"route", r.route}};
    if (r.pipeline)
        out["pipeline"] = to_json(*r.pipeline);
    if (r.theorem)
        out["theorem"] = to_json(*r.theorem);
    if (r.agree)
        out["agree"] = *r.agree;
    if (r.linkage) {
        json l{{"g_linked", r.linkage->g_linked}};
        if (r.linkage->g1_linked)
            l["g1_linked"] = *r.linkage->g1_linked;
        out["linkage"] = l;
    }
    if (r.ext1) {
        out["ext1"] = json{{"row", to_json(r.ext1->row)},
                           {"dim", r.ext1->dim},
                           {"families", r.ext1->families}};
    }
    return out;
}

QueryRecord query_record_from_json(const json& j)
{
    QueryRecord r;
    r.p = j.at("p").get<long long>();
    r.weight = weight_from_json(j.at("weight"));
    r.twist = j.at("twist").get<int>();
    for (const json& f : j.at("factors"))
        r.factors.push_back(weight_from_json(f));
    r.route = j.at("route").get<std::string>();
    if (j.contains("pipeline")) {
        const json& p = j["pipeline"];
        PipelineResult pr;
        pr.total = p.at("total").get<int>();
        pr.e2_02 = p.at("e2_02").get<int>();
        pr.e2_11 = p.at("e2_11").get<int>();
        pr.e2_20 = p.at("e2_20").get<int>();
        for (const json& s : p.at("trace").at("steps")) {
            TraceStep step;
            step.depth = s.at("depth").get<int>();
            step.term = term_from_string(s.at("term").get<std::string>());
            step.lambda0 = weight_from_json(s.at("lambda0"));
            step.remainder = weight_from_json(s.at("remainder"));
            step.g1_row = s.at("g1_row").get<std::string>();
            step.summand = weight_from_json(s.at("summand"));
            step.family = s.at("family").get<std::string>();
            step.contribution = s.at("contribution").get<int>();
            pr.trace.steps.push_back(std::move(step));
        }
        pr.trace.warnings = p.at("trace").at("warnings").get<std::vector<std::string>>();
        r.pipeline = std::move(pr);
    }
    if (j.contains("theorem")) {
        ClassifyResult cr;
        cr.dim = j["theorem"].at("dim").get<int>();
        for (const json& m : j["theorem"].at("matches")) {
            TheoremMatch tm;
            tm.id = m.at("id").get<int>();
            tm.r = m.at("r").is_null() ? -1 : m.at("r").get<long long>();
            tm.d = m.at("d").get<int>();
            tm.dual = m.at("dual").get<bool>();
            tm.collapsed = m.at("collapsed").get<bool>();
            cr.matches.push_back(tm);
        }
        r.theorem = std::move(cr);
    }
    if (j.contains("agree"))
        r.agree = j["agree"].get<bool>();
    if (j.contains("linkage")) {
        LinkageQuery l;
        l.g_linked = j["linkage"].at("g_linked").get<bool>();
        if (j["linkage"].contains("g1_linked"))
            l.g1_linked = j["linkage"]["g1_linked"].get<bool>();
        r.linkage = l;
    }
    if (j.contains("ext1")) {
        Ext1Query e;
        e.row = weight_from_json(j["ext1"].at("row"));
        e.dim = j["ext1"].at("dim").get<int>();
        e.families = j["ext1"].at("families").get<std::vector<std::string>>();
        r.ext1 = std::move(e);
    }
    return r;
}

namespace {

bool type_matches(const std::string& type, const json& value)
{
    if (type == "object")
        return value.is_object();
    if (type == "array")
        return value.is_array();
    if (type == "string")
        return value.is_string();
    if (type == "integer")
        return value.is_number_integer();
    if (type == "number")
        return value.is_number();
    if (type == "boolean")
        return value.is_boolean();
    if (type == "null")
        return value.is_null();
    return false;
}

void validate_node(const json& schema, const json& value, const std::string& path,
                   std::vector<std::string>& errors)
{
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string())
            ok = type_matches(t.get<std::string>(), value);
        else
            for (const json& alt : t)
                ok = ok || type_matches(alt.get<std::string>(), value);
        if (!ok) {
            errors.push_back(path + ": type mismatch (expected " + t.dump() + ")");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const json& alt : schema["enum"])
            ok = ok || alt == value;
        if (!ok)
            errors.push_back(path + ": value not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const json& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(path + ": missing required key '" +
                                     key.get<std::string>() + "'");
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key()))
                validate_node(props[it.key()], it.value(), path + "/" + it.key(), errors);
            else if (schema.value("additionalProperties", true) == json(false))
                errors.push_back(path + ": unexpected key '" + it.key() + "'");
        }
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t idx = 0;
        for (const json& item : value)
            validate_node(schema["items"], item, path + "/" + std::to_string(idx++), errors);
    }
}

} // namespace

std::vector<std::string> schema_validate(const json& schema, const json& value)
{
    std::vector<std::string> errors;
    validate_node(schema, value, "", errors);
    return errors;
}

std::string default_schema_path()
{
    if (const char* env = std::getenv("SL3COH_SCHEMA"); env && *env)
        return env;
#ifdef SL3COH_DEFAULT_SCHEMA_PATH
    return SL3COH_DEFAULT_SCHEMA_PATH;
#else
    return "schema/query_record.json";
#endif
}

} // namespace sl3coh
