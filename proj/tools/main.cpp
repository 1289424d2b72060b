// Command-line surface: single queries with traces, bulk enumeration, route
// cross-checking with discrepancy reporting, and machine-readable output.
// Exit codes: 0 ok, 1 usage/input error, 2 strict-mode route disagreement.

#include "sl3coh/classifier.hpp"
#include "sl3coh/enumerate.hpp"
#include "sl3coh/pipeline.hpp"
#include "sl3coh/record.hpp"
#include "sl3coh/tables.hpp"
#include "sl3coh/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sl3coh;
using nlohmann::json;

Weight parse_weight_arg(const std::string& text)
{
    std::istringstream in(text);
    Weight w;
    char comma = '\0';
    if (!(in >> w.a >> comma >> w.b) || comma != ',' || !(in >> std::ws).eof())
        throw std::invalid_argument("malformed weight '" + text + "', expected a,b");
    return w;
}

// Factor syntax a0,b0;a1,b1;... — digit i sits at twist position twist + i.
Weight weight_from_factors(long long p, const std::string& text, int twist)
{
    std::vector<Weight> digits(static_cast<std::size_t>(twist), Weight{0, 0});
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        const Weight f = parse_weight_arg(part);
        if (!is_restricted(p, f))
            throw std::invalid_argument("factor " + to_string(f) + " is not restricted for p=" +
                                        std::to_string(p));
        digits.push_back(f);
    }
    if (digits.size() == static_cast<std::size_t>(twist))
        throw std::invalid_argument("empty factor list");
    return Decomposition::from_digits(p, digits).weight();
}

json load_schema()
{
    const std::string path = default_schema_path();
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open schema file: " + path);
    json schema;
    in >> schema;
    return schema;
}

void emit_record(std::ostream& os, const QueryRecord& record, const json& schema)
{
    const json j = to_json(record);
    const auto violations = schema_validate(schema, j);
    if (!violations.empty())
        throw std::logic_error("record failed schema validation: " + violations.front());
    os << j.dump() << '\n';
}

void print_trace(std::ostream& os, const Trace& trace)
{
    for (const TraceStep& s : trace.steps) {
        os << "    " << std::string(static_cast<std::size_t>(2 * s.depth), ' ')
           << to_string(s.term) << " lambda0=" << s.lambda0 << " lambda'=" << s.remainder;
        if (!s.g1_row.empty())
            os << " [" << s.g1_row << "]";
        if (s.term == E2Term::e11)
            os << " row=" << s.summand;
        if (!s.family.empty())
            os << " [" << s.family << "]";
        os << " -> " << s.contribution << '\n';
    }
    for (const std::string& w : trace.warnings)
        os << "    warning: " << w << '\n';
}

struct CommonOptions {
    std::string data_dir;
    std::string errata = "on";

    TableSet load() const
    {
        const bool apply = errata != "off";
        return data_dir.empty() ? TableSet::load_default(apply) : TableSet::load(data_dir, apply);
    }
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--data-dir", opts.data_dir,
                    "table data directory (default: $SL3COH_DATA or the shipped data/)");
    cmd->add_option("--errata", opts.errata, "apply the errata overlay: on|off")
        ->check(CLI::IsMember({"on", "off"}));
}

std::ostream& open_output(std::ofstream& file, const std::string& path)
{
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int run_h2(const CommonOptions& common, long long p, const std::vector<std::string>& weight_args,
           const std::string& factors, int twist, const std::string& route, bool explain,
           bool strict, bool as_json, const std::string& out_path)
{
    const TableSet tables = common.load();
    const Pipeline pipeline(tables);
    const Classifier classifier(tables);
    const json schema = as_json ? load_schema() : json{};

    std::vector<Weight> inputs;
    for (const std::string& arg : weight_args)
        inputs.push_back(parse_weight_arg(arg));
    if (!factors.empty())
        inputs.push_back(weight_from_factors(p, factors, twist));
    if (inputs.empty())
        throw std::invalid_argument("no input weight: pass --weight and/or --factors");

    std::ofstream file;
    std::ostream& os = open_output(file, out_path);

    bool disagreement = false;
    for (const Weight& w : inputs) {
        const Decomposition dec = steinberg_decompose(p, w);
        QueryRecord record;
        record.p = p;
        record.weight = w;
        record.twist = dec.twist();
        record.factors = dec.factors();
        record.route = route;
        if (route == "pipeline" || route == "both")
            record.pipeline = pipeline.h2_dim(dec);
        if (route == "theorem" || route == "both")
            record.theorem = classifier.classify(dec);
        if (route == "both") {
            record.agree = record.pipeline->total == record.theorem->dim;
            disagreement = disagreement || !*record.agree;
        }
        if (as_json) {
            emit_record(os, record, schema);
            continue;
        }
        os << "p=" << p << " weight=" << w << " factors=" << dec;
        if (record.pipeline)
            os << " pipeline=" << record.pipeline->total << " [e2_02=" << record.pipeline->e2_02
               << " e2_11=" << record.pipeline->e2_11 << " e2_20=" << record.pipeline->e2_20
               << "]";
        if (record.theorem)
            os << " theorem=" << record.theorem->dim
               << (record.theorem->matches.empty()
                       ? ""
                       : " [" + compact_tokens(record.theorem->matches) + "]");
        if (record.agree)
            os << " agree=" << (*record.agree ? "yes" : "NO");
        os << '\n';
        if (explain && record.pipeline)
            print_trace(os, record.pipeline->trace);
    }
    return strict && disagreement ? 2 : 0;
}

int run_table(const CommonOptions& common, long long p, long long max_coord,
              const std::string& out_path, bool discrepancies_only, unsigned threads)
{
    const TableSet tables = common.load();
    const auto rows = compute_table(tables, p, max_coord, threads);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    write_table_csv(os, rows, discrepancies_only);
    return 0;
}

int run_crosscheck(const CommonOptions& common, const std::string& primes_arg, long long max_len,
                   long long max_r, long long max_d, const std::string& out_path,
                   unsigned threads)
{
    std::vector<long long> primes;
    std::stringstream in(primes_arg);
    std::string part;
    while (std::getline(in, part, ','))
        primes.push_back(std::stoll(part));
    if (primes.empty())
        throw std::invalid_argument("no primes given");

    const TableSet tables = common.load();
    const json report = crosscheck_report(tables, primes, max_len, max_r, max_d, threads);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    os << report.dump(2) << '\n';
    return 0;
}

int run_linkage(const CommonOptions& common, long long p, const std::string& weight_arg,
                bool as_json)
{
    (void)common;
    const Weight w = parse_weight_arg(weight_arg);
    QueryRecord record;
    record.p = p;
    record.weight = w;
    record.route = "linkage";
    if (is_dominant(w)) {
        const Decomposition dec = steinberg_decompose(p, w);
        record.twist = dec.twist();
        record.factors = dec.factors();
    }
    LinkageQuery l;
    l.g_linked = g_linked_to_zero(p, w);
    if (is_restricted(p, w))
        l.g1_linked = g1_linked_restricted(p, w);
    record.linkage = l;

    if (as_json) {
        emit_record(std::cout, record, load_schema());
        return 0;
    }
    std::cout << "p=" << p << " weight=" << w << " linked=" << (l.g_linked ? "true" : "false");
    if (l.g1_linked)
        std::cout << " g1_linked=" << (*l.g1_linked ? "true" : "false");
    std::cout << '\n';
    return 0;
}

int run_ext1(const CommonOptions& common, long long p, const std::string& row_arg,
             const std::string& mu_arg, const std::string& mu_factors, int twist, bool as_json)
{
    const TableSet tables = common.load();
    const Weight row = parse_weight_arg(row_arg);
    Weight mu_weight{0, 0};
    if (!mu_arg.empty())
        mu_weight = parse_weight_arg(mu_arg);
    else if (!mu_factors.empty())
        mu_weight = weight_from_factors(p, mu_factors, twist);
    else
        throw std::invalid_argument("pass --mu or --mu-factors");

    const Decomposition mu = steinberg_decompose(p, mu_weight);
    const Ext1Result res = tables.ext1.ext1_dim(p, row, mu);

    QueryRecord record;
    record.p = p;
    record.weight = mu_weight;
    record.twist = mu.twist();
    record.factors = mu.factors();
    record.route = "ext1";
    Ext1Query q;
    q.row = row;
    q.dim = res.dim;
    for (const Ext1Match& m : res.matches) {
        std::string f = m.entry->id;
        if (m.i >= 0)
            f += " i=" + std::to_string(m.i);
        q.families.push_back(std::move(f));
    }
    record.ext1 = std::move(q);

    if (as_json) {
        emit_record(std::cout, record, load_schema());
        return 0;
    }
    std::cout << "p=" << p << " row=" << row << " mu=" << mu_weight << " dim=" << res.dim;
    for (const std::string& f : record.ext1->families)
        std::cout << " [" << f << "]";
    std::cout << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"second cohomology of simple SL3-modules: closed-form classification vs "
                 "spectral-sequence pipeline"};
    app.require_subcommand(1);

    CommonOptions common;
    long long p = 0;
    std::vector<std::string> weights;
    std::string factors, route = "both", out_path, primes_arg;
    std::string single_weight, row_arg, mu_arg, mu_factors;
    int twist = 0;
    long long max_coord = 0, max_len = 4, max_r = 4, max_d = 2;
    unsigned threads = 0;
    bool explain = false, strict = false, as_json = false, discrepancies_only = false;

    CLI::App* h2 = app.add_subcommand("h2", "compute H^2(G, L(a,b)) by either or both routes");
    add_common(h2, common);
    h2->add_option("--p", p, "characteristic (prime)")->required();
    h2->add_option("--weight", weights, "weight a,b (repeatable)");
    h2->add_option("--factors", factors, "restricted digits a0,b0;a1,b1;...");
    h2->add_option("--twist", twist, "overall twist for --factors");
    h2->add_option("--route", route, "pipeline|theorem|both")
        ->check(CLI::IsMember({"pipeline", "theorem", "both"}));
    h2->add_flag("--explain", explain, "print the pipeline trace");
    h2->add_flag("--strict", strict, "exit 2 if the routes disagree");
    h2->add_flag("--json", as_json, "emit schema-validated JSON records");
    h2->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* table = app.add_subcommand("table", "CSV of both routes over a,b < max");
    add_common(table, common);
    table->add_option("--p", p, "characteristic (prime)")->required();
    table->add_option("--max", max_coord, "exclusive coordinate bound")->required();
    table->add_option("--out", out_path, "output file (default stdout)");
    table->add_flag("--discrepancies-only", discrepancies_only, "only rows where routes differ");
    table->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI::App* crosscheck =
        app.add_subcommand("crosscheck", "route discrepancy report over a weight box plus "
                                         "instantiated families");
    add_common(crosscheck, common);
    crosscheck->add_option("--p", primes_arg, "comma-separated primes")->required();
    crosscheck->add_option("--max-len", max_len, "box bound p^max_len on each coordinate");
    crosscheck->add_option("--max-r", max_r, "free index bound for instantiated families");
    crosscheck->add_option("--max-d", max_d, "overall twist bound for instantiated families");
    crosscheck->add_option("--out", out_path, "output file (default stdout)");
    crosscheck->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI::App* linkage = app.add_subcommand("linkage", "linkage of a weight to (0,0)");
    add_common(linkage, common);
    linkage->add_option("--p", p, "characteristic (prime)")->required();
    linkage->add_option("--weight", single_weight, "weight a,b")->required();
    linkage->add_flag("--json", as_json, "emit a schema-validated JSON record");

    CLI::App* ext1 = app.add_subcommand("ext1", "Ext^1_G(row, mu) from the pattern tables");
    add_common(ext1, common);
    ext1->add_option("--p", p, "characteristic (prime)")->required();
    ext1->add_option("--row", row_arg, "row weight a,b")->required();
    ext1->add_option("--mu", mu_arg, "mu weight a,b");
    ext1->add_option("--mu-factors", mu_factors, "mu digits a0,b0;a1,b1;...");
    ext1->add_option("--twist", twist, "overall twist for --mu-factors");
    ext1->add_flag("--json", as_json, "emit a schema-validated JSON record");

    CLI11_PARSE(app, argc, argv);

    try {
        if (h2->parsed())
            return run_h2(common, p, weights, factors, twist, route, explain, strict, as_json,
                          out_path);
        if (table->parsed())
            return run_table(common, p, max_coord, out_path, discrepancies_only, threads);
        if (crosscheck->parsed())
            return run_crosscheck(common, primes_arg, max_len, max_r, max_d, out_path, threads);
        if (linkage->parsed())
            return run_linkage(common, p, single_weight, as_json);
        if (ext1->parsed())
            return run_ext1(common, p, row_arg, mu_arg, mu_factors, twist, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
