#include "sl3coh/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sl3coh {

namespace {

std::vector<std::string> read_data_lines(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open data file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_fields(const std::string& line, std::size_t max_fields)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (fields.size() + 1 < max_fields) {
        const std::size_t semi = line.find(';', start);
        if (semi == std::string::npos)
            break;
        fields.push_back(line.substr(start, semi - start));
        start = semi + 1;
    }
    fields.push_back(line.substr(start));
    return fields;
}

bool known_regime(const std::string& regime)
{
    return regime == "p>3" || regime == "p=3" || regime == "p=2" || regime == "any";
}

// Overlay lines whose first field equals `directive`, split into the given
// number of fields (the trailing justification runs to end of line).
std::vector<std::vector<std::string>> overlay_lines(const std::string& overlay_path,
                                                    const std::string& directive,
                                                    std::size_t fields)
{
    std::vector<std::vector<std::string>> out;
    for (const std::string& line : read_data_lines(overlay_path)) {
        auto parts = split_fields(line, fields);
        if (parts.empty())
            continue;
        if (parts[0] != "replace" && parts[0] != "replace-g1")
            throw std::runtime_error("malformed overlay line: " + line);
        if (parts[0] != directive)
            continue;
        if (parts.size() != fields)
            throw std::runtime_error("malformed overlay line: " + line);
        out.push_back(std::move(parts));
    }
    return out;
}

} // namespace

bool regime_applies(const std::string& regime, long long p)
{
    if (regime == "any")
        return true;
    if (regime == "p>3")
        return p > 3;
    if (regime == "p=3")
        return p == 3;
    if (regime == "p=2")
        return p == 2;
    throw std::invalid_argument("unknown regime: " + regime);
}

G1Table G1Table::load(const std::string& path, const std::string& overlay_path,
                      bool apply_errata)
{
    struct RawEntry {
        std::string regime, degree, weight, value;
        bool replaced = false;
    };
    std::vector<RawEntry> raw;
    for (const std::string& line : read_data_lines(path)) {
        const auto fields = split_fields(line, 4);
        if (fields.size() != 4)
            throw std::runtime_error("malformed line in " + path + ": " + line);
        raw.push_back({fields[0], fields[1], fields[2], fields[3]});
    }

    if (apply_errata) {
        // replace-g1;<regime>;<degree>;<weight>;<old-value>;<new-value>;<justification>
        for (const auto& ov : overlay_lines(overlay_path, "replace-g1", 7)) {
            bool applied = false;
            for (RawEntry& e : raw)
                if (e.regime == ov[1] && e.degree == ov[2] && e.weight == ov[3] &&
                    e.value == ov[4]) {
                    e.value = ov[5];
                    e.replaced = true;
                    applied = true;
                }
            if (!applied)
                throw std::runtime_error("overlay target not found in " + path);
        }
    }

    G1Table table;
    for (const RawEntry& r : raw) {
        G1Entry e;
        e.regime = r.regime;
        if (!known_regime(e.regime))
            throw std::runtime_error("unknown regime in " + path + ": " + r.regime);
        e.degree = std::stoi(r.degree);
        if (e.degree != 1 && e.degree != 2)
            throw std::runtime_error("table degrees are 1 and 2 (degree 0 is built in): " +
                                     r.weight);
        e.weight = parse_weight_pattern(r.weight);
        e.value = parse_value_pattern(r.value);
        e.replaced_by_errata = r.replaced;
        e.id = "g1:" + e.regime + ";" + r.degree + ";" + render(e.weight);
        table.entries_.push_back(std::move(e));
    }

    // Close under duality: dual weights get the dualized value, generated here
    // rather than hand-entered.
    const std::size_t explicit_count = table.entries_.size();
    for (std::size_t k = 0; k < explicit_count; ++k) {
        const G1Entry& e = table.entries_[k];
        const WeightPattern dw = dualized(e.weight);
        const bool exists = std::any_of(
            table.entries_.begin(), table.entries_.begin() + static_cast<long>(explicit_count),
            [&](const G1Entry& other) {
                return other.regime == e.regime && other.degree == e.degree && other.weight == dw;
            });
        if (exists)
            continue;
        G1Entry d;
        d.regime = e.regime;
        d.degree = e.degree;
        d.weight = dw;
        d.value = dualized(e.value);
        d.generated_dual = true;
        d.replaced_by_errata = e.replaced_by_errata;
        d.id = "g1:" + d.regime + ";" + std::to_string(d.degree) + ";" + render(d.weight) + ";dual";
        table.entries_.push_back(std::move(d));
    }
    return table;
}

ModuleExpr G1Table::value(long long p, int degree, const Weight& lam0, std::string* row_id) const
{
    require_prime(p);
    if (degree < 0 || degree > 2)
        throw std::invalid_argument("G1 cohomology degree must be 0, 1 or 2, got " +
                                    std::to_string(degree));
    if (!is_restricted(p, lam0))
        throw std::invalid_argument("G1 table lookup requires a restricted weight, got " +
                                    to_string(lam0));
    if (row_id)
        row_id->clear();
    if (degree == 0) {
        if (lam0 == Weight{0, 0}) {
            if (row_id)
                *row_id = "g1:builtin;0;(0,0)";
            return ModuleExpr::trivial();
        }
        return ModuleExpr::zero();
    }
    const G1Entry* found = nullptr;
    for (const G1Entry& e : entries_) {
        if (e.degree != degree || !regime_applies(e.regime, p) || e.weight.eval(p) != lam0)
            continue;
        if (found && !(found->value.eval(p) == e.value.eval(p)))
            throw std::logic_error("conflicting G1 table entries " + found->id + " and " + e.id +
                                   " at p=" + std::to_string(p));
        found = &e;
    }
    if (!found)
        return ModuleExpr::zero();
    if (row_id)
        *row_id = found->id;
    return found->value.eval(p);
}

namespace {

const std::vector<Weight>& supported_ext_rows()
{
    static const std::vector<Weight> rows = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    return rows;
}

Weight parse_row_field(const std::string& text, const std::string& context)
{
    const WeightPattern wp = parse_weight_pattern(text);
    if (wp.a.from_p || wp.b.from_p)
        throw std::runtime_error("Ext row must be a literal weight in " + context);
    return {wp.a.offset, wp.b.offset};
}

} // namespace

Ext1Table Ext1Table::load(const std::string& table_path, const std::string& overlay_path,
                          bool apply_errata)
{
    struct RawEntry {
        std::string regime, row_text, pattern_text;
        bool replaced = false;
    };
    std::vector<RawEntry> raw;
    for (const std::string& line : read_data_lines(table_path)) {
        const auto fields = split_fields(line, 3);
        if (fields.size() != 3)
            throw std::runtime_error("malformed line in " + table_path + ": " + line);
        raw.push_back({fields[0], fields[1], fields[2]});
    }

    if (apply_errata) {
        // replace;<regime>;<row>;<old-pattern>;<new-pattern>;<justification>
        for (const auto& ov : overlay_lines(overlay_path, "replace", 6)) {
            bool applied = false;
            for (RawEntry& e : raw) {
                if (e.regime == ov[1] && e.row_text == ov[2] && e.pattern_text == ov[3]) {
                    e.pattern_text = ov[4];
                    e.replaced = true;
                    applied = true;
                }
            }
            if (!applied)
                throw std::runtime_error("overlay target not found in " + table_path);
        }
    }

    Ext1Table table;
    for (const RawEntry& r : raw) {
        Ext1Entry e;
        e.regime = r.regime;
        if (!known_regime(e.regime))
            throw std::runtime_error("unknown regime in " + table_path + ": " + r.regime);
        e.row = parse_row_field(r.row_text, table_path);
        if (std::find(supported_ext_rows().begin(), supported_ext_rows().end(), e.row) ==
            supported_ext_rows().end())
            throw std::runtime_error("unsupported Ext row " + to_string(e.row) + " in " +
                                     table_path);
        e.pattern_text = r.pattern_text;
        e.replaced_by_errata = r.replaced;
        e.id = "ext1:" + e.regime + ";" + r.row_text + ";" + e.pattern_text;
        try {
            e.mu = parse_mu_pattern(e.pattern_text);
        } catch (const PatternError& err) {
            // Kept as printed: the entry stays listed but can never match.
            e.defect = err.what();
        }
        table.entries_.push_back(std::move(e));
    }
    table.build_index();
    return table;
}

namespace {

int regime_class(long long p)
{
    return p == 2 ? 0 : p == 3 ? 1 : 2;
}

int row_index(const Weight& row)
{
    if (row == Weight{0, 0})
        return 0;
    if (row == Weight{1, 0})
        return 1;
    if (row == Weight{0, 1})
        return 2;
    return 3;
}

} // namespace

void Ext1Table::build_index()
{
    static constexpr long long representative[3] = {2, 3, 5};
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const Ext1Entry& e = entries_[k];
        if (!e.mu)
            continue;
        for (int c = 0; c < 3; ++c)
            if (regime_applies(e.regime, representative[c]))
                index_[c][row_index(e.row)].push_back(k);
    }
}

Ext1Result Ext1Table::ext1_dim(long long p, const Weight& row, const Decomposition& mu) const
{
    require_prime(p);
    if (mu.p() != p)
        throw std::invalid_argument("decomposition prime mismatch in ext1_dim");
    if (std::find(supported_ext_rows().begin(), supported_ext_rows().end(), row) ==
        supported_ext_rows().end())
        throw std::invalid_argument("Ext^1 row " + to_string(row) +
                                    " is outside the supported rows (0,0),(1,0),(0,1),(1,1)");
    Ext1Result result;
    for (const std::size_t k : index_[regime_class(p)][row_index(row)]) {
        const Ext1Entry& e = entries_[k];
        const MuMatch m = match_mu(*e.mu, p, mu);
        if (m.matched)
            result.matches.push_back({&e, m.free_value, m.free_irrelevant});
    }
    result.dim = result.matches.empty() ? 0 : 1;
    return result;
}

int Ext1Table::h1_g(long long p, const Decomposition& mu) const
{
    return ext1_dim(p, {0, 0}, mu).dim;
}

std::vector<std::string> Ext1Table::defects() const
{
    std::vector<std::string> out;
    for (const Ext1Entry& e : entries_)
        if (!e.defect.empty())
            out.push_back(e.id + ": unparseable (" + e.defect + ")");
    for (const Ext1Entry& e : entries_) {
        if (!e.mu)
            continue;
        const MuPattern want = dualized(*e.mu);
        const Weight want_row = dual(e.row);
        const bool found =
            std::any_of(entries_.begin(), entries_.end(), [&](const Ext1Entry& other) {
                return other.mu && other.regime == e.regime && other.row == want_row &&
                       *other.mu == want;
            });
        if (!found)
            out.push_back(e.id + ": no dual partner " + render(want) + " in row " +
                          to_string(want_row));
    }
    return out;
}

TheoremTable TheoremTable::load(const std::string& path)
{
    TheoremTable table;
    for (const std::string& line : read_data_lines(path)) {
        const auto fields = split_fields(line, 2);
        if (fields.size() != 2)
            throw std::runtime_error("malformed line in " + path + ": " + line);
        TheoremFamily f;
        f.id = std::stoi(fields[0]);
        f.text = fields[1];
        f.mu = parse_mu_pattern(f.text);
        for (const TheoremFamily& other : table.families_)
            if (other.id == f.id)
                throw std::runtime_error("duplicate family id in " + path + ": " + fields[0]);
        table.families_.push_back(std::move(f));
    }
    return table;
}

std::string default_data_dir()
{
    if (const char* env = std::getenv("SL3COH_DATA"); env && *env)
        return env;
#ifdef SL3COH_DEFAULT_DATA_DIR
    return SL3COH_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

TableSet TableSet::load(const std::string& dir, bool apply_errata)
{
    const std::string overlay = dir + "/errata.overlay";
    TableSet t{G1Table::load(dir + "/g1_cohomology.tbl", overlay, apply_errata),
               Ext1Table::load(dir + "/ext1.tbl", overlay, apply_errata),
               TheoremTable::load(dir + "/theorem1.tbl"), apply_errata, dir};
    return t;
}

TableSet TableSet::load_default(bool apply_errata)
{
    return load(default_data_dir(), apply_errata);
}

} // namespace sl3coh
