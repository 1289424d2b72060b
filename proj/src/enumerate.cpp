#include "sl3coh/enumerate.hpp"

#include "sl3coh/record.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <thread>

namespace sl3coh {

std::string compact_token(const TheoremMatch& m)
{
    std::string out = std::to_string(m.id);
    if (m.dual)
        out += 'd';
    if (m.r >= 0)
        out += 'r' + std::to_string(m.r);
    if (m.collapsed)
        out += 'c';
    return out;
}

std::string compact_tokens(const std::vector<TheoremMatch>& ms)
{
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i > 0)
            out += '|';
        out += compact_token(ms[i]);
    }
    return out;
}

namespace {

unsigned resolve_threads(unsigned threads, long long work_items)
{
    unsigned n = threads ? threads : std::thread::hardware_concurrency();
    n = std::max(1u, std::min(n, 16u));
    if (work_items < 256)
        n = 1;
    return n;
}

// Runs fn(index) for index in [0, count), split into contiguous chunks.
template <typename Fn>
void parallel_indices(long long count, unsigned threads, Fn&& fn)
{
    const unsigned n = resolve_threads(threads, count);
    if (n == 1) {
        for (long long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> workers;
    const long long chunk = (count + n - 1) / n;
    for (unsigned t = 0; t < n; ++t) {
        const long long lo = static_cast<long long>(t) * chunk;
        const long long hi = std::min(count, lo + chunk);
        if (lo >= hi)
            break;
        workers.emplace_back([lo, hi, &fn] {
            for (long long i = lo; i < hi; ++i)
                fn(i);
        });
    }
    for (std::thread& w : workers)
        w.join();
}

} // namespace

std::vector<TableRow> compute_table(const TableSet& tables, long long p, long long max_coord,
                                    unsigned threads)
{
    require_prime(p);
    if (max_coord < 1)
        throw std::invalid_argument("max must be positive");
    const Pipeline pipeline(tables);
    const Classifier classifier(tables);

    std::vector<TableRow> rows(static_cast<std::size_t>(max_coord * max_coord));
    parallel_indices(max_coord * max_coord, threads, [&](long long idx) {
        const long long a = idx / max_coord;
        const long long b = idx % max_coord;
        const Decomposition dec = steinberg_decompose(p, {a, b});
        const PipelineResult pr = pipeline.h2_dim(dec);
        const ClassifyResult cr = classifier.classify(dec);
        rows[static_cast<std::size_t>(idx)] =
            TableRow{a,       b,
                     pr.total, cr.dim,
                     pr.total == cr.dim, compact_tokens(cr.matches),
                     pr.e2_02, pr.e2_11, pr.e2_20};
    });
    return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows,
                     bool discrepancies_only)
{
    os << "a,b,h2_pipeline,h2_theorem,agree,pattern_ids,e2_02,e2_11,e2_20\n";
    for (const TableRow& r : rows) {
        if (discrepancies_only && r.agree)
            continue;
        os << r.a << ',' << r.b << ',' << r.pipeline_dim << ',' << r.theorem_dim << ','
           << (r.agree ? "true" : "false") << ',' << r.pattern_ids << ',' << r.e2_02 << ','
           << r.e2_11 << ',' << r.e2_20 << '\n';
    }
}

nlohmann::json crosscheck_report(const TableSet& tables, const std::vector<long long>& primes,
                                 long long max_len, long long max_r, long long max_d,
                                 unsigned threads)
{
    using nlohmann::json;
    const Pipeline pipeline(tables);
    const Classifier classifier(tables);

    json prime_reports = json::array();
    for (const long long p : primes) {
        require_prime(p);
        long long box = 1;
        for (long long i = 0; i < max_len; ++i)
            box *= p;

        // The enumeration box, then every instantiated family pushed through
        // overall twists; de-duplicated and ordered by weight.
        std::set<Weight> weights;
        for (long long a = 0; a < box; ++a)
            for (long long b = 0; b < box; ++b)
                weights.insert({a, b});
        for (const InstantiatedPattern& inst : classifier.instantiate_patterns(p, max_r)) {
            if (inst.zero_collapsed)
                continue;
            Weight w = inst.dec.weight();
            for (long long d = 0; d <= max_d; ++d) {
                if (w.a < guard_bound(p) && w.b < guard_bound(p))
                    weights.insert(w);
                w = {w.a * p, w.b * p};
            }
        }

        const std::vector<Weight> ordered(weights.begin(), weights.end());
        std::vector<json> found(ordered.size());
        parallel_indices(static_cast<long long>(ordered.size()), threads, [&](long long idx) {
            const Weight w = ordered[static_cast<std::size_t>(idx)];
            const Decomposition dec = steinberg_decompose(p, w);
            const PipelineResult pr = pipeline.h2_dim(dec);
            const ClassifyResult cr = classifier.classify(dec);
            if (pr.total == cr.dim)
                return;
            json steps = json::array();
            for (const TraceStep& s : pr.trace.steps)
                steps.push_back(to_json(s));
            json matches = json::array();
            for (const TheoremMatch& m : cr.matches)
                matches.push_back(compact_token(m));
            found[static_cast<std::size_t>(idx)] =
                json{{"a", w.a},          {"b", w.b},
                     {"pipeline", pr.total}, {"theorem", cr.dim},
                     {"pattern_ids", matches}, {"trace", steps}};
        });

        json discrepancies = json::array();
        for (const json& d : found)
            if (!d.is_null())
                discrepancies.push_back(d);
        prime_reports.push_back(json{{"p", p},
                                     {"checked", ordered.size()},
                                     {"discrepancies", discrepancies}});
    }

    return json{{"parameters", json{{"max_len", max_len},
                                    {"max_r", max_r},
                                    {"max_d", max_d},
                                    {"errata", tables.errata_applied}}},
                {"primes", prime_reports}};
}

} // namespace sl3coh
