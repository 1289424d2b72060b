#pragma once

// Bulk enumeration over dominant weights: the two-route comparison table and
// the small-prime discrepancy report. Work is split over disjoint ranges of
// the first coordinate and merged in index order, so output is deterministic
// regardless of thread count.

#include "sl3coh/classifier.hpp"
#include "sl3coh/pipeline.hpp"
#include "sl3coh/tables.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace sl3coh {

struct TableRow {
    long long a = 0;
    long long b = 0;
    int pipeline_dim = 0;
    int theorem_dim = 0;
    bool agree = true;
    std::string pattern_ids; // compact match tokens, '|'-joined
    int e2_02 = 0;
    int e2_11 = 0;
    int e2_20 = 0;
};

// Compact rendering of a theorem match: id, then 'd' for the dual variant,
// then 'r<k>' for a resolved free index, then 'c' if factors collapsed.
std::string compact_token(const TheoremMatch& m);
std::string compact_tokens(const std::vector<TheoremMatch>& ms);

// All dominant (a,b) with a,b < max_coord, in row-major (a,b) order.
// threads = 0 picks the hardware concurrency.
std::vector<TableRow> compute_table(const TableSet& tables, long long p, long long max_coord,
                                    unsigned threads = 0);

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows,
                     bool discrepancies_only = false);

// Route-comparison report for the given primes: the box a,b < p^max_len plus
// every instantiated family (r <= max_r, overall twists d <= max_d).
// Discrepancies are listed by weight with the matched pattern ids and the
// full pipeline trace.
nlohmann::json crosscheck_report(const TableSet& tables, const std::vector<long long>& primes,
                                 long long max_len, long long max_r, long long max_d,
                                 unsigned threads = 0);

} // namespace sl3coh
