#pragma once

// Route B: H^2(G,V) as the sum E2_02 + E2_11 + E2_20 of the three total-degree-2
// terms of the Lyndon-Hochschild-Serre spectral sequence for G1 < G, which
// collapses at the second page in this range. Writing lambda0 for the leading
// Steinberg digit of V and lambda' for the untwisted remainder:
//
//   E2_02 = Hom_G( (H^2(G1,lambda0)^[-1])^* , lambda' )
//   E2_11 = Ext^1_G( (H^1(G1,lambda0)^[-1])^* , lambda' )
//   E2_20 = H^2(G, lambda')  when lambda0 = (0,0), else 0
//
// so twisted weights route through the E2_20 recursion one digit at a time,
// with H^2(G,K) = 0 as the floor. Every evaluation records which table rows
// and pattern families fired; re-evaluating the cited rows reproduces the
// dimensions (the trace is replayable).

#include "sl3coh/tables.hpp"
#include "sl3coh/weight.hpp"

#include <string>
#include <vector>

namespace sl3coh {

enum class E2Term { e02, e11, e20, base };

std::string to_string(E2Term t);

struct TraceStep {
    int depth = 0;
    E2Term term = E2Term::base;
    Weight lambda0{0, 0};
    Weight remainder{0, 0}; // weight of lambda'
    std::string g1_row;     // G1 table row consulted (empty if none fired)
    Weight summand{0, 0};   // E2_11 only: the Ext row used
    std::string family;     // Ext family id / Hom target note
    int contribution = 0;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
    std::vector<TraceStep> steps;
    std::vector<std::string> warnings;
};

struct PipelineResult {
    int total = 0;
    int e2_02 = 0;
    int e2_11 = 0;
    int e2_20 = 0;
    Trace trace;
};

class Pipeline {
  public:
    explicit Pipeline(const TableSet& tables) : tables_(tables) {}

    PipelineResult h2_dim(long long p, const Weight& w) const;
    PipelineResult h2_dim(const Decomposition& dec) const;

    // Individual term evaluations on a canonical decomposition (any twist;
    // a twisted input has lambda0 = (0,0)).
    int e2_02(const Decomposition& dec, Trace& trace, int depth = 0) const;
    int e2_11(const Decomposition& dec, Trace& trace, int depth = 0) const;
    int e2_20(const Decomposition& dec, Trace& trace, int depth = 0) const;

    const TableSet& tables() const { return tables_; }

  private:
    PipelineResult evaluate(const Decomposition& dec, Trace trace, int depth) const;

    const TableSet& tables_;
};

} // namespace sl3coh
