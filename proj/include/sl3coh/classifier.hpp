#pragma once

// Route A: decide H^2(G,V) by matching the canonical decomposition of V (or
// of its dual) against the ten classification families, after stripping an
// arbitrary overall Frobenius twist. Coordinates are read mod p, so factors
// can collapse to (0,0) at small primes; collapsed positions are removed by
// re-canonicalization, and a family that collapses to the zero weight matches
// nothing. The free index r is recovered from the gap in the candidate, so
// classification needs no r bound.

#include "sl3coh/tables.hpp"
#include "sl3coh/weight.hpp"

#include <vector>

namespace sl3coh {

struct TheoremMatch {
    int id = 0;
    long long r = -1; // resolved index; -1 when the family has none or it collapsed away
    int d = 0;        // stripped overall twist
    bool dual = false;
    bool collapsed = false; // some factor vanished under the mod-p reading

    friend bool operator==(const TheoremMatch&, const TheoremMatch&) = default;
};

struct ClassifyResult {
    int dim = 0;
    std::vector<TheoremMatch> matches;
};

struct InstantiatedPattern {
    int id = 0;
    long long r = -1;
    bool dual = false;
    Decomposition dec;
    bool zero_collapsed = false;             // the whole family vanished
    std::vector<long long> collapsed_positions;
};

class Classifier {
  public:
    explicit Classifier(const TableSet& tables) : tables_(tables) {}

    ClassifyResult classify(long long p, const Weight& w) const;
    ClassifyResult classify(const Decomposition& dec) const;

    // Concrete decompositions of every family for r = 1..max_r (families
    // without the index appear once), both dual variants, canonicalized.
    std::vector<InstantiatedPattern> instantiate_patterns(long long p, long long max_r) const;

  private:
    const TableSet& tables_;
};

} // namespace sl3coh
