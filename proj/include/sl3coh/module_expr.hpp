#pragma once

// Formal G-module structure values: direct sums of uniserial chains of simple
// labels, written socle-first. The zero module is the empty sum. These carry
// the Frobenius-kernel cohomology tables; no actual module arithmetic happens
// here, only dualization and head extraction.

#include "sl3coh/weight.hpp"

#include <string>
#include <vector>

namespace sl3coh {

// Composition series of a uniserial module, socle first.
using Chain = std::vector<Weight>;

struct ModuleExpr {
    std::vector<Chain> summands;

    static ModuleExpr zero() { return {}; }
    static ModuleExpr simple(const Weight& w) { return {{{w}}}; }
    static ModuleExpr trivial() { return simple({0, 0}); }

    bool is_zero() const { return summands.empty(); }
    bool is_semisimple() const;

    // Direct sums are unordered; equality compares summand multisets.
    friend bool operator==(const ModuleExpr& lhs, const ModuleExpr& rhs);
};

std::ostream& operator<<(std::ostream& os, const ModuleExpr& m);
std::string to_string(const ModuleExpr& m);

// Reverses each chain and dualizes each label; an involution.
ModuleExpr dualize(const ModuleExpr& m);

// Multiset of head labels (last element of each chain), sorted.
std::vector<Weight> head(const ModuleExpr& m);
std::vector<Weight> socle(const ModuleExpr& m);

// dim Hom from m onto the simple of highest weight s: multiplicity of s in
// the head of m.
int hom_to_simple(const ModuleExpr& m, const Weight& s);

// Structure of the induced module H^0(lam) for lam G1-linked to (0,0):
// irreducible except for lam = (p-2,p-2) with p > 2, which is uniserial with
// socle (p-2,p-2) and head (0,0).
ModuleExpr induced_structure(long long p, const Weight& lam);

} // namespace sl3coh
