#pragma once

// Symbolic weight and factor patterns, the common currency of every table in
// data/. The concrete grammar (ASCII rendering of the tables' notation):
//
//   coord   := <integer> | 'p-'<integer>            evaluated mod p into [0,p)
//   weight  := '(' coord ',' coord ')'
//   twist   := '^[' index ']'                        absent means twist 0
//   index   := <integer> | FREE | FREE '+' <integer>
//   FREE    := 'i' (ranges over 0,1,2,...) | 'r' (ranges over 1,2,3,...)
//   mu      := weight twist? ( '*' weight twist? )*  a Steinberg factor list
//   chain   := weight ( '|' weight )*                uniserial layers, socle first
//   value   := chain ( '+' chain )*                  direct sum
//
// A mu pattern matches a canonical decomposition when the evaluated factors
// coincide with the decomposition's digits at the required positions and all
// unconstrained positions are (0,0). Factors that evaluate to (0,0) at the
// given p are "collapsed": the matcher requires that position to be absent.

#include "sl3coh/module_expr.hpp"
#include "sl3coh/weight.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3coh {

struct PatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoordPattern {
    long long offset = 0;
    bool from_p = false; // value is p + offset (offset <= 0) rather than offset

    long long eval(long long p) const
    {
        const long long v = from_p ? p + offset : offset;
        return ((v % p) + p) % p;
    }
    friend bool operator==(const CoordPattern&, const CoordPattern&) = default;
};

struct WeightPattern {
    CoordPattern a, b;

    Weight eval(long long p) const { return {a.eval(p), b.eval(p)}; }
    friend bool operator==(const WeightPattern&, const WeightPattern&) = default;
};

struct TwistPattern {
    long long base = 0;
    bool has_free = false;

    long long eval(long long free) const { return base + (has_free ? free : 0); }
    friend bool operator==(const TwistPattern&, const TwistPattern&) = default;
};

struct FactorPattern {
    WeightPattern weight;
    TwistPattern twist;
    friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

struct MuPattern {
    std::vector<FactorPattern> factors;
    bool has_free = false;
    long long free_min = 0; // 0 for an 'i' index, 1 for an 'r' index

    friend bool operator==(const MuPattern&, const MuPattern&) = default;
};

// Direct sum of uniserial chains of weight patterns.
struct ValuePattern {
    std::vector<std::vector<WeightPattern>> chains;

    ModuleExpr eval(long long p) const;
    friend bool operator==(const ValuePattern&, const ValuePattern&) = default;
};

WeightPattern parse_weight_pattern(const std::string& text);
MuPattern parse_mu_pattern(const std::string& text);
ValuePattern parse_value_pattern(const std::string& text);

std::string render(const WeightPattern& w);
std::string render(const MuPattern& m);
std::string render(const ValuePattern& v);

WeightPattern dualized(const WeightPattern& w);
MuPattern dualized(const MuPattern& m);
ValuePattern dualized(const ValuePattern& v);

// Concrete digit sequence of a mu pattern at prime p and free-index value.
struct MuInstance {
    std::vector<Weight> digits;          // positions 0..max, zeros included
    std::vector<long long> collapsed;    // positions whose factor evaluated to (0,0)
    bool all_zero = false;
};

MuInstance instantiate(const MuPattern& m, long long p, long long free_value);

struct MuMatch {
    bool matched = false;
    long long free_value = -1; // resolved index, -1 when the pattern has none
    bool free_irrelevant = false; // every free-positioned factor collapsed
};

// Anchored match: pattern positions are absolute digit positions of cand.
MuMatch match_mu(const MuPattern& m, long long p, const Decomposition& cand);

} // namespace sl3coh
