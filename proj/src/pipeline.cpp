#include "sl3coh/pipeline.hpp"

#include <stdexcept>

namespace sl3coh {

std::string to_string(E2Term t)
{
    switch (t) {
    case E2Term::e02: return "E2_02";
    case E2Term::e11: return "E2_11";
    case E2Term::e20: return "E2_20";
    case E2Term::base: return "base";
    }
    throw std::logic_error("unknown E2 term");
}

int Pipeline::e2_02(const Decomposition& dec, Trace& trace, int depth) const
{
    const Weight lam0 = dec.digit(0);
    const Weight rem = dec.remainder().weight();
    std::string row_id;
    const ModuleExpr h2 = tables_.g1.value(dec.p(), 2, lam0, &row_id);
    int value = 0;
    if (!h2.is_zero())
        value = hom_to_simple(dualize(h2), rem);
    trace.steps.push_back({depth, E2Term::e02, lam0, rem, row_id, {0, 0},
                           value ? "Hom->L" + to_string(rem) : "", value});
    return value;
}

int Pipeline::e2_11(const Decomposition& dec, Trace& trace, int depth) const
{
    const Weight lam0 = dec.digit(0);
    const Decomposition rem = dec.remainder();
    const Weight rem_weight = rem.weight();
    std::string row_id;
    const ModuleExpr h1 = tables_.g1.value(dec.p(), 1, lam0, &row_id);
    if (h1.is_zero()) {
        trace.steps.push_back({depth, E2Term::e11, lam0, rem_weight, row_id, {0, 0}, "", 0});
        return 0;
    }
    const ModuleExpr dualized_h1 = dualize(h1);
    if (!dualized_h1.is_semisimple())
        throw std::logic_error("degree-1 G1 table value is not semisimple at " + row_id);
    int value = 0;
    for (const Chain& chain : dualized_h1.summands) {
        const Weight row = chain.front();
        const Ext1Result ext = tables_.ext1.ext1_dim(dec.p(), row, rem);
        std::string family;
        long long idx = -1;
        if (!ext.matches.empty()) {
            family = ext.matches.front().entry->id;
            idx = ext.matches.front().i;
        }
        if (idx >= 0)
            family += " i=" + std::to_string(idx);
        trace.steps.push_back(
            {depth, E2Term::e11, lam0, rem_weight, row_id, row, family, ext.dim});
        value += ext.dim;
    }
    return value;
}

int Pipeline::e2_20(const Decomposition& dec, Trace& trace, int depth) const
{
    const Weight lam0 = dec.digit(0);
    const Decomposition rem = dec.remainder();
    if (lam0 != Weight{0, 0}) {
        trace.steps.push_back({depth, E2Term::e20, lam0, rem.weight(), "", {0, 0}, "", 0});
        return 0;
    }
    // lambda0 = 0: H^2(G, lambda) = H^2(G, lambda^[-1]), strictly shorter.
    const PipelineResult inner = evaluate(rem, Trace{}, depth + 1);
    Trace& t = trace;
    t.steps.push_back({depth, E2Term::e20, lam0, rem.weight(), "", {0, 0}, "untwist",
                       inner.total});
    t.steps.insert(t.steps.end(), inner.trace.steps.begin(), inner.trace.steps.end());
    t.warnings.insert(t.warnings.end(), inner.trace.warnings.begin(),
                      inner.trace.warnings.end());
    return inner.total;
}

PipelineResult Pipeline::evaluate(const Decomposition& dec, Trace trace, int depth) const
{
    if (dec.is_zero_weight()) {
        trace.steps.push_back(
            {depth, E2Term::base, {0, 0}, {0, 0}, "", {0, 0}, "H2(G,K)=0", 0});
        return {0, 0, 0, 0, std::move(trace)};
    }
    PipelineResult r;
    r.e2_02 = e2_02(dec, trace, depth);
    r.e2_11 = e2_11(dec, trace, depth);
    r.e2_20 = e2_20(dec, trace, depth);
    r.total = r.e2_02 + r.e2_11 + r.e2_20;

    int nonzero_terms = (r.e2_02 > 0) + (r.e2_11 > 0) + (r.e2_20 > 0);
    if (nonzero_terms > 1)
        trace.warnings.push_back("table consistency: " + std::to_string(nonzero_terms) +
                                 " E2 terms non-zero for " + to_string(dec.weight()));
    if (r.total >= 2)
        trace.warnings.push_back("table consistency: H2 dimension " + std::to_string(r.total) +
                                 " >= 2 for " + to_string(dec.weight()));
    r.trace = std::move(trace);
    return r;
}

PipelineResult Pipeline::h2_dim(const Decomposition& dec) const
{
    return evaluate(dec, Trace{}, 0);
}

PipelineResult Pipeline::h2_dim(long long p, const Weight& w) const
{
    return h2_dim(steinberg_decompose(p, w));
}

} // namespace sl3coh
