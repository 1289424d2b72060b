#include "sl3coh/classifier.hpp"

#include <algorithm>

namespace sl3coh {

namespace {

bool any_collapsed(const MuPattern& m, long long p)
{
    return std::any_of(m.factors.begin(), m.factors.end(), [&](const FactorPattern& f) {
        return f.weight.eval(p) == Weight{0, 0};
    });
}

} // namespace

ClassifyResult Classifier::classify(const Decomposition& dec) const
{
    const long long p = dec.p();
    ClassifyResult result;
    for (const TheoremFamily& family : tables_.theorem.families()) {
        const MuPattern dual_mu = dualized(family.mu);
        const bool self_dual = dual_mu == family.mu;
        for (int variant = 0; variant < (self_dual ? 1 : 2); ++variant) {
            const MuPattern& mu = variant == 0 ? family.mu : dual_mu;
            // Strip an overall twist d: drop d of the candidate's leading
            // zero digits and require the rest to equal the family.
            for (int d = 0; d <= dec.twist(); ++d) {
                const Decomposition shifted(p, dec.twist() - d, dec.factors());
                const MuMatch m = match_mu(mu, p, shifted);
                if (!m.matched)
                    continue;
                result.matches.push_back({family.id, m.free_value, d, variant == 1,
                                          any_collapsed(mu, p)});
            }
        }
    }
    result.dim = result.matches.empty() ? 0 : 1;
    return result;
}

ClassifyResult Classifier::classify(long long p, const Weight& w) const
{
    return classify(steinberg_decompose(p, w));
}

std::vector<InstantiatedPattern> Classifier::instantiate_patterns(long long p,
                                                                  long long max_r) const
{
    require_prime(p);
    if (max_r < 1)
        throw std::invalid_argument("max_r must be positive");
    std::vector<InstantiatedPattern> out;
    for (const TheoremFamily& family : tables_.theorem.families()) {
        const MuPattern dual_mu = dualized(family.mu);
        const bool self_dual = dual_mu == family.mu;
        for (int variant = 0; variant < (self_dual ? 1 : 2); ++variant) {
            const MuPattern& mu = variant == 0 ? family.mu : dual_mu;
            const long long r_lo = mu.has_free ? 1 : -1;
            const long long r_hi = mu.has_free ? max_r : -1;
            for (long long r = r_lo; r <= r_hi; ++r) {
                const MuInstance inst = instantiate(mu, p, r);
                out.push_back({family.id, r, variant == 1,
                               Decomposition::from_digits(p, inst.digits), inst.all_zero,
                               inst.collapsed});
            }
        }
    }
    return out;
}

} // namespace sl3coh
