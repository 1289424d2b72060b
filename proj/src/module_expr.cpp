#include "sl3coh/module_expr.hpp"

#include "sl3coh/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl3coh {

bool ModuleExpr::is_semisimple() const
{
    return std::all_of(summands.begin(), summands.end(),
                       [](const Chain& c) { return c.size() == 1; });
}

bool operator==(const ModuleExpr& lhs, const ModuleExpr& rhs)
{
    auto l = lhs.summands;
    auto r = rhs.summands;
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    return l == r;
}

std::ostream& operator<<(std::ostream& os, const ModuleExpr& m)
{
    if (m.is_zero())
        return os << "0";
    for (std::size_t i = 0; i < m.summands.size(); ++i) {
        if (i > 0)
            os << '+';
        const Chain& c = m.summands[i];
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j > 0)
                os << '|';
            os << c[j];
        }
    }
    return os;
}

std::string to_string(const ModuleExpr& m)
{
    std::ostringstream os;
    os << m;
    return os.str();
}

ModuleExpr dualize(const ModuleExpr& m)
{
    ModuleExpr out;
    out.summands.reserve(m.summands.size());
    for (const Chain& c : m.summands) {
        Chain d;
        d.reserve(c.size());
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            d.push_back(dual(*it));
        out.summands.push_back(std::move(d));
    }
    return out;
}

std::vector<Weight> head(const ModuleExpr& m)
{
    std::vector<Weight> out;
    out.reserve(m.summands.size());
    for (const Chain& c : m.summands) {
        if (c.empty())
            throw std::logic_error("empty chain in ModuleExpr");
        out.push_back(c.back());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> socle(const ModuleExpr& m)
{
    std::vector<Weight> out;
    out.reserve(m.summands.size());
    for (const Chain& c : m.summands) {
        if (c.empty())
            throw std::logic_error("empty chain in ModuleExpr");
        out.push_back(c.front());
    }
    std::sort(out.begin(), out.end());
    return out;
}

int hom_to_simple(const ModuleExpr& m, const Weight& s)
{
    if (!is_dominant(s))
        throw std::invalid_argument("hom_to_simple requires a dominant weight, got " + to_string(s));
    int count = 0;
    for (const Chain& c : m.summands)
        if (c.back() == s)
            ++count;
    return count;
}

ModuleExpr induced_structure(long long p, const Weight& lam)
{
    const auto linked = enumerate_g1_linked(p);
    if (!std::binary_search(linked.begin(), linked.end(), lam))
        throw std::domain_error("induced_structure: " + to_string(lam) +
                                " is not G1-linked to (0,0) for p=" + std::to_string(p));
    if (p > 2 && lam == Weight{p - 2, p - 2})
        return {{{lam, Weight{0, 0}}}};
    return ModuleExpr::simple(lam);
}

} // namespace sl3coh
