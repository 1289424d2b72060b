#include "sl3coh/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl3coh {

int length(WeylElement w)
{
    switch (w) {
    case WeylElement::e: return 0;
    case WeylElement::s_alpha: return 1;
    case WeylElement::s_beta: return 1;
    case WeylElement::s_beta_alpha: return 2;
    case WeylElement::s_alpha_beta: return 2;
    case WeylElement::w0: return 3;
    }
    throw std::logic_error("unknown Weyl element");
}

std::string name(WeylElement w)
{
    switch (w) {
    case WeylElement::e: return "e";
    case WeylElement::s_alpha: return "s_alpha";
    case WeylElement::s_beta: return "s_beta";
    case WeylElement::s_beta_alpha: return "s_beta_alpha";
    case WeylElement::s_alpha_beta: return "s_alpha_beta";
    case WeylElement::w0: return "w0";
    }
    throw std::logic_error("unknown Weyl element");
}

Weight dot_action(WeylElement w, const Weight& lam)
{
    const long long a = lam.a, b = lam.b;
    switch (w) {
    case WeylElement::e: return {a, b};
    case WeylElement::s_alpha: return {-a - 2, a + b + 1};
    case WeylElement::s_beta: return {a + b + 1, -b - 2};
    case WeylElement::s_beta_alpha: return {b, -a - b - 3};
    case WeylElement::s_alpha_beta: return {-a - b - 3, a};
    case WeylElement::w0: return {-b - 2, -a - 2};
    }
    throw std::logic_error("unknown Weyl element");
}

namespace {

// Linear action on (a,b) in the fundamental-weight basis:
// s_alpha: (a,b) -> (-a, a+b), s_beta: (a,b) -> (a+b, -b).
Weight reflect_alpha(const Weight& v) { return {-v.a, v.a + v.b}; }
Weight reflect_beta(const Weight& v) { return {v.a + v.b, -v.b}; }

Weight linear_action(WeylElement w, const Weight& v)
{
    switch (w) {
    case WeylElement::e: return v;
    case WeylElement::s_alpha: return reflect_alpha(v);
    case WeylElement::s_beta: return reflect_beta(v);
    case WeylElement::s_beta_alpha: return reflect_beta(reflect_alpha(v));
    case WeylElement::s_alpha_beta: return reflect_alpha(reflect_beta(v));
    case WeylElement::w0: return reflect_alpha(reflect_beta(reflect_alpha(v)));
    }
    throw std::logic_error("unknown Weyl element");
}

constexpr Weight kRho{1, 1};

} // namespace

Weight dot_action_from_definition(WeylElement w, const Weight& lam)
{
    const Weight shifted{lam.a + kRho.a, lam.b + kRho.b};
    const Weight moved = linear_action(w, shifted);
    return {moved.a - kRho.a, moved.b - kRho.b};
}

bool g_linked_to_zero(long long p, const Weight& lam)
{
    require_prime(p);
    for (WeylElement w : kWeylElements) {
        const Weight orbit = dot_action(w, {0, 0});
        if (in_p_scaled_root_lattice(p, {lam.a - orbit.a, lam.b - orbit.b}))
            return true;
    }
    return false;
}

namespace {

long long mod_p(long long v, long long p)
{
    return ((v % p) + p) % p;
}

} // namespace

bool g1_linked_restricted(long long p, const Weight& lam0)
{
    require_prime(p);
    if (!is_restricted(p, lam0))
        throw std::invalid_argument("g1_linked_restricted requires a restricted weight, got " +
                                    to_string(lam0));
    for (WeylElement w : kWeylElements) {
        const Weight orbit = dot_action(w, {0, 0});
        if (mod_p(orbit.a, p) == lam0.a && mod_p(orbit.b, p) == lam0.b)
            return true;
    }
    return false;
}

std::vector<Weight> enumerate_g1_linked(long long p)
{
    require_prime(p);
    std::vector<Weight> out;
    for (WeylElement w : kWeylElements) {
        const Weight orbit = dot_action(w, {0, 0});
        out.push_back({mod_p(orbit.a, p), mod_p(orbit.b, p)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace sl3coh
