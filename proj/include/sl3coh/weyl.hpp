#pragma once

// The six-element Weyl group of A2 acting on weights through the dot action
// w.l = w(l + rho) - rho with rho = (1,1), and the linkage predicates to the
// zero weight that drive every vanishing argument downstream.
//
// The dot action is implemented twice on purpose: once as closed affine forms
// and once from the defining reflection matrices. Tests hold the two routes
// together; transcription slips in either one cannot survive.

#include "sl3coh/weight.hpp"

#include <array>
#include <string>
#include <vector>

namespace sl3coh {

enum class WeylElement { e, s_alpha, s_beta, s_beta_alpha, s_alpha_beta, w0 };

inline constexpr std::array<WeylElement, 6> kWeylElements = {
    WeylElement::e,          WeylElement::s_alpha,      WeylElement::s_beta,
    WeylElement::s_beta_alpha, WeylElement::s_alpha_beta, WeylElement::w0,
};

int length(WeylElement w);
std::string name(WeylElement w);

// Closed forms of the dot action.
Weight dot_action(WeylElement w, const Weight& lam);

// Same action computed as w(lam + rho) - rho with explicit 2x2 reflection
// matrices in the fundamental-weight basis.
Weight dot_action_from_definition(WeylElement w, const Weight& lam);

// lam lies in the affine orbit W_p . 0, i.e. lam - w.0 is in p*ZR for some w.
bool g_linked_to_zero(long long p, const Weight& lam);

// lam0 restricted; lam0 = w.0 componentwise mod p for some w.
bool g1_linked_restricted(long long p, const Weight& lam0);

// The restricted weights G1-linked to (0,0): residues of the six w.0 mod p,
// duplicates collapsed (coincidences occur for p = 2, 3). Sorted.
std::vector<Weight> enumerate_g1_linked(long long p);

} // namespace sl3coh
