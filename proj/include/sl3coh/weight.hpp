#pragma once

// Exact arithmetic on the SL3 weight lattice: weights in the fundamental-weight
// basis, base-p digit expansions, canonical Steinberg decompositions, duality
// and root-lattice membership. Coordinates are 64-bit; operations that expand
// digits enforce a guard bound (see guard_bound) so no intermediate overflows.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sl3coh {

struct Weight {
    long long a = 0;
    long long b = 0;

    friend auto operator<=>(const Weight&, const Weight&) = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
std::string to_string(const Weight& w);

inline bool is_dominant(const Weight& w) { return w.a >= 0 && w.b >= 0; }
inline bool is_restricted(long long p, const Weight& w)
{
    return is_dominant(w) && w.a < p && w.b < p;
}

// Simple duals swap coordinates: L(a,b)* = L(b,a).
inline Weight dual(const Weight& w) { return {w.b, w.a}; }

bool is_prime(long long p);
void require_prime(long long p);

// Largest admissible coordinate bound: p^12, clamped so that recomposing a
// full digit expansion stays within 64 bits.
long long guard_bound(long long p);
void require_within_guard(long long p, const Weight& w);

// (x,y) lies in the A2 root lattice Z<alpha,beta> with alpha=(2,-1),
// beta=(-1,2) iff x = y (mod 3).
bool in_root_lattice(const Weight& w);

// w = p*(x,y) with (x,y) in the root lattice.
bool in_p_scaled_root_lattice(long long p, const Weight& w);

// Base-p digit pairs of a dominant weight, least significant first; trailing
// zero pairs trimmed, except the zero weight which yields [(0,0)].
std::vector<Weight> padic_expand(long long p, const Weight& w);

// Canonical Steinberg form of a dominant weight: leading zero digits are
// absorbed into `twist`, interior zero digits stay in `factors`, trailing
// zeros are trimmed. The zero weight is {twist 0, factors [(0,0)]}.
class Decomposition {
  public:
    Decomposition(long long p, int twist, std::vector<Weight> factors);

    // Canonicalizes an arbitrary digit sequence (positions 0,1,2,...).
    static Decomposition from_digits(long long p, const std::vector<Weight>& digits);

    long long p() const { return p_; }
    int twist() const { return twist_; }
    const std::vector<Weight>& factors() const { return factors_; }

    bool is_zero_weight() const;

    // Digit at absolute position j (zero outside the factor window).
    Weight digit(long long j) const;
    // One past the last non-zero digit position.
    long long digit_end() const { return twist_ + static_cast<long long>(factors_.size()); }

    // Sum of p^j * digit(j).
    Weight weight() const;

    // Digits from position 1 on, re-canonicalized (the Frobenius untwist of
    // everything above the leading digit).
    Decomposition remainder() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

  private:
    long long p_;
    int twist_;
    std::vector<Weight> factors_;
};

std::ostream& operator<<(std::ostream& os, const Decomposition& d);
std::string to_string(const Decomposition& d);

Decomposition steinberg_decompose(long long p, const Weight& w);

} // namespace sl3coh
