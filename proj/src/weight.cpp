#include "sl3coh/weight.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace sl3coh {

std::ostream& operator<<(std::ostream& os, const Weight& w)
{
    return os << '(' << w.a << ',' << w.b << ')';
}

std::string to_string(const Weight& w)
{
    std::ostringstream os;
    os << w;
    return os.str();
}

bool is_prime(long long p)
{
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void require_prime(long long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

long long guard_bound(long long p)
{
    // p^12, clamped so that a 13-digit recomposition cannot overflow.
    const long long cap = std::numeric_limits<long long>::max() / (2 * p);
    long long bound = 1;
    for (int i = 0; i < 12; ++i) {
        if (bound > cap / p)
            return cap;
        bound *= p;
    }
    return bound;
}

void require_within_guard(long long p, const Weight& w)
{
    const long long bound = guard_bound(p);
    if (w.a >= bound || w.b >= bound)
        throw std::domain_error("weight " + to_string(w) + " exceeds the guard bound p^12 for p=" +
                                std::to_string(p));
}

bool in_root_lattice(const Weight& w)
{
    return ((w.a - w.b) % 3) == 0;
}

bool in_p_scaled_root_lattice(long long p, const Weight& w)
{
    if (w.a % p != 0 || w.b % p != 0)
        return false;
    return in_root_lattice({w.a / p, w.b / p});
}

std::vector<Weight> padic_expand(long long p, const Weight& w)
{
    require_prime(p);
    if (!is_dominant(w))
        throw std::invalid_argument("padic_expand requires a dominant weight, got " + to_string(w));
    require_within_guard(p, w);

    std::vector<Weight> digits;
    long long a = w.a, b = w.b;
    while (a > 0 || b > 0) {
        digits.push_back({a % p, b % p});
        a /= p;
        b /= p;
    }
    if (digits.empty())
        digits.push_back({0, 0});
    return digits;
}

Decomposition::Decomposition(long long p, int twist, std::vector<Weight> factors)
    : p_(p), twist_(twist), factors_(std::move(factors))
{
    require_prime(p_);
    if (twist_ < 0)
        throw std::invalid_argument("negative twist");
    if (factors_.empty())
        throw std::invalid_argument("empty factor list");
    for (const Weight& f : factors_)
        if (!is_restricted(p_, f))
            throw std::invalid_argument("factor " + to_string(f) + " is not restricted for p=" +
                                        std::to_string(p_));
    const bool zero = factors_.size() == 1 && factors_[0] == Weight{0, 0} && twist_ == 0;
    if (!zero) {
        if (factors_.front() == Weight{0, 0})
            throw std::invalid_argument("leading zero factor must be absorbed into twist");
        if (factors_.back() == Weight{0, 0})
            throw std::invalid_argument("trailing zero factor must be trimmed");
    }
}

Decomposition Decomposition::from_digits(long long p, const std::vector<Weight>& digits)
{
    std::size_t first = 0;
    while (first < digits.size() && digits[first] == Weight{0, 0})
        ++first;
    if (first == digits.size())
        return Decomposition(p, 0, {Weight{0, 0}});
    std::size_t last = digits.size();
    while (digits[last - 1] == Weight{0, 0})
        --last;
    return Decomposition(p, static_cast<int>(first),
                         std::vector<Weight>(digits.begin() + first, digits.begin() + last));
}

bool Decomposition::is_zero_weight() const
{
    return twist_ == 0 && factors_.size() == 1 && factors_[0] == Weight{0, 0};
}

Weight Decomposition::digit(long long j) const
{
    if (j < twist_ || j >= digit_end())
        return {0, 0};
    return factors_[static_cast<std::size_t>(j - twist_)];
}

Weight Decomposition::weight() const
{
    Weight w{0, 0};
    long long scale = 1;
    for (long long j = 0; j < digit_end(); ++j) {
        const Weight d = digit(j);
        w.a += scale * d.a;
        w.b += scale * d.b;
        if (j + 1 < digit_end())
            scale *= p_;
    }
    return w;
}

Decomposition Decomposition::remainder() const
{
    if (is_zero_weight())
        return *this;
    if (twist_ > 0)
        return Decomposition(p_, twist_ - 1, factors_);
    std::vector<Weight> rest(factors_.begin() + 1, factors_.end());
    return from_digits(p_, rest);
}

std::ostream& operator<<(std::ostream& os, const Decomposition& d)
{
    bool first = true;
    for (std::size_t k = 0; k < d.factors().size(); ++k) {
        if (!first)
            os << '*';
        first = false;
        os << d.factors()[k];
        const long long pos = d.twist() + static_cast<long long>(k);
        if (pos > 0)
            os << "^[" << pos << ']';
    }
    return os;
}

std::string to_string(const Decomposition& d)
{
    std::ostringstream os;
    os << d;
    return os.str();
}

Decomposition steinberg_decompose(long long p, const Weight& w)
{
    return Decomposition::from_digits(p, padic_expand(p, w));
}

} // namespace sl3coh
