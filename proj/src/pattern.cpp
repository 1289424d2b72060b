#include "sl3coh/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sl3coh {

namespace {

// Minimal cursor over the pattern text; all errors carry the full text.
struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    bool consume(char c)
    {
        if (peek() != c)
            return false;
        ++pos;
        return true;
    }
    void expect(char c)
    {
        if (!consume(c))
            fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw PatternError("pattern '" + text + "': " + what + " at offset " +
                           std::to_string(pos));
    }
    long long integer()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (text[pos++] - '0');
        return v;
    }
};

CoordPattern parse_coord(Cursor& c)
{
    if (c.consume('p')) {
        c.expect('-');
        return {-c.integer(), true};
    }
    return {c.integer(), false};
}

WeightPattern parse_weight(Cursor& c)
{
    WeightPattern w;
    c.expect('(');
    w.a = parse_coord(c);
    c.expect(',');
    w.b = parse_coord(c);
    c.expect(')');
    return w;
}

// '^[' index ']' with index := int | i | i+int | r | r+int.
// Returns the twist together with the free-index name, if any.
std::pair<TwistPattern, char> parse_twist(Cursor& c)
{
    TwistPattern t;
    char free_name = '\0';
    if (!c.consume('^'))
        return {t, free_name};
    c.expect('[');
    if (c.peek() == 'i' || c.peek() == 'r') {
        free_name = c.text[c.pos++];
        t.has_free = true;
        if (c.consume('+'))
            t.base = c.integer();
    } else {
        t.base = c.integer();
    }
    c.expect(']');
    return {t, free_name};
}

} // namespace

WeightPattern parse_weight_pattern(const std::string& text)
{
    Cursor c{text};
    WeightPattern w = parse_weight(c);
    if (!c.done())
        c.fail("trailing characters");
    return w;
}

MuPattern parse_mu_pattern(const std::string& text)
{
    Cursor c{text};
    MuPattern m;
    char free_name = '\0';
    long long last_pos_at_min = -1;
    do {
        FactorPattern f;
        f.weight = parse_weight(c);
        auto [twist, fname] = parse_twist(c);
        f.twist = twist;
        if (fname != '\0') {
            if (free_name != '\0' && free_name != fname)
                c.fail("mixed free indices");
            free_name = fname;
        }
        m.factors.push_back(f);
    } while (c.consume('*'));
    if (!c.done())
        c.fail("trailing characters");

    m.has_free = free_name != '\0';
    m.free_min = free_name == 'r' ? 1 : 0;
    // Factor positions must be strictly increasing for every admissible index.
    for (const FactorPattern& f : m.factors) {
        const long long pos = f.twist.eval(m.has_free ? m.free_min : 0);
        if (pos <= last_pos_at_min)
            c.fail("factor positions not strictly increasing");
        last_pos_at_min = pos;
    }
    return m;
}

ValuePattern parse_value_pattern(const std::string& text)
{
    Cursor c{text};
    ValuePattern v;
    do {
        std::vector<WeightPattern> chain;
        do {
            chain.push_back(parse_weight(c));
        } while (c.consume('|'));
        v.chains.push_back(std::move(chain));
    } while (c.consume('+'));
    if (!c.done())
        c.fail("trailing characters");
    return v;
}

ModuleExpr ValuePattern::eval(long long p) const
{
    ModuleExpr m;
    for (const auto& chain : chains) {
        Chain c;
        c.reserve(chain.size());
        for (const WeightPattern& w : chain)
            c.push_back(w.eval(p));
        m.summands.push_back(std::move(c));
    }
    return m;
}

namespace {

std::string render_coord(const CoordPattern& c)
{
    if (c.from_p)
        return "p-" + std::to_string(-c.offset);
    return std::to_string(c.offset);
}

std::string render_twist(const TwistPattern& t, long long free_min)
{
    if (!t.has_free && t.base == 0)
        return "";
    std::string idx;
    if (t.has_free) {
        idx = free_min == 1 ? "r" : "i";
        if (t.base != 0)
            idx += "+" + std::to_string(t.base);
    } else {
        idx = std::to_string(t.base);
    }
    return "^[" + idx + "]";
}

} // namespace

std::string render(const WeightPattern& w)
{
    return "(" + render_coord(w.a) + "," + render_coord(w.b) + ")";
}

std::string render(const MuPattern& m)
{
    std::string out;
    for (std::size_t k = 0; k < m.factors.size(); ++k) {
        if (k > 0)
            out += '*';
        out += render(m.factors[k].weight);
        out += render_twist(m.factors[k].twist, m.free_min);
    }
    return out;
}

std::string render(const ValuePattern& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.chains.size(); ++i) {
        if (i > 0)
            out += '+';
        for (std::size_t j = 0; j < v.chains[i].size(); ++j) {
            if (j > 0)
                out += '|';
            out += render(v.chains[i][j]);
        }
    }
    return out;
}

WeightPattern dualized(const WeightPattern& w)
{
    return {w.b, w.a};
}

MuPattern dualized(const MuPattern& m)
{
    MuPattern out = m;
    for (FactorPattern& f : out.factors)
        f.weight = dualized(f.weight);
    return out;
}

ValuePattern dualized(const ValuePattern& v)
{
    ValuePattern out;
    for (const auto& chain : v.chains) {
        std::vector<WeightPattern> d;
        d.reserve(chain.size());
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            d.push_back(dualized(*it));
        out.chains.push_back(std::move(d));
    }
    return out;
}

MuInstance instantiate(const MuPattern& m, long long p, long long free_value)
{
    MuInstance inst;
    long long max_pos = 0;
    for (const FactorPattern& f : m.factors)
        max_pos = std::max(max_pos, f.twist.eval(free_value));
    inst.digits.assign(static_cast<std::size_t>(max_pos) + 1, Weight{0, 0});
    inst.all_zero = true;
    for (const FactorPattern& f : m.factors) {
        const long long pos = f.twist.eval(free_value);
        const Weight w = f.weight.eval(p);
        inst.digits[static_cast<std::size_t>(pos)] = w;
        if (w == Weight{0, 0})
            inst.collapsed.push_back(pos);
        else
            inst.all_zero = false;
    }
    return inst;
}

namespace {

// Exactness via counting: when every factor agrees with the digit at its
// position, the candidate's remaining positions are all zero iff its non-zero
// digits are exactly the non-collapsed factors (positions are distinct).
bool match_at(const MuPattern& m, long long p, const Decomposition& cand, long long free_value,
              int nonzero_digits)
{
    int matched = 0;
    for (const FactorPattern& f : m.factors) {
        const Weight w = f.weight.eval(p);
        if (cand.digit(f.twist.eval(free_value)) != w)
            return false;
        if (w != Weight{0, 0})
            ++matched;
    }
    return matched == nonzero_digits;
}

} // namespace

MuMatch match_mu(const MuPattern& m, long long p, const Decomposition& cand)
{
    if (cand.p() != p)
        throw std::invalid_argument("decomposition prime does not match pattern evaluation prime");

    int nonzero_digits = 0;
    for (const Weight& f : cand.factors())
        if (f != Weight{0, 0})
            ++nonzero_digits;

    bool free_relevant = false;
    bool all_zero = true;
    bool literal = true;
    for (const FactorPattern& f : m.factors) {
        literal = literal && !f.weight.a.from_p && !f.weight.b.from_p;
        const Weight w = f.weight.eval(p);
        if (w == Weight{0, 0})
            continue;
        all_zero = false;
        if (f.twist.has_free)
            free_relevant = true;
        // Factors at fixed positions constrain every index value alike.
        else if (cand.digit(f.twist.base) != w)
            return {};
    }
    // A family annihilated by the mod-p reading matches nothing; a literal
    // zero-weight pattern legitimately matches the zero weight.
    if (all_zero && !literal)
        return {};

    if (!m.has_free)
        return {match_at(m, p, cand, 0, nonzero_digits), -1, false};
    if (!free_relevant)
        return {match_at(m, p, cand, m.free_min, nonzero_digits), -1, true};

    // A non-collapsed factor at a free position pins the index; anything past
    // the candidate's digits cannot match.
    for (long long v = m.free_min; v <= cand.digit_end() + 1; ++v)
        if (match_at(m, p, cand, v, nonzero_digits))
            return {true, v, false};
    return {};
}

} // namespace sl3coh
