#include "superbbw/parse.hpp"

#include <cctype>
#include <vector>

#include "superbbw/util.hpp"

namespace superbbw {

namespace {

[[noreturn]] void bad(const std::string& what, std::size_t pos) {
    fail_parse(what + " at position " + std::to_string(pos + 1));
}

// Single-pass scanner with 1-based positions in diagnostics.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) bad("expected " + what, pos);
    }
    void skip_spaces() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    long long integer(const std::string& what) {
        std::size_t start = pos;
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) bad("expected " + what, pos);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1LL << 40)) bad(what + " too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }

    Rat rational(const std::string& what) {
        long long num = integer(what);
        if (!eat('/')) return Rat(num);
        std::size_t dpos = pos;
        long long den = integer("denominator");
        if (den == 0) bad("zero denominator", dpos);
        return Rat(num, den);
    }
};

}  // namespace

AlgebraSpec parse_algebra(const std::string& text) {
    Cursor c{text};
    c.skip_spaces();
    std::size_t name_pos = c.pos;
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(c.peek()))) {
        name += static_cast<char>(std::tolower(static_cast<unsigned char>(c.peek())));
        ++c.pos;
    }
    if (name.empty()) bad("expected an algebra family name", c.pos);

    AlgebraSpec spec;
    if (name == "gl" || name == "sl" || name == "osp") {
        spec.family = name == "gl" ? Family::gl : name == "sl" ? Family::sl : Family::osp;
        c.expect('(', "'('");
        std::size_t mpos = c.pos;
        long long m = c.integer("an integer rank");
        if (m <= 0) bad("rank must be positive", mpos);
        c.expect('|', "'|'");
        std::size_t npos = c.pos;
        long long n = c.integer("an integer rank");
        if (n <= 0) bad("rank must be positive", npos);
        c.expect(')', "')'");
        if (spec.family == Family::osp) {
            // The label carries the symplectic dimension 2n.
            if (n % 2 != 0) bad("the symplectic dimension must be even", npos);
            n /= 2;
        }
        spec.m = static_cast<int>(m);
        spec.n = static_cast<int>(n);
    } else if (name == "d") {
        spec.family = Family::d21;
        spec.m = 2;
        spec.n = 1;
        c.expect('(', "'('");
        c.expect('2', "'2'");
        c.expect(',', "','");
        c.expect('1', "'1'");
        c.expect(';', "';'");
        spec.alpha = c.rational("a rational parameter");
        c.expect(')', "')'");
    } else if (name == "f") {
        spec.family = Family::f4;
        c.expect('(', "'('");
        c.expect('4', "'4'");
        c.expect(')', "')'");
    } else if (name == "g") {
        spec.family = Family::g3;
        c.expect('(', "'('");
        c.expect('3', "'3'");
        c.expect(')', "')'");
    } else {
        bad("unknown algebra family '" + name + "'", name_pos);
    }
    c.skip_spaces();
    if (!c.done()) bad("unexpected trailing text", c.pos);
    return spec;
}

Rat parse_rat(const std::string& text) {
    Cursor c{text};
    c.skip_spaces();
    Rat r = c.rational("a rational number");
    c.skip_spaces();
    if (!c.done()) bad("unexpected trailing text", c.pos);
    return r;
}

Weight parse_weight(const std::string& text, const RootDatum& datum) {
    Cursor c{text};
    c.skip_spaces();
    Weight w = datum.zero_weight();
    if (c.eat('0')) {
        c.skip_spaces();
        if (!c.done()) bad("unexpected trailing text", c.pos);
        return w;
    }
    bool first = true;
    while (true) {
        c.skip_spaces();
        if (c.done()) {
            if (first) bad("expected a weight term", c.pos);
            break;
        }
        Rat sign(1);
        if (c.eat('-'))
            sign = Rat(-1);
        else if (!c.eat('+') && !first)
            bad("expected '+' or '-'", c.pos);
        c.skip_spaces();
        Rat coef(1);
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) coef = c.rational("a coefficient");
        char sym = c.peek();
        if (sym != 'd' && sym != 'e') bad("expected coordinate symbol d or e", c.pos);
        ++c.pos;
        std::size_t ipos = c.pos;
        long long idx = c.integer("a coordinate index");
        std::size_t limit = sym == 'd' ? datum.nd : datum.ne;
        if (idx < 1 || static_cast<std::size_t>(idx) > limit)
            bad("coordinate " + std::string(1, sym) + std::to_string(idx) + " is out of range",
                ipos - 1);
        if (sym == 'd')
            w.d[static_cast<std::size_t>(idx - 1)] += sign * coef;
        else
            w.e[static_cast<std::size_t>(idx - 1)] += sign * coef;
        first = false;
    }
    return datum.canonicalize(w);
}

BorelData parse_borel(const std::string& text, const RootDatum& datum) {
    Cursor c{text};
    c.skip_spaces();
    std::size_t rest = c.pos;
    std::string lowered;
    for (std::size_t i = rest; i < text.size(); ++i)
        lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    while (!lowered.empty() && std::isspace(static_cast<unsigned char>(lowered.back())))
        lowered.pop_back();
    if (lowered == "distinguished") return distinguished_borel(datum);

    std::vector<std::string> tokens;
    std::string cur;
    for (std::size_t i = rest; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    if (tokens.empty()) bad("expected 'distinguished' or a coordinate sequence", rest);
    return borel_from_sequence(datum, tokens);
}

const WeylElement& parse_weyl_word(const std::string& text, const WeylGroup& W) {
    Cursor c{text};
    c.skip_spaces();
    std::string lowered;
    for (std::size_t i = c.pos; i < text.size(); ++i)
        lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    while (!lowered.empty() && std::isspace(static_cast<unsigned char>(lowered.back())))
        lowered.pop_back();
    if (lowered == "e" || lowered == "id") return W.identity();

    const WeylElement* acc = &W.identity();
    bool any = false;
    while (true) {
        c.skip_spaces();
        while (c.eat('*')) c.skip_spaces();
        if (c.done()) break;
        if (c.peek() == 's' || c.peek() == 'S') ++c.pos;
        std::size_t ipos = c.pos;
        long long idx = c.integer("a simple reflection index");
        if (idx < 1 || static_cast<std::size_t>(idx) > W.simple_count())
            bad("simple reflection index " + std::to_string(idx) + " is out of range", ipos);
        acc = &W.compose(*acc, W.simple_reflection(static_cast<std::size_t>(idx - 1)));
        any = true;
    }
    if (!any) bad("expected a Weyl word", c.pos);
    return *acc;
}

}  // namespace superbbw
