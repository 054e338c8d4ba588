#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superbbw/rational.hpp"

namespace superbbw {

// A point of h*, stored as exact rational coordinates against the standard
// delta/epsilon basis.  delta coordinates come first in comparisons so that
// printed orderings are stable.
struct Weight {
    std::vector<Rat> d;  // delta coordinates
    std::vector<Rat> e;  // epsilon coordinates

    Weight() = default;
    Weight(std::vector<Rat> dd, std::vector<Rat> ee) : d(std::move(dd)), e(std::move(ee)) {}

    static Weight zero(std::size_t nd, std::size_t ne) {
        return Weight(std::vector<Rat>(nd, Rat(0)), std::vector<Rat>(ne, Rat(0)));
    }

    bool is_zero() const {
        for (const auto& x : d)
            if (x != Rat(0)) return false;
        for (const auto& x : e)
            if (x != Rat(0)) return false;
        return true;
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(const Weight& a) {
        Weight r = a;
        for (auto& x : r.d) x = -x;
        for (auto& x : r.e) x = -x;
        return r;
    }
    friend Weight operator*(const Rat& c, Weight a) {
        for (auto& x : a.d) x *= c;
        for (auto& x : a.e) x *= c;
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.d == b.d && a.e == b.e; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    // Lexicographic order on (d, e); used only for deterministic sorting.
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.d != b.d) return a.d < b.d;
        return a.e < b.e;
    }

    // Plain coordinate rendering, e.g. "2d1+3e1-e2"; "0" for the origin.
    std::string str() const {
        std::string out;
        auto emit = [&out](const Rat& c, char sym, std::size_t idx) {
            if (c == Rat(0)) return;
            if (c > Rat(0) && !out.empty()) out += "+";
            if (c == Rat(-1))
                out += "-";
            else if (c != Rat(1))
                out += to_string(c);
            out += sym;
            out += std::to_string(idx + 1);
        };
        for (std::size_t i = 0; i < d.size(); ++i) emit(d[i], 'd', i);
        for (std::size_t i = 0; i < e.size(); ++i) emit(e[i], 'e', i);
        return out.empty() ? "0" : out;
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t seed = 0x5eed;
        for (const auto& x : w.d) hash_combine(seed, hash_value(x));
        hash_combine(seed, 0xabcdef);
        for (const auto& x : w.e) hash_combine(seed, hash_value(x));
        return seed;
    }
};

}  // namespace superbbw
