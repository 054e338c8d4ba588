#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <string>

#include "superbbw/util.hpp"

namespace superbbw {

// All weight coordinates are exact rationals.  Values stay tiny (bounded by
// chain radii and rho shifts), well inside long long.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::size_t hash_value(const Rat& r) {
    std::size_t seed = std::hash<long long>{}(r.numerator());
    hash_combine(seed, std::hash<long long>{}(r.denominator()));
    return seed;
}

}  // namespace superbbw
