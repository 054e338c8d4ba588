#pragma once

#include <string>

#include "superbbw/algebra.hpp"
#include "superbbw/weyl.hpp"

namespace superbbw {

// Algebra labels as typed on the command line: "gl(2|1)", "sl(3|2)",
// "osp(4|2)", "D(2,1;1/2)", "F(4)", "G(3)".  Family letters are accepted in
// either case.  Malformed text raises a parse error naming the 1-based
// offending position; range checks (sl needs m != n, the D(2,1;a) parameter
// avoids 0 and -1) are left to make_algebra.
AlgebraSpec parse_algebra(const std::string& text);

// "3", "-1/2"; the whole string must be consumed and the denominator must
// not vanish.
Rat parse_rat(const std::string& text);

// Weight literals in the same shape Weight::str prints: "2d1+3e1-e2",
// "1/2e1", "-d1", "0".  Repeated coordinates accumulate.  Indices are
// validated against the datum and the result is canonicalized.
Weight parse_weight(const std::string& text, const RootDatum& datum);

// "distinguished", or a shuffle of all coordinate symbols like "e1 d1 e2"
// (spaces or commas between tokens).
BorelData parse_borel(const std::string& text, const RootDatum& datum);

// Word in the even simple reflections: "s1 s2 s1" or "s2*s1" (the bare
// index "1" also works); "e" or "id" is the identity.  Letters multiply
// left to right, so the rightmost one acts first.
const WeylElement& parse_weyl_word(const std::string& text, const WeylGroup& W);

}  // namespace superbbw
