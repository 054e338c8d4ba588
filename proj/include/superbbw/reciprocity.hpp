#pragma once

#include <map>
#include <string>

#include "superbbw/algebra.hpp"
#include "superbbw/characters.hpp"
#include "superbbw/weyl.hpp"

namespace superbbw {

// Sharpened dominance: every even positive coroot pairs strictly positively
// against lam + rho of the Borel, so the reflection through any even wall
// moves the shifted weight strictly down.  Requires lam integral dominant.
bool tilde_dominant_test(const Weight& lam, const BorelData& b);

// Expansion of the Euler form E(lamp) into simple finite-dimensional
// characters: E(lamp) = sum of coeffs[Lambda] * ch L_Lambda, with exact
// integer coefficients read off the composition series of the generalised
// Kac module sharing the highest weight.  known is false when the simple
// characters of the block at hand are not implemented (note says why).
// When a window is supplied, both sides of the expansion are evaluated on
// it and a mismatch throws.
struct EulerRow {
    Weight top;                          // lamp
    std::map<Weight, long long> coeffs;  // Lambda -> multiplicity of ch L_Lambda
    bool known = false;
    std::string note;
};
EulerRow euler_into_simples(const Algebra& algebra, const Weight& lamp, const BorelData& b,
                            CharRing& ring, const Window* win = nullptr);

// Character of the projective cover of L(lam) in the finite-dimensional
// category, truncated to the window: the sum of the Euler forms of the
// weights whose generalised Kac modules contain L(lam), each evaluated
// through the shifted-orbit sum.  Blocks without implemented simple
// characters are rejected.
FormalCharacter projective_character(const Algebra& algebra, const Weight& lam,
                                     const BorelData& b, CharRing& ring, const Window& win);

enum class ReciprocityOutcome { Verified, NotApplicable };

// One verified/unverifiable mark per Euler column entering the projective
// character.  reason is empty exactly when outcome is Verified.
struct ColumnVerdict {
    ReciprocityOutcome outcome = ReciprocityOutcome::NotApplicable;
    std::string reason;
};

// Outcome of checking (P_lam : K_lamp) = a_{lam,lamp} = [K_lamp : L_lam].
// coefficients holds the row a_{lam, .}; ch_p is the projective character
// from the structural route and assembled is the same character rebuilt as
// sum of a_{lam,lamp} E(lamp) through the shifted-orbit sums.  Both are kept
// so callers can print the two routes side by side.
struct ReciprocityReport {
    Weight lam;
    ReciprocityOutcome outcome = ReciprocityOutcome::NotApplicable;
    std::string reason;  // empty when Verified
    std::map<Weight, long long> coefficients;
    FormalCharacter ch_p;
    FormalCharacter assembled;
    std::map<Weight, ColumnVerdict> verdicts;
};

// Checks the strengthened reciprocity at lam: the coefficient row must be
// nonnegative, supported on weights passing tilde_dominant_test, match the
// composition multiplicities [K_lamp : L_lam], and reassemble ch P exactly
// on the window.  Weights that are not relatively generic for the Borel, or
// whose block has no implemented simple characters, come back NotApplicable
// with the reason; the virtual row and both character routes are still
// reported whenever they are computable.
ReciprocityReport verify_reciprocity(const Algebra& algebra, const Weight& lam,
                                     const BorelData& b, const WeylGroup& W, CharRing& ring);

}  // namespace superbbw
