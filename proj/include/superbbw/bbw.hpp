#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superbbw/borel_moves.hpp"
#include "superbbw/characters.hpp"
#include "superbbw/genericity.hpp"

namespace superbbw {

enum class ConstituentKind { SimpleModule, KacModule, DualKacModule, EulerOnly };

struct Constituent {
    int degree = 0;
    ConstituentKind kind = ConstituentKind::SimpleModule;
    Weight hw;
    std::optional<Weight> top;  // highest weight of the top layer when known
    std::optional<VirtualG0Sum> character;
    std::string note;
};

struct SupportRow {
    int degree = 0;
    std::vector<Weight> candidates;  // possible constituent highest weights
};

struct CohomologyReport {
    bool complete = false;
    std::vector<Constituent> constituents;  // sorted by degree
    std::size_t degree_cap = 0;             // all degrees above this vanish
    VirtualG0Sum euler;                     // Euler form of the input weight
    std::vector<SupportRow> support;        // populated for partial answers
    std::vector<std::string> notes;
    Weight normalized;          // weight after the raising normalization
    int normalization_shift = 0;
};

struct BBWTarget {
    BorelData borel;
    std::optional<ParabolicData> parabolic;  // radical cohomology target
};

// One raising step of the normalization: an even reflection that is simple
// for b (directly or as the double of an anisotropic odd simple root) with
// strictly negative shifted pairing.
struct DemazureStep {
    Weight result;
    Weight alpha;
};
std::optional<DemazureStep> demazure_step(const Weight& mu, const BorelData& b, const WeylGroup& W);

// Cohomology of the line twisted by mu along the nilradical determined by
// the target.  Complete answers cover: typical weights, the distinguished
// Borel of the type I families, the distinguished Borel of the families with
// a one-dimensional top gradation piece, and fully generic weights.
// Everything else returns a partial report (degree cap, per-degree candidate
// weights, Euler form).
CohomologyReport solve_bbw(const Weight& mu, const BBWTarget& target, const WeylGroup& W,
                           CharRing& ring);

}  // namespace superbbw
