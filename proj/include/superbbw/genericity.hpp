#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superbbw/algebra.hpp"
#include "superbbw/weyl.hpp"

namespace superbbw {

struct GammaEntry {
    Weight sum;
    std::uint32_t mask;  // bit i set = base[i] participates
};

// All subset sums of a family of odd roots, with the subset recorded.
struct GammaMultiset {
    std::vector<Weight> base;
    std::vector<GammaEntry> entries;  // sorted by (sum, mask)

    bool contains_sum(const Weight& w) const;
};

// Subsets of the odd positive roots of b.
GammaMultiset gamma_plus(const BorelData& b);
// Subsets of all odd roots, both signs.
GammaMultiset gamma_tilde(const BorelData& b);

struct TypicalityReport {
    bool typical = true;
    int degree = 0;                 // largest pairwise orthogonal witness set
    std::vector<Weight> witnesses;  // isotropic positive roots orthogonal to lam+rho
};
TypicalityReport typicality(const Weight& lam, const BorelData& b);

enum class GenericMode { GammaPlus, GammaTilde, Full };

struct GenericnessReport {
    bool generic = false;
    GenericMode mode = GenericMode::GammaPlus;
    std::string reason;
    std::optional<Weight> witness;  // first shifted weight that broke the requirement
};

// GammaPlus/GammaTilde: every lam - s lies in one open dominant chamber
// after the rho0 shift (in particular each is circle-regular).  Full: every
// Gamma-plus shift is itself GammaTilde-generic.
GenericnessReport genericness(const Weight& lam, const BorelData& b, const WeylGroup& W,
                              GenericMode mode);

// Parabolic attached to the non-isotropic simple roots of b: the largest one
// whose nilradical is spanned by roots that can pair nontrivially against
// isotropic directions.
struct ParabolicData {
    std::vector<Weight> anisotropic_simples;  // even simples of b plus anisotropic odd simples
    std::vector<Weight> levi_even_positive;
    std::vector<Weight> levi_even_simples;
    std::vector<Weight> levi_odd_positive;
    std::vector<Weight> u_even;  // even roots in the nilradical
    std::vector<Weight> u_odd;

    std::size_t dim_u0() const { return u_even.size(); }
};
ParabolicData max_typical_parabolic(const BorelData& b);

// Levi dominance: nonnegative coroot pairings against the anisotropic
// simple roots.
bool levi_dominant(const Weight& lam, const ParabolicData& p, const RootDatum& datum);

// True when every Levi-dominant member of lam - shifts lies in the closed
// dominant chamber containing lam (rho0-shifted).  lam itself must be
// Levi-dominant.
bool relative_genericness(const Weight& lam, const BorelData& b, const WeylGroup& W,
                          const GammaMultiset& shifts, const ParabolicData& p);

}  // namespace superbbw
