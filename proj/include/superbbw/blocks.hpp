#pragma once

#include <map>
#include <string>
#include <vector>

#include "superbbw/algebra.hpp"
#include "superbbw/characters.hpp"
#include "superbbw/weyl.hpp"

namespace superbbw {

// Shape of the Ext graph of an atypical osp(m|2) block: a one-sided chain
// with a doubled bottom (Dinf) or a two-sided chain joined at a single
// bottom weight (Ainfinf).
enum class QuiverType { Dinf, Ainfinf };

// Position inside a chain.  branch is 0 on Dinf chains and at the shared
// Ainfinf bottom; +1/-1 names the Ainfinf branch for k >= 1.  Negative k
// addresses the non-dominant delta-flipped companions.
struct ChainSlot {
    int k = 0;
    int branch = 0;

    friend bool operator==(const ChainSlot& a, const ChainSlot& b) {
        return a.k == b.k && a.branch == b.branch;
    }
    friend bool operator<(const ChainSlot& a, const ChainSlot& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.branch < b.branch;
    }
    std::string str() const;
};

struct ChainMember {
    ChainSlot slot;
    Weight weight;
    Weight atypical_root;  // isotropic positive root orthogonal to weight+rho
};

// An atypical block of osp(m|2) with the distinguished Borel subalgebra:
// the dominant weights sharing one central character, indexed so that the
// delta-flip reflection s acts by s.lam(k) = lam(1-k) on Dinf chains and
// s.lam(k,b) = lam(-k,b) on Ainfinf chains.
struct BlockChart {
    Algebra algebra;
    BorelData borel;  // distinguished
    QuiverType quiver = QuiverType::Dinf;
    int radius = 0;
    std::vector<ChainMember> chain;  // ascending (k, branch)

    const ChainMember* find(const ChainSlot& s) const;
    int max_k() const;
    // Merges (0, +-1) into the shared bottom slot.
    ChainSlot normalize(ChainSlot s) const;
    // Dot action of the reflection flipping the delta axis.
    Weight s_dot(const Weight& w) const;
    // Weight at any integer position; negative k through the s action.
    // Throws when |k| exceeds the enumerated range.
    Weight weight_at(ChainSlot s) const;
};

// Walks the central-character class of lam outward from lam and indexes the
// chain.  radius bounds the |delta coordinate of member + rho|; too small a
// radius to anchor the bottom of the chain is rejected.
BlockChart enumerate_block(const Algebra& algebra, const Weight& lam, int radius);

// Windowed character data for one chart.  kbar is the parabolically induced
// character ch L0(mu) * prod(1+e^{-gamma}) / (1-e^{-2 delta}) with L0 the
// simple module of the orthogonal-part Levi; euler its s-alternation.
struct BlockCharacters {
    std::map<ChainSlot, FormalCharacter> kbar;
    std::map<ChainSlot, FormalCharacter> euler;
    std::map<ChainSlot, FormalCharacter> simples;
    std::map<ChainSlot, FormalCharacter> kac;
    std::map<ChainSlot, FormalCharacter> projective;
};

// Window wide enough that every resolution sum used by block_characters
// stabilizes: it reaches from the top chain weight down past twice the chain
// span in the delta direction plus the orthogonal-part spread.
Window default_block_window(const BlockChart& chart);

FormalCharacter kbar_character(const BlockChart& chart, CharRing& ring, const Weight& hw,
                               const Window& win);

// Simple characters from the alternating kbar resolutions of the two bottom
// modules plus upward recursion, then Kac and projective characters from
// their Euler forms.  Validates stabilization inside the window and
// positivity of every simple character.
BlockCharacters block_characters(const BlockChart& chart, CharRing& ring, const Window& win);

// Radical layer tables, top first, entries naming chain slots.
struct BlockStructure {
    std::map<ChainSlot, std::vector<std::vector<ChainSlot>>> kac_layers;
    std::map<ChainSlot, std::vector<std::vector<ChainSlot>>> projective_layers;
};
BlockStructure block_structure(const BlockChart& chart);

// Homology tables up to degree_bound.  kac_u_homology lists the Levi highest
// weights of H_j(ubar, K) per degree j; proj_n_cohomology lists the full
// h-weights of H^j(n, P).  Rows are emitted only for slots whose upper
// neighbour is inside the enumerated range.
struct KostantTables {
    int degree_bound = 0;
    std::map<ChainSlot, std::vector<std::vector<Weight>>> kac_u_homology;
    std::map<ChainSlot, std::vector<std::vector<Weight>>> proj_n_cohomology;
    std::map<ChainSlot, Weight> kac_nbar_h0;  // single weight per Kac module
};
KostantTables kostant_tables(const BlockChart& chart, const WeylGroup& W, int degree_bound);

// Projective decomposition of the module induced from the even simple with
// highest weight lam.  Each projective P(Lambda) enters as often as L0(lam)
// appears in the restriction of L(Lambda) to the even part; restrictions of
// atypical simples come from block charts enumerated on demand.  The counts
// are proved by reassembling the full induced character from projective
// characters; a mismatch (an indexing bug) throws.
std::map<Weight, long long> induced_projective_decomposition(const Algebra& algebra,
                                                             CharRing& ring, const Weight& lam);

// Euler form of the slot's weight as an exact virtual even-character sum
// (no window); the building block of the peeling cross-check.
VirtualG0Sum projective_g0_sum(const BlockChart& chart, CharRing& ring, const ChainSlot& slot);

}  // namespace superbbw
