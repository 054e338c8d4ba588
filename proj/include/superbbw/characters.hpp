#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superbbw/algebra.hpp"
#include "superbbw/weyl.hpp"

namespace superbbw {

// Integer combination of exponentials e^{weight}.
struct FormalCharacter {
    std::unordered_map<Weight, long long, WeightHash> c;

    void add(const Weight& w, long long k);
    bool is_zero() const { return c.empty(); }
    long long at(const Weight& w) const;
    FormalCharacter& operator+=(const FormalCharacter& o);
    FormalCharacter& operator-=(const FormalCharacter& o);
    friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
    friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
    bool operator==(const FormalCharacter& o) const;
    std::vector<std::pair<Weight, long long>> sorted() const;
    // Exponent flip e^w -> e^{-w}.
    FormalCharacter flipped() const;
    std::size_t size() const { return c.size(); }
};

// Integer combination of irreducible even-part characters, keyed by their
// (weakly) dominant highest weights.  Ordered for deterministic printing.
struct VirtualG0Sum {
    std::map<Weight, long long> c;

    void add(const Weight& hw, long long k);
    bool is_zero() const { return c.empty(); }
    VirtualG0Sum& operator+=(const VirtualG0Sum& o);
    VirtualG0Sum& operator-=(const VirtualG0Sum& o);
    VirtualG0Sum operator-() const;
    bool operator==(const VirtualG0Sum& o) const;
    std::string str() const;
};

// Truncation region: weights nu with height(anchor - nu) <= depth, height
// measured in the simple-root basis of a fixed Borel.  The height functional
// is linear and positive on positive roots, so multiplying by series in
// e^{-positive} never resurrects discarded terms.
class Window {
public:
    Window(const BorelData& borel, Weight anchor, Rat depth);
    bool keeps(const Weight& nu) const;
    Rat drop(const Weight& nu) const;  // height(anchor - nu)
    const Weight& anchor() const { return anchor_; }
    Rat depth() const { return depth_; }
    // Largest height drop any single simple reflection can cause from nu;
    // used to mark the region where windowed data is complete.
    bool safe(const Weight& nu, const WeylGroup& W) const;

private:
    Weight anchor_;
    Rat depth_;
    std::vector<Rat> functional_;  // d block then e block
    std::size_t nd_, ne_;
};

// Character computations for one root datum.  Holds the Weyl group by
// reference and caches even-part irreducible characters.
class CharRing {
public:
    CharRing(const RootDatum& datum, const WeylGroup& W);

    const RootDatum& datum() const { return *datum_; }
    const WeylGroup& weyl() const { return *W_; }

    // Character of the irreducible module of the full even part with the
    // given dominant integral highest weight (Freudenthal recursion on the
    // positive definite companion form).
    const FormalCharacter& g0_simple(const Weight& hw);
    // Same over the subsystem spanned by the listed positive roots; the
    // orthogonal torus coordinates ride along unchanged.
    FormalCharacter subsystem_simple(const Weight& hw, const std::vector<Weight>& positive);

    // Virtual even character of one shifted orbit: 0 if lam is circle
    // singular, else (-1)^{l(w)} [dominant representative].
    VirtualG0Sum vwc(const Weight& lam);
    // Euler form as a finite sum of virtual even characters: sum of
    // vwc(lam - s) over all 2^{|odd positive|} subset sums s.
    VirtualG0Sum euler_shift_sum(const Weight& lam, const BorelData& b);
    // The same object computed the series way on a window:
    // sum_w (-1)^{l(w)} e^{w(lam+rho)-rho} * prod(1+e^{-gamma}) / prod(1-e^{-alpha}).
    FormalCharacter euler_series(const Weight& lam, const BorelData& b, const Window& win);

    FormalCharacter expand(const VirtualG0Sum& v);
    FormalCharacter expand_on_window(const VirtualG0Sum& v, const Window& win);

    static FormalCharacter truncate(const FormalCharacter& x, const Window& win);
    static FormalCharacter tensor(const FormalCharacter& x, const FormalCharacter& y, const Window* win);
    // x * (1 + e^{gamma})
    static FormalCharacter odd_factor(const FormalCharacter& x, const Weight& gamma, const Window* win);
    // x / (1 - e^{-alpha}) as a geometric series, truncated by the window.
    static FormalCharacter geometric(const FormalCharacter& x, const Weight& alpha, const Window& win);

    struct Decomposition {
        VirtualG0Sum parts;
        bool complete = true;
        FormalCharacter remainder;  // nonzero only when incomplete
    };
    // Peel a W-invariant character into irreducible even characters from the
    // top; on windowed input stops at the first unsafe extraction.
    Decomposition decompose_into_g0(const FormalCharacter& ch, const Window* win);

private:
    const RootDatum* datum_;
    const WeylGroup* W_;
    std::unordered_map<Weight, std::shared_ptr<const FormalCharacter>, WeightHash> cache_;

    FormalCharacter freudenthal(const Weight& hw, const std::vector<Weight>& positive,
                                const std::vector<Weight>& simples,
                                const std::vector<const WeylElement*>& subgroup);
};

}  // namespace superbbw
