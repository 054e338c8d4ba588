#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "superbbw/weight.hpp"

namespace superbbw {

enum class Family { gl, sl, osp, d21, f4, g3 };

// Family plus its discrete parameters.  m counts epsilons for gl/sl(m|n) and
// is the orthogonal dimension for osp(m|2n); n counts deltas (osp uses 2n
// symplectic directions, i.e. n delta coordinates).
struct AlgebraSpec {
    Family family = Family::gl;
    int m = 0;
    int n = 0;
    Rat alpha = Rat(0);  // D(2,1;alpha) only

    std::string str() const;
};

struct SimpleRootInfo {
    Weight root;
    bool odd = false;
    bool isotropic = false;
};

class RootDatum;

// A positive system sharing the fixed even positive roots of the datum; only
// the odd positive set varies between Borel subalgebras.  Simple roots, rho1
// and rho are derived data.
struct BorelData {
    const RootDatum* datum = nullptr;
    std::vector<Weight> odd_positive;  // canonically sorted
    std::vector<SimpleRootInfo> simples;
    Weight rho1;
    Weight rho;  // rho0 - rho1
    bool distinguished = false;
    std::string label;

    bool odd_contains(const Weight& g) const;
    const SimpleRootInfo* find_simple(const Weight& root) const;
    std::vector<Weight> simple_roots() const;
    // Odd reflection at a simple isotropic root: gamma becomes -gamma.
    BorelData reflected(const Weight& gamma) const;
    std::string key() const;
};

enum class DominanceScope { g0, g };

// Immutable root datum of one basic classical Lie superalgebra.  The even
// positive system, the invariant bilinear form and rho0 are fixed once and
// shared by every Borel subalgebra.
class RootDatum {
public:
    AlgebraSpec spec;
    std::size_t nd = 0;  // delta coordinates
    std::size_t ne = 0;  // epsilon coordinates
    bool type_I = false;

    std::vector<Weight> even_positive;
    std::vector<Weight> even_simples;          // simple system of the even positive roots
    std::vector<Weight> odd_positive_distinguished;
    Weight rho0;

    // g2 root for the families whose distinguished gradation has a
    // one-dimensional top piece (osp(m|2), D(2,1;a), F(4), G(3)).
    std::optional<Weight> theta;
    // Coordinate flipped by the Z2 factor of W for those families:
    // (true, i) = delta i, (false, i) = epsilon i.
    std::optional<std::pair<bool, std::size_t>> z2_axis;

    // Bilinear form; aux is the sign-adjusted positive definite companion
    // used only inside Freudenthal recursions (same coroot pairings on
    // block-pure roots, strictly positive norms).
    Rat pair(const Weight& a, const Weight& b) const;
    Rat aux_pair(const Weight& a, const Weight& b) const;
    // 2<lam,alpha>/<alpha,alpha>; alpha must be non-isotropic.
    Rat coroot_pairing(const Weight& lam, const Weight& alpha) const;

    bool is_root(const Weight& w) const;
    bool is_even_root(const Weight& w) const;
    bool is_odd_root(const Weight& w) const;
    bool is_isotropic_root(const Weight& w) const;

    // Canonical coordinate representative (G(3): epsilon part projected to
    // sum zero; identity elsewhere).
    Weight canonicalize(const Weight& w) const;

    bool is_integral(const Weight& lam) const;
    bool g0_dominant(const Weight& lam) const;

    std::size_t rank() const { return nd + ne; }
    Weight zero_weight() const { return Weight::zero(nd, ne); }

private:
    friend std::shared_ptr<const RootDatum> make_algebra(const AlgebraSpec&);
    std::vector<std::vector<Rat>> gram_;
    std::vector<std::vector<Rat>> aux_gram_;
    std::unordered_set<Weight, WeightHash> root_set_;
    std::unordered_set<Weight, WeightHash> even_root_set_;
    Rat form_on(const std::vector<std::vector<Rat>>& g, const Weight& a, const Weight& b) const;
};

using Algebra = std::shared_ptr<const RootDatum>;

// Validates parameters (gl/osp m,n >= 1; sl m != n; alpha not in {0,-1}) and
// builds the datum with the conventions fixed in the CLI documentation.
Algebra make_algebra(const AlgebraSpec& spec);

BorelData distinguished_borel(const RootDatum& datum);
// tokens like {"e1","d1","e2"}: a shuffle of all epsilon and delta symbols,
// each block in increasing index order.
BorelData borel_from_sequence(const RootDatum& datum, const std::vector<std::string>& tokens);
// Direct construction from an odd positive set (validated: partition of the
// odd roots into +/- pairs, anisotropic odd roots kept positive, closure).
BorelData borel_from_odd_set(const RootDatum& datum, std::vector<Weight> odd, std::string label);

// Sequence of simple isotropic roots reflecting `from` into `to`; entry j is
// simple in the j-th intermediate system.  Length = size of the disagreement
// set.  Deterministic (smallest candidate at each step).
struct BorelPath {
    std::vector<BorelData> stations;  // stations.front() = from, .back() = to
    std::vector<Weight> roots;        // roots[j] reflected at station j
};
BorelPath borel_path(const BorelData& from, const BorelData& to);

// Highest-weight transport of a simple module along one odd reflection:
// lambda - gamma when <lambda,gamma> != 0, else lambda.
Weight reflect_simple_highest_weight(const Weight& lam, const Weight& gamma, const BorelData& borel);
// Iterated transport along a path.
Weight transport_simple_hw(const Weight& lam, const BorelPath& path);

// Finite-dimensionality test for the simple module with highest weight lam
// at the given Borel.  Scope g0 checks even integral dominance only; scope g
// transports to the distinguished Borel and applies the family conditions
// (type I: no extra condition; osp: trailing-epsilon cutoff below the last
// delta label; exceptional families: the leading condition b=0 => lam=0,
// sourced from the standard classification).
bool is_integral_dominant(const Weight& lam, const BorelData& borel, DominanceScope scope);

// Exact expansion of weights in a fixed basis of simple roots; used for the
// dominance order and for truncation windows.
class ConeSolver {
public:
    ConeSolver(std::vector<Weight> basis, std::size_t nd, std::size_t ne);
    // Coordinates of w in the basis, if w lies in the rational span.
    std::optional<std::vector<Rat>> coords(const Weight& w) const;
    // Sum of coordinates (the height functional); nullopt off the span.
    std::optional<Rat> height(const Weight& w) const;
    // w >= 0 in the cone order: all coordinates exist and are >= 0.
    bool in_positive_cone(const Weight& w) const;

private:
    std::vector<Weight> basis_;
    std::size_t nd_, ne_;
};

}  // namespace superbbw
