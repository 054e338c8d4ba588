#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "superbbw/algebra.hpp"

namespace superbbw {

// Even Weyl group element stored as an exact matrix on coordinates (delta
// block first).  Matrices act on canonical representatives; for G(3) they fix
// the constant epsilon direction, so products stay faithful.
struct WeylElement {
    std::vector<std::vector<Rat>> mat;
    std::vector<int> word;  // lexicographically least reduced word over even simple indices
    int length = 0;
    std::size_t index = 0;

    Weight apply(const Weight& w) const;
    std::string key() const;
};

// Fully enumerated even Weyl group with composition, inversion, reflections,
// shifted actions and chamber location.  Groups here are small (at most 96
// elements), so lookups scan exact matrix keys.
class WeylGroup {
public:
    explicit WeylGroup(const RootDatum& datum);

    const RootDatum& datum() const { return *datum_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
    const WeylElement& identity() const { return elements_[0]; }
    std::size_t simple_count() const { return simple_index_.size(); }
    const WeylElement& simple_reflection(std::size_t i) const;

    // (u*v)(x) = u(v(x))
    const WeylElement& compose(const WeylElement& u, const WeylElement& v) const;
    const WeylElement& inverse(const WeylElement& w) const;
    // Reflection at any non-isotropic even root.
    const WeylElement& reflection(const Weight& alpha) const;
    const WeylElement* find_matrix(const std::vector<std::vector<Rat>>& mat) const;

    std::vector<const WeylElement*> of_length(int l) const;
    int max_length() const;

    Weight dot(const WeylElement& w, const Weight& lam, const BorelData& b) const;
    Weight circ(const WeylElement& w, const Weight& lam) const;

    struct Location {
        bool singular = false;
        std::vector<Weight> walls;       // even positive roots orthogonal to the shifted weight
        const WeylElement* w = nullptr;  // first table element reaching weak dominance
        Weight dominant;                 // (weakly) dominant representative, shift removed
    };
    Location locate_circ(const Weight& lam) const;
    Location locate_dot(const Weight& lam, const BorelData& b) const;
    // Plain unshifted action; dominant = w(lam).
    Location locate_plain(const Weight& lam) const;

    // Minimal length coset representatives: w with w^{-1}(alpha) positive for
    // every listed even simple root.
    std::vector<const WeylElement*> coset_reps(const std::vector<Weight>& levi_simples) const;
    // Subgroup generated by the reflections at the listed even simple roots.
    std::vector<const WeylElement*> parabolic(const std::vector<Weight>& levi_simples) const;
    std::vector<const WeylElement*> all() const;

private:
    const RootDatum* datum_;
    std::vector<WeylElement> elements_;
    std::vector<std::size_t> simple_index_;
    std::vector<std::size_t> inverse_index_;
    std::unordered_map<std::string, std::size_t> by_key_;

    std::vector<std::vector<Rat>> reflection_matrix(const Weight& alpha) const;
    Location locate_shifted(const Weight& shifted, const Weight& shift) const;
};

}  // namespace superbbw
