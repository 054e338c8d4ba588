#include "superbbw/bbw.hpp"

#include <algorithm>
#include <map>

#include "superbbw/util.hpp"

namespace superbbw {

std::optional<DemazureStep> demazure_step(const Weight& mu, const BorelData& b, const WeylGroup& W) {
    const RootDatum& D = *b.datum;
    std::vector<Weight> compatible;
    for (const auto& s : b.simples) {
        if (!s.odd) {
            compatible.push_back(s.root);
        } else if (!s.isotropic) {
            compatible.push_back(Rat(2) * s.root);
        }
    }
    std::sort(compatible.begin(), compatible.end());
    for (const Weight& a : compatible) {
        if (D.coroot_pairing(mu + b.rho, a) < Rat(0)) {
            const WeylElement& s = W.reflection(a);
            return DemazureStep{W.dot(s, mu, b), a};
        }
    }
    return std::nullopt;
}

namespace {

// Z2 component of w in the families whose even Weyl group splits off the
// theta sign flip.
bool theta_flipped(const WeylElement& w, const RootDatum& D) {
    if (!D.z2_axis) fail_internal("theta axis undefined for this family");
    auto [is_d, idx] = *D.z2_axis;
    Weight unit = D.zero_weight();
    if (is_d)
        unit.d[idx] = Rat(1);
    else
        unit.e[idx] = Rat(1);
    Weight image = w.apply(unit);
    Rat c = is_d ? image.d[idx] : image.e[idx];
    if (c != Rat(1) && c != Rat(-1)) fail_internal("theta axis is not preserved up to sign");
    return c == Rat(-1);
}

void sort_constituents(std::vector<Constituent>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Constituent& a, const Constituent& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.hw < b.hw;
    });
}

}  // namespace

CohomologyReport solve_bbw(const Weight& mu_in, const BBWTarget& target, const WeylGroup& W,
                           CharRing& ring) {
    const BorelData& b = target.borel;
    const RootDatum& D = *b.datum;
    CohomologyReport rep;
    if (!D.is_integral(mu_in)) fail_pre("cohomology solver needs an integral weight, got " + mu_in.str());

    if (target.parabolic) {
        if (!levi_dominant(mu_in, *target.parabolic, D))
            fail_pre("radical cohomology needs a Levi-dominant weight, got " + mu_in.str());
    }

    rep.euler = ring.euler_shift_sum(mu_in, b);

    // Raising normalization: each step trades one cohomological degree for a
    // more dominant weight.
    Weight nu = mu_in;
    int shift = 0;
    while (auto step = demazure_step(nu, b, W)) {
        nu = step->result;
        ++shift;
        check_limit(static_cast<std::size_t>(shift), "normalization steps");
    }
    rep.normalized = nu;
    rep.normalization_shift = shift;
    if (shift > 0)
        rep.notes.push_back("normalized through " + std::to_string(shift) + " raising steps");

    std::size_t cap = target.parabolic ? target.parabolic->dim_u0() : D.even_positive.size();
    rep.degree_cap = cap;

    // Radical targets get the partial treatment directly (support bounds,
    // degree cap, Euler form); Borel targets try the complete routes first.
    bool borel_target = !target.parabolic.has_value();

    if (borel_target) {
        TypicalityReport typ = typicality(nu, b);
        if (typ.typical) {
            auto loc = W.locate_dot(nu, b);
            rep.complete = true;
            if (loc.singular) {
                rep.notes.push_back("typical and singular: all cohomology vanishes");
                return rep;
            }
            Weight hw = loc.dominant;
            if (!is_integral_dominant(hw, b, DominanceScope::g)) {
                rep.notes.push_back(
                    "typical with a dominant representative outside the finite-dimensional cone: "
                    "all cohomology vanishes");
                return rep;
            }
            Constituent c;
            c.degree = loc.w->length + shift;
            c.kind = ConstituentKind::SimpleModule;
            c.hw = hw;
            c.top = hw;
            c.character = ring.euler_shift_sum(hw, b);
            c.note = "typical: simple and equal to its Euler form";
            rep.constituents.push_back(std::move(c));
            return rep;
        }

        if (D.type_I && b.distinguished) {
            auto loc = W.locate_dot(nu, b);
            rep.complete = true;
            if (loc.singular) {
                rep.notes.push_back("shifted weight is singular: all cohomology vanishes");
                return rep;
            }
            Constituent c;
            c.degree = loc.w->length + shift;
            c.kind = ConstituentKind::KacModule;
            c.hw = loc.dominant;
            c.top = loc.dominant;
            c.character = ring.euler_shift_sum(loc.dominant, b);
            c.note = "induced module of the distinguished parabolic";
            rep.constituents.push_back(std::move(c));
            return rep;
        }

        if (D.theta && !D.type_I && b.distinguished) {
            // One-dimensional top gradation piece: scan the orbit for
            // finite-dimensional representatives.
            bool generic_here = genericness(nu, b, W, GenericMode::Full).generic;
            std::map<int, std::vector<std::pair<Weight, bool>>> by_degree;
            for (std::size_t i = 0; i < W.size(); ++i) {
                Weight hw = W.dot(W[i], nu, b);
                if (!is_integral_dominant(hw, b, DominanceScope::g)) continue;
                bool flip = theta_flipped(W[i], D);
                auto& row = by_degree[W[i].length];
                bool dup = false;
                for (const auto& [h, f] : row)
                    if (h == hw && f == flip) dup = true;
                if (!dup) row.emplace_back(hw, flip);
            }
            for (const auto& [len, row] : by_degree) {
                for (std::size_t i = 1; i < row.size(); ++i)
                    if (!(row[i].first == row[0].first))
                        fail_internal("two distinct dominant representatives in one degree");
                // Identical weight with both signs can appear only via distinct
                // elements of the same length; keep one module per kind.
                std::vector<std::pair<Weight, bool>> kinds;
                for (const auto& e : row) {
                    bool dup = false;
                    for (const auto& k : kinds)
                        if (k.second == e.second) dup = true;
                    if (!dup) kinds.push_back(e);
                }
                for (const auto& [hw, flip] : kinds) {
                    Constituent c;
                    c.degree = len + shift;
                    c.kind = flip ? ConstituentKind::DualKacModule : ConstituentKind::KacModule;
                    c.hw = hw;
                    if (!flip) c.top = hw;
                    if (generic_here) c.character = ring.euler_shift_sum(hw, b);
                    c.note = flip ? "twisted dual of the induced module" : "induced module";
                    rep.constituents.push_back(std::move(c));
                }
            }
            rep.complete = true;
            sort_constituents(rep.constituents);
            return rep;
        }

        GenericnessReport gen = genericness(nu, b, W, GenericMode::Full);
        if (gen.generic) {
            auto loc = W.locate_dot(nu, b);
            if (loc.singular) fail_internal("generic weight located as singular");
            Constituent c;
            c.degree = loc.w->length + shift;
            c.kind = ConstituentKind::EulerOnly;
            c.hw = loc.dominant;
            c.character = ring.euler_shift_sum(loc.dominant, b);
            c.top = star_action(*loc.w, nu, b, W, false);
            c.note = "generic: single degree, character equals the Euler form";
            rep.constituents.push_back(std::move(c));
            rep.complete = true;
            rep.notes.push_back("module structure beyond the top is not resolved here");
            return rep;
        }
    }

    // Partial report: candidate highest weights per degree plus the Euler
    // form as a consistency constraint.
    rep.complete = false;
    GammaMultiset gp = gamma_plus(b);
    std::vector<const WeylElement*> allowed;
    if (target.parabolic && !target.parabolic->levi_even_simples.empty()) {
        auto reps = W.coset_reps(target.parabolic->levi_even_simples);
        for (const WeylElement* r : reps) allowed.push_back(&W.inverse(*r));
    } else {
        allowed = W.all();
    }
    // Normalized degrees k land at k + shift in the original problem, and
    // everything above the radical dimension vanishes outright.
    for (std::size_t k = 0; k + static_cast<std::size_t>(shift) <= cap; ++k) {
        SupportRow row;
        row.degree = static_cast<int>(k) + shift;
        std::unordered_set<Weight, WeightHash> cand;
        for (const WeylElement* w : allowed) {
            if (static_cast<std::size_t>(w->length) != k) continue;
            Weight base = W.dot(*w, nu, b);
            for (const auto& e : gp.entries) {
                Weight hw = base - e.sum;
                if (!is_integral_dominant(hw, b, DominanceScope::g)) continue;
                if (target.parabolic && !levi_dominant(hw, *target.parabolic, D)) continue;
                cand.insert(hw);
            }
        }
        row.candidates.assign(cand.begin(), cand.end());
        std::sort(row.candidates.begin(), row.candidates.end());
        if (!row.candidates.empty()) rep.support.push_back(std::move(row));
    }
    rep.notes.push_back("partial: candidate weights only, constrained by the Euler form");
    return rep;
}

}  // namespace superbbw
