#include "superbbw/genericity.hpp"

#include <algorithm>

#include "superbbw/util.hpp"

namespace superbbw {

namespace {

GammaMultiset subset_sums(const RootDatum& D, std::vector<Weight> base) {
    GammaMultiset out;
    out.base = std::move(base);
    std::size_t n = out.base.size();
    if (n > 31) fail_limit("subset family too large (" + std::to_string(n) + " roots)");
    check_limit(std::size_t{1} << n, "odd subset enumeration");
    out.entries.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        Weight s = D.zero_weight();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) s += out.base[i];
        out.entries.push_back({s, mask});
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const GammaEntry& a, const GammaEntry& b) {
        if (!(a.sum == b.sum)) return a.sum < b.sum;
        return a.mask < b.mask;
    });
    return out;
}

}  // namespace

bool GammaMultiset::contains_sum(const Weight& w) const {
    GammaEntry probe{w, 0};
    auto it = std::lower_bound(entries.begin(), entries.end(), probe,
                               [](const GammaEntry& a, const GammaEntry& b) { return a.sum < b.sum; });
    return it != entries.end() && it->sum == w;
}

GammaMultiset gamma_plus(const BorelData& b) { return subset_sums(*b.datum, b.odd_positive); }

GammaMultiset gamma_tilde(const BorelData& b) {
    std::vector<Weight> base;
    for (const Weight& g : b.odd_positive) {
        base.push_back(g);
        base.push_back(-g);
    }
    std::sort(base.begin(), base.end());
    return subset_sums(*b.datum, base);
}

TypicalityReport typicality(const Weight& lam, const BorelData& b) {
    const RootDatum& D = *b.datum;
    TypicalityReport rep;
    Weight shifted = lam + b.rho;
    for (const Weight& g : b.odd_positive) {
        if (D.pair(g, g) != Rat(0)) continue;
        if (D.pair(shifted, g) == Rat(0)) rep.witnesses.push_back(g);
    }
    rep.typical = rep.witnesses.empty();
    // Degree = largest set of mutually orthogonal witnesses.
    std::size_t n = rep.witnesses.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        int bits = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask & (std::uint32_t{1} << i))) continue;
            ++bits;
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if (!(mask & (std::uint32_t{1} << j))) continue;
                if (D.pair(rep.witnesses[i], rep.witnesses[j]) != Rat(0)) ok = false;
            }
        }
        if (ok) rep.degree = std::max(rep.degree, bits);
    }
    return rep;
}

namespace {

// One open chamber holding every member: some w makes all of them strictly
// dominant after the rho0 shift.
bool one_open_chamber(const std::vector<Weight>& members, const RootDatum& D, const WeylGroup& W,
                      std::optional<Weight>& witness) {
    for (std::size_t i = 0; i < W.size(); ++i) {
        bool all = true;
        for (const Weight& m : members) {
            Weight moved = W[i].apply(m + D.rho0);
            for (const Weight& a : D.even_simples)
                if (D.coroot_pairing(moved, a) <= Rat(0)) {
                    all = false;
                    break;
                }
            if (!all) break;
        }
        if (all) return true;
    }
    // Identify a member that is singular or stranded for the report: the
    // first one that cannot be strictly dominant under any w that fixes the
    // others is expensive to isolate, so report the first circle-singular
    // member if present.
    for (const Weight& m : members) {
        bool singular = false;
        for (const Weight& a : D.even_positive)
            if (D.pair(m + D.rho0, a) == Rat(0)) {
                singular = true;
                break;
            }
        if (singular) {
            witness = m;
            return false;
        }
    }
    if (!members.empty()) witness = members.front();
    return false;
}

}  // namespace

GenericnessReport genericness(const Weight& lam, const BorelData& b, const WeylGroup& W,
                              GenericMode mode) {
    const RootDatum& D = *b.datum;
    GenericnessReport rep;
    rep.mode = mode;
    if (mode == GenericMode::Full) {
        GammaMultiset gp = gamma_plus(b);
        std::unordered_set<Weight, WeightHash> seen;
        for (const auto& e : gp.entries) {
            Weight m = lam - e.sum;
            if (!seen.insert(m).second) continue;
            GenericnessReport inner = genericness(m, b, W, GenericMode::GammaTilde);
            if (!inner.generic) {
                rep.generic = false;
                rep.witness = m;
                rep.reason = "shift " + e.sum.str() + " is not generic against the two-sided family";
                return rep;
            }
        }
        rep.generic = true;
        rep.reason = "every positive-subset shift is generic against the two-sided family";
        return rep;
    }

    GammaMultiset S = (mode == GenericMode::GammaPlus) ? gamma_plus(b) : gamma_tilde(b);
    std::vector<Weight> members;
    std::unordered_set<Weight, WeightHash> seen;
    for (const auto& e : S.entries) {
        Weight m = lam - e.sum;
        if (seen.insert(m).second) members.push_back(m);
    }
    rep.generic = one_open_chamber(members, D, W, rep.witness);
    rep.reason = rep.generic ? "all shifted weights share one open chamber"
                             : "shifted weights leave every open chamber";
    return rep;
}

ParabolicData max_typical_parabolic(const BorelData& b) {
    const RootDatum& D = *b.datum;
    ParabolicData p;
    for (const auto& s : b.simples)
        if (!s.isotropic) p.anisotropic_simples.push_back(s.root);

    // Levi = roots inside the linear span of the anisotropic simples.
    ConeSolver span(p.anisotropic_simples, D.nd, D.ne);
    auto in_span = [&](const Weight& r) { return p.anisotropic_simples.empty() ? false : span.coords(r).has_value(); };

    for (const Weight& a : D.even_positive)
        (in_span(a) ? p.levi_even_positive : p.u_even).push_back(a);
    for (const Weight& g : b.odd_positive)
        (in_span(g) ? p.levi_odd_positive : p.u_odd).push_back(g);

    std::unordered_set<Weight, WeightHash> pos(p.levi_even_positive.begin(), p.levi_even_positive.end());
    for (const Weight& a : p.levi_even_positive) {
        bool dec = false;
        for (const Weight& c : p.levi_even_positive) {
            Weight rest = a - c;
            if (!rest.is_zero() && pos.count(rest)) {
                dec = true;
                break;
            }
        }
        if (!dec) p.levi_even_simples.push_back(a);
    }
    std::sort(p.levi_even_simples.begin(), p.levi_even_simples.end());
    return p;
}

bool levi_dominant(const Weight& lam, const ParabolicData& p, const RootDatum& datum) {
    for (const Weight& a : p.anisotropic_simples)
        if (datum.coroot_pairing(lam, a) < Rat(0)) return false;
    return true;
}

bool relative_genericness(const Weight& lam, const BorelData& b, const WeylGroup& W,
                          const GammaMultiset& shifts, const ParabolicData& p) {
    const RootDatum& D = *b.datum;
    if (!levi_dominant(lam, p, D)) return false;
    std::vector<Weight> members;
    std::unordered_set<Weight, WeightHash> seen;
    for (const auto& e : shifts.entries) {
        Weight m = lam - e.sum;
        if (!levi_dominant(m, p, D)) continue;
        if (seen.insert(m).second) members.push_back(m);
    }
    // One closed chamber containing lam: some w puts lam and every filtered
    // member weakly in the dominant chamber.
    for (std::size_t i = 0; i < W.size(); ++i) {
        Weight moved = W[i].apply(lam + D.rho0);
        bool ok = true;
        for (const Weight& a : D.even_simples)
            if (D.coroot_pairing(moved, a) < Rat(0)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (const Weight& m : members) {
            Weight mm = W[i].apply(m + D.rho0);
            for (const Weight& a : D.even_simples)
                if (D.coroot_pairing(mm, a) < Rat(0)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace superbbw
