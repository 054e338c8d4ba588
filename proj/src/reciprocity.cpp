#include "superbbw/reciprocity.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "superbbw/blocks.hpp"
#include "superbbw/genericity.hpp"
#include "superbbw/util.hpp"

namespace superbbw {

namespace {

// Which route yields the simple characters of the block through lam.
enum class EnvKind { Typical, OspChart, TypeIChain, Unknown };

struct BlockEnv {
    EnvKind kind = EnvKind::Unknown;
    std::string note;
};

BlockEnv classify(const Weight& lam, const BorelData& b) {
    const RootDatum& D = *b.datum;
    if (typicality(lam, b).typical) return {EnvKind::Typical, {}};
    if (!b.distinguished)
        return {EnvKind::Unknown,
                "atypical blocks are charted only at the distinguished Borel subalgebra"};
    switch (D.spec.family) {
        case Family::osp:
            if (D.spec.m >= 3 && D.spec.n == 1) return {EnvKind::OspChart, {}};
            return {EnvKind::Unknown,
                    "atypical osp blocks are charted only for osp(m|2) with m >= 3"};
        case Family::gl:
        case Family::sl:
            if (D.nd == 1 || D.ne == 1) return {EnvKind::TypeIChain, {}};
            return {EnvKind::Unknown,
                    "atypical gl/sl blocks with both parts of rank two or more have no "
                    "implemented simple characters"};
        default:
            return {EnvKind::Unknown,
                    "atypical blocks of the exceptional families have no implemented "
                    "simple characters"};
    }
}

// One step along the two-sided chain through a singly atypical dominant
// weight of gl/sl with a rank-one part: the matched pair of shifted
// coordinates moves to the nearest free value, upward in dominance for
// dir = +1.
Weight chain_step(const Weight& lam, const BorelData& b, int dir) {
    const RootDatum& D = *b.datum;
    Weight v = lam + b.rho;
    Rat step = dir > 0 ? Rat(1) : Rat(-1);
    auto descending = [](std::vector<Rat>& vals) {
        std::sort(vals.begin(), vals.end(), [](const Rat& x, const Rat& y) { return y < x; });
    };
    Weight out = D.zero_weight();
    if (D.nd == 1) {
        Rat t = -v.d[0];
        std::size_t hit = D.ne;
        for (std::size_t i = 0; i < D.ne; ++i)
            if (v.e[i] == t) hit = i;
        if (hit == D.ne) fail_internal("chain step needs a matched coordinate pair at " + lam.str());
        std::vector<Rat> vals;
        for (std::size_t i = 0; i < D.ne; ++i)
            if (i != hit) vals.push_back(v.e[i]);
        Rat t2 = t + step;
        while (std::find(vals.begin(), vals.end(), t2) != vals.end()) t2 += step;
        vals.push_back(t2);
        descending(vals);
        out.d[0] = -t2;
        out.e = vals;
    } else if (D.ne == 1) {
        Rat t = v.e[0];
        std::size_t hit = D.nd;
        for (std::size_t j = 0; j < D.nd; ++j)
            if (v.d[j] == -t) hit = j;
        if (hit == D.nd) fail_internal("chain step needs a matched coordinate pair at " + lam.str());
        std::vector<Rat> vals;
        for (std::size_t j = 0; j < D.nd; ++j)
            if (j != hit) vals.push_back(v.d[j]);
        Rat t2 = t + step;
        while (std::find(vals.begin(), vals.end(), -t2) != vals.end()) t2 += step;
        vals.push_back(-t2);
        descending(vals);
        out.d = vals;
        out.e[0] = t2;
    } else {
        fail_internal("chain steps need a rank-one part in " + D.spec.str());
    }
    Weight res = out - b.rho;
    if (!is_integral_dominant(res, b, DominanceScope::g))
        fail_internal("chain step left the dominant cone at " + res.str());
    return res;
}

// Kac character by the induced-module product: ch L0(lam) times
// (1 + e^{-gamma}) over the odd positive roots.  Exact for the families
// whose odd radical at the distinguished Borel is abelian.
FormalCharacter kac_product(const Weight& lam, const BorelData& b, CharRing& ring,
                            const Window& win) {
    FormalCharacter out = CharRing::truncate(ring.g0_simple(lam), win);
    for (const Weight& g : b.odd_positive) out = CharRing::odd_factor(out, -g, &win);
    return out;
}

// Simple character on the chain by the alternating resolution: Euler forms
// of the descending chain weights, stopping once one drops below the
// window.  The result must be a genuine character with top multiplicity
// one; anything else signals a broken chain.
FormalCharacter chain_simple(const Weight& mu, const BorelData& b, CharRing& ring,
                             const Window& win) {
    FormalCharacter out;
    Weight cur = mu;
    int sign = 1;
    for (int guard = 0;; ++guard) {
        if (guard > 256) fail_limit("chain resolution did not leave the window after 256 steps");
        FormalCharacter e = ring.expand_on_window(ring.euler_shift_sum(cur, b), win);
        if (e.is_zero()) break;
        if (sign > 0)
            out += e;
        else
            out -= e;
        cur = chain_step(cur, b, -1);
        sign = -sign;
    }
    for (const auto& entry : out.c)
        if (entry.second < 0)
            fail_internal("chain simple character is negative at " + entry.first.str());
    if (win.keeps(mu) && out.at(mu) != 1)
        fail_internal("chain simple character has top multiplicity " + std::to_string(out.at(mu)));
    return out;
}

struct ChartData {
    BlockChart chart;
    ChainSlot slot;
};

// Chart around lam with at least extra enumerated positions above it, and
// never topping out below position two (the resolution machinery needs
// that much room).
ChartData chart_with_headroom(const Algebra& algebra, const Weight& lam, const BorelData& b,
                              int extra) {
    Rat dc = (lam + b.rho).d[0];
    if (dc < Rat(0)) dc = -dc;
    int radius = 3;
    while (Rat(radius) < dc + Rat(2)) ++radius;
    for (int attempt = 0; attempt < 8; ++attempt, radius += 4) {
        BlockChart chart = enumerate_block(algebra, lam, radius);
        const ChainMember* pos = nullptr;
        for (const auto& m : chart.chain)
            if (m.weight == lam) pos = &m;
        if (!pos) fail_internal("weight missing from its own chart");
        if (chart.max_k() < std::max(pos->slot.k + extra, 2)) continue;
        ChainSlot slot = pos->slot;
        return {std::move(chart), slot};
    }
    fail_limit("no chart radius gave enough headroom above " + lam.str());
}

Weight slot_weight(const BlockChart& chart, ChainSlot s) {
    const ChainMember* m = chart.find(chart.normalize(s));
    if (!m) fail_internal("chart misses slot " + s.str());
    return m->weight;
}

// Multiplicities of the simple characters inside the Euler form at a slot.
std::map<ChainSlot, long long> column_slots(const BlockChart& chart, ChainSlot s) {
    std::map<ChainSlot, long long> col;
    s = chart.normalize(s);
    if (chart.quiver == QuiverType::Dinf) {
        if (s.k == 0) {
            col[{0, 0}] = 1;
            col[{1, 0}] = -1;
        } else if (s.k == 1) {
            col[{1, 0}] = 1;
            col[{0, 0}] = -1;
        } else {
            col[{s.k, 0}] = 1;
            col[{s.k - 1, 0}] = 1;
            if (s.k == 2) col[{0, 0}] = 1;
        }
    } else {
        if (s.k == 0) return col;  // the Euler form vanishes at the fixed point
        col[{s.k, s.branch}] = 1;
        col[chart.normalize({s.k - 1, s.branch})] = 1;
    }
    return col;
}

// Slots whose Euler forms carry the simple character of s, with the
// reciprocity coefficient.  Columns outside the sharpened cone are folded
// through the delta-flip antisymmetry, which is where the one negative
// entry of the bottom row comes from.
std::map<ChainSlot, long long> row_slots(const BlockChart& chart, ChainSlot s) {
    std::map<ChainSlot, long long> row;
    s = chart.normalize(s);
    if (chart.quiver == QuiverType::Dinf) {
        if (s.k == 0) {
            row[{1, 0}] = -1;
            row[{2, 0}] = 1;
        } else {
            row[{s.k, 0}] = 1;
            row[{s.k + 1, 0}] = 1;
        }
    } else {
        if (s.k == 0) {
            row[{1, 1}] = 1;
            row[{1, -1}] = 1;
        } else {
            row[{s.k, s.branch}] = 1;
            row[{s.k + 1, s.branch}] = 1;
        }
    }
    return row;
}

FormalCharacter combine_simples(const BlockCharacters& chars,
                                const std::map<ChainSlot, long long>& col) {
    FormalCharacter out;
    for (const auto& entry : col) {
        auto it = chars.simples.find(entry.first);
        if (it == chars.simples.end())
            fail_internal("missing simple character at slot " + entry.first.str());
        for (long long i = 0; i < entry.second; ++i) out += it->second;
        for (long long i = 0; i > entry.second; --i) out -= it->second;
    }
    return out;
}

// Window holding the full weight support of a typical simple module: down
// to the bottom of the even orbit, then past the odd shifts.
Window typical_window(const Weight& lam, const BorelData& b, const WeylGroup& W) {
    Window probe(b, lam, Rat(0));
    Rat depth(0);
    for (std::size_t i = 0; i < W.size(); ++i) {
        Rat d = probe.drop(W[i].apply(lam));
        if (depth < d) depth = d;
    }
    Weight oddsum = b.datum->zero_weight();
    for (const Weight& g : b.odd_positive) oddsum += g;
    return Window(b, lam, depth + probe.drop(lam - oddsum) + Rat(2));
}

void require_same_datum(const Algebra& algebra, const BorelData& b) {
    if (b.datum != algebra.get())
        fail_pre("the Borel subalgebra does not belong to the given algebra");
}

}  // namespace

bool tilde_dominant_test(const Weight& lam, const BorelData& b) {
    if (!is_integral_dominant(lam, b, DominanceScope::g))
        fail_pre("the sharpened dominance test takes integral dominant weights; got " + lam.str());
    const RootDatum& D = *b.datum;
    Weight v = lam + b.rho;
    for (const Weight& a : D.even_positive)
        if (!(D.coroot_pairing(v, a) > Rat(0))) return false;
    return true;
}

EulerRow euler_into_simples(const Algebra& algebra, const Weight& lamp, const BorelData& b,
                            CharRing& ring, const Window* win) {
    require_same_datum(algebra, b);
    if (!is_integral_dominant(lamp, b, DominanceScope::g))
        fail_pre("Euler columns are indexed by integral dominant weights; got " + lamp.str());
    const RootDatum& D = *b.datum;
    EulerRow row;
    row.top = lamp;
    BlockEnv env = classify(lamp, b);
    if (env.kind == EnvKind::Unknown) {
        row.note = env.note;
        return row;
    }
    row.known = true;
    if (env.kind == EnvKind::Typical) {
        row.coeffs[lamp] = 1;
        if (win) {
            FormalCharacter e = ring.expand_on_window(ring.euler_shift_sum(lamp, b), *win);
            for (const auto& entry : e.c)
                if (entry.second < 0)
                    fail_internal("typical Euler form is negative at " + entry.first.str());
            if (win->keeps(lamp) && e.at(lamp) != 1)
                fail_internal("typical Euler form has top multiplicity " +
                              std::to_string(e.at(lamp)));
            if (D.type_I && b.distinguished && !(e == kac_product(lamp, b, ring, *win)))
                fail_internal("typical Euler form disagrees with the induced-character product");
        }
    } else if (env.kind == EnvKind::TypeIChain) {
        Weight dn = chain_step(lamp, b, -1);
        row.coeffs[lamp] = 1;
        row.coeffs[dn] = 1;
        if (win) {
            FormalCharacter lhs = ring.expand_on_window(ring.euler_shift_sum(lamp, b), *win);
            FormalCharacter rhs = chain_simple(lamp, b, ring, *win);
            rhs += chain_simple(dn, b, ring, *win);
            if (!(lhs == rhs))
                fail_internal("chain Euler form disagrees with its simple expansion");
            if (!(lhs == kac_product(lamp, b, ring, *win)))
                fail_internal("chain Euler form disagrees with the induced-character product");
        }
    } else {
        ChartData cd = chart_with_headroom(algebra, lamp, b, 0);
        std::map<ChainSlot, long long> col = column_slots(cd.chart, cd.slot);
        for (const auto& entry : col)
            row.coeffs[slot_weight(cd.chart, entry.first)] = entry.second;
        if (win) {
            Window bw = default_block_window(cd.chart);
            BlockCharacters chars = block_characters(cd.chart, ring, bw);
            FormalCharacter lhs = ring.expand_on_window(ring.euler_shift_sum(lamp, b), bw);
            FormalCharacter rhs = combine_simples(chars, col);
            if (!(CharRing::truncate(lhs, *win) == CharRing::truncate(rhs, *win)))
                fail_internal("chart Euler form disagrees with its simple expansion");
        }
    }
    return row;
}

FormalCharacter projective_character(const Algebra& algebra, const Weight& lam,
                                     const BorelData& b, CharRing& ring, const Window& win) {
    require_same_datum(algebra, b);
    if (!is_integral_dominant(lam, b, DominanceScope::g))
        fail_pre("projective characters are indexed by integral dominant weights; got " +
                 lam.str());
    BlockEnv env = classify(lam, b);
    if (env.kind == EnvKind::Unknown) fail_pre(env.note);
    std::map<Weight, long long> row;
    if (env.kind == EnvKind::Typical) {
        row[lam] = 1;
    } else if (env.kind == EnvKind::TypeIChain) {
        row[lam] = 1;
        row[chain_step(lam, b, +1)] = 1;
    } else {
        ChartData cd = chart_with_headroom(algebra, lam, b, 2);
        for (const auto& entry : row_slots(cd.chart, cd.slot))
            row[slot_weight(cd.chart, entry.first)] = entry.second;
    }
    FormalCharacter out;
    for (const auto& entry : row) {
        FormalCharacter e = ring.expand_on_window(ring.euler_shift_sum(entry.first, b), win);
        for (long long i = 0; i < entry.second; ++i) out += e;
        for (long long i = 0; i > entry.second; --i) out -= e;
    }
    return out;
}

ReciprocityReport verify_reciprocity(const Algebra& algebra, const Weight& lam,
                                     const BorelData& b, const WeylGroup& W, CharRing& ring) {
    require_same_datum(algebra, b);
    if (!is_integral_dominant(lam, b, DominanceScope::g))
        fail_pre("reciprocity checks take integral dominant weights; got " + lam.str());

    ReciprocityReport rep;
    rep.lam = lam;
    const RootDatum& D = *b.datum;
    bool relgen = relative_genericness(lam, b, W, gamma_tilde(b), max_typical_parabolic(b));
    const std::string relgen_reason =
        "the weight is not relatively generic for this Borel subalgebra, so the "
        "standard-filtration statement does not apply";
    BlockEnv env = classify(lam, b);
    if (env.kind == EnvKind::Unknown) {
        rep.reason = relgen ? env.note : relgen_reason;
        return rep;
    }

    std::string failure;
    auto judge = [&](const Weight& lamp, bool expansion_ok) {
        ColumnVerdict v;
        if (!tilde_dominant_test(lamp, b))
            v.reason = "the column weight leaves the sharpened dominance cone";
        else if (!expansion_ok)
            v.reason = "the Euler form disagrees with its simple expansion on the window";
        else
            v.outcome = ReciprocityOutcome::Verified;
        if (v.outcome != ReciprocityOutcome::Verified && failure.empty())
            failure = "column " + lamp.str() + ": " + v.reason;
        rep.verdicts[lamp] = v;
    };

    if (env.kind == EnvKind::Typical) {
        Window win = typical_window(lam, b, W);
        rep.coefficients[lam] = 1;
        rep.assembled = ring.expand_on_window(ring.euler_shift_sum(lam, b), win);
        rep.ch_p = ring.euler_series(lam, b, win);
        bool plain = rep.assembled.at(lam) == 1;
        for (const auto& entry : rep.assembled.c)
            if (entry.second < 0) plain = false;
        if (plain && D.type_I && b.distinguished)
            plain = rep.assembled == kac_product(lam, b, ring, win);
        judge(lam, plain);
    } else if (env.kind == EnvKind::TypeIChain) {
        Weight up = chain_step(lam, b, +1);
        Window probe(b, up, Rat(0));
        Weight low = chain_step(chain_step(chain_step(lam, b, -1), b, -1), b, -1);
        Weight oddsum = D.zero_weight();
        for (const Weight& g : b.odd_positive) oddsum += g;
        Window win(b, up, probe.drop(low - oddsum) + Rat(4));
        rep.coefficients[lam] = 1;
        rep.coefficients[up] = 1;
        for (const Weight& lamp : {lam, up}) {
            FormalCharacter e = ring.expand_on_window(ring.euler_shift_sum(lamp, b), win);
            rep.assembled += e;
            FormalCharacter expansion = chain_simple(lamp, b, ring, win);
            expansion += chain_simple(chain_step(lamp, b, -1), b, ring, win);
            judge(lamp, e == expansion);
        }
        rep.ch_p = kac_product(lam, b, ring, win);
        rep.ch_p += kac_product(up, b, ring, win);
    } else {
        ChartData cd = chart_with_headroom(algebra, lam, b, 2);
        Window win = default_block_window(cd.chart);
        BlockCharacters chars = block_characters(cd.chart, ring, win);
        for (const auto& entry : row_slots(cd.chart, cd.slot)) {
            Weight lamp = slot_weight(cd.chart, entry.first);
            rep.coefficients[lamp] = entry.second;
            FormalCharacter e = ring.expand_on_window(ring.euler_shift_sum(lamp, b), win);
            for (long long i = 0; i < entry.second; ++i) rep.assembled += e;
            for (long long i = 0; i > entry.second; --i) rep.assembled -= e;
            FormalCharacter expansion =
                combine_simples(chars, column_slots(cd.chart, entry.first));
            judge(lamp, e == expansion);
        }
        auto it = chars.projective.find(cd.slot);
        if (it == chars.projective.end())
            fail_internal("projective character missing at slot " + cd.slot.str());
        rep.ch_p = it->second;
    }

    if (failure.empty())
        for (const auto& entry : rep.coefficients)
            if (entry.second < 0) {
                failure = "the coefficient row has a negative entry at " + entry.first.str();
                break;
            }
    if (failure.empty() && !(rep.assembled == rep.ch_p))
        failure = "the projective character does not reassemble from the coefficient row";

    if (!relgen)
        rep.reason = relgen_reason;
    else if (!failure.empty())
        rep.reason = failure;
    else
        rep.outcome = ReciprocityOutcome::Verified;
    return rep;
}

}  // namespace superbbw
