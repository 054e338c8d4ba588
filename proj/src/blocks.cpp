#include "superbbw/blocks.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "superbbw/genericity.hpp"
#include "superbbw/util.hpp"

namespace superbbw {

namespace {

Rat delta_coord(const Weight& w) { return w.d[0]; }

// Positive roots of the orthogonal part: the even positives not touching
// the delta axis.
std::vector<Weight> so_positive(const RootDatum& D) {
    std::vector<Weight> out;
    for (const auto& a : D.even_positive)
        if (a.d[0] == Rat(0)) out.push_back(a);
    return out;
}

bool so_dominant(const RootDatum& D, const Weight& w) {
    for (const auto& a : so_positive(D))
        if (D.coroot_pairing(w, a) < Rat(0)) return false;
    return true;
}

Weight double_delta(const RootDatum& D) {
    Weight t = D.zero_weight();
    t.d[0] = Rat(2);
    return t;
}

}  // namespace

std::string ChainSlot::str() const {
    std::string s = std::to_string(k);
    if (branch > 0) s += "+";
    if (branch < 0) s += "-";
    return s;
}

const ChainMember* BlockChart::find(const ChainSlot& s) const {
    ChainSlot n = normalize(s);
    for (const auto& m : chain)
        if (m.slot == n) return &m;
    return nullptr;
}

int BlockChart::max_k() const {
    int k = 0;
    for (const auto& m : chain) k = std::max(k, m.slot.k);
    return k;
}

ChainSlot BlockChart::normalize(ChainSlot s) const {
    if (quiver == QuiverType::Dinf)
        s.branch = 0;
    else if (s.k == 0)
        s.branch = 0;
    return s;
}

Weight BlockChart::s_dot(const Weight& w) const {
    Weight v = w + borel.rho;
    v.d[0] = -v.d[0];
    return v - borel.rho;
}

Weight BlockChart::weight_at(ChainSlot s) const {
    s = normalize(s);
    if (s.k >= 0) {
        const ChainMember* m = find(s);
        if (!m)
            fail_pre("chain position " + s.str() + " is outside the enumerated radius " +
                     std::to_string(radius));
        return m->weight;
    }
    // Dominant companions of the negative positions: Dinf pairs k with 1-k,
    // Ainfinf pairs (k, b) with (-k, b).
    ChainSlot mirror = s;
    mirror.k = (quiver == QuiverType::Dinf) ? 1 - s.k : -s.k;
    return s_dot(weight_at(mirror));
}

BlockChart enumerate_block(const Algebra& algebra, const Weight& lam, int radius) {
    const RootDatum& D = *algebra;
    if (D.spec.family != Family::osp || D.nd != 1 || D.spec.m < 3)
        fail_pre("block charts cover osp(m|2) with m >= 3; got " + D.spec.str());
    BorelData b = distinguished_borel(D);
    if (!is_integral_dominant(lam, b, DominanceScope::g))
        fail_pre("block seed " + lam.str() + " is not integral dominant");
    TypicalityReport seed_typ = typicality(lam, b);
    if (seed_typ.typical)
        fail_pre("weight " + lam.str() + " is typical; its block is a single simple module");
    if (radius < 1) fail_pre("radius must be positive");

    const Rat bound(radius);
    Rat seed_d = delta_coord(lam + b.rho);
    if (seed_d > bound || seed_d < -bound)
        fail_pre("radius " + std::to_string(radius) +
                 " too small: the seed weight sits at delta coordinate " + to_string(seed_d));

    WeylGroup W(D);
    const int t_span = 2 * radius + 2;

    std::map<Weight, Weight> members;  // weight -> atypical root
    std::vector<Weight> queue{lam};
    members.emplace(lam, seed_typ.witnesses.front());
    while (!queue.empty()) {
        Weight mu = queue.back();
        queue.pop_back();
        Weight shifted = mu + b.rho;
        for (const Weight& gamma : typicality(mu, b).witnesses) {
            for (int t = -t_span; t <= t_span; ++t) {
                Weight nu = shifted + Rat(t) * gamma;
                for (std::size_t i = 0; i < W.size(); ++i) {
                    Weight cand = W[i].apply(nu) - b.rho;
                    Rat dc = delta_coord(cand + b.rho);
                    if (dc > bound || dc < -bound) continue;
                    if (members.count(cand)) continue;
                    if (!is_integral_dominant(cand, b, DominanceScope::g)) continue;
                    TypicalityReport typ = typicality(cand, b);
                    if (typ.typical) fail_internal("linkage produced a typical weight");
                    members.emplace(cand, typ.witnesses.front());
                    queue.push_back(cand);
                }
            }
        }
    }

    std::vector<std::pair<Weight, Weight>> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
        Rat dx = delta_coord(x.first + b.rho), dy = delta_coord(y.first + b.rho);
        if (dx != dy) return dx < dy;
        return x.first < y.first;
    });

    BlockChart chart;
    chart.algebra = algebra;
    chart.borel = b;
    chart.radius = radius;

    bool has_zero = false;
    int negatives = 0;
    for (const auto& entry : sorted) {
        Rat dc = delta_coord(entry.first + b.rho);
        if (dc == Rat(0)) has_zero = true;
        if (dc < Rat(0)) ++negatives;
    }

    if (has_zero) {
        chart.quiver = QuiverType::Ainfinf;
        if (D.spec.m % 2 != 0) fail_internal("odd orthogonal rank cannot carry a two-sided chain");
        if (negatives > 0) fail_internal("two-sided chain with a negative-side dominant weight");
        std::map<Rat, std::vector<std::pair<Weight, Weight>>> levels;
        for (const auto& entry : sorted) levels[delta_coord(entry.first + b.rho)].push_back(entry);
        if (levels.begin()->second.size() != 1)
            fail_internal("two-sided chain bottom is not a single weight");
        chart.chain.push_back(
            {{0, 0}, levels.begin()->second[0].first, levels.begin()->second[0].second});
        int k = 0;
        for (auto it = std::next(levels.begin()); it != levels.end(); ++it) {
            ++k;
            if (it->second.size() != 2)
                fail_internal("chain level " + to_string(it->first) + " holds " +
                              std::to_string(it->second.size()) +
                              " weights instead of a branch pair");
            const std::pair<Weight, Weight>* plus = nullptr;
            const std::pair<Weight, Weight>* minus = nullptr;
            for (const auto& entry : it->second) {
                Rat trailing = (entry.first + b.rho).e.back();
                if (trailing > Rat(0)) plus = &entry;
                if (trailing < Rat(0)) minus = &entry;
            }
            if (!plus || !minus) fail_internal("branch pair without opposite trailing signs");
            chart.chain.push_back({{k, -1}, minus->first, minus->second});
            chart.chain.push_back({{k, +1}, plus->first, plus->second});
        }
        if (chart.max_k() < 1)
            fail_pre("radius " + std::to_string(radius) + " anchors no branch pair; enlarge it");
    } else {
        chart.quiver = QuiverType::Dinf;
        if (negatives > 1) fail_internal("one-sided chain with two negative-side weights");
        if (negatives == 0 || sorted.size() < 2)
            fail_pre("radius " + std::to_string(radius) +
                     " does not capture the doubled chain bottom; enlarge it");
        int k = 0;
        for (const auto& entry : sorted) chart.chain.push_back({{k++, 0}, entry.first, entry.second});
        // The bottom pair is exchanged by the delta flip.
        if (chart.s_dot(chart.chain[1].weight) != chart.chain[0].weight)
            fail_internal("chain bottom pair is not exchanged by the delta flip");
    }

    // The defining relation of the indexing, on every enumerated position.
    for (const auto& m : chart.chain) {
        ChainSlot image = m.slot;
        image.k = (chart.quiver == QuiverType::Dinf) ? 1 - m.slot.k : -m.slot.k;
        if (chart.weight_at(image) != chart.s_dot(m.weight))
            fail_internal("delta-flip relation fails at position " + m.slot.str());
    }
    return chart;
}

Window default_block_window(const BlockChart& chart) {
    // The resolution tails walk down the delta-flipped companions
    // lam(-1), lam(-2), ...; the deepest one the chart can name must fall
    // off the window, so the depth stops one short of its height drop.
    const int top = chart.max_k();
    const int jmax = (chart.quiver == QuiverType::Dinf) ? top - 1 : top;
    if (jmax < 1) fail_pre("chain too short to anchor a stabilizing window; enlarge the radius");
    const Weight& anchor = chart.chain.back().weight;
    Window probe(chart.borel, anchor, Rat(0));
    Rat depth(0);
    bool first = true;
    const std::vector<int> branches =
        chart.quiver == QuiverType::Dinf ? std::vector<int>{0} : std::vector<int>{-1, +1};
    for (int br : branches) {
        Rat d = probe.drop(chart.weight_at({-jmax, br}));
        if (first || d < depth) depth = d;
        first = false;
    }
    return Window(chart.borel, anchor, depth - Rat(1));
}

FormalCharacter kbar_character(const BlockChart& chart, CharRing& ring, const Weight& hw,
                               const Window& win) {
    const RootDatum& D = *chart.algebra;
    if (!so_dominant(D, hw))
        fail_pre("weight " + hw.str() + " is not dominant for the orthogonal Levi");
    FormalCharacter x = CharRing::truncate(ring.subsystem_simple(hw, so_positive(D)), win);
    for (const Weight& g : chart.borel.odd_positive) x = CharRing::odd_factor(x, -g, &win);
    return CharRing::geometric(x, double_delta(D), win);
}

namespace {

// Alternating resolution sum: head, then -+ alternation over stage(1),
// stage(2), ... until a whole stage falls below the window.  Exact on the
// window because every stage top only descends.
FormalCharacter alternating_tail(const BlockChart& chart, CharRing& ring, const Window& win,
                                 FormalCharacter head,
                                 const std::function<std::vector<Weight>(int)>& stage) {
    int sign = -1;
    for (int j = 1;; ++j, sign = -sign) {
        std::vector<Weight> hws = stage(j);
        bool live = false;
        for (const Weight& hw : hws)
            if (win.keeps(hw)) live = true;
        if (!live) break;
        for (const Weight& hw : hws) {
            FormalCharacter term = kbar_character(chart, ring, hw, win);
            if (sign > 0)
                head += term;
            else
                head -= term;
        }
    }
    return head;
}

void check_simple(const ChainSlot& slot, const Weight& hw, const FormalCharacter& ch) {
    if (ch.at(hw) != 1)
        fail_internal("simple character at position " + slot.str() + " has top coefficient " +
                      std::to_string(ch.at(hw)));
    for (const auto& [w, c] : ch.c)
        if (c < 0)
            fail_internal("simple character at position " + slot.str() +
                          " has a negative coefficient at " + w.str());
}

}  // namespace

BlockCharacters block_characters(const BlockChart& chart, CharRing& ring, const Window& win) {
    BlockCharacters out;
    const int top = chart.max_k();
    if (top < 2)
        fail_pre("character assembly needs chain positions up to 2; enlarge the radius");

    auto tail_weight = [&](int j, int branch) { return chart.weight_at({-j, branch}); };
    // The alternating sums stop at the first stage below the window; every
    // stage before that needs its mirrored chain position enumerated.
    auto require_stabilization = [&](int branch) {
        for (int j = 1;; ++j) {
            int mirror = (chart.quiver == QuiverType::Dinf) ? 1 + j : j;
            if (mirror > top)
                fail_pre("window reaches past chain position " + std::to_string(top) +
                         "; enlarge the radius or shrink the window");
            if (!win.keeps(tail_weight(j, branch))) break;
        }
    };

    auto euler_at = [&](const ChainSlot& slot) {
        ChainSlot flip = slot;
        flip.k = (chart.quiver == QuiverType::Dinf) ? 1 - slot.k : -slot.k;
        return kbar_character(chart, ring, chart.weight_at(slot), win) -
               kbar_character(chart, ring, chart.weight_at(flip), win);
    };

    if (chart.quiver == QuiverType::Dinf) {
        require_stabilization(0);
        for (int k : {0, 1}) {
            ChainSlot slot{k, 0};
            Weight hw = chart.weight_at(slot);
            FormalCharacter ch =
                alternating_tail(chart, ring, win, kbar_character(chart, ring, hw, win),
                                 [&](int j) { return std::vector<Weight>{tail_weight(j, 0)}; });
            check_simple(slot, hw, ch);
            out.simples[slot] = ch;
            out.kac[slot] = ch;
        }
        for (int k = 2; k <= top; ++k) {
            ChainSlot slot{k, 0};
            FormalCharacter e = euler_at(slot);
            FormalCharacter ch = e - out.simples[{k - 1, 0}];
            if (k == 2) ch -= out.simples[{0, 0}];
            check_simple(slot, chart.weight_at(slot), ch);
            out.simples[slot] = ch;
            out.kac[slot] = e;
        }
        for (int k = 0; k < top; ++k) {
            ChainSlot slot{k, 0};
            if (k == 0)
                out.projective[slot] = euler_at({2, 0}) - euler_at({1, 0});
            else if (k == 1)
                out.projective[slot] = euler_at({1, 0}) + euler_at({2, 0});
            else
                out.projective[slot] = euler_at(slot) + euler_at({k + 1, 0});
        }
    } else {
        require_stabilization(-1);
        require_stabilization(+1);
        ChainSlot bottom{0, 0};
        Weight hw0 = chart.weight_at(bottom);
        FormalCharacter ch0 = alternating_tail(
            chart, ring, win, kbar_character(chart, ring, hw0, win), [&](int j) {
                return std::vector<Weight>{tail_weight(j, -1), tail_weight(j, +1)};
            });
        check_simple(bottom, hw0, ch0);
        out.simples[bottom] = ch0;
        out.kac[bottom] = ch0;
        for (int branch : {-1, +1}) {
            for (int k = 1; k <= top; ++k) {
                ChainSlot slot{k, branch};
                FormalCharacter e = euler_at(slot);
                FormalCharacter ch = e - out.simples[chart.normalize({k - 1, branch})];
                check_simple(slot, chart.weight_at(slot), ch);
                out.simples[slot] = ch;
                out.kac[slot] = e;
            }
        }
        out.projective[bottom] = euler_at({1, +1}) + euler_at({1, -1});
        for (int branch : {-1, +1})
            for (int k = 1; k < top; ++k) {
                ChainSlot slot{k, branch};
                out.projective[slot] = euler_at(slot) + euler_at({k + 1, branch});
            }
    }

    for (const auto& m : chart.chain) {
        out.kbar[m.slot] = kbar_character(chart, ring, m.weight, win);
        out.euler[m.slot] = euler_at(m.slot);
    }
    return out;
}

BlockStructure block_structure(const BlockChart& chart) {
    BlockStructure out;
    const int top = chart.max_k();
    for (const auto& m : chart.chain) {
        const ChainSlot& s = m.slot;
        std::vector<std::vector<ChainSlot>> kac;
        if (chart.quiver == QuiverType::Dinf) {
            if (s.k <= 1)
                kac = {{s}};
            else if (s.k == 2)
                kac = {{s}, {{1, 0}, {0, 0}}};
            else
                kac = {{s}, {{s.k - 1, 0}}};
        } else {
            if (s.k == 0)
                kac = {{s}};
            else
                kac = {{s}, {chart.normalize({s.k - 1, s.branch})}};
        }
        out.kac_layers[s] = kac;

        if (s.k + 1 > top) continue;
        std::vector<std::vector<ChainSlot>> proj;
        if (chart.quiver == QuiverType::Dinf) {
            if (s.k <= 1)
                proj = {{s}, {{2, 0}}, {s}};
            else if (s.k == 2)
                proj = {{s}, {{3, 0}, {1, 0}, {0, 0}}, {s}};
            else
                proj = {{s}, {{s.k + 1, 0}, {s.k - 1, 0}}, {s}};
        } else {
            if (s.k == 0)
                proj = {{s}, {{1, +1}, {1, -1}}, {s}};
            else
                proj = {{s},
                        {ChainSlot{s.k + 1, s.branch}, chart.normalize({s.k - 1, s.branch})},
                        {s}};
        }
        out.projective_layers[s] = proj;
    }
    return out;
}

KostantTables kostant_tables(const BlockChart& chart, const WeylGroup& W, int degree_bound) {
    KostantTables out;
    out.degree_bound = degree_bound;
    const int top = chart.max_k();
    const bool dinf = chart.quiver == QuiverType::Dinf;

    for (const auto& m : chart.chain) {
        out.kac_nbar_h0[m.slot] = m.weight;

        // Deepest companion referenced by the homology row; rows are only
        // emitted when their whole depth range is enumerated.
        int deepest = dinf ? (m.slot.k <= 1 ? degree_bound + 1 : degree_bound + m.slot.k)
                           : (m.slot.k == 0 ? degree_bound : degree_bound + m.slot.k);
        if (deepest <= top) {
            std::vector<std::vector<Weight>> hom(degree_bound + 1);
            hom[0] = {m.weight};
            for (int j = 1; j <= degree_bound; ++j) {
                if (dinf) {
                    if (m.slot.k <= 1)
                        hom[j] = {chart.weight_at({-j, 0})};
                    else
                        hom[j] = {chart.weight_at({2 - j - m.slot.k, 0}),
                                  chart.weight_at({1 - j - m.slot.k, 0})};
                } else {
                    if (m.slot.k == 0)
                        hom[j] = {chart.weight_at({-j, +1}), chart.weight_at({-j, -1})};
                    else
                        hom[j] = {chart.weight_at({1 - j - m.slot.k, m.slot.branch}),
                                  chart.weight_at({-j - m.slot.k, m.slot.branch})};
                }
                std::sort(hom[j].begin(), hom[j].end());
            }
            out.kac_u_homology[m.slot] = hom;
        }

        if (m.slot.k + 1 > top) continue;
        std::vector<Weight> heads;
        if (dinf) {
            if (m.slot.k == 0)
                heads = {chart.weight_at({0, 0}), chart.weight_at({2, 0})};
            else
                heads = {m.weight, chart.weight_at({m.slot.k + 1, 0})};
        } else {
            if (m.slot.k == 0)
                heads = {m.weight, chart.weight_at({1, +1}), chart.weight_at({1, -1})};
            else
                heads = {m.weight, chart.weight_at({m.slot.k + 1, m.slot.branch})};
        }
        std::vector<std::vector<Weight>> coh(degree_bound + 1);
        for (int j = 0; j <= degree_bound; ++j) {
            for (const WeylElement* w : W.of_length(j))
                for (const Weight& h : heads) coh[j].push_back(W.dot(*w, h, chart.borel));
            std::sort(coh[j].begin(), coh[j].end());
        }
        out.proj_n_cohomology[m.slot] = coh;
    }
    return out;
}

VirtualG0Sum projective_g0_sum(const BlockChart& chart, CharRing& ring, const ChainSlot& slot) {
    auto euler = [&](ChainSlot s) {
        return ring.euler_shift_sum(chart.weight_at(s), chart.borel);
    };
    ChainSlot s = chart.normalize(slot);
    VirtualG0Sum out;
    if (chart.quiver == QuiverType::Dinf) {
        if (s.k == 0) {
            out = euler({2, 0});
            out -= euler({1, 0});
        } else {
            out = euler(s);
            out += euler({s.k + 1, 0});
        }
    } else if (s.k == 0) {
        out = euler({1, +1});
        out += euler({1, -1});
    } else {
        out = euler(s);
        out += euler({s.k + 1, s.branch});
    }
    return out;
}

namespace {

// Chart data around one atypical weight, wide enough that the position one
// step above it is enumerated and that the default window still keeps a
// given probe weight.
struct ChartBundle {
    BlockChart chart;
    Window win;
    BlockCharacters chars;
    ChainSlot slot;
};

ChartBundle chart_bundle(const Algebra& algebra, CharRing& ring, const Weight& lam,
                         const Weight& probe, const BorelData& b) {
    Rat dc = delta_coord(lam + b.rho);
    if (dc < Rat(0)) dc = -dc;
    int radius = 3;
    while (Rat(radius) < dc + Rat(2)) ++radius;
    for (int attempt = 0; attempt < 8; ++attempt, radius += 4) {
        BlockChart chart = enumerate_block(algebra, lam, radius);
        const ChainMember* pos = nullptr;
        for (const auto& m : chart.chain)
            if (m.weight == lam) pos = &m;
        if (!pos) fail_internal("weight missing from its own chart");
        if (pos->slot.k + 1 > chart.max_k()) continue;
        Window win = default_block_window(chart);
        if (!win.keeps(probe)) continue;
        ChainSlot slot = pos->slot;
        BlockCharacters chars = block_characters(chart, ring, win);
        return {std::move(chart), std::move(win), std::move(chars), slot};
    }
    fail_internal("no radius anchored a wide enough chart around " + lam.str());
}

}  // namespace

std::map<Weight, long long> induced_projective_decomposition(const Algebra& algebra,
                                                             CharRing& ring, const Weight& lam) {
    const RootDatum& D = *algebra;
    BorelData b = distinguished_borel(D);
    if (!D.g0_dominant(lam) || !D.is_integral(lam))
        fail_pre("induction seed " + lam.str() + " is not even integral dominant");

    FormalCharacter ch = ring.g0_simple(lam);
    for (const Weight& g : b.odd_positive) {
        ch = CharRing::odd_factor(ch, g, nullptr);
        ch = CharRing::odd_factor(ch, -g, nullptr);
    }
    CharRing::Decomposition dec = ring.decompose_into_g0(ch, nullptr);
    if (!dec.complete) fail_internal("finite induced character failed to decompose");

    // The multiplicity of each projective is the multiplicity of L0(lam)
    // inside the restriction of its top simple; any label with a nonzero
    // count already appears in the decomposition, so those are the only
    // candidates.  The reassembly at the end proves the counts.
    std::map<Weight, long long> mult;
    VirtualG0Sum total;
    for (const auto& entry : dec.parts.c) {
        const Weight& cand = entry.first;
        if (!is_integral_dominant(cand, b, DominanceScope::g)) continue;
        long long m = 0;
        VirtualG0Sum pch;
        if (typicality(cand, b).typical) {
            pch = ring.euler_shift_sum(cand, b);
            auto it = pch.c.find(lam);
            m = it == pch.c.end() ? 0 : it->second;
        } else {
            ChartBundle cb = chart_bundle(algebra, ring, cand, lam, b);
            CharRing::Decomposition res =
                ring.decompose_into_g0(cb.chars.simples[cb.slot], &cb.win);
            if (!res.complete)
                fail_internal("windowed simple character failed to decompose at " + cand.str());
            auto it = res.parts.c.find(lam);
            m = it == res.parts.c.end() ? 0 : it->second;
            if (m != 0) pch = projective_g0_sum(cb.chart, ring, cb.slot);
        }
        if (m < 0) fail_internal("negative restriction multiplicity at " + cand.str());
        if (m == 0) continue;
        mult[cand] = m;
        for (const auto& [w, k] : pch.c) total.add(w, k * m);
    }
    if (!(total == dec.parts))
        fail_internal("projective reassembly of the induced module disagrees with its content");
    return mult;
}

}  // namespace superbbw
