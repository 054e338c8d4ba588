#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "superbbw/blocks.hpp"
#include "superbbw/genericity.hpp"
#include "superbbw/util.hpp"

using namespace superbbw;

namespace {

Weight mk(const RootDatum& D, std::vector<Rat> d, std::vector<Rat> e) {
    Weight w = D.zero_weight();
    for (std::size_t i = 0; i < d.size(); ++i) w.d[i] = d[i];
    for (std::size_t i = 0; i < e.size(); ++i) w.e[i] = e[i];
    return D.canonicalize(w);
}

}  // namespace

TEST_CASE("one-sided chain of the osp(3|2) trivial-weight block") {
    auto D = make_algebra({Family::osp, 3, 1});
    BlockChart chart = enumerate_block(D, mk(*D, {0}, {0}), 9);

    CHECK(chart.quiver == QuiverType::Dinf);
    REQUIRE(chart.chain.size() == 10);
    CHECK(chart.chain[0].weight == mk(*D, {0}, {0}));
    for (int k = 1; k <= 9; ++k) {
        CHECK(chart.chain[k].slot == ChainSlot{k, 0});
        CHECK(chart.chain[k].weight == mk(*D, {k}, {k - 1}));
    }
    CHECK(chart.max_k() == 9);

    // Companions below the bottom come from the delta flip.
    CHECK(chart.s_dot(chart.chain[1].weight) == chart.chain[0].weight);
    CHECK(chart.weight_at({-1, 0}) == mk(*D, {-1}, {1}));
    CHECK(chart.weight_at({-8, 0}) == mk(*D, {-8}, {8}));
    CHECK_THROWS_AS((void)chart.weight_at({-9, 0}), SbwError);

    // Seeding anywhere in the block finds the same chain.
    BlockChart again = enumerate_block(D, mk(*D, {3}, {2}), 9);
    REQUIRE(again.chain.size() == chart.chain.size());
    for (std::size_t i = 0; i < chart.chain.size(); ++i)
        CHECK(again.chain[i].weight == chart.chain[i].weight);
}

TEST_CASE("chart preconditions") {
    auto gl = make_algebra({Family::gl, 2, 1});
    CHECK_THROWS_AS((void)enumerate_block(gl, mk(*gl, {0}, {0, 0}), 5), SbwError);

    auto D = make_algebra({Family::osp, 3, 1});
    // Typical weight: no chain.
    CHECK_THROWS_AS((void)enumerate_block(D, mk(*D, {1}, {1}), 5), SbwError);
    // Radius below the seed's delta coordinate.
    CHECK_THROWS_AS((void)enumerate_block(D, mk(*D, {2}, {1}), 1), SbwError);
    // Non-dominant seed.
    CHECK_THROWS_AS((void)enumerate_block(D, mk(*D, {-3}, {1}), 5), SbwError);
}

TEST_CASE("osp(3|2) block characters") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BorelData b = distinguished_borel(*D);
    BlockChart chart = enumerate_block(D, mk(*D, {0}, {0}), 9);
    Window win = default_block_window(chart);
    BlockCharacters bc = block_characters(chart, ring, win);

    // The bottom simple is the trivial module.
    CHECK(bc.simples[{0, 0}].c.size() == 1);
    CHECK(bc.simples[{0, 0}].at(mk(*D, {0}, {0})) == 1);

    // Its partner is the five-dimensional natural module.
    const FormalCharacter& nat = bc.simples[{1, 0}];
    CHECK(nat.c.size() == 5);
    for (auto dw : std::vector<std::vector<Rat>>{{1}, {-1}, {0}})
        CHECK(nat.at(mk(*D, {dw[0]}, {0})) >= 0);
    CHECK(nat.at(mk(*D, {1}, {0})) == 1);
    CHECK(nat.at(mk(*D, {-1}, {0})) == 1);
    CHECK(nat.at(mk(*D, {0}, {1})) == 1);
    CHECK(nat.at(mk(*D, {0}, {-1})) == 1);
    CHECK(nat.at(mk(*D, {0}, {0})) == 1);

    // Euler forms against the finite shifted-orbit route.
    for (int k = 0; k <= 4; ++k) {
        FormalCharacter viaSum =
            ring.expand_on_window(ring.euler_shift_sum(chart.weight_at({k, 0}), b), win);
        CHECK(bc.euler[{k, 0}] == viaSum);
    }

    // Two upward paths into the parabolically induced character.
    CHECK(bc.kbar[{0, 0}].at(mk(*D, {-2}, {0})) == 2);
    for (int k = 0; k <= 9; ++k) CHECK(bc.kbar[{k, 0}].at(chart.weight_at({k, 0})) == 1);

    // Projective tops, positivity, and composition content: the bottom
    // projectives are built from two copies of their own simple plus the
    // position-two simple.
    CHECK(bc.projective[{0, 0}].at(chart.weight_at({2, 0})) == 1);
    CHECK(bc.projective[{0, 0}] ==
          bc.simples[{2, 0}] + bc.simples[{0, 0}] + bc.simples[{0, 0}]);
    CHECK(bc.projective[{1, 0}] ==
          bc.simples[{2, 0}] + bc.simples[{1, 0}] + bc.simples[{1, 0}]);
    CHECK(bc.projective[{2, 0}] == bc.simples[{2, 0}] + bc.simples[{2, 0}] +
                                       bc.simples[{3, 0}] + bc.simples[{1, 0}] +
                                       bc.simples[{0, 0}]);
    for (const auto& [w, c] : bc.projective[{0, 0}].c) CHECK(c >= 0);
    for (const auto& [w, c] : bc.projective[{1, 0}].c) CHECK(c >= 0);

    // Projective characters against the exact virtual-sum route.
    for (int k = 0; k <= 4; ++k) {
        FormalCharacter viaSum =
            ring.expand_on_window(projective_g0_sum(chart, ring, {k, 0}), win);
        CHECK(bc.projective[{k, 0}] == viaSum);
    }
}

TEST_CASE("osp(3|2) layer tables and homology tables") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    BlockChart chart = enumerate_block(D, mk(*D, {0}, {0}), 9);
    BlockStructure st = block_structure(chart);

    using Layers = std::vector<std::vector<ChainSlot>>;
    CHECK(st.kac_layers[{0, 0}] == Layers{{{0, 0}}});
    CHECK(st.kac_layers[{1, 0}] == Layers{{{1, 0}}});
    CHECK(st.kac_layers[{2, 0}] == Layers{{{2, 0}}, {{1, 0}, {0, 0}}});
    CHECK(st.kac_layers[{3, 0}] == Layers{{{3, 0}}, {{2, 0}}});
    CHECK(st.projective_layers[{0, 0}] == Layers{{{0, 0}}, {{2, 0}}, {{0, 0}}});
    CHECK(st.projective_layers[{1, 0}] == Layers{{{1, 0}}, {{2, 0}}, {{1, 0}}});
    CHECK(st.projective_layers[{2, 0}] ==
          Layers{{{2, 0}}, {{3, 0}, {1, 0}, {0, 0}}, {{2, 0}}});
    CHECK(st.projective_layers[{3, 0}] == Layers{{{3, 0}}, {{4, 0}, {2, 0}}, {{3, 0}}});
    CHECK(st.projective_layers.count({9, 0}) == 0);

    KostantTables kt = kostant_tables(chart, W, 3);
    auto wt = [&](std::vector<Rat> d, std::vector<Rat> e) { return mk(*D, d, e); };

    REQUIRE(kt.kac_u_homology.count({0, 0}) == 1);
    const auto& hom0 = kt.kac_u_homology[{0, 0}];
    CHECK(hom0[0] == std::vector<Weight>{wt({0}, {0})});
    CHECK(hom0[1] == std::vector<Weight>{wt({-1}, {1})});
    CHECK(hom0[2] == std::vector<Weight>{wt({-2}, {2})});
    CHECK(hom0[3] == std::vector<Weight>{wt({-3}, {3})});

    REQUIRE(kt.kac_u_homology.count({2, 0}) == 1);
    const auto& hom2 = kt.kac_u_homology[{2, 0}];
    CHECK(hom2[0] == std::vector<Weight>{wt({2}, {1})});
    CHECK(hom2[1] == std::vector<Weight>{wt({-2}, {2}), wt({-1}, {1})});
    CHECK(hom2[2] == std::vector<Weight>{wt({-3}, {3}), wt({-2}, {2})});
    CHECK(hom2[3] == std::vector<Weight>{wt({-4}, {4}), wt({-3}, {3})});
    CHECK(kt.kac_u_homology.count({7, 0}) == 0);

    REQUIRE(kt.proj_n_cohomology.count({0, 0}) == 1);
    const auto& coh0 = kt.proj_n_cohomology[{0, 0}];
    CHECK(coh0[0] == std::vector<Weight>{wt({0}, {0}), wt({2}, {1})});
    CHECK(coh0[1] == std::vector<Weight>{wt({-1}, {1}), wt({0}, {-1}), wt({1}, {0}),
                                         wt({2}, {-2})});
    CHECK(coh0[2] == std::vector<Weight>{wt({-1}, {-2}), wt({1}, {-1})});
    CHECK(coh0[3].empty());

    REQUIRE(kt.proj_n_cohomology.count({1, 0}) == 1);
    const auto& coh1 = kt.proj_n_cohomology[{1, 0}];
    CHECK(coh1[0] == std::vector<Weight>{wt({1}, {0}), wt({2}, {1})});
    CHECK(coh1[1] ==
          std::vector<Weight>{wt({-1}, {1}), wt({0}, {0}), wt({1}, {-1}), wt({2}, {-2})});
    CHECK(coh1[2] == std::vector<Weight>{wt({-1}, {-2}), wt({0}, {-1})});

    CHECK(kt.kac_nbar_h0[{2, 0}] == wt({2}, {1}));

    // Kac multiplicities of each simple against the degree-zero heads.
    for (const auto& [sa, coh] : kt.proj_n_cohomology) {
        for (const auto& mb : chart.chain) {
            int from_layers = 0;
            for (const auto& layer : st.kac_layers[mb.slot])
                for (const ChainSlot& s : layer)
                    if (s == sa) ++from_layers;
            int from_heads = 0;
            for (const Weight& h : coh[0])
                if (h == mb.weight) ++from_heads;
            CHECK(from_layers == from_heads);
        }
    }
}

TEST_CASE("one-sided chain of the osp(4|2) trivial-weight block") {
    auto D = make_algebra({Family::osp, 4, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BorelData b = distinguished_borel(*D);
    BlockChart chart = enumerate_block(D, mk(*D, {0}, {0, 0}), 6);

    CHECK(chart.quiver == QuiverType::Dinf);
    REQUIRE(chart.chain.size() == 7);
    CHECK(chart.chain[0].weight == mk(*D, {0}, {0, 0}));
    CHECK(chart.chain[1].weight == mk(*D, {2}, {0, 0}));
    for (int k = 2; k <= 6; ++k) CHECK(chart.chain[k].weight == mk(*D, {k + 1}, {k - 1, 0}));

    Window win = default_block_window(chart);
    BlockCharacters bc = block_characters(chart, ring, win);

    CHECK(bc.simples[{0, 0}].c.size() == 1);
    CHECK(bc.simples[{0, 0}].at(mk(*D, {0}, {0, 0})) == 1);

    // The partner of the trivial module is the adjoint one.
    const FormalCharacter& adj = bc.simples[{1, 0}];
    CHECK(adj.c.size() == 15);
    CHECK(adj.at(mk(*D, {0}, {0, 0})) == 3);
    CHECK(adj.at(mk(*D, {2}, {0, 0})) == 1);
    CHECK(adj.at(mk(*D, {1}, {1, 0})) == 1);
    CHECK(adj.at(mk(*D, {0}, {1, 1})) == 1);
    CHECK(adj.at(mk(*D, {0}, {1, -1})) == 1);

    for (int k = 0; k <= 3; ++k) {
        FormalCharacter viaSum =
            ring.expand_on_window(ring.euler_shift_sum(chart.weight_at({k, 0}), b), win);
        CHECK(bc.euler[{k, 0}] == viaSum);
    }
}

TEST_CASE("two-sided chain of an osp(4|2) block") {
    auto D = make_algebra({Family::osp, 4, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BorelData b = distinguished_borel(*D);
    Weight seed = mk(*D, {1}, {1, 0});
    BlockChart chart = enumerate_block(D, seed, 6);

    CHECK(chart.quiver == QuiverType::Ainfinf);
    REQUIRE(chart.chain.size() == 11);
    CHECK(chart.chain[0].slot == ChainSlot{0, 0});
    CHECK(chart.chain[0].weight == seed);

    auto at = [&](int k, int br) { return chart.weight_at({k, br}); };
    CHECK(at(1, -1) == mk(*D, {2}, {1, -1}));
    CHECK(at(1, +1) == mk(*D, {2}, {1, 1}));
    // The next shifted-orbit level is skipped: position 2 sits two delta
    // steps above position 1.
    CHECK(at(2, -1) == mk(*D, {4}, {2, -2}));
    CHECK(at(2, +1) == mk(*D, {4}, {2, 2}));
    CHECK(at(3, +1) == mk(*D, {5}, {3, 2}));
    CHECK(at(4, +1) == mk(*D, {6}, {4, 2}));
    CHECK(at(5, +1) == mk(*D, {7}, {5, 2}));
    CHECK(at(-1, +1) == mk(*D, {0}, {1, 1}));
    CHECK(at(-2, -1) == mk(*D, {-2}, {2, -2}));

    // The bottom is fixed by the delta flip and its Euler form vanishes.
    CHECK(chart.s_dot(seed) == seed);
    Window win = default_block_window(chart);
    BlockCharacters bc = block_characters(chart, ring, win);
    CHECK(bc.euler[{0, 0}].is_zero());
    CHECK(ring.expand_on_window(ring.euler_shift_sum(seed, b), win).is_zero());

    for (int br : {-1, +1})
        for (int k = 1; k <= 2; ++k) {
            FormalCharacter viaSum =
                ring.expand_on_window(ring.euler_shift_sum(at(k, br), b), win);
            CHECK(bc.euler[{k, br}] == viaSum);
            CHECK(bc.kac[{k, br}] == bc.euler[{k, br}]);
        }

    for (const auto& [w, c] : bc.projective[{0, 0}].c) CHECK(c >= 0);
    CHECK(bc.projective[{0, 0}] == bc.simples[{1, +1}] + bc.simples[{1, -1}] +
                                       bc.simples[{0, 0}] + bc.simples[{0, 0}]);

    BlockStructure st = block_structure(chart);
    using Layers = std::vector<std::vector<ChainSlot>>;
    CHECK(st.kac_layers[{0, 0}] == Layers{{{0, 0}}});
    CHECK(st.kac_layers[{1, +1}] == Layers{{{1, +1}}, {{0, 0}}});
    CHECK(st.kac_layers[{2, -1}] == Layers{{{2, -1}}, {{1, -1}}});
    CHECK(st.projective_layers[{0, 0}] == Layers{{{0, 0}}, {{1, +1}, {1, -1}}, {{0, 0}}});
    CHECK(st.projective_layers[{1, +1}] ==
          Layers{{{1, +1}}, {{2, +1}, {0, 0}}, {{1, +1}}});

    KostantTables kt = kostant_tables(chart, W, 2);
    auto wt = [&](std::vector<Rat> d, std::vector<Rat> e) { return mk(*D, d, e); };
    REQUIRE(kt.kac_u_homology.count({0, 0}) == 1);
    const auto& hom0 = kt.kac_u_homology[{0, 0}];
    CHECK(hom0[1] == std::vector<Weight>{wt({0}, {1, -1}), wt({0}, {1, 1})});
    CHECK(hom0[2] == std::vector<Weight>{wt({-2}, {2, -2}), wt({-2}, {2, 2})});
    REQUIRE(kt.kac_u_homology.count({1, +1}) == 1);
    const auto& hom1p = kt.kac_u_homology[{1, +1}];
    CHECK(hom1p[1] == std::vector<Weight>{wt({-2}, {2, 2}), wt({0}, {1, 1})});
    CHECK(hom1p[2] == std::vector<Weight>{wt({-3}, {3, 2}), wt({-2}, {2, 2})});
    CHECK(kt.kac_u_homology.count({4, +1}) == 0);

    REQUIRE(kt.proj_n_cohomology.count({0, 0}) == 1);
    CHECK(kt.proj_n_cohomology[{0, 0}][0] ==
          std::vector<Weight>{wt({1}, {1, 0}), wt({2}, {1, -1}), wt({2}, {1, 1})});
}

TEST_CASE("projective content of modules induced from the even part") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BorelData b = distinguished_borel(*D);

    for (auto seed : std::vector<std::vector<Rat>>{{0, 0}, {0, 1}, {1, 1}}) {
        Weight lam = mk(*D, {seed[0]}, {seed[1]});
        std::map<Weight, long long> mult = induced_projective_decomposition(D, ring, lam);
        CHECK(!mult.empty());

        // Reassemble and compare with the full induced character.
        FormalCharacter ch = ring.g0_simple(lam);
        for (const Weight& g : b.odd_positive) {
            ch = CharRing::odd_factor(ch, g, nullptr);
            ch = CharRing::odd_factor(ch, -g, nullptr);
        }
        auto dec = ring.decompose_into_g0(ch, nullptr);
        REQUIRE(dec.complete);

        VirtualG0Sum total;
        for (const auto& [w, c] : mult) {
            CHECK(c > 0);
            CHECK(is_integral_dominant(w, b, DominanceScope::g));
            VirtualG0Sum p;
            if (typicality(w, b).typical) {
                p = ring.euler_shift_sum(w, b);
            } else {
                Rat dc = (w + b.rho).d[0];
                if (dc < Rat(0)) dc = -dc;
                int radius = 4;
                while (Rat(radius) < dc + Rat(3)) ++radius;
                BlockChart sub = enumerate_block(D, w, radius);
                const ChainMember* pos = nullptr;
                for (const auto& m : sub.chain)
                    if (m.weight == w) pos = &m;
                REQUIRE(pos != nullptr);
                p = projective_g0_sum(sub, ring, pos->slot);
            }
            for (const auto& [hw, k] : p.c) total.add(hw, k * c);
        }
        CHECK(total == dec.parts);
    }
}
