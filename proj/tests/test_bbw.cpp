#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superbbw/bbw.hpp"
#include "superbbw/util.hpp"

#include <algorithm>

using namespace superbbw;

namespace {

Weight mk(const RootDatum& D, std::vector<Rat> d, std::vector<Rat> e) {
    Weight w = D.zero_weight();
    for (std::size_t i = 0; i < d.size(); ++i) w.d[i] = d[i];
    for (std::size_t i = 0; i < e.size(); ++i) w.e[i] = e[i];
    return D.canonicalize(w);
}

}  // namespace

TEST_CASE("raising normalization") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    auto b = distinguished_borel(*D);

    // Only the short even root is simple here, so raising happens in the
    // epsilon coordinate.
    auto step = demazure_step(mk(*D, {Rat(0)}, {Rat(-2)}), b, W);
    REQUIRE(step.has_value());
    CHECK(step->alpha == mk(*D, {Rat(0)}, {Rat(1)}));
    CHECK(step->result == mk(*D, {Rat(0)}, {Rat(1)}));
    CHECK_FALSE(demazure_step(step->result, b, W).has_value());

    // In the system with an anisotropic odd simple root, its double is the
    // raising reflection.
    auto bw = borel_from_sequence(*D, {"e1", "d1"});
    auto step2 = demazure_step(mk(*D, {Rat(-3)}, {Rat(0)}), bw, W);
    REQUIRE(step2.has_value());
    CHECK(step2->alpha == mk(*D, {Rat(2)}, {Rat(0)}));
    CHECK(step2->result == mk(*D, {Rat(2)}, {Rat(0)}));
}

TEST_CASE("typical weights give one simple module") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BBWTarget target{distinguished_borel(*D), std::nullopt};

    auto top = solve_bbw(mk(*D, {Rat(3)}, {Rat(1)}), target, W, ring);
    CHECK(top.complete);
    CHECK(top.normalization_shift == 0);
    REQUIRE(top.constituents.size() == 1);
    CHECK(top.constituents[0].degree == 0);
    CHECK(top.constituents[0].kind == ConstituentKind::SimpleModule);
    CHECK(top.constituents[0].hw == mk(*D, {Rat(3)}, {Rat(1)}));
    REQUIRE(top.constituents[0].character.has_value());
    CHECK(*top.constituents[0].character == top.euler);

    auto deg1 = solve_bbw(mk(*D, {Rat(-4)}, {Rat(1)}), target, W, ring);
    CHECK(deg1.complete);
    REQUIRE(deg1.constituents.size() == 1);
    CHECK(deg1.constituents[0].degree == 1);
    CHECK(deg1.constituents[0].hw == mk(*D, {Rat(5)}, {Rat(1)}));

    // Typical and shifted-singular: everything vanishes.
    auto gone = solve_bbw(mk(*D, {Rat(2)}, {Rat(-1, 2)}), target, W, ring);
    CHECK(gone.complete);
    CHECK(gone.constituents.empty());

    CHECK_THROWS_AS((void)solve_bbw(mk(*D, {Rat(1, 3)}, {Rat(0)}), target, W, ring), SbwError);
}

TEST_CASE("type I distinguished systems produce induced modules") {
    auto GL = make_algebra({Family::gl, 2, 1});
    WeylGroup W(*GL);
    CharRing ring(*GL, W);
    BBWTarget target{distinguished_borel(*GL), std::nullopt};

    // Atypical weight in degree zero.
    auto zero = solve_bbw(GL->zero_weight(), target, W, ring);
    CHECK(zero.complete);
    REQUIRE(zero.constituents.size() == 1);
    CHECK(zero.constituents[0].degree == 0);
    CHECK(zero.constituents[0].kind == ConstituentKind::KacModule);
    CHECK(zero.constituents[0].hw == GL->zero_weight());
    CHECK(*zero.constituents[0].character == zero.euler);

    auto atyp = solve_bbw(mk(*GL, {Rat(2)}, {Rat(2), Rat(-2)}), target, W, ring);
    CHECK(atyp.complete);
    REQUIRE(atyp.constituents.size() == 1);
    CHECK(atyp.constituents[0].kind == ConstituentKind::KacModule);
    CHECK(atyp.constituents[0].degree == 0);

    // Shifted-singular input vanishes.
    auto gone = solve_bbw(mk(*GL, {Rat(0)}, {Rat(0), Rat(1)}), target, W, ring);
    CHECK(gone.complete);
    CHECK(gone.constituents.empty());

    // Anti-dominant but typical input normalizes first, then resolves as a
    // simple module one degree up.
    auto raised = solve_bbw(mk(*GL, {Rat(0)}, {Rat(0), Rat(2)}), target, W, ring);
    CHECK(raised.complete);
    CHECK(raised.normalization_shift == 1);
    REQUIRE(raised.constituents.size() == 1);
    CHECK(raised.constituents[0].degree == 1);
    CHECK(raised.constituents[0].kind == ConstituentKind::SimpleModule);
    CHECK(raised.constituents[0].hw == mk(*GL, {Rat(0)}, {Rat(1), Rat(1)}));
}

TEST_CASE("distinguished orthosymplectic systems split into a module and its twist") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BBWTarget target{distinguished_borel(*D), std::nullopt};

    auto zero = solve_bbw(D->zero_weight(), target, W, ring);
    CHECK(zero.complete);
    REQUIRE(zero.constituents.size() == 2);
    CHECK(zero.constituents[0].degree == 0);
    CHECK(zero.constituents[0].kind == ConstituentKind::KacModule);
    CHECK(zero.constituents[0].hw == D->zero_weight());
    CHECK(zero.constituents[1].degree == 1);
    CHECK(zero.constituents[1].kind == ConstituentKind::DualKacModule);
    CHECK(zero.constituents[1].hw == mk(*D, {Rat(1)}, {Rat(0)}));
    // Atypical boundary weight: no character is attached.
    CHECK_FALSE(zero.constituents[0].character.has_value());

    auto one = solve_bbw(mk(*D, {Rat(1)}, {Rat(0)}), target, W, ring);
    CHECK(one.complete);
    REQUIRE(one.constituents.size() == 2);
    CHECK(one.constituents[0].degree == 0);
    CHECK(one.constituents[0].kind == ConstituentKind::KacModule);
    CHECK(one.constituents[0].hw == mk(*D, {Rat(1)}, {Rat(0)}));
    CHECK(one.constituents[1].degree == 1);
    CHECK(one.constituents[1].kind == ConstituentKind::DualKacModule);
    CHECK(one.constituents[1].hw == D->zero_weight());
}

TEST_CASE("generic weights on other systems resolve through the twisted action") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    auto bw = borel_from_sequence(*D, {"e1", "d1"});
    BBWTarget target{bw, std::nullopt};

    // Atypical against delta + eps but far from every wall.
    Weight lam = mk(*D, {Rat(20)}, {Rat(21)});
    REQUIRE_FALSE(typicality(lam, bw).typical);
    REQUIRE(genericness(lam, bw, W, GenericMode::Full).generic);
    auto rep = solve_bbw(lam, target, W, ring);
    CHECK(rep.complete);
    REQUIRE(rep.constituents.size() == 1);
    CHECK(rep.constituents[0].degree == 0);
    CHECK(rep.constituents[0].kind == ConstituentKind::EulerOnly);
    CHECK(rep.constituents[0].hw == lam);
    REQUIRE(rep.constituents[0].top.has_value());
    CHECK(*rep.constituents[0].top == lam);
    CHECK(*rep.constituents[0].character == rep.euler);
}

TEST_CASE("everything else gets a bounded support report") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    auto bw = borel_from_sequence(*D, {"e1", "d1"});
    BBWTarget target{bw, std::nullopt};

    Weight lam = mk(*D, {Rat(2)}, {Rat(3)});
    REQUIRE_FALSE(typicality(lam, bw).typical);
    REQUIRE_FALSE(genericness(lam, bw, W, GenericMode::Full).generic);
    auto rep = solve_bbw(lam, target, W, ring);
    CHECK_FALSE(rep.complete);
    CHECK(rep.degree_cap == 2);
    REQUIRE_FALSE(rep.support.empty());
    CHECK(rep.support[0].degree == 0);
    const auto& row0 = rep.support[0].candidates;
    CHECK(std::find(row0.begin(), row0.end(), lam) != row0.end());
    // (0,2) survives: transported to the distinguished system it becomes the
    // dominant weight (1,1).
    CHECK(std::find(row0.begin(), row0.end(), mk(*D, {Rat(0)}, {Rat(2)})) != row0.end());
    CHECK(row0.size() == 8);
    for (const auto& row : rep.support) {
        CHECK(row.degree <= static_cast<int>(rep.degree_cap));
        for (const auto& hw : row.candidates) CHECK(is_integral_dominant(hw, bw, DominanceScope::g));
    }
    CHECK(rep.euler == ring.euler_shift_sum(lam, bw));
}

TEST_CASE("radical targets report support filtered by the Levi") {
    auto D = make_algebra({Family::osp, 3, 1});
    WeylGroup W(*D);
    CharRing ring(*D, W);
    auto b = distinguished_borel(*D);
    auto p = max_typical_parabolic(b);
    BBWTarget target{b, p};

    Weight lam = mk(*D, {Rat(2)}, {Rat(3)});
    auto rep = solve_bbw(lam, target, W, ring);
    CHECK_FALSE(rep.complete);
    CHECK(rep.degree_cap == 1);
    REQUIRE(rep.support.size() == 1);
    CHECK(rep.support[0].degree == 0);
    // lam minus the odd subset sums, kept when dominant: (2,3), (1,3), (1,4)
    // and (1,2); the rest fail the tail condition or even dominance.
    CHECK(rep.support[0].candidates.size() == 4);

    CHECK_THROWS_AS((void)solve_bbw(mk(*D, {Rat(2)}, {Rat(-1)}), target, W, ring), SbwError);
}

TEST_CASE("mixed type I system keeps the trivial weight in both degrees") {
    auto GL = make_algebra({Family::gl, 2, 1});
    WeylGroup W(*GL);
    CharRing ring(*GL, W);
    auto bw = borel_from_sequence(*GL, {"e1", "d1", "e2"});
    BBWTarget target{bw, std::nullopt};

    auto rep = solve_bbw(GL->zero_weight(), target, W, ring);
    CHECK_FALSE(rep.complete);
    CHECK(rep.degree_cap == 1);
    REQUIRE(rep.support.size() == 2);
    CHECK(rep.support[0].degree == 0);
    CHECK(rep.support[1].degree == 1);
    REQUIRE(rep.support[0].candidates.size() == 1);
    REQUIRE(rep.support[1].candidates.size() == 1);
    CHECK(rep.support[0].candidates[0] == GL->zero_weight());
    CHECK(rep.support[1].candidates[0] == GL->zero_weight());
}
