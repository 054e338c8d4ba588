#include "superbbw/characters.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "superbbw/util.hpp"

namespace superbbw {

void FormalCharacter::add(const Weight& w, long long k) {
    if (k == 0) return;
    auto it = c.find(w);
    if (it == c.end()) {
        c.emplace(w, k);
    } else {
        it->second += k;
        if (it->second == 0) c.erase(it);
    }
}

long long FormalCharacter::at(const Weight& w) const {
    auto it = c.find(w);
    return it == c.end() ? 0 : it->second;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    for (const auto& [w, k] : o.c) add(w, k);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
    for (const auto& [w, k] : o.c) add(w, -k);
    return *this;
}

bool FormalCharacter::operator==(const FormalCharacter& o) const {
    if (c.size() != o.c.size()) return false;
    for (const auto& [w, k] : c) {
        auto it = o.c.find(w);
        if (it == o.c.end() || it->second != k) return false;
    }
    return true;
}

std::vector<std::pair<Weight, long long>> FormalCharacter::sorted() const {
    std::vector<std::pair<Weight, long long>> out(c.begin(), c.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

FormalCharacter FormalCharacter::flipped() const {
    FormalCharacter out;
    for (const auto& [w, k] : c) out.add(-w, k);
    return out;
}

void VirtualG0Sum::add(const Weight& hw, long long k) {
    if (k == 0) return;
    auto it = c.find(hw);
    if (it == c.end()) {
        c.emplace(hw, k);
    } else {
        it->second += k;
        if (it->second == 0) c.erase(it);
    }
}

VirtualG0Sum& VirtualG0Sum::operator+=(const VirtualG0Sum& o) {
    for (const auto& [w, k] : o.c) add(w, k);
    return *this;
}

VirtualG0Sum& VirtualG0Sum::operator-=(const VirtualG0Sum& o) {
    for (const auto& [w, k] : o.c) add(w, -k);
    return *this;
}

VirtualG0Sum VirtualG0Sum::operator-() const {
    VirtualG0Sum out;
    for (const auto& [w, k] : c) out.c.emplace(w, -k);
    return out;
}

bool VirtualG0Sum::operator==(const VirtualG0Sum& o) const { return c == o.c; }

std::string VirtualG0Sum::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, k] : c) {
        if (!first) os << (k >= 0 ? " + " : " - ");
        else if (k < 0)
            os << "-";
        long long a = k >= 0 ? k : -k;
        if (a != 1) os << a << "*";
        os << "[" << w.str() << "]";
        first = false;
    }
    return os.str();
}

Window::Window(const BorelData& borel, Weight anchor, Rat depth)
    : anchor_(std::move(anchor)), depth_(depth), nd_(borel.datum->nd), ne_(borel.datum->ne) {
    // Solve f . s = 1 for every simple root s (underdetermined: free
    // coordinates are set to zero).
    std::vector<Weight> simples = borel.simple_roots();
    std::size_t k = simples.size(), n = nd_ + ne_;
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(n + 1, Rat(0)));
    auto coord = [&](const Weight& x, std::size_t i) { return i < nd_ ? x.d[i] : x.e[i - nd_]; };
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < n; ++j) m[r][j] = coord(simples[r], j);
        m[r][n] = Rat(1);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < n && rank < k; ++j) {
        std::size_t p = SIZE_MAX;
        for (std::size_t i = rank; i < k; ++i)
            if (m[i][j] != Rat(0)) {
                p = i;
                break;
            }
        if (p == SIZE_MAX) continue;
        std::swap(m[rank], m[p]);
        Rat inv = m[rank][j];
        for (std::size_t t = j; t <= n; ++t) m[rank][t] /= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == rank || m[i][j] == Rat(0)) continue;
            Rat f = m[i][j];
            for (std::size_t t = j; t <= n; ++t) m[i][t] -= f * m[rank][t];
        }
        pivot_col.push_back(j);
        ++rank;
    }
    for (std::size_t i = rank; i < k; ++i)
        if (m[i][n] != Rat(0)) fail_internal("height functional has no solution");
    functional_.assign(n, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) functional_[pivot_col[r]] = m[r][n];
}

Rat Window::drop(const Weight& nu) const {
    Rat s(0);
    for (std::size_t i = 0; i < nd_; ++i) s += functional_[i] * (anchor_.d[i] - nu.d[i]);
    for (std::size_t i = 0; i < ne_; ++i) s += functional_[nd_ + i] * (anchor_.e[i] - nu.e[i]);
    return s;
}

bool Window::keeps(const Weight& nu) const { return drop(nu) <= depth_; }

bool Window::safe(const Weight& nu, const WeylGroup& W) const {
    for (std::size_t i = 0; i < W.simple_count(); ++i)
        if (!keeps(W.simple_reflection(i).apply(nu))) return false;
    return keeps(nu);
}

CharRing::CharRing(const RootDatum& datum, const WeylGroup& W) : datum_(&datum), W_(&W) {}

FormalCharacter CharRing::freudenthal(const Weight& hw, const std::vector<Weight>& positive,
                                      const std::vector<Weight>& simples,
                                      const std::vector<const WeylElement*>& subgroup) {
    const RootDatum& D = *datum_;
    auto acp = [&](const Weight& x, const Weight& a) {
        return Rat(2) * D.aux_pair(x, a) / D.aux_pair(a, a);
    };
    for (const Weight& a : simples) {
        Rat t = acp(hw, a);
        if (!is_integer(t) || t < Rat(0))
            fail_pre("irreducible character needs a dominant integral highest weight, got " + hw.str());
    }
    if (positive.empty()) {
        FormalCharacter ch;
        ch.add(hw, 1);
        return ch;
    }

    Weight rhoh = D.zero_weight();
    for (const Weight& a : positive) rhoh += a;
    rhoh = Rat(1, 2) * rhoh;
    Rat ball = D.aux_pair(hw, hw);
    Rat top_shift = D.aux_pair(hw + rhoh, hw + rhoh);
    ConeSolver cone(simples, D.nd, D.ne);

    // All lattice points hw - (nonneg span of simples) inside the norm ball;
    // module weights form a subset and are all reached (weight strings stay
    // inside the ball).
    std::unordered_set<Weight, WeightHash> seen{hw};
    std::deque<Weight> queue{hw};
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        for (const Weight& a : simples) {
            Weight nxt = cur - a;
            if (seen.count(nxt)) continue;
            if (D.aux_pair(nxt, nxt) > ball) continue;
            seen.insert(nxt);
            queue.push_back(nxt);
            check_limit(seen.size(), "module weight enumeration");
        }
    }

    auto sub_dominant = [&](const Weight& x) -> Weight {
        for (const WeylElement* w : subgroup) {
            Weight y = w->apply(x);
            bool dom = true;
            for (const Weight& a : simples)
                if (acp(y, a) < Rat(0)) {
                    dom = false;
                    break;
                }
            if (dom) return y;
        }
        fail_internal("subgroup orbit misses the dominant chamber");
    };

    std::vector<std::pair<Rat, Weight>> dominants;  // (drop height, weight)
    for (const Weight& nu : seen) {
        bool dom = true;
        for (const Weight& a : simples)
            if (acp(nu, a) < Rat(0)) {
                dom = false;
                break;
            }
        if (!dom) continue;
        auto h = cone.height(hw - nu);
        if (!h) fail_internal("module weight outside the root span");
        dominants.emplace_back(*h, nu);
    }
    std::sort(dominants.begin(), dominants.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });

    std::unordered_map<Weight, long long, WeightHash> mult;
    for (const auto& [h, mu] : dominants) {
        if (mu == hw) {
            mult[mu] = 1;
            continue;
        }
        Rat num(0);
        for (const Weight& alpha : positive) {
            for (long long k = 1;; ++k) {
                Weight nu = mu + Rat(k) * alpha;
                auto cc = cone.coords(hw - nu);
                if (!cc) break;
                bool inside = true;
                for (const Rat& x : *cc)
                    if (x < Rat(0)) {
                        inside = false;
                        break;
                    }
                if (!inside) break;  // coordinates shrink monotonically in k
                if (!seen.count(nu)) continue;
                Weight rep = sub_dominant(nu);
                auto it = mult.find(rep);
                if (it == mult.end() || it->second == 0) continue;
                num += Rat(2) * Rat(it->second) * D.aux_pair(nu, alpha);
            }
        }
        Rat den = top_shift - D.aux_pair(mu + rhoh, mu + rhoh);
        if (den == Rat(0)) fail_internal("vanishing Freudenthal denominator");
        Rat m = num / den;
        if (!is_integer(m) || m < Rat(0)) fail_internal("non-integral weight multiplicity");
        if (m != Rat(0)) mult[mu] = m.numerator();
    }

    FormalCharacter ch;
    for (const auto& [mu, m] : mult) {
        if (m == 0) continue;
        std::unordered_set<Weight, WeightHash> orbit;
        for (const WeylElement* w : subgroup) orbit.insert(w->apply(mu));
        for (const Weight& nu : orbit) ch.add(nu, m);
    }
    return ch;
}

const FormalCharacter& CharRing::g0_simple(const Weight& hw) {
    auto it = cache_.find(hw);
    if (it != cache_.end()) return *it->second;
    auto ch = std::make_shared<FormalCharacter>(
        freudenthal(hw, datum_->even_positive, datum_->even_simples, W_->all()));
    auto [pos, inserted] = cache_.emplace(hw, std::move(ch));
    (void)inserted;
    return *pos->second;
}

FormalCharacter CharRing::subsystem_simple(const Weight& hw, const std::vector<Weight>& positive) {
    if (positive.empty()) {
        FormalCharacter ch;
        ch.add(hw, 1);
        return ch;
    }
    // Indecomposables of the subsystem serve as its simple roots.
    std::unordered_set<Weight, WeightHash> pos(positive.begin(), positive.end());
    std::vector<Weight> simples;
    for (const Weight& a : positive) {
        bool dec = false;
        for (const Weight& b : positive) {
            Weight c = a - b;
            if (!c.is_zero() && pos.count(c)) {
                dec = true;
                break;
            }
        }
        if (!dec) simples.push_back(a);
    }
    std::sort(simples.begin(), simples.end());
    return freudenthal(hw, positive, simples, W_->parabolic(simples));
}

VirtualG0Sum CharRing::vwc(const Weight& lam) {
    VirtualG0Sum out;
    auto loc = W_->locate_circ(lam);
    if (loc.singular) return out;
    out.add(loc.dominant, loc.w->length % 2 == 0 ? 1 : -1);
    return out;
}

VirtualG0Sum CharRing::euler_shift_sum(const Weight& lam, const BorelData& b) {
    std::size_t n = b.odd_positive.size();
    check_limit(std::size_t{1} << n, "odd subset enumeration");
    VirtualG0Sum out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Weight shift = datum_->zero_weight();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) shift += b.odd_positive[i];
        out += vwc(lam - shift);
    }
    return out;
}

FormalCharacter CharRing::truncate(const FormalCharacter& x, const Window& win) {
    FormalCharacter out;
    for (const auto& [w, k] : x.c)
        if (win.keeps(w)) out.add(w, k);
    return out;
}

FormalCharacter CharRing::tensor(const FormalCharacter& x, const FormalCharacter& y, const Window* win) {
    FormalCharacter out;
    for (const auto& [wx, kx] : x.c)
        for (const auto& [wy, ky] : y.c) {
            Weight w = wx + wy;
            if (win && !win->keeps(w)) continue;
            out.add(w, kx * ky);
        }
    return out;
}

FormalCharacter CharRing::odd_factor(const FormalCharacter& x, const Weight& gamma, const Window* win) {
    FormalCharacter out = x;
    for (const auto& [w, k] : x.c) {
        Weight shifted = w + gamma;
        if (win && !win->keeps(shifted)) continue;
        out.add(shifted, k);
    }
    return out;
}

FormalCharacter CharRing::geometric(const FormalCharacter& x, const Weight& alpha, const Window& win) {
    FormalCharacter out;
    for (const auto& [w, k] : x.c) {
        for (long long j = 0;; ++j) {
            Weight shifted = w - Rat(j) * alpha;
            if (!win.keeps(shifted)) break;
            out.add(shifted, k);
        }
    }
    return out;
}

FormalCharacter CharRing::euler_series(const Weight& lam, const BorelData& b, const Window& win) {
    FormalCharacter ch;
    for (const auto* w : W_->all()) {
        Weight ex = W_->dot(*w, lam, b);
        if (!win.keeps(ex)) continue;
        ch.add(ex, w->length % 2 == 0 ? 1 : -1);
    }
    for (const Weight& g : b.odd_positive) ch = odd_factor(ch, -g, &win);
    for (const Weight& a : datum_->even_positive) ch = geometric(ch, a, win);
    return ch;
}

FormalCharacter CharRing::expand(const VirtualG0Sum& v) {
    FormalCharacter out;
    for (const auto& [hw, k] : v.c) {
        const FormalCharacter& ch = g0_simple(hw);
        for (const auto& [w, m] : ch.c) out.add(w, k * m);
    }
    return out;
}

FormalCharacter CharRing::expand_on_window(const VirtualG0Sum& v, const Window& win) {
    return truncate(expand(v), win);
}

CharRing::Decomposition CharRing::decompose_into_g0(const FormalCharacter& ch, const Window* win) {
    Decomposition out;
    FormalCharacter rest = ch;
    const Weight rho0 = datum_->rho0;
    while (!rest.is_zero()) {
        check_limit(out.parts.c.size() + 1, "even-part decomposition");
        // Highest constituent = support weight maximizing |nu + rho0| in the
        // positive definite form (ties broken by coordinate order).
        const Weight* best = nullptr;
        Rat best_norm(0);
        for (const auto& [w, k] : rest.c) {
            Rat nn = datum_->aux_pair(w + rho0, w + rho0);
            if (!best || nn > best_norm || (nn == best_norm && *best < w)) {
                best = &w;
                best_norm = nn;
            }
        }
        Weight top = *best;
        if (!datum_->g0_dominant(top) || !datum_->is_integral(top)) {
            // Window truncation broke invariance near the boundary.
            out.complete = false;
            out.remainder = rest;
            return out;
        }
        long long k = rest.at(top);
        out.parts.add(top, k);
        const FormalCharacter& irr = g0_simple(top);
        for (const auto& [w, m] : irr.c) {
            if (win && !win->keeps(w)) continue;
            rest.add(w, -k * m);
        }
    }
    return out;
}

}  // namespace superbbw
