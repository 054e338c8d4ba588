#include "superbbw/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "superbbw/util.hpp"

namespace superbbw {

namespace {

Weight unit_d(std::size_t nd, std::size_t ne, std::size_t i, Rat c = Rat(1)) {
    Weight w = Weight::zero(nd, ne);
    w.d[i] = c;
    return w;
}

Weight unit_e(std::size_t nd, std::size_t ne, std::size_t i, Rat c = Rat(1)) {
    Weight w = Weight::zero(nd, ne);
    w.e[i] = c;
    return w;
}

std::vector<std::vector<Rat>> diagonal_gram(const std::vector<Rat>& diag) {
    std::size_t n = diag.size();
    std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = diag[i];
    return g;
}

}  // namespace

std::string AlgebraSpec::str() const {
    std::ostringstream os;
    switch (family) {
        case Family::gl: os << "gl(" << m << "|" << n << ")"; break;
        case Family::sl: os << "sl(" << m << "|" << n << ")"; break;
        case Family::osp: os << "osp(" << m << "|" << 2 * n << ")"; break;
        case Family::d21: os << "D(2,1;" << to_string(alpha) << ")"; break;
        case Family::f4: os << "F(4)"; break;
        case Family::g3: os << "G(3)"; break;
    }
    return os.str();
}

Rat RootDatum::form_on(const std::vector<std::vector<Rat>>& g, const Weight& a, const Weight& b) const {
    // Coordinates are stored d-block first, matching the Gram layout.
    std::vector<Rat> x, y;
    x.reserve(rank());
    y.reserve(rank());
    for (const Rat& c : a.d) x.push_back(c);
    for (const Rat& c : a.e) x.push_back(c);
    for (const Rat& c : b.d) y.push_back(c);
    for (const Rat& c : b.e) y.push_back(c);
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == Rat(0)) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (g[i][j] == Rat(0) || y[j] == Rat(0)) continue;
            s += x[i] * g[i][j] * y[j];
        }
    }
    return s;
}

Rat RootDatum::pair(const Weight& a, const Weight& b) const { return form_on(gram_, a, b); }
Rat RootDatum::aux_pair(const Weight& a, const Weight& b) const { return form_on(aux_gram_, a, b); }

Rat RootDatum::coroot_pairing(const Weight& lam, const Weight& alpha) const {
    Rat nn = pair(alpha, alpha);
    if (nn == Rat(0)) fail_pre("coroot pairing against an isotropic root " + alpha.str());
    return Rat(2) * pair(lam, alpha) / nn;
}

bool RootDatum::is_root(const Weight& w) const { return root_set_.count(w) != 0; }
bool RootDatum::is_even_root(const Weight& w) const { return even_root_set_.count(w) != 0; }
bool RootDatum::is_odd_root(const Weight& w) const { return is_root(w) && !is_even_root(w); }
bool RootDatum::is_isotropic_root(const Weight& w) const {
    return is_root(w) && pair(w, w) == Rat(0);
}

Weight RootDatum::canonicalize(const Weight& w) const {
    if (spec.family != Family::g3) return w;
    Weight out = w;
    Rat mean = (out.e[0] + out.e[1] + out.e[2]) / Rat(3);
    for (auto& c : out.e) c -= mean;
    return out;
}

bool RootDatum::is_integral(const Weight& lam) const {
    for (const Weight& a : even_simples)
        if (!is_integer(coroot_pairing(lam, a))) return false;
    return true;
}

bool RootDatum::g0_dominant(const Weight& lam) const {
    for (const Weight& a : even_simples)
        if (coroot_pairing(lam, a) < Rat(0)) return false;
    return true;
}

bool BorelData::odd_contains(const Weight& g) const {
    return std::binary_search(odd_positive.begin(), odd_positive.end(), g);
}

const SimpleRootInfo* BorelData::find_simple(const Weight& root) const {
    for (const auto& s : simples)
        if (s.root == root) return &s;
    return nullptr;
}

std::vector<Weight> BorelData::simple_roots() const {
    std::vector<Weight> out;
    out.reserve(simples.size());
    for (const auto& s : simples) out.push_back(s.root);
    return out;
}

std::string BorelData::key() const {
    std::string k;
    for (const Weight& g : odd_positive) {
        k += g.str();
        k += ';';
    }
    return k;
}

namespace {

// Simple roots = indecomposable elements of the positive system.
std::vector<SimpleRootInfo> compute_simples(const RootDatum& datum, const std::vector<Weight>& positive) {
    std::unordered_set<Weight, WeightHash> pos(positive.begin(), positive.end());
    std::vector<SimpleRootInfo> out;
    for (const Weight& a : positive) {
        bool decomposable = false;
        for (const Weight& b : positive) {
            Weight c = a - b;  // b == a gives c == 0; 2*delta = delta+delta is caught via b = delta
            if (!c.is_zero() && pos.count(c)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) {
            SimpleRootInfo info;
            info.root = a;
            info.odd = datum.is_odd_root(a);
            info.isotropic = datum.pair(a, a) == Rat(0);
            out.push_back(info);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SimpleRootInfo& x, const SimpleRootInfo& y) { return x.root < y.root; });
    return out;
}

BorelData finalize_borel(const RootDatum& datum, std::vector<Weight> odd, std::string label) {
    std::sort(odd.begin(), odd.end());
    BorelData b;
    b.datum = &datum;
    b.odd_positive = std::move(odd);
    std::vector<Weight> all = datum.even_positive;
    all.insert(all.end(), b.odd_positive.begin(), b.odd_positive.end());
    b.simples = compute_simples(datum, all);
    Weight half_odd = datum.zero_weight();
    for (const Weight& g : b.odd_positive) half_odd += g;
    b.rho1 = Rat(1, 2) * half_odd;
    b.rho = datum.rho0 - b.rho1;
    std::vector<Weight> dist = datum.odd_positive_distinguished;
    std::sort(dist.begin(), dist.end());
    b.distinguished = (dist == b.odd_positive);
    b.label = std::move(label);
    return b;
}

}  // namespace

BorelData BorelData::reflected(const Weight& gamma) const {
    const SimpleRootInfo* s = find_simple(gamma);
    if (!s) fail_pre("root " + gamma.str() + " is not simple for this Borel subalgebra");
    if (!s->odd || !s->isotropic) fail_pre("odd reflection requires a simple isotropic root, got " + gamma.str());
    std::vector<Weight> odd;
    odd.reserve(odd_positive.size());
    for (const Weight& g : odd_positive) odd.push_back(g == gamma ? -g : g);
    std::string lbl = label.empty() ? "r(" + gamma.str() + ")" : label + " r(" + gamma.str() + ")";
    return finalize_borel(*datum, std::move(odd), std::move(lbl));
}

Algebra make_algebra(const AlgebraSpec& spec) {
    auto datum = std::make_shared<RootDatum>();
    RootDatum& D = *datum;
    D.spec = spec;

    switch (spec.family) {
        case Family::gl:
        case Family::sl: {
            if (spec.m < 1 || spec.n < 1) fail_pre("gl/sl needs m >= 1 and n >= 1");
            if (spec.family == Family::sl && spec.m == spec.n)
                fail_pre("sl(n|n) is excluded (the form degenerates); use gl(n|n) conventions elsewhere");
            std::size_t m = static_cast<std::size_t>(spec.m), n = static_cast<std::size_t>(spec.n);
            D.nd = n;
            D.ne = m;
            D.type_I = true;
            std::vector<Rat> diag(n + m, Rat(1));
            for (std::size_t i = 0; i < n; ++i) diag[i] = Rat(-1);
            D.gram_ = diagonal_gram(diag);
            D.aux_gram_ = diagonal_gram(std::vector<Rat>(n + m, Rat(1)));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    D.even_positive.push_back(unit_e(n, m, i) - unit_e(n, m, j));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    D.even_positive.push_back(unit_d(n, m, i) - unit_d(n, m, j));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    D.odd_positive_distinguished.push_back(unit_e(n, m, i) - unit_d(n, m, j));
            break;
        }
        case Family::osp: {
            if (spec.m < 1 || spec.n < 1) fail_pre("osp needs m >= 1 and n >= 1");
            std::size_t n = static_cast<std::size_t>(spec.n);
            std::size_t r = static_cast<std::size_t>(spec.m / 2);
            bool odd_m = (spec.m % 2) == 1;
            D.nd = n;
            D.ne = r;
            D.type_I = (spec.m == 2);
            std::vector<Rat> diag(n + r, Rat(1));
            for (std::size_t i = 0; i < n; ++i) diag[i] = Rat(-1);
            D.gram_ = diagonal_gram(diag);
            D.aux_gram_ = diagonal_gram(std::vector<Rat>(n + r, Rat(1)));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    D.even_positive.push_back(unit_d(n, r, i) - unit_d(n, r, j));
                    D.even_positive.push_back(unit_d(n, r, i) + unit_d(n, r, j));
                }
                D.even_positive.push_back(unit_d(n, r, i, Rat(2)));
            }
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = i + 1; j < r; ++j) {
                    D.even_positive.push_back(unit_e(n, r, i) - unit_e(n, r, j));
                    D.even_positive.push_back(unit_e(n, r, i) + unit_e(n, r, j));
                }
                if (odd_m) D.even_positive.push_back(unit_e(n, r, i));
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (spec.m == 2) {
                    // epsilon leads in the distinguished order.
                    D.odd_positive_distinguished.push_back(unit_e(n, r, 0) - unit_d(n, r, i));
                    D.odd_positive_distinguished.push_back(unit_e(n, r, 0) + unit_d(n, r, i));
                } else {
                    for (std::size_t j = 0; j < r; ++j) {
                        D.odd_positive_distinguished.push_back(unit_d(n, r, i) - unit_e(n, r, j));
                        D.odd_positive_distinguished.push_back(unit_d(n, r, i) + unit_e(n, r, j));
                    }
                    if (odd_m) D.odd_positive_distinguished.push_back(unit_d(n, r, i));
                }
            }
            if (n == 1 && spec.m >= 3) {
                D.theta = unit_d(n, r, 0, Rat(2));
                D.z2_axis = std::make_pair(true, std::size_t{0});
            }
            break;
        }
        case Family::d21: {
            if (spec.alpha == Rat(0) || spec.alpha == Rat(-1))
                fail_pre("D(2,1;a) needs a outside {0,-1}");
            D.nd = 0;
            D.ne = 3;
            D.type_I = false;
            Rat a = spec.alpha;
            D.gram_ = diagonal_gram({-(Rat(1) + a) / Rat(2), Rat(1, 2), a / Rat(2)});
            std::vector<Rat> aux;
            for (std::size_t i = 0; i < 3; ++i) {
                Rat v = D.gram_[i][i];
                aux.push_back(v < Rat(0) ? -v : v);
            }
            D.aux_gram_ = diagonal_gram(aux);
            for (std::size_t i = 0; i < 3; ++i) D.even_positive.push_back(unit_e(0, 3, i, Rat(2)));
            for (int s2 : {+1, -1})
                for (int s3 : {+1, -1}) {
                    Weight w = unit_e(0, 3, 0) + unit_e(0, 3, 1, Rat(s2)) + unit_e(0, 3, 2, Rat(s3));
                    D.odd_positive_distinguished.push_back(w);
                }
            D.theta = unit_e(0, 3, 0, Rat(2));
            D.z2_axis = std::make_pair(false, std::size_t{0});
            break;
        }
        case Family::f4: {
            D.nd = 1;
            D.ne = 3;
            D.type_I = false;
            D.gram_ = diagonal_gram({Rat(-3), Rat(1), Rat(1), Rat(1)});
            D.aux_gram_ = diagonal_gram({Rat(3), Rat(1), Rat(1), Rat(1)});
            D.even_positive.push_back(unit_d(1, 3, 0));
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = i + 1; j < 3; ++j) {
                    D.even_positive.push_back(unit_e(1, 3, i) - unit_e(1, 3, j));
                    D.even_positive.push_back(unit_e(1, 3, i) + unit_e(1, 3, j));
                }
                D.even_positive.push_back(unit_e(1, 3, i));
            }
            for (int s1 : {+1, -1})
                for (int s2 : {+1, -1})
                    for (int s3 : {+1, -1}) {
                        Weight w = unit_d(1, 3, 0, Rat(1, 2));
                        w += unit_e(1, 3, 0, Rat(s1, 2));
                        w += unit_e(1, 3, 1, Rat(s2, 2));
                        w += unit_e(1, 3, 2, Rat(s3, 2));
                        D.odd_positive_distinguished.push_back(w);
                    }
            D.theta = unit_d(1, 3, 0);
            D.z2_axis = std::make_pair(true, std::size_t{0});
            break;
        }
        case Family::g3: {
            D.nd = 1;
            D.ne = 3;
            D.type_I = false;
            // Epsilon block: form 3*sum(x_i y_i) on sum-zero representatives,
            // realized by the matrix 3I - J (constant vectors are in its
            // kernel, so canonical representatives pair consistently).
            std::vector<std::vector<Rat>> g(4, std::vector<Rat>(4, Rat(0)));
            g[0][0] = Rat(-2);
            for (std::size_t i = 1; i < 4; ++i)
                for (std::size_t j = 1; j < 4; ++j) g[i][j] = (i == j) ? Rat(2) : Rat(-1);
            D.gram_ = g;
            auto aux = g;
            aux[0][0] = Rat(2);
            D.aux_gram_ = aux;
            auto eps = [&](std::size_t i) {
                Weight w = Weight::zero(1, 3);
                w.e[i] = Rat(1);
                return D.canonicalize(w);
            };
            Weight e1 = eps(0), e2 = eps(1), e3 = eps(2);
            D.even_positive.push_back(unit_d(1, 3, 0, Rat(2)));
            D.even_positive.push_back(e1);
            D.even_positive.push_back(e2);
            D.even_positive.push_back(e1 + e2);  // = -e3
            D.even_positive.push_back(e2 - e1);
            D.even_positive.push_back(e1 - e3);
            D.even_positive.push_back(e2 - e3);
            Weight delta = unit_d(1, 3, 0);
            D.odd_positive_distinguished.push_back(delta);
            for (const Weight& e : {e1, e2, e3}) {
                D.odd_positive_distinguished.push_back(delta + e);
                D.odd_positive_distinguished.push_back(delta - e);
            }
            D.theta = unit_d(1, 3, 0, Rat(2));
            D.z2_axis = std::make_pair(true, std::size_t{0});
            break;
        }
    }

    D.even_simples.clear();
    for (const auto& info : compute_simples(D, D.even_positive)) D.even_simples.push_back(info.root);

    Weight sum0 = D.zero_weight();
    for (const Weight& a : D.even_positive) sum0 += a;
    D.rho0 = Rat(1, 2) * sum0;

    for (const Weight& a : D.even_positive) {
        D.root_set_.insert(a);
        D.root_set_.insert(-a);
        D.even_root_set_.insert(a);
        D.even_root_set_.insert(-a);
    }
    for (const Weight& g : D.odd_positive_distinguished) {
        D.root_set_.insert(g);
        D.root_set_.insert(-g);
    }
    return datum;
}

BorelData distinguished_borel(const RootDatum& datum) {
    return finalize_borel(datum, datum.odd_positive_distinguished, "distinguished");
}

BorelData borel_from_sequence(const RootDatum& datum, const std::vector<std::string>& tokens) {
    Family fam = datum.spec.family;
    if (fam == Family::d21 || fam == Family::f4 || fam == Family::g3)
        fail_pre("Borel words apply to gl/sl/osp only; use 'distinguished' for " + datum.spec.str());
    std::size_t nd = datum.nd, ne = datum.ne;
    if (tokens.size() != nd + ne) fail_pre("Borel word must list every coordinate symbol exactly once");
    std::vector<std::size_t> pos_d(nd, SIZE_MAX), pos_e(ne, SIZE_MAX);
    for (std::size_t p = 0; p < tokens.size(); ++p) {
        const std::string& t = tokens[p];
        if (t.size() < 2 || (t[0] != 'd' && t[0] != 'e'))
            fail_parse("Borel word token '" + t + "' (expected d<k> or e<k>)");
        std::size_t idx = 0;
        try {
            idx = static_cast<std::size_t>(std::stoul(t.substr(1)));
        } catch (...) {
            fail_parse("Borel word token '" + t + "'");
        }
        if (idx < 1) fail_parse("Borel word token '" + t + "' (indices are 1-based)");
        if (t[0] == 'd') {
            if (idx > nd || pos_d[idx - 1] != SIZE_MAX) fail_pre("Borel word repeats or overflows '" + t + "'");
            pos_d[idx - 1] = p;
        } else {
            if (idx > ne || pos_e[idx - 1] != SIZE_MAX) fail_pre("Borel word repeats or overflows '" + t + "'");
            pos_e[idx - 1] = p;
        }
    }
    for (std::size_t i = 0; i + 1 < nd; ++i)
        if (pos_d[i] > pos_d[i + 1]) fail_pre("Borel word must keep delta symbols in increasing order");
    for (std::size_t i = 0; i + 1 < ne; ++i)
        if (pos_e[i] > pos_e[i + 1]) fail_pre("Borel word must keep epsilon symbols in increasing order");

    std::vector<Weight> odd;
    if (fam == Family::gl || fam == Family::sl) {
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < nd; ++j) {
                Weight g = unit_e(nd, ne, i) - unit_d(nd, ne, j);
                odd.push_back(pos_e[i] < pos_d[j] ? g : -g);
            }
    } else {
        bool odd_m = (datum.spec.m % 2) == 1;
        for (std::size_t i = 0; i < nd; ++i) {
            for (std::size_t j = 0; j < ne; ++j) {
                Weight diff = unit_d(nd, ne, i) - unit_e(nd, ne, j);
                odd.push_back(pos_d[i] < pos_e[j] ? diff : -diff);
                odd.push_back(unit_d(nd, ne, i) + unit_e(nd, ne, j));
            }
            if (odd_m) odd.push_back(unit_d(nd, ne, i));
        }
    }
    std::string lbl;
    for (const auto& t : tokens) {
        if (!lbl.empty()) lbl += ' ';
        lbl += t;
    }
    return finalize_borel(datum, std::move(odd), std::move(lbl));
}

BorelData borel_from_odd_set(const RootDatum& datum, std::vector<Weight> odd, std::string label) {
    if (odd.size() != datum.odd_positive_distinguished.size())
        fail_pre("odd positive set has the wrong size");
    std::unordered_set<Weight, WeightHash> seen;
    for (const Weight& g : odd) {
        if (!datum.is_odd_root(g)) fail_pre(g.str() + " is not an odd root");
        if (seen.count(-g)) fail_pre("odd set contains both signs of " + g.str());
        if (datum.pair(g, g) != Rat(0)) {
            // Anisotropic odd roots come with their even double; keeping the
            // even part fixed pins their sign.
            bool dist_positive = false;
            for (const Weight& h : datum.odd_positive_distinguished)
                if (h == g) dist_positive = true;
            if (!dist_positive) fail_pre("anisotropic odd root " + g.str() + " cannot change sign");
        }
        seen.insert(g);
    }
    // Closure under addition within the full positive system.
    std::vector<Weight> all = datum.even_positive;
    all.insert(all.end(), odd.begin(), odd.end());
    std::unordered_set<Weight, WeightHash> pos(all.begin(), all.end());
    for (const Weight& a : all)
        for (const Weight& b : all) {
            Weight c = datum.canonicalize(a + b);
            if (datum.is_root(c) && !pos.count(c))
                fail_pre("odd set is not closed: " + a.str() + " + " + b.str() + " is a root outside the system");
        }
    return finalize_borel(datum, std::move(odd), std::move(label));
}

BorelPath borel_path(const BorelData& from, const BorelData& to) {
    if (from.datum != to.datum) fail_pre("Borel path between different algebras");
    BorelPath path;
    path.stations.push_back(from);
    std::unordered_set<Weight, WeightHash> target(to.odd_positive.begin(), to.odd_positive.end());
    std::size_t guard = from.odd_positive.size() * 2 + 2;
    while (path.stations.back().key() != to.key()) {
        const BorelData& cur = path.stations.back();
        const Weight* pick = nullptr;
        for (const auto& s : cur.simples) {
            if (!s.odd || !s.isotropic) continue;
            if (target.count(-s.root)) {
                if (!pick || s.root < *pick) pick = &s.root;
            }
        }
        if (!pick) fail_internal("no simple isotropic root resolves the Borel disagreement");
        Weight gamma = *pick;
        path.roots.push_back(gamma);
        path.stations.push_back(cur.reflected(gamma));
        if (path.roots.size() > guard) fail_internal("Borel path failed to terminate");
    }
    return path;
}

Weight reflect_simple_highest_weight(const Weight& lam, const Weight& gamma, const BorelData& borel) {
    const SimpleRootInfo* s = borel.find_simple(gamma);
    if (!s || !s->odd || !s->isotropic)
        fail_pre("highest-weight transport needs a simple isotropic root, got " + gamma.str());
    const RootDatum& D = *borel.datum;
    if (D.pair(lam, gamma) != Rat(0)) return lam - gamma;
    return lam;
}

Weight transport_simple_hw(const Weight& lam, const BorelPath& path) {
    Weight cur = lam;
    for (std::size_t j = 0; j < path.roots.size(); ++j)
        cur = reflect_simple_highest_weight(cur, path.roots[j], path.stations[j]);
    return cur;
}

namespace {

// Family conditions at the distinguished Borel, beyond even dominance.
bool dominant_g_distinguished(const RootDatum& D, const Weight& lam) {
    switch (D.spec.family) {
        case Family::gl:
        case Family::sl:
            return true;
        case Family::osp: {
            if (D.spec.m <= 2) return true;
            std::size_t r = D.ne;
            Rat a = lam.d[D.nd - 1];
            if (a >= Rat(static_cast<long long>(r))) return true;
            if (!is_integer(a) || a < Rat(0)) return false;
            auto k = static_cast<std::size_t>(a.numerator());
            for (std::size_t i = k; i < r; ++i)
                if (lam.e[i] != Rat(0)) return false;
            return true;
        }
        case Family::d21:
        case Family::f4:
        case Family::g3: {
            // Leading condition only: a vanishing theta-label forces the
            // trivial module.  (Small positive labels have further sporadic
            // constraints; the solver treats those weights conservatively.)
            Rat b = D.coroot_pairing(lam, *D.theta);
            if (b == Rat(0)) return lam.is_zero();
            return b > Rat(0);
        }
    }
    return false;
}

}  // namespace

bool is_integral_dominant(const Weight& lam, const BorelData& borel, DominanceScope scope) {
    const RootDatum& D = *borel.datum;
    if (!D.is_integral(lam)) return false;
    if (scope == DominanceScope::g0) return D.g0_dominant(lam);
    Weight probe = lam;
    if (!borel.distinguished) {
        BorelPath path = borel_path(borel, distinguished_borel(D));
        probe = transport_simple_hw(lam, path);
    }
    return D.g0_dominant(probe) && dominant_g_distinguished(D, probe);
}

ConeSolver::ConeSolver(std::vector<Weight> basis, std::size_t nd, std::size_t ne)
    : basis_(std::move(basis)), nd_(nd), ne_(ne) {}

std::optional<std::vector<Rat>> ConeSolver::coords(const Weight& w) const {
    std::size_t rows = nd_ + ne_, cols = basis_.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
    auto coord = [&](const Weight& x, std::size_t i) { return i < nd_ ? x.d[i] : x.e[i - nd_]; };
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = coord(basis_[j], i);
        m[i][cols] = coord(w, i);
    }
    std::vector<std::size_t> pivot_row(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t p = SIZE_MAX;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][j] != Rat(0)) {
                p = i;
                break;
            }
        if (p == SIZE_MAX) continue;
        std::swap(m[rank], m[p]);
        Rat inv = m[rank][j];
        for (std::size_t k = j; k <= cols; ++k) m[rank][k] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][j] == Rat(0)) continue;
            Rat f = m[i][j];
            for (std::size_t k = j; k <= cols; ++k) m[i][k] -= f * m[rank][k];
        }
        pivot_row[j] = rank;
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (m[i][cols] != Rat(0)) return std::nullopt;
    // Free columns would make coordinates ambiguous; simple-root bases are
    // linearly independent so every column pivots.
    std::vector<Rat> out(cols, Rat(0));
    for (std::size_t j = 0; j < cols; ++j) {
        if (pivot_row[j] == SIZE_MAX) fail_internal("dependent basis in ConeSolver");
        out[j] = m[pivot_row[j]][cols];
    }
    return out;
}

std::optional<Rat> ConeSolver::height(const Weight& w) const {
    auto c = coords(w);
    if (!c) return std::nullopt;
    Rat s(0);
    for (const Rat& x : *c) s += x;
    return s;
}

bool ConeSolver::in_positive_cone(const Weight& w) const {
    auto c = coords(w);
    if (!c) return false;
    for (const Rat& x : *c)
        if (x < Rat(0)) return false;
    return true;
}

}  // namespace superbbw
