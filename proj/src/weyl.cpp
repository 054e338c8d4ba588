#include "superbbw/weyl.hpp"

#include <algorithm>
#include <deque>

#include "superbbw/util.hpp"

namespace superbbw {

namespace {

std::vector<std::vector<Rat>> identity_matrix(std::size_t n) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

std::vector<std::vector<Rat>> matmul(const std::vector<std::vector<Rat>>& a,
                                     const std::vector<std::vector<Rat>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == Rat(0)) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

std::string matrix_key(const std::vector<std::vector<Rat>>& m) {
    std::string k;
    for (const auto& row : m)
        for (const Rat& x : row) {
            k += to_string(x);
            k += ',';
        }
    return k;
}

}  // namespace

Weight WeylElement::apply(const Weight& w) const {
    std::size_t nd = w.d.size(), ne = w.e.size();
    std::vector<Rat> x;
    x.reserve(nd + ne);
    for (const Rat& c : w.d) x.push_back(c);
    for (const Rat& c : w.e) x.push_back(c);
    Weight out = Weight::zero(nd, ne);
    for (std::size_t i = 0; i < nd + ne; ++i) {
        Rat v(0);
        for (std::size_t j = 0; j < nd + ne; ++j) {
            if (mat[i][j] == Rat(0) || x[j] == Rat(0)) continue;
            v += mat[i][j] * x[j];
        }
        if (i < nd)
            out.d[i] = v;
        else
            out.e[i - nd] = v;
    }
    return out;
}

std::string WeylElement::key() const { return matrix_key(mat); }

std::vector<std::vector<Rat>> WeylGroup::reflection_matrix(const Weight& alpha) const {
    const RootDatum& D = *datum_;
    Rat nn = D.pair(alpha, alpha);
    if (nn == Rat(0)) fail_pre("reflection at isotropic root " + alpha.str());
    std::size_t n = D.rank();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
        Weight basis = D.zero_weight();
        if (j < D.nd)
            basis.d[j] = Rat(1);
        else
            basis.e[j - D.nd] = Rat(1);
        Rat c = Rat(2) * D.pair(basis, alpha) / nn;
        // column j = basis - c*alpha
        for (std::size_t i = 0; i < n; ++i) {
            Rat ai = i < D.nd ? alpha.d[i] : alpha.e[i - D.nd];
            Rat bi = i == j ? Rat(1) : Rat(0);
            m[i][j] = bi - c * ai;
        }
    }
    return m;
}

WeylGroup::WeylGroup(const RootDatum& datum) : datum_(&datum) {
    std::size_t n = datum.rank();
    std::size_t ns = datum.even_simples.size();

    std::vector<std::vector<std::vector<Rat>>> gens;
    gens.reserve(ns);
    for (const Weight& a : datum.even_simples) gens.push_back(reflection_matrix(a));

    // Breadth-first closure under right multiplication by generators.
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<std::vector<std::vector<Rat>>> mats;
    mats.push_back(identity_matrix(n));
    seen.emplace(matrix_key(mats[0]), 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < ns; ++i) {
            auto next = matmul(mats[cur], gens[i]);
            std::string k = matrix_key(next);
            if (!seen.count(k)) {
                seen.emplace(k, mats.size());
                mats.push_back(std::move(next));
                queue.push_back(mats.size() - 1);
            }
        }
        check_limit(mats.size(), "Weyl group enumeration");
    }

    // Length = number of even positive roots sent to negatives.
    std::unordered_set<Weight, WeightHash> pos(datum.even_positive.begin(), datum.even_positive.end());
    auto length_of = [&](const std::vector<std::vector<Rat>>& m) {
        WeylElement tmp;
        tmp.mat = m;
        int l = 0;
        for (const Weight& a : datum.even_positive)
            if (pos.count(-tmp.apply(a))) ++l;
        return l;
    };

    elements_.resize(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        elements_[i].mat = mats[i];
        elements_[i].length = length_of(mats[i]);
    }

    // Greedy reduced words, built upward by length: word(w) = [i] + word(s_i w)
    // for the smallest descent i.  This yields the lexicographically least
    // reduced word.
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < elements_.size(); ++i) idx.emplace(matrix_key(mats[i]), i);
    std::vector<std::size_t> order(elements_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return elements_[a].length < elements_[b].length;
    });
    for (std::size_t oi : order) {
        WeylElement& w = elements_[oi];
        if (w.length == 0) continue;
        bool done = false;
        for (std::size_t i = 0; i < ns && !done; ++i) {
            auto sw = matmul(gens[i], w.mat);
            std::size_t j = idx.at(matrix_key(sw));
            if (elements_[j].length == w.length - 1) {
                w.word.clear();
                w.word.push_back(static_cast<int>(i));
                w.word.insert(w.word.end(), elements_[j].word.begin(), elements_[j].word.end());
                done = true;
            }
        }
        if (!done) fail_internal("no descent found for a nontrivial Weyl element");
    }

    // Deterministic table order: by (length, word).
    std::sort(elements_.begin(), elements_.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        elements_[i].index = i;
        by_key_.emplace(elements_[i].key(), i);
    }

    simple_index_.resize(ns);
    for (std::size_t i = 0; i < ns; ++i) simple_index_[i] = by_key_.at(matrix_key(gens[i]));

    inverse_index_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        // Search is fine at these sizes; matrices are exact so the identity
        // test is a straight comparison.
        bool found = false;
        for (std::size_t j = 0; j < elements_.size(); ++j) {
            if (matmul(elements_[i].mat, elements_[j].mat) == identity_matrix(n)) {
                inverse_index_[i] = j;
                found = true;
                break;
            }
        }
        if (!found) fail_internal("Weyl element without inverse in table");
    }
}

const WeylElement& WeylGroup::simple_reflection(std::size_t i) const {
    if (i >= simple_index_.size()) fail_pre("simple reflection index out of range");
    return elements_[simple_index_[i]];
}

const WeylElement& WeylGroup::compose(const WeylElement& u, const WeylElement& v) const {
    auto it = by_key_.find(matrix_key(matmul(u.mat, v.mat)));
    if (it == by_key_.end()) fail_internal("composition left the Weyl group table");
    return elements_[it->second];
}

const WeylElement& WeylGroup::inverse(const WeylElement& w) const {
    return elements_[inverse_index_[w.index]];
}

const WeylElement& WeylGroup::reflection(const Weight& alpha) const {
    if (!datum_->is_even_root(alpha)) fail_pre(alpha.str() + " is not an even root");
    auto it = by_key_.find(matrix_key(reflection_matrix(alpha)));
    if (it == by_key_.end()) fail_internal("reflection missing from the Weyl group table");
    return elements_[it->second];
}

const WeylElement* WeylGroup::find_matrix(const std::vector<std::vector<Rat>>& mat) const {
    auto it = by_key_.find(matrix_key(mat));
    return it == by_key_.end() ? nullptr : &elements_[it->second];
}

std::vector<const WeylElement*> WeylGroup::of_length(int l) const {
    std::vector<const WeylElement*> out;
    for (const auto& w : elements_)
        if (w.length == l) out.push_back(&w);
    return out;
}

int WeylGroup::max_length() const {
    int m = 0;
    for (const auto& w : elements_) m = std::max(m, w.length);
    return m;
}

Weight WeylGroup::dot(const WeylElement& w, const Weight& lam, const BorelData& b) const {
    return w.apply(lam + b.rho) - b.rho;
}

Weight WeylGroup::circ(const WeylElement& w, const Weight& lam) const {
    return w.apply(lam + datum_->rho0) - datum_->rho0;
}

WeylGroup::Location WeylGroup::locate_shifted(const Weight& shifted, const Weight& shift) const {
    Location loc;
    for (const Weight& a : datum_->even_positive)
        if (datum_->pair(shifted, a) == Rat(0)) loc.walls.push_back(a);
    loc.singular = !loc.walls.empty();
    for (const auto& w : elements_) {
        Weight moved = w.apply(shifted);
        bool dom = true;
        for (const Weight& a : datum_->even_simples)
            if (datum_->coroot_pairing(moved, a) < Rat(0)) {
                dom = false;
                break;
            }
        if (dom) {
            loc.w = &w;
            loc.dominant = moved - shift;
            return loc;
        }
    }
    fail_internal("no Weyl image reached the dominant chamber");
}

WeylGroup::Location WeylGroup::locate_circ(const Weight& lam) const {
    return locate_shifted(lam + datum_->rho0, datum_->rho0);
}

WeylGroup::Location WeylGroup::locate_dot(const Weight& lam, const BorelData& b) const {
    return locate_shifted(lam + b.rho, b.rho);
}

WeylGroup::Location WeylGroup::locate_plain(const Weight& lam) const {
    return locate_shifted(lam, datum_->zero_weight());
}

std::vector<const WeylElement*> WeylGroup::coset_reps(const std::vector<Weight>& levi_simples) const {
    std::unordered_set<Weight, WeightHash> pos(datum_->even_positive.begin(), datum_->even_positive.end());
    std::vector<const WeylElement*> out;
    for (const auto& w : elements_) {
        const WeylElement& wi = inverse(w);
        bool ok = true;
        for (const Weight& a : levi_simples)
            if (!pos.count(wi.apply(a))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(&w);
    }
    return out;
}

std::vector<const WeylElement*> WeylGroup::parabolic(const std::vector<Weight>& levi_simples) const {
    std::unordered_set<std::size_t> members{0};
    std::deque<std::size_t> queue{0};
    std::vector<std::size_t> gen_idx;
    for (const Weight& a : levi_simples) gen_idx.push_back(reflection(a).index);
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t g : gen_idx) {
            const WeylElement& next = compose(elements_[cur], elements_[g]);
            if (!members.count(next.index)) {
                members.insert(next.index);
                queue.push_back(next.index);
            }
        }
    }
    std::vector<std::size_t> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<const WeylElement*> out;
    for (std::size_t i : sorted) out.push_back(&elements_[i]);
    return out;
}

std::vector<const WeylElement*> WeylGroup::all() const {
    std::vector<const WeylElement*> out;
    out.reserve(elements_.size());
    for (const auto& w : elements_) out.push_back(&w);
    return out;
}

}  // namespace superbbw
