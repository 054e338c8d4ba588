#include "superbbw/borel_moves.hpp"

#include <algorithm>
#include <deque>

#include "superbbw/util.hpp"

namespace superbbw {

OddTransportResult odd_transport(const Weight& mu, const BorelData& from, const BorelData& to) {
    OddTransportResult out;
    out.path = borel_path(from, to);
    Weight cur = mu;
    const RootDatum& D = *from.datum;
    for (std::size_t j = 0; j < out.path.roots.size(); ++j) {
        const Weight& beta = out.path.roots[j];
        if (D.pair(cur, beta) == Rat(0)) {
            out.blocked = true;
            out.blocked_index = j;
            out.blocking_root = beta;
            return out;
        }
        cur -= beta;
    }
    out.result = cur;
    return out;
}

namespace {

struct SearchNode {
    BorelData borel;
    std::vector<BorelData> stations;
    std::vector<Weight> roots;
};

void ensure_generic(const Weight& w, const BorelData& c, const WeylGroup& W, const char* where) {
    auto rep = genericness(w, c, W, GenericMode::GammaTilde);
    if (!rep.generic)
        fail_pre(std::string("twisted reflection needs two-sided genericity ") + where +
                 " (weight " + w.str() + ")");
}

}  // namespace

StarTrace star_simple(std::size_t simple_index, const Weight& lam, const BorelData& b,
                      const WeylGroup& W, bool check) {
    const RootDatum& D = *b.datum;
    if (simple_index >= D.even_simples.size()) fail_pre("simple reflection index out of range");
    Weight alpha = D.even_simples[simple_index];
    Weight half = Rat(1, 2) * alpha;
    bool half_is_root = D.is_odd_root(half);

    auto ready = [&](const BorelData& c) {
        if (c.find_simple(alpha)) return true;
        return half_is_root && c.find_simple(half) != nullptr;
    };

    if (check) ensure_generic(lam, b, W, "at the starting system");

    // Shortest odd-reflection path to a system where the reflection is
    // simple; neighbor expansion in root order keeps the choice canonical.
    SearchNode found;
    bool have = false;
    if (ready(b)) {
        found.borel = b;
        found.stations = {b};
        have = true;
    } else {
        std::deque<SearchNode> queue;
        std::unordered_set<std::string> visited{b.key()};
        queue.push_back({b, {b}, {}});
        while (!queue.empty() && !have) {
            SearchNode cur = queue.front();
            queue.pop_front();
            std::vector<Weight> moves;
            for (const auto& s : cur.borel.simples)
                if (s.odd && s.isotropic) moves.push_back(s.root);
            std::sort(moves.begin(), moves.end());
            for (const Weight& g : moves) {
                BorelData next = cur.borel.reflected(g);
                std::string k = next.key();
                if (visited.count(k)) continue;
                visited.insert(k);
                SearchNode node;
                node.borel = next;
                node.stations = cur.stations;
                node.stations.push_back(next);
                node.roots = cur.roots;
                node.roots.push_back(g);
                if (ready(next)) {
                    found = node;
                    have = true;
                    break;
                }
                queue.push_back(std::move(node));
                check_limit(visited.size(), "Borel system search");
            }
        }
        if (!have) fail_internal("no Borel system makes the reflection simple");
    }

    StarTrace trace;
    trace.path_roots = found.roots;

    Weight cur = lam;
    for (std::size_t j = 0; j < found.roots.size(); ++j) {
        cur = reflect_simple_highest_weight(cur, found.roots[j], found.stations[j]);
        if (check) ensure_generic(cur, found.stations[j + 1], W, "along the outward path");
    }

    const BorelData& tip = found.stations.back();
    const WeylElement& s = W.reflection(alpha);
    cur = W.dot(s, cur, tip);
    trace.reflected_at_target = cur;
    if (check) ensure_generic(cur, tip, W, "after the reflection");

    for (std::size_t j = found.roots.size(); j-- > 0;) {
        cur = reflect_simple_highest_weight(cur, -found.roots[j], found.stations[j + 1]);
        if (check && j > 0) ensure_generic(cur, found.stations[j], W, "along the return path");
    }
    trace.result = cur;
    if (check) ensure_generic(cur, b, W, "at the final system");
    return trace;
}

Weight star_action(const WeylElement& w, const Weight& lam, const BorelData& b, const WeylGroup& W,
                   bool check) {
    Weight cur = lam;
    for (std::size_t p = w.word.size(); p-- > 0;) {
        StarTrace t = star_simple(static_cast<std::size_t>(w.word[p]), cur, b, W, check);
        cur = t.result;
    }
    return cur;
}

}  // namespace superbbw
