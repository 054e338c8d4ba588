#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superbbw/algebra.hpp"
#include "superbbw/genericity.hpp"
#include "superbbw/weyl.hpp"

namespace superbbw {

// Verma-type highest weight transport along the canonical reflection path
// between two Borel subalgebras: each step must subtract its root (the
// running weight has to pair nontrivially against it), otherwise the move is
// blocked at that step.
struct OddTransportResult {
    bool blocked = false;
    std::size_t blocked_index = 0;  // step at which the transport stalled
    Weight blocking_root;
    Weight result;  // meaningful when not blocked
    BorelPath path;
};
OddTransportResult odd_transport(const Weight& mu, const BorelData& from, const BorelData& to);

// One step of the twisted reflection s_alpha * lam: move to a system where
// alpha (or alpha/2) is simple, reflect with the dot action there, move
// back.  Composite elements apply their reduced word right to left.  The
// weight must stay generic against the two-sided odd family throughout;
// check=false skips that validation.
Weight star_action(const WeylElement& w, const Weight& lam, const BorelData& b, const WeylGroup& W,
                   bool check = true);

// The Borel systems visited and roots used by one simple star step; exposed
// for tests and the CLI trace output.
struct StarTrace {
    std::vector<Weight> path_roots;
    Weight reflected_at_target;
    Weight result;
};
StarTrace star_simple(std::size_t simple_index, const Weight& lam, const BorelData& b,
                      const WeylGroup& W, bool check = true);

}  // namespace superbbw
