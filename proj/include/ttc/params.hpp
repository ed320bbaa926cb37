#pragma once

#include "ttc/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttc {

// Threshold parameter pair (r, t): r consecutive colors, threshold t.
// Normalized on construction: r >= 1 and 0 <= t <= r-1.  A threshold of
// r-1 or more makes every color pair near, so larger t collapses to r-1;
// this normalization is what makes the order below antisymmetric.
struct ParamPair {
    int r = 1;
    int t = 0;

    ParamPair() = default;
    ParamPair(int range, int threshold) {
        if (range < 1) throw parameter_error("range must be >= 1");
        if (threshold < 0) throw parameter_error("threshold must be >= 0");
        r = range;
        t = threshold > range - 1 ? range - 1 : threshold;
    }

    bool operator==(const ParamPair& o) const { return r == o.r && t == o.t; }
    bool operator!=(const ParamPair& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(r) + "," + std::to_string(t); }
};

// Witness for (r1,t1) <= (r2,t2): a strictly increasing map of {0..r1-1}
// into {0..r2-1} that preserves nearness exactly, i.e. b-a <= t1 iff
// phi(b)-phi(a) <= t2 for all a < b.
struct MonotoneEmbedding {
    ParamPair from;
    ParamPair to;
    std::vector<int> phi;

    int operator()(int color) const { return phi[static_cast<size_t>(color)]; }
};

// Decides p1 <= p2 and returns the greedy-minimal witness when it holds:
// phi(0) = 0 and each next value is the least integer exceeding the previous
// one that keeps all constraints with the values already placed.
std::optional<MonotoneEmbedding> pair_leq(const ParamPair& p1, const ParamPair& p2);

// A common upper bound of p1 and p2 with threshold max(t1, t2): with the
// inputs ordered so t1 <= t2,
//   r = max{ r2, (r1 div (t1+1)) * (t2+1) + (r1 mod (t1+1)) }.
ParamPair common_upper_bound(const ParamPair& p1, const ParamPair& p2);

} // namespace ttc
