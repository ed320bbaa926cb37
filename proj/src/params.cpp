#include "ttc/params.hpp"

#include <algorithm>

namespace ttc {

std::optional<MonotoneEmbedding> pair_leq(const ParamPair& p1, const ParamPair& p2) {
    if (p1.r > p2.r) return std::nullopt;
    std::vector<int> phi(static_cast<size_t>(p1.r));
    phi[0] = 0;
    for (int k = 1; k < p1.r; ++k) {
        // Constraints against already placed values: pairs within t1 must
        // stay within t2, pairs beyond t1 must land beyond t2.  Since phi is
        // increasing only the nearest old value of each kind binds.
        int lo = phi[static_cast<size_t>(k - 1)] + 1;
        if (k - p1.t - 1 >= 0)
            lo = std::max(lo, phi[static_cast<size_t>(k - p1.t - 1)] + p2.t + 1);
        int hi = p2.r - 1;
        if (k - p1.t <= k - 1 && k - p1.t >= 0)
            hi = std::min(hi, phi[static_cast<size_t>(std::max(0, k - p1.t))] + p2.t);
        else if (p1.t >= k)
            hi = std::min(hi, phi[0] + p2.t);
        if (lo > hi) return std::nullopt;
        phi[static_cast<size_t>(k)] = lo;
    }
    return MonotoneEmbedding{p1, p2, std::move(phi)};
}

ParamPair common_upper_bound(const ParamPair& p1, const ParamPair& p2) {
    const ParamPair& a = p1.t <= p2.t ? p1 : p2; // smaller threshold
    const ParamPair& b = p1.t <= p2.t ? p2 : p1;
    const int lifted = (a.r / (a.t + 1)) * (b.t + 1) + (a.r % (a.t + 1));
    return ParamPair(std::max(b.r, lifted), b.t);
}

} // namespace ttc
