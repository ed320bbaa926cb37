#pragma once

#include "ttc/graph.hpp"
#include "ttc/labeling.hpp"
#include "ttc/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttc {

// Vertex coloring targeting a parameter pair.  Colors are stored as signed
// integers; validity only requires them to fit in a window of r consecutive
// values.  The canonical form shifts the minimum color to 0.
struct ThresholdColoring {
    std::vector<int> colors;
    ParamPair pair;

    int operator[](int v) const { return colors[static_cast<size_t>(v)]; }
    int window_width() const; // max - min + 1; 0 when empty
};

enum class ViolationKind { near_too_far, far_too_near, range_overflow };

struct Violation {
    ViolationKind kind;
    int edge = -1; // -1 for range overflow
    std::string str() const;
};

// Empty iff every near edge differs by at most t, every far edge by more
// than t, and all colors fit in r consecutive integers.
std::vector<Violation> verify(const Graph& g, const NearFarLabeling& lab,
                              const ParamPair& pair, const ThresholdColoring& col);

inline bool is_valid(const Graph& g, const NearFarLabeling& lab, const ParamPair& pair,
                     const ThresholdColoring& col) {
    return verify(g, lab, pair, col).empty();
}

// Shifts every color by delta.  Verdicts are invariant: differences do not
// change.
ThresholdColoring translate_coloring(const ThresholdColoring& col, int delta);

// Translation with the minimum color moved to 0.
ThresholdColoring canonicalized(const ThresholdColoring& col);

// Multiplies every color by lambda (>= 1).  A coloring valid at (r, t)
// becomes valid at (lambda*(r-1)+1, t') for every t' in
// [lambda*t, lambda*t + lambda - 1]; the recorded pair uses the largest.
ThresholdColoring scale_coloring(const ThresholdColoring& col, int lambda);
// The full interval of thresholds the scaled coloring supports.
std::pair<int, int> scaled_threshold_interval(const ParamPair& pair, int lambda);

// Applies an embedding witness vertex-wise: canonicalizes, then maps colors
// through phi.  A coloring valid at emb.from becomes valid at emb.to.
ThresholdColoring apply_embedding(const ThresholdColoring& col, const MonotoneEmbedding& emb);

// Embeds col into `target` via pair_leq(col.pair, target); throws
// precondition_error when the pairs are incomparable.
ThresholdColoring embed_into(const ThresholdColoring& col, const ParamPair& target);

} // namespace ttc
