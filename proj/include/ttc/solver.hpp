#pragma once

#include "ttc/coloring.hpp"
#include "ttc/graph.hpp"
#include "ttc/labeling.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ttc {

// Complete existence decision by backtracking.  Deterministic: vertices in
// BFS order from vertex 0 (per component), colors ascending; translation
// symmetry is cut by anchoring the first vertex of each component to 0 and
// bounding the color window, then shifting the minimum to 0.  Returns the
// first solution in that order, canonicalized, or nullopt when none exists.
// Supports r <= 32.
std::optional<ThresholdColoring> find_coloring(const Graph& g, const NearFarLabeling& lab,
                                               const ParamPair& pair);

// Optional constructive colorer used by total_check.  Output is always
// re-verified; invalid output counts as a constructor failure and the
// labeling is retried with find_coloring.
using ColorerFn = std::function<ThresholdColoring(const Graph&, const NearFarLabeling&)>;

struct SweepOptions {
    int jobs = 1;             // worker threads; report bytes are independent of this
    int edge_limit = 24;      // refuse graphs with more edges than this
    ColorerFn constructor;    // optional
};

struct SweepReport {
    Family family = Family::generic;
    int family_n = 0;
    ParamPair pair;
    std::uint64_t labelings = 0;
    std::vector<std::uint64_t> failures;   // labeling bit patterns, increasing
    std::uint64_t constructor_failures = 0;
    int max_window = 0;                    // widest color window seen
    double wall_seconds = 0;               // not part of the deterministic report
};

// Iterates all 2^|E| labelings of g at the given pair.  For each labeling
// the constructor (when given) is tried first and its output verified;
// otherwise, or on constructor failure, find_coloring decides.  The failure
// list is exact and merged in labeling order regardless of jobs.
SweepReport total_check(const Graph& g, const ParamPair& pair, const SweepOptions& opts = {});

// The antichain of pair_leq-minimal pairs (r <= r_max, t <= t_max) whose
// find_coloring succeeds on this labeling.
std::vector<ParamPair> minimal_pair_frontier(const Graph& g, const NearFarLabeling& lab,
                                             int r_max, int t_max);

// One sign-propagation step: the 4-cycle w x y z with wx, yz far and
// xy, zw near forces c(w) > c(x)  =>  c(z) > c(y).
struct CertificateStep {
    int w = 0, x = 0, y = 0, z = 0;
};

// A cyclic chain of steps whose closing conclusion contradicts the opening
// premise c(w_0) > c(x_0).  A checked certificate rules out threshold
// colorings at every parameter pair.
struct ImpossibilityCertificate {
    std::vector<CertificateStep> steps;
    std::string describe(const Graph& g) const;
};

// The spoke-far chain on the Moebius ladder M_n: premise c(v_0) > c(v_n),
// step k derives c(v_{k+1}) > c(v_{n+k+1}), and step n-1 closes with
// c(v_n) > c(v_0).
ImpossibilityCertificate moebius_certificate(int n);
// The labeling the certificate refers to.
NearFarLabeling moebius_spoke_far_labeling(const Graph& moebius);

// The two-step chain on K4 - cycle 0 1 2 3 with far {01, 23} - using the
// cycles 0123 and 3201.
ImpossibilityCertificate k4_certificate();
NearFarLabeling k4_certificate_labeling(const Graph& k4);

// True iff every step's 4-cycle exists with the stated labels, consecutive
// steps chain (conclusion pair equals next premise pair), and the final
// conclusion contradicts the opening premise.  Throws structural_error on
// malformed vertex references.
bool check_certificate(const Graph& g, const NearFarLabeling& lab,
                       const ImpossibilityCertificate& cert);

} // namespace ttc
