#pragma once

#include <utility>
#include <vector>

#include "risr/reductions.hpp"

namespace risr {

// Bijection V(G) -> {1..n}, stored as rank[v].
struct Ordering {
    std::vector<int> rank;

    bool operator==(const Ordering&) const = default;
};

// max over edges of |rank(u) - rank(v)|; 0 for edgeless graphs.
int ordering_width(const Graph& g, const Ordering& pi);

// Minimum width over all orderings plus a witnessing ordering, by
// branch-and-bound. A test oracle; bounded by limits.bandwidth_vertex_bound.
std::pair<int, Ordering> exact_bandwidth(const Graph& g, const Limits& limits = {});

// A multiplicity-bounded collapse of big onto small: every big-edge maps to
// a small-edge or to a single small-vertex.
struct SketchMapping {
    Graph big;
    Graph small;
    std::vector<Vertex> map;  // f: V(big) -> V(small)
    int t = 1;                // multiplicity bound
};

// True iff |f^inverse(v)| <= t for all v and every edge collapses properly.
bool verify_sketch(const SketchMapping& s);

// Orders V(big) by (rank of image, vertex id). The result's width is at most
// t * (width(pi_small) + 1); violating that bound is an internal error.
Ordering lift_ordering(const SketchMapping& s, const Ordering& pi_small);

// H is a (d+1)-sketch of its blow-up.
SketchMapping sketch_of_reduction(const BlowupArtifact& art);

// A cycle on L/(2d) vertices sketches the clique-layer SPR output, with one
// class W_i = A_i ∪ B_i ∪ (2d consecutive layers) per cycle vertex.
SketchMapping sketch_of_reduction(const SprArtifact& art);

}  // namespace risr
