#pragma once

#include <vector>

#include "risr/reconfig.hpp"

namespace risr {

// ---------------------------------------------------------------------------
// Blow-up reduction: independent-set reconfiguration under TS on H becomes
// d-regular reconfiguration on G, where every H-vertex v is replaced by a
// clique X_v of d+1 pairwise true twins and H-edges become complete joins.
// ---------------------------------------------------------------------------

struct BlowupArtifact {
    Graph source_graph;  // H
    int d = 1;
    VertexSet h_source;  // I
    VertexSet h_target;  // I'
    // Output instance on G. Reachability is the same under TJ and TS; the
    // stored rule is TJ, flip it to exercise the TS side.
    Instance instance;
    std::vector<VertexSet> families;  // X_v; member j of X_v has id v*(d+1)+j
    std::vector<Vertex> family_of;    // f: V(G) -> V(H)

    Instance h_instance() const;              // the source question: (H, 0, TS, I, I')
    Instance instance_under(Rule rule) const;
};

BlowupArtifact blowup_reduce(const Graph& h, const VertexSet& i_source, const VertexSet& i_target,
                             int d);

// Expands each H-slide p -> q into d+1 G-slides pairing X-members by
// ascending index. Output has exactly (d+1) * moves(hseq) moves.
ReconfigSequence blowup_lift(const BlowupArtifact& art, const ReconfigSequence& hseq);

// Replaces each TJ step with a nonadjacent exchanged pair by two TS steps
// through a free true twin of a common neighbor.
ReconfigSequence blowup_tj_to_ts(const BlowupArtifact& art, const ReconfigSequence& gseq);

// Projects a TS-sequence on G back to H by tracking one representative per
// family, dropping consecutive duplicates.
ReconfigSequence blowup_project(const BlowupArtifact& art, const ReconfigSequence& gseq);

// ---------------------------------------------------------------------------
// Shortest Path Reconfiguration reductions.
// ---------------------------------------------------------------------------

// H restricted to vertices on shortest x-y paths, organized as distance
// layers D_1..D_r over the host's vertex ids. Vertices in no layer are
// pruned; the surviving edges are exactly those between consecutive layers.
struct LayeredSource {
    Graph host;
    Vertex x = -1, y = -1;
    VertexSet path_source;            // P
    VertexSet path_target;            // P'
    std::vector<VertexSet> layers;    // D_1..D_r
    std::vector<int> layer_of;        // host id -> 0-based layer, -1 when pruned

    int radius() const { return static_cast<int>(layers.size()); }  // r
};

LayeredSource spr_preprocess(const Graph& h, Vertex x, Vertex y, const VertexSet& p,
                             const VertexSet& p2);

bool is_shortest_path_set(const LayeredSource& ls, const VertexSet& p);

// All shortest x-y path vertex sets; the SPR ground truth at desk scale.
std::vector<VertexSet> enumerate_shortest_path_sets(const LayeredSource& ls);

enum class SprMode { TJ_BIPARTITE, TS_CLIQUE_LAYERS };

std::string to_string(SprMode mode);

struct SprArtifact {
    LayeredSource source;
    int d = 2;
    SprMode mode = SprMode::TJ_BIPARTITE;
    int big_l = 0;  // L, the cycle length
    // CRISR instance on the output graph (rule TJ in bipartite mode, TS in
    // clique-layer mode).
    Instance instance;
    std::vector<VertexSet> layer_sets;  // V_1..V_L, output ids
    std::vector<Vertex> to_output;      // host id -> output id, -1 when pruned
    std::vector<Vertex> from_output;    // output id -> host id, -1 for added vertices
    VertexSet return_path;              // v_{r+1}..v_L, ascending ids = path order
    std::vector<VertexSet> gadget_a;    // A_i per block, empty family when d = 2
    std::vector<VertexSet> gadget_b;    // B_i per block
    VertexSet gadget_union;             // I

    int blocks() const { return static_cast<int>(gadget_a.size()); }  // L/(2d)
};

// L = the smallest multiple of 2d that is >= max{r, 6}; appends the return
// path closing the layer structure into a cycle and, for d >= 3, one
// (A_i, B_i) gadget pair per block of 2d consecutive layers.
SprArtifact spr_reduce(const LayeredSource& ls, int d, SprMode mode);

// U_i = P_i ∪ return path ∪ I, one output set per input path.
ReconfigSequence spr_lift(const SprArtifact& art, const std::vector<VertexSet>& pathseq);

// Checks the structural claim (I ⊆ U_i and |U_i ∩ V_j| = 1) on every step,
// then strips the added vertices, recovering a path sequence.
std::vector<VertexSet> spr_project(const SprArtifact& art, const ReconfigSequence& gseq);

// ---------------------------------------------------------------------------
// Pendant reduction: independent-set reconfiguration under TS on bipartite H
// becomes 1-regular reconfiguration under TJ on H plus one pendant per vertex.
// ---------------------------------------------------------------------------

struct PendantArtifact {
    Graph source_graph;  // H
    VertexSet side_a;    // bipartition side holding each component's smallest vertex
    VertexSet side_b;
    VertexSet h_source;  // S
    VertexSet h_target;  // T
    Instance instance;   // on G with d = 1, rule TJ

    Vertex pendant_of(Vertex v) const { return v + source_graph.vertex_count(); }
    Instance h_instance() const;  // (H, 0, TS, S, T)
};

PendantArtifact pendant_reduce(const Graph& h, const VertexSet& s, const VertexSet& t);

// Each H-slide p -> q becomes two jumps: p' to q, then p to q'. Output has
// exactly 2 * moves(hseq) moves.
ReconfigSequence pendant_lift(const PendantArtifact& art, const ReconfigSequence& hseq);

// Projects each U_i onto V(H), keeping pendant-matched vertices and the
// A-side endpoint of H-edge matches; nonadjacent exchanges get a midpoint
// through a free common neighbor.
ReconfigSequence pendant_project(const PendantArtifact& art, const ReconfigSequence& gseq);

}  // namespace risr
