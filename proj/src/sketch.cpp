#include "risr/sketch.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace risr {

namespace {

void check_permutation(const Ordering& pi, int n, const char* what) {
    if (static_cast<int>(pi.rank.size()) != n)
        throw InvalidInputError(std::string(what) + ": ordering size does not match vertex count");
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (int r : pi.rank) {
        if (r < 1 || r > n || used[static_cast<size_t>(r)])
            throw InvalidInputError(std::string(what) + ": not a bijection onto 1..n");
        used[static_cast<size_t>(r)] = true;
    }
}

}  // namespace

int ordering_width(const Graph& g, const Ordering& pi) {
    check_permutation(pi, g.vertex_count(), "ordering_width");
    int width = 0;
    for (auto [u, v] : g.edge_list())
        width = std::max(width,
                         std::abs(pi.rank[static_cast<size_t>(u)] - pi.rank[static_cast<size_t>(v)]));
    return width;
}

std::pair<int, Ordering> exact_bandwidth(const Graph& g, const Limits& limits) {
    int n = g.vertex_count();
    if (n > limits.bandwidth_vertex_bound)
        throw ResourceLimitError("exact_bandwidth: graph has " + std::to_string(n) +
                                 " vertices, above the bound of " +
                                 std::to_string(limits.bandwidth_vertex_bound));
    Ordering identity;
    identity.rank.resize(static_cast<size_t>(n));
    std::iota(identity.rank.begin(), identity.rank.end(), 1);
    if (g.edge_count() == 0) return {0, identity};

    int best = ordering_width(g, identity);
    std::vector<Vertex> best_order;  // position -> vertex
    for (Vertex v = 0; v < n; ++v) best_order.push_back(v);

    std::vector<Vertex> placed;                             // position -> vertex
    std::vector<int> position(static_cast<size_t>(n), -1);  // vertex -> position
    auto dfs = [&](auto&& self, int partial_width) -> void {
        int depth = static_cast<int>(placed.size());
        if (depth == n) {
            best = partial_width;  // strictly better by pruning
            best_order = placed;
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (position[static_cast<size_t>(v)] != -1) continue;
            // orderings and their reversals have equal width; keep only those
            // with first vertex smaller than last
            if (depth == n - 1 && v < placed.front()) continue;
            int width = partial_width;
            bool ok = true;
            for (Vertex w : g.neighbors_of(v)) {
                int pos = position[static_cast<size_t>(w)];
                if (pos == -1) continue;
                width = std::max(width, depth - pos);
                if (width >= best) { ok = false; break; }
            }
            if (!ok) continue;
            // every placed vertex must fit its unplaced neighbors in the
            // remaining positions
            position[static_cast<size_t>(v)] = depth;
            placed.push_back(v);
            for (int p = 0; ok && p <= depth; ++p) {
                Vertex u = placed[static_cast<size_t>(p)];
                int unplaced = 0;
                for (Vertex w : g.neighbors_of(u))
                    if (position[static_cast<size_t>(w)] == -1) ++unplaced;
                if (unplaced > 0 && depth + unplaced - p >= best) ok = false;
            }
            if (ok) self(self, width);
            placed.pop_back();
            position[static_cast<size_t>(v)] = -1;
        }
    };
    dfs(dfs, 0);

    Ordering out;
    out.rank.resize(static_cast<size_t>(n));
    for (int pos = 0; pos < n; ++pos) out.rank[static_cast<size_t>(best_order[static_cast<size_t>(pos)])] = pos + 1;
    return {best, out};
}

bool verify_sketch(const SketchMapping& s) {
    if (static_cast<int>(s.map.size()) != s.big.vertex_count())
        throw InvalidInputError("verify_sketch: map size does not match the big graph");
    for (Vertex image : s.map)
        if (image < 0 || image >= s.small.vertex_count())
            throw InvalidInputError("verify_sketch: map image out of range");
    std::vector<int> load(static_cast<size_t>(s.small.vertex_count()), 0);
    for (Vertex image : s.map)
        if (++load[static_cast<size_t>(image)] > s.t) return false;
    for (auto [u, v] : s.big.edge_list()) {
        Vertex fu = s.map[static_cast<size_t>(u)];
        Vertex fv = s.map[static_cast<size_t>(v)];
        if (fu != fv && !s.small.has_edge(fu, fv)) return false;
    }
    return true;
}

Ordering lift_ordering(const SketchMapping& s, const Ordering& pi_small) {
    check_permutation(pi_small, s.small.vertex_count(), "lift_ordering");
    if (!verify_sketch(s)) throw InvalidInputError("lift_ordering: not a valid sketch");

    std::vector<Vertex> order(static_cast<size_t>(s.big.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        int ra = pi_small.rank[static_cast<size_t>(s.map[static_cast<size_t>(a)])];
        int rb = pi_small.rank[static_cast<size_t>(s.map[static_cast<size_t>(b)])];
        return ra != rb ? ra < rb : a < b;
    });
    Ordering out;
    out.rank.resize(order.size());
    for (size_t pos = 0; pos < order.size(); ++pos) out.rank[static_cast<size_t>(order[pos])] = static_cast<int>(pos) + 1;

    int bound = s.t * (ordering_width(s.small, pi_small) + 1);
    int width = ordering_width(s.big, out);
    if (width > bound)
        throw InternalConsistencyError("lift_ordering: lifted width " + std::to_string(width) +
                                       " exceeds the guaranteed bound " + std::to_string(bound));
    return out;
}

SketchMapping sketch_of_reduction(const BlowupArtifact& art) {
    SketchMapping s;
    s.big = art.instance.graph;
    s.small = art.source_graph;
    s.map = art.family_of;
    s.t = art.d + 1;
    if (!verify_sketch(s))
        throw InternalConsistencyError("sketch_of_reduction: blow-up sketch failed verification");
    return s;
}

SketchMapping sketch_of_reduction(const SprArtifact& art) {
    if (art.mode != SprMode::TS_CLIQUE_LAYERS)
        throw InvalidInputError(
            "sketch_of_reduction: the cycle sketch applies to clique-layer artifacts only");
    int blocks = art.blocks();
    std::vector<std::pair<Vertex, Vertex>> cycle_edges;
    if (blocks == 2) {
        cycle_edges.emplace_back(0, 1);
    } else if (blocks >= 3) {
        for (int i = 0; i < blocks; ++i) cycle_edges.emplace_back(i, (i + 1) % blocks);
    }
    SketchMapping s;
    s.big = art.instance.graph;
    s.small = build_graph(blocks, cycle_edges);
    s.map.assign(static_cast<size_t>(s.big.vertex_count()), -1);
    std::vector<int> load(static_cast<size_t>(blocks), 0);
    int span = 2 * art.d;
    for (int k = 0; k < art.big_l; ++k)
        for (Vertex v : art.layer_sets[static_cast<size_t>(k)]) {
            s.map[static_cast<size_t>(v)] = k / span;
            ++load[static_cast<size_t>(k / span)];
        }
    for (int i = 0; i < blocks; ++i) {
        for (Vertex v : art.gadget_a[static_cast<size_t>(i)]) {
            s.map[static_cast<size_t>(v)] = i;
            ++load[static_cast<size_t>(i)];
        }
        for (Vertex v : art.gadget_b[static_cast<size_t>(i)]) {
            s.map[static_cast<size_t>(v)] = i;
            ++load[static_cast<size_t>(i)];
        }
    }
    s.t = *std::max_element(load.begin(), load.end());
    if (!verify_sketch(s))
        throw InternalConsistencyError("sketch_of_reduction: cycle sketch failed verification");
    return s;
}

}  // namespace risr
