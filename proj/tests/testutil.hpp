#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "risr/reconfig.hpp"

// Shared fixtures, independent brute-force oracles, and graph generators.
// The naive checkers here deliberately avoid the library's bitset paths; they
// recount degrees from the edge list.
namespace risr::testutil {

// The worked example graph with its six 1-regular sets U_0..U_5.
struct WorkedExample {
    Graph graph = build_graph(8, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {2, 4},
                                  {2, 7}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 7}});
    std::vector<VertexSet> sets = {VertexSet{0, 2, 5, 7}, VertexSet{0, 2, 3, 7},
                                   VertexSet{0, 3, 6, 7}, VertexSet{1, 3, 6, 7},
                                   VertexSet{1, 3, 5, 6}, VertexSet{1, 2, 5, 6}};

    Instance instance(Rule rule) const {
        return Instance{graph, 1, rule, sets.front(), sets.back(), false};
    }
};

inline std::set<std::pair<Vertex, Vertex>> edge_set(const Graph& g) {
    std::set<std::pair<Vertex, Vertex>> out;
    for (auto [u, v] : g.edge_list()) {
        out.insert({u, v});
        out.insert({v, u});
    }
    return out;
}

inline bool naive_is_d_regular(const Graph& g, const VertexSet& u, int d) {
    std::set<std::pair<Vertex, Vertex>> edges = edge_set(g);
    for (Vertex v : u) {
        int degree = 0;
        for (Vertex w : u)
            if (w != v && edges.contains({v, w})) ++degree;
        if (degree != d) return false;
    }
    return true;
}

// Full subset scan; the independent enumeration oracle.
inline std::vector<VertexSet> naive_enumerate(const Graph& g, int d, int k) {
    std::vector<VertexSet> out;
    int n = g.vertex_count();
    std::vector<Vertex> pick;
    auto dfs = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            VertexSet candidate(pick);
            if (naive_is_d_regular(g, candidate, d)) out.push_back(candidate);
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

inline std::vector<VertexSet> all_independent_sets(const Graph& g, bool include_empty = false) {
    std::vector<VertexSet> out;
    if (include_empty) out.push_back(VertexSet{});
    for (int k = 1; k <= g.vertex_count(); ++k)
        for (const VertexSet& s : enumerate_d_regular_sets(g, 0, k, Limits{}))
            out.push_back(s);
    return out;
}

inline Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

inline bool is_connected_graph(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    std::vector<Vertex> all(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) all[static_cast<size_t>(i)] = i;
    return is_connected_set(g, VertexSet(all));
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (is_connected_graph(g)) return g;
    }
}

inline Graph random_bipartite_graph(std::mt19937& rng, int n, double p) {
    std::uniform_int_distribution<int> split(1, std::max(1, n - 1));
    int a = n <= 1 ? n : split(rng);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

inline Graph random_triangle_free_graph(std::mt19937& rng, int n, double p) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Graph g = random_graph(rng, n, p);
        if (!has_triangle(g)) return g;
    }
    return random_bipartite_graph(rng, n, p);
}

// Cheap isomorphism invariant: degree-sorted profile of neighbor degrees.
inline std::vector<int> iso_invariant(const Graph& g) {
    std::vector<std::vector<int>> profile;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> row = {g.degree(v)};
        for (Vertex w : g.neighbors_of(v)) row.push_back(g.degree(w));
        std::sort(row.begin() + 1, row.end());
        profile.push_back(std::move(row));
    }
    std::sort(profile.begin(), profile.end());
    std::vector<int> flat = {g.vertex_count(), g.edge_count()};
    for (const auto& row : profile) {
        flat.push_back(-1);
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

// Every n-vertex graph satisfying keep, one representative per isomorphism
// class. The mask-level prefilter runs before any Graph is built.
inline std::vector<Graph> all_graphs_up_to_iso(
    int n, const std::function<bool(const std::vector<std::uint8_t>&)>& mask_prefilter,
    const std::function<bool(const Graph&)>& keep) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Graph> reps;
    std::map<std::vector<int>, std::vector<size_t>> buckets;
    std::vector<std::uint8_t> adj(static_cast<size_t>(n), 0);
    for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
        std::fill(adj.begin(), adj.end(), 0);
        for (size_t b = 0; b < pairs.size(); ++b)
            if (m & (1u << b)) {
                adj[static_cast<size_t>(pairs[b].first)] |= static_cast<std::uint8_t>(1u << pairs[b].second);
                adj[static_cast<size_t>(pairs[b].second)] |= static_cast<std::uint8_t>(1u << pairs[b].first);
            }
        if (mask_prefilter && !mask_prefilter(adj)) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (size_t b = 0; b < pairs.size(); ++b)
            if (m & (1u << b)) edges.push_back(pairs[b]);
        Graph g = build_graph(n, edges);
        if (keep && !keep(g)) continue;
        std::vector<int> invariant = iso_invariant(g);
        std::vector<size_t>& bucket = buckets[invariant];
        bool duplicate = false;
        for (size_t idx : bucket)
            if (are_isomorphic(g, reps[idx])) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        bucket.push_back(reps.size());
        reps.push_back(std::move(g));
    }
    return reps;
}

inline bool mask_connected(const std::vector<std::uint8_t>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return false;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= adj[static_cast<size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : ((1u << n) - 1));
}

inline bool mask_bipartite(const std::vector<std::uint8_t>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!(adj[static_cast<size_t>(v)] & (1u << w))) continue;
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Layered SPR generator: every vertex keeps a neighbor toward both x and y,
// so it survives preprocessing.
struct SprCase {
    Graph graph;
    Vertex x = 0;
    Vertex y = -1;
    VertexSet path_source;
    VertexSet path_target;
};

inline SprCase random_layered_spr(std::mt19937& rng, int r, int max_layer) {
    std::vector<std::vector<Vertex>> layers(static_cast<size_t>(r));
    int next = 0;
    std::uniform_int_distribution<int> size_dist(1, max_layer);
    for (int i = 0; i < r; ++i) {
        int size = (i == 0 || i == r - 1) ? 1 : size_dist(rng);
        for (int j = 0; j < size; ++j) layers[static_cast<size_t>(i)].push_back(next++);
    }
    std::bernoulli_distribution coin(0.5);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < r; ++i) {
        const auto& left = layers[static_cast<size_t>(i)];
        const auto& right = layers[static_cast<size_t>(i + 1)];
        std::set<std::pair<Vertex, Vertex>> chosen;
        for (Vertex u : left)
            for (Vertex v : right)
                if (coin(rng)) chosen.insert({u, v});
        // make sure every vertex continues forward and backward
        std::uniform_int_distribution<size_t> pick_right(0, right.size() - 1);
        std::uniform_int_distribution<size_t> pick_left(0, left.size() - 1);
        for (Vertex u : left) {
            bool has = false;
            for (Vertex v : right)
                if (chosen.contains({u, v})) has = true;
            if (!has) chosen.insert({u, right[pick_right(rng)]});
        }
        for (Vertex v : right) {
            bool has = false;
            for (Vertex u : left)
                if (chosen.contains({u, v})) has = true;
            if (!has) chosen.insert({left[pick_left(rng)], v});
        }
        edges.insert(edges.end(), chosen.begin(), chosen.end());
    }
    SprCase out;
    out.graph = build_graph(next, edges);
    out.x = layers.front().front();
    out.y = layers.back().front();

    // lexicographically smallest and largest shortest paths as endpoints
    auto greedy_path = [&](bool smallest) {
        std::vector<Vertex> pick = {out.x};
        for (int i = 1; i < r; ++i) {
            Vertex chosen = -1;
            const auto& layer = layers[static_cast<size_t>(i)];
            for (Vertex v : layer) {
                if (!out.graph.has_edge(pick.back(), v)) continue;
                if (chosen == -1 || (smallest ? v < chosen : v > chosen)) chosen = v;
            }
            pick.push_back(chosen);
        }
        return VertexSet(pick);
    };
    out.path_source = greedy_path(true);
    out.path_target = greedy_path(false);
    return out;
}

}  // namespace risr::testutil
