#include <algorithm>
#include <vector>

#include "risr/graph.hpp"

namespace risr {

namespace {

// Greedy search order: start at a max-degree vertex, then prefer vertices
// with the most already-ordered neighbors. Keeps the partial mapping tight.
std::vector<Vertex> search_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Vertex> order;
    std::vector<bool> placed(static_cast<size_t>(n), false);
    std::vector<int> placed_neighbors(static_cast<size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[static_cast<size_t>(v)]) continue;
            if (best == -1) { best = v; continue; }
            auto key = [&](Vertex u) {
                return std::pair<int, int>(placed_neighbors[static_cast<size_t>(u)], g.degree(u));
            };
            if (key(v) > key(best)) best = v;
        }
        placed[static_cast<size_t>(best)] = true;
        order.push_back(best);
        for (Vertex w : g.neighbors_of(best)) ++placed_neighbors[static_cast<size_t>(w)];
    }
    return order;
}

bool extend(const std::vector<Vertex>& order, size_t depth, const Graph& g1, const Graph& g2,
            std::vector<Vertex>& image, std::vector<bool>& used) {
    if (depth == order.size()) return true;
    Vertex u = order[depth];
    for (Vertex cand = 0; cand < g2.vertex_count(); ++cand) {
        if (used[static_cast<size_t>(cand)]) continue;
        if (g2.degree(cand) != g1.degree(u)) continue;
        bool ok = true;
        for (size_t i = 0; i < depth; ++i) {
            Vertex w = order[i];
            if (g1.has_edge(u, w) != g2.has_edge(cand, image[static_cast<size_t>(w)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[static_cast<size_t>(u)] = cand;
        used[static_cast<size_t>(cand)] = true;
        if (extend(order, depth + 1, g1, g2, image, used)) return true;
        used[static_cast<size_t>(cand)] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& g1, const Graph& g2, int max_vertices) {
    if (g1.vertex_count() > max_vertices || g2.vertex_count() > max_vertices)
        throw ResourceLimitError("are_isomorphic: graph exceeds the " +
                                 std::to_string(max_vertices) + "-vertex bound");
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    int n = g1.vertex_count();
    if (n == 0) return true;

    std::vector<int> deg1, deg2;
    for (Vertex v = 0; v < n; ++v) {
        deg1.push_back(g1.degree(v));
        deg2.push_back(g2.degree(v));
    }
    std::sort(deg1.begin(), deg1.end());
    std::sort(deg2.begin(), deg2.end());
    if (deg1 != deg2) return false;

    std::vector<Vertex> order = search_order(g1);
    std::vector<Vertex> image(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    return extend(order, 0, g1, g2, image, used);
}

}  // namespace risr
