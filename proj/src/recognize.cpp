#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "risr/graph.hpp"

namespace risr {

namespace {

// 2-coloring by BFS, each component started at its smallest vertex with
// color 0. Returns colors or empty on an odd cycle.
std::vector<int> two_color(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors_of(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return {};
                }
            }
        }
    }
    return color;
}

// Maximum cardinality search; ties broken toward the smaller vertex. The
// visit order reversed is a perfect elimination ordering iff g is chordal.
std::vector<Vertex> mcs_visit_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<bool> visited(static_cast<size_t>(n), false);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (visited[static_cast<size_t>(v)]) continue;
            if (best == -1 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]) best = v;
        }
        visited[static_cast<size_t>(best)] = true;
        order.push_back(best);
        for (Vertex w : g.neighbors_of(best))
            if (!visited[static_cast<size_t>(w)]) ++weight[static_cast<size_t>(w)];
    }
    return order;
}

// Hammer-Simeone: sort degrees descending, m = max{i : d_i >= i-1} (1-based);
// split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
bool is_split_by_degrees(const Graph& g) {
    int n = g.vertex_count();
    std::vector<long long> deg;
    for (Vertex v = 0; v < n; ++v) deg.push_back(g.degree(v));
    std::sort(deg.rbegin(), deg.rend());
    long long m = 0;
    for (int i = 1; i <= n; ++i)
        if (deg[static_cast<size_t>(i - 1)] >= i - 1) m = i;
    long long head = std::accumulate(deg.begin(), deg.begin() + m, 0ll);
    long long tail = std::accumulate(deg.begin() + m, deg.end(), 0ll);
    return head == m * (m - 1) + tail;
}

}  // namespace

bool has_triangle(const Graph& g) {
    int words = g.words_per_row();
    for (auto [u, v] : g.edge_list()) {
        const std::uint64_t* ru = g.row(u);
        const std::uint64_t* rv = g.row(v);
        for (int w = 0; w < words; ++w)
            if (ru[w] & rv[w]) return true;
    }
    return false;
}

bool check_bipartition(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.size() + b.size() != g.vertex_count()) return false;
    for (Vertex v : a)
        if (b.contains(v)) return false;
    for (auto [u, v] : g.edge_list())
        if (a.contains(u) == a.contains(v)) return false;
    return true;
}

bool check_elimination_ordering(const Graph& g, const std::vector<Vertex>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> position(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<size_t>(i)];
        if (v < 0 || v >= n || position[static_cast<size_t>(v)] != -1) return false;
        position[static_cast<size_t>(v)] = i;
    }
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<size_t>(i)];
        // later neighbors must form a clique; checking them against the
        // earliest one suffices when applied to every vertex
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors_of(v))
            if (position[static_cast<size_t>(w)] > i) later.push_back(w);
        if (later.empty()) continue;
        Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex x, Vertex y) {
            return position[static_cast<size_t>(x)] < position[static_cast<size_t>(y)];
        });
        for (Vertex w : later)
            if (w != parent && !g.has_edge(parent, w)) return false;
    }
    return true;
}

ClassReport recognize(const Graph& g) {
    ClassReport report;

    std::vector<int> color = two_color(g);
    if (!color.empty() || g.vertex_count() == 0) {
        std::vector<Vertex> a, b;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            (color[static_cast<size_t>(v)] == 0 ? a : b).push_back(v);
        VertexSet side_a(a), side_b(b);
        if (!check_bipartition(g, side_a, side_b))
            throw InternalConsistencyError("recognize: 2-coloring failed verification");
        report.bipartition = {std::move(side_a), std::move(side_b)};
    }

    report.triangle_free = !has_triangle(g);

    std::vector<Vertex> visit = mcs_visit_order(g);
    std::vector<Vertex> elimination(visit.rbegin(), visit.rend());
    if (check_elimination_ordering(g, elimination)) report.elimination_ordering = elimination;

    report.split = g.vertex_count() == 0 ? true : is_split_by_degrees(g);
    return report;
}

}  // namespace risr
