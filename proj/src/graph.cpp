#include "risr/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace risr {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<Vertex> VertexSet::minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    return out;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

VertexSet VertexSet::with_exchanged(Vertex removed, Vertex added) const {
    return with_erased(removed).with_inserted(added);
}

VertexSet VertexSet::with_inserted(Vertex v) const {
    VertexSet result = *this;
    auto it = std::lower_bound(result.members_.begin(), result.members_.end(), v);
    if (it == result.members_.end() || *it != v) result.members_.insert(it, v);
    return result;
}

VertexSet VertexSet::with_erased(Vertex v) const {
    VertexSet result = *this;
    auto it = std::lower_bound(result.members_.begin(), result.members_.end(), v);
    if (it != result.members_.end() && *it == v) result.members_.erase(it);
    return result;
}

std::string VertexSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i) out << ',';
        out << members_[i];
    }
    out << '}';
    return out.str();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return (row(u)[static_cast<size_t>(v) >> 6] >> (static_cast<unsigned>(v) & 63u)) & 1u;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw InvalidInputError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.words_ = n == 0 ? 1 : (n + 63) / 64;
    g.adj_.assign(static_cast<size_t>(n), {});
    g.bits_.assign(static_cast<size_t>(n) * static_cast<size_t>(g.words_), 0);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw InvalidInputError("self-loop rejected: vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
        g.bits_[static_cast<size_t>(u) * g.words_ + (static_cast<size_t>(v) >> 6)] |= 1ull << (static_cast<unsigned>(v) & 63u);
        g.bits_[static_cast<size_t>(v) * g.words_ + (static_cast<size_t>(u) >> 6)] |= 1ull << (static_cast<unsigned>(u) & 63u);
    }
    g.m_ = static_cast<int>(seen.size());
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

namespace detail {
void check_vertex_range(const Graph& g, const VertexSet& u, const char* what) {
    for (Vertex v : u)
        if (v < 0 || v >= g.vertex_count())
            throw InvalidInputError(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range for graph with n=" +
                                    std::to_string(g.vertex_count()));
}
}  // namespace detail

Graph induced_subgraph(const Graph& g, const VertexSet& u) {
    detail::check_vertex_range(g, u, "induced_subgraph");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < u.size(); ++i)
        for (int j = i + 1; j < u.size(); ++j)
            if (g.has_edge(u[i], u[j])) edges.emplace_back(i, j);
    return build_graph(u.size(), edges);
}

bool is_d_regular_set(const Graph& g, const VertexSet& u, int d) {
    if (d < 0) throw InvalidInputError("is_d_regular_set: d must be nonnegative");
    detail::check_vertex_range(g, u, "is_d_regular_set");
    for (Vertex v : u) {
        int deg = 0;
        for (Vertex w : u)
            if (w != v && g.has_edge(v, w)) ++deg;
        if (deg != d) return false;
    }
    return true;
}

bool is_connected_set(const Graph& g, const VertexSet& u) {
    detail::check_vertex_range(g, u, "is_connected_set");
    if (u.empty()) return false;
    std::vector<Vertex> stack = {u[0]};
    std::set<Vertex> seen = {u[0]};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : u)
            if (w != v && g.has_edge(v, w) && seen.insert(w).second) stack.push_back(w);
    }
    return static_cast<int>(seen.size()) == u.size();
}

}  // namespace risr
