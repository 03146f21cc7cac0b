#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "risr/errors.hpp"

namespace risr {

using Vertex = int;

// Canonical vertex subset: members kept sorted and duplicate-free, so
// equality and ordering are structural.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    bool contains(Vertex v) const;
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    Vertex operator[](int i) const { return members_[static_cast<size_t>(i)]; }

    std::vector<Vertex>::const_iterator begin() const { return members_.begin(); }
    std::vector<Vertex>::const_iterator end() const { return members_.end(); }
    const std::vector<Vertex>& members() const { return members_; }

    // Elements of *this not in other, in ascending order.
    std::vector<Vertex> minus(const VertexSet& other) const;
    VertexSet unite(const VertexSet& other) const;
    VertexSet with_exchanged(Vertex removed, Vertex added) const;
    VertexSet with_inserted(Vertex v) const;
    VertexSet with_erased(Vertex v) const;

    bool operator==(const VertexSet& other) const = default;
    auto operator<=>(const VertexSet& other) const = default;

    std::string to_string() const;

private:
    std::vector<Vertex> members_;
};

// Immutable simple undirected graph on vertices 0..n-1. No self-loops, no
// parallel edges. Safe to share across concurrent readers.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors_of(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    // Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edge_list() const;

    // Adjacency rows as bit words (words_per_row() words per vertex).
    int words_per_row() const { return words_; }
    const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<size_t>(v) * static_cast<size_t>(words_); }

    friend Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> bits_;
};

// Builds the graph with exactly the given edges, deduplicated.
// Throws InvalidInputError on an out-of-range endpoint or a self-loop.
Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

// G[U] with vertices relabeled 0..|U|-1 in U's sorted order.
Graph induced_subgraph(const Graph& g, const VertexSet& u);

// True iff every vertex of G[U] has degree exactly d within G[U].
// The empty set is d-regular for every d.
bool is_d_regular_set(const Graph& g, const VertexSet& u, int d);

// True iff G[U] has exactly one connected component; false for the empty set.
bool is_connected_set(const Graph& g, const VertexSet& u);

// Exhaustive backtracking isomorphism test with degree-sequence pruning.
// Only intended for solution-set induced subgraphs; throws ResourceLimitError
// above max_vertices.
bool are_isomorphic(const Graph& g1, const Graph& g2, int max_vertices = 64);

struct ClassReport {
    // Present iff bipartite; (A, B) with every edge crossing. A holds the
    // smallest vertex of each component.
    std::optional<std::pair<VertexSet, VertexSet>> bipartition;
    bool triangle_free = false;
    // Present iff chordal; a perfect elimination ordering, first eliminated
    // vertex first.
    std::optional<std::vector<Vertex>> elimination_ordering;
    bool split = false;

    bool bipartite() const { return bipartition.has_value(); }
    bool chordal() const { return elimination_ordering.has_value(); }
};

// Recognizes bipartite / triangle-free / chordal / split. Certificates are
// re-verified before they are returned.
ClassReport recognize(const Graph& g);

bool has_triangle(const Graph& g);

// Certificate checkers used by recognize and by tests.
bool check_bipartition(const Graph& g, const VertexSet& a, const VertexSet& b);
bool check_elimination_ordering(const Graph& g, const std::vector<Vertex>& order);

namespace detail {
void check_vertex_range(const Graph& g, const VertexSet& u, const char* what);
}

}  // namespace risr
