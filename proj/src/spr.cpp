#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>
#include <vector>

#include "risr/reductions.hpp"

namespace risr {

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex start) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    dist[static_cast<size_t>(start)] = 0;
    std::queue<Vertex> q;
    q.push(start);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors_of(v))
            if (dist[static_cast<size_t>(w)] == -1) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

std::string to_string(SprMode mode) {
    return mode == SprMode::TJ_BIPARTITE ? "spr" : "spr-ts";
}

LayeredSource spr_preprocess(const Graph& h, Vertex x, Vertex y, const VertexSet& p,
                             const VertexSet& p2) {
    if (x < 0 || y < 0 || x >= h.vertex_count() || y >= h.vertex_count())
        throw InvalidInputError("spr_preprocess: x or y out of range");
    if (x == y) throw InvalidInputError("spr_preprocess: x and y must be distinct");
    detail::check_vertex_range(h, p, "spr_preprocess source path");
    detail::check_vertex_range(h, p2, "spr_preprocess target path");

    std::vector<int> from_x = bfs_distances(h, x);
    std::vector<int> from_y = bfs_distances(h, y);
    int distance = from_x[static_cast<size_t>(y)];
    if (distance == -1) throw InvalidInputError("spr_preprocess: x and y are disconnected");

    LayeredSource ls;
    ls.host = h;
    ls.x = x;
    ls.y = y;
    ls.path_source = p;
    ls.path_target = p2;
    ls.layer_of.assign(static_cast<size_t>(h.vertex_count()), -1);
    ls.layers.assign(static_cast<size_t>(distance) + 1, VertexSet{});
    std::vector<std::vector<Vertex>> members(static_cast<size_t>(distance) + 1);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        // keep v iff it lies on some shortest x-y path
        if (from_x[static_cast<size_t>(v)] == -1 || from_y[static_cast<size_t>(v)] == -1) continue;
        if (from_x[static_cast<size_t>(v)] + from_y[static_cast<size_t>(v)] != distance) continue;
        ls.layer_of[static_cast<size_t>(v)] = from_x[static_cast<size_t>(v)];
        members[static_cast<size_t>(from_x[static_cast<size_t>(v)])].push_back(v);
    }
    for (size_t i = 0; i < members.size(); ++i) ls.layers[i] = VertexSet(members[i]);

    if (!is_shortest_path_set(ls, p))
        throw InvalidInputError("spr_preprocess: source path is not the vertex set of a shortest x-y path");
    if (!is_shortest_path_set(ls, p2))
        throw InvalidInputError("spr_preprocess: target path is not the vertex set of a shortest x-y path");
    return ls;
}

bool is_shortest_path_set(const LayeredSource& ls, const VertexSet& p) {
    int r = ls.radius();
    if (p.size() != r) return false;
    std::vector<Vertex> pick(static_cast<size_t>(r), -1);
    for (Vertex v : p) {
        if (v < 0 || v >= ls.host.vertex_count()) return false;
        int layer = ls.layer_of[static_cast<size_t>(v)];
        if (layer == -1 || pick[static_cast<size_t>(layer)] != -1) return false;
        pick[static_cast<size_t>(layer)] = v;
    }
    for (int i = 0; i + 1 < r; ++i)
        if (!ls.host.has_edge(pick[static_cast<size_t>(i)], pick[static_cast<size_t>(i + 1)]))
            return false;
    return true;
}

std::vector<VertexSet> enumerate_shortest_path_sets(const LayeredSource& ls) {
    std::vector<VertexSet> out;
    std::vector<Vertex> pick;
    auto dfs = [&](auto&& self, int layer) -> void {
        if (layer == ls.radius()) {
            out.push_back(VertexSet(pick));
            return;
        }
        for (Vertex v : ls.layers[static_cast<size_t>(layer)]) {
            if (layer > 0 && !ls.host.has_edge(pick.back(), v)) continue;
            pick.push_back(v);
            self(self, layer + 1);
            pick.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

SprArtifact spr_reduce(const LayeredSource& ls, int d, SprMode mode) {
    if (d < 2) throw InvalidInputError("spr_reduce: d must be at least 2");
    int r = ls.radius();
    int block = 2 * d;
    int base = std::max(r, 6);
    int big_l = ((base + block - 1) / block) * block;

    SprArtifact art;
    art.source = ls;
    art.d = d;
    art.mode = mode;
    art.big_l = big_l;

    // output ids: kept host vertices ascending, then the return path
    // v_{r+1}..v_L, then per block A_i followed by B_i
    art.to_output.assign(static_cast<size_t>(ls.host.vertex_count()), -1);
    int next_id = 0;
    for (Vertex v = 0; v < ls.host.vertex_count(); ++v)
        if (ls.layer_of[static_cast<size_t>(v)] != -1) {
            art.to_output[static_cast<size_t>(v)] = next_id;
            art.from_output.push_back(v);
            ++next_id;
        }
    std::vector<Vertex> return_ids;
    for (int k = r + 1; k <= big_l; ++k) {
        return_ids.push_back(next_id);
        art.from_output.push_back(-1);
        ++next_id;
    }
    art.return_path = VertexSet(return_ids);
    int blocks = big_l / block;
    std::vector<Vertex> gadget_ids;
    for (int i = 0; i < blocks; ++i) {
        std::vector<Vertex> a, b;
        for (int j = 0; j < d - 2; ++j) {
            a.push_back(next_id);
            art.from_output.push_back(-1);
            gadget_ids.push_back(next_id);
            ++next_id;
        }
        for (int j = 0; j < d - 2; ++j) {
            b.push_back(next_id);
            art.from_output.push_back(-1);
            gadget_ids.push_back(next_id);
            ++next_id;
        }
        art.gadget_a.emplace_back(a);
        art.gadget_b.emplace_back(b);
    }
    art.gadget_union = VertexSet(gadget_ids);

    // V_1..V_L over the output ids
    for (int k = 1; k <= big_l; ++k) {
        if (k <= r) {
            std::vector<Vertex> layer;
            for (Vertex v : ls.layers[static_cast<size_t>(k - 1)])
                layer.push_back(art.to_output[static_cast<size_t>(v)]);
            art.layer_sets.emplace_back(layer);
        } else {
            art.layer_sets.push_back(VertexSet{return_ids[static_cast<size_t>(k - r - 1)]});
        }
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : ls.host.edge_list()) {
        int lu = ls.layer_of[static_cast<size_t>(u)];
        int lv = ls.layer_of[static_cast<size_t>(v)];
        if (lu == -1 || lv == -1 || std::abs(lu - lv) != 1) continue;  // pruned
        edges.emplace_back(art.to_output[static_cast<size_t>(u)],
                           art.to_output[static_cast<size_t>(v)]);
    }
    Vertex out_x = art.to_output[static_cast<size_t>(ls.x)];
    Vertex out_y = art.to_output[static_cast<size_t>(ls.y)];
    if (return_ids.empty()) {
        edges.emplace_back(out_y, out_x);
    } else {
        edges.emplace_back(out_y, return_ids.front());
        for (size_t i = 0; i + 1 < return_ids.size(); ++i)
            edges.emplace_back(return_ids[i], return_ids[i + 1]);
        edges.emplace_back(return_ids.back(), out_x);
    }
    for (int i = 0; i < blocks; ++i) {
        for (int j = 1; j <= d; ++j) {
            const VertexSet& odd_layer = art.layer_sets[static_cast<size_t>(block * i + 2 * j - 2)];
            const VertexSet& even_layer = art.layer_sets[static_cast<size_t>(block * i + 2 * j - 1)];
            for (Vertex a : art.gadget_a[static_cast<size_t>(i)])
                for (Vertex v : odd_layer) edges.emplace_back(a, v);
            for (Vertex b : art.gadget_b[static_cast<size_t>(i)])
                for (Vertex v : even_layer) edges.emplace_back(b, v);
        }
    }
    if (mode == SprMode::TS_CLIQUE_LAYERS)
        for (const VertexSet& layer : art.layer_sets)
            for (int i = 0; i < layer.size(); ++i)
                for (int j = i + 1; j < layer.size(); ++j) edges.emplace_back(layer[i], layer[j]);

    Graph g = build_graph(next_id, edges);

    auto lift_set = [&](const VertexSet& path) {
        std::vector<Vertex> members;
        for (Vertex v : path) members.push_back(art.to_output[static_cast<size_t>(v)]);
        for (Vertex v : art.return_path) members.push_back(v);
        for (Vertex v : art.gadget_union) members.push_back(v);
        return VertexSet(std::move(members));
    };
    art.instance = Instance{std::move(g), d,
                            mode == SprMode::TJ_BIPARTITE ? Rule::TJ : Rule::TS,
                            lift_set(ls.path_source), lift_set(ls.path_target), true};
    try {
        check_instance(art.instance);
    } catch (const InvalidInputError& e) {
        throw InternalConsistencyError(std::string("spr_reduce: construction is broken: ") +
                                       e.what());
    }
    return art;
}

ReconfigSequence spr_lift(const SprArtifact& art, const std::vector<VertexSet>& pathseq) {
    if (pathseq.empty()) throw ValidationError("spr_lift: empty path sequence");
    if (!(pathseq.front() == art.source.path_source))
        throw ValidationError("spr_lift: sequence does not start at the source path");
    if (!(pathseq.back() == art.source.path_target))
        throw ValidationError("spr_lift: sequence does not end at the target path");
    for (size_t i = 0; i < pathseq.size(); ++i) {
        if (!is_shortest_path_set(art.source, pathseq[i]))
            throw ValidationError("spr_lift: set " + std::to_string(i) +
                                  " is not the vertex set of a shortest x-y path");
        if (i > 0) {
            if (pathseq[i - 1].minus(pathseq[i]).size() != 1 ||
                pathseq[i].minus(pathseq[i - 1]).size() != 1)
                throw ValidationError("spr_lift: step " + std::to_string(i - 1) + "->" +
                                      std::to_string(i) + " is not a single-vertex exchange");
        }
    }
    ReconfigSequence out;
    for (const VertexSet& path : pathseq) {
        std::vector<Vertex> members;
        for (Vertex v : path) members.push_back(art.to_output[static_cast<size_t>(v)]);
        for (Vertex v : art.return_path) members.push_back(v);
        for (Vertex v : art.gadget_union) members.push_back(v);
        out.sets.emplace_back(std::move(members));
    }
    Verdict check = validate_sequence(art.instance, out);
    if (!check.ok)
        throw InternalConsistencyError("spr_lift: lifted sequence failed validation (" +
                                       check.reason + ")");
    return out;
}

std::vector<VertexSet> spr_project(const SprArtifact& art, const ReconfigSequence& gseq) {
    Verdict verdict = validate_sequence(art.instance, gseq);
    if (!verdict.ok)
        throw ValidationError("spr_project: input is not a valid sequence on the artifact (index " +
                              std::to_string(verdict.index) + ": " + verdict.reason + ")");
    std::vector<VertexSet> out;
    for (size_t i = 0; i < gseq.sets.size(); ++i) {
        const VertexSet& u = gseq.sets[i];
        for (Vertex v : art.gadget_union)
            if (!u.contains(v))
                throw InternalConsistencyError("spr_project: gadget vertex " + std::to_string(v) +
                                               " missing from step " + std::to_string(i));
        for (size_t k = 0; k < art.layer_sets.size(); ++k) {
            int hits = 0;
            for (Vertex v : art.layer_sets[k]) hits += u.contains(v) ? 1 : 0;
            if (hits != 1)
                throw InternalConsistencyError(
                    "spr_project: step " + std::to_string(i) + " meets layer V_" +
                    std::to_string(k + 1) + " in " + std::to_string(hits) + " vertices");
        }
        std::vector<Vertex> path;
        for (Vertex v : u) {
            Vertex host = art.from_output[static_cast<size_t>(v)];
            if (host != -1) path.push_back(host);
        }
        VertexSet p(std::move(path));
        if (!is_shortest_path_set(art.source, p))
            throw InternalConsistencyError("spr_project: step " + std::to_string(i) +
                                           " does not project to a shortest path");
        if (i > 0 && (out.back().minus(p).size() != 1 || p.minus(out.back()).size() != 1))
            throw InternalConsistencyError("spr_project: consecutive projections differ by more "
                                           "than one exchange");
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace risr
