#include <algorithm>
#include <string>
#include <vector>

#include "risr/reductions.hpp"

namespace risr {

Instance PendantArtifact::h_instance() const {
    return Instance{source_graph, 0, Rule::TS, h_source, h_target, false};
}

PendantArtifact pendant_reduce(const Graph& h, const VertexSet& s, const VertexSet& t) {
    ClassReport report = recognize(h);
    if (!report.bipartite()) throw InvalidInputError("pendant_reduce: graph is not bipartite");
    detail::check_vertex_range(h, s, "pendant_reduce source");
    detail::check_vertex_range(h, t, "pendant_reduce target");
    if (!is_d_regular_set(h, s, 0) || !is_d_regular_set(h, t, 0))
        throw InvalidInputError("pendant_reduce: input sets must be independent");
    if (s.size() != t.size())
        throw InvalidInputError("pendant_reduce: input sets must have equal cardinality");

    PendantArtifact art;
    art.source_graph = h;
    art.side_a = report.bipartition->first;
    art.side_b = report.bipartition->second;
    art.h_source = s;
    art.h_target = t;

    int hn = h.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> edges = h.edge_list();
    for (Vertex v = 0; v < hn; ++v) edges.emplace_back(v, v + hn);
    Graph g = build_graph(2 * hn, edges);

    auto with_pendants = [&](const VertexSet& hs) {
        std::vector<Vertex> members;
        for (Vertex v : hs) {
            members.push_back(v);
            members.push_back(v + hn);
        }
        return VertexSet(std::move(members));
    };
    art.instance =
        Instance{std::move(g), 1, Rule::TJ, with_pendants(s), with_pendants(t), false};
    check_instance(art.instance);
    return art;
}

ReconfigSequence pendant_lift(const PendantArtifact& art, const ReconfigSequence& hseq) {
    Verdict verdict = validate_sequence(art.h_instance(), hseq);
    if (!verdict.ok)
        throw ValidationError("pendant_lift: input is not a valid TS-sequence on H (index " +
                              std::to_string(verdict.index) + ": " + verdict.reason + ")");
    ReconfigSequence out;
    VertexSet current = art.instance.source;
    out.sets.push_back(current);
    for (size_t i = 1; i < hseq.sets.size(); ++i) {
        Vertex p = hseq.sets[i - 1].minus(hseq.sets[i])[0];
        Vertex q = hseq.sets[i].minus(hseq.sets[i - 1])[0];
        current = current.with_exchanged(art.pendant_of(p), q);
        out.sets.push_back(current);
        current = current.with_exchanged(p, art.pendant_of(q));
        out.sets.push_back(current);
    }
    Verdict check = validate_sequence(art.instance, out);
    if (!check.ok)
        throw InternalConsistencyError("pendant_lift: lifted sequence failed TJ validation (" +
                                       check.reason + ")");
    return out;
}

ReconfigSequence pendant_project(const PendantArtifact& art, const ReconfigSequence& gseq) {
    Verdict verdict = validate_sequence(art.instance, gseq);
    if (!verdict.ok)
        throw ValidationError("pendant_project: input is not a valid TJ-sequence on G (index " +
                              std::to_string(verdict.index) + ": " + verdict.reason + ")");
    const Graph& h = art.source_graph;
    int hn = h.vertex_count();

    // project U onto V(H): vertices matched with their pendant, plus the
    // A-side endpoint of every H-edge matched inside U
    auto project = [&](const VertexSet& u) {
        std::vector<Vertex> members;
        for (Vertex v : u) {
            if (v >= hn) continue;
            if (u.contains(art.pendant_of(v))) {
                members.push_back(v);
            } else if (art.side_a.contains(v)) {
                for (Vertex w : h.neighbors_of(v))
                    if (u.contains(w)) {
                        members.push_back(v);
                        break;
                    }
            }
        }
        return VertexSet(std::move(members));
    };

    int expected_size = art.instance.source.size() / 2;
    ReconfigSequence out;
    for (size_t i = 0; i < gseq.sets.size(); ++i) {
        VertexSet projected = project(gseq.sets[i]);
        if (projected.size() != expected_size)
            throw InternalConsistencyError("pendant_project: projection of step " +
                                           std::to_string(i) + " has size " +
                                           std::to_string(projected.size()) + ", expected " +
                                           std::to_string(expected_size));
        if (out.sets.empty()) {
            out.sets.push_back(std::move(projected));
            continue;
        }
        const VertexSet& prev = out.sets.back();
        if (projected == prev) continue;
        std::vector<Vertex> removed = prev.minus(projected);
        std::vector<Vertex> added = projected.minus(prev);
        if (removed.size() != 1 || added.size() != 1)
            throw InternalConsistencyError(
                "pendant_project: consecutive projections differ by more than one exchange");
        if (!h.has_edge(removed[0], added[0])) {
            // route the slide through a free common neighbor
            Vertex mid = -1;
            for (Vertex w : h.neighbors_of(removed[0])) {
                if (!h.has_edge(w, added[0])) continue;
                if (prev.contains(w) || projected.contains(w)) continue;
                if (is_d_regular_set(h, prev.with_exchanged(removed[0], w), 0)) {
                    mid = w;
                    break;
                }
            }
            if (mid == -1)
                throw InternalConsistencyError(
                    "pendant_project: no common-neighbor midpoint exists for the exchange " +
                    std::to_string(removed[0]) + " -> " + std::to_string(added[0]));
            out.sets.push_back(prev.with_exchanged(removed[0], mid));
        }
        out.sets.push_back(std::move(projected));
    }
    Verdict check = validate_sequence(art.h_instance(), out);
    if (!check.ok)
        throw InternalConsistencyError("pendant_project: projected sequence failed validation (" +
                                       check.reason + ")");
    return out;
}

}  // namespace risr
