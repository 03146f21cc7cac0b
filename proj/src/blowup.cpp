#include <algorithm>
#include <string>
#include <vector>

#include "risr/reductions.hpp"

namespace risr {

Instance BlowupArtifact::h_instance() const {
    return Instance{source_graph, 0, Rule::TS, h_source, h_target, false};
}

Instance BlowupArtifact::instance_under(Rule rule) const {
    Instance copy = instance;
    copy.rule = rule;
    return copy;
}

BlowupArtifact blowup_reduce(const Graph& h, const VertexSet& i_source, const VertexSet& i_target,
                             int d) {
    if (d < 1) throw InvalidInputError("blowup_reduce: d must be at least 1");
    detail::check_vertex_range(h, i_source, "blowup_reduce source");
    detail::check_vertex_range(h, i_target, "blowup_reduce target");
    if (!is_d_regular_set(h, i_source, 0) || !is_d_regular_set(h, i_target, 0))
        throw InvalidInputError("blowup_reduce: input sets must be independent");
    if (i_source.size() != i_target.size())
        throw InvalidInputError("blowup_reduce: input sets must have equal cardinality");
    if (i_source.empty()) throw InvalidInputError("blowup_reduce: input sets must be nonempty");

    int hn = h.vertex_count();
    int size = d + 1;
    BlowupArtifact art;
    art.source_graph = h;
    art.d = d;
    art.h_source = i_source;
    art.h_target = i_target;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < hn; ++v)
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b) edges.emplace_back(v * size + a, v * size + b);
    for (auto [u, v] : h.edge_list())
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b) edges.emplace_back(u * size + a, v * size + b);
    Graph g = build_graph(hn * size, edges);

    art.families.reserve(static_cast<size_t>(hn));
    art.family_of.assign(static_cast<size_t>(hn * size), -1);
    for (Vertex v = 0; v < hn; ++v) {
        std::vector<Vertex> members;
        for (int a = 0; a < size; ++a) {
            members.push_back(v * size + a);
            art.family_of[static_cast<size_t>(v * size + a)] = v;
        }
        art.families.emplace_back(members);
    }

    auto family_union = [&](const VertexSet& hs) {
        std::vector<Vertex> members;
        for (Vertex v : hs)
            for (Vertex g_vertex : art.families[static_cast<size_t>(v)]) members.push_back(g_vertex);
        return VertexSet(std::move(members));
    };
    art.instance = Instance{std::move(g), d, Rule::TJ, family_union(i_source),
                            family_union(i_target), false};
    check_instance(art.instance);
    return art;
}

ReconfigSequence blowup_lift(const BlowupArtifact& art, const ReconfigSequence& hseq) {
    Verdict verdict = validate_sequence(art.h_instance(), hseq);
    if (!verdict.ok)
        throw ValidationError("blowup_lift: input is not a valid TS-sequence on H (index " +
                              std::to_string(verdict.index) + ": " + verdict.reason + ")");
    ReconfigSequence out;
    VertexSet current = art.instance.source;
    out.sets.push_back(current);
    for (size_t i = 1; i < hseq.sets.size(); ++i) {
        Vertex p = hseq.sets[i - 1].minus(hseq.sets[i])[0];
        Vertex q = hseq.sets[i].minus(hseq.sets[i - 1])[0];
        const VertexSet& from = art.families[static_cast<size_t>(p)];
        const VertexSet& to = art.families[static_cast<size_t>(q)];
        for (int j = 0; j < art.d + 1; ++j) {
            current = current.with_exchanged(from[j], to[j]);
            out.sets.push_back(current);
        }
    }
    Verdict check = validate_sequence(art.instance_under(Rule::TS), out);
    if (!check.ok)
        throw InternalConsistencyError("blowup_lift: lifted sequence failed TS validation (" +
                                       check.reason + ")");
    return out;
}

ReconfigSequence blowup_tj_to_ts(const BlowupArtifact& art, const ReconfigSequence& gseq) {
    if (gseq.sets.empty()) throw ValidationError("blowup_tj_to_ts: sequence is empty");
    // the endpoints are free: any valid TJ-sequence in G can be repaired
    Instance shape = art.instance_under(Rule::TJ);
    shape.source = gseq.sets.front();
    shape.target = gseq.sets.back();
    Verdict verdict = validate_sequence(shape, gseq);
    if (!verdict.ok)
        throw ValidationError("blowup_tj_to_ts: input is not a valid TJ-sequence on G (index " +
                              std::to_string(verdict.index) + ": " + verdict.reason + ")");
    const Graph& g = art.instance.graph;
    ReconfigSequence out;
    out.sets.push_back(gseq.sets.front());
    for (size_t i = 1; i < gseq.sets.size(); ++i) {
        const VertexSet& prev = gseq.sets[i - 1];
        const VertexSet& cur = gseq.sets[i];
        Vertex removed = prev.minus(cur)[0];
        Vertex added = cur.minus(prev)[0];
        if (!g.has_edge(removed, added)) {
            // slide via a free true twin of a common neighbor kept by the move
            Vertex repair = -1;
            for (Vertex w : prev) {
                if (w == removed || !g.has_edge(w, removed) || !g.has_edge(w, added)) continue;
                for (Vertex twin : art.families[static_cast<size_t>(
                         art.family_of[static_cast<size_t>(w)])]) {
                    if (!prev.contains(twin) && !cur.contains(twin) && twin != added) {
                        repair = twin;
                        break;
                    }
                }
                if (repair != -1) break;
            }
            if (repair == -1)
                throw InternalConsistencyError(
                    "blowup_tj_to_ts: no repair vertex exists for the exchange " +
                    std::to_string(removed) + " -> " + std::to_string(added));
            out.sets.push_back(prev.with_exchanged(removed, repair));
        }
        out.sets.push_back(cur);
    }
    shape.rule = Rule::TS;
    Verdict check = validate_sequence(shape, out);
    if (!check.ok)
        throw InternalConsistencyError("blowup_tj_to_ts: repaired sequence failed TS validation (" +
                                       check.reason + ")");
    return out;
}

ReconfigSequence blowup_project(const BlowupArtifact& art, const ReconfigSequence& gseq) {
    Verdict verdict = validate_sequence(art.instance_under(Rule::TS), gseq);
    if (!verdict.ok)
        throw ValidationError("blowup_project: input is not a valid TS-sequence on G (index " +
                              std::to_string(verdict.index) + ": " + verdict.reason + ")");

    // representatives: the smallest member of each family inside the start set
    std::vector<Vertex> reps;
    for (Vertex v : art.h_source) reps.push_back(art.families[static_cast<size_t>(v)][0]);
    VertexSet current(reps);

    auto project = [&](const VertexSet& s) {
        std::vector<Vertex> members;
        for (Vertex g_vertex : s) members.push_back(art.family_of[static_cast<size_t>(g_vertex)]);
        return VertexSet(std::move(members));
    };

    ReconfigSequence out;
    out.sets.push_back(project(current));
    for (size_t i = 1; i < gseq.sets.size(); ++i) {
        Vertex removed = gseq.sets[i - 1].minus(gseq.sets[i])[0];
        Vertex added = gseq.sets[i].minus(gseq.sets[i - 1])[0];
        if (!current.contains(removed)) continue;  // a non-representative token moved
        current = current.with_exchanged(removed, added);
        if (static_cast<int>(current.size()) != art.h_source.size())
            throw InternalConsistencyError("blowup_project: representative set lost a member");
        VertexSet projected = project(current);
        if (!(projected == out.sets.back())) out.sets.push_back(projected);
    }
    Verdict check = validate_sequence(art.h_instance(), out);
    if (!check.ok)
        throw InternalConsistencyError("blowup_project: projected sequence failed validation (" +
                                       check.reason + ")");
    return out;
}

}  // namespace risr
