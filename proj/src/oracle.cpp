#include <algorithm>
#include <deque>
#include <vector>

#include "mask128.hpp"
#include "risr/reconfig.hpp"

// Ground-truth path, kept independent of the BFS solver: the full move graph
// over all d-regular sets of one cardinality is materialized and the answer
// read off its connectivity.

namespace risr {

std::optional<int> MoveGraph::index_of(const VertexSet& u) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), u);
    if (it == sets.end() || !(*it == u)) return std::nullopt;
    return static_cast<int>(it - sets.begin());
}

MoveGraph build_move_graph(const Graph& g, int d, int k, Rule rule, const Limits& limits) {
    MoveGraph mg;
    mg.sets = enumerate_d_regular_sets(g, d, k, limits);
    mg.adj.assign(mg.sets.size(), {});
    std::vector<mask::Mask128> masks;
    masks.reserve(mg.sets.size());
    for (const VertexSet& s : mg.sets) masks.push_back(mask::of_set(s));
    for (size_t i = 0; i < masks.size(); ++i) {
        for (size_t j = i + 1; j < masks.size(); ++j) {
            mask::Mask128 diff = mask::exclusive(masks[i], masks[j]);
            if (mask::count(diff) != 2) continue;
            if (rule == Rule::TS) {
                mask::Mask128 removed = mask::intersect(masks[i], diff);
                mask::Mask128 added = mask::intersect(masks[j], diff);
                if (!g.has_edge(mask::lowest_bit(removed), mask::lowest_bit(added))) continue;
            }
            mg.adj[i].push_back(static_cast<int>(j));
            mg.adj[j].push_back(static_cast<int>(i));
        }
    }
    return mg;
}

Decision oracle_reachable(const Instance& inst, const MoveGraph& mg) {
    check_instance(inst);
    std::optional<int> start = mg.index_of(inst.source);
    std::optional<int> goal = mg.index_of(inst.target);
    if (!start || !goal)
        throw InvalidInputError("oracle_reachable: move graph does not contain the endpoints");

    std::vector<int> parent(mg.sets.size(), -1);
    parent[static_cast<size_t>(*start)] = *start;
    std::deque<int> q = {*start};
    while (!q.empty() && parent[static_cast<size_t>(*goal)] == -1) {
        int cur = q.front();
        q.pop_front();
        for (int next : mg.adj[static_cast<size_t>(cur)]) {
            if (parent[static_cast<size_t>(next)] != -1) continue;
            parent[static_cast<size_t>(next)] = cur;
            q.push_back(next);
        }
    }
    Decision dec;
    dec.explored = static_cast<long long>(mg.sets.size());
    if (parent[static_cast<size_t>(*goal)] == -1) return dec;
    std::vector<int> chain;
    for (int i = *goal;; i = parent[static_cast<size_t>(i)]) {
        chain.push_back(i);
        if (parent[static_cast<size_t>(i)] == i) break;
    }
    std::reverse(chain.begin(), chain.end());
    ReconfigSequence seq;
    for (int i : chain) seq.sets.push_back(mg.sets[static_cast<size_t>(i)]);
    dec.reachable = true;
    dec.witness = std::move(seq);
    return dec;
}

Decision oracle_reachable(const Instance& inst, const Limits& limits) {
    check_instance(inst);
    if (inst.graph.vertex_count() > limits.oracle_vertex_bound)
        throw ResourceLimitError("oracle_reachable: graph has " +
                                 std::to_string(inst.graph.vertex_count()) +
                                 " vertices, above the bound of " +
                                 std::to_string(limits.oracle_vertex_bound) +
                                 " (raise oracle_vertex_bound to override)");
    MoveGraph mg =
        build_move_graph(inst.graph, inst.d, inst.source.size(), inst.rule, limits);
    return oracle_reachable(inst, mg);
}

}  // namespace risr
