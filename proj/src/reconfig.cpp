#include "risr/reconfig.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

#include "mask128.hpp"

namespace risr {

std::string to_string(Rule rule) { return rule == Rule::TJ ? "TJ" : "TS"; }

Rule rule_from_string(const std::string& text) {
    if (text == "TJ") return Rule::TJ;
    if (text == "TS") return Rule::TS;
    throw InvalidInputError("rule must be \"TJ\" or \"TS\", got \"" + text + "\"");
}

void check_instance(const Instance& inst) {
    if (inst.d < 0) throw InvalidInputError("instance: d must be nonnegative");
    detail::check_vertex_range(inst.graph, inst.source, "instance source");
    detail::check_vertex_range(inst.graph, inst.target, "instance target");
    if (!is_d_regular_set(inst.graph, inst.source, inst.d))
        throw InvalidInputError("instance: source is not d-regular");
    if (!is_d_regular_set(inst.graph, inst.target, inst.d))
        throw InvalidInputError("instance: target is not d-regular");
    if (inst.source.size() != inst.target.size())
        throw InvalidInputError("instance: source and target cardinalities differ");
    if (inst.connected_variant) {
        if (!is_connected_set(inst.graph, inst.source))
            throw InvalidInputError("instance: connected variant requires a connected nonempty source");
        if (!is_connected_set(inst.graph, inst.target))
            throw InvalidInputError("instance: connected variant requires a connected nonempty target");
    }
}

bool adjacent_under(const Graph& g, int d, Rule rule, const VertexSet& u, const VertexSet& u2) {
    if (!is_d_regular_set(g, u, d) || !is_d_regular_set(g, u2, d))
        throw InvalidInputError("adjacent_under: both sets must be d-regular");
    std::vector<Vertex> removed = u.minus(u2);
    std::vector<Vertex> added = u2.minus(u);
    if (removed.size() != 1 || added.size() != 1) return false;
    if (rule == Rule::TS && !g.has_edge(removed[0], added[0])) return false;
    return true;
}

std::vector<VertexSet> neighbors(const Graph& g, int d, Rule rule, const VertexSet& u) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    if (n <= 128) {
        mask::Mask128 m = mask::of_set(u);
        mask::Mask128 full = mask::full_mask(n);
        mask::for_each_move(g, d, rule, m, full,
                            [&](const mask::Mask128& next) { out.push_back(mask::to_set(next)); });
        return out;
    }
    for (Vertex removed : u) {
        if (rule == Rule::TS) {
            for (Vertex added : g.neighbors_of(removed)) {
                if (u.contains(added)) continue;
                VertexSet next = u.with_exchanged(removed, added);
                if (is_d_regular_set(g, next, d)) out.push_back(next);
            }
        } else {
            for (Vertex added = 0; added < n; ++added) {
                if (u.contains(added)) continue;
                VertexSet next = u.with_exchanged(removed, added);
                if (is_d_regular_set(g, next, d)) out.push_back(next);
            }
        }
    }
    return out;
}

Verdict validate_sequence(const Instance& inst, const ReconfigSequence& seq) {
    Verdict verdict;
    if (seq.sets.empty()) {
        verdict.index = 0;
        verdict.reason = "sequence is empty";
        return verdict;
    }
    for (size_t i = 0; i < seq.sets.size(); ++i) {
        for (Vertex v : seq.sets[i]) {
            if (v < 0 || v >= inst.graph.vertex_count()) {
                verdict.index = static_cast<int>(i);
                verdict.reason = "set contains out-of-range vertex " + std::to_string(v);
                return verdict;
            }
        }
    }
    if (inst.connected_variant) {
        bool all = true;
        for (const VertexSet& s : seq.sets)
            if (!is_connected_set(inst.graph, s)) all = false;
        verdict.all_connected = all;
    }
    if (!(seq.sets.front() == inst.source)) {
        verdict.index = 0;
        verdict.reason = "sequence does not start at the source set";
        return verdict;
    }
    for (size_t i = 0; i < seq.sets.size(); ++i) {
        const VertexSet& cur = seq.sets[i];
        if (!is_d_regular_set(inst.graph, cur, inst.d)) {
            verdict.index = static_cast<int>(i);
            verdict.reason = "set is not " + std::to_string(inst.d) + "-regular";
            return verdict;
        }
        if (i == 0) continue;
        const VertexSet& prev = seq.sets[i - 1];
        std::string step = "step " + std::to_string(i - 1) + "->" + std::to_string(i) + ": ";
        if (cur.size() != prev.size()) {
            verdict.index = static_cast<int>(i);
            verdict.reason = step + "cardinality changes";
            return verdict;
        }
        std::vector<Vertex> removed = prev.minus(cur);
        std::vector<Vertex> added = cur.minus(prev);
        if (removed.size() != 1 || added.size() != 1) {
            verdict.index = static_cast<int>(i);
            verdict.reason = step + "not a single-vertex exchange";
            return verdict;
        }
        if (inst.rule == Rule::TS && !inst.graph.has_edge(removed[0], added[0])) {
            verdict.index = static_cast<int>(i);
            verdict.reason = step + "exchanged vertices " + std::to_string(removed[0]) + " and " +
                             std::to_string(added[0]) + " are not adjacent";
            return verdict;
        }
    }
    if (!(seq.sets.back() == inst.target)) {
        verdict.index = static_cast<int>(seq.sets.size()) - 1;
        verdict.reason = "sequence does not end at the target set";
        return verdict;
    }
    verdict.ok = true;
    verdict.index = -1;
    return verdict;
}

std::vector<VertexSet> enumerate_d_regular_sets(const Graph& g, int d, int k,
                                                const Limits& limits) {
    if (d < 0) throw InvalidInputError("enumerate_d_regular_sets: d must be nonnegative");
    if (k < 0) throw InvalidInputError("enumerate_d_regular_sets: cardinality must be nonnegative");
    int n = g.vertex_count();
    if (n > limits.oracle_vertex_bound)
        throw ResourceLimitError("enumerate_d_regular_sets: graph has " + std::to_string(n) +
                                 " vertices, above the bound of " +
                                 std::to_string(limits.oracle_vertex_bound) +
                                 " (raise oracle_vertex_bound to override)");
    if (n > 128)
        throw ResourceLimitError("enumerate_d_regular_sets: graphs beyond 128 vertices are unsupported");
    std::vector<VertexSet> out;
    if (k > n) return out;
    if (k == 0) {
        out.push_back(VertexSet{});
        return out;
    }

    std::vector<mask::Mask128> rows(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) rows[static_cast<size_t>(v)] = mask::row_of(g, v);
    std::vector<int> chosen;
    std::vector<int> degree_in(static_cast<size_t>(n), 0);
    mask::Mask128 chosen_mask;
    long long emitted = 0;

    // Vertices are scanned in ascending order, so emission is lexicographic.
    auto dfs = [&](auto&& self, int from) -> void {
        int need = k - static_cast<int>(chosen.size());
        for (int v = from; v < n; ++v) {
            if (n - v < need) break;
            int own = mask::count(mask::intersect(rows[static_cast<size_t>(v)], chosen_mask));
            if (own > d) continue;
            bool fits = true;
            for (int u : chosen)
                if (mask::test_bit(rows[static_cast<size_t>(v)], u) &&
                    degree_in[static_cast<size_t>(u)] + 1 > d) {
                    fits = false;
                    break;
                }
            if (!fits) continue;

            chosen.push_back(v);
            mask::set_bit(chosen_mask, v);
            degree_in[static_cast<size_t>(v)] = own;
            for (int u : chosen)
                if (u != v && mask::test_bit(rows[static_cast<size_t>(v)], u))
                    ++degree_in[static_cast<size_t>(u)];

            // every chosen vertex must still be able to reach internal degree d
            mask::Mask128 future = mask::full_mask(n);
            for (int i = 0; i <= v; ++i) mask::reset_bit(future, i);
            bool feasible = true;
            for (int u : chosen) {
                int potential = degree_in[static_cast<size_t>(u)] +
                                mask::count(mask::intersect(rows[static_cast<size_t>(u)], future));
                if (potential < d) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                if (static_cast<int>(chosen.size()) == k) {
                    bool regular = true;
                    for (int u : chosen)
                        if (degree_in[static_cast<size_t>(u)] != d) {
                            regular = false;
                            break;
                        }
                    if (regular) {
                        if (++emitted > limits.max_enumerated)
                            throw ResourceLimitError(
                                "enumerate_d_regular_sets: enumeration budget of " +
                                std::to_string(limits.max_enumerated) + " sets exceeded");
                        out.push_back(VertexSet(chosen));
                    }
                } else {
                    self(self, v + 1);
                }
            }

            for (int u : chosen)
                if (u != v && mask::test_bit(rows[static_cast<size_t>(v)], u))
                    --degree_in[static_cast<size_t>(u)];
            degree_in[static_cast<size_t>(v)] = 0;
            mask::reset_bit(chosen_mask, v);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

namespace {

ReconfigSequence singleton_sequence(const std::vector<Vertex>& path) {
    ReconfigSequence seq;
    for (Vertex v : path) seq.sets.push_back(VertexSet{v});
    return seq;
}

// BFS over single-token states (connected variant, d = 0, TS).
Decision single_token_slide(const Graph& g, Vertex s, Vertex t) {
    Decision dec;
    std::vector<Vertex> parent(static_cast<size_t>(g.vertex_count()), -1);
    parent[static_cast<size_t>(s)] = s;
    std::queue<Vertex> q;
    q.push(s);
    long long visited = 1;
    while (!q.empty() && parent[static_cast<size_t>(t)] == -1) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors_of(v)) {
            if (parent[static_cast<size_t>(w)] != -1) continue;
            parent[static_cast<size_t>(w)] = v;
            ++visited;
            q.push(w);
        }
    }
    dec.explored = visited;
    if (parent[static_cast<size_t>(t)] == -1) return dec;
    std::vector<Vertex> path;
    for (Vertex v = t;; v = parent[static_cast<size_t>(v)]) {
        path.push_back(v);
        if (v == parent[static_cast<size_t>(v)]) break;
    }
    std::reverse(path.begin(), path.end());
    dec.reachable = true;
    dec.witness = singleton_sequence(path);
    return dec;
}

// BFS over single-edge states (connected variant, d = 1). Under TJ the moved
// token may land anywhere next to the kept endpoint; under TS the exchanged
// endpoints must additionally be adjacent, i.e. the two edges span a triangle.
Decision single_edge_moves(const Graph& g, Rule rule, const VertexSet& source,
                           const VertexSet& target) {
    using Edge = std::pair<Vertex, Vertex>;
    auto norm = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };
    Edge start = norm(source[0], source[1]);
    Edge goal = norm(target[0], target[1]);
    std::map<Edge, Edge> parent;
    parent[start] = start;
    std::deque<Edge> q = {start};
    bool found = start == goal;
    while (!q.empty() && !found) {
        Edge cur = q.front();
        q.pop_front();
        for (Vertex removed : {cur.first, cur.second}) {
            Vertex kept = removed == cur.first ? cur.second : cur.first;
            for (Vertex added : g.neighbors_of(kept)) {
                if (added == removed) continue;
                if (rule == Rule::TS && !g.has_edge(removed, added)) continue;
                Edge next = norm(kept, added);
                if (parent.contains(next)) continue;
                parent[next] = cur;
                q.push_back(next);
                if (next == goal) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    Decision dec;
    dec.explored = static_cast<long long>(parent.size());
    if (!found) return dec;
    std::vector<Edge> path;
    for (Edge e = goal;; e = parent[e]) {
        path.push_back(e);
        if (parent[e] == e) break;
    }
    std::reverse(path.begin(), path.end());
    ReconfigSequence seq;
    for (Edge e : path) seq.sets.push_back(VertexSet{e.first, e.second});
    dec.reachable = true;
    dec.witness = std::move(seq);
    return dec;
}

}  // namespace

std::optional<Decision> fast_path(const Instance& inst) {
    check_instance(inst);
    // triangle-free graphs admit no nontrivial TS-move for d >= 1
    if (inst.rule == Rule::TS && inst.d >= 1 && !has_triangle(inst.graph)) {
        Decision dec;
        dec.explored = 1;
        if (inst.source == inst.target) {
            dec.reachable = true;
            dec.witness = ReconfigSequence{{inst.source}};
        }
        return dec;
    }
    if (!inst.connected_variant) return std::nullopt;
    if (inst.d == 0) {
        Vertex s = inst.source[0];
        Vertex t = inst.target[0];
        if (inst.rule == Rule::TJ) {
            Decision dec;
            dec.reachable = true;
            dec.witness = s == t ? ReconfigSequence{{inst.source}}
                                 : ReconfigSequence{{inst.source, inst.target}};
            dec.explored = s == t ? 1 : 2;
            return dec;
        }
        return single_token_slide(inst.graph, s, t);
    }
    if (inst.d == 1) return single_edge_moves(inst.graph, inst.rule, inst.source, inst.target);
    return std::nullopt;
}

namespace {

Decision solve_masked(const Instance& inst, const Limits& limits) {
    const Graph& g = inst.graph;
    mask::Mask128 start = mask::of_set(inst.source);
    mask::Mask128 goal = mask::of_set(inst.target);
    mask::Mask128 full = mask::full_mask(g.vertex_count());

    std::unordered_map<mask::Mask128, mask::Mask128, mask::Mask128Hash> parent;
    parent.emplace(start, start);
    std::deque<mask::Mask128> q = {start};
    bool found = start == goal;
    while (!q.empty() && !found) {
        mask::Mask128 cur = q.front();
        q.pop_front();
        mask::for_each_move(g, inst.d, inst.rule, cur, full, [&](const mask::Mask128& next) {
            if (found || parent.contains(next)) return;
            if (static_cast<long long>(parent.size()) >= limits.max_states)
                throw ResourceLimitError("solve: state budget of " +
                                         std::to_string(limits.max_states) + " exceeded");
            parent.emplace(next, cur);
            q.push_back(next);
            if (next == goal) found = true;
        });
    }
    Decision dec;
    dec.explored = static_cast<long long>(parent.size());
    if (!found) return dec;
    std::vector<mask::Mask128> chain;
    for (mask::Mask128 m = goal;; m = parent.at(m)) {
        chain.push_back(m);
        if (parent.at(m) == m) break;
    }
    std::reverse(chain.begin(), chain.end());
    ReconfigSequence seq;
    for (const auto& m : chain) seq.sets.push_back(mask::to_set(m));
    dec.reachable = true;
    dec.witness = std::move(seq);
    return dec;
}

Decision solve_generic(const Instance& inst, const Limits& limits) {
    std::map<VertexSet, VertexSet> parent;
    parent.emplace(inst.source, inst.source);
    std::deque<VertexSet> q = {inst.source};
    bool found = inst.source == inst.target;
    while (!q.empty() && !found) {
        VertexSet cur = q.front();
        q.pop_front();
        for (const VertexSet& next : neighbors(inst.graph, inst.d, inst.rule, cur)) {
            if (parent.contains(next)) continue;
            if (static_cast<long long>(parent.size()) >= limits.max_states)
                throw ResourceLimitError("solve: state budget of " +
                                         std::to_string(limits.max_states) + " exceeded");
            parent.emplace(next, cur);
            q.push_back(next);
            if (next == inst.target) {
                found = true;
                break;
            }
        }
    }
    Decision dec;
    dec.explored = static_cast<long long>(parent.size());
    if (!found) return dec;
    std::vector<VertexSet> chain;
    for (VertexSet s = inst.target;; s = parent.at(s)) {
        chain.push_back(s);
        if (parent.at(s) == s) break;
    }
    std::reverse(chain.begin(), chain.end());
    dec.reachable = true;
    dec.witness = ReconfigSequence{std::move(chain)};
    return dec;
}

}  // namespace

Decision solve(const Instance& inst, const Limits& limits) {
    check_instance(inst);
    if (std::optional<Decision> shortcut = fast_path(inst)) return *shortcut;
    if (inst.graph.vertex_count() <= 128) return solve_masked(inst, limits);
    return solve_generic(inst, limits);
}

}  // namespace risr
