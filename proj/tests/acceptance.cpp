// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and counts are pinned here, not configurable.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "risr/sketch.hpp"
#include "testutil.hpp"

using namespace risr;
namespace tu = risr::testutil;

namespace {

struct Criterion {
    int number;
    std::string title;
    long long checks = 0;
    long long violations = 0;
    std::string first_failure;

    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    void expect(bool ok, const std::string& detail) {
        ++checks;
        if (!ok) {
            ++violations;
            if (first_failure.empty()) first_failure = detail;
        }
    }
};

int failures = 0;

void report(Criterion& c, std::chrono::steady_clock::time_point began) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - began)
                       .count();
    bool pass = c.violations == 0 && c.checks > 0;
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.number << ": " << c.title
              << " (" << c.checks << " checks, " << c.violations << " violations, " << elapsed
              << " ms)";
    if (!pass && !c.first_failure.empty()) std::cout << " first: " << c.first_failure;
    std::cout << "\n"
              << std::flush;
}

// per-graph cardinality choice: the one with the most d-regular sets,
// ties toward the smaller cardinality
int best_cardinality(const Graph& g, int d, const Limits& limits) {
    int best_k = -1;
    size_t best_count = 1;  // need at least two sets to form a pair
    for (int k = 1; k <= g.vertex_count(); ++k) {
        size_t count = enumerate_d_regular_sets(g, d, k, limits).size();
        if (count > best_count) {
            best_count = count;
            best_k = k;
        }
    }
    return best_k;
}

std::vector<Graph> connected_collection() {
    std::vector<Graph> graphs;
    for (int n = 2; n <= 7; ++n) {
        std::vector<Graph> reps = tu::all_graphs_up_to_iso(n, tu::mask_connected, nullptr);
        graphs.insert(graphs.end(), reps.begin(), reps.end());
    }
    return graphs;
}

void criterion_1() {
    Criterion c{1, "Figure 1 fixture: TJ-valid, TS-adjacent only at U_2<->U_3"};
    auto began = std::chrono::steady_clock::now();
    tu::WorkedExample ex;
    ReconfigSequence seq{ex.sets};
    c.expect(validate_sequence(ex.instance(Rule::TJ), seq).ok, "TJ validation failed");
    Verdict ts = validate_sequence(ex.instance(Rule::TS), seq);
    c.expect(!ts.ok && ts.index == 1, "TS validation should break at step 0->1");
    for (int i = 0; i + 1 < 6; ++i) {
        bool adjacent = adjacent_under(ex.graph, 1, Rule::TS, ex.sets[static_cast<size_t>(i)],
                                       ex.sets[static_cast<size_t>(i + 1)]);
        c.expect(adjacent == (i == 2), "TS adjacency wrong at pair " + std::to_string(i));
    }
    Decision solved = solve(ex.instance(Rule::TJ));
    c.expect(solved.reachable && solved.witness && solved.witness->moves() == 5,
             "TJ solve should find a 5-move witness");
    report(c, began);
}

void criterion_2() {
    Criterion c{2, "solve = oracle on all connected graphs with n<=7, up to isomorphism"};
    auto began = std::chrono::steady_clock::now();
    Limits limits;
    std::vector<Graph> graphs = connected_collection();
    for (const Graph& g : graphs) {
        for (int d = 0; d <= 2; ++d) {
            int k = best_cardinality(g, d, limits);
            if (k == -1) continue;
            std::vector<VertexSet> sets = enumerate_d_regular_sets(g, d, k, limits);
            for (Rule rule : {Rule::TJ, Rule::TS}) {
                MoveGraph mg = build_move_graph(g, d, k, rule, limits);
                for (size_t i = 0; i < sets.size(); ++i) {
                    for (size_t j = i; j < sets.size(); ++j) {
                        Instance inst{g, d, rule, sets[i], sets[j], false};
                        bool solver = solve(inst, limits).reachable;
                        bool oracle = oracle_reachable(inst, mg).reachable;
                        if (solver != oracle)
                            c.expect(false, "disagreement on n=" +
                                                std::to_string(g.vertex_count()) + " d=" +
                                                std::to_string(d) + " " + to_string(rule));
                        else
                            c.expect(true, "");
                    }
                }
            }
        }
    }
    report(c, began);
}

void criterion_3() {
    Criterion c{3, "adjacent sets induce isomorphic subgraphs, connectivity preserved"};
    auto began = std::chrono::steady_clock::now();
    std::mt19937 rng(303);
    long long pairs = 0;
    while (pairs < 1000) {
        std::uniform_int_distribution<int> n_dist(5, 9);
        std::uniform_real_distribution<double> p_dist(0.25, 0.6);
        Graph g = tu::random_graph(rng, n_dist(rng), p_dist(rng));
        for (int d = 0; d <= 2; ++d) {
            for (int k = 1; k <= std::min(5, g.vertex_count()); ++k) {
                for (const VertexSet& u : enumerate_d_regular_sets(g, d, k)) {
                    for (Rule rule : {Rule::TJ, Rule::TS}) {
                        for (const VertexSet& v : neighbors(g, d, rule, u)) {
                            c.expect(are_isomorphic(induced_subgraph(g, u), induced_subgraph(g, v)),
                                     "non-isomorphic neighbor at d=" + std::to_string(d));
                            if (is_connected_set(g, u))
                                c.expect(is_connected_set(g, v),
                                         "connectivity lost at d=" + std::to_string(d));
                            ++pairs;
                        }
                    }
                }
            }
        }
    }
    report(c, began);
}

void criterion_4() {
    Criterion c{4, "blow-up soundness on every chordal H with n<=6 (d in {1,2})"};
    auto began = std::chrono::steady_clock::now();
    Limits wide;
    wide.oracle_vertex_bound = 18;
    for (int n = 1; n <= 6; ++n) {
        std::vector<Graph> reps = tu::all_graphs_up_to_iso(
            n, nullptr, [](const Graph& g) { return recognize(g).chordal(); });
        for (const Graph& h : reps) {
            std::vector<std::vector<VertexSet>> by_size(static_cast<size_t>(n) + 1);
            for (int k = 1; k <= n; ++k)
                by_size[static_cast<size_t>(k)] = enumerate_d_regular_sets(h, 0, k);
            for (int d = 1; d <= 2; ++d) {
                for (int k = 1; k <= n; ++k) {
                    const std::vector<VertexSet>& sets = by_size[static_cast<size_t>(k)];
                    if (sets.empty()) continue;
                    MoveGraph mg_h = build_move_graph(h, 0, k, Rule::TS);
                    // the blown-up graph does not depend on the chosen pair
                    BlowupArtifact probe = blowup_reduce(h, sets.front(), sets.front(), d);
                    c.expect(recognize(probe.instance.graph).chordal(),
                             "blow-up lost chordality at n=" + std::to_string(n));
                    MoveGraph mg_tj = build_move_graph(probe.instance.graph, d, (d + 1) * k,
                                                       Rule::TJ, wide);
                    MoveGraph mg_ts = build_move_graph(probe.instance.graph, d, (d + 1) * k,
                                                       Rule::TS, wide);
                    for (const VertexSet& from : sets) {
                        for (const VertexSet& to : sets) {
                            Instance h_inst{h, 0, Rule::TS, from, to, false};
                            BlowupArtifact art = blowup_reduce(h, from, to, d);
                            bool h_answer = oracle_reachable(h_inst, mg_h).reachable;
                            bool tj_answer =
                                oracle_reachable(art.instance_under(Rule::TJ), mg_tj).reachable;
                            bool ts_answer =
                                oracle_reachable(art.instance_under(Rule::TS), mg_ts).reachable;
                            c.expect(h_answer == tj_answer && tj_answer == ts_answer,
                                     "answers split on n=" + std::to_string(n) + " d=" +
                                         std::to_string(d) + " k=" + std::to_string(k));
                        }
                    }
                }
            }
        }
    }
    report(c, began);
}

std::vector<tu::SprCase> spr_collection() {
    std::vector<tu::SprCase> cases;
    tu::SprCase c4;
    c4.graph = build_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    c4.x = 0;
    c4.y = 3;
    c4.path_source = VertexSet{0, 1, 3};
    c4.path_target = VertexSet{0, 2, 3};
    cases.push_back(c4);
    std::mt19937 rng(505);
    std::uniform_int_distribution<int> radius(3, 5);
    while (cases.size() < 56) cases.push_back(tu::random_layered_spr(rng, radius(rng), 3));
    return cases;
}

bool spr_oracle(const LayeredSource& ls) {
    std::vector<VertexSet> paths = enumerate_shortest_path_sets(ls);
    std::vector<int> parent(paths.size(), -1);
    int start = -1, goal = -1;
    for (size_t i = 0; i < paths.size(); ++i) {
        if (paths[i] == ls.path_source) start = static_cast<int>(i);
        if (paths[i] == ls.path_target) goal = static_cast<int>(i);
    }
    parent[static_cast<size_t>(start)] = start;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < paths.size(); ++j) {
            if (parent[j] != -1) continue;
            if (paths[static_cast<size_t>(cur)].minus(paths[j]).size() == 1 &&
                paths[j].minus(paths[static_cast<size_t>(cur)]).size() == 1) {
                parent[j] = cur;
                stack.push_back(static_cast<int>(j));
            }
        }
    }
    return parent[static_cast<size_t>(goal)] != -1;
}

void criterion_5() {
    Criterion c{5, "SPR soundness and the structural claim on >=50 layered instances"};
    auto began = std::chrono::steady_clock::now();
    Limits wide;
    wide.oracle_vertex_bound = 24;
    for (const tu::SprCase& spr : spr_collection()) {
        LayeredSource ls =
            spr_preprocess(spr.graph, spr.x, spr.y, spr.path_source, spr.path_target);
        bool expected = spr_oracle(ls);
        for (int d = 2; d <= 3; ++d) {
            SprArtifact tj = spr_reduce(ls, d, SprMode::TJ_BIPARTITE);
            SprArtifact ts = spr_reduce(ls, d, SprMode::TS_CLIQUE_LAYERS);
            c.expect(recognize(tj.instance.graph).bipartite(), "TJ artifact not bipartite");
            MoveGraph mg_tj = build_move_graph(tj.instance.graph, d, tj.instance.source.size(),
                                               Rule::TJ, wide);
            MoveGraph mg_ts = build_move_graph(ts.instance.graph, d, ts.instance.source.size(),
                                               Rule::TS, wide);
            c.expect(oracle_reachable(tj.instance, mg_tj).reachable == expected,
                     "TJ artifact answer differs from the SPR oracle");
            c.expect(oracle_reachable(ts.instance, mg_ts).reachable == expected,
                     "TS artifact answer differs from the SPR oracle");

            // the claim on every BFS-reachable state of the bipartite artifact
            auto start = mg_tj.index_of(tj.instance.source);
            c.expect(start.has_value(), "start state missing from the move graph");
            if (!start) continue;
            std::vector<char> seen(mg_tj.sets.size(), 0);
            std::vector<int> stack = {*start};
            seen[static_cast<size_t>(*start)] = 1;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                const VertexSet& u = mg_tj.sets[static_cast<size_t>(cur)];
                bool gadgets_in = true;
                for (Vertex v : tj.gadget_union)
                    if (!u.contains(v)) gadgets_in = false;
                bool one_per_layer = true;
                for (const VertexSet& layer : tj.layer_sets) {
                    int hits = 0;
                    for (Vertex v : layer) hits += u.contains(v) ? 1 : 0;
                    if (hits != 1) one_per_layer = false;
                }
                c.expect(gadgets_in && one_per_layer, "claim violated on a reachable state");
                for (int next : mg_tj.adj[static_cast<size_t>(cur)])
                    if (!seen[static_cast<size_t>(next)]) {
                        seen[static_cast<size_t>(next)] = 1;
                        stack.push_back(next);
                    }
            }
        }
    }
    report(c, began);
}

void criterion_6() {
    Criterion c{6, "pendant soundness on every bipartite H with n<=7, with lifts and projections"};
    auto began = std::chrono::steady_clock::now();
    Limits wide;
    wide.oracle_vertex_bound = 14;
    for (int n = 1; n <= 7; ++n) {
        std::vector<Graph> reps = tu::all_graphs_up_to_iso(n, tu::mask_bipartite, nullptr);
        for (const Graph& h : reps) {
            for (int k = 1; k <= n; ++k) {
                std::vector<VertexSet> sets = enumerate_d_regular_sets(h, 0, k);
                if (sets.empty()) continue;
                MoveGraph mg_h = build_move_graph(h, 0, k, Rule::TS);
                PendantArtifact probe = pendant_reduce(h, sets.front(), sets.front());
                MoveGraph mg_g =
                    build_move_graph(probe.instance.graph, 1, 2 * k, Rule::TJ, wide);
                for (const VertexSet& from : sets) {
                    for (const VertexSet& to : sets) {
                        PendantArtifact art = pendant_reduce(h, from, to);
                        Decision h_dec = oracle_reachable(art.h_instance(), mg_h);
                        Decision g_dec = oracle_reachable(art.instance, mg_g);
                        c.expect(h_dec.reachable == g_dec.reachable,
                                 "answers differ at n=" + std::to_string(n) + " k=" +
                                     std::to_string(k));
                        if (h_dec.reachable && g_dec.reachable) {
                            ReconfigSequence lifted = pendant_lift(art, *h_dec.witness);
                            c.expect(lifted.moves() == 2 * h_dec.witness->moves(),
                                     "lift is not exactly 2l moves");
                            c.expect(validate_sequence(art.instance, lifted).ok,
                                     "lifted sequence failed validation");
                            ReconfigSequence recovered = pendant_project(art, *g_dec.witness);
                            c.expect(validate_sequence(art.h_instance(), recovered).ok,
                                     "projected sequence failed validation");
                        }
                    }
                }
            }
        }
    }
    report(c, began);
}

void criterion_7() {
    Criterion c{7, "lift/project round trips; repaired TJ-sequences validate under TS"};
    auto began = std::chrono::steady_clock::now();
    Limits wide;
    wide.oracle_vertex_bound = 24;
    std::mt19937 rng(707);
    int blowup_cases = 0;
    while (blowup_cases < 30) {
        Graph h = tu::random_graph(rng, 5, 0.45);
        if (!recognize(h).chordal()) continue;
        std::vector<VertexSet> sets = enumerate_d_regular_sets(h, 0, 2);
        if (sets.size() < 2) continue;
        Instance h_inst{h, 0, Rule::TS, sets.front(), sets.back(), false};
        Decision h_dec = oracle_reachable(h_inst);
        if (!h_dec.reachable) continue;
        for (int d = 1; d <= 2; ++d) {
            BlowupArtifact art = blowup_reduce(h, sets.front(), sets.back(), d);
            ReconfigSequence lifted = blowup_lift(art, *h_dec.witness);
            c.expect(lifted.moves() == (d + 1) * h_dec.witness->moves(),
                     "blowup lift length is not (d+1)l");
            ReconfigSequence recovered = blowup_project(art, lifted);
            c.expect(recovered == *h_dec.witness, "blowup project(lift) differs from the input");
            Decision tj = oracle_reachable(art.instance_under(Rule::TJ), wide);
            if (tj.witness) {
                ReconfigSequence repaired = blowup_tj_to_ts(art, *tj.witness);
                c.expect(validate_sequence(art.instance_under(Rule::TS), repaired).ok,
                         "repaired sequence failed TS validation");
            }
            ++blowup_cases;
        }
    }
    std::uniform_int_distribution<int> radius(3, 5);
    for (int i = 0; i < 20; ++i) {
        tu::SprCase spr = tu::random_layered_spr(rng, radius(rng), 3);
        LayeredSource ls =
            spr_preprocess(spr.graph, spr.x, spr.y, spr.path_source, spr.path_target);
        for (int d = 2; d <= 3; ++d) {
            for (SprMode mode : {SprMode::TJ_BIPARTITE, SprMode::TS_CLIQUE_LAYERS}) {
                SprArtifact art = spr_reduce(ls, d, mode);
                Decision dec = oracle_reachable(art.instance, wide);
                if (!dec.witness) continue;
                std::vector<VertexSet> paths = spr_project(art, *dec.witness);
                ReconfigSequence relifted = spr_lift(art, paths);
                c.expect(relifted == *dec.witness, "spr lift(project) differs from the witness");
            }
        }
    }
    report(c, began);
}

void criterion_8() {
    Criterion c{8, "lifted ordering width bounds (random sketches and reduction sketches)"};
    auto began = std::chrono::steady_clock::now();
    std::mt19937 rng(808);
    for (int trial = 0; trial < 110; ++trial) {
        std::uniform_int_distribution<int> small_n(2, 6), t_dist(1, 4);
        Graph small = tu::random_connected_graph(rng, small_n(rng), 0.5);
        int t = t_dist(rng);
        std::vector<Vertex> map;
        std::uniform_int_distribution<int> fiber(1, t);
        for (Vertex v = 0; v < small.vertex_count(); ++v)
            for (int count = fiber(rng); count > 0; --count) map.push_back(v);
        std::bernoulli_distribution coin(0.5);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (size_t i = 0; i < map.size(); ++i)
            for (size_t j = i + 1; j < map.size(); ++j)
                if ((map[i] == map[j] || small.has_edge(map[i], map[j])) && coin(rng))
                    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        SketchMapping sketch;
        sketch.big = build_graph(static_cast<int>(map.size()), edges);
        sketch.small = small;
        sketch.map = map;
        sketch.t = t;
        auto [b, pi] = exact_bandwidth(small);
        Ordering lifted = lift_ordering(sketch, pi);
        c.expect(ordering_width(sketch.big, lifted) <= t * (b + 1),
                 "random sketch broke the t(b+1) bound");
    }

    // the blow-up sketch of every criterion-4 source (one per graph and d;
    // the sketch does not depend on the chosen set pair)
    for (int n = 1; n <= 6; ++n) {
        std::vector<Graph> reps = tu::all_graphs_up_to_iso(
            n, nullptr, [](const Graph& g) { return recognize(g).chordal(); });
        for (const Graph& h : reps) {
            std::vector<VertexSet> sets = enumerate_d_regular_sets(h, 0, 1);
            if (sets.empty()) continue;
            for (int d = 1; d <= 2; ++d) {
                BlowupArtifact art = blowup_reduce(h, sets.front(), sets.front(), d);
                SketchMapping sketch = sketch_of_reduction(art);
                c.expect(sketch.t == d + 1, "blow-up sketch multiplicity is not d+1");
                auto [b0, pi] = exact_bandwidth(h);
                Ordering lifted = lift_ordering(sketch, pi);
                c.expect(ordering_width(art.instance.graph, lifted) <= (d + 1) * (b0 + 1),
                         "blow-up ordering broke (d+1)(b0+1)");
            }
        }
    }

    // the cycle sketch of every criterion-5 clique-layer artifact
    for (const tu::SprCase& spr : spr_collection()) {
        LayeredSource ls =
            spr_preprocess(spr.graph, spr.x, spr.y, spr.path_source, spr.path_target);
        int b = 0;
        for (const VertexSet& layer : ls.layers) b = std::max(b, layer.size());
        for (int d = 2; d <= 3; ++d) {
            SprArtifact art = spr_reduce(ls, d, SprMode::TS_CLIQUE_LAYERS);
            SketchMapping sketch = sketch_of_reduction(art);
            c.expect(sketch.t <= 2 * d * b + 2 * (d - 2),
                     "cycle sketch multiplicity broke 2db+2(d-2)");
            auto [cb, pi] = exact_bandwidth(sketch.small);
            Ordering lifted = lift_ordering(sketch, pi);
            c.expect(ordering_width(art.instance.graph, lifted) <= 2 * (2 * d * b + 2 * (d - 2)),
                     "clique-layer ordering broke 2(2db+2(d-2))");
        }
    }
    report(c, began);
}

void criterion_9() {
    Criterion c{9, "triangle-free graphs admit no TS-move for d in {1,2}"};
    auto began = std::chrono::steady_clock::now();
    std::mt19937 rng(909);
    int graphs = 0;
    while (graphs < 100) {
        std::uniform_int_distribution<int> n_dist(5, 11);
        Graph g = graphs % 2 == 0 ? tu::random_bipartite_graph(rng, n_dist(rng), 0.4)
                                  : tu::random_triangle_free_graph(rng, n_dist(rng), 0.25);
        if (has_triangle(g)) continue;
        ++graphs;
        for (int d = 1; d <= 2; ++d) {
            std::vector<VertexSet> all;
            for (int k = 1; k <= g.vertex_count(); ++k)
                for (const VertexSet& u : enumerate_d_regular_sets(g, d, k)) all.push_back(u);
            for (const VertexSet& u : all)
                c.expect(neighbors(g, d, Rule::TS, u).empty(),
                         "a TS-move exists in a triangle-free graph");
            // fast path agrees with the oracle on sampled pairs
            if (all.size() >= 2) {
                std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
                for (int s = 0; s < 5; ++s) {
                    VertexSet from = all[pick(rng)];
                    VertexSet to = all[pick(rng)];
                    if (from.size() != to.size()) continue;
                    Instance inst{g, d, Rule::TS, from, to, false};
                    auto shortcut = fast_path(inst);
                    c.expect(shortcut.has_value(), "fast path did not engage");
                    if (shortcut)
                        c.expect(shortcut->reachable == oracle_reachable(inst).reachable,
                                 "fast path disagrees with the oracle");
                }
            }
        }
    }
    report(c, began);
}

void criterion_10() {
    Criterion c{10, "exact bandwidth of paths is 1 and of cycles is 2 (n<=9)"};
    auto began = std::chrono::steady_clock::now();
    for (int n = 2; n <= 9; ++n)
        c.expect(exact_bandwidth(tu::path_graph(n)).first == 1,
                 "path bandwidth wrong at n=" + std::to_string(n));
    for (int n = 3; n <= 9; ++n)
        c.expect(exact_bandwidth(tu::cycle_graph(n)).first == 2,
                 "cycle bandwidth wrong at n=" + std::to_string(n));
    report(c, began);
}

void criterion_11() {
    Criterion c{11, "every blow-up satisfies |U^s| = (d+1)|I|"};
    auto began = std::chrono::steady_clock::now();
    std::mt19937 rng(1111);
    int artifacts = 0;
    while (artifacts < 200) {
        std::uniform_int_distribution<int> n_dist(2, 6);
        Graph h = tu::random_graph(rng, n_dist(rng), 0.4);
        std::vector<VertexSet> sets = tu::all_independent_sets(h);
        if (sets.empty()) continue;
        std::uniform_int_distribution<size_t> pick(0, sets.size() - 1);
        VertexSet from = sets[pick(rng)];
        if (from.empty()) continue;
        VertexSet to;
        for (const VertexSet& s : sets)
            if (s.size() == from.size()) to = s;
        std::uniform_int_distribution<int> d_dist(1, 3);
        int d = d_dist(rng);
        BlowupArtifact art = blowup_reduce(h, from, to, d);
        c.expect(art.instance.source.size() == (d + 1) * from.size(),
                 "|U^s| != (d+1)|I| at d=" + std::to_string(d));
        c.expect(art.instance.target.size() == (d + 1) * to.size(),
                 "|U^t| != (d+1)|I'| at d=" + std::to_string(d));
        ++artifacts;
    }
    report(c, began);
}

}  // namespace

int main() {
    auto began = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    auto total = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - began)
                     .count();
    std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILURES")
              << " (" << total << " s total)\n";
    return failures == 0 ? 0 : 1;
}
