#pragma once

#include <optional>
#include <string>
#include <vector>

#include "risr/graph.hpp"

namespace risr {

enum class Rule { TJ, TS };

std::string to_string(Rule rule);
Rule rule_from_string(const std::string& text);

// Explicit budgets. Exceeding one raises ResourceLimitError, which is an
// "undecided" outcome, never a "no".
struct Limits {
    long long max_states = 1'000'000;      // BFS visited-state budget
    long long max_enumerated = 1'000'000;  // d-regular set enumeration budget
    int oracle_vertex_bound = 16;          // oracle / enumeration vertex bound
    int bandwidth_vertex_bound = 10;
};

// One RISR/CRISR question.
struct Instance {
    Graph graph;
    int d = 0;
    Rule rule = Rule::TJ;
    VertexSet source;
    VertexSet target;
    bool connected_variant = false;
};

// Throws InvalidInputError naming the violated invariant.
void check_instance(const Instance& inst);

// An ordered list of vertex sets claimed to be a reconfiguration sequence.
// Never trusted; validate_sequence is the arbiter.
struct ReconfigSequence {
    std::vector<VertexSet> sets;

    int moves() const { return static_cast<int>(sets.size()) - 1; }
    bool operator==(const ReconfigSequence& other) const = default;
};

struct Verdict {
    bool ok = false;
    int index = -1;      // first violating set index; steps blame the later set
    std::string reason;  // empty when ok
    // Informational, filled for connected-variant instances: whether every
    // set in the sequence is connected. Expected true by the theory.
    std::optional<bool> all_connected;
};

struct Decision {
    bool reachable = false;
    std::optional<ReconfigSequence> witness;
    long long explored = 0;  // visited / enumerated state count
};

// U <-> U2 under the rule. TJ: exactly one vertex exchanged. TS: additionally
// the exchanged vertices are adjacent. Both sets must be d-regular.
bool adjacent_under(const Graph& g, int d, Rule rule, const VertexSet& u, const VertexSet& u2);

// All sets adjacent to U under the rule, generated by trying each
// (remove u, add v) pair in lexicographic (u, v) order.
std::vector<VertexSet> neighbors(const Graph& g, int d, Rule rule, const VertexSet& u);

// Checks a claimed sequence: starts at source, ends at target, every set
// d-regular, every step a legal move. All failures are verdicts, not errors.
Verdict validate_sequence(const Instance& inst, const ReconfigSequence& seq);

// All d-regular sets of cardinality exactly k, in lexicographic order, by
// pruned subset search.
std::vector<VertexSet> enumerate_d_regular_sets(const Graph& g, int d, int k,
                                                const Limits& limits = {});

// The full move graph over all d-regular sets of one cardinality.
struct MoveGraph {
    std::vector<VertexSet> sets;        // lexicographic order
    std::vector<std::vector<int>> adj;  // adjacency between set indices
    std::optional<int> index_of(const VertexSet& u) const;
};

MoveGraph build_move_graph(const Graph& g, int d, int k, Rule rule, const Limits& limits = {});

// Ground-truth oracle: enumerates every d-regular set of the source's
// cardinality, builds the full move graph by pairwise adjacency tests, and
// answers by connectivity. Independent of solve.
Decision oracle_reachable(const Instance& inst, const Limits& limits = {});
Decision oracle_reachable(const Instance& inst, const MoveGraph& mg);

// Polynomial shortcuts. Returns a decision only when one applies:
//   (a) TS with d >= 1 on a triangle-free graph: no nontrivial TS-sequence;
//   (b) connected variant, d = 0: single token;
//   (c) connected variant, d = 1: single edge.
std::optional<Decision> fast_path(const Instance& inst);

// Exact decision by breadth-first search from the source over d-regular
// sets; witnesses are shortest and deterministic. Dispatches to fast_path
// first when one applies.
Decision solve(const Instance& inst, const Limits& limits = {});

}  // namespace risr
