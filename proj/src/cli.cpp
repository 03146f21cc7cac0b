#include "risr/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risr/io.hpp"
#include "risr/sketch.hpp"

namespace risr {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

Limits limits_from_env() {
    Limits limits;
    if (const char* env = std::getenv("RISR_MAX_STATES")) {
        char* end = nullptr;
        long long value = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && value > 0) limits.max_states = value;
    }
    return limits;
}

void print_sequence(std::ostream& out, const ReconfigSequence& seq) {
    for (const VertexSet& s : seq.sets) out << "  " << s.to_string() << "\n";
}

void emit_sequence(std::ostream& out, const std::string& out_path, const ReconfigSequence& seq) {
    if (out_path.empty()) {
        out << serialize_sequence(seq);
    } else {
        write_file_atomic(out_path, serialize_sequence(seq));
        out << "wrote: " << out_path << "\n";
    }
}

int do_solve(std::ostream& out, const std::string& file, const Limits& limits) {
    Instance inst = parse_instance(read_file(file));
    Decision dec = solve(inst, limits);
    out << "reachable: " << (dec.reachable ? "yes" : "no") << "\n";
    out << "explored: " << dec.explored << "\n";
    if (dec.witness) {
        out << "moves: " << dec.witness->moves() << "\n";
        out << "witness:\n";
        print_sequence(out, *dec.witness);
    }
    return dec.reachable ? kExitYes : kExitNo;
}

int do_oracle(std::ostream& out, const std::string& file, const Limits& limits) {
    Instance inst = parse_instance(read_file(file));
    Decision dec = oracle_reachable(inst, limits);
    out << "reachable: " << (dec.reachable ? "yes" : "no") << "\n";
    out << "states: " << dec.explored << "\n";
    if (dec.witness) {
        out << "moves: " << dec.witness->moves() << "\n";
        out << "witness:\n";
        print_sequence(out, *dec.witness);
    }
    return dec.reachable ? kExitYes : kExitNo;
}

int do_validate(std::ostream& out, const std::string& file, const std::string& seq_file) {
    Instance inst = parse_instance(read_file(file));
    ReconfigSequence seq = parse_sequence(read_file(seq_file));
    Verdict verdict = validate_sequence(inst, seq);
    out << "valid: " << (verdict.ok ? "yes" : "no") << "\n";
    if (!verdict.ok) {
        out << "index: " << verdict.index << "\n";
        out << "reason: " << verdict.reason << "\n";
    }
    if (verdict.all_connected)
        out << "all-connected: " << (*verdict.all_connected ? "yes" : "no") << "\n";
    return verdict.ok ? kExitYes : kExitNo;
}

int do_enumerate(std::ostream& out, const std::string& file, int k, const Limits& limits) {
    Instance inst = parse_instance(read_file(file));
    std::vector<VertexSet> sets = enumerate_d_regular_sets(inst.graph, inst.d, k, limits);
    out << "count: " << sets.size() << "\n";
    for (const VertexSet& s : sets) out << s.to_string() << "\n";
    return kExitYes;
}

int do_recognize(std::ostream& out, const std::string& file) {
    Instance inst = parse_instance(read_file(file));
    ClassReport report = recognize(inst.graph);
    out << "bipartite: " << (report.bipartite() ? "yes" : "no") << "\n";
    if (report.bipartite()) {
        out << "side-a: " << report.bipartition->first.to_string() << "\n";
        out << "side-b: " << report.bipartition->second.to_string() << "\n";
    }
    out << "triangle-free: " << (report.triangle_free ? "yes" : "no") << "\n";
    out << "chordal: " << (report.chordal() ? "yes" : "no") << "\n";
    if (report.chordal()) {
        out << "elimination-ordering:";
        for (Vertex v : *report.elimination_ordering) out << " " << v;
        out << "\n";
    }
    out << "split: " << (report.split ? "yes" : "no") << "\n";
    return kExitYes;
}

int do_reduce(std::ostream& out, const std::string& kind, const std::string& file, int d,
              const std::string& rule_name, std::string out_prefix) {
    if (out_prefix.empty()) {
        out_prefix = file;
        std::string::size_type dot = out_prefix.find_last_of('.');
        if (dot != std::string::npos && out_prefix.find('/', dot) == std::string::npos)
            out_prefix.resize(dot);
        out_prefix += "-" + kind;
    }
    ReductionArtifact art = [&]() -> ReductionArtifact {
        if (kind == "blowup") {
            Instance src = parse_instance(read_file(file));
            if (src.d != 0 || src.rule != Rule::TS)
                throw InvalidInputError(
                    "reduce blowup: input must be an independent-set instance under TS (d=0)");
            BlowupArtifact blowup = blowup_reduce(src.graph, src.source, src.target, d);
            if (!rule_name.empty()) blowup.instance.rule = rule_from_string(rule_name);
            return blowup;
        }
        if (kind == "pendant") {
            Instance src = parse_instance(read_file(file));
            if (src.d != 0 || src.rule != Rule::TS)
                throw InvalidInputError(
                    "reduce pendant: input must be an independent-set instance under TS (d=0)");
            return pendant_reduce(src.graph, src.source, src.target);
        }
        SprProblem problem = parse_spr_problem(read_file(file));
        LayeredSource ls = spr_preprocess(problem.graph, problem.x, problem.y,
                                          problem.path_source, problem.path_target);
        return spr_reduce(ls, d,
                          kind == "spr" ? SprMode::TJ_BIPARTITE : SprMode::TS_CLIQUE_LAYERS);
    }();

    const Instance& inst = std::visit([](const auto& a) -> const Instance& { return a.instance; }, art);
    write_file_atomic(out_prefix + ".inst", serialize_instance(inst));
    write_file_atomic(out_prefix + ".map", serialize_map(art));
    out << "wrote: " << out_prefix << ".inst\n";
    out << "wrote: " << out_prefix << ".map\n";
    out << "vertices: " << inst.graph.vertex_count() << "\n";
    out << "source-size: " << inst.source.size() << "\n";
    return kExitYes;
}

int do_lift(std::ostream& out, const std::string& map_file, const std::string& seq_file,
            const std::string& out_path) {
    ReductionArtifact art = parse_map(read_file(map_file));
    ReconfigSequence seq = parse_sequence(read_file(seq_file));
    ReconfigSequence lifted;
    if (const BlowupArtifact* blowup = std::get_if<BlowupArtifact>(&art)) {
        lifted = blowup_lift(*blowup, seq);
    } else if (const SprArtifact* spr = std::get_if<SprArtifact>(&art)) {
        lifted = spr_lift(*spr, seq.sets);
    } else {
        lifted = pendant_lift(std::get<PendantArtifact>(art), seq);
    }
    emit_sequence(out, out_path, lifted);
    return kExitYes;
}

int do_project(std::ostream& out, const std::string& map_file, const std::string& seq_file,
               const std::string& out_path) {
    ReductionArtifact art = parse_map(read_file(map_file));
    ReconfigSequence seq = parse_sequence(read_file(seq_file));
    ReconfigSequence projected;
    if (const BlowupArtifact* blowup = std::get_if<BlowupArtifact>(&art)) {
        projected = blowup_project(*blowup, seq);
    } else if (const SprArtifact* spr = std::get_if<SprArtifact>(&art)) {
        projected.sets = spr_project(*spr, seq);
    } else {
        projected = pendant_project(std::get<PendantArtifact>(art), seq);
    }
    emit_sequence(out, out_path, projected);
    return kExitYes;
}

int do_tj_to_ts(std::ostream& out, const std::string& map_file, const std::string& seq_file,
                const std::string& out_path) {
    ReductionArtifact art = parse_map(read_file(map_file));
    const BlowupArtifact* blowup = std::get_if<BlowupArtifact>(&art);
    if (!blowup) throw InvalidInputError("tj-to-ts: map file must describe a blowup reduction");
    ReconfigSequence seq = parse_sequence(read_file(seq_file));
    emit_sequence(out, out_path, blowup_tj_to_ts(*blowup, seq));
    return kExitYes;
}

int do_bandwidth(std::ostream& out, const std::string& file, const Limits& limits) {
    Instance inst = parse_instance(read_file(file));
    auto [width, ordering] = exact_bandwidth(inst.graph, limits);
    out << "bandwidth: " << width << "\n";
    out << "ranks:";
    for (int r : ordering.rank) out << " " << r;
    out << "\n";
    return kExitYes;
}

int do_sketch_check(std::ostream& out, const std::string& file, const std::string& map_file) {
    Instance inst = parse_instance(read_file(file));
    ReductionArtifact art = parse_map(read_file(map_file));
    SketchMapping sketch = [&]() {
        if (const BlowupArtifact* blowup = std::get_if<BlowupArtifact>(&art))
            return sketch_of_reduction(*blowup);
        if (const SprArtifact* spr = std::get_if<SprArtifact>(&art))
            return sketch_of_reduction(*spr);
        throw InvalidInputError("sketch-check: pendant reductions induce no sketch");
    }();
    const Instance& art_inst =
        std::visit([](const auto& a) -> const Instance& { return a.instance; }, art);
    if (serialize_instance(art_inst) != serialize_instance(inst))
        throw InvalidInputError("sketch-check: instance file does not match the map's artifact");
    bool ok = verify_sketch(sketch);
    out << "kind: " << (std::holds_alternative<BlowupArtifact>(art) ? "blowup" : "spr-ts") << "\n";
    out << "t: " << sketch.t << "\n";
    out << "small-n: " << sketch.small.vertex_count() << "\n";
    out << "verified: " << (ok ? "yes" : "no") << "\n";
    return ok ? kExitYes : kExitNo;
}

int do_dot(std::ostream& out, const std::string& file, const std::string& seq_file) {
    Instance inst = parse_instance(read_file(file));
    std::optional<ReconfigSequence> seq;
    if (!seq_file.empty()) seq = parse_sequence(read_file(seq_file));
    out << export_dot(inst.graph, seq);
    return kExitYes;
}

// The worked example: one graph, six 1-regular sets, a TJ-sequence that is
// valid while only one of its steps slides.
struct WorkedExample {
    Graph graph = build_graph(8, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {2, 4},
                                  {2, 7}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 7}});
    std::vector<VertexSet> sets = {VertexSet{0, 2, 5, 7}, VertexSet{0, 2, 3, 7},
                                   VertexSet{0, 3, 6, 7}, VertexSet{1, 3, 6, 7},
                                   VertexSet{1, 3, 5, 6}, VertexSet{1, 2, 5, 6}};
};

int do_selftest(std::ostream& out) {
    WorkedExample ex;
    int failures = 0;
    auto check = [&](bool ok, const std::string& name) {
        out << (ok ? "ok: " : "FAIL: ") << name << "\n";
        if (!ok) ++failures;
    };

    Instance tj{ex.graph, 1, Rule::TJ, ex.sets.front(), ex.sets.back(), false};
    Instance ts{ex.graph, 1, Rule::TS, ex.sets.front(), ex.sets.back(), false};
    ReconfigSequence seq{ex.sets};

    check(validate_sequence(tj, seq).ok, "figure sequence validates under TJ");
    Verdict ts_verdict = validate_sequence(ts, seq);
    check(!ts_verdict.ok && ts_verdict.index == 1, "figure sequence breaks under TS at step 0->1");
    for (int i = 0; i + 1 < 6; ++i) {
        bool adj = adjacent_under(ex.graph, 1, Rule::TS, ex.sets[static_cast<size_t>(i)],
                                  ex.sets[static_cast<size_t>(i) + 1]);
        check(adj == (i == 2), "TS adjacency of consecutive pair " + std::to_string(i) + "->" +
                                   std::to_string(i + 1) + " is " + (i == 2 ? "present" : "absent"));
    }
    Decision solved = solve(tj);
    check(solved.reachable && solved.witness && solved.witness->moves() == 5 &&
              validate_sequence(tj, *solved.witness).ok,
          "TJ solve finds a validating 5-move witness");
    check(!solve(ts).reachable, "TS solve reports unreachable");
    check(oracle_reachable(tj).reachable, "TJ oracle agrees reachable");
    check(!oracle_reachable(ts).reachable, "TS oracle agrees unreachable");
    check(neighbors(ex.graph, 1, Rule::TS, ex.sets.front()).empty(),
          "the start set has no TS-neighbors");
    std::vector<VertexSet> all = enumerate_d_regular_sets(ex.graph, 1, 4);
    bool contains_all = true;
    for (const VertexSet& s : ex.sets)
        if (!std::binary_search(all.begin(), all.end(), s)) contains_all = false;
    check(all.size() == 8 && contains_all, "exactly 8 one-regular 4-sets, including all six");
    out << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? kExitYes : kExitNo;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact reconfiguration toolkit for d-regular induced subgraphs"};
    app.require_subcommand(1);

    Limits limits = limits_from_env();
    long long limit_states = -1;
    app.add_option("--limit-states", limit_states, "solver state budget (overrides RISR_MAX_STATES)");
    int oracle_n = -1;
    app.add_option("--oracle-n", oracle_n, "vertex bound for oracle/enumeration (default 16)");
    int bandwidth_n = -1;
    app.add_option("--bandwidth-n", bandwidth_n, "vertex bound for exact bandwidth (default 10)");

    std::string file, seq_file, map_file, out_path, rule_name;
    int k = -1;
    int d = 1;

    CLI::App* solve_cmd = app.add_subcommand("solve", "decide reachability by BFS");
    solve_cmd->fallthrough();
    solve_cmd->add_option("file", file)->required();
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "decide by the brute-force move graph");
    oracle_cmd->fallthrough();
    oracle_cmd->add_option("file", file)->required();
    CLI::App* validate_cmd = app.add_subcommand("validate", "check a claimed sequence");
    validate_cmd->fallthrough();
    validate_cmd->add_option("file", file)->required();
    validate_cmd->add_option("seqfile", seq_file)->required();
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "list d-regular sets of one cardinality");
    enum_cmd->fallthrough();
    enum_cmd->add_option("file", file)->required();
    enum_cmd->add_option("--k", k, "cardinality")->required();
    CLI::App* recog_cmd = app.add_subcommand("recognize", "graph class report");
    recog_cmd->fallthrough();
    recog_cmd->add_option("file", file)->required();
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "run a reduction, writing .inst and .map");
    reduce_cmd->fallthrough();
    std::string kind;
    reduce_cmd->add_option("kind", kind, "blowup|spr|spr-ts|pendant")
        ->required()
        ->check(CLI::IsMember({"blowup", "spr", "spr-ts", "pendant"}));
    reduce_cmd->add_option("file", file)->required();
    reduce_cmd->add_option("--d", d, "degree of the output instance");
    reduce_cmd->add_option("--rule", rule_name, "rule of the emitted blowup instance (TJ|TS)")
        ->check(CLI::IsMember({"TJ", "TS"}));
    reduce_cmd->add_option("--out", out_path, "output prefix");
    CLI::App* lift_cmd = app.add_subcommand("lift", "lift a source-side sequence");
    lift_cmd->fallthrough();
    lift_cmd->add_option("mapfile", map_file)->required();
    lift_cmd->add_option("seqfile", seq_file)->required();
    lift_cmd->add_option("--out", out_path, "write the sequence here");
    CLI::App* project_cmd = app.add_subcommand("project", "project an artifact-side sequence");
    project_cmd->fallthrough();
    project_cmd->add_option("mapfile", map_file)->required();
    project_cmd->add_option("seqfile", seq_file)->required();
    project_cmd->add_option("--out", out_path, "write the sequence here");
    CLI::App* repair_cmd = app.add_subcommand("tj-to-ts", "repair a blowup TJ-sequence into TS");
    repair_cmd->fallthrough();
    repair_cmd->add_option("mapfile", map_file)->required();
    repair_cmd->add_option("seqfile", seq_file)->required();
    repair_cmd->add_option("--out", out_path, "write the sequence here");
    CLI::App* bw_cmd = app.add_subcommand("bandwidth", "exact bandwidth of the instance graph");
    bw_cmd->fallthrough();
    bw_cmd->add_option("file", file)->required();
    CLI::App* sketch_cmd = app.add_subcommand("sketch-check", "verify a reduction-induced sketch");
    sketch_cmd->fallthrough();
    sketch_cmd->add_option("file", file)->required();
    sketch_cmd->add_option("mapfile", map_file)->required();
    CLI::App* dot_cmd = app.add_subcommand("dot", "DOT export, optionally framed by a sequence");
    dot_cmd->fallthrough();
    dot_cmd->add_option("file", file)->required();
    dot_cmd->add_option("seqfile", seq_file);
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the built-in fixture suite");
    selftest_cmd->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitInput;
    }

    if (limit_states > 0) limits.max_states = limit_states;
    if (oracle_n > 0) limits.oracle_vertex_bound = oracle_n;
    if (bandwidth_n > 0) limits.bandwidth_vertex_bound = bandwidth_n;

    try {
        if (*solve_cmd) return do_solve(out, file, limits);
        if (*oracle_cmd) return do_oracle(out, file, limits);
        if (*validate_cmd) return do_validate(out, file, seq_file);
        if (*enum_cmd) return do_enumerate(out, file, k, limits);
        if (*recog_cmd) return do_recognize(out, file);
        if (*reduce_cmd) return do_reduce(out, kind, file, d, rule_name, out_path);
        if (*lift_cmd) return do_lift(out, map_file, seq_file, out_path);
        if (*project_cmd) return do_project(out, map_file, seq_file, out_path);
        if (*repair_cmd) return do_tj_to_ts(out, map_file, seq_file, out_path);
        if (*bw_cmd) return do_bandwidth(out, file, limits);
        if (*sketch_cmd) return do_sketch_check(out, file, map_file);
        if (*dot_cmd) return do_dot(out, file, seq_file);
        if (*selftest_cmd) return do_selftest(out);
    } catch (const InternalConsistencyError& e) {
        err << "internal-consistency error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const InvalidInputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        // anything else escaping is a bug, not an input problem
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    err << "usage error: no subcommand\n";
    return kExitInput;
}

}  // namespace risr
