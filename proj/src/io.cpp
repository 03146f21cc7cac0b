#include "risr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace risr {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());  // message carries the byte position
    }
}

void check_fields(const Json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& what) {
    if (!j.is_object()) throw InvalidInputError(what + ": document must be a JSON object");
    for (const std::string& field : required)
        if (!j.contains(field)) throw InvalidInputError(what + ": missing field \"" + field + "\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                     std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) throw InvalidInputError(what + ": unknown field \"" + key + "\"");
    }
}

int get_int(const Json& j, const std::string& field, const std::string& what) {
    const Json& v = j.at(field);
    if (!v.is_number_integer())
        throw InvalidInputError(what + ": field \"" + field + "\" must be an integer");
    return v.get<int>();
}

bool get_bool(const Json& j, const std::string& field, const std::string& what) {
    const Json& v = j.at(field);
    if (!v.is_boolean())
        throw InvalidInputError(what + ": field \"" + field + "\" must be a boolean");
    return v.get<bool>();
}

std::vector<Vertex> get_vertex_list(const Json& v, const std::string& where) {
    if (!v.is_array()) throw InvalidInputError(where + " must be a list of integers");
    std::vector<Vertex> out;
    for (const Json& item : v) {
        if (!item.is_number_integer())
            throw InvalidInputError(where + " must contain only integers");
        out.push_back(item.get<int>());
    }
    return out;
}

std::vector<std::pair<Vertex, Vertex>> get_edge_list(const Json& j, const std::string& what) {
    const Json& v = j.at("edges");
    if (!v.is_array()) throw InvalidInputError(what + ": field \"edges\" must be a list");
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Json& item : v) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw InvalidInputError(what + ": each edge must be a 2-list of integers");
        out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

Graph parse_graph_object(const Json& j, const std::string& what) {
    check_fields(j, {"n", "edges"}, {}, what);
    return build_graph(get_int(j, "n", what), get_edge_list(j, what));
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Json set_to_json(const VertexSet& s) {
    Json out = Json::array();
    for (Vertex v : s) out.push_back(v);
    return out;
}

Json sets_to_json(const std::vector<VertexSet>& sets) {
    Json out = Json::array();
    for (const VertexSet& s : sets) out.push_back(set_to_json(s));
    return out;
}

std::vector<VertexSet> get_set_list(const Json& v, const std::string& where) {
    if (!v.is_array()) throw InvalidInputError(where + " must be a list of vertex lists");
    std::vector<VertexSet> out;
    for (const Json& item : v) out.emplace_back(get_vertex_list(item, where));
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Instance parse_instance(const std::string& text) {
    Json j = parse_json(text);
    const std::string what = "instance";
    check_fields(j, {"n", "edges", "d", "rule", "source", "target"}, {"connected"}, what);
    Instance inst;
    inst.graph = build_graph(get_int(j, "n", what), get_edge_list(j, what));
    inst.d = get_int(j, "d", what);
    const Json& rule = j.at("rule");
    if (!rule.is_string()) throw InvalidInputError(what + ": field \"rule\" must be a string");
    inst.rule = rule_from_string(rule.get<std::string>());
    inst.source = VertexSet(get_vertex_list(j.at("source"), what + ": field \"source\""));
    inst.target = VertexSet(get_vertex_list(j.at("target"), what + ": field \"target\""));
    inst.connected_variant = j.contains("connected") ? get_bool(j, "connected", what) : false;
    check_instance(inst);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    Json j;
    j["n"] = inst.graph.vertex_count();
    j["edges"] = graph_to_json(inst.graph)["edges"];
    j["d"] = inst.d;
    j["rule"] = to_string(inst.rule);
    j["source"] = set_to_json(inst.source);
    j["target"] = set_to_json(inst.target);
    j["connected"] = inst.connected_variant;
    return dump(j);
}

ReconfigSequence parse_sequence(const std::string& text) {
    Json j = parse_json(text);
    const std::string what = "sequence";
    check_fields(j, {"sets"}, {}, what);
    ReconfigSequence seq;
    seq.sets = get_set_list(j.at("sets"), what + ": field \"sets\"");
    return seq;
}

std::string serialize_sequence(const ReconfigSequence& seq) {
    Json j;
    j["sets"] = sets_to_json(seq.sets);
    return dump(j);
}

SprProblem parse_spr_problem(const std::string& text) {
    Json j = parse_json(text);
    const std::string what = "spr problem";
    check_fields(j, {"n", "edges", "x", "y", "source", "target"}, {}, what);
    SprProblem problem;
    problem.graph = build_graph(get_int(j, "n", what), get_edge_list(j, what));
    problem.x = get_int(j, "x", what);
    problem.y = get_int(j, "y", what);
    problem.path_source = VertexSet(get_vertex_list(j.at("source"), what + ": field \"source\""));
    problem.path_target = VertexSet(get_vertex_list(j.at("target"), what + ": field \"target\""));
    return problem;
}

std::string serialize_spr_problem(const SprProblem& problem) {
    Json j;
    j["n"] = problem.graph.vertex_count();
    j["edges"] = graph_to_json(problem.graph)["edges"];
    j["x"] = problem.x;
    j["y"] = problem.y;
    j["source"] = set_to_json(problem.path_source);
    j["target"] = set_to_json(problem.path_target);
    return dump(j);
}

std::string serialize_map(const ReductionArtifact& art) {
    Json j;
    if (const BlowupArtifact* blowup = std::get_if<BlowupArtifact>(&art)) {
        j["kind"] = "blowup";
        j["d"] = blowup->d;
        j["source_graph"] = graph_to_json(blowup->source_graph);
        j["source_set"] = set_to_json(blowup->h_source);
        j["target_set"] = set_to_json(blowup->h_target);
        j["families"] = sets_to_json(blowup->families);
    } else if (const SprArtifact* spr = std::get_if<SprArtifact>(&art)) {
        j["kind"] = to_string(spr->mode);
        j["d"] = spr->d;
        j["source_graph"] = graph_to_json(spr->source.host);
        j["x"] = spr->source.x;
        j["y"] = spr->source.y;
        j["path_source"] = set_to_json(spr->source.path_source);
        j["path_target"] = set_to_json(spr->source.path_target);
        j["L"] = spr->big_l;
        j["r"] = spr->source.radius();
        j["layers"] = sets_to_json(spr->source.layers);
        Json to_output = Json::array();
        for (Vertex v : spr->to_output) to_output.push_back(v);
        j["to_output"] = std::move(to_output);
        j["return_path"] = set_to_json(spr->return_path);
        j["gadgets_a"] = sets_to_json(spr->gadget_a);
        j["gadgets_b"] = sets_to_json(spr->gadget_b);
    } else {
        const PendantArtifact& pendant = std::get<PendantArtifact>(art);
        j["kind"] = "pendant";
        j["source_graph"] = graph_to_json(pendant.source_graph);
        j["source_set"] = set_to_json(pendant.h_source);
        j["target_set"] = set_to_json(pendant.h_target);
        j["side_a"] = set_to_json(pendant.side_a);
        j["side_b"] = set_to_json(pendant.side_b);
    }
    return dump(j);
}

ReductionArtifact parse_map(const std::string& text) {
    Json j = parse_json(text);
    const std::string what = "map";
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw InvalidInputError("map: missing or malformed field \"kind\"");
    std::string kind = j.at("kind").get<std::string>();

    auto inconsistent = [&](const std::string& detail) {
        return InvalidInputError("map: stored tables do not match the reconstruction (" + detail +
                                 ")");
    };

    if (kind == "blowup") {
        check_fields(j, {"kind", "d", "source_graph", "source_set", "target_set", "families"},
                     {}, what);
        Graph h = parse_graph_object(j.at("source_graph"), what + ": source_graph");
        VertexSet src(get_vertex_list(j.at("source_set"), what + ": source_set"));
        VertexSet tgt(get_vertex_list(j.at("target_set"), what + ": target_set"));
        BlowupArtifact art = blowup_reduce(h, src, tgt, get_int(j, "d", what));
        if (!(sets_to_json(art.families) == j.at("families")))
            throw inconsistent("families");
        return art;
    }
    if (kind == "spr" || kind == "spr-ts") {
        check_fields(j,
                     {"kind", "d", "source_graph", "x", "y", "path_source", "path_target", "L",
                      "r", "layers", "to_output", "return_path", "gadgets_a", "gadgets_b"},
                     {}, what);
        Graph h = parse_graph_object(j.at("source_graph"), what + ": source_graph");
        VertexSet p(get_vertex_list(j.at("path_source"), what + ": path_source"));
        VertexSet p2(get_vertex_list(j.at("path_target"), what + ": path_target"));
        LayeredSource ls = spr_preprocess(h, get_int(j, "x", what), get_int(j, "y", what), p, p2);
        SprMode mode = kind == "spr" ? SprMode::TJ_BIPARTITE : SprMode::TS_CLIQUE_LAYERS;
        SprArtifact art = spr_reduce(ls, get_int(j, "d", what), mode);
        if (art.big_l != get_int(j, "L", what)) throw inconsistent("L");
        if (ls.radius() != get_int(j, "r", what)) throw inconsistent("r");
        if (!(sets_to_json(ls.layers) == j.at("layers"))) throw inconsistent("layers");
        Json to_output = Json::array();
        for (Vertex v : art.to_output) to_output.push_back(v);
        if (!(to_output == j.at("to_output"))) throw inconsistent("to_output");
        if (!(set_to_json(art.return_path) == j.at("return_path"))) throw inconsistent("return_path");
        if (!(sets_to_json(art.gadget_a) == j.at("gadgets_a"))) throw inconsistent("gadgets_a");
        if (!(sets_to_json(art.gadget_b) == j.at("gadgets_b"))) throw inconsistent("gadgets_b");
        return art;
    }
    if (kind == "pendant") {
        check_fields(j, {"kind", "source_graph", "source_set", "target_set", "side_a", "side_b"},
                     {}, what);
        Graph h = parse_graph_object(j.at("source_graph"), what + ": source_graph");
        VertexSet src(get_vertex_list(j.at("source_set"), what + ": source_set"));
        VertexSet tgt(get_vertex_list(j.at("target_set"), what + ": target_set"));
        PendantArtifact art = pendant_reduce(h, src, tgt);
        if (!(set_to_json(art.side_a) == j.at("side_a"))) throw inconsistent("side_a");
        if (!(set_to_json(art.side_b) == j.at("side_b"))) throw inconsistent("side_b");
        return art;
    }
    throw InvalidInputError("map: unknown kind \"" + kind + "\"");
}

std::string export_dot(const Graph& g, const std::optional<ReconfigSequence>& seq) {
    std::ostringstream out;
    auto body = [&](const VertexSet* marked) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            out << "  " << v;
            if (marked && marked->contains(v)) out << " [style=filled, fillcolor=black, fontcolor=white]";
            out << ";\n";
        }
        for (auto [u, v] : g.edge_list()) out << "  " << u << " -- " << v << ";\n";
    };
    if (!seq) {
        out << "graph G {\n";
        body(nullptr);
        out << "}\n";
        return out.str();
    }
    for (size_t i = 0; i < seq->sets.size(); ++i) {
        out << "graph frame_" << i << " {\n";
        out << "  label=\"step " << i << "\";\n";
        body(&seq->sets[i]);
        out << "}\n";
    }
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInputError("cannot write file: " + tmp.string());
        out << content;
        if (!out.good()) throw InvalidInputError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw InvalidInputError("rename failed for " + path.string() + ": " + ec.message());
}

}  // namespace risr
