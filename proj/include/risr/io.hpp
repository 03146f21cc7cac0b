#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "risr/reductions.hpp"

namespace risr {

// Instance documents: JSON objects with fields n, edges, d, rule, source,
// target and optional connected (default false). Unknown fields are
// rejected; semantic problems name the violated invariant.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Sequence documents: {"sets": [[...], ...]}.
ReconfigSequence parse_sequence(const std::string& text);
std::string serialize_sequence(const ReconfigSequence& seq);

// Input document for the SPR reductions: {n, edges, x, y, source, target}
// where source/target are shortest x-y path vertex sets.
struct SprProblem {
    Graph graph;
    Vertex x = -1;
    Vertex y = -1;
    VertexSet path_source;
    VertexSet path_target;
};
SprProblem parse_spr_problem(const std::string& text);
std::string serialize_spr_problem(const SprProblem& problem);

// Sidecar map documents carry the reduction kind, the source problem and the
// correspondence tables. Parsing re-runs the deterministic construction and
// cross-checks the stored tables, so a loaded artifact behaves exactly like
// the in-memory one.
using ReductionArtifact = std::variant<BlowupArtifact, SprArtifact, PendantArtifact>;
std::string serialize_map(const ReductionArtifact& art);
ReductionArtifact parse_map(const std::string& text);

// DOT text; with a sequence, one frame per set with its vertices marked.
// Byte-identical for identical inputs.
std::string export_dot(const Graph& g, const std::optional<ReconfigSequence>& seq = std::nullopt);

std::string read_file(const std::filesystem::path& path);
// Temp-and-rename, so concurrent invocations on disjoint outputs are safe.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace risr
