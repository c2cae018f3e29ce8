#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jeedep/model.hpp"

namespace jeedep {

enum class ExportFormat { Dot, Json, Summary };

std::optional<ExportFormat> export_format_from_string(std::string_view name);

/// Graphviz rendering for human inspection: one node per artifact (shape keyed
/// by kind), one directed edge per dependency. Targets that resolved to no
/// artifact become synthetic nodes reached by dashed edges. Deterministic.
std::string render_dot(const DependencyGraph& graph);

/// Machine format of record: top-level keys "artifacts", "edges",
/// "diagnostics"; stable key order; deterministic bytes. Input is normalized
/// before rendering.
std::string render_json(const DependencyGraph& graph);

struct JsonParseOutcome {
    std::optional<DependencyGraph> graph;
    /// Empty on success.
    std::string error;
};

/// Inverse of render_json: for any graph G, parsing render_json(G) yields
/// G.normalized().
JsonParseOutcome parse_json_graph(std::string_view text);

/// Per-kind counts: artifacts by ArtifactKind, edges by EdgeKind, diagnostics
/// by severity. Counts match what render_json would contain.
std::string render_summary(const DependencyGraph& graph);

}  // namespace jeedep
