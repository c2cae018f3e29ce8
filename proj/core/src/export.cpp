#include "jeedep/export.hpp"

#include <array>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace jeedep {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': break;
            default: out += c;
        }
    }
    return out;
}

std::string_view dot_shape(ArtifactKind kind) {
    switch (kind) {
        case ArtifactKind::ServletClass: return "box";
        case ArtifactKind::JspPage: return "ellipse";
        case ArtifactKind::JsfPage: return "egg";
        case ArtifactKind::HtmlPage: return "house";
        case ArtifactKind::BeanClass: return "hexagon";
        case ArtifactKind::DeploymentDescriptor: return "note";
        case ArtifactKind::FacesConfig: return "folder";
        case ArtifactKind::OtherJavaType: return "plaintext";
    }
    return "box";
}

/// Identity and label of the synthetic DOT node standing in for a target
/// outside the artifact set.
struct SyntheticNode {
    std::string id;
    std::string label;
};

SyntheticNode synthetic_node(const TargetRef& target) {
    std::string suffix = target.member.empty() ? target.value : target.value + "#" + target.member;
    switch (target.variant) {
        case TargetRef::Variant::UnresolvedUrl:
            return {"unresolved:" + suffix, target.value};
        case TargetRef::Variant::DynamicUrl:
            return {"dynamic:" + suffix, "dynamic: " + target.value};
        case TargetRef::Variant::BeanRef:
            return {"bean:" + suffix,
                    target.member.empty() ? target.value : target.value + "." + target.member};
        case TargetRef::Variant::ExternalUrl:
            return {"external:" + suffix, target.value};
        case TargetRef::Variant::ResolvedArtifact:
            break;
    }
    return {target.value, target.value};
}

ordered_json location_json(const SourceLocation& location) {
    ordered_json j;
    j["file"] = location.file_path;
    j["line"] = location.line;
    j["column"] = location.column;
    return j;
}

ordered_json pairs_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, value] : pairs) arr.push_back(ordered_json::array({key, value}));
    return arr;
}

bool parse_location(const ordered_json& j, SourceLocation& out) {
    if (!j.is_object() || !j.contains("file") || !j["file"].is_string()) return false;
    out.file_path = j["file"].get<std::string>();
    out.line = j.value("line", 1);
    out.column = j.value("column", 1);
    return true;
}

bool parse_pairs(const ordered_json& j, std::vector<std::pair<std::string, std::string>>& out) {
    if (!j.is_array()) return false;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            return false;
        out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return true;
}

}  // namespace

std::optional<ExportFormat> export_format_from_string(std::string_view name) {
    if (name == "dot") return ExportFormat::Dot;
    if (name == "json") return ExportFormat::Json;
    if (name == "summary") return ExportFormat::Summary;
    return std::nullopt;
}

std::string render_dot(const DependencyGraph& input) {
    DependencyGraph graph = input.normalized();
    std::ostringstream out;
    out << "digraph dependencies {\n";
    out << "  rankdir=LR;\n";
    out << "  node [fontname=\"Helvetica\"];\n";
    for (const Artifact& artifact : graph.artifacts())
        out << "  \"" << dot_escape(artifact.id) << "\" [label=\"" << dot_escape(artifact.path)
            << "\", shape=" << dot_shape(artifact.kind) << "];\n";

    // Synthetic nodes for every non-artifact target, deduplicated and sorted.
    std::map<std::string, std::string> synthetic;  // id -> label
    for (const DependencyEdge& edge : graph.edges()) {
        if (edge.target.variant == TargetRef::Variant::ResolvedArtifact) continue;
        SyntheticNode node = synthetic_node(edge.target);
        synthetic.emplace(node.id, node.label);
    }
    for (const auto& [id, label] : synthetic)
        out << "  \"" << dot_escape(id) << "\" [label=\"" << dot_escape(label)
            << "\", shape=ellipse, style=dashed];\n";

    for (const DependencyEdge& edge : graph.edges()) {
        std::string label = to_string(edge.kind);
        for (const auto& [key, value] : edge.params) label += "\\n" + key + "=" + value;
        bool resolved = edge.target.variant == TargetRef::Variant::ResolvedArtifact;
        std::string target_id = resolved ? edge.target.value : synthetic_node(edge.target).id;
        out << "  \"" << dot_escape(edge.source) << "\" -> \"" << dot_escape(target_id)
            << "\" [label=\"" << label << "\"";
        if (!resolved) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_json(const DependencyGraph& input) {
    DependencyGraph graph = input.normalized();
    ordered_json doc;
    doc["artifacts"] = ordered_json::array();
    for (const Artifact& artifact : graph.artifacts()) {
        ordered_json j;
        j["id"] = artifact.id;
        j["kind"] = to_string(artifact.kind);
        j["path"] = artifact.path;
        j["logical_names"] = artifact.logical_names;
        doc["artifacts"].push_back(std::move(j));
    }
    doc["edges"] = ordered_json::array();
    for (const DependencyEdge& edge : graph.edges()) {
        ordered_json j;
        j["source"] = edge.source;
        ordered_json target;
        target["variant"] = to_string(edge.target.variant);
        target["value"] = edge.target.value;
        target["member"] = edge.target.member;
        j["target"] = std::move(target);
        j["kind"] = to_string(edge.kind);
        j["location"] = location_json(edge.location);
        j["params"] = pairs_json(edge.params);
        j["attributes"] = pairs_json(edge.attributes);
        doc["edges"].push_back(std::move(j));
    }
    doc["diagnostics"] = ordered_json::array();
    for (const Diagnostic& diagnostic : graph.diagnostics()) {
        ordered_json j;
        j["severity"] = to_string(diagnostic.severity);
        j["code"] = diagnostic.code;
        j["message"] = diagnostic.message;
        if (diagnostic.location) j["location"] = location_json(*diagnostic.location);
        doc["diagnostics"].push_back(std::move(j));
    }
    // Invalid UTF-8 from tolerant scans is replaced, never thrown on.
    return doc.dump(2, ' ', false, ordered_json::error_handler_t::replace) + "\n";
}

JsonParseOutcome parse_json_graph(std::string_view text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) return {std::nullopt, "not a valid JSON document"};
    if (!doc.is_object() || !doc.contains("artifacts") || !doc.contains("edges") ||
        !doc.contains("diagnostics"))
        return {std::nullopt, "missing top-level artifacts/edges/diagnostics"};

    DependencyGraph graph;
    try {
        for (const auto& j : doc["artifacts"]) {
            Artifact artifact;
            artifact.id = j.at("id").get<std::string>();
            auto kind = artifact_kind_from_string(j.at("kind").get<std::string>());
            if (!kind) return {std::nullopt, "unknown artifact kind"};
            artifact.kind = *kind;
            artifact.path = j.at("path").get<std::string>();
            for (const auto& name : j.value("logical_names", ordered_json::array()))
                artifact.logical_names.push_back(name.get<std::string>());
            graph.add_artifact(std::move(artifact));
        }
        for (const auto& j : doc["edges"]) {
            DependencyEdge edge;
            edge.source = j.at("source").get<std::string>();
            const auto& t = j.at("target");
            auto variant = target_variant_from_string(t.at("variant").get<std::string>());
            if (!variant) return {std::nullopt, "unknown target variant"};
            edge.target.variant = *variant;
            edge.target.value = t.at("value").get<std::string>();
            edge.target.member = t.value("member", std::string());
            auto kind = edge_kind_from_string(j.at("kind").get<std::string>());
            if (!kind) return {std::nullopt, "unknown edge kind"};
            edge.kind = *kind;
            if (!parse_location(j.at("location"), edge.location))
                return {std::nullopt, "bad edge location"};
            if (!parse_pairs(j.value("params", ordered_json::array()), edge.params))
                return {std::nullopt, "bad edge params"};
            if (!parse_pairs(j.value("attributes", ordered_json::array()), edge.attributes))
                return {std::nullopt, "bad edge attributes"};
            graph.add_edge(std::move(edge));
        }
        for (const auto& j : doc["diagnostics"]) {
            Diagnostic diagnostic;
            auto severity = severity_from_string(j.at("severity").get<std::string>());
            if (!severity) return {std::nullopt, "unknown severity"};
            diagnostic.severity = *severity;
            diagnostic.code = j.at("code").get<std::string>();
            diagnostic.message = j.at("message").get<std::string>();
            if (j.contains("location")) {
                SourceLocation location;
                if (!parse_location(j["location"], location))
                    return {std::nullopt, "bad diagnostic location"};
                diagnostic.location = location;
            }
            graph.add_diagnostic(std::move(diagnostic));
        }
    } catch (const std::exception& e) {
        return {std::nullopt, std::string("malformed graph document: ") + e.what()};
    }
    return {graph.normalized(), ""};
}

std::string render_summary(const DependencyGraph& input) {
    DependencyGraph graph = input.normalized();
    std::ostringstream out;
    out << "artifacts: " << graph.artifacts().size() << "\n";
    std::map<std::string, int> artifact_counts;
    for (const Artifact& artifact : graph.artifacts()) ++artifact_counts[to_string(artifact.kind)];
    for (const auto& [kind, count] : artifact_counts)
        out << "  " << kind << ": " << count << "\n";

    out << "edges: " << graph.edges().size() << "\n";
    std::array<int, kEdgeKindCount> edge_counts{};
    for (const DependencyEdge& edge : graph.edges())
        ++edge_counts[static_cast<std::size_t>(edge.kind)];
    for (int k = 0; k < kEdgeKindCount; ++k)
        if (edge_counts[static_cast<std::size_t>(k)] > 0)
            out << "  " << to_string(static_cast<EdgeKind>(k)) << ": "
                << edge_counts[static_cast<std::size_t>(k)] << "\n";

    out << "diagnostics: " << graph.diagnostics().size() << "\n";
    std::map<std::string, int> diagnostic_counts;
    for (const Diagnostic& diagnostic : graph.diagnostics())
        ++diagnostic_counts[to_string(diagnostic.severity)];
    for (const auto& [severity, count] : diagnostic_counts)
        out << "  " << severity << ": " << count << "\n";
    return out.str();
}

}  // namespace jeedep
