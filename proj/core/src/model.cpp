#include "jeedep/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace jeedep {

bool location_less(const SourceLocation& a, const SourceLocation& b) {
    return std::tie(a.file_path, a.line, a.column) <
           std::tie(b.file_path, b.line, b.column);
}

std::string to_string(ArtifactKind kind) {
    switch (kind) {
        case ArtifactKind::ServletClass: return "ServletClass";
        case ArtifactKind::JspPage: return "JspPage";
        case ArtifactKind::JsfPage: return "JsfPage";
        case ArtifactKind::HtmlPage: return "HtmlPage";
        case ArtifactKind::BeanClass: return "BeanClass";
        case ArtifactKind::DeploymentDescriptor: return "DeploymentDescriptor";
        case ArtifactKind::FacesConfig: return "FacesConfig";
        case ArtifactKind::OtherJavaType: return "OtherJavaType";
    }
    return "OtherJavaType";
}

std::optional<ArtifactKind> artifact_kind_from_string(const std::string& name) {
    static const std::map<std::string, ArtifactKind> table = {
        {"ServletClass", ArtifactKind::ServletClass},
        {"JspPage", ArtifactKind::JspPage},
        {"JsfPage", ArtifactKind::JsfPage},
        {"HtmlPage", ArtifactKind::HtmlPage},
        {"BeanClass", ArtifactKind::BeanClass},
        {"DeploymentDescriptor", ArtifactKind::DeploymentDescriptor},
        {"FacesConfig", ArtifactKind::FacesConfig},
        {"OtherJavaType", ArtifactKind::OtherJavaType},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::string to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::DispatchForward: return "DispatchForward";
        case EdgeKind::DispatchInclude: return "DispatchInclude";
        case EdgeKind::HtmlFormAction: return "HtmlFormAction";
        case EdgeKind::JspIncludeAction: return "JspIncludeAction";
        case EdgeKind::IncludeDirective: return "IncludeDirective";
        case EdgeKind::JspForwardAction: return "JspForwardAction";
        case EdgeKind::JstlRedirect: return "JstlRedirect";
        case EdgeKind::JstlUrl: return "JstlUrl";
        case EdgeKind::ScriptletDispatchForward: return "ScriptletDispatchForward";
        case EdgeKind::ScriptletDispatchInclude: return "ScriptletDispatchInclude";
        case EdgeKind::ErrorPageDirective: return "ErrorPageDirective";
        case EdgeKind::JsfCommandButton: return "JsfCommandButton";
        case EdgeKind::JsfCommandLink: return "JsfCommandLink";
        case EdgeKind::HrefLink: return "HrefLink";
        case EdgeKind::UseBean: return "UseBean";
        case EdgeKind::BeanGetProperty: return "BeanGetProperty";
        case EdgeKind::BeanSetProperty: return "BeanSetProperty";
        case EdgeKind::ElReference: return "ElReference";
        case EdgeKind::ManagedPropertyInjection: return "ManagedPropertyInjection";
        case EdgeKind::UrlMapping: return "UrlMapping";
    }
    return "UrlMapping";
}

std::optional<EdgeKind> edge_kind_from_string(const std::string& name) {
    for (int i = 0; i < kEdgeKindCount; ++i) {
        auto kind = static_cast<EdgeKind>(i);
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

TargetRef TargetRef::resolved(std::string artifact_id) {
    return {Variant::ResolvedArtifact, std::move(artifact_id), {}};
}

TargetRef TargetRef::unresolved_url(std::string url) {
    return {Variant::UnresolvedUrl, std::move(url), {}};
}

TargetRef TargetRef::dynamic_url(std::string reason) {
    return {Variant::DynamicUrl, std::move(reason), {}};
}

TargetRef TargetRef::bean(std::string name, std::string member_path) {
    return {Variant::BeanRef, std::move(name), std::move(member_path)};
}

TargetRef TargetRef::external(std::string url) {
    return {Variant::ExternalUrl, std::move(url), {}};
}

std::string to_string(TargetRef::Variant variant) {
    switch (variant) {
        case TargetRef::Variant::ResolvedArtifact: return "ResolvedArtifact";
        case TargetRef::Variant::UnresolvedUrl: return "UnresolvedUrl";
        case TargetRef::Variant::DynamicUrl: return "DynamicUrl";
        case TargetRef::Variant::BeanRef: return "BeanRef";
        case TargetRef::Variant::ExternalUrl: return "ExternalUrl";
    }
    return "UnresolvedUrl";
}

std::optional<TargetRef::Variant> target_variant_from_string(const std::string& name) {
    static const std::map<std::string, TargetRef::Variant> table = {
        {"ResolvedArtifact", TargetRef::Variant::ResolvedArtifact},
        {"UnresolvedUrl", TargetRef::Variant::UnresolvedUrl},
        {"DynamicUrl", TargetRef::Variant::DynamicUrl},
        {"BeanRef", TargetRef::Variant::BeanRef},
        {"ExternalUrl", TargetRef::Variant::ExternalUrl},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

bool same_edge_identity(const DependencyEdge& a, const DependencyEdge& b) {
    return a.source == b.source && a.target == b.target && a.kind == b.kind &&
           a.location == b.location;
}

std::string to_string(Severity severity) {
    return severity == Severity::Error ? "Error" : "Warning";
}

std::optional<Severity> severity_from_string(const std::string& name) {
    if (name == "Warning") return Severity::Warning;
    if (name == "Error") return Severity::Error;
    return std::nullopt;
}

Diagnostic make_warning(std::string code, std::string message,
                        std::optional<SourceLocation> location) {
    return {Severity::Warning, std::move(code), std::move(message), std::move(location)};
}

Diagnostic make_error(std::string code, std::string message,
                      std::optional<SourceLocation> location) {
    return {Severity::Error, std::move(code), std::move(message), std::move(location)};
}

void DependencyGraph::add_artifact(Artifact artifact) {
    for (auto& existing : artifacts_) {
        if (existing.id != artifact.id) continue;
        if (existing.kind != artifact.kind) {
            add_diagnostic(make_error(
                diag::kArtifactKindConflict,
                "artifact '" + artifact.id + "' classified both as " +
                    to_string(existing.kind) + " and " + to_string(artifact.kind) +
                    "; keeping " + to_string(existing.kind)));
        }
        for (auto& name : artifact.logical_names) {
            if (std::find(existing.logical_names.begin(), existing.logical_names.end(),
                          name) == existing.logical_names.end()) {
                existing.logical_names.push_back(std::move(name));
            }
        }
        return;
    }
    artifacts_.push_back(std::move(artifact));
}

void DependencyGraph::add_edge(DependencyEdge edge) {
    if (find_artifact(edge.source) == nullptr) {
        throw std::logic_error("add_edge: unknown source artifact '" + edge.source + "'");
    }
    if (has_edge(edge)) return;
    edges_.push_back(std::move(edge));
}

void DependencyGraph::add_diagnostic(Diagnostic diagnostic) {
    diagnostics_.push_back(std::move(diagnostic));
}

void DependencyGraph::add_diagnostics(std::vector<Diagnostic> diagnostics) {
    for (auto& d : diagnostics) diagnostics_.push_back(std::move(d));
}

const Artifact* DependencyGraph::find_artifact(const std::string& id) const {
    for (const auto& a : artifacts_) {
        if (a.id == id) return &a;
    }
    return nullptr;
}

bool DependencyGraph::has_edge(const DependencyEdge& edge) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const DependencyEdge& e) {
        return same_edge_identity(e, edge);
    });
}

namespace {

std::tuple<TargetRef::Variant, const std::string&, const std::string&>
target_key(const TargetRef& t) {
    return {t.variant, t.value, t.member};
}

bool artifact_less(const Artifact& a, const Artifact& b) {
    return std::tie(a.kind, a.path, a.id) < std::tie(b.kind, b.path, b.id);
}

bool edge_less(const DependencyEdge& a, const DependencyEdge& b) {
    if (a.source != b.source) return a.source < b.source;
    if (!(a.location == b.location)) return location_less(a.location, b.location);
    if (a.kind != b.kind) return a.kind < b.kind;
    if (!(a.target == b.target)) return target_key(a.target) < target_key(b.target);
    return std::tie(a.params, a.attributes) < std::tie(b.params, b.attributes);
}

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
    SourceLocation la = a.location.value_or(SourceLocation{"", 0, 0});
    SourceLocation lb = b.location.value_or(SourceLocation{"", 0, 0});
    if (!(la == lb)) return location_less(la, lb);
    return std::tie(a.severity, a.code, a.message) <
           std::tie(b.severity, b.code, b.message);
}

}  // namespace

DependencyGraph DependencyGraph::normalized() const {
    DependencyGraph out = *this;
    for (auto& artifact : out.artifacts_) {
        std::sort(artifact.logical_names.begin(), artifact.logical_names.end());
        artifact.logical_names.erase(
            std::unique(artifact.logical_names.begin(), artifact.logical_names.end()),
            artifact.logical_names.end());
    }
    std::sort(out.artifacts_.begin(), out.artifacts_.end(), artifact_less);
    std::sort(out.edges_.begin(), out.edges_.end(), edge_less);
    std::sort(out.diagnostics_.begin(), out.diagnostics_.end(), diagnostic_less);
    out.diagnostics_.erase(
        std::unique(out.diagnostics_.begin(), out.diagnostics_.end()),
        out.diagnostics_.end());
    return out;
}

DependencyGraph merge(const std::vector<DependencyGraph>& graphs) {
    DependencyGraph out;
    for (const auto& graph : graphs) {
        for (const auto& artifact : graph.artifacts()) out.add_artifact(artifact);
    }
    for (const auto& graph : graphs) {
        for (const auto& edge : graph.edges()) {
            if (!out.has_edge(edge)) out.add_edge(edge);
        }
        out.add_diagnostics(graph.diagnostics());
    }
    return out.normalized();
}

}  // namespace jeedep
