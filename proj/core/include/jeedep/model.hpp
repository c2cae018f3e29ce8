#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace jeedep {

/// Position of a finding inside a scanned file. Paths are relative to the
/// analysis root and always use forward slashes; line and column are 1-based.
struct SourceLocation {
    std::string file_path;
    int line = 1;
    int column = 1;

    friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

bool location_less(const SourceLocation& a, const SourceLocation& b);

enum class ArtifactKind {
    ServletClass,
    JspPage,
    JsfPage,
    HtmlPage,
    BeanClass,
    DeploymentDescriptor,
    FacesConfig,
    OtherJavaType,
};

std::string to_string(ArtifactKind kind);
std::optional<ArtifactKind> artifact_kind_from_string(const std::string& name);

/// One analyzable unit: a servlet class, page, bean class, or configuration
/// file. The id is the project-relative path, which keeps ids deterministic
/// across runs and machines.
struct Artifact {
    std::string id;
    ArtifactKind kind = ArtifactKind::OtherJavaType;
    std::string path;
    /// Names the artifact answers to: fully-qualified type name, servlet-name
    /// entries, registered bean names.
    std::vector<std::string> logical_names;

    friend bool operator==(const Artifact&, const Artifact&) = default;
};

enum class EdgeKind {
    DispatchForward,
    DispatchInclude,
    HtmlFormAction,
    JspIncludeAction,
    IncludeDirective,
    JspForwardAction,
    JstlRedirect,
    JstlUrl,
    ScriptletDispatchForward,
    ScriptletDispatchInclude,
    ErrorPageDirective,
    JsfCommandButton,
    JsfCommandLink,
    HrefLink,
    UseBean,
    BeanGetProperty,
    BeanSetProperty,
    ElReference,
    ManagedPropertyInjection,
    UrlMapping,
};

inline constexpr int kEdgeKindCount = 20;

std::string to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(const std::string& name);

/// Where an edge points. ResolvedArtifact carries the id of an artifact in
/// the owning graph; the other variants describe references that could not be
/// tied to a discovered artifact.
struct TargetRef {
    enum class Variant {
        ResolvedArtifact,
        UnresolvedUrl,
        DynamicUrl,
        BeanRef,
        ExternalUrl,
    };

    Variant variant = Variant::UnresolvedUrl;
    /// Artifact id, normalized URL, dynamic-URL reason, bean name, or
    /// absolute URL depending on the variant.
    std::string value;
    /// BeanRef only: dotted member path ("firstName", "buy('X')").
    std::string member;

    static TargetRef resolved(std::string artifact_id);
    static TargetRef unresolved_url(std::string url);
    static TargetRef dynamic_url(std::string reason);
    static TargetRef bean(std::string name, std::string member_path = {});
    static TargetRef external(std::string url);

    friend bool operator==(const TargetRef&, const TargetRef&) = default;
};

std::string to_string(TargetRef::Variant variant);
std::optional<TargetRef::Variant> target_variant_from_string(const std::string& name);

/// A detected communication mechanism. params preserves the document order of
/// nested parameter tags; attributes holds mechanism-specific extras such as
/// the form method or dispatcher scenario.
struct DependencyEdge {
    std::string source;
    TargetRef target;
    EdgeKind kind = EdgeKind::UrlMapping;
    SourceLocation location;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> attributes;

    friend bool operator==(const DependencyEdge&, const DependencyEdge&) = default;
};

/// Two edges are duplicates iff (source, target, kind, location) are equal.
bool same_edge_identity(const DependencyEdge& a, const DependencyEdge& b);

enum class Severity { Warning, Error };

std::string to_string(Severity severity);
std::optional<Severity> severity_from_string(const std::string& name);

// The closed set of diagnostic codes this analyzer emits.
namespace diag {
inline constexpr const char* kMalformedXml = "MALFORMED_XML";
inline constexpr const char* kUnknownServletName = "UNKNOWN_SERVLET_NAME";
inline constexpr const char* kDupServletName = "DUP_SERVLET_NAME";
inline constexpr const char* kReclassifiedTarget = "RECLASSIFIED_TARGET";
inline constexpr const char* kIncompleteManagedBean = "INCOMPLETE_MANAGED_BEAN";
inline constexpr const char* kUnbalancedSource = "UNBALANCED_SOURCE";
inline constexpr const char* kUndeclaredTaglibPrefix = "UNDECLARED_TAGLIB_PREFIX";
inline constexpr const char* kUnterminatedConstruct = "UNTERMINATED_CONSTRUCT";
inline constexpr const char* kNonstandardAttribute = "NONSTANDARD_ATTRIBUTE";
inline constexpr const char* kMalformedEl = "MALFORMED_EL";
inline constexpr const char* kNoncanonicalPattern = "NONCANONICAL_PATTERN";
inline constexpr const char* kPathEscape = "PATH_ESCAPE";
inline constexpr const char* kDupBeanName = "DUP_BEAN_NAME";
inline constexpr const char* kArtifactKindConflict = "ARTIFACT_KIND_CONFLICT";
inline constexpr const char* kIoError = "IO_ERROR";
}  // namespace diag

struct Diagnostic {
    Severity severity = Severity::Warning;
    std::string code;
    std::string message;
    std::optional<SourceLocation> location;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic make_warning(std::string code, std::string message,
                        std::optional<SourceLocation> location = {});
Diagnostic make_error(std::string code, std::string message,
                      std::optional<SourceLocation> location = {});

/// The dependency graph: artifacts, typed edges, and the problems found along
/// the way. Mutation never fails except for the programming error of adding an
/// edge whose source artifact was never registered.
class DependencyGraph {
public:
    /// Registers an artifact. A second registration with the same id merges
    /// logical names when kinds agree; a kind conflict keeps the first-seen
    /// kind and records an Error diagnostic.
    void add_artifact(Artifact artifact);

    /// Inserts an edge; duplicate insertion (same source, target, kind,
    /// location) is a no-op. Throws std::logic_error if the source artifact
    /// is unknown -- the public pipeline never triggers this.
    void add_edge(DependencyEdge edge);

    void add_diagnostic(Diagnostic diagnostic);
    void add_diagnostics(std::vector<Diagnostic> diagnostics);

    const Artifact* find_artifact(const std::string& id) const;
    bool has_edge(const DependencyEdge& edge) const;

    const std::vector<Artifact>& artifacts() const { return artifacts_; }
    std::vector<Artifact>& artifacts() { return artifacts_; }
    const std::vector<DependencyEdge>& edges() const { return edges_; }
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

    /// Canonical form: artifacts sorted by (kind, path) with sorted unique
    /// logical names, edges by (source path, location, kind), diagnostics by
    /// location. Serialization always goes through this.
    DependencyGraph normalized() const;

    friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;

private:
    std::vector<Artifact> artifacts_;
    std::vector<DependencyEdge> edges_;
    std::vector<Diagnostic> diagnostics_;
};

/// Union of partial graphs produced from the same analysis root: duplicates
/// removed, diagnostics concatenated, result normalized.
DependencyGraph merge(const std::vector<DependencyGraph>& graphs);

}  // namespace jeedep
