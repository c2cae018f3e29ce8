#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jeedep/descriptor_scan.hpp"
#include "jeedep/java_scan.hpp"
#include "jeedep/model.hpp"
#include "jeedep/page_scan.hpp"
#include "jeedep/url_resolve.hpp"

namespace jeedep {

struct AnalysisConfig {
    /// Analysis root; treated as the web application root for URL matching.
    std::string root;
    /// Context-path prefix stripped from root-relative URLs when present.
    std::optional<std::string> context_path;
    bool case_insensitive_extensions = false;
    /// Keep edges whose target resolved to no artifact (UnresolvedUrl /
    /// unresolved BeanRef). Dynamic and external targets are always kept.
    bool include_unresolved = true;
    bool follow_symlinks = false;
    /// Per-file scanning concurrency: 1 = sequential, 0 = hardware default.
    /// The resulting graph is identical either way.
    int scan_threads = 0;
    /// Extension → kind overrides consulted before the built-in mapping
    /// (".jsp" → JspPage, ".xhtml" → JsfPage, ...). Extensions include the dot.
    std::vector<std::pair<std::string, ArtifactKind>> file_extension_map;
};

struct DiscoveredFile {
    std::string path;  // relative to root, forward slashes
    ArtifactKind kind = ArtifactKind::OtherJavaType;

    friend bool operator==(const DiscoveredFile&, const DiscoveredFile&) = default;
};

struct DiscoverResult {
    std::vector<DiscoveredFile> files;
    std::vector<Diagnostic> diagnostics;
};

/// Walks the tree under config.root and classifies every analyzable file.
/// Deterministic lexicographic order; .java files start as OtherJavaType
/// until their scan result upgrades them.
DiscoverResult discover(const AnalysisConfig& config);

struct DescriptorScanInfo {
    std::string path;
    WebXmlResult web_xml;
};

struct JavaScanInfo {
    std::string path;
    JavaScanResult result;
};

struct FacesConfigInfo {
    std::string path;
    FacesConfigResult faces;
};

struct PageScanInfo {
    std::string path;
    PageScanResult result;
};

/// Merges descriptor mappings (document order) and @WebServlet annotations
/// (path order) into one resolution table. The effective declaration per
/// servlet-name is the first one seen; later duplicates stay visible to
/// callers of parse_web_xml but do not win lookups. Noncanonical patterns
/// are reported through `diagnostics`.
UrlMappingTable build_mapping_table(const std::vector<DescriptorScanInfo>& descriptors,
                                    const std::vector<JavaScanInfo>& java_results,
                                    std::vector<Diagnostic>& diagnostics);

/// Bean name → class mapping with two scopes: global entries from
/// faces-config.xml and @ManagedBean, and page-scoped entries from
/// <jsp:useBean>, which shadow global names inside their page.
class BeanRegistry {
public:
    struct Entry {
        std::string bean_class;
        RegistrationSource::Kind source = RegistrationSource::Kind::ConfigFile;
        SourceLocation location;
    };

    /// Registers a global bean name. On collision the config-file entry is
    /// preferred (first-seen wins between equals) and DUP_BEAN_NAME is
    /// reported through `diagnostics`.
    void register_global(const std::string& name, Entry entry,
                         std::vector<Diagnostic>& diagnostics);
    void register_page_scoped(const std::string& page, const std::string& id,
                              const std::string& bean_class);

    struct Lookup {
        std::string bean_class;
        bool page_scoped = false;
    };
    /// Page-scoped ids shadow global names for references inside that page.
    std::optional<Lookup> lookup(const std::string& page, const std::string& name) const;

    const std::map<std::string, Entry>& global_entries() const { return global_; }

private:
    std::map<std::string, Entry> global_;
    std::map<std::pair<std::string, std::string>, std::string> page_scoped_;
};

BeanRegistry build_bean_registry(const std::vector<FacesConfigInfo>& faces_configs,
                                 const std::vector<JavaScanInfo>& java_results,
                                 const std::vector<PageScanInfo>& page_results,
                                 std::vector<Diagnostic>& diagnostics);

/// Runs the full pipeline: discover, scan (optionally concurrently), build
/// the mapping table and bean registry, resolve every raw reference, and
/// return the normalized graph. Total: problems become diagnostics.
DependencyGraph analyze_project(const AnalysisConfig& config);

}  // namespace jeedep
