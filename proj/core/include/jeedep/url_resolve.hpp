#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jeedep/descriptor_scan.hpp"
#include "jeedep/model.hpp"

namespace jeedep {

/// A URL pattern classified into the four matching shapes. Classification is
/// total: anything that fits no canonical shape becomes Exact with the
/// noncanonical flag raised (the caller decides whether to warn).
struct UrlPattern {
    enum class Shape { Exact, PathPrefix, Extension, Default };

    std::string raw;
    Shape shape = Shape::Exact;
    /// Exact: the full path. PathPrefix: the prefix without the trailing
    /// "/*". Extension: the extension without the leading "*.".
    std::string value;
    bool noncanonical = false;

    friend bool operator==(const UrlPattern&, const UrlPattern&) = default;
};

UrlPattern classify_pattern(std::string_view raw);

struct MappingEntry {
    enum class Origin { Descriptor, Annotation };

    UrlPattern pattern;
    std::string servlet_name;
    Origin origin = Origin::Descriptor;
    SourceLocation location;
};

/// Merged view of descriptor and annotation URL mappings. Entry order is the
/// resolution tie-break order: descriptor entries in document order first,
/// then annotation entries. The declarations map keeps the effective target
/// per servlet-name: the first declaration wins when a name is declared more
/// than once (later declarations are reported, not honored).
struct UrlMappingTable {
    std::vector<MappingEntry> entries;
    std::unordered_map<std::string, ServletTarget> declarations;
};

struct ResolveOptions {
    bool case_insensitive_extensions = false;
};

struct ResolvedHandler {
    std::string servlet_name;
    UrlPattern pattern;
};

/// Which declared handler serves `url`? Precedence: exact match, then the
/// longest path-segment prefix, then extension, then the default pattern.
/// Ties break by table entry order. Returns nullopt when nothing matches.
std::optional<ResolvedHandler> resolve(const std::string& url, const UrlMappingTable& table,
                                       const ResolveOptions& options = {});

/// A reference URL after normalization: either an in-application absolute
/// path (starts with '/') or an external URL kept verbatim.
struct NormalizedUrl {
    bool external = false;
    std::string value;
    /// True when dot-segments tried to climb above the root and the path was
    /// clamped to "/"; the caller owes a PATH_ESCAPE warning.
    bool escaped_above_root = false;
};

/// Strips query/fragment, detects scheme-qualified (external) URLs, joins
/// page-relative URLs onto the referencing page's directory, collapses dot
/// segments, and strips a configured context-path prefix.
NormalizedUrl normalize_url(std::string_view raw, std::string_view current_page_dir,
                            const std::optional<std::string>& context_path = {});

}  // namespace jeedep
