#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jeedep/java_scan.hpp"
#include "jeedep/model.hpp"

namespace jeedep {

/// A mechanism detected in page text, before URL/bean resolution.
/// url_or_name holds the raw target: a URL for navigation mechanisms, a class
/// name for useBean, a bean id for get/setProperty.
struct RawPageRef {
    EdgeKind mechanism = EdgeKind::HrefLink;
    std::string url_or_name;
    /// Nested <jsp:param>/<c:param> children in document order.
    std::vector<std::pair<std::string, std::string>> params;
    /// Mechanism-specific extras (form method, flush, var, id, scope, ...).
    std::vector<std::pair<std::string, std::string>> attributes;
    SourceLocation location;

    friend bool operator==(const RawPageRef&, const RawPageRef&) = default;
};

/// Prefix-to-URI binding from an xmlns attribute or a taglib directive.
struct NamespaceBinding {
    enum class Source { XmlNamespaceAttr, TaglibDirective };

    std::string prefix;
    std::string uri;
    Source source = Source::TaglibDirective;
    SourceLocation location;

    friend bool operator==(const NamespaceBinding&, const NamespaceBinding&) = default;
};

/// One ${...} / #{...} occurrence, recorded raw for the EL parser.
struct ElOccurrence {
    std::string raw;
    SourceLocation location;

    friend bool operator==(const ElOccurrence&, const ElOccurrence&) = default;
};

/// One <jsp:useBean> declaration; scope defaults to "page" when absent.
struct UseBeanDecl {
    std::string id;
    std::string class_name;
    std::string scope;
    SourceLocation location;

    friend bool operator==(const UseBeanDecl&, const UseBeanDecl&) = default;
};

struct PageScanResult {
    std::vector<RawPageRef> refs;
    std::vector<NamespaceBinding> bindings;
    /// Dispatcher calls found inside scriptlet bodies, located in the page.
    std::vector<DispatcherCall> scriptlet_findings;
    std::vector<ElOccurrence> el_expressions;
    std::vector<UseBeanDecl> use_beans;
    std::vector<Diagnostic> diagnostics;
};

inline constexpr std::string_view kJstlCoreUri = "http://java.sun.com/jsp/jstl/core";
inline constexpr std::string_view kJsfHtmlUri = "http://java.sun.com/jsf/html";

/// Scans one JSP/JSF/HTML page with a tolerant tag lexer (pages are rarely
/// well-formed XML). kind selects nothing today — every construct is
/// recognized everywhere — but states what the caller classified the file as.
/// Never throws.
PageScanResult scan_page(std::string_view content, const std::string& path,
                         ArtifactKind kind);

}  // namespace jeedep
