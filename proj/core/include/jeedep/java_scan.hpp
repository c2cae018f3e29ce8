#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jeedep/model.hpp"

namespace jeedep {

/// Argument a dispatcher was obtained for: a string literal URL or anything
/// else (concatenation, variable, call), which we refuse to guess about.
struct UrlArg {
    enum class Kind { Literal, Dynamic };
    Kind kind = Kind::Dynamic;
    /// Literal: the exact (unescaped) string content. Dynamic: the reason.
    std::string value;

    static UrlArg literal(std::string content) {
        return {Kind::Literal, std::move(content)};
    }
    static UrlArg dynamic(std::string reason) {
        return {Kind::Dynamic, std::move(reason)};
    }

    friend bool operator==(const UrlArg&, const UrlArg&) = default;
};

/// One RequestDispatcher forward/include found in Java code. Chained means
/// getRequestDispatcher("...").forward(...) in a single expression;
/// TwoStatement means the dispatcher was bound to a local first and invoked
/// in a later statement of the same method body.
struct DispatcherCall {
    enum class Method { Forward, Include };
    enum class Scenario { TwoStatement, Chained };

    UrlArg url;
    Method method = Method::Forward;
    SourceLocation location;
    Scenario scenario = Scenario::Chained;

    friend bool operator==(const DispatcherCall&, const DispatcherCall&) = default;
};

/// The three JavaBeans characteristics, derived lexically: implements-clause
/// serializability, constructor shape, and getX/setX method-name pairing.
struct BeanTraits {
    bool is_serializable = false;
    bool has_no_arg_constructor = false;
    /// Property names (decapitalized) with both a getter and a setter,
    /// sorted alphabetically.
    std::vector<std::string> property_pairs;

    friend bool operator==(const BeanTraits&, const BeanTraits&) = default;
};

enum class ServletKind { HttpServlet, GenericServlet, NotAServlet };

std::string to_string(ServletKind kind);

struct WebServletPattern {
    std::string pattern;
    SourceLocation location;

    friend bool operator==(const WebServletPattern&, const WebServletPattern&) = default;
};

struct ManagedBeanAnnotation {
    std::string name;
    SourceLocation location;

    friend bool operator==(const ManagedBeanAnnotation&, const ManagedBeanAnnotation&) = default;
};

struct ManagedPropertyField {
    std::string field_name;
    /// The annotation's value string, usually an EL expression like "#{bean}".
    std::string value;
    SourceLocation location;

    friend bool operator==(const ManagedPropertyField&, const ManagedPropertyField&) = default;
};

struct JavaScanResult {
    /// Package declaration joined with the primary type name; empty when no
    /// type declaration was found.
    std::string type_name;
    ServletKind servlet_kind = ServletKind::NotAServlet;
    std::vector<WebServletPattern> web_servlet_patterns;
    std::optional<ManagedBeanAnnotation> managed_bean;
    std::vector<ManagedPropertyField> managed_properties;
    std::vector<DispatcherCall> dispatcher_calls;
    BeanTraits bean_traits;
};

struct JavaScanOutput {
    JavaScanResult result;
    std::vector<Diagnostic> diagnostics;
};

/// Lexically scans Java source. The source need not compile; comments and
/// string literals never produce findings. Never throws.
JavaScanOutput scan_java_source(std::string_view content, const std::string& path);

/// Dispatcher detection alone, for Java snippets embedded in pages
/// (scriptlets). base_line/base_column locate the snippet's first character
/// within the enclosing file so findings point into the page. Returned
/// locations carry line/column only; the caller owns the file path.
std::vector<DispatcherCall> find_dispatcher_calls(std::string_view code,
                                                  int base_line = 1,
                                                  int base_column = 1);

}  // namespace jeedep
