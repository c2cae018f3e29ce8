#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jeedep/model.hpp"

namespace jeedep {

/// What a servlet-name is declared to execute: a servlet class or a JSP file.
struct ServletTarget {
    enum class Kind { Class, JspFile };
    Kind kind = Kind::Class;
    std::string value;

    static ServletTarget java_class(std::string fqcn) {
        return {Kind::Class, std::move(fqcn)};
    }
    static ServletTarget jsp_file(std::string path) {
        return {Kind::JspFile, std::move(path)};
    }

    friend bool operator==(const ServletTarget&, const ServletTarget&) = default;
};

struct ServletDeclaration {
    std::string servlet_name;
    ServletTarget target;
    std::vector<std::pair<std::string, std::string>> init_params;
    SourceLocation location;
};

struct ServletMapping {
    std::string servlet_name;
    std::vector<std::string> url_patterns;
    SourceLocation location;
};

struct RegistrationSource {
    enum class Kind { ConfigFile, Annotation };
    Kind kind = Kind::ConfigFile;
    SourceLocation location;
};

struct ManagedBeanRegistration {
    std::string bean_name;
    std::string bean_class;
    RegistrationSource source;
    /// (property name, EL value string) pairs in document order.
    std::vector<std::pair<std::string, std::string>> properties;
};

struct WebXmlResult {
    std::vector<ServletDeclaration> declarations;
    std::vector<ServletMapping> mappings;
    std::vector<Diagnostic> diagnostics;
};

struct FacesConfigResult {
    std::vector<ManagedBeanRegistration> registrations;
    std::vector<Diagnostic> diagnostics;
};

/// Parses a web.xml deployment descriptor. Accepts both the standard grammar
/// (one declaration per <servlet> element) and the looser form where several
/// <servlet-name>/<servlet-class>/<jsp-file> groups interleave inside one
/// element: each <servlet-name> occurrence starts a new declaration.
/// Never throws; malformed XML yields MALFORMED_XML plus whatever parsed.
WebXmlResult parse_web_xml(std::string_view content, const std::string& path);

/// Parses faces-config.xml managed-bean registrations. Entries missing a name
/// or class are skipped with INCOMPLETE_MANAGED_BEAN.
FacesConfigResult parse_faces_config(std::string_view content, const std::string& path);

}  // namespace jeedep
