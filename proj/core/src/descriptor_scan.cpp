#include "jeedep/descriptor_scan.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "jeedep/xml.hpp"

namespace jeedep {
namespace {

SourceLocation at(const std::string& path, const xml::Element& element) {
    return {path, element.line, element.column};
}

bool ends_with_jsp_suffix(std::string_view value) {
    static constexpr std::string_view kSuffix = ".jsp";
    if (value.size() < kSuffix.size()) return false;
    auto tail = value.substr(value.size() - kSuffix.size());
    return std::equal(tail.begin(), tail.end(), kSuffix.begin(), kSuffix.end(),
                      [](char a, char b) {
                          return std::tolower(static_cast<unsigned char>(a)) == b;
                      });
}

std::string child_text(const xml::Element& element, std::string_view local) {
    const xml::Element* child = element.child(local);
    return child ? xml::trim(child->text) : std::string{};
}

void report_parse_issues(const xml::ParseResult& parsed, const std::string& path,
                         std::vector<Diagnostic>& diagnostics) {
    for (const xml::Issue& issue : parsed.issues) {
        diagnostics.push_back(make_error(diag::kMalformedXml, issue.message,
                                         SourceLocation{path, issue.line, issue.column}));
    }
}

}  // namespace

WebXmlResult parse_web_xml(std::string_view content, const std::string& path) {
    WebXmlResult result;
    xml::ParseResult parsed = xml::parse(content);
    report_parse_issues(parsed, path, result.diagnostics);

    // Declarations. Children of each <servlet> element are segmented by
    // <servlet-name> occurrence, so both the standard one-declaration form and
    // the packed multi-declaration form come out the same way.
    for (const xml::Element* servlet : xml::find_all(parsed.root, "servlet")) {
        ServletDeclaration current;
        bool open = false;
        bool has_target = false;
        auto flush = [&] {
            if (open && !current.servlet_name.empty() && has_target) {
                result.declarations.push_back(std::move(current));
            }
            current = {};
            open = false;
            has_target = false;
        };
        for (const xml::Element& child : servlet->children) {
            std::string local = child.local_name();
            if (local == "servlet-name") {
                flush();
                current.servlet_name = xml::trim(child.text);
                current.location = at(path, child);
                open = true;
            } else if (!open) {
                continue;  // target/param before any servlet-name: nothing to attach to
            } else if (local == "servlet-class") {
                if (has_target) continue;
                current.target = ServletTarget::java_class(xml::trim(child.text));
                has_target = true;
            } else if (local == "jsp-file") {
                if (has_target) continue;
                std::string value = xml::trim(child.text);
                // A jsp-file naming a plain Java type (no '/', no .jsp suffix)
                // is really a class declaration in disguise.
                if (value.find('/') == std::string::npos && !ends_with_jsp_suffix(value)) {
                    current.target = ServletTarget::java_class(value);
                    result.diagnostics.push_back(make_warning(
                        diag::kReclassifiedTarget,
                        "<jsp-file> value '" + value +
                            "' names a Java type, not a page; treating it as a servlet class",
                        at(path, child)));
                } else {
                    current.target = ServletTarget::jsp_file(value);
                }
                has_target = true;
            } else if (local == "init-param") {
                std::string name = child_text(child, "param-name");
                std::string value = child_text(child, "param-value");
                if (!name.empty()) {
                    current.init_params.emplace_back(std::move(name), std::move(value));
                }
            }
        }
        flush();
    }

    // Duplicate names: every declaration after the first with the same name
    // gets a warning. All declarations are still returned; which one a lookup
    // table prefers is the table builder's call.
    std::unordered_set<std::string> seen;
    for (const ServletDeclaration& decl : result.declarations) {
        if (!seen.insert(decl.servlet_name).second) {
            result.diagnostics.push_back(make_warning(
                diag::kDupServletName,
                "servlet-name '" + decl.servlet_name + "' is declared more than once",
                decl.location));
        }
    }

    // Mappings, segmented the same way. Consecutive groups naming the same
    // servlet merge into one mapping so a name mapped pattern-by-pattern
    // still comes out as a single multi-pattern entry.
    for (const xml::Element* mapping : xml::find_all(parsed.root, "servlet-mapping")) {
        ServletMapping current;
        bool open = false;
        auto flush = [&] {
            if (open && !current.servlet_name.empty() && !current.url_patterns.empty()) {
                if (!result.mappings.empty() &&
                    result.mappings.back().servlet_name == current.servlet_name) {
                    auto& prev = result.mappings.back().url_patterns;
                    prev.insert(prev.end(), current.url_patterns.begin(),
                                current.url_patterns.end());
                } else {
                    result.mappings.push_back(std::move(current));
                }
            }
            current = {};
            open = false;
        };
        for (const xml::Element& child : mapping->children) {
            std::string local = child.local_name();
            if (local == "servlet-name") {
                flush();
                current.servlet_name = xml::trim(child.text);
                current.location = at(path, child);
                open = true;
            } else if (local == "url-pattern" && open) {
                std::string pattern = xml::trim(child.text);
                if (!pattern.empty()) current.url_patterns.push_back(std::move(pattern));
            }
        }
        flush();
    }

    for (const ServletMapping& mapping : result.mappings) {
        if (!seen.contains(mapping.servlet_name)) {
            result.diagnostics.push_back(make_warning(
                diag::kUnknownServletName,
                "servlet-mapping refers to undeclared servlet-name '" +
                    mapping.servlet_name + "'",
                mapping.location));
        }
    }
    return result;
}

FacesConfigResult parse_faces_config(std::string_view content, const std::string& path) {
    FacesConfigResult result;
    xml::ParseResult parsed = xml::parse(content);
    report_parse_issues(parsed, path, result.diagnostics);

    for (const xml::Element* bean : xml::find_all(parsed.root, "managed-bean")) {
        ManagedBeanRegistration registration;
        registration.bean_name = child_text(*bean, "managed-bean-name");
        registration.bean_class = child_text(*bean, "managed-bean-class");
        registration.source = {RegistrationSource::Kind::ConfigFile, at(path, *bean)};
        if (registration.bean_name.empty() || registration.bean_class.empty()) {
            result.diagnostics.push_back(make_warning(
                diag::kIncompleteManagedBean,
                "managed-bean entry missing its name or class; entry skipped",
                at(path, *bean)));
            continue;
        }
        for (const xml::Element& child : bean->children) {
            if (child.local_name() != "managed-property") continue;
            std::string name = child_text(child, "property-name");
            std::string value = child_text(child, "value");
            if (!name.empty()) {
                registration.properties.emplace_back(std::move(name), std::move(value));
            }
        }
        result.registrations.push_back(std::move(registration));
    }
    return result;
}

}  // namespace jeedep
