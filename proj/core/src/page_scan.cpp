#include "jeedep/page_scan.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace jeedep {
namespace {

std::string to_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

struct LineIndex {
    std::vector<size_t> line_starts;

    explicit LineIndex(std::string_view content) {
        line_starts.push_back(0);
        for (size_t i = 0; i < content.size(); ++i) {
            if (content[i] == '\n') line_starts.push_back(i + 1);
        }
    }

    std::pair<int, int> locate(size_t offset) const {
        auto after = std::upper_bound(line_starts.begin(), line_starts.end(), offset);
        size_t line = static_cast<size_t>(after - line_starts.begin()) - 1;
        return {static_cast<int>(line + 1),
                static_cast<int>(offset - line_starts[line] + 1)};
    }
};

struct TagAttr {
    std::string name;  // original case; look up case-insensitively
    std::string value;
    size_t value_offset = 0;
    bool has_value = false;
};

struct Tag {
    std::string name;  // raw, possibly prefixed
    std::vector<TagAttr> attrs;
    bool self_closing = false;
    bool unterminated = false;
    size_t offset = 0;  // of the '<'
};

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '.' ||
           c == '-' || c == '_';
}

/// Matching close brace of an EL expression starting at `open` (the '{'),
/// respecting quoted strings; `end` exclusive. Returns end when unbalanced.
size_t el_close(std::string_view src, size_t open, size_t end) {
    int depth = 0;
    char quote = 0;
    for (size_t i = open; i < end; ++i) {
        char c = src[i];
        if (quote) {
            if (c == '\\') ++i;
            else if (c == quote) quote = 0;
        } else if (c == '\'' || c == '"') {
            quote = c;
        } else if (c == '{') {
            ++depth;
        } else if (c == '}' && --depth == 0) {
            return i;
        }
    }
    return end;
}

/// True when the whole (trimmed) value is exactly one EL expression.
bool is_pure_el(std::string_view value) {
    std::string_view v = value;
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    if (v.size() < 3 || (v[0] != '$' && v[0] != '#') || v[1] != '{') return false;
    return el_close(v, 1, v.size()) == v.size() - 1;
}

bool contains_el(std::string_view value) {
    for (size_t i = 0; i + 1 < value.size(); ++i) {
        if ((value[i] == '$' || value[i] == '#') && value[i + 1] == '{') return true;
    }
    return false;
}

struct Scanner {
    std::string_view src;
    const std::string& path;
    LineIndex lines;
    PageScanResult result;
    /// Prefix bindings in effect (document order; later bindings overwrite).
    std::map<std::string, std::string, std::less<>> prefix_uris;
    /// Open mechanism tags whose <jsp:param>/<c:param> children we collect.
    struct Collector {
        size_t ref_index;
        std::string closing_name;
    };
    std::vector<Collector> collectors;

    Scanner(std::string_view content, const std::string& file_path)
        : src(content), path(file_path), lines(content) {}

    SourceLocation loc(size_t offset) const {
        auto [line, column] = lines.locate(offset);
        return {path, line, column};
    }

    void warn(const char* code, std::string message, size_t offset) {
        result.diagnostics.push_back(make_warning(code, std::move(message), loc(offset)));
    }

    bool starts(std::string_view prefix, size_t at) const {
        return src.substr(at, prefix.size()) == prefix;
    }

    // ---- EL collection -------------------------------------------------

    void collect_el(size_t begin, size_t end) {
        size_t i = begin;
        while (i + 1 < end) {
            char c = src[i];
            if ((c != '$' && c != '#') || src[i + 1] != '{' ||
                (i > 0 && src[i - 1] == '\\')) {
                ++i;
                continue;
            }
            size_t close = el_close(src, i + 1, end);
            size_t stop = close == end ? end : close + 1;
            result.el_expressions.push_back(
                {std::string(src.substr(i, stop - i)), loc(i)});
            i = stop;
        }
    }

    void collect_attr_el(const std::vector<TagAttr>& attrs) {
        for (const TagAttr& attr : attrs) {
            if (attr.has_value && contains_el(attr.value)) {
                collect_el(attr.value_offset, attr.value_offset + attr.value.size());
            }
        }
    }

    // ---- attribute parsing ----------------------------------------------

    enum class AttrMode { Tag, Directive };

    /// Parses attributes from `i` until the construct's terminator. Tag mode
    /// ends after '>' or '/>'; Directive mode after '%>'. A '<' interrupts
    /// either (unterminated construct; scanning resumes there).
    void parse_attrs(size_t& i, AttrMode mode, std::vector<TagAttr>& attrs,
                     bool& self_closing, bool& unterminated) {
        for (;;) {
            while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
            if (i >= src.size()) {
                unterminated = true;
                return;
            }
            char c = src[i];
            if (c == '<') {
                unterminated = true;
                return;
            }
            if (mode == AttrMode::Tag) {
                if (c == '>') {
                    ++i;
                    return;
                }
                if (c == '/' && i + 1 < src.size() && src[i + 1] == '>') {
                    self_closing = true;
                    i += 2;
                    return;
                }
            } else {
                if (c == '%' && i + 1 < src.size() && src[i + 1] == '>') {
                    i += 2;
                    return;
                }
                if (c == '>') {
                    ++i;
                    continue;
                }
            }
            TagAttr attr;
            while (i < src.size()) {
                char d = src[i];
                if (std::isspace(static_cast<unsigned char>(d)) || d == '=' || d == '>' ||
                    d == '<' || d == '/' || (mode == AttrMode::Directive && d == '%')) {
                    break;
                }
                attr.name += d;
                ++i;
            }
            if (attr.name.empty()) {
                ++i;  // junk character; keep going
                continue;
            }
            while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
            if (i < src.size() && src[i] == '=') {
                ++i;
                while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
                attr.has_value = true;
                if (i < src.size() && (src[i] == '"' || src[i] == '\'')) {
                    char quote = src[i++];
                    attr.value_offset = i;
                    while (i < src.size() && src[i] != quote) attr.value += src[i++];
                    if (i < src.size()) ++i;  // closing quote
                    else unterminated = true;
                } else {
                    attr.value_offset = i;
                    while (i < src.size()) {
                        char d = src[i];
                        if (std::isspace(static_cast<unsigned char>(d)) || d == '>' ||
                            d == '<' || (d == '/' && i + 1 < src.size() && src[i + 1] == '>') ||
                            (mode == AttrMode::Directive && d == '%' && i + 1 < src.size() &&
                             src[i + 1] == '>')) {
                            break;
                        }
                        attr.value += d;
                        ++i;
                    }
                }
            }
            attrs.push_back(std::move(attr));
            if (unterminated && i >= src.size()) return;
        }
    }

    static const TagAttr* find_attr(const std::vector<TagAttr>& attrs, std::string_view name) {
        for (const TagAttr& attr : attrs) {
            if (attr.has_value && to_lower(attr.name) == name) return &attr;
        }
        return nullptr;
    }

    // ---- reference emission ----------------------------------------------

    /// Emits a URL-typed mechanism ref unless the value is a single EL
    /// expression (then the EL occurrence, collected separately, is the whole
    /// finding). Returns the ref index or SIZE_MAX when nothing was emitted.
    size_t emit_url_ref(EdgeKind kind, const TagAttr& url_attr, size_t tag_offset,
                        std::vector<std::pair<std::string, std::string>> attributes = {}) {
        if (url_attr.value.empty() || is_pure_el(url_attr.value)) return SIZE_MAX;
        RawPageRef ref;
        ref.mechanism = kind;
        ref.url_or_name = url_attr.value;
        ref.attributes = std::move(attributes);
        ref.location = loc(tag_offset);
        result.refs.push_back(std::move(ref));
        return result.refs.size() - 1;
    }

    void push_collector(size_t ref_index, const Tag& tag) {
        if (ref_index == SIZE_MAX || tag.self_closing || tag.unterminated) return;
        collectors.push_back({ref_index, tag.name});
    }

    void append_param(const Tag& tag) {
        if (collectors.empty()) return;
        const TagAttr* name = find_attr(tag.attrs, "name");
        const TagAttr* value = find_attr(tag.attrs, "value");
        if (!name) return;
        result.refs[collectors.back().ref_index].params.emplace_back(
            name->value, value ? value->value : std::string{});
    }

    // ---- constructs -------------------------------------------------------

    void handle_scriptlet_body(std::string_view body, size_t body_offset) {
        auto [line, column] = lines.locate(body_offset);
        for (DispatcherCall call : find_dispatcher_calls(body, line, column)) {
            call.location.file_path = path;
            result.scriptlet_findings.push_back(std::move(call));
        }
    }

    void handle_directive(size_t start, size_t& i) {
        i = start + 3;
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
        std::string name;
        while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) {
            name += src[i++];
        }
        std::vector<TagAttr> attrs;
        bool self_closing = false;
        bool unterminated = false;
        parse_attrs(i, AttrMode::Directive, attrs, self_closing, unterminated);
        if (unterminated) {
            warn(diag::kUnterminatedConstruct, "directive is never closed with '%>'", start);
        }
        collect_attr_el(attrs);

        std::string lowered = to_lower(name);
        if (lowered == "taglib") {
            const TagAttr* prefix = find_attr(attrs, "prefix");
            const TagAttr* uri = find_attr(attrs, "uri");
            if (prefix && uri && !prefix->value.empty() && !uri->value.empty()) {
                result.bindings.push_back({prefix->value, uri->value,
                                           NamespaceBinding::Source::TaglibDirective,
                                           loc(start)});
                prefix_uris[prefix->value] = uri->value;
            }
        } else if (lowered == "include") {
            if (const TagAttr* file = find_attr(attrs, "file")) {
                emit_url_ref(EdgeKind::IncludeDirective, *file, start);
            }
        } else if (lowered == "page") {
            if (const TagAttr* error_page = find_attr(attrs, "errorpage")) {
                emit_url_ref(EdgeKind::ErrorPageDirective, *error_page, start);
            }
        }
    }

    void handle_jsp_tag(const Tag& tag, const std::string& local, size_t& i) {
        if (local == "include") {
            const TagAttr* page = find_attr(tag.attrs, "page");
            const TagAttr* file = page ? nullptr : find_attr(tag.attrs, "file");
            if (!page && file) {
                warn(diag::kNonstandardAttribute,
                     "<jsp:include> addressed by 'file=' instead of the standard 'page='",
                     tag.offset);
            }
            const TagAttr* url = page ? page : file;
            if (!url) return;
            std::vector<std::pair<std::string, std::string>> attributes;
            if (const TagAttr* flush = find_attr(tag.attrs, "flush")) {
                attributes.emplace_back("flush", flush->value);
            }
            push_collector(
                emit_url_ref(EdgeKind::JspIncludeAction, *url, tag.offset, std::move(attributes)),
                tag);
        } else if (local == "forward") {
            if (const TagAttr* page = find_attr(tag.attrs, "page")) {
                push_collector(emit_url_ref(EdgeKind::JspForwardAction, *page, tag.offset), tag);
            }
        } else if (local == "param") {
            append_param(tag);
        } else if (local == "useBean") {
            const TagAttr* id = find_attr(tag.attrs, "id");
            const TagAttr* class_attr = find_attr(tag.attrs, "class");
            if (!class_attr) class_attr = find_attr(tag.attrs, "type");
            if (!id || !class_attr || class_attr->value.empty()) return;
            const TagAttr* scope = find_attr(tag.attrs, "scope");
            std::string scope_value = scope ? scope->value : "page";
            RawPageRef ref;
            ref.mechanism = EdgeKind::UseBean;
            ref.url_or_name = class_attr->value;
            ref.attributes = {{"id", id->value}, {"scope", scope_value}};
            ref.location = loc(tag.offset);
            result.refs.push_back(std::move(ref));
            result.use_beans.push_back(
                {id->value, class_attr->value, scope_value, loc(tag.offset)});
        } else if (local == "getProperty" || local == "setProperty") {
            const TagAttr* name = find_attr(tag.attrs, "name");
            const TagAttr* property = find_attr(tag.attrs, "property");
            if (!name || !property) return;
            if (property->value == "*") return;  // bulk set: no single property edge
            RawPageRef ref;
            ref.mechanism = local == "getProperty" ? EdgeKind::BeanGetProperty
                                                   : EdgeKind::BeanSetProperty;
            ref.url_or_name = name->value;
            ref.attributes.emplace_back("property", property->value);
            if (local == "setProperty") {
                if (const TagAttr* value = find_attr(tag.attrs, "value")) {
                    ref.attributes.emplace_back("value", value->value);
                }
            }
            ref.location = loc(tag.offset);
            result.refs.push_back(std::move(ref));
        } else if (local == "directive.include") {
            if (const TagAttr* file = find_attr(tag.attrs, "file")) {
                emit_url_ref(EdgeKind::IncludeDirective, *file, tag.offset);
            }
        } else if (local == "directive.page") {
            if (const TagAttr* error_page = find_attr(tag.attrs, "errorpage")) {
                emit_url_ref(EdgeKind::ErrorPageDirective, *error_page, tag.offset);
            }
        } else if (local == "scriptlet") {
            if (tag.self_closing) return;
            size_t close = src.find("</jsp:scriptlet", i);
            size_t body_end = close == std::string_view::npos ? src.size() : close;
            handle_scriptlet_body(src.substr(i, body_end - i), i);
            if (close == std::string_view::npos) {
                warn(diag::kUnterminatedConstruct, "<jsp:scriptlet> is never closed", tag.offset);
                i = src.size();
            } else {
                size_t gt = src.find('>', close);
                i = gt == std::string_view::npos ? src.size() : gt + 1;
            }
        }
    }

    /// JSTL core and JSF HTML tags, recognized through whatever prefix is
    /// bound to their URIs. The conventional prefixes "c" and "h" are honored
    /// without a binding, with a warning.
    void handle_prefixed_tag(const Tag& tag, const std::string& prefix,
                             const std::string& local) {
        std::string_view uri;
        auto bound = prefix_uris.find(prefix);
        bool declared = bound != prefix_uris.end();
        if (declared) {
            uri = bound->second;
        } else if (prefix == "c") {
            uri = kJstlCoreUri;
        } else if (prefix == "h") {
            uri = kJsfHtmlUri;
        } else {
            return;  // some other taglib; not ours
        }

        auto warn_undeclared = [&] {
            if (declared) return;
            warn(diag::kUndeclaredTaglibPrefix,
                 "tag prefix '" + prefix + "' has no taglib declaration; assuming " +
                     std::string(uri),
                 tag.offset);
        };

        if (uri == kJstlCoreUri) {
            if (local == "redirect") {
                warn_undeclared();
                if (const TagAttr* url = find_attr(tag.attrs, "url")) {
                    push_collector(emit_url_ref(EdgeKind::JstlRedirect, *url, tag.offset), tag);
                }
            } else if (local == "url") {
                warn_undeclared();
                if (const TagAttr* value = find_attr(tag.attrs, "value")) {
                    std::vector<std::pair<std::string, std::string>> attributes;
                    if (const TagAttr* var = find_attr(tag.attrs, "var")) {
                        attributes.emplace_back("var", var->value);
                    }
                    push_collector(emit_url_ref(EdgeKind::JstlUrl, *value, tag.offset,
                                                std::move(attributes)),
                                   tag);
                }
            } else if (local == "param") {
                warn_undeclared();
                append_param(tag);
            }
        } else if (uri == kJsfHtmlUri) {
            if (local != "commandButton" && local != "commandLink") return;
            warn_undeclared();
            const TagAttr* action = find_attr(tag.attrs, "action");
            if (!action) return;
            std::vector<std::pair<std::string, std::string>> attributes;
            for (const TagAttr& attr : tag.attrs) {
                if (to_lower(attr.name) == "action" || !attr.has_value) continue;
                attributes.emplace_back(attr.name, attr.value);
            }
            emit_url_ref(local == "commandButton" ? EdgeKind::JsfCommandButton
                                                  : EdgeKind::JsfCommandLink,
                         *action, tag.offset, std::move(attributes));
        }
    }

    void handle_tag(const Tag& tag, size_t& i) {
        // Namespace bindings first so a tag can bind prefixes for itself.
        for (const TagAttr& attr : tag.attrs) {
            if (attr.has_value && attr.name.starts_with("xmlns:") && attr.name.size() > 6 &&
                !attr.value.empty()) {
                std::string prefix = attr.name.substr(6);
                result.bindings.push_back({prefix, attr.value,
                                           NamespaceBinding::Source::XmlNamespaceAttr,
                                           loc(tag.offset)});
                prefix_uris[prefix] = attr.value;
            }
        }
        collect_attr_el(tag.attrs);

        size_t colon = tag.name.find(':');
        if (colon == std::string::npos) {
            std::string lowered = to_lower(tag.name);
            if (lowered == "form") {
                if (const TagAttr* action = find_attr(tag.attrs, "action")) {
                    const TagAttr* method = find_attr(tag.attrs, "method");
                    emit_url_ref(EdgeKind::HtmlFormAction, *action, tag.offset,
                                 {{"method", method ? to_lower(method->value) : "get"}});
                }
            } else if (lowered == "a") {
                const TagAttr* href = find_attr(tag.attrs, "href");
                bool fragment_only =
                    href && href->value.starts_with("#") && !href->value.starts_with("#{");
                if (href && !fragment_only) {
                    emit_url_ref(EdgeKind::HrefLink, *href, tag.offset);
                }
            }
            return;
        }
        std::string prefix = tag.name.substr(0, colon);
        std::string local = tag.name.substr(colon + 1);
        if (prefix == "jsp") {
            handle_jsp_tag(tag, local, i);
        } else {
            handle_prefixed_tag(tag, prefix, local);
        }
    }

    // ---- main loop ---------------------------------------------------------

    void run() {
        size_t i = 0;
        size_t text_start = 0;
        while (i < src.size()) {
            if (src[i] != '<') {
                ++i;
                continue;
            }
            collect_el(text_start, i);
            if (starts("<!--", i)) {
                size_t end = src.find("-->", i + 4);
                if (end == std::string_view::npos) {
                    warn(diag::kUnterminatedConstruct, "HTML comment is never closed", i);
                    i = src.size();
                } else {
                    i = end + 3;
                }
            } else if (starts("<%--", i)) {
                size_t end = src.find("--%>", i + 4);
                if (end == std::string_view::npos) {
                    warn(diag::kUnterminatedConstruct, "JSP comment is never closed", i);
                    i = src.size();
                } else {
                    i = end + 4;
                }
            } else if (starts("<%@", i)) {
                handle_directive(i, i);
            } else if (starts("<%", i)) {
                size_t body_start = i + 2;
                if (body_start < src.size() &&
                    (src[body_start] == '=' || src[body_start] == '!')) {
                    ++body_start;
                }
                size_t end = src.find("%>", body_start);
                size_t body_end = end == std::string_view::npos ? src.size() : end;
                handle_scriptlet_body(src.substr(body_start, body_end - body_start),
                                      body_start);
                if (end == std::string_view::npos) {
                    warn(diag::kUnterminatedConstruct, "scriptlet is never closed with '%>'", i);
                    i = src.size();
                } else {
                    i = end + 2;
                }
            } else if (starts("<![CDATA[", i)) {
                size_t end = src.find("]]>", i + 9);
                size_t body_end = end == std::string_view::npos ? src.size() : end;
                collect_el(i + 9, body_end);
                i = end == std::string_view::npos ? src.size() : end + 3;
            } else if (starts("<!", i) || starts("<?", i)) {
                size_t end = src.find('>', i);
                i = end == std::string_view::npos ? src.size() : end + 1;
            } else if (starts("</", i)) {
                size_t j = i + 2;
                std::string name;
                while (j < src.size() && is_name_char(src[j])) name += src[j++];
                while (j < src.size() && src[j] != '>' && src[j] != '<') ++j;
                if (j < src.size() && src[j] == '>') ++j;
                if (!collectors.empty() && collectors.back().closing_name == name) {
                    collectors.pop_back();
                }
                i = j;
            } else if (i + 1 < src.size() && is_name_start(src[i + 1])) {
                Tag tag;
                tag.offset = i;
                size_t j = i + 1;
                while (j < src.size() && is_name_char(src[j])) tag.name += src[j++];
                parse_attrs(j, AttrMode::Tag, tag.attrs, tag.self_closing, tag.unterminated);
                if (tag.unterminated) {
                    warn(diag::kUnterminatedConstruct,
                         "tag <" + tag.name + "> is never closed with '>'", i);
                }
                i = j;
                handle_tag(tag, i);
            } else {
                ++i;  // stray '<' is ordinary text
            }
            text_start = i;
        }
        collect_el(text_start, src.size());
    }
};

}  // namespace

PageScanResult scan_page(std::string_view content, const std::string& path,
                         ArtifactKind kind) {
    (void)kind;
    Scanner scanner(content, path);
    scanner.run();
    return std::move(scanner.result);
}

}  // namespace jeedep
