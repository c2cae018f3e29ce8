#include "jeedep/url_resolve.hpp"

#include <algorithm>
#include <cctype>

namespace jeedep {
namespace {

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

/// Extension of the url's final path segment, empty when there is none.
std::string_view extension_of(std::string_view url) {
    size_t slash = url.find_last_of('/');
    std::string_view segment = slash == std::string_view::npos ? url : url.substr(slash + 1);
    size_t dot = segment.find_last_of('.');
    if (dot == std::string_view::npos || dot + 1 == segment.size()) return {};
    return segment.substr(dot + 1);
}

/// True when `prefix` is a path-segment prefix of `url` ("/foo" covers
/// "/foo" and "/foo/x" but not "/foobar").
bool segment_prefix(std::string_view prefix, std::string_view url) {
    if (!url.starts_with(prefix)) return false;
    return url.size() == prefix.size() || url[prefix.size()] == '/';
}

bool has_scheme(std::string_view raw) {
    if (raw.empty() || !std::isalpha(static_cast<unsigned char>(raw[0]))) return false;
    for (size_t i = 1; i < raw.size(); ++i) {
        char c = raw[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
            return false;
        }
    }
    return false;
}

}  // namespace

UrlPattern classify_pattern(std::string_view raw) {
    UrlPattern pattern;
    pattern.raw = std::string(raw);
    if (raw == "/*" || raw == "*") {
        pattern.shape = UrlPattern::Shape::Default;
        pattern.noncanonical = raw == "*";  // bare "*" is not standard
        return pattern;
    }
    if (raw.size() > 2 && raw.starts_with("*.")) {
        pattern.shape = UrlPattern::Shape::Extension;
        pattern.value = std::string(raw.substr(2));
        return pattern;
    }
    if (raw.starts_with("/") && raw.ends_with("/*")) {
        pattern.shape = UrlPattern::Shape::PathPrefix;
        pattern.value = std::string(raw.substr(0, raw.size() - 2));
        return pattern;
    }
    pattern.shape = UrlPattern::Shape::Exact;
    pattern.value = std::string(raw);
    pattern.noncanonical = !raw.starts_with("/");
    return pattern;
}

std::optional<ResolvedHandler> resolve(const std::string& url, const UrlMappingTable& table,
                                       const ResolveOptions& options) {
    for (const MappingEntry& entry : table.entries) {
        if (entry.pattern.shape == UrlPattern::Shape::Exact && entry.pattern.value == url) {
            return ResolvedHandler{entry.servlet_name, entry.pattern};
        }
    }

    const MappingEntry* best = nullptr;
    for (const MappingEntry& entry : table.entries) {
        if (entry.pattern.shape != UrlPattern::Shape::PathPrefix) continue;
        if (!segment_prefix(entry.pattern.value, url)) continue;
        if (!best || entry.pattern.value.size() > best->pattern.value.size()) {
            best = &entry;
        }
    }
    if (best) return ResolvedHandler{best->servlet_name, best->pattern};

    std::string_view ext = extension_of(url);
    if (!ext.empty()) {
        for (const MappingEntry& entry : table.entries) {
            if (entry.pattern.shape != UrlPattern::Shape::Extension) continue;
            bool matches = options.case_insensitive_extensions
                               ? iequals(entry.pattern.value, ext)
                               : entry.pattern.value == ext;
            if (matches) return ResolvedHandler{entry.servlet_name, entry.pattern};
        }
    }

    for (const MappingEntry& entry : table.entries) {
        if (entry.pattern.shape == UrlPattern::Shape::Default) {
            return ResolvedHandler{entry.servlet_name, entry.pattern};
        }
    }
    return std::nullopt;
}

NormalizedUrl normalize_url(std::string_view raw, std::string_view current_page_dir,
                            const std::optional<std::string>& context_path) {
    NormalizedUrl result;
    if (has_scheme(raw)) {
        result.external = true;
        result.value = std::string(raw);
        return result;
    }

    std::string_view path = raw.substr(0, raw.find_first_of("?#"));

    std::string joined;
    if (path.starts_with("/")) {
        joined = std::string(path);
        if (context_path && !context_path->empty() && segment_prefix(*context_path, joined)) {
            joined = joined.substr(context_path->size());
            if (joined.empty() || joined[0] != '/') joined.insert(joined.begin(), '/');
        }
    } else {
        std::string dir(current_page_dir);
        if (dir.empty() || dir[0] != '/') dir.insert(dir.begin(), '/');
        joined = dir == "/" ? "/" + std::string(path) : dir + "/" + std::string(path);
    }

    // Collapse dot segments; climbing above the root clamps to "/".
    std::vector<std::string> segments;
    bool escaped = false;
    size_t start = 1;  // joined always begins with '/'
    while (start <= joined.size()) {
        size_t slash = joined.find('/', start);
        std::string segment = slash == std::string::npos
                                  ? joined.substr(start)
                                  : joined.substr(start, slash - start);
        if (segment == "..") {
            if (segments.empty()) {
                escaped = true;
            } else {
                segments.pop_back();
            }
        } else if (!segment.empty() && segment != ".") {
            segments.push_back(std::move(segment));
        }
        if (slash == std::string::npos) break;
        start = slash + 1;
    }
    if (escaped) {
        result.value = "/";
        result.escaped_above_root = true;
        return result;
    }
    result.value = "/";
    for (size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) result.value += '/';
        result.value += segments[i];
    }
    return result;
}

}  // namespace jeedep
