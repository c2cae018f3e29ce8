#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace oracle {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

enum class Shape { Exact, Prefix, Extension, Default, Odd };

Shape shape_of(const std::string& raw) {
    if (raw == "/*" || raw == "*") return Shape::Default;
    if (raw.size() >= 2 && raw[0] == '*' && raw[1] == '.') return Shape::Extension;
    if (!raw.empty() && raw[0] == '/' && raw.size() >= 2 && raw.ends_with("/*"))
        return Shape::Prefix;
    if (!raw.empty() && raw[0] == '/') return Shape::Exact;
    return Shape::Odd;  // matches only by raw equality, like an exact pattern
}

std::string url_extension(const std::string& url) {
    size_t slash = url.rfind('/');
    std::string last = slash == std::string::npos ? url : url.substr(slash + 1);
    size_t dot = last.rfind('.');
    if (dot == std::string::npos) return {};
    return last.substr(dot + 1);
}

}  // namespace

std::optional<std::string> resolve_url(
    const std::string& url, const std::vector<std::pair<std::string, std::string>>& entries,
    bool case_insensitive_extensions) {
    // Exact matches, in entry order.
    for (const auto& [pattern, name] : entries) {
        Shape shape = shape_of(pattern);
        if ((shape == Shape::Exact || shape == Shape::Odd) && url == pattern) return name;
    }
    // Longest path-segment prefix; earliest entry among equals.
    std::optional<std::string> best;
    size_t best_length = 0;
    for (const auto& [pattern, name] : entries) {
        if (shape_of(pattern) != Shape::Prefix) continue;
        std::string prefix = pattern.substr(0, pattern.size() - 2);  // drop "/*"
        bool matches = url == prefix || url.starts_with(prefix + "/");
        if (matches && (!best || prefix.size() > best_length)) {
            best = name;
            best_length = prefix.size();
        }
    }
    if (best) return best;
    // Extension matches, in entry order.
    std::string ext = url_extension(url);
    if (!ext.empty()) {
        for (const auto& [pattern, name] : entries) {
            if (shape_of(pattern) != Shape::Extension) continue;
            std::string want = pattern.substr(2);
            bool matches = case_insensitive_extensions ? iequals(ext, want) : ext == want;
            if (matches) return name;
        }
    }
    // Default pattern, in entry order.
    for (const auto& [pattern, name] : entries)
        if (shape_of(pattern) == Shape::Default) return name;
    return std::nullopt;
}

UrlCase random_url_case(std::mt19937& rng) {
    static const std::array<std::string, 6> kSegments = {"app", "x", "page", "dir", "a", "run"};
    static const std::array<std::string, 7> kFiles = {
        "index.jsp", "page.JSP", "home.html", "run.do", "x.y.jsp", "trader", "a.DO"};
    static const std::array<std::string, 5> kExtensions = {"jsp", "JSP", "html", "do", "xhtml"};

    auto pick = [&](const auto& pool) -> std::string {
        return pool[rng() % pool.size()];
    };
    auto random_path = [&](bool allow_file) {
        std::string path;
        int segments = static_cast<int>(rng() % 3);
        for (int i = 0; i < segments; ++i) path += "/" + pick(kSegments);
        if (allow_file && rng() % 2 == 0) path += "/" + pick(kFiles);
        if (path.empty()) path = "/" + pick(kSegments);
        return path;
    };

    UrlCase out;
    out.case_insensitive_extensions = rng() % 4 == 0;
    size_t count = 1 + rng() % 8;
    for (size_t i = 0; i < count; ++i) {
        std::string name = "servlet" + std::to_string(i);
        switch (rng() % 5) {
            case 0: out.entries.emplace_back(random_path(true), name); break;          // exact
            case 1: out.entries.emplace_back(random_path(false) + "/*", name); break;  // prefix
            case 2: out.entries.emplace_back("*." + pick(kExtensions), name); break;   // extension
            case 3: out.entries.emplace_back(rng() % 3 == 0 ? "*" : "/*", name); break;
            default:
                // Duplicate an earlier pattern to exercise entry-order ties.
                out.entries.emplace_back(out.entries.empty() ? random_path(true)
                                                             : out.entries[rng() % out.entries.size()].first,
                                         name);
                break;
        }
    }
    // The probe URL: sometimes built from a chosen pattern so collisions and
    // near-misses actually occur, sometimes independent.
    switch (rng() % 4) {
        case 0: {
            const std::string& pattern = out.entries[rng() % out.entries.size()].first;
            Shape shape = shape_of(pattern);
            if (shape == Shape::Prefix) {
                out.url = pattern.substr(0, pattern.size() - 2);
                if (rng() % 2 == 0) out.url += "/" + pick(kFiles);
            } else if (shape == Shape::Extension) {
                out.url = random_path(false) + "/file." + pattern.substr(2);
            } else if (shape == Shape::Exact || shape == Shape::Odd) {
                out.url = pattern;
            } else {
                out.url = random_path(true);
            }
            break;
        }
        default: out.url = random_path(true); break;
    }
    if (out.url.empty() || out.url[0] != '/') out.url = "/" + out.url;
    return out;
}

// ---------------------------------------------------------------------------
// EL oracle: independent tokenizer + recursive-descent chain extraction.

namespace {

struct ElToken {
    enum class Kind { Ident, String, Number, Punct };
    Kind kind = Kind::Punct;
    std::string text;     // verbatim
    std::string content;  // decoded (String only)
    size_t pos = 0;
};

bool el_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool el_ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

std::vector<ElToken> el_tokenize(std::string_view src) {
    std::vector<ElToken> tokens;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        ElToken token;
        token.pos = i;
        if (el_ident_start(c)) {
            token.kind = ElToken::Kind::Ident;
            while (i < src.size() && el_ident_part(src[i])) token.text += src[i++];
        } else if (c == '\'' || c == '"') {
            token.kind = ElToken::Kind::String;
            char quote = c;
            token.text += src[i++];
            while (i < src.size()) {
                char d = src[i];
                token.text += d;
                if (d == '\\' && i + 1 < src.size()) {
                    token.text += src[i + 1];
                    token.content += src[i + 1];
                    i += 2;
                    continue;
                }
                ++i;
                if (d == quote) break;
                token.content += d;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            token.kind = ElToken::Kind::Number;
            while (i < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.'))
                token.text += src[i++];
        } else {
            token.kind = ElToken::Kind::Punct;
            token.text = std::string(1, c);
            ++i;
        }
        tokens.push_back(std::move(token));
    }
    return tokens;
}

bool el_reserved(const std::string& word) {
    static const std::array<std::string_view, 16> kWords = {
        "and", "or", "not", "empty", "null", "true", "false", "eq",
        "ne",  "lt", "gt",  "le",    "ge",   "div",  "mod",   "instanceof"};
    return std::find(kWords.begin(), kWords.end(), word) != kWords.end();
}

bool el_implicit(const std::string& word) {
    static const std::array<std::string_view, 8> kObjects = {
        "param",     "header", "sessionScope", "requestScope",
        "pageScope", "applicationScope", "cookie", "initParam"};
    return std::find(kObjects.begin(), kObjects.end(), word) != kObjects.end();
}

struct ElOracle {
    const std::vector<ElToken>& tokens;
    // (source position, serialized chain, implicit) collected in parse order.
    std::vector<std::tuple<size_t, std::string, bool>> found;

    size_t close_of(size_t open, std::string_view opener, std::string_view closer) const {
        int depth = 0;
        for (size_t i = open; i < tokens.size(); ++i) {
            if (tokens[i].kind != ElToken::Kind::Punct) continue;
            if (tokens[i].text == opener) ++depth;
            if (tokens[i].text == closer && --depth == 0) return i;
        }
        return tokens.size();
    }

    void scan(size_t begin, size_t end) {
        for (size_t i = begin; i < end;) {
            const ElToken& token = tokens[i];
            if (token.kind != ElToken::Kind::Ident || el_reserved(token.text)) {
                ++i;
                continue;
            }
            if (i > begin && tokens[i - 1].text == "." &&
                tokens[i - 1].kind == ElToken::Kind::Punct) {
                ++i;
                continue;
            }
            if (i + 1 < end && tokens[i + 1].text == ":") {
                i += 2;  // function namespace prefix
                continue;
            }
            if (i + 1 < end && tokens[i + 1].text == "(") {
                ++i;  // plain function call; its arguments are scanned normally
                continue;
            }
            i = chain(i, end);
        }
    }

    size_t chain(size_t i, size_t end) {
        size_t pos = tokens[i].pos;
        std::string text = tokens[i].text;
        bool implicit = el_implicit(tokens[i].text);
        ++i;
        for (;;) {
            if (i + 1 < end && tokens[i].text == "." &&
                tokens[i + 1].kind == ElToken::Kind::Ident) {
                std::string name = tokens[i + 1].text;
                if (i + 2 < end && tokens[i + 2].text == "(") {
                    size_t close = close_of(i + 2, "(", ")");
                    if (close >= end) {
                        text += "." + name;
                        i = end;
                        break;
                    }
                    text += "." + name + "(" + arguments(i + 3, close) + ")";
                    i = close + 1;
                } else {
                    text += "." + name;
                    i += 2;
                }
            } else if (i < end && tokens[i].text == "[" &&
                       tokens[i].kind == ElToken::Kind::Punct) {
                size_t close = close_of(i, "[", "]");
                if (close >= end) {
                    i = end;
                    break;
                }
                if (close == i + 2 && tokens[i + 1].kind == ElToken::Kind::String) {
                    text += "." + tokens[i + 1].content;
                    i = close + 1;
                } else {
                    scan(i + 1, close);  // dynamic subscript ends the chain
                    i = close + 1;
                    break;
                }
            } else {
                break;
            }
        }
        found.emplace_back(pos, std::move(text), implicit);
        return i;
    }

    /// Serializes a method argument list: literal args verbatim, anything
    /// else joined from its raw tokens with single spaces (and mined for
    /// nested chains).
    std::string arguments(size_t begin, size_t close) {
        std::string out;
        size_t arg_start = begin;
        bool first = true;
        auto flush = [&](size_t arg_end) {
            if (arg_end == arg_start) return;
            if (!first) out += ", ";
            first = false;
            if (arg_end == arg_start + 1 && (tokens[arg_start].kind == ElToken::Kind::String ||
                                             tokens[arg_start].kind == ElToken::Kind::Number)) {
                out += tokens[arg_start].text;
                return;
            }
            std::string joined;
            for (size_t k = arg_start; k < arg_end; ++k) {
                if (!joined.empty()) joined += ' ';
                joined += tokens[k].text;
            }
            out += joined;
            scan(arg_start, arg_end);
        };
        int depth = 0;
        for (size_t i = begin; i < close; ++i) {
            if (tokens[i].kind != ElToken::Kind::Punct) continue;
            if (tokens[i].text == "(" || tokens[i].text == "[") ++depth;
            else if (tokens[i].text == ")" || tokens[i].text == "]") --depth;
            else if (tokens[i].text == "," && depth == 0) {
                flush(i);
                arg_start = i + 1;
            }
        }
        flush(close);
        return out;
    }
};

}  // namespace

std::vector<std::pair<std::string, bool>> el_references(const std::string& raw) {
    std::string_view inner;
    if (raw.size() >= 3 && (raw.starts_with("${") || raw.starts_with("#{")) &&
        raw.ends_with("}"))
        inner = std::string_view(raw).substr(2, raw.size() - 3);
    else
        return {};
    std::vector<ElToken> tokens = el_tokenize(inner);
    ElOracle oracle{tokens, {}};
    oracle.scan(0, tokens.size());
    std::stable_sort(oracle.found.begin(), oracle.found.end(),
                     [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    std::vector<std::pair<std::string, bool>> out;
    out.reserve(oracle.found.size());
    for (auto& [pos, text, implicit] : oracle.found) out.emplace_back(text, implicit);
    return out;
}

// ---------------------------------------------------------------------------
// Random EL expression generator.

namespace {

struct ElGenerator {
    std::mt19937& rng;
    std::string out;
    int depth = 0;

    std::string ident() {
        static const std::array<std::string, 10> kNames = {
            "student", "trader", "cart",  "order", "firstName",
            "total",   "item",   "buy",   "size",  "user"};
        return kNames[rng() % kNames.size()];
    }
    std::string implicit_name() {
        static const std::array<std::string, 4> kNames = {"param", "header", "sessionScope",
                                                          "cookie"};
        return kNames[rng() % kNames.size()];
    }
    void space() {
        if (rng() % 3 == 0) out += ' ';
    }

    void literal() {
        switch (rng() % 4) {
            case 0: out += std::to_string(rng() % 1000); break;
            case 1: out += "'" + ident() + "'"; break;
            case 2: out += "true"; break;
            default: out += "null"; break;
        }
    }

    void argument() {
        switch (rng() % 3) {
            case 0: out += "'" + ident() + "'"; break;
            case 1: out += std::to_string(rng() % 100); break;
            default: chain(); break;  // dynamic argument with a nested chain
        }
    }

    void segment() {
        out += "." + ident();
        if (rng() % 3 == 0 && depth < 3) {
            ++depth;
            out += "(";
            int args = static_cast<int>(rng() % 3);
            for (int i = 0; i < args; ++i) {
                if (i > 0) out += rng() % 2 == 0 ? ", " : ",";
                argument();
            }
            out += ")";
            --depth;
        }
    }

    void chain() {
        out += rng() % 6 == 0 ? implicit_name() : ident();
        int segments = static_cast<int>(rng() % 3);
        for (int i = 0; i < segments; ++i) {
            if (rng() % 5 == 0) {
                out += "['" + ident() + "']";
            } else {
                segment();
            }
        }
    }

    void term() {
        switch (rng() % 6) {
            case 0: literal(); break;
            case 1:
                if (depth < 3) {
                    ++depth;
                    out += "(";
                    body();
                    out += ")";
                    --depth;
                } else {
                    chain();
                }
                break;
            case 2:
                out += "not ";
                chain();
                break;
            case 3:
                if (depth < 3) {
                    ++depth;
                    out += "fn:length(";
                    chain();
                    out += ")";
                    --depth;
                } else {
                    chain();
                }
                break;
            default: chain(); break;
        }
    }

    void body() {
        static const std::array<std::string, 8> kOps = {"+", "-", "*", "==", " and ",
                                                        " or ", " lt ", " ge "};
        term();
        int more = static_cast<int>(rng() % 3);
        for (int i = 0; i < more; ++i) {
            space();
            out += kOps[rng() % kOps.size()];
            space();
            term();
        }
    }
};

}  // namespace

std::string random_el_expression(std::mt19937& rng) {
    ElGenerator generator{rng, rng() % 2 == 0 ? "${" : "#{"};
    generator.body();
    generator.out += "}";
    return generator.out;
}

// ---------------------------------------------------------------------------
// Random graph generator.

jeedep::DependencyGraph random_graph(std::mt19937& rng) {
    using namespace jeedep;
    static const std::array<ArtifactKind, 8> kArtifactKinds = {
        ArtifactKind::ServletClass,   ArtifactKind::JspPage,     ArtifactKind::JsfPage,
        ArtifactKind::HtmlPage,       ArtifactKind::BeanClass,   ArtifactKind::DeploymentDescriptor,
        ArtifactKind::FacesConfig,    ArtifactKind::OtherJavaType};

    DependencyGraph graph;
    size_t artifact_count = 1 + rng() % 6;
    std::vector<std::string> ids;
    for (size_t i = 0; i < artifact_count; ++i) {
        Artifact artifact;
        artifact.id = "dir" + std::to_string(rng() % 3) + "/file" + std::to_string(i) + ".x";
        artifact.kind = kArtifactKinds[rng() % kArtifactKinds.size()];
        artifact.path = artifact.id;
        size_t names = rng() % 3;
        for (size_t n = 0; n < names; ++n)
            artifact.logical_names.push_back("name" + std::to_string(rng() % 5));
        ids.push_back(artifact.id);
        graph.add_artifact(std::move(artifact));
    }

    size_t edge_count = rng() % 10;
    for (size_t i = 0; i < edge_count; ++i) {
        DependencyEdge edge;
        edge.source = ids[rng() % ids.size()];
        switch (rng() % 5) {
            case 0: edge.target = TargetRef::resolved(ids[rng() % ids.size()]); break;
            case 1: edge.target = TargetRef::unresolved_url("/u" + std::to_string(rng() % 9)); break;
            case 2: edge.target = TargetRef::dynamic_url("reason " + std::to_string(rng() % 9)); break;
            case 3:
                edge.target = TargetRef::bean("bean" + std::to_string(rng() % 5),
                                              rng() % 2 == 0 ? "" : "prop" + std::to_string(rng() % 5));
                break;
            default:
                edge.target = TargetRef::external("http://host/p" + std::to_string(rng() % 9));
                break;
        }
        edge.kind = static_cast<EdgeKind>(rng() % kEdgeKindCount);
        edge.location = {ids[rng() % ids.size()], static_cast<int>(1 + rng() % 200),
                         static_cast<int>(1 + rng() % 80)};
        size_t params = rng() % 3;
        for (size_t p = 0; p < params; ++p)
            edge.params.emplace_back("p" + std::to_string(p), "v" + std::to_string(rng() % 9));
        size_t attrs = rng() % 3;
        for (size_t a = 0; a < attrs; ++a)
            edge.attributes.emplace_back("k" + std::to_string(a), "w" + std::to_string(rng() % 9));
        graph.add_edge(std::move(edge));
    }

    size_t diagnostic_count = rng() % 4;
    for (size_t i = 0; i < diagnostic_count; ++i) {
        Diagnostic diagnostic;
        diagnostic.severity = rng() % 2 == 0 ? Severity::Warning : Severity::Error;
        diagnostic.code = rng() % 2 == 0 ? diag::kMalformedXml : diag::kIoError;
        diagnostic.message = "message " + std::to_string(rng() % 100);
        if (rng() % 2 == 0)
            diagnostic.location = SourceLocation{ids[rng() % ids.size()],
                                                 static_cast<int>(1 + rng() % 100), 1};
        graph.add_diagnostic(std::move(diagnostic));
    }
    return graph.normalized();
}

}  // namespace oracle
