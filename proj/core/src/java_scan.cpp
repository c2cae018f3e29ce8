#include "jeedep/java_scan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace jeedep {

std::string to_string(ServletKind kind) {
    switch (kind) {
        case ServletKind::HttpServlet: return "HttpServlet";
        case ServletKind::GenericServlet: return "GenericServlet";
        case ServletKind::NotAServlet: return "NotAServlet";
    }
    return "NotAServlet";
}

namespace {

struct Token {
    enum class Kind { Identifier, String, Char, Number, Punct };
    Kind kind = Kind::Punct;
    std::string text;  // decoded content for String/Char tokens
    int line = 1;
    int column = 1;

    bool is(std::string_view t) const { return text == t; }
    bool is_ident() const { return kind == Kind::Identifier; }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

/// Comment- and string-aware token scanner. Tracks 1-based line/column from
/// the given base so embedded snippets report positions in their host file.
struct Tokenizer {
    std::string_view src;
    size_t pos = 0;
    int line;
    int column;

    Tokenizer(std::string_view s, int base_line, int base_column)
        : src(s), line(base_line), column(base_column) {}

    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    void advance() {
        if (pos >= src.size()) return;
        if (src[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }
    void advance_n(size_t n) {
        while (n-- > 0) advance();
    }
    bool starts_with(std::string_view s) const {
        return src.substr(pos, s.size()) == s;
    }

    void skip_space_and_comments() {
        for (;;) {
            while (pos < src.size() &&
                   std::isspace(static_cast<unsigned char>(src[pos]))) {
                advance();
            }
            if (starts_with("//")) {
                while (pos < src.size() && src[pos] != '\n') advance();
            } else if (starts_with("/*")) {
                advance_n(2);
                while (pos < src.size() && !starts_with("*/")) advance();
                advance_n(2);
            } else {
                return;
            }
        }
    }

    std::string read_string_body(char quote) {
        std::string out;
        while (pos < src.size() && src[pos] != quote && src[pos] != '\n') {
            if (src[pos] == '\\') {
                advance();
                char esc = peek();
                switch (esc) {
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    case 'b': out += '\b'; break;
                    case 'f': out += '\f'; break;
                    case '0': out += '\0'; break;
                    case 'u': {
                        advance();  // past 'u'
                        unsigned code = 0;
                        int digits = 0;
                        while (digits < 4 && std::isxdigit(static_cast<unsigned char>(peek()))) {
                            code = code * 16 + (std::isdigit(static_cast<unsigned char>(peek()))
                                                    ? peek() - '0'
                                                    : (std::tolower(peek()) - 'a' + 10));
                            advance();
                            ++digits;
                        }
                        // Keep it simple: only BMP escapes, encoded as UTF-8.
                        if (code < 0x80) {
                            out += static_cast<char>(code);
                        } else if (code < 0x800) {
                            out += static_cast<char>(0xC0 | (code >> 6));
                            out += static_cast<char>(0x80 | (code & 0x3F));
                        } else {
                            out += static_cast<char>(0xE0 | (code >> 12));
                            out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                            out += static_cast<char>(0x80 | (code & 0x3F));
                        }
                        continue;  // advance already done
                    }
                    default: out += esc; break;
                }
                advance();
            } else {
                out += src[pos];
                advance();
            }
        }
        if (pos < src.size() && src[pos] == quote) advance();  // closing quote
        return out;
    }

    std::vector<Token> run() {
        std::vector<Token> tokens;
        for (;;) {
            skip_space_and_comments();
            if (pos >= src.size()) break;
            Token token;
            token.line = line;
            token.column = column;
            char c = src[pos];
            if (ident_start(c)) {
                token.kind = Token::Kind::Identifier;
                while (pos < src.size() && ident_part(src[pos])) {
                    token.text += src[pos];
                    advance();
                }
            } else if (c == '"') {
                token.kind = Token::Kind::String;
                if (starts_with("\"\"\"")) {  // text block
                    advance_n(3);
                    std::string out;
                    while (pos < src.size() && !starts_with("\"\"\"")) {
                        out += src[pos];
                        advance();
                    }
                    advance_n(3);
                    token.text = std::move(out);
                } else {
                    advance();
                    token.text = read_string_body('"');
                }
            } else if (c == '\'') {
                token.kind = Token::Kind::Char;
                advance();
                token.text = read_string_body('\'');
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                token.kind = Token::Kind::Number;
                while (pos < src.size() &&
                       (ident_part(src[pos]) || src[pos] == '.')) {
                    token.text += src[pos];
                    advance();
                }
            } else {
                token.kind = Token::Kind::Punct;
                token.text = std::string(1, c);
                advance();
            }
            tokens.push_back(std::move(token));
        }
        return tokens;
    }
};

/// Index of the token matching the opener at `open` ("(" / "{" / "["),
/// or tokens.size() when unbalanced.
size_t matching_close(const std::vector<Token>& tokens, size_t open) {
    const std::string& opener = tokens[open].text;
    std::string closer = opener == "(" ? ")" : opener == "{" ? "}" : "]";
    int depth = 0;
    for (size_t i = open; i < tokens.size(); ++i) {
        if (tokens[i].kind != Token::Kind::Punct) continue;
        if (tokens[i].text == opener) ++depth;
        else if (tokens[i].text == closer && --depth == 0) return i;
    }
    return tokens.size();
}

std::string decapitalize(std::string name) {
    if (!name.empty()) {
        name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    }
    return name;
}

/// Last simple name of a dotted chain starting at `i`; advances `i` past it.
std::string read_type_chain(const std::vector<Token>& tokens, size_t& i) {
    std::string last;
    while (i < tokens.size() && tokens[i].is_ident()) {
        last = tokens[i].text;
        ++i;
        if (i < tokens.size() && tokens[i].is(".")) {
            ++i;
        } else {
            break;
        }
    }
    return last;
}

/// Skips a balanced generic argument list if `i` sits on '<'.
void skip_generics(const std::vector<Token>& tokens, size_t& i) {
    if (i >= tokens.size() || !tokens[i].is("<")) return;
    int depth = 0;
    while (i < tokens.size()) {
        if (tokens[i].is("<")) ++depth;
        else if (tokens[i].is(">") && --depth == 0) {
            ++i;
            return;
        }
        ++i;
    }
}

/// Annotation arguments between parens: extracts string values for the
/// elements named in `wanted`, plus the positional shorthand value. Nested
/// structures in unrelated elements are skipped balanced.
std::vector<std::pair<std::string, SourceLocation>> annotation_strings(
    const std::vector<Token>& tokens, size_t open_paren, size_t close_paren,
    const std::set<std::string>& wanted) {
    std::vector<std::pair<std::string, SourceLocation>> out;
    size_t i = open_paren + 1;
    auto collect_element = [&](size_t& j) {
        if (j >= close_paren) return;
        if (tokens[j].kind == Token::Kind::String) {
            out.emplace_back(tokens[j].text, SourceLocation{"", tokens[j].line, tokens[j].column});
            ++j;
        } else if (tokens[j].is("{")) {
            size_t end = matching_close(tokens, j);
            for (size_t k = j + 1; k < end && k < close_paren; ++k) {
                if (tokens[k].kind == Token::Kind::String) {
                    out.emplace_back(tokens[k].text,
                                     SourceLocation{"", tokens[k].line, tokens[k].column});
                }
            }
            j = end == tokens.size() ? close_paren : end + 1;
        }
    };
    auto skip_element = [&](size_t& j) {
        int depth = 0;
        while (j < close_paren) {
            if (tokens[j].is("(") || tokens[j].is("{") || tokens[j].is("[")) ++depth;
            else if (tokens[j].is(")") || tokens[j].is("}") || tokens[j].is("]")) --depth;
            else if (tokens[j].is(",") && depth == 0) return;
            ++j;
        }
    };
    while (i < close_paren) {
        if (tokens[i].is_ident() && i + 1 < close_paren && tokens[i + 1].is("=")) {
            std::string element = tokens[i].text;
            i += 2;
            if (wanted.contains(element)) {
                collect_element(i);
            }
            skip_element(i);
        } else {
            // Positional shorthand (the annotation's `value` element).
            if (wanted.contains("value")) {
                size_t j = i;
                collect_element(j);
            }
            skip_element(i);
        }
        if (i < close_paren && tokens[i].is(",")) ++i;
    }
    return out;
}

DispatcherCall::Method method_of(const std::string& name) {
    return name == "forward" ? DispatcherCall::Method::Forward
                             : DispatcherCall::Method::Include;
}

/// Dispatcher pass over a token stream: chained calls plus local-variable
/// bindings used in a later statement ("two-statement" form). Bindings are
/// scoped to their brace depth and the most recent assignment wins.
std::vector<DispatcherCall> dispatcher_pass(const std::vector<Token>& tokens) {
    std::vector<DispatcherCall> calls;
    struct Binding {
        UrlArg url;
        int depth = 0;
    };
    std::map<std::string, Binding> bindings;
    int depth = 0;

    auto url_of_args = [&](size_t open_paren, size_t close_paren) -> UrlArg {
        if (close_paren == open_paren + 2 &&
            tokens[open_paren + 1].kind == Token::Kind::String) {
            return UrlArg::literal(tokens[open_paren + 1].text);
        }
        return UrlArg::dynamic("non-literal URL");
    };

    for (size_t i = 0; i < tokens.size(); ++i) {
        const Token& token = tokens[i];
        if (token.is("{")) {
            ++depth;
            continue;
        }
        if (token.is("}")) {
            --depth;
            std::erase_if(bindings, [&](const auto& entry) {
                return entry.second.depth > depth;
            });
            continue;
        }
        if (!token.is_ident()) continue;

        if (token.text == "getRequestDispatcher" && i + 1 < tokens.size() &&
            tokens[i + 1].is("(")) {
            size_t close = matching_close(tokens, i + 1);
            if (close >= tokens.size()) continue;  // unterminated call
            UrlArg url = url_of_args(i + 1, close);
            // Chained: ...getRequestDispatcher("u").forward(request, response)
            if (close + 3 < tokens.size() && tokens[close + 1].is(".") &&
                tokens[close + 2].is_ident() &&
                (tokens[close + 2].text == "forward" || tokens[close + 2].text == "include") &&
                tokens[close + 3].is("(")) {
                calls.push_back({url, method_of(tokens[close + 2].text),
                                 {"", tokens[close + 2].line, tokens[close + 2].column},
                                 DispatcherCall::Scenario::Chained});
                i = close + 3;
                continue;
            }
            // Binding: walk back over the receiver chain to find `name =`.
            size_t j = i;
            while (j > 0 && tokens[j - 1].is(".")) {
                j -= 1;  // onto '.'
                if (j == 0) break;
                if (tokens[j - 1].is(")")) {
                    // Receiver is a call: find its opening paren backwards.
                    int bal = 0;
                    size_t k = j - 1;
                    for (;; --k) {
                        if (tokens[k].is(")")) ++bal;
                        else if (tokens[k].is("(") && --bal == 0) break;
                        if (k == 0) break;
                    }
                    if (bal != 0 || k == 0) { j = 0; break; }
                    j = k;  // onto '('
                    if (j > 0 && tokens[j - 1].is_ident()) --j;
                } else if (tokens[j - 1].is_ident()) {
                    --j;
                } else {
                    break;
                }
            }
            if (j > 1 && tokens[j - 1].is("=") && tokens[j - 2].is_ident()) {
                bindings[tokens[j - 2].text] = {url, depth};
            }
            i = close;
            continue;
        }

        // Use of a bound dispatcher local: name.forward(...) / name.include(...)
        if (i + 3 < tokens.size() && tokens[i + 1].is(".") && tokens[i + 2].is_ident() &&
            (tokens[i + 2].text == "forward" || tokens[i + 2].text == "include") &&
            tokens[i + 3].is("(")) {
            auto found = bindings.find(token.text);
            if (found != bindings.end()) {
                calls.push_back({found->second.url, method_of(tokens[i + 2].text),
                                 {"", tokens[i + 2].line, tokens[i + 2].column},
                                 DispatcherCall::Scenario::TwoStatement});
                i += 3;
            }
        }
    }
    return calls;
}

bool balanced_braces(const std::vector<Token>& tokens) {
    int depth = 0;
    for (const Token& token : tokens) {
        if (token.is("{")) ++depth;
        else if (token.is("}") && --depth < 0) return false;
    }
    return depth == 0;
}

}  // namespace

std::vector<DispatcherCall> find_dispatcher_calls(std::string_view code, int base_line,
                                                  int base_column) {
    Tokenizer tokenizer(code, base_line, base_column);
    return dispatcher_pass(tokenizer.run());
}

JavaScanOutput scan_java_source(std::string_view content, const std::string& path) {
    JavaScanOutput output;
    JavaScanResult& result = output.result;

    Tokenizer tokenizer(content, 1, 1);
    std::vector<Token> tokens = tokenizer.run();

    if (!balanced_braces(tokens)) {
        output.diagnostics.push_back(make_warning(
            diag::kUnbalancedSource,
            "unbalanced braces; results for this file are best-effort",
            SourceLocation{path, 1, 1}));
    }

    // Package declaration.
    std::string package_name;
    for (size_t i = 0; i + 1 < tokens.size(); ++i) {
        if (!tokens[i].is_ident() || tokens[i].text != "package") continue;
        std::string joined;
        size_t j = i + 1;
        while (j < tokens.size() && tokens[j].is_ident()) {
            joined += tokens[j].text;
            ++j;
            if (j < tokens.size() && tokens[j].is(".")) {
                joined += '.';
                ++j;
            } else {
                break;
            }
        }
        package_name = joined;
        break;
    }

    // Primary type: the first type declaration at brace depth zero.
    std::string simple_name;
    size_t body_open = tokens.size();
    {
        int depth = 0;
        for (size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i].is("{")) ++depth;
            else if (tokens[i].is("}")) --depth;
            if (depth != 0 || !tokens[i].is_ident()) continue;
            const std::string& t = tokens[i].text;
            if (t != "class" && t != "interface" && t != "enum" && t != "record") continue;
            if (i > 0 && (tokens[i - 1].is(".") || tokens[i - 1].is("@"))) continue;
            if (i + 1 < tokens.size() && tokens[i + 1].is_ident()) {
                simple_name = tokens[i + 1].text;
                size_t j = i + 2;
                skip_generics(tokens, j);

                // extends / implements clauses of this declaration.
                while (j < tokens.size() && !tokens[j].is("{")) {
                    if (tokens[j].is_ident() && tokens[j].text == "extends") {
                        ++j;
                        std::string super = read_type_chain(tokens, j);
                        skip_generics(tokens, j);
                        if (super == "HttpServlet") {
                            result.servlet_kind = ServletKind::HttpServlet;
                        } else if (super == "GenericServlet") {
                            result.servlet_kind = ServletKind::GenericServlet;
                        }
                    } else if (tokens[j].is_ident() && tokens[j].text == "implements") {
                        ++j;
                        while (j < tokens.size() && tokens[j].is_ident()) {
                            std::string iface = read_type_chain(tokens, j);
                            skip_generics(tokens, j);
                            if (iface == "Serializable") {
                                result.bean_traits.is_serializable = true;
                            }
                            if (j < tokens.size() && tokens[j].is(",")) ++j;
                            else break;
                        }
                    } else {
                        ++j;
                    }
                }
                body_open = j;
            }
            break;
        }
    }
    if (!simple_name.empty()) {
        result.type_name =
            package_name.empty() ? simple_name : package_name + "." + simple_name;
    }

    // Annotations anywhere in the file. @WebServlet and @ManagedBean describe
    // the primary type; @ManagedProperty marks the field that follows it.
    std::optional<std::string> managed_bean_explicit_name;
    std::optional<SourceLocation> managed_bean_location;
    for (size_t i = 0; i + 1 < tokens.size(); ++i) {
        if (!tokens[i].is("@")) continue;
        size_t j = i + 1;
        std::string annotation = read_type_chain(tokens, j);
        SourceLocation at{path, tokens[i].line, tokens[i].column};
        size_t open_paren = j < tokens.size() && tokens[j].is("(") ? j : tokens.size();
        size_t close_paren =
            open_paren < tokens.size() ? matching_close(tokens, open_paren) : tokens.size();
        bool has_args = open_paren < tokens.size() && close_paren < tokens.size();

        if (annotation == "WebServlet") {
            if (!has_args) continue;
            for (auto& [text, where] :
                 annotation_strings(tokens, open_paren, close_paren, {"value", "urlPatterns"})) {
                result.web_servlet_patterns.push_back(
                    {text, {path, where.line, where.column}});
            }
        } else if (annotation == "ManagedBean") {
            if (managed_bean_location) continue;  // first one wins
            managed_bean_location = at;
            if (has_args) {
                auto names = annotation_strings(tokens, open_paren, close_paren, {"name"});
                if (!names.empty()) managed_bean_explicit_name = names.front().first;
            }
        } else if (annotation == "ManagedProperty") {
            if (!has_args) continue;
            auto values = annotation_strings(tokens, open_paren, close_paren, {"value"});
            if (values.empty()) continue;
            // The annotated field: scan to the ';' ending the declaration and
            // take the identifier before it (or before '=' if initialized).
            size_t k = close_paren + 1;
            std::string last_ident;
            std::string field_name;
            while (k < tokens.size()) {
                const Token& t = tokens[k];
                if (t.is("(") || t.is("{")) {
                    field_name.clear();  // a method or type, not a field
                    break;
                }
                if (t.is("=")) {
                    field_name = last_ident;
                    break;
                }
                if (t.is(";")) {
                    field_name = last_ident;
                    break;
                }
                if (t.is_ident()) last_ident = t.text;
                ++k;
            }
            if (!field_name.empty()) {
                result.managed_properties.push_back({field_name, values.front().first, at});
            }
        }
    }
    if (managed_bean_location) {
        std::string name = managed_bean_explicit_name.value_or(decapitalize(simple_name));
        if (!name.empty()) {
            result.managed_bean = ManagedBeanAnnotation{name, *managed_bean_location};
        }
    }

    // Members of the primary type's body: constructors and getter/setter
    // pairs, recognized at the body's own brace depth.
    if (body_open < tokens.size()) {
        size_t body_close = matching_close(tokens, body_open);
        bool saw_constructor = false;
        bool saw_no_arg_constructor = false;
        std::set<std::string> getters;
        std::set<std::string> setters;
        int depth = 0;
        for (size_t i = body_open; i < tokens.size() && i <= body_close; ++i) {
            if (tokens[i].is("{")) { ++depth; continue; }
            if (tokens[i].is("}")) { --depth; continue; }
            if (depth != 1 || !tokens[i].is_ident()) continue;
            if (i + 1 >= tokens.size() || !tokens[i + 1].is("(")) continue;
            const Token& prev = tokens[i - 1];
            bool prev_opens_member = prev.is_ident() || prev.is("{") || prev.is("}") ||
                                     prev.is(";") || prev.is(">") || prev.is("]") || prev.is(")");
            if (!prev_opens_member || (prev.is_ident() && (prev.text == "new" || prev.text == "return"))) {
                continue;
            }
            if (prev.is(".")) continue;
            size_t close = matching_close(tokens, i + 1);
            if (close >= tokens.size()) continue;
            // Declarations continue with a body, a throws clause, or ';'.
            size_t after = close + 1;
            if (after < tokens.size() && tokens[after].is_ident() &&
                tokens[after].text == "throws") {
                while (after < tokens.size() && !tokens[after].is("{") && !tokens[after].is(";")) {
                    ++after;
                }
            }
            bool is_declaration =
                after < tokens.size() && (tokens[after].is("{") || tokens[after].is(";"));
            if (!is_declaration) continue;

            const std::string& name = tokens[i].text;
            if (name == simple_name) {
                saw_constructor = true;
                if (close == i + 2) saw_no_arg_constructor = true;
            } else if (name.size() > 3 && name.starts_with("get")) {
                getters.insert(decapitalize(name.substr(3)));
            } else if (name.size() > 3 && name.starts_with("set")) {
                setters.insert(decapitalize(name.substr(3)));
            }
        }
        result.bean_traits.has_no_arg_constructor = !saw_constructor || saw_no_arg_constructor;
        for (const std::string& property : getters) {
            if (setters.contains(property)) {
                result.bean_traits.property_pairs.push_back(property);
            }
        }
    }

    result.dispatcher_calls = dispatcher_pass(tokens);
    for (DispatcherCall& call : result.dispatcher_calls) {
        call.location.file_path = path;
    }
    return output;
}

}  // namespace jeedep
