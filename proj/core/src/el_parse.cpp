#include "jeedep/el_parse.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace jeedep {
namespace {

bool is_reserved(std::string_view word) {
    static constexpr std::array<std::string_view, 16> words = {
        "and", "or", "not", "empty", "null", "true", "false", "eq",
        "ne",  "lt", "gt",  "le",    "ge",   "div",  "mod",   "instanceof"};
    return std::find(words.begin(), words.end(), word) != words.end();
}

constexpr std::array<std::string_view, 8> kImplicitObjects = {
    "param",     "header",       "sessionScope", "requestScope",
    "pageScope", "applicationScope", "cookie",   "initParam"};

struct Token {
    enum class Kind { Ident, String, Number, Punct };
    Kind kind = Kind::Punct;
    std::string text;     // verbatim source slice
    std::string content;  // decoded string content (String tokens)
    size_t pos = 0;

    bool is(std::string_view t) const { return text == t; }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

/// Tokenizes the text between the EL delimiters. Returns false on an
/// unterminated string literal.
bool tokenize(std::string_view src, std::vector<Token>& tokens) {
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token token;
        token.pos = i;
        if (ident_start(c)) {
            token.kind = Token::Kind::Ident;
            while (i < src.size() && ident_part(src[i])) token.text += src[i++];
        } else if (c == '\'' || c == '"') {
            token.kind = Token::Kind::String;
            char quote = c;
            token.text += src[i++];
            bool closed = false;
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
                if (d == quote) {
                    closed = true;
                    break;
                }
                token.content += d;
            }
            if (!closed) return false;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            token.kind = Token::Kind::Number;
            while (i < src.size() &&
                   (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.')) {
                token.text += src[i++];
            }
        } else {
            token.kind = Token::Kind::Punct;
            token.text = std::string(1, c);
            ++i;
        }
        tokens.push_back(std::move(token));
    }
    return true;
}

size_t matching_close(const std::vector<Token>& tokens, size_t open) {
    const std::string& opener = tokens[open].text;
    std::string closer = opener == "(" ? ")" : "]";
    int depth = 0;
    for (size_t i = open; i < tokens.size(); ++i) {
        if (tokens[i].kind != Token::Kind::Punct) continue;
        if (tokens[i].text == opener) ++depth;
        else if (tokens[i].text == closer && --depth == 0) return i;
    }
    return tokens.size();
}

struct Extractor {
    const std::vector<Token>& tokens;
    std::vector<std::pair<size_t, ElReferencePath>> found;

    /// Scans [begin, end) for reference chains; nested ranges (method
    /// arguments, dynamic subscripts) recurse through the same path.
    void scan(size_t begin, size_t end) {
        for (size_t i = begin; i < end;) {
            const Token& token = tokens[i];
            if (token.kind != Token::Kind::Ident || is_reserved(token.text)) {
                ++i;
                continue;
            }
            if (i > begin && tokens[i - 1].is(".")) {
                ++i;  // stray property name; never a chain root
                continue;
            }
            if (i + 1 < end && tokens[i + 1].is(":")) {
                i += 2;  // EL function prefix (fn:length): not a bean
                continue;
            }
            if (i + 1 < end && tokens[i + 1].is("(")) {
                ++i;  // top-level function call: arguments scanned as usual
                continue;
            }
            i = parse_chain(i, end);
        }
    }

    /// Parses one chain rooted at `i`; returns the index after it.
    size_t parse_chain(size_t i, size_t end) {
        ElReferencePath path;
        path.base = tokens[i].text;
        path.implicit_object = is_el_implicit_object(path.base);
        size_t start = tokens[i].pos;
        ++i;
        for (;;) {
            if (i + 1 < end && tokens[i].is(".") &&
                tokens[i + 1].kind == Token::Kind::Ident) {
                std::string name = tokens[i + 1].text;
                if (i + 2 < end && tokens[i + 2].is("(")) {
                    size_t close = matching_close(tokens, i + 2);
                    if (close >= end) {  // unbalanced; salvage what we have
                        path.segments.push_back(ElSegment::property(name));
                        i = end;
                        break;
                    }
                    path.segments.push_back(
                        ElSegment::method_call(name, parse_args(i + 3, close)));
                    i = close + 1;
                } else {
                    path.segments.push_back(ElSegment::property(name));
                    i += 2;
                }
            } else if (i < end && tokens[i].is("[")) {
                size_t close = matching_close(tokens, i);
                if (close >= end) {
                    i = end;
                    break;
                }
                if (close == i + 2 && tokens[i + 1].kind == Token::Kind::String) {
                    path.segments.push_back(ElSegment::property(tokens[i + 1].content));
                } else {
                    scan(i + 1, close);  // dynamic subscript: mine it, end chain
                    i = close + 1;
                    break;
                }
                i = close + 1;
            } else {
                break;
            }
        }
        found.emplace_back(start, std::move(path));
        return i;
    }

    /// Arguments of a method call between parens: literal args verbatim,
    /// anything else Dynamic (with inner chains extracted as references).
    std::vector<ElArg> parse_args(size_t begin, size_t close) {
        std::vector<ElArg> args;
        size_t arg_start = begin;
        auto flush = [&](size_t arg_end) {
            if (arg_end == arg_start) return;
            if (arg_end == arg_start + 1) {
                const Token& only = tokens[arg_start];
                if (only.kind == Token::Kind::String) {
                    args.push_back({ElArg::Kind::StringLiteral, only.text});
                    return;
                }
                if (only.kind == Token::Kind::Number) {
                    args.push_back({ElArg::Kind::NumberLiteral, only.text});
                    return;
                }
            }
            std::string text;
            for (size_t k = arg_start; k < arg_end; ++k) {
                if (!text.empty()) text += ' ';
                text += tokens[k].text;
            }
            args.push_back({ElArg::Kind::Dynamic, text});
            scan(arg_start, arg_end);
        };
        int depth = 0;
        for (size_t i = begin; i < close; ++i) {
            if (tokens[i].is("(") || tokens[i].is("[")) ++depth;
            else if (tokens[i].is(")") || tokens[i].is("]")) --depth;
            else if (tokens[i].is(",") && depth == 0) {
                flush(i);
                arg_start = i + 1;
            }
        }
        flush(close);
        return args;
    }
};

Diagnostic malformed(std::string_view raw, std::string reason) {
    return make_warning(diag::kMalformedEl,
                        "malformed EL expression '" + std::string(raw) + "': " + reason);
}

}  // namespace

bool is_el_implicit_object(std::string_view name) {
    return std::find(kImplicitObjects.begin(), kImplicitObjects.end(), name) !=
           kImplicitObjects.end();
}

std::string to_string(const ElReferencePath& path) {
    std::string out = path.base;
    for (const ElSegment& segment : path.segments) {
        out += '.';
        out += segment.name;
        if (segment.kind == ElSegment::Kind::MethodCall) {
            out += '(';
            for (size_t i = 0; i < segment.args.size(); ++i) {
                if (i > 0) out += ", ";
                out += segment.args[i].text;
            }
            out += ')';
        }
    }
    return out;
}

ElParseOutput parse_el(std::string_view raw) {
    ElParseOutput output;
    output.expr.raw = std::string(raw);

    std::string_view inner;
    if (raw.size() >= 3 && raw.starts_with("${") && raw.ends_with("}")) {
        output.expr.delimiter = ElExpression::Delimiter::Dollar;
        inner = raw.substr(2, raw.size() - 3);
    } else if (raw.size() >= 3 && raw.starts_with("#{") && raw.ends_with("}")) {
        output.expr.delimiter = ElExpression::Delimiter::Hash;
        inner = raw.substr(2, raw.size() - 3);
    } else {
        if (raw.starts_with("#")) output.expr.delimiter = ElExpression::Delimiter::Hash;
        output.diagnostics.push_back(malformed(raw, "missing delimiter"));
        return output;
    }

    std::vector<Token> tokens;
    if (!tokenize(inner, tokens)) {
        output.diagnostics.push_back(malformed(raw, "unterminated string literal"));
        return output;
    }
    int parens = 0;
    int brackets = 0;
    for (const Token& token : tokens) {
        if (token.kind != Token::Kind::Punct) continue;
        if (token.is("{") || token.is("}")) {
            output.diagnostics.push_back(malformed(raw, "unbalanced braces"));
            return output;
        }
        if (token.is("(")) ++parens;
        else if (token.is(")")) --parens;
        else if (token.is("[")) ++brackets;
        else if (token.is("]")) --brackets;
        if (parens < 0 || brackets < 0) break;
    }
    if (parens != 0 || brackets != 0) {
        output.diagnostics.push_back(malformed(raw, "unbalanced parentheses or brackets"));
        return output;
    }

    Extractor extractor{tokens, {}};
    extractor.scan(0, tokens.size());
    std::stable_sort(extractor.found.begin(), extractor.found.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [pos, path] : extractor.found) {
        output.expr.references.push_back(std::move(path));
    }
    return output;
}

}  // namespace jeedep
