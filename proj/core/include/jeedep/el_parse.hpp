#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jeedep/model.hpp"

namespace jeedep {

/// One argument of an EL method call. String and number literals are kept
/// verbatim (quotes included); anything else is Dynamic with the raw text.
struct ElArg {
    enum class Kind { StringLiteral, NumberLiteral, Dynamic };
    Kind kind = Kind::Dynamic;
    std::string text;

    friend bool operator==(const ElArg&, const ElArg&) = default;
};

struct ElSegment {
    enum class Kind { Property, MethodCall };
    Kind kind = Kind::Property;
    std::string name;
    /// MethodCall only.
    std::vector<ElArg> args;

    static ElSegment property(std::string name) {
        return {Kind::Property, std::move(name), {}};
    }
    static ElSegment method_call(std::string name, std::vector<ElArg> args) {
        return {Kind::MethodCall, std::move(name), std::move(args)};
    }

    friend bool operator==(const ElSegment&, const ElSegment&) = default;
};

/// An identifier-rooted reference chain: base bean name plus property /
/// method segments. `a['b']` is normalized to Property(b).
struct ElReferencePath {
    std::string base;
    /// True when base is one of the EL implicit objects (param, header,
    /// sessionScope, ...), which never denote beans.
    bool implicit_object = false;
    std::vector<ElSegment> segments;

    friend bool operator==(const ElReferencePath&, const ElReferencePath&) = default;
};

struct ElExpression {
    enum class Delimiter { Dollar, Hash };

    /// Original string including the "${"/"#{" and "}" delimiters.
    std::string raw;
    Delimiter delimiter = Delimiter::Dollar;
    /// Reference chains in order of appearance.
    std::vector<ElReferencePath> references;
};

struct ElParseOutput {
    ElExpression expr;
    std::vector<Diagnostic> diagnostics;
};

/// Extracts bean references from one EL expression. Operators and literals
/// between chains are skipped — references are extracted, never evaluated.
/// Unbalanced braces, quotes, parens, or brackets yield a MALFORMED_EL
/// Warning and an empty reference list. Never throws.
ElParseOutput parse_el(std::string_view raw);

/// Serializes base + segments back to source form ("trader.buy('SOMESTOCK')").
std::string to_string(const ElReferencePath& path);

bool is_el_implicit_object(std::string_view name);

}  // namespace jeedep
