#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jeedep::xml {

/// A parsed element. `name` keeps the raw (possibly prefixed) tag name;
/// matching is done on the local name so namespace prefixes never matter.
struct Element {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<Element> children;
    /// Concatenated character data directly inside this element.
    std::string text;
    int line = 1;
    int column = 1;

    std::string local_name() const;
    const std::string* attribute(std::string_view local) const;
    /// Trimmed text of the first direct child with the given local name, or
    /// nullopt-ish empty result via found=false.
    const Element* child(std::string_view local) const;
};

struct Issue {
    std::string message;
    int line = 1;
    int column = 1;
};

struct ParseResult {
    /// Synthetic document node; real top-level elements are its children.
    Element root;
    std::vector<Issue> issues;
    bool well_formed() const { return issues.empty(); }
};

/// Tolerant, non-validating parse. Never throws; malformed input produces
/// best-effort results for the well-formed prefix plus issues. No DTD or
/// external entity resolution; only the five builtin entities and numeric
/// character references are decoded.
ParseResult parse(std::string_view content);

std::string trim(std::string_view text);

/// Walks the tree depth-first and collects every element whose local name
/// matches.
std::vector<const Element*> find_all(const Element& root, std::string_view local);

}  // namespace jeedep::xml
