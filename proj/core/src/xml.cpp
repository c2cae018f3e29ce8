#include "jeedep/xml.hpp"

#include <cctype>

namespace jeedep::xml {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == '.' || c == ':';
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

std::string decode_entities(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] != '&') {
            out.push_back(raw[i++]);
            continue;
        }
        size_t semi = raw.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(raw[i++]);
            continue;
        }
        std::string_view entity = raw.substr(i + 1, semi - i - 1);
        if (entity == "amp") out.push_back('&');
        else if (entity == "lt") out.push_back('<');
        else if (entity == "gt") out.push_back('>');
        else if (entity == "quot") out.push_back('"');
        else if (entity == "apos") out.push_back('\'');
        else if (!entity.empty() && entity[0] == '#') {
            long code = 0;
            bool ok = entity.size() > 1;
            if (entity.size() > 2 && (entity[1] == 'x' || entity[1] == 'X')) {
                for (size_t k = 2; k < entity.size() && ok; ++k) {
                    char c = entity[k];
                    int digit;
                    if (c >= '0' && c <= '9') digit = c - '0';
                    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
                    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
                    else { ok = false; break; }
                    code = code * 16 + digit;
                }
            } else {
                for (size_t k = 1; k < entity.size() && ok; ++k) {
                    if (entity[k] < '0' || entity[k] > '9') { ok = false; break; }
                    code = code * 10 + (entity[k] - '0');
                }
            }
            if (!ok || code <= 0 || code > 0x10FFFF) {
                out.push_back(raw[i++]);
                continue;
            }
            // Minimal UTF-8 encoding of the code point.
            if (code < 0x80) {
                out.push_back(static_cast<char>(code));
            } else if (code < 0x800) {
                out.push_back(static_cast<char>(0xC0 | (code >> 6)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            } else if (code < 0x10000) {
                out.push_back(static_cast<char>(0xE0 | (code >> 12)));
                out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            } else {
                out.push_back(static_cast<char>(0xF0 | (code >> 18)));
                out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            }
        } else {
            out.push_back(raw[i++]);
            continue;
        }
        i = semi + 1;
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view content) : text_(content) {}

    ParseResult run() {
        ParseResult result;
        result.root.name = "#document";
        std::vector<Element*> stack{&result.root};

        while (pos_ < text_.size()) {
            if (text_[pos_] != '<') {
                size_t start = pos_;
                while (pos_ < text_.size() && text_[pos_] != '<') advance();
                stack.back()->text += decode_entities(text_.substr(start, pos_ - start));
                continue;
            }
            if (starts_with("<!--")) {
                if (!skip_until("-->")) {
                    issue("unterminated comment");
                    break;
                }
                continue;
            }
            if (starts_with("<![CDATA[")) {
                size_t open_line = line_, open_col = col_;
                advance(9);
                size_t start = pos_;
                size_t end = text_.find("]]>", pos_);
                if (end == std::string_view::npos) {
                    issue_at("unterminated CDATA section", open_line, open_col);
                    stack.back()->text += text_.substr(start);
                    pos_ = text_.size();
                    break;
                }
                stack.back()->text += text_.substr(start, end - start);
                while (pos_ < end + 3) advance();
                continue;
            }
            if (starts_with("<!") || starts_with("<?")) {
                if (!skip_until(">")) {
                    issue("unterminated declaration");
                    break;
                }
                continue;
            }
            if (starts_with("</")) {
                int tag_line = line_, tag_col = col_;
                advance(2);
                std::string name = read_name();
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == '>') advance();
                else issue_at("malformed closing tag", tag_line, tag_col);
                close_element(stack, name, tag_line, tag_col);
                continue;
            }
            // Opening tag.
            int tag_line = line_, tag_col = col_;
            advance(1);
            std::string name = read_name();
            if (name.empty()) {
                issue_at("stray '<' in content", tag_line, tag_col);
                stack.back()->text += '<';
                continue;
            }
            Element element;
            element.name = name;
            element.line = tag_line;
            element.column = tag_col;
            bool self_closing = false;
            bool closed = read_attributes(element, self_closing);
            if (!closed) {
                issue_at("unterminated tag '" + name + "'", tag_line, tag_col);
                stack.back()->children.push_back(std::move(element));
                break;
            }
            stack.back()->children.push_back(std::move(element));
            if (!self_closing) stack.push_back(&stack.back()->children.back());
        }

        if (stack.size() > 1) {
            issue_at("unclosed element '" + stack.back()->name + "'",
                     stack.back()->line, stack.back()->column);
        }
        result.issues = std::move(issues_);
        return result;
    }

private:
    void advance(size_t n = 1) {
        for (size_t i = 0; i < n && pos_ < text_.size(); ++i) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    bool starts_with(std::string_view prefix) const {
        return text_.substr(pos_, prefix.size()) == prefix;
    }

    bool skip_until(std::string_view marker) {
        size_t end = text_.find(marker, pos_);
        if (end == std::string_view::npos) {
            pos_ = text_.size();
            return false;
        }
        while (pos_ < end + marker.size()) advance();
        return true;
    }

    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) advance();
    }

    std::string read_name() {
        size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
        return std::string(text_.substr(start, pos_ - start));
    }

    /// Reads attributes up to '>' or '/>'. Returns false when the tag is
    /// unterminated at EOF.
    bool read_attributes(Element& element, bool& self_closing) {
        self_closing = false;
        while (pos_ < text_.size()) {
            skip_space();
            if (pos_ >= text_.size()) return false;
            char c = text_[pos_];
            if (c == '>') {
                advance();
                return true;
            }
            if (c == '/') {
                advance();
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == '>') {
                    advance();
                    self_closing = true;
                    return true;
                }
                continue;
            }
            if (!is_name_char(c)) {
                advance();
                continue;
            }
            std::string attr_name = read_name();
            skip_space();
            std::string value;
            if (pos_ < text_.size() && text_[pos_] == '=') {
                advance();
                skip_space();
                if (pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\'')) {
                    char quote = text_[pos_];
                    advance();
                    size_t start = pos_;
                    while (pos_ < text_.size() && text_[pos_] != quote) advance();
                    value = decode_entities(text_.substr(start, pos_ - start));
                    if (pos_ < text_.size()) advance();
                    else return false;
                } else {
                    size_t start = pos_;
                    while (pos_ < text_.size() && !is_space(text_[pos_]) &&
                           text_[pos_] != '>' && text_[pos_] != '/') {
                        advance();
                    }
                    value = decode_entities(text_.substr(start, pos_ - start));
                }
            }
            element.attributes.emplace_back(std::move(attr_name), std::move(value));
        }
        return false;
    }

    void close_element(std::vector<Element*>& stack, const std::string& name,
                       int tag_line, int tag_col) {
        auto local = [](const std::string& n) {
            size_t colon = n.rfind(':');
            return colon == std::string::npos ? n : n.substr(colon + 1);
        };
        // Find the nearest open element with this local name; anything opened
        // after it is implicitly closed.
        for (size_t i = stack.size(); i-- > 1;) {
            if (local(stack[i]->name) == local(name)) {
                if (i != stack.size() - 1) {
                    issue_at("mismatched closing tag '" + name + "'", tag_line, tag_col);
                }
                stack.resize(i);
                return;
            }
        }
        issue_at("closing tag '" + name + "' matches no open element", tag_line, tag_col);
    }

    void issue(const std::string& message) { issue_at(message, line_, col_); }

    void issue_at(const std::string& message, int line, int col) {
        issues_.push_back({message, line, col});
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    std::vector<Issue> issues_;
};

void collect(const Element& node, std::string_view local,
             std::vector<const Element*>& out) {
    if (node.local_name() == local) out.push_back(&node);
    for (const auto& child : node.children) collect(child, local, out);
}

}  // namespace

std::string Element::local_name() const {
    size_t colon = name.rfind(':');
    return colon == std::string::npos ? name : name.substr(colon + 1);
}

const std::string* Element::attribute(std::string_view local) const {
    for (const auto& [name, value] : attributes) {
        size_t colon = name.rfind(':');
        std::string_view attr_local =
            colon == std::string::npos
                ? std::string_view(name)
                : std::string_view(name).substr(colon + 1);
        if (attr_local == local) return &value;
    }
    return nullptr;
}

const Element* Element::child(std::string_view local) const {
    for (const auto& c : children) {
        if (c.local_name() == local) return &c;
    }
    return nullptr;
}

ParseResult parse(std::string_view content) {
    return Parser(content).run();
}

std::string trim(std::string_view text) {
    size_t begin = 0, end = text.size();
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    return std::string(text.substr(begin, end - begin));
}

std::vector<const Element*> find_all(const Element& root, std::string_view local) {
    std::vector<const Element*> out;
    collect(root, local, out);
    return out;
}

}  // namespace jeedep::xml
