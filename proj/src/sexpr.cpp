#include "confcheck/sexpr.hpp"

namespace confcheck {

const Sexpr& Sexpr::at(std::size_t i) const {
    if (atom || i >= items.size())
        throw ParseError("malformed expression near '" + to_string() + "'", line, col);
    return items[i];
}

bool Sexpr::headed(std::string_view head) const {
    return is_list() && !items.empty() && items[0].is_atom() && items[0].text == head;
}

std::string Sexpr::to_string() const {
    if (atom) return text;
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += items[i].to_string();
    }
    return out + ")";
}

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    void advance() {
        if (pos < text.size() && text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ';') {  // comment to end of line
                while (pos < text.size() && text[pos] != '\n') advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
                advance();
                continue;
            }
            break;
        }
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() const { return text[pos]; }

    Sexpr parse() {
        skip_space();
        if (pos >= text.size()) throw ParseError("unexpected end of input", line, col);
        std::size_t start_line = line, start_col = col;
        if (peek() == ')') throw ParseError("unexpected ')'", line, col);
        if (peek() == '(') {
            advance();
            Sexpr node;
            node.line = start_line;
            node.col = start_col;
            for (;;) {
                skip_space();
                if (pos >= text.size())
                    throw ParseError("missing ')'", start_line, start_col);
                if (peek() == ')') {
                    advance();
                    return node;
                }
                node.items.push_back(parse());
            }
        }
        Sexpr node;
        node.atom = true;
        node.line = start_line;
        node.col = start_col;
        while (pos < text.size()) {
            char c = peek();
            if (c == '(' || c == ')' || c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
                c == ',' || c == ';')
                break;
            node.text += c;
            advance();
        }
        return node;
    }
};

}  // namespace

Sexpr parse_sexpr(std::string_view text) {
    Lexer lexer{text};
    Sexpr node = lexer.parse();
    if (!lexer.done())
        throw ParseError("trailing input after expression", lexer.line, lexer.col);
    return node;
}

}  // namespace confcheck
