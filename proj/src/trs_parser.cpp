#include <cctype>

#include "confcheck/parser.hpp"

namespace confcheck {

namespace {

struct Token {
    enum class Kind { LParen, RParen, Comma, Arrow, Ident, End };
    Kind kind;
    std::string text;
    std::size_t line = 0;
    std::size_t col = 0;
};

struct TrsLexer {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;
    Token current;

    explicit TrsLexer(std::string_view t) : text(t) { next(); }

    void bump() {
        if (pos < text.size() && text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    static bool ident_char(char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',';
    }

    void next() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) bump();
        std::size_t l = line, c = col;
        if (pos >= text.size()) {
            current = {Token::Kind::End, "", l, c};
            return;
        }
        char ch = text[pos];
        if (ch == '(') {
            bump();
            current = {Token::Kind::LParen, "(", l, c};
            return;
        }
        if (ch == ')') {
            bump();
            current = {Token::Kind::RParen, ")", l, c};
            return;
        }
        if (ch == ',') {
            bump();
            current = {Token::Kind::Comma, ",", l, c};
            return;
        }
        if (ch == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
            bump();
            bump();
            current = {Token::Kind::Arrow, "->", l, c};
            return;
        }
        std::string ident;
        while (pos < text.size() && ident_char(text[pos])) {
            if (text[pos] == '-' && pos + 1 < text.size() && text[pos + 1] == '>') break;
            ident += text[pos];
            bump();
        }
        current = {Token::Kind::Ident, std::move(ident), l, c};
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (current.kind != kind)
            throw ParseError("expected " + what + ", found '" + current.text + "'", current.line,
                             current.col);
        Token t = current;
        next();
        return t;
    }
};

void check_not_reserved(const std::string& name, std::size_t line, std::size_t col) {
    if (name == "⊥" || (!name.empty() && name[0] == '#'))
        throw ParseError("reserved symbol '" + name + "'", line, col);
}

Term parse_trs_term(TrsLexer& lexer, const std::set<std::string>& variables) {
    Token ident = lexer.expect(Token::Kind::Ident, "identifier");
    check_not_reserved(ident.text, ident.line, ident.col);
    if (lexer.current.kind == Token::Kind::LParen) {
        if (variables.count(ident.text))
            throw ParseError("variable '" + ident.text + "' used with arguments", ident.line,
                             ident.col);
        lexer.next();
        std::vector<Term> args;
        args.push_back(parse_trs_term(lexer, variables));
        while (lexer.current.kind == Token::Kind::Comma) {
            lexer.next();
            args.push_back(parse_trs_term(lexer, variables));
        }
        lexer.expect(Token::Kind::RParen, "')'");
        std::size_t arity = args.size();
        return Term::app({ident.text, arity}, std::move(args));
    }
    if (variables.count(ident.text)) return Term::var(ident.text);
    return Term::app({ident.text, 0});
}

}  // namespace

Trs parse_trs(std::string_view text) {
    TrsLexer lexer(text);
    std::set<std::string> variables;

    lexer.expect(Token::Kind::LParen, "'('");
    Token keyword = lexer.expect(Token::Kind::Ident, "VAR or RULES");
    if (keyword.text == "VAR") {
        while (lexer.current.kind == Token::Kind::Ident) {
            check_not_reserved(lexer.current.text, lexer.current.line, lexer.current.col);
            variables.insert(lexer.current.text);
            lexer.next();
        }
        lexer.expect(Token::Kind::RParen, "')'");
        lexer.expect(Token::Kind::LParen, "'('");
        keyword = lexer.expect(Token::Kind::Ident, "RULES");
    }
    if (keyword.text != "RULES")
        throw ParseError("expected RULES, found '" + keyword.text + "'", keyword.line,
                         keyword.col);

    Trs trs;
    while (lexer.current.kind != Token::Kind::RParen) {
        Term lhs = parse_trs_term(lexer, variables);
        lexer.expect(Token::Kind::Arrow, "'->'");
        Term rhs = parse_trs_term(lexer, variables);
        trs.rules.push_back({std::move(lhs), std::move(rhs)});
    }
    lexer.next();
    if (lexer.current.kind != Token::Kind::End)
        throw ParseError("trailing input after RULES block", lexer.current.line,
                         lexer.current.col);
    return trs;
}

Term parse_term(std::string_view text, const std::set<std::string>& variables) {
    TrsLexer lexer(text);
    Term t = parse_trs_term(lexer, variables);
    if (lexer.current.kind != Token::Kind::End)
        throw ParseError("trailing input after term", lexer.current.line, lexer.current.col);
    return t;
}

std::string print_trs(const Trs& trs) {
    std::vector<std::string> vars;
    std::set<std::string> seen;
    for (const Rule& rule : trs.rules) {
        for (const Term* side : {&rule.lhs, &rule.rhs})
            for (const std::string& v : side->variables_in_order())
                if (seen.insert(v).second) vars.push_back(v);
    }
    std::string out;
    if (!vars.empty()) {
        out += "(VAR";
        for (const std::string& v : vars) out += " " + v;
        out += ")\n";
    }
    out += "(RULES\n";
    for (const Rule& rule : trs.rules) out += "  " + rule.to_string() + "\n";
    out += ")\n";
    return out;
}

}  // namespace confcheck
