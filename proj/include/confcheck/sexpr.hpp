#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace confcheck {

struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t col;
    ParseError(const std::string& message, std::size_t line_ = 0, std::size_t col_ = 0)
        : std::runtime_error(line_ ? std::to_string(line_) + ":" + std::to_string(col_) + ": " +
                                         message
                                   : message),
          line(line_),
          col(col_) {}
};

/// S-expression node: an atom or a list. Commas count as whitespace so the
/// same lexer serves both input formats.
struct Sexpr {
    bool atom = false;
    std::string text;          // atom spelling
    std::vector<Sexpr> items;  // list members
    std::size_t line = 0;
    std::size_t col = 0;

    bool is_atom() const { return atom; }
    bool is_list() const { return !atom; }
    std::size_t size() const { return items.size(); }
    const Sexpr& at(std::size_t i) const;
    /// True for a list whose first member is the given atom.
    bool headed(std::string_view head) const;

    std::string to_string() const;
};

/// Parses exactly one s-expression; trailing input is an error.
Sexpr parse_sexpr(std::string_view text);

}  // namespace confcheck
