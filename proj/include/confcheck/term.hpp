#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace confcheck {

/**
 * Function symbol. Symbols are identified by name *and* arity: the same
 * name at two different arities denotes two distinct symbols.
 */
struct Symbol {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;

    std::string to_string() const;  // "f/2"
};

/// A position is a sequence of child indices; the root is the empty sequence.
using Position = std::vector<std::size_t>;

/// Renders a position in certificate syntax: "e" for the root, else
/// dot-separated 1-based child indices ("1.2").
std::string position_to_string(const Position& pos);

/**
 * First-order term: either a variable or a function application whose
 * argument count matches the symbol arity. Terms are immutable and share
 * structure; copies are cheap.
 */
class Term {
public:
    static Term var(std::string name);
    static Term app(Symbol symbol, std::vector<Term> args = {});

    bool is_var() const { return node_->is_var; }
    bool is_app() const { return !node_->is_var; }

    const std::string& var_name() const;     // requires is_var()
    const Symbol& root() const;              // requires is_app()
    const std::vector<Term>& args() const;   // requires is_app()

    /// Subterm at a position, or nullptr when the position is invalid.
    const Term* subterm(const Position& pos) const;

    /// Copy of this term with the subterm at `pos` replaced. The position
    /// must be valid.
    Term replace(const Position& pos, const Term& replacement) const;

    /// All positions in leftmost-outermost (preorder) order.
    std::vector<Position> positions() const;
    /// Positions of non-variable subterms, leftmost-outermost.
    std::vector<Position> non_variable_positions() const;

    /// Variable names in order of first occurrence (left to right).
    std::vector<std::string> variables_in_order() const;
    std::set<std::string> variable_set() const;

    bool is_ground() const;
    /// True when no variable occurs more than once.
    bool is_linear() const;

    void collect_symbols(std::set<Symbol>& out) const;
    std::set<Symbol> function_symbols() const;

    std::size_t node_count() const;
    std::size_t depth() const;

    std::size_t hash() const { return node_->hash; }
    std::string to_string() const;

    /// Total structural order; variables sort before applications.
    static int compare(const Term& a, const Term& b);

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

private:
    struct Node {
        bool is_var;
        std::string name;        // variable name when is_var
        Symbol symbol;           // root symbol otherwise
        std::vector<Term> args;
        std::size_t hash;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/**
 * Finite map from variable names to terms; unmapped variables act as the
 * identity.
 */
class Substitution {
public:
    Substitution() = default;

    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }

    const Term* lookup(const std::string& var) const;
    void bind(std::string var, Term value);

    /// Applies {var -> value} to every range term (used to keep unifiers
    /// idempotent while they are being built).
    void substitute_in_ranges(const std::string& var, const Term& value);

    Term apply(const Term& t) const;

    const std::map<std::string, Term>& bindings() const { return map_; }
    friend bool operator==(const Substitution&, const Substitution&);

    std::string to_string() const;

private:
    std::map<std::string, Term> map_;
};

/// Rewrite rule lhs -> rhs. No variable conditions are assumed: the lhs may
/// be a variable and the rhs may contain variables absent from the lhs.
struct Rule {
    Term lhs;
    Term rhs;

    bool lhs_is_variable() const { return lhs.is_var(); }
    /// Variables of the rhs that do not occur in the lhs.
    std::vector<std::string> extra_variables() const;
    bool is_linear() const { return lhs.is_linear() && rhs.is_linear(); }
    bool is_left_linear() const { return lhs.is_linear(); }

    std::string to_string() const;
    friend bool operator==(const Rule& a, const Rule& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

/// Term rewrite system: an ordered list of rules. Rule indices are stable;
/// certificates reference rules by index.
struct Trs {
    std::vector<Rule> rules;

    std::size_t size() const { return rules.size(); }
    std::set<Symbol> signature() const;
    std::set<std::string> variable_names() const;

    std::string to_string() const;
    friend bool operator==(const Trs& a, const Trs& b) { return a.rules == b.rules; }
};

}  // namespace confcheck
