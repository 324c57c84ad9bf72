#include "confcheck/term.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace confcheck {

std::string Symbol::to_string() const {
    return name + "/" + std::to_string(arity);
}

std::string position_to_string(const Position& pos) {
    if (pos.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(pos[i] + 1);
    }
    return out;
}

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(std::string name) {
    auto node = std::make_shared<Node>();
    node->is_var = true;
    node->name = std::move(name);
    node->hash = hash_combine(0x517cc1b7, std::hash<std::string>{}(node->name));
    return Term(std::move(node));
}

Term Term::app(Symbol symbol, std::vector<Term> args) {
    if (symbol.arity != args.size())
        throw std::invalid_argument("symbol " + symbol.to_string() + " applied to " +
                                    std::to_string(args.size()) + " arguments");
    auto node = std::make_shared<Node>();
    node->is_var = false;
    node->symbol = std::move(symbol);
    node->args = std::move(args);
    std::size_t h = hash_combine(0x9e3779b9, std::hash<std::string>{}(node->symbol.name));
    h = hash_combine(h, node->symbol.arity);
    for (const Term& a : node->args) h = hash_combine(h, a.hash());
    node->hash = h;
    return Term(std::move(node));
}

const std::string& Term::var_name() const {
    assert(is_var());
    return node_->name;
}

const Symbol& Term::root() const {
    assert(is_app());
    return node_->symbol;
}

const std::vector<Term>& Term::args() const {
    assert(is_app());
    return node_->args;
}

const Term* Term::subterm(const Position& pos) const {
    const Term* cur = this;
    for (std::size_t idx : pos) {
        if (cur->is_var() || idx >= cur->args().size()) return nullptr;
        cur = &cur->args()[idx];
    }
    return cur;
}

Term Term::replace(const Position& pos, const Term& replacement) const {
    if (pos.empty()) return replacement;
    if (is_var() || pos.front() >= args().size())
        throw std::invalid_argument("invalid position in Term::replace");
    std::vector<Term> new_args = args();
    Position rest(pos.begin() + 1, pos.end());
    new_args[pos.front()] = new_args[pos.front()].replace(rest, replacement);
    return app(root(), std::move(new_args));
}

namespace {

void collect_positions(const Term& t, Position& prefix, std::vector<Position>& out,
                       bool only_nonvar) {
    if (!only_nonvar || t.is_app()) out.push_back(prefix);
    if (t.is_app()) {
        for (std::size_t i = 0; i < t.args().size(); ++i) {
            prefix.push_back(i);
            collect_positions(t.args()[i], prefix, out, only_nonvar);
            prefix.pop_back();
        }
    }
}

void collect_vars(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen) {
    if (t.is_var()) {
        if (seen.insert(t.var_name()).second) out.push_back(t.var_name());
    } else {
        for (const Term& a : t.args()) collect_vars(a, out, seen);
    }
}

}  // namespace

std::vector<Position> Term::positions() const {
    std::vector<Position> out;
    Position prefix;
    collect_positions(*this, prefix, out, false);
    return out;
}

std::vector<Position> Term::non_variable_positions() const {
    std::vector<Position> out;
    Position prefix;
    collect_positions(*this, prefix, out, true);
    return out;
}

std::vector<std::string> Term::variables_in_order() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_vars(*this, out, seen);
    return out;
}

std::set<std::string> Term::variable_set() const {
    std::vector<std::string> order = variables_in_order();
    return {order.begin(), order.end()};
}

bool Term::is_ground() const {
    if (is_var()) return false;
    for (const Term& a : args())
        if (!a.is_ground()) return false;
    return true;
}

namespace {

bool linear_walk(const Term& t, std::set<std::string>& seen) {
    if (t.is_var()) return seen.insert(t.var_name()).second;
    for (const Term& a : t.args())
        if (!linear_walk(a, seen)) return false;
    return true;
}

}  // namespace

bool Term::is_linear() const {
    std::set<std::string> seen;
    return linear_walk(*this, seen);
}

void Term::collect_symbols(std::set<Symbol>& out) const {
    if (is_app()) {
        out.insert(root());
        for (const Term& a : args()) a.collect_symbols(out);
    }
}

std::set<Symbol> Term::function_symbols() const {
    std::set<Symbol> out;
    collect_symbols(out);
    return out;
}

std::size_t Term::node_count() const {
    std::size_t n = 1;
    if (is_app())
        for (const Term& a : args()) n += a.node_count();
    return n;
}

std::size_t Term::depth() const {
    if (is_var() || args().empty()) return 0;
    std::size_t d = 0;
    for (const Term& a : args()) d = std::max(d, a.depth());
    return d + 1;
}

std::string Term::to_string() const {
    if (is_var()) return var_name();
    if (args().empty()) return root().name;
    std::string out = root().name + "(";
    for (std::size_t i = 0; i < args().size(); ++i) {
        if (i) out += ", ";
        out += args()[i].to_string();
    }
    return out + ")";
}

int Term::compare(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return 0;
    if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
    if (a.is_var()) return a.var_name().compare(b.var_name());
    if (int c = a.root().name.compare(b.root().name)) return c;
    if (a.root().arity != b.root().arity) return a.root().arity < b.root().arity ? -1 : 1;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = compare(a.args()[i], b.args()[i])) return c;
    return 0;
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash()) return false;
    return Term::compare(a, b) == 0;
}

const Term* Substitution::lookup(const std::string& var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
}

void Substitution::bind(std::string var, Term value) {
    map_.insert_or_assign(std::move(var), std::move(value));
}

namespace {

Term substitute_one(const Term& t, const std::string& var, const Term& value) {
    if (t.is_var()) return t.var_name() == var ? value : t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(substitute_one(a, var, value));
    return Term::app(t.root(), std::move(args));
}

}  // namespace

void Substitution::substitute_in_ranges(const std::string& var, const Term& value) {
    for (auto& [key, range] : map_) range = substitute_one(range, var, value);
}

Term Substitution::apply(const Term& t) const {
    if (t.is_var()) {
        const Term* bound = lookup(t.var_name());
        return bound ? *bound : t;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(apply(a));
    return Term::app(t.root(), std::move(args));
}

bool operator==(const Substitution& a, const Substitution& b) {
    return a.map_ == b.map_;
}

std::string Substitution::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [var, value] : map_) {
        if (!first) out += ", ";
        first = false;
        out += var + " -> " + value.to_string();
    }
    return out + "}";
}

std::vector<std::string> Rule::extra_variables() const {
    std::set<std::string> in_lhs = lhs.variable_set();
    std::vector<std::string> out;
    for (const std::string& v : rhs.variables_in_order())
        if (!in_lhs.count(v)) out.push_back(v);
    return out;
}

std::string Rule::to_string() const {
    return lhs.to_string() + " -> " + rhs.to_string();
}

std::set<Symbol> Trs::signature() const {
    std::set<Symbol> out;
    for (const Rule& r : rules) {
        r.lhs.collect_symbols(out);
        r.rhs.collect_symbols(out);
    }
    return out;
}

std::set<std::string> Trs::variable_names() const {
    std::set<std::string> out;
    for (const Rule& r : rules) {
        for (const std::string& v : r.lhs.variables_in_order()) out.insert(v);
        for (const std::string& v : r.rhs.variables_in_order()) out.insert(v);
    }
    return out;
}

std::string Trs::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rules.size(); ++i)
        out << (i + 1) << ": " << rules[i].to_string() << "\n";
    return out.str();
}

}  // namespace confcheck
