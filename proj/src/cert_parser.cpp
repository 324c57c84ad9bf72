#include <cctype>

#include "confcheck/parser.hpp"

namespace confcheck {

namespace {

// ---------------------------------------------------------------------------
// Shared helpers

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// In certificate terms, identifiers x0, x1, ... denote variables (the
// checker's canonical critical-pair namespace); everything else is a
// function symbol.
bool is_cert_variable(const std::string& name) {
    return name.size() >= 2 && name[0] == 'x' && all_digits(name.substr(1));
}

bool is_grounding_constant(const std::string& name) {
    return name.size() >= 3 && name[0] == '#' && name[1] == 'g' && all_digits(name.substr(2));
}

void check_symbol_name(const Sexpr& node, const std::string& name, bool allow_grounding = false) {
    if (name == "⊥" || (!name.empty() && name[0] == '#' &&
                         !(allow_grounding && is_grounding_constant(name))))
        throw ParseError("reserved symbol '" + name + "'", node.line, node.col);
}

std::size_t parse_uint(const Sexpr& node) {
    if (!node.is_atom() || !all_digits(node.text))
        throw ParseError("expected a non-negative integer, found '" + node.to_string() + "'",
                         node.line, node.col);
    try {
        return std::stoull(node.text);
    } catch (const std::out_of_range&) {
        throw ParseError("integer out of range: " + node.text, node.line, node.col);
    }
}

Nat parse_nat(const Sexpr& node) {
    if (!node.is_atom() || !all_digits(node.text))
        throw ParseError("expected a non-negative integer coefficient, found '" +
                             node.to_string() + "'",
                         node.line, node.col);
    return Nat(node.text);
}

std::string parse_state(const Sexpr& node) {
    if (!node.is_atom())
        throw ParseError("expected a state name, found '" + node.to_string() + "'", node.line,
                         node.col);
    return node.text;
}

Term parse_cert_term(const Sexpr& node) {
    if (node.is_atom()) {
        check_symbol_name(node, node.text);
        if (is_cert_variable(node.text)) return Term::var(node.text);
        return Term::app({node.text, 0});
    }
    if (node.size() == 0 || !node.at(0).is_atom())
        throw ParseError("malformed term '" + node.to_string() + "'", node.line, node.col);
    const std::string& name = node.at(0).text;
    check_symbol_name(node.at(0), name);
    std::vector<Term> args;
    for (std::size_t i = 1; i < node.size(); ++i) args.push_back(parse_cert_term(node.at(i)));
    std::size_t arity = args.size();
    return Term::app({name, arity}, std::move(args));
}

Position parse_position(const Sexpr& node) {
    if (!node.is_atom())
        throw ParseError("expected a position, found '" + node.to_string() + "'", node.line,
                         node.col);
    if (node.text == "e") return {};
    Position pos;
    std::size_t start = 0;
    const std::string& s = node.text;
    while (start <= s.size()) {
        std::size_t dot = s.find('.', start);
        std::string part = s.substr(start, dot == std::string::npos ? dot : dot - start);
        if (!all_digits(part) || part == "0")
            throw ParseError("malformed position '" + s + "'", node.line, node.col);
        pos.push_back(std::stoull(part) - 1);
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return pos;
}

std::size_t parse_rule_index(const Sexpr& node) {
    std::size_t index = parse_uint(node);
    if (index == 0) throw ParseError("rule indices are 1-based", node.line, node.col);
    return index - 1;
}

Substitution parse_bindings(const Sexpr& node) {
    if (!node.is_list())
        throw ParseError("expected a binding list, found '" + node.to_string() + "'", node.line,
                         node.col);
    Substitution out;
    for (const Sexpr& entry : node.items) {
        if (!entry.is_list() || entry.size() != 2 || !entry.at(0).is_atom())
            throw ParseError("malformed binding '" + entry.to_string() + "'", entry.line,
                             entry.col);
        out.bind(entry.at(0).text, parse_cert_term(entry.at(1)));
    }
    return out;
}

std::vector<DerivationStep> parse_steps(const Sexpr& node) {
    if (!node.headed("steps"))
        throw ParseError("expected (steps ...), found '" + node.to_string() + "'", node.line,
                         node.col);
    std::vector<DerivationStep> out;
    for (std::size_t i = 1; i < node.size(); ++i) {
        const Sexpr& step = node.at(i);
        if (!step.is_list() || step.size() != 3)
            throw ParseError("malformed step '" + step.to_string() + "'", step.line, step.col);
        out.push_back({parse_position(step.at(0)), parse_rule_index(step.at(1)),
                       parse_bindings(step.at(2))});
    }
    return out;
}

LinearPolyInterp parse_interp(const Sexpr& node) {
    if (!node.headed("interp") || node.size() < 2)
        throw ParseError("expected (interp (f c0 c1 ...) ...), found '" + node.to_string() + "'",
                         node.line, node.col);
    LinearPolyInterp interp;
    for (std::size_t i = 1; i < node.size(); ++i) {
        const Sexpr& entry = node.at(i);
        if (!entry.is_list() || entry.size() < 2 || !entry.at(0).is_atom())
            throw ParseError("malformed interpretation entry '" + entry.to_string() + "'",
                             entry.line, entry.col);
        check_symbol_name(entry.at(0), entry.at(0).text);
        std::vector<Nat> coeffs;
        for (std::size_t j = 1; j < entry.size(); ++j) coeffs.push_back(parse_nat(entry.at(j)));
        std::size_t arity = coeffs.size() - 1;
        interp.set({entry.at(0).text, arity}, std::move(coeffs));
    }
    return interp;
}

std::vector<LinearPolyInterp> parse_termination_cert(const Sexpr& node) {
    if (!node.is_list() || node.size() == 0)
        throw ParseError("expected a non-empty list of interpretation rounds", node.line,
                         node.col);
    std::vector<LinearPolyInterp> rounds;
    for (const Sexpr& round : node.items) rounds.push_back(parse_interp(round));
    return rounds;
}

JoinMethod parse_join_method(const Sexpr& node) {
    if (node.headed("nf") && node.size() == 2) return JoinByNormalization{parse_uint(node.at(1))};
    if (node.headed("bfs") && node.size() == 2) return JoinByBfs{parse_uint(node.at(1))};
    if (node.headed("joins")) {
        JoinExplicit joins;
        for (std::size_t i = 1; i < node.size(); ++i) {
            const Sexpr& join = node.at(i);
            if (!join.is_list() || join.size() != 4)
                throw ParseError("malformed join '" + join.to_string() + "'", join.line, join.col);
            joins.joins.push_back({parse_cert_term(join.at(0)), parse_cert_term(join.at(1)),
                                   parse_steps(join.at(2)), parse_steps(join.at(3))});
        }
        return joins;
    }
    throw ParseError("unknown join method '" + node.to_string() + "'", node.line, node.col);
}

ArgumentFilter parse_filter(const Sexpr& node) {
    if (!node.is_list())
        throw ParseError("expected a filter entry list", node.line, node.col);
    ArgumentFilter filter;
    for (const Sexpr& entry : node.items) {
        if (!entry.is_list() || entry.size() < 2 || !entry.at(0).is_atom() ||
            !entry.at(1).is_atom())
            throw ParseError("malformed filter entry '" + entry.to_string() + "'", entry.line,
                             entry.col);
        check_symbol_name(entry.at(0), entry.at(0).text);
        const std::string& mode = entry.at(1).text;
        if (mode == "keep") {
            ArgumentFilter::Keep keep;
            for (std::size_t i = 2; i < entry.size(); ++i) {
                std::size_t position = parse_uint(entry.at(i));
                if (position == 0)
                    throw ParseError("filter positions are 1-based", entry.at(i).line,
                                     entry.at(i).col);
                keep.positions.push_back(position - 1);
            }
            filter.entries.emplace(entry.at(0).text, std::move(keep));
        } else if (mode == "collapse" && entry.size() == 3) {
            std::size_t position = parse_uint(entry.at(2));
            if (position == 0)
                throw ParseError("filter positions are 1-based", entry.at(2).line,
                                 entry.at(2).col);
            filter.entries.emplace(entry.at(0).text, ArgumentFilter::Collapse{position - 1});
        } else {
            throw ParseError("malformed filter entry '" + entry.to_string() + "'", entry.line,
                             entry.col);
        }
    }
    return filter;
}

FiniteAlgebra parse_model(const Sexpr& node) {
    // (model DOMAIN (order (a b)*) (funs (f ((args) value)+)*) DEFAULT)
    if (node.size() != 5)
        throw ParseError("expected (model domain order funs default)", node.line, node.col);
    FiniteAlgebra algebra;
    algebra.domain = parse_uint(node.at(1));
    const Sexpr& order = node.at(2);
    if (!order.headed("order"))
        throw ParseError("expected (order ...), found '" + order.to_string() + "'", order.line,
                         order.col);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Sexpr& pair = order.at(i);
        if (!pair.is_list() || pair.size() != 2)
            throw ParseError("malformed order pair '" + pair.to_string() + "'", pair.line,
                             pair.col);
        algebra.order.emplace_back(parse_uint(pair.at(0)), parse_uint(pair.at(1)));
    }
    const Sexpr& funs = node.at(3);
    if (!funs.headed("funs"))
        throw ParseError("expected (funs ...), found '" + funs.to_string() + "'", funs.line,
                         funs.col);
    for (std::size_t i = 1; i < funs.size(); ++i) {
        const Sexpr& entry = funs.at(i);
        if (!entry.is_list() || entry.size() < 2 || !entry.at(0).is_atom())
            throw ParseError("malformed function table '" + entry.to_string() + "'", entry.line,
                             entry.col);
        check_symbol_name(entry.at(0), entry.at(0).text);
        std::size_t arity = 0;
        std::map<std::vector<std::size_t>, std::size_t> rows;
        for (std::size_t j = 1; j < entry.size(); ++j) {
            const Sexpr& row = entry.at(j);
            if (!row.is_list() || row.size() != 2 || !row.at(0).is_list())
                throw ParseError("malformed table row '" + row.to_string() + "'", row.line,
                                 row.col);
            std::vector<std::size_t> args;
            for (const Sexpr& a : row.at(0).items) args.push_back(parse_uint(a));
            if (j == 1)
                arity = args.size();
            else if (args.size() != arity)
                throw ParseError("inconsistent arity in table of '" + entry.at(0).text + "'",
                                 row.line, row.col);
            for (std::size_t value : args)
                if (value >= algebra.domain)
                    throw ParseError("table argument outside the carrier", row.line, row.col);
            if (!rows.emplace(args, parse_uint(row.at(1))).second)
                throw ParseError("duplicate table row '" + row.to_string() + "'", row.line,
                                 row.col);
        }
        std::size_t expected = 1;
        for (std::size_t j = 0; j < arity; ++j) expected *= algebra.domain;
        if (rows.size() != expected)
            throw ParseError("function table of '" + entry.at(0).text + "' must cover all " +
                                 std::to_string(expected) + " argument tuples",
                             entry.line, entry.col);
        // rows is sorted by argument tuple, which is exactly the flattened
        // lexicographic layout
        std::vector<std::size_t> table;
        table.reserve(expected);
        for (const auto& [args, value] : rows) table.push_back(value);
        algebra.tables.emplace(Symbol{entry.at(0).text, arity}, std::move(table));
    }
    algebra.default_element = parse_uint(node.at(4));
    return algebra;
}

TreeAutomaton parse_automaton(const Sexpr& node) {
    // (aut (states q+) (final q*) (trans tr*))
    if (!node.headed("aut") || node.size() != 4)
        throw ParseError("expected (aut (states ...) (final ...) (trans ...))", node.line,
                         node.col);
    TreeAutomaton automaton;
    const Sexpr& states = node.at(1);
    if (!states.headed("states") || states.size() < 2)
        throw ParseError("expected (states q ...)", states.line, states.col);
    for (std::size_t i = 1; i < states.size(); ++i)
        automaton.states.push_back(parse_state(states.at(i)));
    const Sexpr& final_states = node.at(2);
    if (!final_states.headed("final"))
        throw ParseError("expected (final ...)", final_states.line, final_states.col);
    for (std::size_t i = 1; i < final_states.size(); ++i)
        automaton.final_states.insert(parse_state(final_states.at(i)));
    const Sexpr& trans = node.at(3);
    if (!trans.headed("trans"))
        throw ParseError("expected (trans ...)", trans.line, trans.col);
    for (std::size_t i = 1; i < trans.size(); ++i) {
        const Sexpr& tr = trans.at(i);
        if (!tr.is_list() || tr.size() != 2)
            throw ParseError("malformed transition '" + tr.to_string() + "'", tr.line, tr.col);
        if (tr.at(0).is_atom()) {  // epsilon transition (q q')
            automaton.epsilon_transitions.emplace_back(parse_state(tr.at(0)),
                                                       parse_state(tr.at(1)));
        } else {  // ((f q1 ... qn) q)
            const Sexpr& lhs = tr.at(0);
            if (lhs.size() == 0 || !lhs.at(0).is_atom())
                throw ParseError("malformed transition '" + tr.to_string() + "'", tr.line,
                                 tr.col);
            check_symbol_name(lhs.at(0), lhs.at(0).text, /*allow_grounding=*/true);
            TreeAutomaton::SymTransition st;
            st.symbol = {lhs.at(0).text, lhs.size() - 1};
            for (std::size_t j = 1; j < lhs.size(); ++j)
                st.arg_states.push_back(parse_state(lhs.at(j)));
            st.target = parse_state(tr.at(1));
            automaton.transitions.push_back(std::move(st));
        }
    }
    CheckResult valid = automaton.validate();
    if (!valid) throw ParseError("invalid automaton: " + valid.reason, node.line, node.col);
    return automaton;
}

ClosureEvidence parse_evidence(const Sexpr& node) {
    if (node.headed("compat") && node.size() == 1) return ClosureCompatibility{};
    if (node.headed("state-compat") && node.size() == 2) {
        const Sexpr& pairs = node.at(1);
        if (!pairs.is_list())
            throw ParseError("expected a relation list", pairs.line, pairs.col);
        ClosureStateCompatibility sc;
        for (const Sexpr& pair : pairs.items) {
            if (!pair.is_list() || pair.size() != 2)
                throw ParseError("malformed relation pair '" + pair.to_string() + "'", pair.line,
                                 pair.col);
            sc.relation.emplace_back(parse_state(pair.at(0)), parse_state(pair.at(1)));
        }
        return sc;
    }
    throw ParseError("unknown closure evidence '" + node.to_string() + "'", node.line, node.col);
}

NjCertificate parse_nj(const Sexpr& node) {
    if (!node.is_list() || node.size() == 0 || !node.at(0).is_atom())
        throw ParseError("malformed non-joinability proof '" + node.to_string() + "'", node.line,
                         node.col);
    const std::string& head = node.at(0).text;
    if (head == "tcap" && node.size() == 1) return {NjTcap{}};
    if (head == "distinct-nf" && node.size() == 1) return {NjDistinctNf{}};
    if (head == "ground" && node.size() == 3)
        return {NjGround{parse_bindings(node.at(1)),
                         std::make_shared<NjCertificate>(parse_nj(node.at(2)))}};
    if (head == "usable" && node.size() == 2)
        return {NjUsable{std::make_shared<NjCertificate>(parse_nj(node.at(1)))}};
    if (head == "discrimination" && node.size() == 2)
        return {NjDiscrimination{parse_interp(node.at(1))}};
    if (head == "filter" && node.size() == 3)
        return {NjFilter{parse_filter(node.at(1)),
                         std::make_shared<NjCertificate>(parse_nj(node.at(2)))}};
    if (head == "model") return {NjModel{parse_model(node)}};
    if (head == "automata" && node.size() == 5)
        return {NjAutomata{parse_automaton(node.at(1)), parse_automaton(node.at(2)),
                           parse_evidence(node.at(3)), parse_evidence(node.at(4))}};
    throw ParseError("unknown non-joinability technique '" + head + "'", node.line, node.col);
}

NonConfluenceProof parse_ncproof(const Sexpr& node) {
    if (node.headed("fork") && node.size() == 5) {
        return {ForkProof{parse_cert_term(node.at(1)), parse_steps(node.at(2)),
                          parse_steps(node.at(3)), parse_nj(node.at(4))}};
    }
    if (node.headed("modular") && node.size() == 3) {
        const Sexpr& indices = node.at(1);
        if (!indices.is_list() || indices.size() == 0)
            throw ParseError("expected a non-empty rule index list", indices.line, indices.col);
        ModularProof modular;
        for (const Sexpr& index : indices.items)
            modular.kept_rules.push_back(parse_rule_index(index));
        modular.inner = std::make_shared<NonConfluenceProof>(parse_ncproof(node.at(2)));
        return {std::move(modular)};
    }
    if (node.is_list() && node.size() > 0 && node.at(0).is_atom())
        throw ParseError("unknown non-confluence technique '" + node.at(0).text + "'", node.line,
                         node.col);
    throw ParseError("malformed non-confluence proof", node.line, node.col);
}

ConfluenceProof parse_cproof(const Sexpr& node) {
    if (node.headed("weakly-orthogonal") && node.size() == 1)
        return {WeaklyOrthogonalProof{}};
    if (node.headed("strongly-closed") && node.size() == 2)
        return {StronglyClosedProof{parse_uint(node.at(1))}};
    if (node.headed("terminating") && node.size() == 3)
        return {TerminatingProof{parse_termination_cert(node.at(1)),
                                 parse_join_method(node.at(2))}};
    if (node.is_list() && node.size() > 0 && node.at(0).is_atom())
        throw ParseError("unknown confluence technique '" + node.at(0).text + "'", node.line,
                         node.col);
    throw ParseError("malformed confluence proof", node.line, node.col);
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
    Sexpr root = parse_sexpr(text);
    if (root.headed("confluence") && root.size() == 2)
        return {parse_cproof(root.at(1))};
    if (root.headed("nonconfluence") && root.size() == 2)
        return {parse_ncproof(root.at(1))};
    throw ParseError("certificate must be (confluence ...) or (nonconfluence ...)", root.line,
                     root.col);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string print_cert_term(const Term& t) {
    if (t.is_var()) return t.var_name();
    if (t.args().empty()) return t.root().name;
    std::string out = "(" + t.root().name;
    for (const Term& a : t.args()) out += " " + print_cert_term(a);
    return out + ")";
}

std::string print_bindings(const Substitution& sigma) {
    std::string out = "(";
    bool first = true;
    for (const auto& [var, term] : sigma.bindings()) {
        if (!first) out += " ";
        first = false;
        out += "(" + var + " " + print_cert_term(term) + ")";
    }
    return out + ")";
}

std::string print_steps(const std::vector<DerivationStep>& steps) {
    std::string out = "(steps";
    for (const DerivationStep& step : steps)
        out += " (" + position_to_string(step.pos) + " " + std::to_string(step.rule_index + 1) +
               " " + print_bindings(step.extra) + ")";
    return out + ")";
}

std::string print_interp(const LinearPolyInterp& interp) {
    std::string out = "(interp";
    for (const auto& [symbol, coeffs] : interp.entries()) {
        out += " (" + symbol.name;
        for (const Nat& c : coeffs) out += " " + c.str();
        out += ")";
    }
    return out + ")";
}

std::string print_join_method(const JoinMethod& method) {
    return std::visit(
        [](const auto& m) -> std::string {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, JoinByNormalization>) {
                return "(nf " + std::to_string(m.step_budget) + ")";
            } else if constexpr (std::is_same_v<M, JoinByBfs>) {
                return "(bfs " + std::to_string(m.bound) + ")";
            } else {
                std::string out = "(joins";
                for (const ExplicitJoin& join : m.joins)
                    out += " (" + print_cert_term(join.left) + " " + print_cert_term(join.right) +
                           " " + print_steps(join.left_steps) + " " +
                           print_steps(join.right_steps) + ")";
                return out + ")";
            }
        },
        method);
}

std::string print_filter(const ArgumentFilter& filter) {
    std::string out = "(";
    bool first = true;
    for (const auto& [name, entry] : filter.entries) {
        if (!first) out += " ";
        first = false;
        if (const auto* keep = std::get_if<ArgumentFilter::Keep>(&entry)) {
            out += "(" + name + " keep";
            for (std::size_t pos : keep->positions) out += " " + std::to_string(pos + 1);
            out += ")";
        } else {
            const auto& collapse = std::get<ArgumentFilter::Collapse>(entry);
            out += "(" + name + " collapse " + std::to_string(collapse.position + 1) + ")";
        }
    }
    return out + ")";
}

std::string print_model(const FiniteAlgebra& algebra) {
    std::string out = "(model " + std::to_string(algebra.domain) + " (order";
    for (const auto& [a, b] : algebra.order)
        out += " (" + std::to_string(a) + " " + std::to_string(b) + ")";
    out += ") (funs";
    for (const auto& [symbol, table] : algebra.tables) {
        out += " (" + symbol.name;
        std::vector<std::size_t> args(symbol.arity, 0);
        for (std::size_t index = 0; index < table.size(); ++index) {
            std::size_t rest = index;
            for (std::size_t i = symbol.arity; i-- > 0;) {
                args[i] = rest % algebra.domain;
                rest /= algebra.domain;
            }
            out += " ((";
            for (std::size_t i = 0; i < args.size(); ++i)
                out += (i ? " " : "") + std::to_string(args[i]);
            out += ") " + std::to_string(table[index]) + ")";
        }
        out += ")";
    }
    out += ") " + std::to_string(algebra.default_element) + ")";
    return out;
}

std::string print_automaton(const TreeAutomaton& automaton) {
    std::string out = "(aut (states";
    for (const std::string& q : automaton.states) out += " " + q;
    out += ") (final";
    for (const std::string& q : automaton.final_states) out += " " + q;
    out += ") (trans";
    for (const auto& tr : automaton.transitions) {
        out += " ((" + tr.symbol.name;
        for (const std::string& q : tr.arg_states) out += " " + q;
        out += ") " + tr.target + ")";
    }
    for (const auto& [from, to] : automaton.epsilon_transitions)
        out += " (" + from + " " + to + ")";
    return out + "))";
}

std::string print_evidence(const ClosureEvidence& evidence) {
    if (std::holds_alternative<ClosureCompatibility>(evidence)) return "(compat)";
    const auto& sc = std::get<ClosureStateCompatibility>(evidence);
    std::string out = "(state-compat (";
    bool first = true;
    for (const auto& [from, to] : sc.relation) {
        if (!first) out += " ";
        first = false;
        out += "(" + from + " " + to + ")";
    }
    return out + "))";
}

std::string print_nj(const NjCertificate& cert) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NjGround>) {
                return "(ground " + print_bindings(node.sigma) + " " + print_nj(*node.inner) + ")";
            } else if constexpr (std::is_same_v<T, NjTcap>) {
                return "(tcap)";
            } else if constexpr (std::is_same_v<T, NjDistinctNf>) {
                return "(distinct-nf)";
            } else if constexpr (std::is_same_v<T, NjUsable>) {
                return "(usable " + print_nj(*node.inner) + ")";
            } else if constexpr (std::is_same_v<T, NjDiscrimination>) {
                return "(discrimination " + print_interp(node.interp) + ")";
            } else if constexpr (std::is_same_v<T, NjFilter>) {
                return "(filter " + print_filter(node.filter) + " " + print_nj(*node.inner) + ")";
            } else if constexpr (std::is_same_v<T, NjModel>) {
                return print_model(node.algebra);
            } else {
                return "(automata " + print_automaton(node.a1) + " " + print_automaton(node.a2) +
                       " " + print_evidence(node.evidence1) + " " + print_evidence(node.evidence2) +
                       ")";
            }
        },
        cert.node);
}

std::string print_ncproof(const NonConfluenceProof& proof) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ForkProof>) {
                return "(fork " + print_cert_term(node.start) + " " + print_steps(node.steps1) +
                       " " + print_steps(node.steps2) + " " + print_nj(node.nj) + ")";
            } else {
                std::string out = "(modular (";
                for (std::size_t i = 0; i < node.kept_rules.size(); ++i)
                    out += (i ? " " : "") + std::to_string(node.kept_rules[i] + 1);
                return out + ") " + print_ncproof(*node.inner) + ")";
            }
        },
        proof.node);
}

std::string print_cproof(const ConfluenceProof& proof) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, WeaklyOrthogonalProof>) {
                return "(weakly-orthogonal)";
            } else if constexpr (std::is_same_v<T, StronglyClosedProof>) {
                return "(strongly-closed " + std::to_string(node.bound) + ")";
            } else {
                std::string out = "(terminating (";
                for (std::size_t i = 0; i < node.rounds.size(); ++i)
                    out += (i ? " " : "") + print_interp(node.rounds[i]);
                return out + ") " + print_join_method(node.method) + ")";
            }
        },
        proof.node);
}

}  // namespace

std::string print_certificate(const Certificate& cert) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ConfluenceProof>) {
                return "(confluence " + print_cproof(node) + ")";
            } else {
                return "(nonconfluence " + print_ncproof(node) + ")";
            }
        },
        cert.node);
}

}  // namespace confcheck
