#include "confcheck/tree_automaton.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "confcheck/critical_pairs.hpp"

namespace confcheck {

bool TreeAutomaton::declares(const std::string& state) const {
    for (const std::string& s : states)
        if (s == state) return true;
    return false;
}

CheckResult TreeAutomaton::validate() const {
    for (const SymTransition& tr : transitions) {
        for (const std::string& q : tr.arg_states)
            if (!declares(q))
                return CheckResult::reject("transition references undeclared state " + q);
        if (!declares(tr.target))
            return CheckResult::reject("transition references undeclared state " + tr.target);
        if (tr.symbol.arity != tr.arg_states.size())
            return CheckResult::reject("transition arity mismatch for " + tr.symbol.to_string());
    }
    for (const auto& [from, to] : epsilon_transitions)
        if (!declares(from) || !declares(to))
            return CheckResult::reject("epsilon transition references undeclared state");
    for (const std::string& q : final_states)
        if (!declares(q)) return CheckResult::reject("undeclared final state " + q);
    return CheckResult::accept();
}

namespace {

void epsilon_close(const TreeAutomaton& a, std::set<std::string>& states) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [from, to] : a.epsilon_transitions)
            if (states.count(from) && states.insert(to).second) changed = true;
    }
}

}  // namespace

std::set<std::string> ta_reach(const TreeAutomaton& a, const Term& t) {
    if (t.is_var()) {
        std::set<std::string> out;
        if (a.declares(t.var_name())) out.insert(t.var_name());
        epsilon_close(a, out);
        return out;
    }
    std::vector<std::set<std::string>> arg_reach;
    arg_reach.reserve(t.args().size());
    for (const Term& arg : t.args()) arg_reach.push_back(ta_reach(a, arg));

    std::set<std::string> out;
    for (const TreeAutomaton::SymTransition& tr : a.transitions) {
        if (tr.symbol != t.root()) continue;
        bool applicable = true;
        for (std::size_t i = 0; i < tr.arg_states.size(); ++i) {
            if (!arg_reach[i].count(tr.arg_states[i])) {
                applicable = false;
                break;
            }
        }
        if (applicable) out.insert(tr.target);
    }
    epsilon_close(a, out);
    return out;
}

bool ta_membership(const TreeAutomaton& a, const Term& t) {
    if (!t.is_ground()) throw std::invalid_argument("ta_membership requires a ground term");
    for (const std::string& q : ta_reach(a, t))
        if (a.final_states.count(q)) return true;
    return false;
}

TreeAutomaton ta_intersection(const TreeAutomaton& a1, const TreeAutomaton& a2) {
    using Pair = std::pair<std::string, std::string>;
    auto name = [](const Pair& p) { return "(" + p.first + "," + p.second + ")"; };

    std::set<Pair> reachable;
    TreeAutomaton product;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t1 : a1.transitions) {
            for (const auto& t2 : a2.transitions) {
                if (t1.symbol != t2.symbol) continue;
                bool args_ok = true;
                for (std::size_t i = 0; i < t1.arg_states.size(); ++i) {
                    if (!reachable.count({t1.arg_states[i], t2.arg_states[i]})) {
                        args_ok = false;
                        break;
                    }
                }
                if (!args_ok) continue;
                if (reachable.insert({t1.target, t2.target}).second) changed = true;
            }
        }
        for (const auto& [from, to] : a1.epsilon_transitions) {
            for (const Pair& p : std::set<Pair>(reachable)) {
                if (p.first == from && reachable.insert({to, p.second}).second) changed = true;
            }
        }
        for (const auto& [from, to] : a2.epsilon_transitions) {
            for (const Pair& p : std::set<Pair>(reachable)) {
                if (p.second == from && reachable.insert({p.first, to}).second) changed = true;
            }
        }
    }

    for (const Pair& p : reachable) product.states.push_back(name(p));

    for (const auto& t1 : a1.transitions) {
        for (const auto& t2 : a2.transitions) {
            if (t1.symbol != t2.symbol) continue;
            bool args_ok = true;
            std::vector<std::string> arg_names;
            for (std::size_t i = 0; i < t1.arg_states.size(); ++i) {
                Pair arg{t1.arg_states[i], t2.arg_states[i]};
                if (!reachable.count(arg)) {
                    args_ok = false;
                    break;
                }
                arg_names.push_back(name(arg));
            }
            if (!args_ok || !reachable.count({t1.target, t2.target})) continue;
            product.transitions.push_back({t1.symbol, arg_names, name({t1.target, t2.target})});
        }
    }
    for (const auto& [from, to] : a1.epsilon_transitions)
        for (const Pair& p : reachable)
            if (p.first == from && reachable.count({to, p.second}))
                product.epsilon_transitions.emplace_back(name(p), name({to, p.second}));
    for (const auto& [from, to] : a2.epsilon_transitions)
        for (const Pair& p : reachable)
            if (p.second == from && reachable.count({p.first, to}))
                product.epsilon_transitions.emplace_back(name(p), name({p.first, to}));

    for (const Pair& p : reachable)
        if (a1.final_states.count(p.first) && a2.final_states.count(p.second))
            product.final_states.insert(name(p));
    return product;
}

bool ta_empty(const TreeAutomaton& a) {
    std::set<std::string> productive;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& tr : a.transitions) {
            bool args_ok = true;
            for (const std::string& q : tr.arg_states) {
                if (!productive.count(q)) {
                    args_ok = false;
                    break;
                }
            }
            if (args_ok && productive.insert(tr.target).second) changed = true;
        }
        for (const auto& [from, to] : a.epsilon_transitions)
            if (productive.count(from) && productive.insert(to).second) changed = true;
    }
    for (const std::string& q : a.final_states)
        if (productive.count(q)) return false;
    return true;
}

namespace {

// Enumerates all maps from vars to declared states, invoking the callback
// until it reports failure.
bool for_each_assignment(const std::vector<std::string>& vars,
                         const std::vector<std::string>& states,
                         const std::function<bool(const Substitution&)>& body) {
    if (!vars.empty() && states.empty()) return true;  // no assignments exist
    std::vector<std::size_t> odometer(vars.size(), 0);
    for (;;) {
        Substitution theta;
        for (std::size_t i = 0; i < vars.size(); ++i)
            theta.bind(vars[i], Term::var(states[odometer[i]]));
        if (!body(theta)) return false;
        std::size_t pos = 0;
        while (pos < odometer.size()) {
            if (++odometer[pos] < states.size()) break;
            odometer[pos] = 0;
            ++pos;
        }
        if (pos == odometer.size()) return true;
    }
}

}  // namespace

CheckResult ta_compatible(const TreeAutomaton& a, const Trs& trs) {
    if (!check_variable_conditions(trs).vcsubset)
        return CheckResult::reject("vcsubset violated: some rule has rhs-only variables");
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        const Rule& rule = trs.rules[i];
        std::vector<std::string> vars = rule.lhs.variables_in_order();
        CheckResult failure = CheckResult::accept();
        bool ok = for_each_assignment(vars, a.states, [&](const Substitution& theta) {
            Term lhs_inst = theta.apply(rule.lhs);
            Term rhs_inst = theta.apply(rule.rhs);
            std::set<std::string> lhs_reach = ta_reach(a, lhs_inst);
            if (lhs_reach.empty()) return true;
            std::set<std::string> rhs_reach = ta_reach(a, rhs_inst);
            for (const std::string& q : lhs_reach) {
                if (!rhs_reach.count(q)) {
                    failure = CheckResult::reject(
                        "rule " + std::to_string(i + 1) + " (" + rule.to_string() +
                        ") not compatible: under " + theta.to_string() + " state " + q +
                        " is reached by the lhs but not by the rhs");
                    return false;
                }
            }
            return true;
        });
        if (!ok) return failure;
    }
    return CheckResult::accept();
}

CheckResult ta_state_compatible(
    const TreeAutomaton& a, const Trs& trs,
    const std::vector<std::pair<std::string, std::string>>& relation) {
    if (!check_variable_conditions(trs).vcsubset)
        return CheckResult::reject("vcsubset violated: some rule has rhs-only variables");

    std::set<std::pair<std::string, std::string>> rel(relation.begin(), relation.end());
    auto related = [&](const std::string& p, const std::string& q) {
        return p == q || rel.count({p, q});  // identity admitted implicitly
    };

    // (a) rule condition
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        const Rule& rule = trs.rules[i];
        std::vector<std::string> vars = rule.lhs.variables_in_order();
        CheckResult failure = CheckResult::accept();
        bool ok = for_each_assignment(vars, a.states, [&](const Substitution& theta) {
            std::set<std::string> lhs_reach = ta_reach(a, theta.apply(rule.lhs));
            if (lhs_reach.empty()) return true;
            std::set<std::string> rhs_reach = ta_reach(a, theta.apply(rule.rhs));
            for (const std::string& q : lhs_reach) {
                bool found = false;
                for (const std::string& q2 : rhs_reach) {
                    if (related(q, q2)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    failure = CheckResult::reject(
                        "rule condition fails for rule " + std::to_string(i + 1) + " (" +
                        rule.to_string() + ") under " + theta.to_string() + ": state " + q +
                        " has no related state reached by the rhs");
                    return false;
                }
            }
            return true;
        });
        if (!ok) return failure;
    }

    // (b) transition condition: replace one argument state by a related one
    for (const auto& tr : a.transitions) {
        for (std::size_t i = 0; i < tr.arg_states.size(); ++i) {
            for (const auto& [p, q] : rel) {
                if (p != tr.arg_states[i] || p == q) continue;
                std::vector<Term> arg_terms;
                for (std::size_t j = 0; j < tr.arg_states.size(); ++j)
                    arg_terms.push_back(Term::var(j == i ? q : tr.arg_states[j]));
                std::set<std::string> reach = ta_reach(a, Term::app(tr.symbol, arg_terms));
                bool found = false;
                for (const std::string& q2 : reach) {
                    if (related(tr.target, q2)) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    return CheckResult::reject(
                        "transition condition fails: replacing argument " + std::to_string(i + 1) +
                        " of " + tr.symbol.name + "-transition to " + tr.target + " by " + q +
                        " reaches no state related to " + tr.target);
            }
        }
    }
    // the same condition for epsilon transitions: a related source state
    // must again reach a state related to the target
    for (const auto& [from, to] : a.epsilon_transitions) {
        for (const auto& [p, q] : rel) {
            if (p != from || p == q) continue;
            std::set<std::string> reach = ta_reach(a, Term::var(q));
            bool found = false;
            for (const std::string& q2 : reach) {
                if (related(to, q2)) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return CheckResult::reject(
                    "transition condition fails: replacing the source of epsilon transition " +
                    from + " -> " + to + " by " + q + " reaches no state related to " + to);
        }
    }

    // (c) final condition
    for (const std::string& p : a.final_states)
        for (const auto& [from, to] : rel)
            if (from == p && !a.final_states.count(to))
                return CheckResult::reject("final condition fails: " + p + " is final, (" + p +
                                           ", " + to + ") is in the relation, but " + to +
                                           " is not final");
    return CheckResult::accept();
}

}  // namespace confcheck
