#include "confcheck/nonjoin.hpp"

#include <algorithm>
#include <functional>

#include "confcheck/critical_pairs.hpp"
#include "confcheck/unify.hpp"

namespace confcheck {

// ---------------------------------------------------------------------------
// FiniteAlgebra

bool FiniteAlgebra::geq(std::size_t a, std::size_t b) const {
    for (const auto& [x, y] : order)
        if (x == a && y == b) return true;
    return false;
}

std::optional<std::size_t> FiniteAlgebra::eval(
    const Term& t, const std::map<std::string, std::size_t>& valuation,
    std::string* missing) const {
    if (t.is_var()) {
        auto it = valuation.find(t.var_name());
        return it == valuation.end() ? default_element : it->second;
    }
    auto table = tables.find(t.root());
    if (table == tables.end()) {
        if (t.root().arity == 0 && t.root().name.rfind("#g", 0) == 0) return default_element;
        if (missing) *missing = t.root().to_string();
        return std::nullopt;
    }
    std::size_t index = 0;
    for (const Term& arg : t.args()) {
        std::optional<std::size_t> value = eval(arg, valuation, missing);
        if (!value) return std::nullopt;
        index = index * domain + *value;
    }
    if (index >= table->second.size()) {
        if (missing) *missing = "table of " + t.root().to_string() + " is incomplete";
        return std::nullopt;
    }
    return table->second[index];
}

CheckResult FiniteAlgebra::validate() const {
    if (domain == 0) return CheckResult::reject("empty carrier");
    for (const auto& [a, b] : order)
        if (a >= domain || b >= domain)
            return CheckResult::reject("order relation mentions elements outside the carrier");
    if (default_element >= domain)
        return CheckResult::reject("default element outside the carrier");

    for (std::size_t a = 0; a < domain; ++a)
        if (!geq(a, a))
            return CheckResult::reject("order is not a partial order: not reflexive at " +
                                       std::to_string(a));
    for (std::size_t a = 0; a < domain; ++a)
        for (std::size_t b = 0; b < domain; ++b)
            if (a != b && geq(a, b) && geq(b, a))
                return CheckResult::reject("order is not a partial order: not antisymmetric on " +
                                           std::to_string(a) + ", " + std::to_string(b));
    for (std::size_t a = 0; a < domain; ++a)
        for (std::size_t b = 0; b < domain; ++b)
            for (std::size_t c = 0; c < domain; ++c)
                if (geq(a, b) && geq(b, c) && !geq(a, c))
                    return CheckResult::reject("order is not a partial order: not transitive on " +
                                               std::to_string(a) + " >= " + std::to_string(b) +
                                               " >= " + std::to_string(c));

    std::size_t expected;
    for (const auto& [symbol, table] : tables) {
        expected = 1;
        for (std::size_t i = 0; i < symbol.arity; ++i) expected *= domain;
        if (table.size() != expected)
            return CheckResult::reject("function table of " + symbol.to_string() +
                                       " has wrong size");
        for (std::size_t value : table)
            if (value >= domain)
                return CheckResult::reject("function table of " + symbol.to_string() +
                                           " maps outside the carrier");
        // weak monotonicity, one argument position at a time
        for (std::size_t pos = 0; pos < symbol.arity; ++pos) {
            std::size_t stride = 1;
            for (std::size_t i = pos + 1; i < symbol.arity; ++i) stride *= domain;
            for (std::size_t base = 0; base < table.size(); ++base) {
                std::size_t digit = (base / stride) % domain;
                for (std::size_t other = 0; other < domain; ++other) {
                    if (!geq(digit, other)) continue;
                    std::size_t flipped = base - digit * stride + other * stride;
                    if (!geq(table[base], table[flipped]))
                        return CheckResult::reject(
                            "function " + symbol.to_string() +
                            " is not weakly monotone in argument " + std::to_string(pos + 1));
                }
            }
        }
    }
    return CheckResult::accept();
}

// ---------------------------------------------------------------------------
// Grounding

NjProblem auto_ground(const NjProblem& p) {
    if (p.t1.is_ground() && p.t2.is_ground()) return p;
    Substitution sigma;
    std::size_t next = 0;
    for (const Term* t : {&p.t1, &p.t2})
        for (const std::string& v : t->variables_in_order())
            if (!sigma.lookup(v)) sigma.bind(v, Term::app({"#g" + std::to_string(next++), 0}));
    return {p.r1, p.r2, sigma.apply(p.t1), sigma.apply(p.t2)};
}

CheckResult nj_ground(const NjProblem& p, const Substitution& sigma, const NjCertificate& inner) {
    NjProblem grounded{p.r1, p.r2, sigma.apply(p.t1), sigma.apply(p.t2)};
    return check_nj(grounded, inner).under("ground");
}

// ---------------------------------------------------------------------------
// Tcap and distinct normal forms

CheckResult nj_tcap(const NjProblem& p0) {
    NjProblem p = auto_ground(p0);
    Term cap1 = tcap(p.r1, p.t1);
    Term cap2 = tcap(p.r2, p.t2);
    // the two caps draw from the same fresh namespace; rename one apart
    Substitution renaming;
    for (const std::string& v : cap2.variables_in_order()) renaming.bind(v, Term::var(v + "'"));
    cap2 = renaming.apply(cap2);
    if (unify(cap1, cap2))
        return CheckResult::reject("tcap approximations " + cap1.to_string() + " and " +
                                   cap2.to_string() + " are unifiable");
    return CheckResult::accept();
}

CheckResult nj_distinct_nf(const NjProblem& p) {
    if (p.t1 == p.t2)
        return CheckResult::reject("terms are equal: " + p.t1.to_string());
    if (!successors(p.r1, p.t1).empty())
        return CheckResult::reject("t1 = " + p.t1.to_string() + " is not a normal form");
    if (!successors(p.r2, p.t2).empty())
        return CheckResult::reject("t2 = " + p.t2.to_string() + " is not a normal form");
    return CheckResult::accept();
}

// ---------------------------------------------------------------------------
// Usable rules

namespace {

// Cap of a subterm for usable-rules purposes: fresh variable for variable
// subterms, otherwise the root applied to the tcaps of the arguments.
Term usable_cap(const Trs& trs, const Term& t, std::size_t& fresh_counter) {
    if (t.is_var()) return Term::var("#v" + std::to_string(fresh_counter++) + "u");
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) {
        Term capped = tcap(trs, a);
        // refresh to keep caps of sibling subterms apart
        Substitution renaming;
        for (const std::string& v : capped.variables_in_order())
            renaming.bind(v, Term::var("#v" + std::to_string(fresh_counter++) + "u"));
        args.push_back(renaming.apply(capped));
    }
    return Term::app(t.root(), std::move(args));
}

void collect_subterms(const Term& t, std::vector<Term>& out) {
    out.push_back(t);
    if (t.is_app())
        for (const Term& a : t.args()) collect_subterms(a, out);
}

Term rename_rule_vars(const Term& t, const std::string& suffix) {
    if (t.is_var()) return Term::var(t.var_name() + suffix);
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(rename_rule_vars(a, suffix));
    return Term::app(t.root(), std::move(args));
}

// true when the lhs of some rule (renamed apart) unifies with the cap of
// some subterm of t
bool triggers(const Trs& trs, const Rule& rule, const Term& t, std::size_t& fresh_counter) {
    std::vector<Term> subterms;
    collect_subterms(t, subterms);
    Term lhs = rename_rule_vars(rule.lhs, "#l");
    for (const Term& sub : subterms) {
        Term cap = usable_cap(trs, sub, fresh_counter);
        if (unify(lhs, cap)) return true;
    }
    return false;
}

}  // namespace

Trs usable_rules_reach(const Trs& trs, const Term& t) {
    std::size_t fresh_counter = 0;
    std::vector<bool> usable(trs.rules.size(), false);
    for (std::size_t i = 0; i < trs.rules.size(); ++i)
        usable[i] = triggers(trs, trs.rules[i], t, fresh_counter);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < trs.rules.size(); ++i) {
            if (!usable[i]) continue;
            for (std::size_t j = 0; j < trs.rules.size(); ++j) {
                if (usable[j]) continue;
                if (triggers(trs, trs.rules[j], trs.rules[i].rhs, fresh_counter)) {
                    usable[j] = true;
                    changed = true;
                }
            }
        }
    }

    Trs out;
    for (std::size_t i = 0; i < trs.rules.size(); ++i)
        if (usable[i]) out.rules.push_back(trs.rules[i]);
    return out;
}

namespace {

NjProblem apply_usable_rules(const NjProblem& p) {
    return {usable_rules_reach(p.r1, p.t1), usable_rules_reach(p.r2, p.t2), p.t1, p.t2};
}

std::vector<Rule> reversed_rules(const Trs& trs) {
    std::vector<Rule> out;
    out.reserve(trs.rules.size());
    for (const Rule& rule : trs.rules) out.push_back({rule.rhs, rule.lhs});
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Discrimination pairs

CheckResult nj_discrimination(const NjProblem& p0, const LinearPolyInterp& interp) {
    NjProblem p = apply_usable_rules(p0);
    try {
        for (const Rule& rule : reversed_rules(p.r1)) {
            PolyCmp cmp = poly_compare(eval_poly(interp, rule.lhs), eval_poly(interp, rule.rhs));
            if (cmp != PolyCmp::Greater && cmp != PolyCmp::GreaterEqual)
                return CheckResult::reject("reversed rule " + rule.to_string() +
                                           " of the first system is not weakly oriented");
        }
        for (const Rule& rule : p.r2.rules) {
            PolyCmp cmp = poly_compare(eval_poly(interp, rule.lhs), eval_poly(interp, rule.rhs));
            if (cmp != PolyCmp::Greater && cmp != PolyCmp::GreaterEqual)
                return CheckResult::reject("rule " + rule.to_string() +
                                           " of the second system is not weakly oriented");
        }
        if (poly_compare(eval_poly(interp, p.t1), eval_poly(interp, p.t2)) != PolyCmp::Greater)
            return CheckResult::reject("terms are not strictly oriented: " + p.t1.to_string() +
                                       " vs " + p.t2.to_string());
    } catch (const UninterpretedSymbolError& e) {
        return CheckResult::reject(e.what());
    }
    return CheckResult::accept();
}

// ---------------------------------------------------------------------------
// Argument filters

namespace {

Term filter_walk(const ArgumentFilter& filter, const Term& t, std::string* error) {
    if (t.is_var()) return t;
    auto entry = filter.entries.find(t.root().name);
    if (entry == filter.entries.end()) {
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const Term& a : t.args()) args.push_back(filter_walk(filter, a, error));
        return Term::app(t.root(), std::move(args));
    }
    if (const auto* keep = std::get_if<ArgumentFilter::Keep>(&entry->second)) {
        std::vector<Term> args;
        args.reserve(keep->positions.size());
        for (std::size_t pos : keep->positions) {
            if (pos >= t.root().arity) {
                if (error && error->empty())
                    *error = "filter position " + std::to_string(pos + 1) + " exceeds arity of " +
                             t.root().to_string();
                return t;
            }
            args.push_back(filter_walk(filter, t.args()[pos], error));
        }
        std::size_t new_arity = args.size();
        return Term::app({t.root().name, new_arity}, std::move(args));
    }
    const auto& collapse = std::get<ArgumentFilter::Collapse>(entry->second);
    if (collapse.position >= t.root().arity) {
        if (error && error->empty())
            *error = "collapse position " + std::to_string(collapse.position + 1) +
                     " exceeds arity of " + t.root().to_string();
        return t;
    }
    return filter_walk(filter, t.args()[collapse.position], error);
}

Trs filter_trs(const ArgumentFilter& filter, const Trs& trs, std::string* error) {
    Trs out;
    for (const Rule& rule : trs.rules) {
        Rule filtered{filter_walk(filter, rule.lhs, error), filter_walk(filter, rule.rhs, error)};
        if (filtered.lhs == filtered.rhs) continue;  // trivial after filtering
        out.rules.push_back(std::move(filtered));
    }
    return out;
}

}  // namespace

Term filter_term(const ArgumentFilter& filter, const Term& t) {
    std::string error;
    Term out = filter_walk(filter, t, &error);
    if (!error.empty()) throw std::invalid_argument(error);
    return out;
}

CheckResult apply_argument_filter(const ArgumentFilter& filter, const NjProblem& p0,
                                  const NjCertificate& inner) {
    for (const auto& [name, entry] : filter.entries) {
        if (const auto* keep = std::get_if<ArgumentFilter::Keep>(&entry)) {
            for (std::size_t i = 1; i < keep->positions.size(); ++i)
                if (keep->positions[i - 1] >= keep->positions[i])
                    return CheckResult::reject("filter entry for " + name +
                                               " is not an ordered, duplicate-free projection");
        }
    }
    NjProblem p = apply_usable_rules(p0);
    std::string error;
    NjProblem filtered{filter_trs(filter, p.r1, &error), filter_trs(filter, p.r2, &error),
                       filter_walk(filter, p.t1, &error), filter_walk(filter, p.t2, &error)};
    if (!error.empty()) return CheckResult::reject(error);
    return check_nj(filtered, inner).under("filter");
}

// ---------------------------------------------------------------------------
// Finite quasi-models

namespace {

// Enumerates all valuations of the given variables over the carrier.
bool for_each_valuation(const std::vector<std::string>& vars, std::size_t domain,
                        const std::function<bool(const std::map<std::string, std::size_t>&)>& body) {
    std::vector<std::size_t> odometer(vars.size(), 0);
    for (;;) {
        std::map<std::string, std::size_t> valuation;
        for (std::size_t i = 0; i < vars.size(); ++i) valuation.emplace(vars[i], odometer[i]);
        if (!body(valuation)) return false;
        std::size_t pos = 0;
        while (pos < odometer.size()) {
            if (++odometer[pos] < domain) break;
            odometer[pos] = 0;
            ++pos;
        }
        if (pos == odometer.size()) return true;
    }
}

std::string valuation_to_string(const std::map<std::string, std::size_t>& valuation) {
    std::string out = "{";
    bool first = true;
    for (const auto& [var, value] : valuation) {
        if (!first) out += ", ";
        first = false;
        out += var + " = " + std::to_string(value);
    }
    return out + "}";
}

CheckResult quasi_model_condition(const FiniteAlgebra& algebra, const Rule& rule,
                                  const std::string& label) {
    std::set<std::string> var_set = rule.lhs.variable_set();
    for (const std::string& v : rule.rhs.variables_in_order()) var_set.insert(v);
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    CheckResult failure = CheckResult::accept();
    bool ok = for_each_valuation(vars, algebra.domain, [&](const auto& valuation) {
        std::string missing;
        std::optional<std::size_t> lhs = algebra.eval(rule.lhs, valuation, &missing);
        std::optional<std::size_t> rhs = algebra.eval(rule.rhs, valuation, &missing);
        if (!lhs || !rhs) {
            failure = CheckResult::reject("cannot evaluate " + label + " rule " + rule.to_string() +
                                          ": " + missing);
            return false;
        }
        if (!algebra.geq(*lhs, *rhs)) {
            failure = CheckResult::reject("quasi-model violated for " + label + " rule " +
                                          rule.to_string() + " under " +
                                          valuation_to_string(valuation) + ": " +
                                          std::to_string(*lhs) + " is not >= " +
                                          std::to_string(*rhs));
            return false;
        }
        return true;
    });
    return ok ? CheckResult::accept() : failure;
}

}  // namespace

CheckResult nj_finite_model(const NjProblem& p0, const FiniteAlgebra& algebra) {
    CheckResult valid = algebra.validate();
    if (!valid) return valid;

    NjProblem p = apply_usable_rules(auto_ground(p0));

    for (const Rule& rule : reversed_rules(p.r1)) {
        CheckResult result = quasi_model_condition(algebra, rule, "reversed");
        if (!result) return result;
    }
    for (const Rule& rule : p.r2.rules) {
        CheckResult result = quasi_model_condition(algebra, rule, "second-system");
        if (!result) return result;
    }

    std::string missing;
    std::map<std::string, std::size_t> empty_valuation;
    std::optional<std::size_t> v1 = algebra.eval(p.t1, empty_valuation, &missing);
    std::optional<std::size_t> v2 = algebra.eval(p.t2, empty_valuation, &missing);
    if (!v1 || !v2) return CheckResult::reject("cannot evaluate fork terms: " + missing);
    if (algebra.geq(*v2, *v1))
        return CheckResult::reject("interpretations are comparable: [t2] = " +
                                   std::to_string(*v2) + " >= " + std::to_string(*v1) +
                                   " = [t1]");
    return CheckResult::accept();
}

// ---------------------------------------------------------------------------
// Tree automata technique

CheckResult nj_tree_automata(const NjProblem& p0, const TreeAutomaton& a1,
                             const TreeAutomaton& a2, const ClosureEvidence& ev1,
                             const ClosureEvidence& ev2) {
    if (!check_variable_conditions(p0.r1).vcsubset)
        return CheckResult::reject("vcsubset violated for the first system");
    if (!check_variable_conditions(p0.r2).vcsubset)
        return CheckResult::reject("vcsubset violated for the second system");

    NjProblem p = auto_ground(p0);

    if (!ta_membership(a1, p.t1))
        return CheckResult::reject("t1 = " + p.t1.to_string() +
                                   " is not accepted by the first automaton");
    if (!ta_membership(a2, p.t2))
        return CheckResult::reject("t2 = " + p.t2.to_string() +
                                   " is not accepted by the second automaton");

    auto closure = [](const TreeAutomaton& a, const Trs& trs,
                      const ClosureEvidence& ev) -> CheckResult {
        if (std::holds_alternative<ClosureCompatibility>(ev)) return ta_compatible(a, trs);
        const auto& sc = std::get<ClosureStateCompatibility>(ev);
        for (const auto& [from, to] : sc.relation)
            if (!a.declares(from) || !a.declares(to))
                return CheckResult::reject("compatibility relation mentions undeclared states");
        return ta_state_compatible(a, trs, sc.relation);
    };
    CheckResult c1 = closure(a1, p.r1, ev1);
    if (!c1) return c1.under("closure of the first automaton");
    CheckResult c2 = closure(a2, p.r2, ev2);
    if (!c2) return c2.under("closure of the second automaton");

    TreeAutomaton product = ta_intersection(a1, a2);
    if (!ta_empty(product)) {
        std::string witness;
        for (const std::string& q : product.final_states) {
            witness = q;
            break;
        }
        return CheckResult::reject("intersection language is not empty (final product state " +
                                   witness + " is productive)");
    }
    return CheckResult::accept();
}

// ---------------------------------------------------------------------------
// Dispatch

CheckResult check_nj(const NjProblem& p, const NjCertificate& cert) {
    return std::visit(
        [&](const auto& node) -> CheckResult {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NjGround>) {
                return nj_ground(p, node.sigma, *node.inner);
            } else if constexpr (std::is_same_v<T, NjTcap>) {
                return nj_tcap(p).under("tcap");
            } else if constexpr (std::is_same_v<T, NjDistinctNf>) {
                return nj_distinct_nf(p).under("distinct-nf");
            } else if constexpr (std::is_same_v<T, NjUsable>) {
                return check_nj(apply_usable_rules(p), *node.inner).under("usable");
            } else if constexpr (std::is_same_v<T, NjDiscrimination>) {
                return nj_discrimination(p, node.interp).under("discrimination");
            } else if constexpr (std::is_same_v<T, NjFilter>) {
                return apply_argument_filter(node.filter, p, *node.inner);
            } else if constexpr (std::is_same_v<T, NjModel>) {
                return nj_finite_model(p, node.algebra).under("model");
            } else {
                return nj_tree_automata(p, node.a1, node.a2, node.evidence1, node.evidence2)
                    .under("automata");
            }
        },
        cert.node);
}

CheckResult check_fork(const Trs& trs, const Term& start,
                       const std::vector<DerivationStep>& steps1,
                       const std::vector<DerivationStep>& steps2, const NjCertificate& nj) {
    Term t1 = start;
    Term t2 = start;
    try {
        t1 = replay_steps(trs, start, steps1);
    } catch (const RewriteError& e) {
        return CheckResult::reject("replay of the first derivation failed: " +
                                   std::string(e.what()));
    }
    try {
        t2 = replay_steps(trs, start, steps2);
    } catch (const RewriteError& e) {
        return CheckResult::reject("replay of the second derivation failed: " +
                                   std::string(e.what()));
    }
    return check_nj({trs, trs, t1, t2}, nj);
}

// ---------------------------------------------------------------------------
// Modularity

namespace {

void collect_cert_terms(const NjCertificate& cert, std::vector<Term>& out);

void collect_steps_terms(const std::vector<DerivationStep>& steps, std::vector<Term>& out) {
    for (const DerivationStep& step : steps)
        for (const auto& [var, term] : step.extra.bindings()) out.push_back(term);
}

void collect_proof_terms(const NonConfluenceProof& proof, std::vector<Term>& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ForkProof>) {
                out.push_back(node.start);
                collect_steps_terms(node.steps1, out);
                collect_steps_terms(node.steps2, out);
                collect_cert_terms(node.nj, out);
            } else {
                collect_proof_terms(*node.inner, out);
            }
        },
        proof.node);
}

void collect_cert_terms(const NjCertificate& cert, std::vector<Term>& out) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NjGround>) {
                for (const auto& [var, term] : node.sigma.bindings()) out.push_back(term);
                collect_cert_terms(*node.inner, out);
            } else if constexpr (std::is_same_v<T, NjUsable> || std::is_same_v<T, NjFilter>) {
                collect_cert_terms(*node.inner, out);
            }
        },
        cert.node);
}

}  // namespace

CheckResult check_modular_nonconfluence(const Trs& kept, const Trs& rest,
                                        const NonConfluenceProof& inner) {
    std::set<Symbol> kept_sig = kept.signature();
    std::set<Symbol> rest_sig = rest.signature();
    for (const Symbol& s : kept_sig)
        if (rest_sig.count(s))
            return CheckResult::reject("signatures overlap on symbol " + s.to_string());

    if (!check_variable_conditions(kept).vcsubset)
        return CheckResult::reject("vcsubset violated for the kept part R");
    if (!check_variable_conditions(rest).vclhs)
        return CheckResult::reject("vclhs violated for the disjoint part S");

    std::vector<Term> cert_terms;
    collect_proof_terms(inner, cert_terms);
    for (const Term& t : cert_terms)
        for (const Symbol& s : t.function_symbols())
            if (rest_sig.count(s))
                return CheckResult::reject("inner certificate mentions symbol " + s.to_string() +
                                           " of the disjoint part S");

    return check_nonconfluence_proof(kept, inner);
}

CheckResult check_nonconfluence_proof(const Trs& trs, const NonConfluenceProof& proof) {
    return std::visit(
        [&](const auto& node) -> CheckResult {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ForkProof>) {
                return check_fork(trs, node.start, node.steps1, node.steps2, node.nj)
                    .under("fork");
            } else {
                std::set<std::size_t> seen;
                for (std::size_t index : node.kept_rules) {
                    if (index >= trs.rules.size())
                        return CheckResult::reject("modular: rule index " +
                                                   std::to_string(index + 1) + " out of range");
                    if (!seen.insert(index).second)
                        return CheckResult::reject("modular: duplicate rule index " +
                                                   std::to_string(index + 1));
                }
                Trs kept, rest;
                for (std::size_t i = 0; i < trs.rules.size(); ++i) {
                    if (seen.count(i))
                        kept.rules.push_back(trs.rules[i]);
                    else
                        rest.rules.push_back(trs.rules[i]);
                }
                return check_modular_nonconfluence(kept, rest, *node.inner).under("modular");
            }
        },
        proof.node);
}

}  // namespace confcheck
