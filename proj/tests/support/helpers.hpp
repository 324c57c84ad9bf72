#pragma once

#include <cassert>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "confcheck/certificate.hpp"
#include "confcheck/critical_pairs.hpp"
#include "confcheck/parser.hpp"
#include "confcheck/unify.hpp"

// Shared test utilities: term builders, example systems, random generators,
// and the search oracles the property suites check the techniques against.
namespace confcheck::test_support {

inline Term v(const std::string& name) { return Term::var(name); }
inline Term c(const std::string& name) { return Term::app({name, 0}); }
inline Term ap(const std::string& name, std::vector<Term> args) {
    std::size_t arity = args.size();
    return Term::app({name, arity}, std::move(args));
}

// --- example systems used throughout the suites ---------------------------

inline Trs trs_r1() { return parse_trs("(VAR y) (RULES a -> y)"); }
inline Trs trs_r2() { return parse_trs("(VAR x y) (RULES x -> f(x) y -> g(y))"); }
inline Trs trs_r3() { return parse_trs("(VAR x) (RULES a -> f(x) f(x) -> b)"); }
inline Trs trs_r4() { return parse_trs("(VAR x) (RULES a -> f(x) f(x) -> b x -> f(g(x)))"); }
inline Trs trs_r5() { return parse_trs("(VAR x) (RULES a -> b1 a -> b2 x -> f(x))"); }
inline Trs trs_abc() { return parse_trs("(RULES a -> b a -> c)"); }
inline Trs trs_join() { return parse_trs("(RULES a -> b a -> c b -> d c -> d)"); }
inline Trs trs_reach() { return parse_trs("(RULES a -> b b -> c d -> e)"); }

// The two-branch automaton of the non-joinability example: accepts f*(leaf).
inline TreeAutomaton branch_automaton(const std::string& leaf) {
    TreeAutomaton a;
    a.states = {"1"};
    a.final_states = {"1"};
    a.transitions.push_back({{"f", 1}, {"1"}, "1"});
    a.transitions.push_back({{leaf, 0}, {}, "1"});
    return a;
}

// --- oracles ---------------------------------------------------------------

/// Bounded breadth-first joinability: do the reduct sets of t1 under r1 and
/// t2 under r2 intersect within the given depth? Expands both sides level
/// by level and stops as soon as the frontiers meet.
inline bool oracle_joinable(const Trs& r1, const Trs& r2, const Term& t1, const Term& t2,
                            std::size_t depth, std::size_t cap = 50000) {
    std::set<Term> left{t1}, right{t2};
    std::set<Term> left_frontier{t1}, right_frontier{t2};
    if (t1 == t2) return true;
    for (std::size_t level = 0; level < depth; ++level) {
        std::set<Term> new_left, new_right;
        for (const Term& u : left_frontier)
            for (const Term& v : successors(r1, u))
                if (left.size() < cap && left.insert(v).second) new_left.insert(v);
        for (const Term& u : right_frontier)
            for (const Term& v : successors(r2, u))
                if (right.size() < cap && right.insert(v).second) new_right.insert(v);
        for (const Term& v : new_left)
            if (right.count(v)) return true;
        for (const Term& v : new_right)
            if (left.count(v)) return true;
        left_frontier = std::move(new_left);
        right_frontier = std::move(new_right);
        if (left_frontier.empty() && right_frontier.empty()) return false;
    }
    return false;
}

// --- randomness ------------------------------------------------------------

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::size_t below(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine);
    }
    bool chance(double p) { return std::uniform_real_distribution<>(0.0, 1.0)(engine) < p; }
    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }
};

/// Random term over the given symbols and variable names. The signature
/// must contain at least one constant so generation bottoms out.
inline Term random_term(Rng& rng, const std::vector<Symbol>& symbols,
                        const std::vector<std::string>& vars, std::size_t depth) {
    std::vector<Symbol> constants;
    for (const Symbol& s : symbols)
        if (s.arity == 0) constants.push_back(s);
    assert(!constants.empty());
    if (depth == 0 || rng.chance(0.3)) {
        if (!vars.empty() && rng.chance(0.4)) return v(rng.pick(vars));
        return Term::app(rng.pick(constants));
    }
    const Symbol& s = rng.pick(symbols);
    std::vector<Term> args;
    for (std::size_t i = 0; i < s.arity; ++i)
        args.push_back(random_term(rng, symbols, vars, depth - 1));
    return Term::app(s, std::move(args));
}

/// Random signature of up to max_symbols symbols with arities <= 2,
/// always containing at least one constant.
inline std::vector<Symbol> random_signature(Rng& rng, std::size_t max_symbols) {
    static const std::vector<std::string> names{"a", "b", "c", "f", "g", "h"};
    std::vector<Symbol> out{{"a", 0}};
    std::size_t n = 1 + rng.below(max_symbols);
    for (std::size_t i = 1; i < n; ++i)
        out.push_back({names[rng.below(names.size())], rng.below(3)});
    return out;
}

/// Random TRS; when vcsubset is requested the rhs only uses lhs variables.
inline Trs random_trs(Rng& rng, const std::vector<Symbol>& symbols, std::size_t max_rules,
                      bool require_vcsubset) {
    static const std::vector<std::string> vars{"x", "y"};
    Trs out;
    std::size_t n = 1 + rng.below(max_rules);
    for (std::size_t i = 0; i < n; ++i) {
        Term lhs = random_term(rng, symbols, vars, 2);
        std::vector<std::string> rhs_vars = lhs.variables_in_order();
        if (!require_vcsubset && rng.chance(0.15)) rhs_vars.push_back("z");
        Term rhs = random_term(rng, symbols, rhs_vars, 2);
        out.rules.push_back({std::move(lhs), std::move(rhs)});
    }
    return out;
}

/// Random derivation of at most max_steps, recording the applied rules.
struct TracedDerivation {
    std::vector<std::size_t> rules_used;
    Term end;
};

inline TracedDerivation random_derivation(Rng& rng, const Trs& trs, const Term& start,
                                          std::size_t max_steps) {
    TracedDerivation out{{}, start};
    for (std::size_t i = 0; i < max_steps; ++i) {
        std::vector<RewriteOption> options = enumerate_rewrites(trs, out.end);
        if (options.empty()) break;
        const RewriteOption& choice = options[rng.below(options.size())];
        out.rules_used.push_back(choice.rule_index);
        out.end = choice.result;
        if (out.end.node_count() > 60) break;  // keep random walks small
    }
    return out;
}

// --- derivation tracing (independent leftmost-innermost re-derivation) -----

inline std::optional<std::pair<Position, std::size_t>> leftmost_innermost_redex(
    const Trs& trs, const Term& t, Position prefix = {}) {
    if (t.is_app()) {
        for (std::size_t i = 0; i < t.args().size(); ++i) {
            Position child = prefix;
            child.push_back(i);
            if (auto found = leftmost_innermost_redex(trs, t.args()[i], child)) return found;
        }
    }
    for (std::size_t r = 0; r < trs.rules.size(); ++r)
        if (match(trs.rules[r].lhs, t)) return std::make_pair(prefix, r);
    return std::nullopt;
}

/// Traces leftmost-innermost normalization (rules must satisfy vcsubset);
/// returns the step list and the normal form, or absent past max_steps.
inline std::optional<std::pair<std::vector<DerivationStep>, Term>> trace_normalize(
    const Trs& trs, const Term& start, std::size_t max_steps) {
    std::vector<DerivationStep> steps;
    Term cur = start;
    for (std::size_t i = 0; i <= max_steps; ++i) {
        auto redex = leftmost_innermost_redex(trs, cur);
        if (!redex) return std::make_pair(steps, cur);
        if (i == max_steps) return std::nullopt;
        DerivationStep step{redex->first, redex->second, {}};
        cur = rewrite_step(trs, cur, step.pos, step.rule_index, step.extra);
        steps.push_back(std::move(step));
    }
    return std::nullopt;
}

/// Shifts every step of a derivation below the given argument position.
inline std::vector<DerivationStep> shift_steps(const std::vector<DerivationStep>& steps,
                                               std::size_t child) {
    std::vector<DerivationStep> out;
    out.reserve(steps.size());
    for (const DerivationStep& step : steps) {
        Position pos{child};
        pos.insert(pos.end(), step.pos.begin(), step.pos.end());
        out.push_back({std::move(pos), step.rule_index, step.extra});
    }
    return out;
}

/// Random accepted ground term of an automaton, generated backwards from a
/// final state through productive transitions.
inline std::optional<Term> random_accepted_term(Rng& rng, const TreeAutomaton& a,
                                                std::size_t depth) {
    std::set<std::string> productive;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& tr : a.transitions) {
            bool ok = true;
            for (const std::string& q : tr.arg_states) ok = ok && productive.count(q) > 0;
            if (ok && productive.insert(tr.target).second) changed = true;
        }
        for (const auto& [from, to] : a.epsilon_transitions)
            if (productive.count(from) && productive.insert(to).second) changed = true;
    }
    std::function<std::optional<Term>(const std::string&, std::size_t)> expand =
        [&](const std::string& state, std::size_t budget) -> std::optional<Term> {
        std::vector<const TreeAutomaton::SymTransition*> options;
        std::vector<const std::string*> eps_options;
        for (const auto& tr : a.transitions) {
            if (tr.target != state) continue;
            bool ok = true;
            for (const std::string& q : tr.arg_states) ok = ok && productive.count(q) > 0;
            if (!ok) continue;
            if (budget == 0 && !tr.arg_states.empty()) continue;
            options.push_back(&tr);
        }
        for (const auto& [from, to] : a.epsilon_transitions)
            if (to == state && productive.count(from) && budget > 0) eps_options.push_back(&from);
        if (options.empty() && eps_options.empty()) return std::nullopt;
        std::size_t choice = rng.below(options.size() + eps_options.size());
        if (choice < options.size()) {
            const auto& tr = *options[choice];
            std::vector<Term> args;
            for (const std::string& q : tr.arg_states) {
                auto arg = expand(q, budget == 0 ? 0 : budget - 1);
                if (!arg) return std::nullopt;
                args.push_back(*arg);
            }
            return Term::app(tr.symbol, std::move(args));
        }
        return expand(*eps_options[choice - options.size()], budget - 1);
    };
    std::vector<std::string> finals(a.final_states.begin(), a.final_states.end());
    if (finals.empty()) return std::nullopt;
    return expand(finals[rng.below(finals.size())], depth);
}

}  // namespace confcheck::test_support
