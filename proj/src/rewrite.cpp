#include "confcheck/rewrite.hpp"

#include "confcheck/unify.hpp"

namespace confcheck {

const Symbol& bottom_symbol() {
    static const Symbol bot{"⊥", 0};
    return bot;
}

const Term& bottom_term() {
    static const Term bot = Term::app(bottom_symbol());
    return bot;
}

Term rewrite_step(const Trs& trs, const Term& t, const Position& pos,
                  std::size_t rule_index, const Substitution& extra) {
    if (rule_index >= trs.rules.size())
        throw RewriteError(RewriteError::Kind::InvalidRuleIndex,
                           "rule index " + std::to_string(rule_index + 1) + " out of range");
    const Term* sub = t.subterm(pos);
    if (!sub)
        throw RewriteError(RewriteError::Kind::InvalidPosition,
                           "position " + position_to_string(pos) + " invalid in " + t.to_string());
    const Rule& rule = trs.rules[rule_index];
    std::optional<Substitution> matcher = match(rule.lhs, *sub);
    if (!matcher)
        throw RewriteError(RewriteError::Kind::NoMatch,
                           "rule " + std::to_string(rule_index + 1) + " (" + rule.to_string() +
                               ") does not match at position " + position_to_string(pos) +
                               " of " + t.to_string());
    for (const std::string& v : rule.extra_variables()) {
        const Term* bound = extra.lookup(v);
        if (!bound)
            throw RewriteError(RewriteError::Kind::MissingBinding,
                               "rhs-only variable " + v + " of rule " +
                                   std::to_string(rule_index + 1) + " is unbound");
        matcher->bind(v, *bound);
    }
    return t.replace(pos, matcher->apply(rule.rhs));
}

Term replay_steps(const Trs& trs, const Term& start,
                  const std::vector<DerivationStep>& steps) {
    Term cur = start;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            cur = rewrite_step(trs, cur, steps[i].pos, steps[i].rule_index, steps[i].extra);
        } catch (const RewriteError& e) {
            throw RewriteError(e.kind, "step " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return cur;
}

std::vector<RewriteOption> enumerate_rewrites(const Trs& trs, const Term& t) {
    std::vector<RewriteOption> out;
    for (const Position& pos : t.positions()) {
        const Term* sub = t.subterm(pos);
        for (std::size_t i = 0; i < trs.rules.size(); ++i) {
            const Rule& rule = trs.rules[i];
            std::optional<Substitution> matcher = match(rule.lhs, *sub);
            if (!matcher) continue;
            for (const std::string& v : rule.extra_variables())
                matcher->bind(v, bottom_term());
            out.push_back({pos, i, t.replace(pos, matcher->apply(rule.rhs))});
        }
    }
    return out;
}

std::set<Term> successors(const Trs& trs, const Term& t) {
    std::set<Term> out;
    for (RewriteOption& opt : enumerate_rewrites(trs, t)) out.insert(std::move(opt.result));
    return out;
}

namespace {

// Leftmost-innermost redex: arguments before the node, lowest rule index
// first at each position.
bool find_innermost(const Trs& trs, const Term& t, Position& pos, std::size_t& rule_index) {
    if (t.is_app()) {
        for (std::size_t i = 0; i < t.args().size(); ++i) {
            pos.push_back(i);
            if (find_innermost(trs, t.args()[i], pos, rule_index)) return true;
            pos.pop_back();
        }
    }
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        if (match(trs.rules[i].lhs, t)) {
            rule_index = i;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Term> normalize(const Trs& trs, const Term& t, std::size_t step_budget) {
    Term cur = t;
    for (std::size_t steps = 0;; ++steps) {
        Position pos;
        std::size_t rule_index = 0;
        if (!find_innermost(trs, cur, pos, rule_index)) return cur;
        if (steps == step_budget) return std::nullopt;
        const Rule& rule = trs.rules[rule_index];
        Substitution matcher = *match(rule.lhs, *cur.subterm(pos));
        for (const std::string& v : rule.extra_variables()) matcher.bind(v, bottom_term());
        cur = cur.replace(pos, matcher.apply(rule.rhs));
    }
}

std::set<Term> reducts(const Trs& trs, const Term& t, std::size_t depth, std::size_t max_size) {
    std::set<Term> all{t};
    std::set<Term> frontier{t};
    for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
        std::set<Term> next;
        for (const Term& u : frontier) {
            for (const Term& v : successors(trs, u)) {
                if (all.size() >= max_size) return all;
                if (all.insert(v).second) next.insert(v);
            }
        }
        frontier = std::move(next);
    }
    return all;
}

}  // namespace confcheck
