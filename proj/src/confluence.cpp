#include "confcheck/confluence.hpp"

#include "confcheck/critical_pairs.hpp"

namespace confcheck {

bool join_bfs(const Trs& trs, const Term& s, const Term& t, std::size_t bound) {
    std::set<Term> left = reducts(trs, s, bound);
    std::set<Term> right = reducts(trs, t, bound);
    for (const Term& u : left)
        if (right.count(u)) return true;
    return false;
}

CheckResult check_weakly_orthogonal(const Trs& trs) {
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        const Rule& rule = trs.rules[i];
        if (!rule.is_left_linear())
            return CheckResult::reject("rule " + std::to_string(i + 1) + " (" + rule.to_string() +
                                       ") is not left-linear");
        if (rule.lhs_is_variable())
            return CheckResult::reject("rule " + std::to_string(i + 1) + " (" + rule.to_string() +
                                       "): left-hand side is a variable (vclhs violated)");
    }
    for (const CriticalPair& cp : critical_pairs(trs, true))
        return CheckResult::reject("non-trivial critical pair " + cp.to_string());
    return CheckResult::accept();
}

CheckResult check_strongly_closed(const Trs& trs, std::size_t bound) {
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
        if (!trs.rules[i].is_linear())
            return CheckResult::reject("rule " + std::to_string(i + 1) + " (" +
                                       trs.rules[i].to_string() + ") is not linear");
    }
    for (const CriticalPair& cp : critical_pairs(trs, true)) {
        const Term& s = cp.left;
        const Term& t = cp.right;
        std::set<Term> from_s = reducts(trs, s, bound);
        std::set<Term> from_t = reducts(trs, t, bound);
        std::set<Term> succ_s = successors(trs, s);
        std::set<Term> succ_t = successors(trs, t);

        // s ->* u and t ->= u
        bool forward = false;
        for (const Term& u : from_s) {
            if (u == t || succ_t.count(u)) {
                forward = true;
                break;
            }
        }
        // t ->* v and s ->= v
        bool backward = false;
        if (from_t.count(s)) backward = true;
        if (!backward) {
            for (const Term& v : succ_s) {
                if (from_t.count(v)) {
                    backward = true;
                    break;
                }
            }
        }
        if (!forward || !backward)
            return CheckResult::reject("critical pair " + cp.to_string() +
                                       " is not strongly closed within bound " +
                                       std::to_string(bound));
    }
    return CheckResult::accept();
}

namespace {

CheckResult join_by_normalization(const Trs& trs, const CriticalPair& cp, std::size_t budget) {
    std::optional<Term> nf_left = normalize(trs, cp.left, budget);
    if (!nf_left)
        return CheckResult::reject("critical pair " + cp.to_string() +
                                   ": normalization budget of " + std::to_string(budget) +
                                   " steps exhausted on " + cp.left.to_string());
    std::optional<Term> nf_right = normalize(trs, cp.right, budget);
    if (!nf_right)
        return CheckResult::reject("critical pair " + cp.to_string() +
                                   ": normalization budget of " + std::to_string(budget) +
                                   " steps exhausted on " + cp.right.to_string());
    if (*nf_left != *nf_right)
        return CheckResult::reject("critical pair " + cp.to_string() + ": normal forms differ: " +
                                   nf_left->to_string() + " vs " + nf_right->to_string());
    return CheckResult::accept();
}

CheckResult join_explicitly(const Trs& trs, const CriticalPair& cp,
                            const std::vector<ExplicitJoin>& joins) {
    for (const ExplicitJoin& join : joins) {
        if (join.left != cp.left || join.right != cp.right) continue;
        Term end_left = join.left;
        Term end_right = join.right;
        try {
            end_left = replay_steps(trs, join.left, join.left_steps);
        } catch (const RewriteError& e) {
            return CheckResult::reject("critical pair " + cp.to_string() +
                                       ": replay of left join failed: " + e.what());
        }
        try {
            end_right = replay_steps(trs, join.right, join.right_steps);
        } catch (const RewriteError& e) {
            return CheckResult::reject("critical pair " + cp.to_string() +
                                       ": replay of right join failed: " + e.what());
        }
        if (end_left != end_right)
            return CheckResult::reject("critical pair " + cp.to_string() +
                                       ": join sequences end in different terms: " +
                                       end_left.to_string() + " vs " + end_right.to_string());
        return CheckResult::accept();
    }
    return CheckResult::reject("no explicit join provided for critical pair " + cp.to_string());
}

}  // namespace

CheckResult check_terminating_confluent(const Trs& trs,
                                        const std::vector<LinearPolyInterp>& termination_cert,
                                        const JoinMethod& method) {
    CheckResult termination = prove_termination(trs, termination_cert);
    if (!termination) return termination.under("termination");

    for (const CriticalPair& cp : critical_pairs(trs, true)) {
        CheckResult joined = std::visit(
            [&](const auto& m) -> CheckResult {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, JoinByNormalization>) {
                    return join_by_normalization(trs, cp, m.step_budget);
                } else if constexpr (std::is_same_v<M, JoinByBfs>) {
                    if (!join_bfs(trs, cp.left, cp.right, m.bound))
                        return CheckResult::reject("critical pair " + cp.to_string() +
                                                   " not joinable within BFS bound " +
                                                   std::to_string(m.bound));
                    return CheckResult::accept();
                } else {
                    return join_explicitly(trs, cp, m.joins);
                }
            },
            method);
        if (!joined) return joined;
    }
    return CheckResult::accept();
}

}  // namespace confcheck
