#pragma once

#include <vector>

#include "confcheck/term.hpp"

namespace confcheck {

/**
 * Critical pair (left, right) with its peak: the peak rewrites to `left`
 * in one root step with the outer rule and to `right` in one step at the
 * overlap position with the inner rule.
 */
struct CriticalPair {
    Term left;
    Term right;
    Term peak;
    std::size_t outer_rule = 0;  // 0-based rule indices
    std::size_t inner_rule = 0;
    Position pos;                // overlap position inside the outer lhs

    bool is_trivial() const { return left == right; }
    std::string to_string() const {
        return "(" + left.to_string() + ", " + right.to_string() + ")";
    }
};

/**
 * All critical pairs of the TRS, including root overlaps of a rule with
 * itself. For each ordered pair of rules the inner rule is renamed apart,
 * its lhs unified with every non-variable subterm of the outer lhs, and
 * the resulting pair canonically renamed to x0, x1, ... (skipping names
 * already used as function symbols). Output order: outer rule index, inner
 * rule index, overlap position leftmost-outermost.
 */
std::vector<CriticalPair> critical_pairs(const Trs& trs, bool nontrivial_only);

struct VariableConditions {
    bool vclhs = true;     // no left-hand side is a variable
    bool vcsubset = true;  // Var(rhs) subseteq Var(lhs) for every rule
};

VariableConditions check_variable_conditions(const Trs& trs);

/**
 * Approximates the stable upper part of a term: variables become fresh
 * variables, and an application collapses to a fresh variable whenever it
 * unifies with some (renamed-apart) lhs of the TRS. Fresh variables are
 * drawn from the reserved #v namespace and are globally distinct within
 * one call.
 */
Term tcap(const Trs& trs, const Term& t);

}  // namespace confcheck
