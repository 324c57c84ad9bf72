#pragma once

#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "confcheck/check_result.hpp"
#include "confcheck/term.hpp"

namespace confcheck {

/**
 * Bottom-up tree automaton (Q, F, Delta, Q_f) with symbol transitions
 * f(q1, ..., qn) -> q and epsilon transitions q -> q'. All states
 * referenced by transitions and final states must be declared.
 */
struct TreeAutomaton {
    struct SymTransition {
        Symbol symbol;
        std::vector<std::string> arg_states;
        std::string target;
    };

    std::vector<std::string> states;
    std::vector<SymTransition> transitions;
    std::vector<std::pair<std::string, std::string>> epsilon_transitions;
    std::set<std::string> final_states;

    bool declares(const std::string& state) const;
    /// Checks the declaration invariant; used after parsing.
    CheckResult validate() const;
};

/// Closure evidence carried in a certificate: plain compatibility or
/// state-compatibility with an explicit relation on states.
struct ClosureCompatibility {};
struct ClosureStateCompatibility {
    std::vector<std::pair<std::string, std::string>> relation;
};
using ClosureEvidence = std::variant<ClosureCompatibility, ClosureStateCompatibility>;

/**
 * All states reachable bottom-up from the given term, with epsilon closure
 * applied at every level. Variable leaves denote states; other leaves must
 * be ground subterms.
 */
std::set<std::string> ta_reach(const TreeAutomaton& a, const Term& t);

/// Membership of a ground term; throws std::invalid_argument on non-ground
/// input.
bool ta_membership(const TreeAutomaton& a, const Term& t);

/// Product automaton over the bottom-up-reachable part of Q1 x Q2,
/// recognizing the intersection language; epsilon transitions are paired
/// with a stationary second component.
TreeAutomaton ta_intersection(const TreeAutomaton& a1, const TreeAutomaton& a2);

/// True iff no final state is productive (reachable from a ground term).
bool ta_empty(const TreeAutomaton& a);

/// Genet compatibility: for every rule l -> r, every state assignment
/// theta of Var(l), and every q reached by l*theta, q is reached by
/// r*theta. Requires vcsubset(trs).
CheckResult ta_compatible(const TreeAutomaton& a, const Trs& trs);

/**
 * State-compatibility modulo a relation on states (identity pairs are
 * admitted implicitly):
 *  (a) every q reached by l*theta is related to some q' reached by r*theta;
 *  (b) replacing one argument state of a transition by a related state
 *      again reaches a related target; likewise for the source state of an
 *      epsilon transition;
 *  (c) final states are closed under the relation.
 * Requires vcsubset(trs).
 */
CheckResult ta_state_compatible(const TreeAutomaton& a, const Trs& trs,
                                const std::vector<std::pair<std::string, std::string>>& relation);

}  // namespace confcheck
