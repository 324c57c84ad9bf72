#pragma once

#include <variant>
#include <vector>

#include "confcheck/check_result.hpp"
#include "confcheck/poly_order.hpp"
#include "confcheck/rewrite.hpp"
#include "confcheck/term.hpp"

namespace confcheck {

struct JoinByNormalization {
    std::size_t step_budget = 10000;
};

struct JoinByBfs {
    std::size_t bound = 0;
};

/// One provided join: the critical-pair components (under the checker's
/// canonical renaming) and the two step sequences that must meet in a
/// common term.
struct ExplicitJoin {
    Term left;
    Term right;
    std::vector<DerivationStep> left_steps;
    std::vector<DerivationStep> right_steps;
};

struct JoinExplicit {
    std::vector<ExplicitJoin> joins;
};

using JoinMethod = std::variant<JoinByNormalization, JoinByBfs, JoinExplicit>;

/// True iff the <=bound-step reduct sets of s and t intersect.
bool join_bfs(const Trs& trs, const Term& s, const Term& t, std::size_t bound);

/// Left-linear, no variable left-hand sides, and every critical pair
/// (root self-overlaps included) trivial.
CheckResult check_weakly_orthogonal(const Trs& trs);

/// Linear TRS whose every non-trivial critical pair (s, t) satisfies
/// s ->* u =<- t and s ->= v *<- t, with each ->* side bounded.
CheckResult check_strongly_closed(const Trs& trs, std::size_t bound);

/// Termination by iterated linear-polynomial rule removal plus joinability
/// of every non-trivial critical pair per the chosen method.
CheckResult check_terminating_confluent(const Trs& trs,
                                        const std::vector<LinearPolyInterp>& termination_cert,
                                        const JoinMethod& method);

}  // namespace confcheck
