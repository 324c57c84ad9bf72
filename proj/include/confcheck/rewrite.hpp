#pragma once

#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "confcheck/term.hpp"

namespace confcheck {

/// Reserved constant used to instantiate rhs-only variables during search
/// (successors, normalize, reducts). Rejected by the input parsers, so it
/// never collides with user signatures.
const Symbol& bottom_symbol();
const Term& bottom_term();

struct RewriteError : std::runtime_error {
    enum class Kind { InvalidPosition, InvalidRuleIndex, NoMatch, MissingBinding };
    Kind kind;
    RewriteError(Kind k, const std::string& message)
        : std::runtime_error(message), kind(k) {}
};

/// One step of a replayed derivation. The extra substitution must bind
/// exactly the rhs-only variables of the rule; search-style defaulting is
/// deliberately not applied during replay.
struct DerivationStep {
    Position pos;
    std::size_t rule_index = 0;  // 0-based
    Substitution extra;
};

/// Rewrites t at `pos` with the indexed rule. Throws RewriteError when the
/// position or rule index is invalid, the lhs does not match, or an
/// rhs-only variable is left unbound by `extra`.
Term rewrite_step(const Trs& trs, const Term& t, const Position& pos,
                  std::size_t rule_index, const Substitution& extra = {});

/// Replays a derivation from `start`; RewriteError messages are annotated
/// with the failing step number.
Term replay_steps(const Trs& trs, const Term& start,
                  const std::vector<DerivationStep>& steps);

struct RewriteOption {
    Position pos;
    std::size_t rule_index;
    Term result;
};

/// All single rewrite steps from t, positions in leftmost-outermost order
/// and rules in index order; rhs-only variables are bound to the bottom
/// constant.
std::vector<RewriteOption> enumerate_rewrites(const Trs& trs, const Term& t);

/// The set of one-step reducts of t (bottom policy for rhs-only variables).
std::set<Term> successors(const Trs& trs, const Term& t);

/// Repeated leftmost-innermost rewriting, lowest rule index first. Returns
/// the normal form if one is reached within step_budget steps, otherwise
/// absent (budget exhausted).
std::optional<Term> normalize(const Trs& trs, const Term& t, std::size_t step_budget);

/// All terms reachable from t in at most `depth` steps (including t).
/// Expansion stops early if the set would exceed max_size; truncation can
/// only make searches fail, never wrongly succeed.
std::set<Term> reducts(const Trs& trs, const Term& t, std::size_t depth,
                       std::size_t max_size = std::numeric_limits<std::size_t>::max());

}  // namespace confcheck
