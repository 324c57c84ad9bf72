#pragma once

#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "confcheck/check_result.hpp"
#include "confcheck/poly_order.hpp"
#include "confcheck/rewrite.hpp"
#include "confcheck/term.hpp"
#include "confcheck/tree_automaton.hpp"

namespace confcheck {

/// Non-joinability problem: no common reduct of t1 under r1 and t2 under
/// r2 may exist. Both systems start out equal to the problem TRS; the
/// techniques refine them internally.
struct NjProblem {
    Trs r1;
    Trs r2;
    Term t1;
    Term t2;
};

/**
 * Argument filter: per symbol name either a projection to an ordered,
 * duplicate-free list of argument positions (yielding a symbol of the new
 * arity) or a collapse to a single argument. Symbols without an entry keep
 * all arguments.
 */
struct ArgumentFilter {
    struct Keep {
        std::vector<std::size_t> positions;  // 0-based
    };
    struct Collapse {
        std::size_t position = 0;  // 0-based
    };
    using Entry = std::variant<Keep, Collapse>;
    std::map<std::string, Entry> entries;
};

/**
 * Finite weakly-monotone algebra: carrier {0, ..., domain-1}, an order
 * given as an explicit relation, one function table per symbol, and a
 * default element used for the implicit valuation. The order axioms and
 * weak monotonicity are checked, not assumed.
 */
struct FiniteAlgebra {
    std::size_t domain = 1;
    std::vector<std::pair<std::size_t, std::size_t>> order;  // pairs (a, b) with a >= b
    std::map<Symbol, std::vector<std::size_t>> tables;  // flattened, lexicographic arg order
    std::size_t default_element = 0;

    bool geq(std::size_t a, std::size_t b) const;
    /// Table lookup; grounding constants (#g...) without a table evaluate
    /// to the default element. Returns absent for other missing symbols.
    std::optional<std::size_t> eval(const Term& t,
                                    const std::map<std::string, std::size_t>& valuation,
                                    std::string* missing = nullptr) const;
    /// Order axioms (reflexive, antisymmetric, transitive) and weak
    /// monotonicity of every table.
    CheckResult validate() const;
};

// ---------------------------------------------------------------------------
// Non-joinability certificates

struct NjCertificate;
using NjCertPtr = std::shared_ptr<const NjCertificate>;

struct NjGround {
    Substitution sigma;
    NjCertPtr inner;
};
struct NjTcap {};
struct NjDistinctNf {};
struct NjUsable {
    NjCertPtr inner;
};
struct NjDiscrimination {
    LinearPolyInterp interp;
};
struct NjFilter {
    ArgumentFilter filter;
    NjCertPtr inner;
};
struct NjModel {
    FiniteAlgebra algebra;
};
struct NjAutomata {
    TreeAutomaton a1;
    TreeAutomaton a2;
    ClosureEvidence evidence1;
    ClosureEvidence evidence2;
};

struct NjCertificate {
    std::variant<NjGround, NjTcap, NjDistinctNf, NjUsable, NjDiscrimination, NjFilter, NjModel,
                 NjAutomata>
        node;
};

/// Non-confluence proofs: a replayed fork with a non-joinability
/// certificate, or a modular split of the problem TRS.
struct NonConfluenceProof;
using NcProofPtr = std::shared_ptr<const NonConfluenceProof>;

struct ForkProof {
    Term start;
    std::vector<DerivationStep> steps1;
    std::vector<DerivationStep> steps2;
    NjCertificate nj;
};
struct ModularProof {
    std::vector<std::size_t> kept_rules;  // 0-based indices into the problem TRS
    NcProofPtr inner;
};
struct NonConfluenceProof {
    std::variant<ForkProof, ModularProof> node;
};

// ---------------------------------------------------------------------------
// Operations

/// Replaces the variables of t1 and t2 by reserved fresh constants
/// #g0, #g1, ... (same variable, same constant). Identity on ground input.
NjProblem auto_ground(const NjProblem& p);

/// Verifies the inner certificate on (r1, r2, t1*sigma, t2*sigma).
CheckResult nj_ground(const NjProblem& p, const Substitution& sigma, const NjCertificate& inner);

/// Grounds, then requires tcap(r1, t1) and tcap(r2, t2) to be non-unifiable.
CheckResult nj_tcap(const NjProblem& p);

/// t1 and t2 must be distinct normal forms of their systems.
CheckResult nj_distinct_nf(const NjProblem& p);

/**
 * Usable rules for reachability: the least subset U of the TRS closed
 * under (i) rules whose lhs unifies with the cap of some subterm of t and
 * (ii) rules whose lhs unifies with the cap of some subterm of the rhs of
 * a rule already in U. The cap of a subterm keeps its root and replaces
 * the arguments by their tcap; variable subterms cap to a fresh variable.
 */
Trs usable_rules_reach(const Trs& trs, const Term& t);

/// Usable-rules preprocessing, then: reversed r1-rules and r2-rules weakly
/// oriented, and eval(t1) strictly greater than eval(t2).
CheckResult nj_discrimination(const NjProblem& p, const LinearPolyInterp& interp);

/// Applies an argument filter to one term; throws std::invalid_argument
/// when a filter position exceeds the arity of an occurring symbol.
Term filter_term(const ArgumentFilter& filter, const Term& t);

/// Usable-rules preprocessing, then filters both systems and terms
/// homomorphically (dropping rules that become trivial) and verifies the
/// inner certificate on the filtered problem.
CheckResult apply_argument_filter(const ArgumentFilter& filter, const NjProblem& p,
                                  const NjCertificate& inner);

/// Grounds, applies usable rules, validates the algebra, checks the
/// quasi-model condition for reversed r1-rules and r2-rules, and requires
/// NOT eval(t2) >= eval(t1) under the default valuation.
CheckResult nj_finite_model(const NjProblem& p, const FiniteAlgebra& algebra);

/// Grounds, then: t_i accepted by a_i, a_i closed under r_i per the given
/// evidence, and the intersection language empty. Requires vcsubset of
/// both systems.
CheckResult nj_tree_automata(const NjProblem& p, const TreeAutomaton& a1, const TreeAutomaton& a2,
                             const ClosureEvidence& ev1, const ClosureEvidence& ev2);

/// Dispatches a non-joinability certificate on a problem.
CheckResult check_nj(const NjProblem& p, const NjCertificate& cert);

/// Replays both derivations from `start` and verifies the non-joinability
/// certificate on the resulting fork.
CheckResult check_fork(const Trs& trs, const Term& start,
                       const std::vector<DerivationStep>& steps1,
                       const std::vector<DerivationStep>& steps2, const NjCertificate& nj);

/**
 * Modularity of non-confluence: with disjoint signatures, vcsubset(kept)
 * and vclhs(rest), non-confluence of the kept part lifts to the union.
 * Every symbol mentioned by terms of the inner certificate must avoid the
 * signature of the rest.
 */
CheckResult check_modular_nonconfluence(const Trs& kept, const Trs& rest,
                                        const NonConfluenceProof& inner);

/// Dispatches a non-confluence proof against the problem TRS.
CheckResult check_nonconfluence_proof(const Trs& trs, const NonConfluenceProof& proof);

}  // namespace confcheck
