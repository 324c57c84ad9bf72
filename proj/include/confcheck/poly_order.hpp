#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <vector>

#include "confcheck/check_result.hpp"
#include "confcheck/term.hpp"

namespace confcheck {

/// Arbitrary-precision non-negative integer coefficient.
using Nat = boost::multiprecision::cpp_int;

/// Linear polynomial over the naturals: constant + sum of coeff * var.
/// All coefficients are non-negative; zero coefficients are not stored.
struct LinearPoly {
    Nat constant;
    std::map<std::string, Nat> coeffs;

    Nat coeff(const std::string& var) const {
        auto it = coeffs.find(var);
        return it == coeffs.end() ? Nat(0) : it->second;
    }
    void add_coeff(const std::string& var, const Nat& c) {
        if (c == 0) return;
        coeffs[var] += c;
    }
    std::string to_string() const;
    friend bool operator==(const LinearPoly&, const LinearPoly&) = default;
};

enum class PolyCmp { Greater, GreaterEqual, Unknown };

struct UninterpretedSymbolError : std::runtime_error {
    Symbol symbol;
    explicit UninterpretedSymbolError(Symbol s)
        : std::runtime_error("uninterpreted symbol " + s.to_string()), symbol(std::move(s)) {}
};

/**
 * Linear polynomial interpretation over the naturals: for each symbol of
 * arity n a coefficient vector (c0, c1, ..., cn) denoting
 * c0 + c1*x1 + ... + cn*xn. Non-negative coefficients make every
 * interpretation weakly monotone; it is strictly monotone iff every
 * argument coefficient is at least 1.
 */
class LinearPolyInterp {
public:
    LinearPolyInterp() = default;

    /// Coefficient vector length must be arity + 1; coefficients must be
    /// non-negative.
    void set(Symbol symbol, std::vector<Nat> coefficients);
    const std::vector<Nat>* lookup(const Symbol& symbol) const;

    /// True when every argument coefficient of every entry is >= 1; on
    /// failure reports one offending symbol.
    bool strictly_monotone(Symbol* offending = nullptr) const;

    const std::map<Symbol, std::vector<Nat>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::map<Symbol, std::vector<Nat>> entries_;
};

/// Composes the interpretation bottom-up over the term; a variable
/// evaluates to itself. Throws UninterpretedSymbolError for symbols
/// without an entry.
LinearPoly eval_poly(const LinearPolyInterp& interp, const Term& t);

/// Sound syntactic comparison under all naturals valuations:
/// Greater when coefficients are pointwise >= and the constant strictly
/// larger; GreaterEqual when pointwise >= throughout; Unknown otherwise.
PolyCmp poly_compare(const LinearPoly& p, const LinearPoly& q);

enum class OrientMode { Weak, Strict };

/// Per-rule orientation: weak mode asks for GreaterEqual (or Greater),
/// strict mode for Greater. Throws UninterpretedSymbolError.
std::vector<bool> orient_rules(const LinearPolyInterp& interp,
                               const std::vector<Rule>& rules, OrientMode mode);

/**
 * Iterated rule removal: every interpretation must be strictly monotone,
 * orient all remaining rules at least weakly, and strictly orient (and so
 * remove) at least one rule; after the last round no rules may remain.
 */
CheckResult prove_termination(const Trs& trs, const std::vector<LinearPolyInterp>& rounds);

}  // namespace confcheck
