#include "confcheck/poly_order.hpp"

#include <sstream>

namespace confcheck {

std::string LinearPoly::to_string() const {
    std::ostringstream out;
    out << constant;
    for (const auto& [var, c] : coeffs) {
        out << " + ";
        if (c != 1) out << c << "*";
        out << var;
    }
    return out.str();
}

void LinearPolyInterp::set(Symbol symbol, std::vector<Nat> coefficients) {
    if (coefficients.size() != symbol.arity + 1)
        throw std::invalid_argument("interpretation of " + symbol.to_string() + " needs " +
                                    std::to_string(symbol.arity + 1) + " coefficients");
    for (const Nat& c : coefficients)
        if (c < 0) throw std::invalid_argument("negative coefficient for " + symbol.to_string());
    entries_.insert_or_assign(std::move(symbol), std::move(coefficients));
}

const std::vector<Nat>* LinearPolyInterp::lookup(const Symbol& symbol) const {
    auto it = entries_.find(symbol);
    return it == entries_.end() ? nullptr : &it->second;
}

bool LinearPolyInterp::strictly_monotone(Symbol* offending) const {
    for (const auto& [symbol, coeffs] : entries_) {
        for (std::size_t i = 1; i < coeffs.size(); ++i) {
            if (coeffs[i] < 1) {
                if (offending) *offending = symbol;
                return false;
            }
        }
    }
    return true;
}

LinearPoly eval_poly(const LinearPolyInterp& interp, const Term& t) {
    if (t.is_var()) {
        LinearPoly p;
        p.add_coeff(t.var_name(), 1);
        return p;
    }
    const std::vector<Nat>* coeffs = interp.lookup(t.root());
    if (!coeffs) throw UninterpretedSymbolError(t.root());
    LinearPoly out;
    out.constant = (*coeffs)[0];
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        const Nat& scale = (*coeffs)[i + 1];
        if (scale == 0) continue;
        LinearPoly arg = eval_poly(interp, t.args()[i]);
        out.constant += scale * arg.constant;
        for (const auto& [var, c] : arg.coeffs) out.add_coeff(var, scale * c);
    }
    return out;
}

PolyCmp poly_compare(const LinearPoly& p, const LinearPoly& q) {
    for (const auto& [var, qc] : q.coeffs)
        if (p.coeff(var) < qc) return PolyCmp::Unknown;
    if (p.constant > q.constant) return PolyCmp::Greater;
    if (p.constant >= q.constant) return PolyCmp::GreaterEqual;
    return PolyCmp::Unknown;
}

std::vector<bool> orient_rules(const LinearPolyInterp& interp,
                               const std::vector<Rule>& rules, OrientMode mode) {
    std::vector<bool> out;
    out.reserve(rules.size());
    for (const Rule& rule : rules) {
        PolyCmp cmp = poly_compare(eval_poly(interp, rule.lhs), eval_poly(interp, rule.rhs));
        out.push_back(mode == OrientMode::Strict
                          ? cmp == PolyCmp::Greater
                          : cmp == PolyCmp::Greater || cmp == PolyCmp::GreaterEqual);
    }
    return out;
}

CheckResult prove_termination(const Trs& trs, const std::vector<LinearPolyInterp>& rounds) {
    if (rounds.empty()) return CheckResult::reject("termination certificate is empty");

    // remaining rules, tracked with their original 1-based indices
    std::vector<std::pair<std::size_t, Rule>> remaining;
    for (std::size_t i = 0; i < trs.rules.size(); ++i) remaining.emplace_back(i + 1, trs.rules[i]);

    for (std::size_t round = 0; round < rounds.size(); ++round) {
        const LinearPolyInterp& interp = rounds[round];
        std::string where = "interpretation " + std::to_string(round + 1);

        Symbol offending;
        if (!interp.strictly_monotone(&offending))
            return CheckResult::reject(where + " is not strictly monotone at " +
                                       offending.to_string());

        std::vector<std::pair<std::size_t, Rule>> kept;
        bool removed_any = false;
        for (const auto& [index, rule] : remaining) {
            PolyCmp cmp;
            try {
                cmp = poly_compare(eval_poly(interp, rule.lhs), eval_poly(interp, rule.rhs));
            } catch (const UninterpretedSymbolError& e) {
                return CheckResult::reject(where + ": " + e.what() + " in rule " +
                                           std::to_string(index) + " (" + rule.to_string() + ")");
            }
            if (cmp == PolyCmp::Unknown)
                return CheckResult::reject("rule " + std::to_string(index) + " (" +
                                           rule.to_string() + ") not weakly oriented by " + where);
            if (cmp == PolyCmp::Greater)
                removed_any = true;
            else
                kept.emplace_back(index, rule);
        }
        if (!removed_any)
            return CheckResult::reject(where + " removes no rule");
        remaining = std::move(kept);
    }

    if (!remaining.empty()) {
        std::string indices;
        for (const auto& [index, rule] : remaining) {
            if (!indices.empty()) indices += ", ";
            indices += std::to_string(index);
        }
        return CheckResult::reject("rules remain after all interpretations: " + indices);
    }
    return CheckResult::accept();
}

}  // namespace confcheck
