#include "confcheck/critical_pairs.hpp"

#include <map>

#include "confcheck/unify.hpp"

namespace confcheck {

namespace {

Term rename_vars(const Term& t, const std::map<std::string, std::string>& renaming) {
    if (t.is_var()) return Term::var(renaming.at(t.var_name()));
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(rename_vars(a, renaming));
    return Term::app(t.root(), std::move(args));
}

// Appends a reserved suffix to every variable of the rule.
Rule rename_apart(const Rule& rule, const std::string& suffix) {
    std::map<std::string, std::string> renaming;
    for (const std::string& v : rule.lhs.variables_in_order()) renaming.emplace(v, v + suffix);
    for (const std::string& v : rule.rhs.variables_in_order()) renaming.emplace(v, v + suffix);
    return {rename_vars(rule.lhs, renaming), rename_vars(rule.rhs, renaming)};
}

// Canonical names x0, x1, ... in order of first occurrence over (left,
// right, peak), skipping names the TRS already uses as function symbols.
void canonicalize(CriticalPair& cp, const std::set<std::string>& taken_names) {
    std::map<std::string, std::string> renaming;
    std::size_t next = 0;
    auto fresh = [&]() {
        for (;; ++next) {
            std::string candidate = "x" + std::to_string(next);
            if (!taken_names.count(candidate)) {
                ++next;
                return candidate;
            }
        }
    };
    auto visit = [&](const Term& t) {
        for (const std::string& v : t.variables_in_order())
            if (!renaming.count(v)) renaming.emplace(v, fresh());
    };
    visit(cp.left);
    visit(cp.right);
    visit(cp.peak);
    cp.left = rename_vars(cp.left, renaming);
    cp.right = rename_vars(cp.right, renaming);
    cp.peak = rename_vars(cp.peak, renaming);
}

}  // namespace

std::vector<CriticalPair> critical_pairs(const Trs& trs, bool nontrivial_only) {
    std::set<std::string> taken_names;
    for (const Symbol& s : trs.signature()) taken_names.insert(s.name);

    std::vector<CriticalPair> out;
    for (std::size_t outer = 0; outer < trs.rules.size(); ++outer) {
        const Rule& outer_rule = trs.rules[outer];
        for (std::size_t inner = 0; inner < trs.rules.size(); ++inner) {
            Rule inner_rule = rename_apart(trs.rules[inner], "#i");
            for (const Position& pos : outer_rule.lhs.non_variable_positions()) {
                const Term& overlap = *outer_rule.lhs.subterm(pos);
                std::optional<Substitution> mgu = unify(overlap, inner_rule.lhs);
                if (!mgu) continue;
                CriticalPair cp{/*left=*/mgu->apply(outer_rule.rhs),
                                /*right=*/mgu->apply(outer_rule.lhs.replace(pos, inner_rule.rhs)),
                                /*peak=*/mgu->apply(outer_rule.lhs),
                                /*outer_rule=*/outer,
                                /*inner_rule=*/inner,
                                /*pos=*/pos};
                canonicalize(cp, taken_names);
                if (nontrivial_only && cp.is_trivial()) continue;
                out.push_back(std::move(cp));
            }
        }
    }
    return out;
}

VariableConditions check_variable_conditions(const Trs& trs) {
    VariableConditions vc;
    for (const Rule& rule : trs.rules) {
        if (rule.lhs_is_variable()) vc.vclhs = false;
        if (!rule.extra_variables().empty()) vc.vcsubset = false;
    }
    return vc;
}

namespace {

struct TcapContext {
    const Trs& trs;
    std::size_t fresh_counter = 0;
    Term fresh() { return Term::var("#v" + std::to_string(fresh_counter++)); }
};

Term tcap_walk(TcapContext& ctx, const Term& t) {
    if (t.is_var()) return ctx.fresh();
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(tcap_walk(ctx, a));
    Term capped = Term::app(t.root(), std::move(args));
    for (const Rule& rule : ctx.trs.rules) {
        Rule renamed = rename_apart(rule, "#l");
        if (unify(capped, renamed.lhs)) return ctx.fresh();
    }
    return capped;
}

}  // namespace

Term tcap(const Trs& trs, const Term& t) {
    TcapContext ctx{trs};
    return tcap_walk(ctx, t);
}

}  // namespace confcheck
