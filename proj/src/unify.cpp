#include "confcheck/unify.hpp"

#include <utility>
#include <vector>

namespace confcheck {

bool occurs(const std::string& var, const Term& t) {
    if (t.is_var()) return t.var_name() == var;
    for (const Term& a : t.args())
        if (occurs(var, a)) return true;
    return false;
}

std::optional<Substitution> unify(const Term& s, const Term& t) {
    Substitution sigma;
    std::vector<std::pair<Term, Term>> work{{s, t}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        a = sigma.apply(a);
        b = sigma.apply(b);
        if (a == b) continue;
        if (a.is_var() || b.is_var()) {
            if (!a.is_var()) std::swap(a, b);
            if (occurs(a.var_name(), b)) return std::nullopt;
            sigma.substitute_in_ranges(a.var_name(), b);
            sigma.bind(a.var_name(), b);
            continue;
        }
        if (a.root() != b.root()) return std::nullopt;
        for (std::size_t i = 0; i < a.args().size(); ++i)
            work.emplace_back(a.args()[i], b.args()[i]);
    }
    return sigma;
}

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
    Substitution out;
    std::vector<std::pair<const Term*, const Term*>> work{{&pattern, &subject}};
    while (!work.empty()) {
        auto [p, s] = work.back();
        work.pop_back();
        if (p->is_var()) {
            const Term* bound = out.lookup(p->var_name());
            if (bound) {
                if (*bound != *s) return std::nullopt;
            } else {
                out.bind(p->var_name(), *s);
            }
            continue;
        }
        if (s->is_var() || p->root() != s->root()) return std::nullopt;
        for (std::size_t i = 0; i < p->args().size(); ++i)
            work.emplace_back(&p->args()[i], &s->args()[i]);
    }
    return out;
}

}  // namespace confcheck
