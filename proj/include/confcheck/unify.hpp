#pragma once

#include <optional>

#include "confcheck/term.hpp"

namespace confcheck {

/// Most general unifier of s and t (idempotent, occurs check enforced),
/// or absent when the terms are not unifiable.
std::optional<Substitution> unify(const Term& s, const Term& t);

/// Matcher sigma with pattern * sigma = subject, binding exactly the
/// variables of the pattern; absent when the pattern does not match.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

/// True when the variable occurs in the term.
bool occurs(const std::string& var, const Term& t);

}  // namespace confcheck
