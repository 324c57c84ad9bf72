#pragma once

#include <set>
#include <string>
#include <string_view>

#include "confcheck/certificate.hpp"
#include "confcheck/sexpr.hpp"
#include "confcheck/term.hpp"

namespace confcheck {

/**
 * Parses the TRS surface format:
 *
 *   file := "(VAR" ident* ")"? "(RULES" rule* ")"
 *   rule := term "->" term
 *   term := ident | ident "(" term ("," term)* ")"
 *
 * Identifiers declared in the VAR block are the only variables; every
 * other identifier is a function symbol whose arity is inferred per
 * occurrence ((name, arity) keying, so one name may carry several
 * arities). Reserved names (anything starting with '#', and the bottom
 * constant) are rejected.
 */
Trs parse_trs(std::string_view text);

/// Parses a term in the TRS functional notation against an explicit set
/// of variable names.
Term parse_term(std::string_view text, const std::set<std::string>& variables);

/// Parses the s-expression certificate grammar (docs/certificate-grammar.md).
Certificate parse_certificate(std::string_view text);

std::string print_trs(const Trs& trs);
std::string print_certificate(const Certificate& cert);

}  // namespace confcheck
