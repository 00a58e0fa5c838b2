#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "gkat/relation.hpp"
#include "gkat/term.hpp"

namespace gkat {

using SortDecls = std::map<std::string, Sort, std::less<>>;

/// Parses the ASCII term grammar
///
///     term  := arrow
///     arrow := sum ("->" arrow)?
///     sum   := seq ("+" seq)*
///     seq   := star (";" star)*
///     star  := atom "*"*
///     atom  := ident | "0" | "1" | "!" atom | "(" term ")"
///
/// Every identifier must be declared in `decls`. Throws ParseError (with
/// column) or SortError.
Term parse_term(std::string_view text, const SortDecls& decls);

/// `term = term` or `term <= term`.
Relation parse_relation(std::string_view text, const SortDecls& decls);

/// `rel, rel, ... => rel`, or a single relation.
QuasiEquation parse_quasi_equation(std::string_view text, const SortDecls& decls);

/// Minimal-parenthesis rendering; parse_term(pretty(t)) == t.
std::string pretty(const Term& t);
std::string pretty(const Relation& r);
std::string pretty(const QuasiEquation& q);

bool is_identifier(std::string_view s);

}  // namespace gkat
