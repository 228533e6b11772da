#pragma once

#include <string>

#include "solvquot/action.hpp"

namespace solvquot {
namespace dsl {

// Parses a .sq action document. Statements, one per line ('#' comments):
//   field Q | field Fp <prime>
//   vars <base...>
//   unipotent <z...>        (optional)
//   torus <t...>            (optional)
//   char <z> = <monomial>   (optional, defaults to 1)
//   map <x> = <expr>        (one per base variable)
// Expressions: integers, rationals a/b, variables, + - * / ^ and parentheses;
// '/' only by nonzero constants, negative exponents only on torus variables.
ActionSpec parse(const std::string& text);

// Canonical document for a spec; parse(print(spec)) reproduces it.
std::string print(const ActionSpec& spec);

// Expression parser against an existing table (also used for stored results).
Poly parse_expression(const std::string& text, const VarTableRef& table);

// Fraction rendering with cleared rational content, e.g. (2*y*w - x^2)/(2*y).
std::string localized_to_string(const Localized& a);

bool spec_equal(const ActionSpec& a, const ActionSpec& b);

} // namespace dsl
} // namespace solvquot
