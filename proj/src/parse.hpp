#ifndef STRATIFORGE_PARSE_HPP
#define STRATIFORGE_PARSE_HPP

#include <set>
#include <string>

#include "ast.hpp"

namespace stf {

// Concrete syntax (ASCII canonical; common math glyphs accepted as aliases):
//   constants    V  {}  1*  {&}  {&a}  {&b}  {e*}  [=]  [c]  [&]  [&1]  [-1]
//                numerals 0..8 (definition-table names, system-resolved)
//   postfix      '  ^1  ^11  ^pair  ^k  ^-1  ^!           (bind tightest)
//   prefix-ish   {t}  {t,u}  Un(t)  name(args)
//   infix        :  !  *  ><  |  \  /\  \/   (one precedence level,
//                left-associative; mixing different operators needs parens)
//   primitives   sheffer(a,b)  sing(a)  pairset(a,b)  compl(a)
//
// Identifiers not in `known_names` parse as variables; a.NAME / b.NAME force
// system-qualified operator names.

TermPtr parse_term(const std::string& text,
                   const std::set<std::string>& known_names);
std::string print_term(const TermPtr& t);

// Formulas: atoms "x in y", "x = y"; connectives ~ & | -> <-> (and/or/not
// words accepted); quantifiers "forall x (...)", "exists x (...)", with
// bounded sugar "forall x in y (...)".
FormulaPtr parse_formula(const std::string& text);
std::string print_formula(const FormulaPtr& f);

}  // namespace stf

#endif
