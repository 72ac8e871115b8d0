#ifndef STRATIFORGE_EVAL_HPP
#define STRATIFORGE_EVAL_HPP

#include <map>
#include <string>

#include "ast.hpp"
#include "universe.hpp"

namespace stf {

using Env = std::map<std::string, Class>;

// Evaluates a primitive-only term over a frame. Quantified object variables
// range over W, memberships use intrinsic extensions, V denotes W, and
// defined-set results are filtered to W. The exceptions are sing/pairset,
// whose results are the reified elements themselves (possibly above W's
// rank cutoff); headroom_of bounds the nesting so those reifications stay
// inside the universe.
Class eval_term(const TermPtr& t, const Frame& f, const Env& env);

// {e in W : formula holds with var := e}, quantifiers relativized to W.
// Environment names denote classes; a class used where an element is
// required (left of 'in', either side of '=') is reified first.
Class comprehend(const Frame& f, const FormulaPtr& formula,
                 const std::string& var, const Env& env);

bool formula_holds(const Frame& f, const FormulaPtr& formula, const Env& env);

// Maximum nesting depth of reification-forcing constructors (sing /
// pairset). Frames need depth - rank(W) >= headroom_of(t) for eval_term to
// be total on environments contained in W.
uint32_t headroom_of(const TermPtr& t);

}  // namespace stf

#endif
