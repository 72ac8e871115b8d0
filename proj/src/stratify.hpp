#ifndef STRATIFORGE_STRATIFY_HPP
#define STRATIFORGE_STRATIFY_HPP

#include <string>
#include <variant>
#include <vector>

#include "ast.hpp"

namespace stf {

// level(y) = level(x) + offset, contributed by one atomic subformula.
struct LevelConstraint {
  std::string x, y;
  int offset;       // 1 for x in y, 0 for x = y
  std::string atom; // printed source atom
};

struct TypeAssignment {
  // Sorted by variable name; normalized so each connected component's
  // minimum level is 0.
  std::vector<std::pair<std::string, int>> levels;
  int level_of(const std::string& v) const;
};

struct ConflictWitness {
  std::vector<LevelConstraint> cycle;  // replaying these contradicts
  int total_offset;                    // nonzero by construction
};

using StratifyResult = std::variant<TypeAssignment, ConflictWitness>;

std::vector<LevelConstraint> collect_constraints(const FormulaPtr& f);
StratifyResult stratify_formula(const FormulaPtr& f);

// True iff the assignment satisfies every constraint of the formula.
bool assignment_satisfies(const TypeAssignment& a, const FormulaPtr& f);

std::string describe(const StratifyResult& r);

}  // namespace stf

#endif
