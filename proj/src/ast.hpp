#ifndef STRATIFORGE_AST_HPP
#define STRATIFORGE_AST_HPP

#include <memory>
#include <string>
#include <vector>

namespace stf {

// Term constructors. The primitives cover both axiom systems; everything
// else is a Named operator expanded away via the definition table.
enum class TermOp {
  Var,
  V,           // the local universe constant
  Empty,       // {}
  Sheffer,     // sheffer(A, B)
  Sing,        // sing(A), membership = {reify(A)}
  BigUnion,    // Un(A)
  Comp,        // A : B
  CapA,        // {&a}, pairs-only intersection relation set
  Compl,       // compl(A)
  PairSet,     // pairset(A, B)
  Frege1Star,  // 1*
  Preprod,     // A ! B
  CapB,        // {&b}, unrestricted intersection relation set
  Named,       // derived operator, resolved against the definition table
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermOp op;
  std::string name;  // Var name or Named operator key
  std::vector<TermPtr> args;

  static TermPtr make(TermOp op, std::vector<TermPtr> args = {},
                      std::string name = {}) {
    auto t = std::make_shared<Term>();
    t->op = op;
    t->name = std::move(name);
    t->args = std::move(args);
    return t;
  }
  static TermPtr var(std::string name) {
    return make(TermOp::Var, {}, std::move(name));
  }
  static TermPtr named(std::string name, std::vector<TermPtr> args = {}) {
    return make(TermOp::Named, std::move(args), std::move(name));
  }
};

bool term_equal(const TermPtr& a, const TermPtr& b);
bool term_is_primitive(const TermPtr& t);

// FOL(=, in) formulas. Mem/Eq operands are names: either quantified
// variables or environment names (classes).
enum class FormulaOp {
  Mem,
  Eq,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaOp op;
  std::string lhs, rhs;  // Mem/Eq operands; quantifier variable in lhs
  std::vector<FormulaPtr> args;

  static FormulaPtr make(FormulaOp op, std::vector<FormulaPtr> args = {},
                         std::string lhs = {}, std::string rhs = {}) {
    auto f = std::make_shared<Formula>();
    f->op = op;
    f->lhs = std::move(lhs);
    f->rhs = std::move(rhs);
    f->args = std::move(args);
    return f;
  }
  static FormulaPtr mem(std::string x, std::string y) {
    return make(FormulaOp::Mem, {}, std::move(x), std::move(y));
  }
  static FormulaPtr eq(std::string x, std::string y) {
    return make(FormulaOp::Eq, {}, std::move(x), std::move(y));
  }
};

void collect_term_vars(const TermPtr& t, std::vector<std::string>& out);

}  // namespace stf

#endif
