#include "eval.hpp"

#include <algorithm>
#include <unordered_map>

namespace stf {

namespace {

bool ext_contains(const Universe& u, ElemId host, ElemId member) {
  const auto& e = u.ext(host);
  return std::binary_search(e.begin(), e.end(), member);
}

struct Evaluator {
  const Frame& f;
  const Env& env;
  std::unordered_map<const Term*, Class> memo;  // valid for one (frame, env)

  const Universe& u() const { return f.u(); }

  const Class& class_of(const TermPtr& t) {
    auto it = memo.find(t.get());
    if (it != memo.end()) return it->second;
    Class c = compute(t);
    return memo.emplace(t.get(), std::move(c)).first->second;
  }

  Class compute(const TermPtr& t) {
    switch (t->op) {
      case TermOp::Var: {
        auto it = env.find(t->name);
        if (it == env.end())
          fail(ErrorCode::UnboundVar, "unbound name " + t->name);
        return it->second;
      }
      case TermOp::V:
        return f.w;
      case TermOp::Empty:
        return Class{};
      case TermOp::Sheffer: {
        Class both = class_intersect(class_of(t->args[0]), class_of(t->args[1]));
        return class_difference(f.w, both);
      }
      case TermOp::Compl:
        return class_difference(f.w, class_of(t->args[0]));
      case TermOp::Sing:
        return Class{{reify(f, class_of(t->args[0]))}};
      case TermOp::PairSet: {
        ElemId a = reify(f, class_of(t->args[0]));
        ElemId b = reify(f, class_of(t->args[1]));
        return Class::from_unsorted({a, b});
      }
      case TermOp::BigUnion: {
        Class acc;
        for (ElemId k : class_intersect(class_of(t->args[0]), f.w))
          acc = class_union(acc, Class(u().ext(k)));
        return class_intersect(acc, f.w);
      }
      case TermOp::Comp:
        return eval_comp(class_of(t->args[0]), class_of(t->args[1]));
      case TermOp::CapA:
        return eval_cap_pairs();
      case TermOp::CapB:
        return eval_cap_general();
      case TermOp::Frege1Star: {
        Class out;
        for (ElemId y : f.w)
          if (class_intersect(Class(u().ext(y)), f.w).size() <= 1)
            out.ids.push_back(y);
        return out;
      }
      case TermOp::Preprod:
        return eval_preprod(class_of(t->args[0]), class_of(t->args[1]));
      case TermOp::Named:
        fail(ErrorCode::Internal,
             "eval_term needs a primitive term; expand first (" + t->name +
                 ")");
    }
    fail(ErrorCode::Internal, "bad term op");
  }

  // Candidate (a,b) readings of pair(r, a, b) for r's extension, with the
  // quantified components restricted to W.
  void pair_readings(ElemId r, std::vector<std::pair<ElemId, ElemId>>& out) {
    out.clear();
    auto pv = u().classify_pair(r);
    using Tag = Universe::PairView::Tag;
    if (pv.tag == Tag::None) return;
    if (!f.w.contains(pv.a) || !f.w.contains(pv.b)) return;
    out.emplace_back(pv.a, pv.b);
    if (pv.tag == Tag::Doubleton) out.emplace_back(pv.b, pv.a);
  }

  // Axiom clause: y in X  iff  exists a,b,c,r,s (pair(y,a,c) and r in R and
  // s in S and pair(r,a,b) and pair(s,b,c)). Join order: r before (a,b),
  // then s before c, with y located through the pair index.
  Class eval_comp(const Class& rc, const Class& sc) {
    std::vector<ElemId> hits;
    std::vector<std::pair<ElemId, ElemId>> rps, sps;
    for (ElemId r : rc) {
      if (!f.w.contains(r)) continue;
      pair_readings(r, rps);
      for (auto [a, b] : rps) {
        for (ElemId s : sc) {
          if (!f.w.contains(s)) continue;
          pair_readings(s, sps);
          for (auto [b2, c] : sps) {
            if (b2 != b) continue;
            auto y = u().find_pair(a, c);
            if (y && f.w.contains(*y)) hits.push_back(*y);
          }
        }
      }
    }
    return Class::from_unsorted(std::move(hits));
  }

  Class eval_cap_pairs() {
    Class out;
    for (ElemId y : f.w) {
      auto pv = u().classify_pair(y);
      if (pv.tag == Universe::PairView::Tag::None) continue;
      if (!f.w.contains(pv.a) || !f.w.contains(pv.b)) continue;
      Class common = class_intersect(Class(u().ext(pv.a)), Class(u().ext(pv.b)));
      if (!class_intersect(common, f.w).empty()) out.ids.push_back(y);
    }
    return out;
  }

  Class eval_cap_general() {
    Class out;
    for (ElemId y : f.w) {
      Class members = class_intersect(Class(u().ext(y)), f.w);
      bool found = false;
      if (members.empty()) {
        found = !f.w.empty();
      } else {
        Class common = f.w;
        for (ElemId m : members) {
          common = class_intersect(common, Class(u().ext(m)));
          if (common.empty()) break;
        }
        found = !common.empty();
      }
      if (found) out.ids.push_back(y);
    }
    return out;
  }

  Class eval_preprod(const Class& rc, const Class& sc) {
    Class out;
    Class rw = class_intersect(rc, f.w);
    Class sw = class_intersect(sc, f.w);
    for (ElemId y : f.w) {
      Class need = class_intersect(Class(u().ext(y)), f.w);
      bool ok = false;
      for (ElemId r : rw) {
        if (ok) break;
        Class rem = class_difference(need, Class(u().ext(r)));
        if (rem.empty()) {
          ok = !sw.empty();
          continue;
        }
        for (ElemId s : sw)
          if (class_subset(rem, Class(u().ext(s)))) {
            ok = true;
            break;
          }
      }
      if (ok) out.ids.push_back(y);
    }
    return out;
  }
};

}  // namespace

Class eval_term(const TermPtr& t, const Frame& f, const Env& env) {
  Evaluator ev{f, env, {}};
  return ev.class_of(t);
}

uint32_t headroom_of(const TermPtr& t) {
  uint32_t inner = 0;
  for (const auto& a : t->args) inner = std::max(inner, headroom_of(a));
  if (t->op == TermOp::Sing || t->op == TermOp::PairSet) return inner + 1;
  return inner;
}

// ---------------------------------------------------------------------------
// Formula satisfaction

namespace {

struct FormulaEval {
  const Frame& f;
  const Env& env;
  std::map<std::string, ElemId> bound;

  ElemId as_element(const std::string& name) {
    auto it = bound.find(name);
    if (it != bound.end()) return it->second;
    auto e = env.find(name);
    if (e != env.end()) return reify(f, e->second);
    fail(ErrorCode::UnboundVar, "unbound name " + name + " in formula");
  }

  bool sat(const FormulaPtr& fm) {
    switch (fm->op) {
      case FormulaOp::Mem: {
        ElemId x = as_element(fm->lhs);
        auto it = bound.find(fm->rhs);
        if (it != bound.end()) return ext_contains(f.u(), it->second, x);
        auto e = env.find(fm->rhs);
        if (e != env.end()) return e->second.contains(x);
        fail(ErrorCode::UnboundVar, "unbound name " + fm->rhs + " in formula");
      }
      case FormulaOp::Eq:
        return as_element(fm->lhs) == as_element(fm->rhs);
      case FormulaOp::Not:
        return !sat(fm->args[0]);
      case FormulaOp::And:
        return sat(fm->args[0]) && sat(fm->args[1]);
      case FormulaOp::Or:
        return sat(fm->args[0]) || sat(fm->args[1]);
      case FormulaOp::Implies:
        return !sat(fm->args[0]) || sat(fm->args[1]);
      case FormulaOp::Iff:
        return sat(fm->args[0]) == sat(fm->args[1]);
      case FormulaOp::Forall: {
        auto saved = bound.find(fm->lhs) != bound.end()
                         ? std::optional<ElemId>(bound[fm->lhs])
                         : std::nullopt;
        bool ok = true;
        for (ElemId e : f.w) {
          bound[fm->lhs] = e;
          if (!sat(fm->args[0])) {
            ok = false;
            break;
          }
        }
        if (saved)
          bound[fm->lhs] = *saved;
        else
          bound.erase(fm->lhs);
        return ok;
      }
      case FormulaOp::Exists: {
        auto saved = bound.find(fm->lhs) != bound.end()
                         ? std::optional<ElemId>(bound[fm->lhs])
                         : std::nullopt;
        bool ok = false;
        for (ElemId e : f.w) {
          bound[fm->lhs] = e;
          if (sat(fm->args[0])) {
            ok = true;
            break;
          }
        }
        if (saved)
          bound[fm->lhs] = *saved;
        else
          bound.erase(fm->lhs);
        return ok;
      }
    }
    fail(ErrorCode::Internal, "bad formula op");
  }
};

}  // namespace

bool formula_holds(const Frame& f, const FormulaPtr& formula, const Env& env) {
  FormulaEval fe{f, env, {}};
  return fe.sat(formula);
}

Class comprehend(const Frame& f, const FormulaPtr& formula,
                 const std::string& var, const Env& env) {
  Class out;
  FormulaEval fe{f, env, {}};
  for (ElemId e : f.w) {
    fe.bound[var] = e;
    if (fe.sat(formula)) out.ids.push_back(e);
  }
  return out;
}

}  // namespace stf
