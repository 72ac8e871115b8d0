#include "defs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "parse.hpp"
#include "universe.hpp"

namespace stf {

const char* kPreludeText = R"PRELUDE(
# Operator prelude: the derived symbols of both axiom systems.
# "a."/"b." prefixes pin a definition to one system; unqualified uses
# resolve to the active system's entry first. Variant lines record
# alternative readings of ambiguously printed source formulas; variant 0
# is the default used by plain expansion.

a.complement(A) := sheffer(A, A) ;
b.complement(A) := compl(A) ;
a.singleton(A) := sing(A) ;
b.singleton(A) := pairset(A, A) ;
a.pair(A, B) := ({A}) \/ ({B}) ;
b.pair(A, B) := pairset(A, B) ;
a.capset := {&a} ;
b.capset := {&b} ;
a.cup(A, B) := sheffer(A', B') ;
b.cup(A, B) := Un({A, B}) ;
icap(A, B) := ((A') \/ (B'))' ;
variant 1: icap(A, B) := ((A') \/ B)' ;
diff(A, B) := A /\ (B') ;

# Frege numerals, system A
2* := V : V ;
P(A) := (Un((({{A'}}) : (V : V)) /\ {&}))' ;
variant 1: P(A) := (Un((({{A'}}) : (V : V)) /\ {{}}))' ;
variant 2: P(A) := (Un((({{A'}}) : (V : V)) /\ ({{}})'))' ;
H := (P(2*)) /\ 2* ;
G := (P((2*)')) /\ 2* ;
I := (G : V) /\ (H : V) ;
J := G \ {&} ;
variant 1: J := G \ {{}} ;
variant 2: J := G \ ({{}})' ;
a.2 := (Un((J : (I /\ {&})) /\ {&})) /\ 2* ;
variant 1: a.2 := (Un((J : (I /\ {{}})) /\ {{}})) /\ 2* ;
variant 2: a.2 := (Un((J : (I /\ ({{}})')) /\ ({{}})')) /\ 2* ;
a.1 := 2* \ (a.2) ;
a.0 := (Un({&}))' ;
variant 1: a.0 := (Un({{}}))' ;
variant 2: a.0 := (Un(({{}})'))' ;

# Powers and the relation-set catalog, system A
a.^1(X) := (P(X)) /\ 1 ;
b.^1(X) := (({X}) ! ({X})) /\ 1 ;
^11(X) := (X^1)^1 ;
[=] := 1^1 ;
dom(R) := Un((Un(R)) /\ 1) ;
a.uprod(A, B) := ((A^1) : V) /\ ((B^1) : V) ;
cart(A, B) := ((A^1) * (A * B)) /\ {&} ;
variant 1: cart(A, B) := ((A^1) * (A * B)) /\ {{}} ;
variant 2: cart(A, B) := ((A^1) * (A * B)) /\ ({{}})' ;
[&] := ((1^1) * {&}) /\ {&} ;
variant 1: [&] := ((1^1) * {{}}) /\ {{}} ;
variant 2: [&] := ((1^1) * ({{}})') /\ ({{}})' ;
pi1 := ((1^1) >< V) /\ [&] ;
epsstar := ((1^1) * V) /\ {&} ;
variant 1: epsstar := ((1^1) * V) /\ {{}} ;
variant 2: epsstar := ((1^1) * V) /\ ({{}})' ;
L := Un((1^11) : {e*}) ;
cap1comp := (((((V \ (0 \/ 1)) * (1^1)) /\ {&}) : (((V \ (0 \/ 1)) * (1^1)) /\ {&})) /\ L) \/ (((((V \ (0 \/ 1)) * (1^1)) /\ {&})) \/ (1^11)) ;
variant 1: cap1comp := (((((V \ (0 \/ 1)) * (1^1)) /\ {{}}) : (((V \ (0 \/ 1)) * (1^1)) /\ {{}})) /\ L) \/ (((((V \ (0 \/ 1)) * (1^1)) /\ {{}})) \/ (1^11)) ;
variant 2: cap1comp := (((((V \ (0 \/ 1)) * (1^1)) /\ ({{}})') : (((V \ (0 \/ 1)) * (1^1)) /\ ({{}})')) /\ L) \/ (((((V \ (0 \/ 1)) * (1^1)) /\ ({{}})')) \/ (1^11)) ;

# Segment and stage constructions for the ordered relative product
r1(R) := R /\ [=] ;
r2(R, S) := (R \ (r1(R))) /\ (Un((R * S) /\ (({[=]}) \ ({[=]^1})))) ;
s2(R, S) := (S \ (r1(S))) /\ (Un((R * S) /\ (({[=]}) \ ({[=]^1})))) ;
r3(R, S) := R \ ((r1(R)) \/ (r2(R, S))) ;
s3(R, S) := S \ ((r1(S)) \/ (s2(R, S))) ;
stage1(R, S) := (r1(R)) : S ;
stage2(R, S) := ((((Un((r2(R, S)) \/ (r3(R, S)))) /\ [=]) : (Un(r1(S)))) * [=]) /\ ((r2(R, S)) \/ (r3(R, S))) ;
stage3(R, S) := ((Un(r2(R, S))) /\ [=])^1 ;
variant 1: stage3(R, S) := ((Un(r2(R, S))) /\ [=]) /\ L ;
astar4(R, S) := ((r3(R, S)) : (([=]^11) /\ {[=]})) \ {[=]} ;
b4(R, S) := (((s2(R, S)) \/ (s3(R, S))) : (([=]^11) /\ {[=]})) \ {[=]} ;
bstar4(R, S) := ((([=]^11) /\ {[=]}) : (b4(R, S))) \ ([=]^1) ;
stage4(R, S) := ((astar4(R, S)) : (bstar4(R, S))) /\ {[=]} ;
astar5(R, S) := ((r2(R, S)) : (([=]^11) /\ {[=]})) \ {[=]} ;
b5(R, S) := ((s3(R, S)) : (([=]^11) /\ {[=]})) \ {[=]} ;
bstar5(R, S) := ((([=]^11) /\ {[=]}) : (b5(R, S))) \ ([=]^1) ;
stage5(R, S) := ((astar5(R, S)) : (bstar5(R, S))) /\ {&} ;
relprod(R, S) := (((stage1(R, S)) \/ (stage2(R, S))) \/ ((stage3(R, S)) \/ (stage4(R, S)))) \/ (stage5(R, S)) ;

# Inclusion, converses, projections, images
[c] := (((1 /\ [&]) | ((1 >< V) /\ ([&])'))') /\ (V >< V) ;
variant 1: [c] := ((((1^1) /\ [&]) | ((1 >< V) /\ ([&])'))') /\ (V >< V) ;
[&1] := ((V >< (1^11)) /\ [&]) | (((1^11) >< V) /\ [&]) ;
[-1] := ((V >< (V >< V)) /\ ([&] \ [&1])) \/ [=] ;
variant 1: [-1] := ((V >< (V >< V)) /\ ([&] \ [&1])) \/ ([=]^11) ;
^-1(R) := dom(([-1]) | ((R >< R) /\ [=])) ;
pi2 := pi1 | [-1] ;
^k(R) := ((1^11) * R) /\ {&} ;
^!(R) := ((R^k) | (((R^-1)^k)^-1)) \ ((1^11) /\ ((R^k)')) ;

# Frege numerals, system B
b.0 := (Un({&}))' ;
variant 1: b.0 := (Un({{}}))' ;
b.1 := 1* \ 0 ;
variant 1: b.1 := 1* \ {0} ;
b.2 := ((b.1) ! (b.1)) \ 1* ;
b.3 := ((b.2) ! (b.1)) \ (1* \/ (b.2)) ;
b.4 := ((b.3) ! (b.1)) \ ((1* \/ (b.2)) \/ (b.3)) ;
b.5 := ((b.4) ! (b.1)) \ (((1* \/ (b.2)) \/ (b.3)) \/ (b.4)) ;
b.6 := ((b.5) ! (b.1)) \ ((((1* \/ (b.2)) \/ (b.3)) \/ (b.4)) \/ (b.5)) ;
b.7 := ((b.6) ! (b.1)) \ (((((1* \/ (b.2)) \/ (b.3)) \/ (b.4)) \/ (b.5)) \/ (b.6)) ;
b.8 := ((b.7) ! (b.1)) \ ((((((1* \/ (b.2)) \/ (b.3)) \/ (b.4)) \/ (b.5)) \/ (b.6)) \/ (b.7)) ;

# Pair powers, products and composition cases, system B
^pair(R) := ((R^1) ! (R^1)) \ 0 ;
variant 1: ^pair(R) := ((R^1) ! (R^1)) \ {0} ;
b.uprod(R, S) := (((R^1) ! (S^1)) \ (((R \ S)^pair) \/ ((S \ R)^pair))) \ 0 ;
variant 1: b.uprod(R, S) := (((R^1) ! (S^1)) \ (((R /\ S)^pair) \/ ((S /\ R)^pair))) \ {0} ;
triple(X, Y, Z) := (((X^1) ! (Y^1) ! (Z^1)) /\ 3) \/ ((((X /\ Y) * Z) \/ ((X /\ Z) * Y)) \/ (((Y /\ Z) * X) \/ (((X /\ Y) /\ Z)^1))) ;
case111(R, S) := (R /\ 1) /\ (S /\ 1) ;
case122(R, S) := (Un(((R * S) /\ (1 * 2)) /\ {&})) /\ 2 ;
case221(R, S) := (Un((R /\ 2) /\ (S /\ 2)))^1 ;
xdel(X, u, w) := X /\ ((V \ {u, w}) * (V \ {u, w})) ;
wedge1(R, S, u, w) := ( (((((xdel(R, u, w)) \ {u}) /\ 3) * (((xdel(S, u, w)) \ {w}) /\ 3)) /\ {&}) ! ((V \ {u, w})^1) ) /\ 3 ;
wedge2(R, S, u, w) := ( ((((xdel(R, u, w)) \ {u}) /\ 3)^1) ! (((((xdel(S, u, w)) \ {w}) /\ 3) * (V \ {u, w})) /\ {&}) ) /\ 3 ;
wedge3(R, S, u, w) := ( ((((xdel(S, u, w)) \ {w}) /\ 3)^1) ! (((((xdel(R, u, w)) \ {u}) /\ 3) * (V \ {u, w})) /\ {&}) ) /\ 3 ;
wedge(R, S, u, w, C1) := (((wedge1(R, S, u, w)) /\ (wedge2(R, S, u, w))) /\ (wedge3(R, S, u, w))) /\ C1 ;
case222uw(R, S, u, w, C1) := (Un(wedge(R, S, u, w, C1))) /\ 2 ;
)PRELUDE";

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

void DefinitionTable::add(const std::string& head_name,
                          std::vector<std::string> params, TermPtr body,
                          int variant_index) {
  // Bodies must be closed over their parameters.
  std::vector<std::string> vars;
  collect_term_vars(body, vars);
  for (const auto& v : vars)
    if (std::find(params.begin(), params.end(), v) == params.end())
      fail(ErrorCode::Schema, "definition " + head_name +
                                  " has unbound name '" + v +
                                  "' (define operators before use)");

  auto it = defs_.find(head_name);
  if (variant_index == 0) {
    if (it != defs_.end())
      fail(ErrorCode::Schema, "duplicate definition " + head_name);
    Definition d;
    d.name = head_name;
    d.params = std::move(params);
    d.variants.push_back(std::move(body));
    defs_.emplace(head_name, std::move(d));
  } else {
    if (it == defs_.end())
      fail(ErrorCode::Schema, "variant line before definition " + head_name);
    if (it->second.params != params)
      fail(ErrorCode::Schema, "variant of " + head_name +
                                  " changes the parameter list");
    if (static_cast<size_t>(variant_index) != it->second.variants.size())
      fail(ErrorCode::Schema, "variant index out of order for " + head_name);
    it->second.variants.push_back(std::move(body));
  }
  known_.insert(head_name);
  size_t dot = head_name.find('.');
  if (dot != std::string::npos) known_.insert(head_name.substr(dot + 1));
}

DefinitionTable DefinitionTable::load_text(const std::string& text) {
  DefinitionTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    int variant = 0;
    if (line.rfind("variant", 0) == 0) {
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        fail(ErrorCode::Schema, "bad variant line " + std::to_string(lineno));
      variant = std::stoi(trim(line.substr(7, colon - 7)));
      line = trim(line.substr(colon + 1));
    }
    size_t assign = line.find(":=");
    if (assign == std::string::npos)
      fail(ErrorCode::Schema,
           "missing ':=' on line " + std::to_string(lineno));
    std::string head = trim(line.substr(0, assign));
    std::string body_text = trim(line.substr(assign + 2));
    if (!body_text.empty() && body_text.back() == ';')
      body_text = trim(body_text.substr(0, body_text.size() - 1));

    std::string name = head;
    std::vector<std::string> params;
    size_t paren = head.find('(');
    if (paren != std::string::npos) {
      if (head.back() != ')')
        fail(ErrorCode::Schema,
             "bad definition head on line " + std::to_string(lineno));
      name = trim(head.substr(0, paren));
      std::string plist = head.substr(paren + 1, head.size() - paren - 2);
      std::istringstream ps(plist);
      std::string p;
      while (std::getline(ps, p, ',')) {
        p = trim(p);
        if (!p.empty()) params.push_back(p);
      }
    }
    TermPtr body = parse_term(body_text, table.known_names());
    table.add(name, std::move(params), std::move(body), variant);
  }
  return table;
}

DefinitionTable DefinitionTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open prelude file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str());
}

const DefinitionTable& DefinitionTable::prelude() {
  static DefinitionTable table = [] {
    const char* override_path = std::getenv("STRATIFORGE_PRELUDE");
    if (override_path && *override_path) return load_file(override_path);
    return load_text(kPreludeText);
  }();
  return table;
}

const Definition* DefinitionTable::find_exact(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

const Definition* DefinitionTable::resolve(const std::string& name,
                                           char system) const {
  if (name.find('.') != std::string::npos) return find_exact(name);
  char sys = (system == 'A' || system == 'a') ? 'a' : 'b';
  if (const Definition* d = find_exact(std::string(1, sys) + "." + name))
    return d;
  return find_exact(name);
}

namespace {

struct Expander {
  const DefinitionTable& defs;
  char system;
  const std::map<std::string, int>& choices;
  std::unordered_map<const Term*, bool> has_named;
  int depth = 0;

  bool contains_named(const TermPtr& t) {
    auto it = has_named.find(t.get());
    if (it != has_named.end()) return it->second;
    bool r = t->op == TermOp::Named;
    if (!r)
      for (const auto& a : t->args)
        if (contains_named(a)) {
          r = true;
          break;
        }
    has_named.emplace(t.get(), r);
    return r;
  }

  TermPtr subst(const TermPtr& t,
                const std::map<std::string, TermPtr>& map) {
    if (t->op == TermOp::Var) {
      auto it = map.find(t->name);
      if (it == map.end())
        fail(ErrorCode::Internal, "stray parameter " + t->name);
      return it->second;
    }
    if (t->args.empty()) return t;
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    bool changed = false;
    for (const auto& a : t->args) {
      args.push_back(subst(a, map));
      changed = changed || args.back() != a;
    }
    if (!changed) return t;
    return Term::make(t->op, std::move(args), t->name);
  }

  TermPtr run(const TermPtr& t) {
    if (++depth > 4096)
      fail(ErrorCode::Internal, "expansion too deep (cyclic definitions?)");
    struct Pop {
      int& d;
      ~Pop() { --d; }
    } pop{depth};

    if (!contains_named(t)) return t;
    if (t->op != TermOp::Named) {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(run(a));
      return Term::make(t->op, std::move(args), t->name);
    }
    const Definition* d = defs.resolve(t->name, system);
    if (!d) fail(ErrorCode::UnknownOperator, "unknown operator " + t->name);
    int idx = 0;
    if (auto it = choices.find(d->name); it != choices.end())
      idx = it->second;
    else if (auto it2 = choices.find(t->name); it2 != choices.end())
      idx = it2->second;
    if (idx < 0 || static_cast<size_t>(idx) >= d->variants.size())
      fail(ErrorCode::UnresolvedVariant,
           "definition " + d->name + " has no variant " + std::to_string(idx));
    if (d->params.size() != t->args.size())
      fail(ErrorCode::Schema, "operator " + d->name + " expects " +
                                  std::to_string(d->params.size()) +
                                  " arguments, got " +
                                  std::to_string(t->args.size()));
    std::map<std::string, TermPtr> map;
    for (size_t i = 0; i < d->params.size(); ++i)
      map.emplace(d->params[i], run(t->args[i]));
    return run(subst(d->variants[idx], map));
  }
};

}  // namespace

TermPtr expand(const TermPtr& t, const DefinitionTable& defs, char system,
               const std::map<std::string, int>& choices) {
  Expander ex{defs, system, choices, {}, 0};
  return ex.run(t);
}

}  // namespace stf
