#include "parse.hpp"

#include <cctype>
#include <map>

#include "universe.hpp"  // Error / ErrorCode

namespace stf {

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->name != b->name ||
      a->args.size() != b->args.size())
    return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_equal(a->args[i], b->args[i])) return false;
  return true;
}

bool term_is_primitive(const TermPtr& t) {
  if (t->op == TermOp::Named) return false;
  for (const auto& a : t->args)
    if (!term_is_primitive(a)) return false;
  return true;
}

void collect_term_vars(const TermPtr& t, std::vector<std::string>& out) {
  if (t->op == TermOp::Var) {
    out.push_back(t->name);
    return;
  }
  for (const auto& a : t->args) collect_term_vars(a, out);
}

namespace {

void replace_all(std::string& s, const std::string& from,
                 const std::string& to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string normalize_term_text(std::string s) {
  replace_all(s, "{∩}", "{&}");     // {∩}
  replace_all(s, "{∈*}", "{e*}");   // {∈*}
  replace_all(s, "[∩¹]", "[&1]");
  replace_all(s, "[∩]", "[&]");
  replace_all(s, "[⊆]", "[c]");
  replace_all(s, "[⁻¹]", "[-1]");
  replace_all(s, "π₁", "pi1");  // π₁
  replace_all(s, "π₂", "pi2");
  replace_all(s, "′", "'");          // ′
  replace_all(s, "∪", "\\/");        // ∪
  replace_all(s, "∩", "/\\");        // ∩
  replace_all(s, "∖", "\\");         // ∖
  replace_all(s, "×", "><");         // ×
  replace_all(s, "∅", "{}");         // ∅
  return s;
}

enum class Tok {
  Ident,     // also numerals, "2*", "[...]" constants
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Colon,
  Bang,
  Star,
  Cart,
  Pipe,
  Diff,
  CapOp,
  CupOp,
  Quote,
  Caret,     // text holds the suffix key: ^1 ^11 ^pair ^k ^-1 ^!
  OneStar,
  CapASet,
  CapBSet,
  CapSet,
  EpsStar,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  std::string src;
  size_t i = 0;
  std::vector<Token> toks;

  [[noreturn]] void err(size_t pos, const std::string& msg) {
    fail(ErrorCode::Syntax,
         msg + " at position " + std::to_string(pos) + " in \"" + src + "\"");
  }

  bool starts(const char* s) const {
    return src.compare(i, std::string(s).size(), s) == 0;
  }

  void push(Tok k, std::string text, size_t pos) {
    toks.push_back(Token{k, std::move(text), pos});
  }

  void run() {
    while (i < src.size()) {
      char c = src[i];
      size_t pos = i;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (starts("{&a}")) { push(Tok::CapASet, "{&a}", pos); i += 4; continue; }
      if (starts("{&b}")) { push(Tok::CapBSet, "{&b}", pos); i += 4; continue; }
      if (starts("{&}")) { push(Tok::CapSet, "{&}", pos); i += 3; continue; }
      if (starts("{e*}")) { push(Tok::EpsStar, "{e*}", pos); i += 4; continue; }
      switch (c) {
        case '(': push(Tok::LParen, "(", pos); ++i; continue;
        case ')': push(Tok::RParen, ")", pos); ++i; continue;
        case '{': push(Tok::LBrace, "{", pos); ++i; continue;
        case '}': push(Tok::RBrace, "}", pos); ++i; continue;
        case ',': push(Tok::Comma, ",", pos); ++i; continue;
        case ':': push(Tok::Colon, ":", pos); ++i; continue;
        case '!': push(Tok::Bang, "!", pos); ++i; continue;
        case '*': push(Tok::Star, "*", pos); ++i; continue;
        case '|': push(Tok::Pipe, "|", pos); ++i; continue;
        case '\'': push(Tok::Quote, "'", pos); ++i; continue;
        default: break;
      }
      if (c == '>') {
        if (starts("><")) { push(Tok::Cart, "><", pos); i += 2; continue; }
        err(pos, "expected '><'");
      }
      if (c == '\\') {
        if (starts("\\/")) { push(Tok::CupOp, "\\/", pos); i += 2; continue; }
        push(Tok::Diff, "\\", pos);
        ++i;
        continue;
      }
      if (c == '/') {
        if (starts("/\\")) { push(Tok::CapOp, "/\\", pos); i += 2; continue; }
        err(pos, "expected '/\\'");
      }
      if (c == '^') {
        static const char* suffixes[] = {"^11", "^1", "^pair", "^k", "^-1",
                                         "^!"};
        bool found = false;
        for (const char* s : suffixes) {
          if (starts(s)) {
            push(Tok::Caret, s, pos);
            i += std::string(s).size();
            found = true;
            break;
          }
        }
        if (!found) err(pos, "unknown power suffix");
        continue;
      }
      if (c == '[') {
        size_t close = src.find(']', i);
        if (close == std::string::npos) err(pos, "unterminated '['");
        std::string name = src.substr(i, close - i + 1);
        if (name != "[=]" && name != "[c]" && name != "[&]" &&
            name != "[&1]" && name != "[-1]")
          err(pos, "unknown bracket constant " + name);
        push(Tok::Ident, name, pos);
        i = close + 1;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (c > '8') err(pos, "numerals range over 0..8");
        if (i + 1 < src.size() && src[i + 1] == '*') {
          if (c == '1')
            push(Tok::OneStar, "1*", pos);
          else
            push(Tok::Ident, std::string(1, c) + "*", pos);
          i += 2;
          continue;
        }
        push(Tok::Ident, std::string(1, c), pos);
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) ||
                src[j] == '_'))
          ++j;
        std::string name = src.substr(i, j - i);
        i = j;
        if ((name == "a" || name == "b") && i < src.size() && src[i] == '.') {
          ++i;
          if (i < src.size() &&
              std::isdigit(static_cast<unsigned char>(src[i]))) {
            char d = src[i++];
            std::string q = name + "." + std::string(1, d);
            if (i < src.size() && src[i] == '*') {
              q += "*";
              ++i;
            }
            push(Tok::Ident, q, pos);
            continue;
          }
          size_t k = i;
          while (k < src.size() &&
                 (std::isalnum(static_cast<unsigned char>(src[k])) ||
                  src[k] == '_'))
            ++k;
          if (k == i) err(pos, "qualified name missing suffix");
          push(Tok::Ident, name + "." + src.substr(i, k - i), pos);
          i = k;
          continue;
        }
        push(Tok::Ident, name, pos);
        continue;
      }
      err(pos, std::string("unexpected character '") + c + "'");
    }
    push(Tok::End, "", src.size());
  }
};

struct TermParser {
  const std::vector<Token>& toks;
  const std::set<std::string>& known;
  const std::string& src;
  size_t i = 0;

  [[noreturn]] void err(const std::string& msg) {
    fail(ErrorCode::Syntax, msg + " at position " +
                                std::to_string(toks[i].pos) + " in \"" + src +
                                "\"");
  }

  const Token& cur() const { return toks[i]; }
  bool at(Tok k) const { return toks[i].kind == k; }
  Token eat(Tok k, const char* what) {
    if (!at(k)) err(std::string("expected ") + what);
    return toks[i++];
  }

  static bool is_infix(Tok k) {
    switch (k) {
      case Tok::Colon:
      case Tok::Bang:
      case Tok::Star:
      case Tok::Cart:
      case Tok::Pipe:
      case Tok::Diff:
      case Tok::CapOp:
      case Tok::CupOp:
        return true;
      default:
        return false;
    }
  }

  TermPtr combine(Tok op, TermPtr l, TermPtr r) {
    switch (op) {
      case Tok::Colon: return Term::make(TermOp::Comp, {l, r});
      case Tok::Bang: return Term::make(TermOp::Preprod, {l, r});
      case Tok::Star: return Term::named("uprod", {l, r});
      case Tok::Cart: return Term::named("cart", {l, r});
      case Tok::Pipe: return Term::named("relprod", {l, r});
      case Tok::Diff: return Term::named("diff", {l, r});
      case Tok::CapOp: return Term::named("icap", {l, r});
      case Tok::CupOp: return Term::named("cup", {l, r});
      default: err("internal: bad infix");
    }
  }

  TermPtr parse_expr() {
    TermPtr left = parse_postfix();
    if (!is_infix(cur().kind)) return left;
    Tok op = cur().kind;
    while (is_infix(cur().kind)) {
      if (cur().kind != op)
        err("mixed infix operators need parentheses");
      ++i;
      TermPtr right = parse_postfix();
      left = combine(op, left, right);
    }
    return left;
  }

  TermPtr parse_postfix() {
    TermPtr t = parse_atom();
    while (true) {
      if (at(Tok::Quote)) {
        ++i;
        t = Term::named("complement", {t});
      } else if (at(Tok::Caret)) {
        t = Term::named(cur().text, {t});
        ++i;
      } else {
        return t;
      }
    }
  }

  TermPtr parse_atom() {
    switch (cur().kind) {
      case Tok::LParen: {
        ++i;
        TermPtr t = parse_expr();
        eat(Tok::RParen, "')'");
        return t;
      }
      case Tok::LBrace: {
        ++i;
        if (at(Tok::RBrace)) {
          ++i;
          return Term::make(TermOp::Empty);
        }
        TermPtr a = parse_expr();
        if (at(Tok::Comma)) {
          ++i;
          TermPtr b = parse_expr();
          eat(Tok::RBrace, "'}'");
          return Term::named("pair", {a, b});
        }
        eat(Tok::RBrace, "'}'");
        return Term::named("singleton", {a});
      }
      case Tok::CapASet: ++i; return Term::make(TermOp::CapA);
      case Tok::CapBSet: ++i; return Term::make(TermOp::CapB);
      case Tok::CapSet: ++i; return Term::named("capset");
      case Tok::EpsStar: ++i; return Term::named("epsstar");
      case Tok::OneStar: ++i; return Term::make(TermOp::Frege1Star);
      case Tok::Ident: {
        std::string name = cur().text;
        ++i;
        if (name == "V") return Term::make(TermOp::V);
        if (at(Tok::LParen)) {
          ++i;
          std::vector<TermPtr> args;
          if (!at(Tok::RParen)) {
            args.push_back(parse_expr());
            while (at(Tok::Comma)) {
              ++i;
              args.push_back(parse_expr());
            }
          }
          eat(Tok::RParen, "')'");
          if (name == "sheffer" && args.size() == 2)
            return Term::make(TermOp::Sheffer, std::move(args));
          if (name == "sing" && args.size() == 1)
            return Term::make(TermOp::Sing, std::move(args));
          if (name == "pairset" && args.size() == 2)
            return Term::make(TermOp::PairSet, std::move(args));
          if (name == "compl" && args.size() == 1)
            return Term::make(TermOp::Compl, std::move(args));
          if (name == "Un" && args.size() == 1)
            return Term::make(TermOp::BigUnion, std::move(args));
          return Term::named(name, std::move(args));
        }
        bool always_named = std::isdigit(static_cast<unsigned char>(name[0])) ||
                            name[0] == '[' || name.find('.') != std::string::npos;
        if (always_named || known.count(name)) return Term::named(name);
        return Term::var(name);
      }
      default:
        err("expected a term");
    }
  }
};

}  // namespace

TermPtr parse_term(const std::string& text,
                   const std::set<std::string>& known_names) {
  Lexer lx;
  lx.src = normalize_term_text(text);
  lx.run();
  TermParser p{lx.toks, known_names, lx.src};
  TermPtr t = p.parse_expr();
  if (!p.at(Tok::End)) p.err("trailing input");
  return t;
}

namespace {

// Printing. Operands that are themselves infix applications are always
// parenthesized, except a left spine of the same operator.
enum class Shape { Atomic, Postfix, Infix };

Shape shape_of(const TermPtr& t) {
  switch (t->op) {
    case TermOp::Comp:
    case TermOp::Preprod:
      return Shape::Infix;
    case TermOp::Named: {
      const std::string& n = t->name;
      if (n == "uprod" || n == "cart" || n == "relprod" || n == "diff" ||
          n == "icap" || n == "cup")
        return Shape::Infix;
      if (n == "complement" || (!n.empty() && n[0] == '^'))
        return Shape::Postfix;
      return Shape::Atomic;  // call form, braces, bare names
    }
    default:
      return Shape::Atomic;
  }
}

const char* infix_symbol(const TermPtr& t) {
  if (t->op == TermOp::Comp) return ":";
  if (t->op == TermOp::Preprod) return "!";
  const std::string& n = t->name;
  if (n == "uprod") return "*";
  if (n == "cart") return "><";
  if (n == "relprod") return "|";
  if (n == "diff") return "\\";
  if (n == "icap") return "/\\";
  if (n == "cup") return "\\/";
  return nullptr;
}

bool same_infix(const TermPtr& a, const TermPtr& b) {
  if (a->op != b->op) return false;
  if (a->op == TermOp::Named) return a->name == b->name;
  return true;
}

std::string print_rec(const TermPtr& t);

std::string print_operand(const TermPtr& t) {
  if (shape_of(t) == Shape::Infix) return "(" + print_rec(t) + ")";
  return print_rec(t);
}

std::string print_rec(const TermPtr& t) {
  switch (t->op) {
    case TermOp::Var: return t->name;
    case TermOp::V: return "V";
    case TermOp::Empty: return "{}";
    case TermOp::CapA: return "{&a}";
    case TermOp::CapB: return "{&b}";
    case TermOp::Frege1Star: return "1*";
    case TermOp::Sheffer:
      return "sheffer(" + print_rec(t->args[0]) + ", " +
             print_rec(t->args[1]) + ")";
    case TermOp::Sing: return "sing(" + print_rec(t->args[0]) + ")";
    case TermOp::PairSet:
      return "pairset(" + print_rec(t->args[0]) + ", " +
             print_rec(t->args[1]) + ")";
    case TermOp::Compl: return "compl(" + print_rec(t->args[0]) + ")";
    case TermOp::BigUnion: return "Un(" + print_rec(t->args[0]) + ")";
    case TermOp::Comp:
    case TermOp::Preprod:
      break;
    case TermOp::Named: {
      const std::string& n = t->name;
      if (infix_symbol(t)) break;
      if (n == "complement") return print_operand(t->args[0]) + "'";
      if (!n.empty() && n[0] == '^') return print_operand(t->args[0]) + n;
      if (n == "singleton") return "{" + print_rec(t->args[0]) + "}";
      if (n == "pair")
        return "{" + print_rec(t->args[0]) + ", " + print_rec(t->args[1]) +
               "}";
      if (n == "capset") return "{&}";
      if (n == "epsstar") return "{e*}";
      if (t->args.empty()) return n;
      std::string out = n + "(";
      for (size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += ", ";
        out += print_rec(t->args[i]);
      }
      return out + ")";
    }
  }
  // infix: flatten the left spine of the same operator
  const char* sym = infix_symbol(t);
  std::string left;
  if (same_infix(t->args[0], t))
    left = print_rec(t->args[0]);
  else
    left = print_operand(t->args[0]);
  return left + " " + sym + " " + print_operand(t->args[1]);
}

}  // namespace

std::string print_term(const TermPtr& t) { return print_rec(t); }

// ---------------------------------------------------------------------------
// Formulas

namespace {

std::string normalize_formula_text(std::string s) {
  replace_all(s, "∀", " forall ");
  replace_all(s, "∃", " exists ");
  replace_all(s, "¬", " ~");
  replace_all(s, "∧", " & ");
  replace_all(s, "∨", " | ");
  replace_all(s, "↔", " <-> ");
  replace_all(s, "⇔", " <-> ");
  replace_all(s, "→", " -> ");
  replace_all(s, "⇒", " -> ");
  replace_all(s, "∈", " in ");
  replace_all(s, "∉", " notin ");
  return s;
}

struct FTok {
  enum Kind { Ident, LParen, RParen, Eq, And, Or, Not, Implies, Iff, End };
  Kind kind;
  std::string text;
  size_t pos;
};

struct FormulaParser {
  std::string src;
  std::vector<FTok> toks;
  size_t i = 0;

  [[noreturn]] void err(size_t pos, const std::string& msg) {
    fail(ErrorCode::Syntax,
         msg + " at position " + std::to_string(pos) + " in \"" + src + "\"");
  }

  void lex() {
    size_t p = 0;
    while (p < src.size()) {
      char c = src[p];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++p;
        continue;
      }
      size_t pos = p;
      if (c == '(') { toks.push_back({FTok::LParen, "(", pos}); ++p; continue; }
      if (c == ')') { toks.push_back({FTok::RParen, ")", pos}); ++p; continue; }
      if (c == '=') { toks.push_back({FTok::Eq, "=", pos}); ++p; continue; }
      if (c == '&') { toks.push_back({FTok::And, "&", pos}); ++p; continue; }
      if (c == '|') { toks.push_back({FTok::Or, "|", pos}); ++p; continue; }
      if (c == '~') { toks.push_back({FTok::Not, "~", pos}); ++p; continue; }
      if (src.compare(p, 3, "<->") == 0) {
        toks.push_back({FTok::Iff, "<->", pos});
        p += 3;
        continue;
      }
      if (src.compare(p, 2, "->") == 0) {
        toks.push_back({FTok::Implies, "->", pos});
        p += 2;
        continue;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = p;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) ||
                src[j] == '_'))
          ++j;
        std::string w = src.substr(p, j - p);
        p = j;
        if (w == "and") toks.push_back({FTok::And, w, pos});
        else if (w == "or") toks.push_back({FTok::Or, w, pos});
        else if (w == "not") toks.push_back({FTok::Not, w, pos});
        else toks.push_back({FTok::Ident, w, pos});
        continue;
      }
      err(pos, std::string("unexpected character '") + c + "'");
    }
    toks.push_back({FTok::End, "", src.size()});
  }

  const FTok& cur() const { return toks[i]; }
  bool at(FTok::Kind k) const { return toks[i].kind == k; }
  bool at_word(const char* w) const {
    return toks[i].kind == FTok::Ident && toks[i].text == w;
  }

  FormulaPtr parse_iff() {
    FormulaPtr l = parse_implies();
    while (at(FTok::Iff)) {
      ++i;
      FormulaPtr r = parse_implies();
      l = Formula::make(FormulaOp::Iff, {l, r});
    }
    return l;
  }
  FormulaPtr parse_implies() {
    FormulaPtr l = parse_or();
    if (at(FTok::Implies)) {
      ++i;
      FormulaPtr r = parse_implies();  // right-associative
      return Formula::make(FormulaOp::Implies, {l, r});
    }
    return l;
  }
  FormulaPtr parse_or() {
    FormulaPtr l = parse_and();
    while (at(FTok::Or)) {
      ++i;
      l = Formula::make(FormulaOp::Or, {l, parse_and()});
    }
    return l;
  }
  FormulaPtr parse_and() {
    FormulaPtr l = parse_unary();
    while (at(FTok::And)) {
      ++i;
      l = Formula::make(FormulaOp::And, {l, parse_unary()});
    }
    return l;
  }

  FormulaPtr parse_unary() {
    if (at(FTok::Not)) {
      ++i;
      return Formula::make(FormulaOp::Not, {parse_unary()});
    }
    if (at_word("forall") || at_word("exists")) {
      bool uni = cur().text == "forall";
      ++i;
      if (!at(FTok::Ident)) err(cur().pos, "expected quantified variable");
      std::string v = cur().text;
      ++i;
      if (at_word("in")) {  // bounded quantifier sugar
        ++i;
        if (!at(FTok::Ident)) err(cur().pos, "expected bound name");
        std::string bound = cur().text;
        ++i;
        FormulaPtr body = parse_unary();
        FormulaPtr memb = Formula::mem(v, bound);
        FormulaPtr inner =
            uni ? Formula::make(FormulaOp::Implies, {memb, body})
                : Formula::make(FormulaOp::And, {memb, body});
        return Formula::make(uni ? FormulaOp::Forall : FormulaOp::Exists,
                             {inner}, v);
      }
      FormulaPtr body = parse_unary();
      return Formula::make(uni ? FormulaOp::Forall : FormulaOp::Exists, {body},
                           v);
    }
    if (at(FTok::LParen)) {
      ++i;
      FormulaPtr f = parse_iff();
      if (!at(FTok::RParen)) err(cur().pos, "expected ')'");
      ++i;
      return f;
    }
    if (at(FTok::Ident)) {
      std::string x = cur().text;
      size_t pos = cur().pos;
      ++i;
      if (at_word("in")) {
        ++i;
        if (!at(FTok::Ident)) err(cur().pos, "expected name after 'in'");
        std::string y = cur().text;
        ++i;
        return Formula::mem(x, y);
      }
      if (at_word("notin")) {
        ++i;
        if (!at(FTok::Ident)) err(cur().pos, "expected name after 'notin'");
        std::string y = cur().text;
        ++i;
        return Formula::make(FormulaOp::Not, {Formula::mem(x, y)});
      }
      if (at(FTok::Eq)) {
        ++i;
        if (!at(FTok::Ident)) err(cur().pos, "expected name after '='");
        std::string y = cur().text;
        ++i;
        return Formula::eq(x, y);
      }
      err(pos, "expected 'in' or '=' after name");
    }
    err(cur().pos, "expected a formula");
  }
};

int formula_prec(FormulaOp op) {
  switch (op) {
    case FormulaOp::Iff: return 0;
    case FormulaOp::Implies: return 1;
    case FormulaOp::Or: return 2;
    case FormulaOp::And: return 3;
    default: return 4;
  }
}

std::string print_f(const FormulaPtr& f, int parent_prec) {
  int prec = formula_prec(f->op);
  std::string out;
  switch (f->op) {
    case FormulaOp::Mem: out = f->lhs + " in " + f->rhs; break;
    case FormulaOp::Eq: out = f->lhs + " = " + f->rhs; break;
    case FormulaOp::Not: out = "~" + print_f(f->args[0], 4); break;
    case FormulaOp::And:
      out = print_f(f->args[0], 3) + " & " + print_f(f->args[1], 4);
      break;
    case FormulaOp::Or:
      out = print_f(f->args[0], 2) + " | " + print_f(f->args[1], 3);
      break;
    case FormulaOp::Implies:
      out = print_f(f->args[0], 2) + " -> " + print_f(f->args[1], 1);
      break;
    case FormulaOp::Iff:
      out = print_f(f->args[0], 1) + " <-> " + print_f(f->args[1], 1);
      break;
    case FormulaOp::Forall:
      out = "forall " + f->lhs + " (" + print_f(f->args[0], 0) + ")";
      break;
    case FormulaOp::Exists:
      out = "exists " + f->lhs + " (" + print_f(f->args[0], 0) + ")";
      break;
  }
  if (prec < parent_prec && f->op != FormulaOp::Mem && f->op != FormulaOp::Eq &&
      f->op != FormulaOp::Not && f->op != FormulaOp::Forall &&
      f->op != FormulaOp::Exists)
    return "(" + out + ")";
  return out;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  FormulaParser p;
  p.src = normalize_formula_text(text);
  p.lex();
  FormulaPtr f = p.parse_iff();
  if (!p.at(FTok::End)) p.err(p.cur().pos, "trailing input");
  return f;
}

std::string print_formula(const FormulaPtr& f) { return print_f(f, 0); }

}  // namespace stf
