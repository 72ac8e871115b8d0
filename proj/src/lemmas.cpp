#include "lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "defs.hpp"
#include "oracle.hpp"
#include "parse.hpp"

namespace stf {

using njson = nlohmann::ordered_json;

std::string FrameSpec::label() const {
  return "U(" + std::to_string(atoms) + "," + std::to_string(depth) + ",h" +
         std::to_string(headroom) + ")";
}

std::vector<FrameSpec> parse_frame_specs(const std::string& text) {
  std::vector<FrameSpec> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    if (part.empty()) continue;
    FrameSpec fs;
    unsigned a = 0, d = 0, h = 0;
    int n = std::sscanf(part.c_str(), "%u,%u,%u", &a, &d, &h);
    if (n < 2) fail(ErrorCode::Schema, "bad frame spec: " + part);
    fs.atoms = a;
    fs.depth = d;
    fs.headroom = n >= 3 ? h : 0;
    out.push_back(fs);
  }
  if (out.empty()) fail(ErrorCode::Schema, "empty frame spec");
  return out;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Refuted: return "refuted";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Oracle expressions

struct OracleExpr {
  std::string kind;                    // "env", "int", a semantic kind, or
                                       // "comprehend"
  std::string name;                    // env name
  int64_t number = 0;                  // int literal
  std::vector<OracleExprPtr> args;
  FormulaPtr formula;                  // comprehend
  std::string var;                     // comprehend
};

namespace {

struct KindInfo {
  int arity;
  bool int_args;  // all args are integer literals
};

const std::map<std::string, KindInfo>& kind_table() {
  static const std::map<std::string, KindInfo> table = {
      {"w", {0, false}},          {"empty", {0, false}},
      {"complement", {1, false}}, {"union", {2, false}},
      {"intersect", {2, false}},  {"diff", {2, false}},
      {"frege", {1, true}},       {"zero", {1, true}},
      {"pairs", {0, false}},      {"powerset", {1, false}},
      {"singletons", {1, false}}, {"sing_of", {1, false}},
      {"pair_of", {2, false}},    {"uprod", {2, false}},
      {"cartesian", {2, false}},  {"cap_pairs", {0, false}},
      {"cap_general", {0, false}}, {"cap1", {0, false}},
      {"kcap", {0, false}},       {"kcap1", {0, false}},
      {"diagonal", {0, false}},   {"inclusion", {0, false}},
      {"eps_star", {0, false}},   {"l_set", {0, false}},
      {"proj1", {0, false}},      {"proj2", {0, false}},
      {"inv_rel", {0, false}},    {"domain", {1, false}},
      {"converse", {1, false}},   {"relprod", {2, false}},
      {"kimage", {1, false}},     {"simage", {1, false}},
      {"preclosure", {2, false}}, {"comp", {2, false}},
      {"comp_case1", {2, false}}, {"comp_case2", {2, false}},
      {"comp_case3", {2, false}}, {"comp_case4", {2, false}},
      {"comp_cases", {2, false}}, {"case4x", {4, false}},
      {"xdel", {3, false}},       {"wedge_target", {4, false}},
      {"triple_prod", {3, false}},
      {"seg_r1", {2, false}},     {"seg_r2", {2, false}},
      {"seg_r3", {2, false}},     {"seg_s1", {2, false}},
      {"seg_s2", {2, false}},     {"seg_s3", {2, false}},
      {"stage_union", {2, false}},
  };
  return table;
}

struct OracleParser {
  const std::string& src;
  size_t i = 0;

  [[noreturn]] void err(const std::string& msg) {
    fail(ErrorCode::Schema, msg + " in oracle expression \"" + src + "\"");
  }
  void skip() {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i])))
      ++i;
  }
  OracleExprPtr parse() {
    skip();
    if (i >= src.size()) err("empty expression");
    if (std::isdigit(static_cast<unsigned char>(src[i]))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      auto e = std::make_shared<OracleExpr>();
      e->kind = "int";
      e->number = std::stoll(src.substr(i, j - i));
      i = j;
      return e;
    }
    size_t j = i;
    while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                              src[j] == '_'))
      ++j;
    if (j == i) err("expected a name");
    std::string name = src.substr(i, j - i);
    i = j;
    skip();
    if (name == "env") {
      if (i >= src.size() || src[i] != ':') err("expected env:NAME");
      ++i;
      size_t k = i;
      while (k < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[k])) ||
              src[k] == '_'))
        ++k;
      if (k == i) err("expected env:NAME");
      auto e = std::make_shared<OracleExpr>();
      e->kind = "env";
      e->name = src.substr(i, k - i);
      i = k;
      return e;
    }
    auto it = kind_table().find(name);
    if (it == kind_table().end()) err("unknown oracle kind '" + name + "'");
    auto e = std::make_shared<OracleExpr>();
    e->kind = name;
    if (i >= src.size() || src[i] != '(') err("expected '(' after " + name);
    ++i;
    skip();
    if (i < src.size() && src[i] == ')') {
      ++i;
    } else {
      while (true) {
        e->args.push_back(parse());
        skip();
        if (i < src.size() && src[i] == ',') {
          ++i;
          continue;
        }
        if (i < src.size() && src[i] == ')') {
          ++i;
          break;
        }
        err("expected ',' or ')'");
      }
    }
    if (static_cast<int>(e->args.size()) != it->second.arity)
      err(name + " expects " + std::to_string(it->second.arity) + " arguments");
    if (it->second.int_args)
      for (const auto& a : e->args)
        if (a->kind != "int") err(name + " expects integer arguments");
    return e;
  }
};

int64_t int_arg(const OracleExprPtr& e) { return e->number; }

}  // namespace

OracleExprPtr parse_oracle_expr(const std::string& text) {
  OracleParser p{text, 0};
  auto e = p.parse();
  p.skip();
  if (p.i != text.size()) p.err("trailing input");
  return e;
}

OracleExprPtr make_comprehend_oracle(const std::string& var,
                                     const std::string& formula) {
  auto e = std::make_shared<OracleExpr>();
  e->kind = "comprehend";
  e->var = var;
  e->formula = parse_formula(formula);
  return e;
}

Class eval_oracle_expr(const OracleExprPtr& e, const Frame& f,
                       const Env& env) {
  auto arg = [&](size_t i) { return eval_oracle_expr(e->args[i], f, env); };
  const std::string& k = e->kind;
  if (k == "env") {
    auto it = env.find(e->name);
    if (it == env.end())
      fail(ErrorCode::UnboundVar, "oracle references unbound " + e->name);
    return it->second;
  }
  if (k == "comprehend") return comprehend(f, e->formula, e->var, env);
  if (k == "int") fail(ErrorCode::Schema, "integer used as a class");
  if (k == "w") return f.w;
  if (k == "empty") return Class{};
  if (k == "complement") return oracle::complement_of(f, arg(0));
  if (k == "union") return class_union(arg(0), arg(1));
  if (k == "intersect") return class_intersect(arg(0), arg(1));
  if (k == "diff") return class_difference(arg(0), arg(1));
  if (k == "frege")
    return oracle::frege(f, static_cast<uint32_t>(int_arg(e->args[0])));
  if (k == "zero") return oracle::zero(f, int_arg(e->args[0]) != 0);
  if (k == "pairs") return oracle::pairs_all(f);
  if (k == "powerset") return oracle::powerset(f, arg(0));
  if (k == "singletons") return oracle::singletons_of(f, arg(0));
  if (k == "sing_of") return oracle::sing_of(f, arg(0));
  if (k == "pair_of") return oracle::pair_of(f, arg(0), arg(1));
  if (k == "uprod") return oracle::unordered_product(f, arg(0), arg(1));
  if (k == "cartesian") return oracle::cartesian(f, arg(0), arg(1));
  if (k == "cap_pairs") return oracle::cap_pairs(f);
  if (k == "cap_general") return oracle::cap_general(f);
  if (k == "cap1") return oracle::cap1(f);
  if (k == "kcap") return oracle::kcap(f);
  if (k == "kcap1") return oracle::kcap1(f);
  if (k == "diagonal") return oracle::diagonal(f);
  if (k == "inclusion") return oracle::inclusion(f);
  if (k == "eps_star") return oracle::eps_star(f);
  if (k == "l_set") return oracle::l_set(f);
  if (k == "proj1") return oracle::proj1(f);
  if (k == "proj2") return oracle::proj2(f);
  if (k == "inv_rel") return oracle::inv_rel(f);
  if (k == "domain") return oracle::domain(f, arg(0));
  if (k == "converse") return oracle::converse(f, arg(0));
  if (k == "relprod") return oracle::relprod(f, arg(0), arg(1));
  if (k == "kimage") return oracle::kuratowski_image(f, arg(0));
  if (k == "simage") return oracle::singleton_image(f, arg(0));
  if (k == "preclosure") return oracle::preproduct_closure(f, arg(0), arg(1));
  if (k == "comp") return oracle::comp_direct(f, arg(0), arg(1));
  if (k == "comp_case1") return oracle::comp_case1(f, arg(0), arg(1));
  if (k == "comp_case2") return oracle::comp_case2(f, arg(0), arg(1));
  if (k == "comp_case3") return oracle::comp_case3(f, arg(0), arg(1));
  if (k == "comp_case4") return oracle::comp_case4(f, arg(0), arg(1));
  if (k == "comp_cases") return oracle::comp_cases(f, arg(0), arg(1));
  if (k == "case4x")
    return oracle::comp_case4_excluding(f, arg(0), arg(1), arg(2), arg(3));
  if (k == "xdel") return oracle::xdel(f, arg(0), arg(1), arg(2));
  if (k == "wedge_target")
    return oracle::wedge_target(f, arg(0), arg(1), arg(2), arg(3));
  if (k == "triple_prod")
    return oracle::triple_product(f, arg(0), arg(1), arg(2));
  if (k.rfind("seg_", 0) == 0) {
    Segments seg = segment_relation(f, arg(0), arg(1));
    const std::vector<OrderedPair>* part = nullptr;
    if (k == "seg_r1") part = &seg.r1;
    else if (k == "seg_r2") part = &seg.r2;
    else if (k == "seg_r3") part = &seg.r3;
    else if (k == "seg_s1") part = &seg.s1;
    else if (k == "seg_s2") part = &seg.s2;
    else part = &seg.s3;
    return encode_krel(f, *part);
  }
  if (k == "stage_union") return oracle::stage_union(f, arg(0), arg(1));
  fail(ErrorCode::Schema, "unknown oracle kind " + k);
}

// ---------------------------------------------------------------------------
// Sampling

uint64_t SampleRng::next() {
  // splitmix64; fixed so reports are identical across platforms
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t sample_stream_seed(uint64_t seed, const std::string& lemma,
                            const std::string& frame) {
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
  };
  h ^= seed;
  h *= 0x100000001b3ull;
  mix(lemma);
  mix("|");
  mix(frame);
  return h;
}

Class sample_class(SampleRng& rng, const Class& slice) {
  Class out;
  for (ElemId e : slice)
    if (rng.next() & 1) out.ids.push_back(e);
  return out;
}

namespace {
Class first_n(const Class& c, size_t n) {
  Class out;
  for (ElemId e : c) {
    if (out.size() >= n) break;
    out.ids.push_back(e);
  }
  return out;
}
}  // namespace

Class sample_urel(SampleRng& rng, const Frame& f, const Class& support) {
  Class sup = first_n(support, 8);
  std::vector<ElemId> ids;
  for (size_t i = 0; i < sup.size(); ++i)
    for (size_t j = i; j < sup.size(); ++j) {
      auto p = f.u().find_pair(sup.ids[i], sup.ids[j]);
      if (p && (rng.next() & 1)) ids.push_back(*p);
    }
  return Class::from_unsorted(std::move(ids));
}

Class sample_krel(SampleRng& rng, const Frame& f, const Class& support) {
  Class sup = first_n(support, 8);
  std::vector<ElemId> ids;
  for (ElemId a : sup)
    for (ElemId b : sup)
      if (rng.next() & 1) {
        ElemId sa = reify(f, Class{{a}});
        ElemId ab = reify(f, Class::from_unsorted({a, b}));
        ids.push_back(reify(f, Class::from_unsorted({sa, ab})));
      }
  return Class::from_unsorted(std::move(ids));
}

Class binder_slice(const Frame& f, const FrameSpec& fs, bool ksupport) {
  uint32_t depth = fs.depth;
  uint32_t cut;
  if (ksupport) {
    uint32_t k = depth >= 2 ? depth - 2 : 0;
    uint32_t w = depth >= fs.headroom ? depth - fs.headroom : 0;
    cut = std::min(k, w);
    if (depth < 2) return Class{};
  } else {
    uint32_t avail = depth >= fs.headroom ? depth - fs.headroom : 0;
    if (avail == 0) return Class{};
    cut = avail - 1;
  }
  return class_intersect(f.u().rank_slice(cut), f.w);
}

// ---------------------------------------------------------------------------
// Verification

namespace {

Class subset_from_mask(const Class& slice, uint64_t mask) {
  Class out;
  for (size_t i = 0; i < slice.size(); ++i)
    if (mask & (uint64_t(1) << i)) out.ids.push_back(slice.ids[i]);
  return out;
}

void apply_adjust(const std::string& adjust, Env& env) {
  if (adjust.empty()) return;
  if (adjust.rfind("disjoint:", 0) == 0) {
    std::string rest = adjust.substr(9);
    size_t comma = rest.find(',');
    if (comma == std::string::npos)
      fail(ErrorCode::Schema, "bad adjust " + adjust);
    std::string a = rest.substr(0, comma), b = rest.substr(comma + 1);
    env[b] = class_difference(env.at(b), env.at(a));
    return;
  }
  fail(ErrorCode::Schema, "unknown adjust " + adjust);
}

}  // namespace

njson Counterexample::to_json(const Universe& u) const {
  njson j;
  njson envj;
  njson envids;
  for (const auto& [name, cls] : env) {
    envj[name] = u.brace(cls);
    envids[name] = cls.ids;
  }
  j["env"] = envj;
  j["env_ids"] = envids;
  j["term_value"] = lhs_value;
  j["oracle_value"] = rhs_value;
  j["only_in_term"] = only_lhs;
  j["only_in_oracle"] = only_rhs;
  return j;
}

std::vector<VariantOutcome> verify_lemma(const LemmaSpec& spec, const Frame& f,
                                         const FrameSpec& fs, uint64_t seed) {
  std::vector<VariantOutcome> out;
  const Class cls_slice = binder_slice(f, fs, spec.ksupport_binders);
  const Class k_slice = binder_slice(f, fs, true);

  // Sample plan: exhaustive over class binders when small, else random.
  bool all_classes = !spec.binders.empty();
  for (const auto& b : spec.binders)
    if (b.domain != LemmaBinder::Domain::Classes) all_classes = false;
  uint64_t per_binder = cls_slice.size() >= 63
                            ? UINT64_MAX
                            : (uint64_t(1) << cls_slice.size());
  bool exhaustive = false;
  uint64_t total_combos = 1;
  if (all_classes && per_binder != UINT64_MAX) {
    double combos = 1;
    for (size_t i = 0; i < spec.binders.size(); ++i) combos *= double(per_binder);
    if (combos <= 4096.0) {
      exhaustive = true;
      total_combos = 1;
      for (size_t i = 0; i < spec.binders.size(); ++i)
        total_combos *= per_binder;
    }
  }
  uint64_t n_samples =
      spec.binders.empty() ? 1
                           : (exhaustive ? total_combos
                                         : uint64_t(spec.samples));

  for (const auto& variant : spec.variants) {
    auto t0 = std::chrono::steady_clock::now();
    VariantOutcome vo;
    vo.lemma = spec.id;
    vo.frame = fs.label();
    vo.variant = variant.label;
    vo.expect = variant.expect;

    SampleRng rng(sample_stream_seed(seed, spec.id, fs.label()));
    uint64_t verified = 0, inconclusive = 0;
    std::string reason;
    bool refuted = false;

    for (uint64_t sample = 0; sample < n_samples && !refuted; ++sample) {
      Env env;
      bool sample_bad = false;
      for (size_t bi = 0; bi < spec.binders.size(); ++bi) {
        const auto& b = spec.binders[bi];
        switch (b.domain) {
          case LemmaBinder::Domain::Classes:
            if (exhaustive) {
              uint64_t idx = sample;
              for (size_t k = 0; k < bi; ++k) idx /= per_binder;
              env[b.name] = subset_from_mask(cls_slice, idx % per_binder);
            } else {
              env[b.name] = sample_class(rng, cls_slice);
            }
            break;
          case LemmaBinder::Domain::URels:
            env[b.name] = sample_urel(rng, f, cls_slice);
            break;
          case LemmaBinder::Domain::KRels:
            try {
              env[b.name] = sample_krel(rng, f, k_slice);
            } catch (const Error& e) {
              if (e.code != ErrorCode::Unrepresentable) throw;
              sample_bad = true;
              if (reason.empty()) reason = e.what();
            }
            break;
        }
      }
      if (sample_bad) {
        ++inconclusive;
        continue;
      }
      try {
        apply_adjust(variant.adjust, env);
        for (const auto& let : spec.lets)
          env[let.name] = eval_oracle_expr(let.value, f, env);

        Class lhs = variant.lhs_oracle
                        ? eval_oracle_expr(variant.lhs_oracle, f, env)
                        : eval_term(variant.expanded, f, env);
        const OracleExprPtr& orc =
            variant.oracle_override ? variant.oracle_override : spec.oracle;
        Class rhs = eval_oracle_expr(orc, f, env);
        if (lhs == rhs) {
          ++verified;
        } else {
          refuted = true;
          Counterexample cex;
          cex.env = env;
          cex.lhs_value = f.u().brace(lhs);
          cex.rhs_value = f.u().brace(rhs);
          cex.only_lhs = f.u().brace(class_difference(lhs, rhs));
          cex.only_rhs = f.u().brace(class_difference(rhs, lhs));
          vo.cex = std::move(cex);
        }
      } catch (const Error& e) {
        if (e.code == ErrorCode::Unrepresentable ||
            e.code == ErrorCode::SizeCap) {
          ++inconclusive;
          if (reason.empty()) reason = e.what();
        } else {
          throw;
        }
      }
    }

    vo.cases = verified;
    vo.inconclusive = inconclusive;
    if (refuted)
      vo.status = Status::Refuted;
    else if (verified > 0)
      vo.status = Status::Verified;
    else {
      vo.status = Status::Inconclusive;
      vo.reason = reason.empty() ? "no conclusive samples" : reason;
    }
    auto t1 = std::chrono::steady_clock::now();
    vo.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out.push_back(std::move(vo));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite loading

namespace {

Expect parse_expect(const std::string& s) {
  if (s == "verified") return Expect::Verified;
  if (s == "refuted") return Expect::Refuted;
  if (s == "any") return Expect::Any;
  fail(ErrorCode::Schema, "bad expect value " + s);
}

Status parse_status(const std::string& s) {
  if (s == "verified") return Status::Verified;
  if (s == "refuted") return Status::Refuted;
  if (s == "inconclusive") return Status::Inconclusive;
  fail(ErrorCode::Schema, "bad status value " + s);
}

OracleExprPtr parse_oracle_field(const njson& j) {
  if (j.is_string()) return parse_oracle_expr(j.get<std::string>());
  if (j.is_object() && j.contains("var") && j.contains("formula"))
    return make_comprehend_oracle(j.at("var").get<std::string>(),
                                  j.at("formula").get<std::string>());
  fail(ErrorCode::Schema, "oracle must be an expression string or "
                          "{var, formula}");
}

void check_fields(const njson& j, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      fail(ErrorCode::Schema,
           "unknown field '" + it.key() + "' in " + where);
}

}  // namespace

Suite load_suite(const std::string& json_text) {
  njson doc;
  try {
    doc = njson::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::Schema, std::string("suite is not valid JSON: ") +
                                e.what());
  }
  check_fields(doc, {"suite", "lemmas"}, "suite document");
  Suite suite;
  suite.name = doc.value("suite", "unnamed");
  if (!doc.contains("lemmas") || !doc.at("lemmas").is_array())
    fail(ErrorCode::Schema, "suite needs a 'lemmas' array");

  std::set<std::string> seen_ids;
  const auto& defs = DefinitionTable::prelude();
  for (const auto& lj : doc.at("lemmas")) {
    check_fields(lj,
                 {"id", "title", "statement", "system", "binders", "lets",
                  "variants", "oracle", "frames", "binder_slice", "samples"},
                 "lemma");
    LemmaSpec spec;
    spec.id = lj.at("id").get<std::string>();
    if (!seen_ids.insert(spec.id).second)
      fail(ErrorCode::Schema, "duplicate lemma id " + spec.id);
    spec.title = lj.value("title", "");
    spec.statement = lj.value("statement", "");
    std::string sys = lj.value("system", "A");
    spec.system = sys == "B" || sys == "b" ? 'B' : 'A';
    if (lj.contains("binders"))
      for (const auto& bj : lj.at("binders")) {
        check_fields(bj, {"name", "domain"}, "binder");
        LemmaBinder b;
        b.name = bj.at("name").get<std::string>();
        std::string d = bj.value("domain", "classes");
        if (d == "classes") b.domain = LemmaBinder::Domain::Classes;
        else if (d == "krels") b.domain = LemmaBinder::Domain::KRels;
        else if (d == "urels") b.domain = LemmaBinder::Domain::URels;
        else fail(ErrorCode::Schema, "unknown binder domain " + d);
        spec.binders.push_back(std::move(b));
      }
    if (lj.contains("lets"))
      for (const auto& tj : lj.at("lets")) {
        check_fields(tj, {"name", "value"}, "let");
        spec.lets.push_back(
            {tj.at("name").get<std::string>(),
             parse_oracle_field(tj.at("value"))});
      }
    if (!lj.contains("variants") || lj.at("variants").empty())
      fail(ErrorCode::Schema, "lemma " + spec.id + " has no variants");
    for (const auto& vj : lj.at("variants")) {
      check_fields(vj, {"label", "term", "lhs", "choices", "adjust", "oracle",
                        "expect"},
                   "variant");
      LemmaVariant v;
      v.label = vj.at("label").get<std::string>();
      if (vj.contains("term")) v.term_text = vj.at("term").get<std::string>();
      if (vj.contains("lhs")) v.lhs_oracle = parse_oracle_field(vj.at("lhs"));
      if (v.term_text.empty() == !v.lhs_oracle)
        fail(ErrorCode::Schema, "variant " + spec.id + "/" + v.label +
                                    " needs exactly one of term/lhs");
      if (vj.contains("choices"))
        for (auto it = vj.at("choices").begin(); it != vj.at("choices").end();
             ++it)
          v.choices[it.key()] = it.value().get<int>();
      v.adjust = vj.value("adjust", "");
      if (vj.contains("oracle"))
        v.oracle_override = parse_oracle_field(vj.at("oracle"));
      v.expect = parse_expect(vj.value("expect", "any"));
      if (!v.term_text.empty()) {
        TermPtr t = parse_term(v.term_text, defs.known_names());
        v.expanded = expand(t, defs, spec.system, v.choices);
      }
      spec.variants.push_back(std::move(v));
    }
    if (lj.contains("oracle")) spec.oracle = parse_oracle_field(lj.at("oracle"));
    for (const auto& v : spec.variants)
      if (!v.oracle_override && !spec.oracle)
        fail(ErrorCode::Schema, "lemma " + spec.id + " has no oracle");
    if (lj.contains("frames"))
      for (const auto& fj : lj.at("frames")) {
        FrameSpec fs;
        fs.atoms = fj.at(0).get<uint32_t>();
        fs.depth = fj.at(1).get<uint32_t>();
        fs.headroom = fj.size() > 2 ? fj.at(2).get<uint32_t>() : 0;
        spec.frames.push_back(fs);
      }
    if (spec.frames.empty())
      spec.frames = {{2, 2, 0}, {0, 4, 0}};
    spec.ksupport_binders = lj.value("binder_slice", "") == "ksupport";
    spec.samples = lj.value("samples", 100);
    suite.lemmas.push_back(std::move(spec));
  }
  return suite;
}

const Suite& default_suite() {
  static Suite suite = load_suite(kDefaultSuiteJson);
  return suite;
}

std::vector<std::tuple<std::string, std::string, std::string, Status>>
load_expected_json(const std::string& json_text) {
  njson doc;
  try {
    doc = njson::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::Schema,
         std::string("expected-verdicts file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array())
    fail(ErrorCode::Schema, "expected-verdicts file must be a JSON array");
  std::vector<std::tuple<std::string, std::string, std::string, Status>> out;
  for (const auto& ej : doc) {
    check_fields(ej, {"lemma", "frame", "variant", "status"},
                 "expected entry");
    out.emplace_back(ej.at("lemma").get<std::string>(), ej.value("frame", ""),
                     ej.value("variant", ""),
                     parse_status(ej.at("status").get<std::string>()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Runner

RunReport run_suite(const Suite& suite, const VerifyOptions& opts) {
  // Build every universe and frame up front, shared read-only afterwards.
  struct Task {
    const LemmaSpec* lemma;
    FrameSpec fs;
  };
  std::vector<Task> tasks;
  std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Universe>> universes;
  std::map<FrameSpec, std::unique_ptr<Frame>> frames;

  auto want = [&](const std::string& id) {
    if (opts.lemma_filter.empty()) return true;
    return std::find(opts.lemma_filter.begin(), opts.lemma_filter.end(), id) !=
           opts.lemma_filter.end();
  };

  for (const auto& lemma : suite.lemmas) {
    if (!want(lemma.id)) continue;
    const auto& fss =
        opts.frame_override.empty() ? lemma.frames : opts.frame_override;
    for (const auto& fs : fss) {
      auto key = std::make_pair(fs.atoms, fs.depth);
      if (!universes.count(key))
        universes.emplace(key, std::make_unique<Universe>(Universe::cumulative(
                                   fs.atoms, fs.depth)));
      if (!frames.count(fs))
        frames.emplace(fs, std::make_unique<Frame>(*universes.at(key),
                                                   fs.headroom));
      tasks.push_back({&lemma, fs});
    }
  }

  std::vector<std::vector<VariantOutcome>> results(tasks.size());
  std::atomic<size_t> next{0};
  int jobs = std::max(1, opts.jobs);
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      results[i] =
          verify_lemma(*t.lemma, *frames.at(t.fs), t.fs, opts.seed);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RunReport report;
  njson rows = njson::array();
  std::map<std::string, std::map<std::string, std::vector<Status>>> by_variant;
  std::vector<std::string> lemma_order;
  int unexpected = 0;
  njson unexpected_rows = njson::array();

  auto expected_status = [&](const VariantOutcome& vo)
      -> std::optional<Status> {
    for (const auto& [lem, frm, var, st] : opts.expected) {
      if (lem != vo.lemma) continue;
      if (!frm.empty() && frm != vo.frame) continue;
      if (!var.empty() && var != vo.variant) continue;
      return st;
    }
    return std::nullopt;
  };

  for (size_t i = 0; i < tasks.size(); ++i) {
    if (lemma_order.empty() || lemma_order.back() != tasks[i].lemma->id)
      if (std::find(lemma_order.begin(), lemma_order.end(),
                    tasks[i].lemma->id) == lemma_order.end())
        lemma_order.push_back(tasks[i].lemma->id);
    for (const auto& vo : results[i]) {
      njson row;
      row["lemma"] = vo.lemma;
      row["frame"] = vo.frame;
      row["variant"] = vo.variant;
      row["status"] = status_name(vo.status);
      row["cases"] = vo.cases;
      if (vo.inconclusive) row["inconclusive_samples"] = vo.inconclusive;
      if (!vo.reason.empty()) row["reason"] = vo.reason;
      if (vo.cex)
        row["counterexample"] =
            vo.cex->to_json(frames.at(tasks[i].fs)->u());
      if (opts.timings) row["millis"] = vo.millis;
      rows.push_back(row);
      report.rows.push_back(vo);
      by_variant[vo.lemma][vo.variant].push_back(vo.status);

      bool bad;
      if (auto exp = expected_status(vo)) {
        bad = vo.status != *exp;
      } else {
        bad = vo.expect == Expect::Verified && vo.status != Status::Verified;
        if (vo.expect == Expect::Refuted && vo.status == Status::Verified)
          bad = false;  // a documented refutation that verifies is news, not a failure
      }
      if (bad) {
        ++unexpected;
        njson u;
        u["lemma"] = vo.lemma;
        u["frame"] = vo.frame;
        u["variant"] = vo.variant;
        u["status"] = status_name(vo.status);
        unexpected_rows.push_back(u);
      }
    }
  }

  // Lemma-level aggregation: verified iff some variant verified on every
  // frame it ran on; else refuted if any row refuted; else inconclusive.
  njson lemma_status = njson::array();
  size_t n_verified = 0, n_refuted = 0, n_inconclusive = 0;
  for (const auto& id : lemma_order) {
    std::string via;
    bool any_refuted = false;
    for (const auto& [variant, statuses] : by_variant[id]) {
      bool all_verified = !statuses.empty();
      for (Status s : statuses) {
        if (s != Status::Verified) all_verified = false;
        if (s == Status::Refuted) any_refuted = true;
      }
      if (all_verified && via.empty()) via = variant;
    }
    njson e;
    e["lemma"] = id;
    if (!via.empty()) {
      e["status"] = "verified";
      e["via"] = via;
      ++n_verified;
    } else if (any_refuted) {
      e["status"] = "refuted";
      ++n_refuted;
    } else {
      e["status"] = "inconclusive";
      ++n_inconclusive;
    }
    lemma_status.push_back(e);
  }

  njson j;
  j["suite"] = suite.name;
  j["seed"] = opts.seed;
  j["lemma_count"] = lemma_order.size();
  j["results"] = rows;
  j["lemma_status"] = lemma_status;
  njson summary;
  summary["verified"] = n_verified;
  summary["refuted"] = n_refuted;
  summary["inconclusive"] = n_inconclusive;
  summary["unexpected"] = unexpected_rows;
  j["summary"] = summary;

  report.json = std::move(j);
  report.unexpected = unexpected;
  return report;
}

}  // namespace stf
