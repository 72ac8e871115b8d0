#include "stratiforge.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "defs.hpp"
#include "eval.hpp"
#include "lemmas.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "stratify.hpp"
#include "universe.hpp"

using namespace stf;

struct sf_universe {
  std::shared_ptr<Universe> u;
};
struct sf_frame {
  std::shared_ptr<Universe> u;  // keeps the universe alive
  std::shared_ptr<Frame> f;
};
struct sf_session {
  std::shared_ptr<Universe> u;
  std::shared_ptr<Frame> f;
  char system = 'A';
  Env env;
};

namespace {

thread_local std::string g_last_error;

sf_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::SizeCap: return SF_ERR_SIZE_CAP;
    case ErrorCode::DuplicateExtension: return SF_ERR_DUPLICATE_EXTENSION;
    case ErrorCode::DanglingReference: return SF_ERR_DANGLING_REFERENCE;
    case ErrorCode::Unrepresentable: return SF_ERR_UNREPRESENTABLE;
    case ErrorCode::Syntax: return SF_ERR_SYNTAX;
    case ErrorCode::UnknownOperator: return SF_ERR_UNKNOWN_OPERATOR;
    case ErrorCode::UnresolvedVariant: return SF_ERR_UNRESOLVED_VARIANT;
    case ErrorCode::UnboundVar: return SF_ERR_UNBOUND_VAR;
    case ErrorCode::Schema: return SF_ERR_SCHEMA;
    case ErrorCode::Io: return SF_ERR_IO;
    case ErrorCode::Internal: return SF_ERR_INTERNAL;
  }
  return SF_ERR_INTERNAL;
}

template <typename Fn>
sf_status guarded(Fn&& fn) {
  try {
    fn();
    return SF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sf_status invalid(const char* msg) {
  g_last_error = msg;
  return SF_ERR_INVALID_ARG;
}

std::map<std::string, int> parse_variant_csv(const char* variants) {
  std::map<std::string, int> choices;
  if (!variants || !*variants) return choices;
  std::istringstream in(variants);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::Schema, "variant choice must be name=index: " + item);
    choices[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  return choices;
}

Class eval_in_session(sf_session* s, const char* term);

}  // namespace

extern "C" {

const char* sf_status_name(sf_status s) {
  switch (s) {
    case SF_OK: return "ok";
    case SF_ERR_SIZE_CAP: return "SizeCap";
    case SF_ERR_DUPLICATE_EXTENSION: return "DuplicateExtension";
    case SF_ERR_DANGLING_REFERENCE: return "DanglingReference";
    case SF_ERR_UNREPRESENTABLE: return "Unrepresentable";
    case SF_ERR_SYNTAX: return "SyntaxError";
    case SF_ERR_UNKNOWN_OPERATOR: return "UnknownOperator";
    case SF_ERR_UNRESOLVED_VARIANT: return "UnresolvedVariant";
    case SF_ERR_UNBOUND_VAR: return "UnboundVar";
    case SF_ERR_SCHEMA: return "SchemaError";
    case SF_ERR_IO: return "IoError";
    case SF_ERR_INVALID_ARG: return "InvalidArgument";
    case SF_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownError";
}

const char* sf_last_error(void) { return g_last_error.c_str(); }

void sf_string_free(char* s) { std::free(s); }

const char* sf_version(void) { return "0.1.0"; }

sf_status sf_universe_build(uint32_t atoms, uint32_t depth, uint64_t size_cap,
                            sf_universe** out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] {
    auto u = std::make_shared<Universe>(Universe::cumulative(
        atoms, depth, size_cap ? size_cap : Universe::kDefaultSizeCap));
    *out = new sf_universe{std::move(u)};
  });
}

sf_status sf_universe_from_digraph_json(const char* json, sf_universe** out) {
  if (!json || !out) return invalid("json and out must not be null");
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json);
    } catch (const std::exception& e) {
      fail(ErrorCode::Schema, std::string("digraph is not valid JSON: ") +
                                  e.what());
    }
    if (!doc.is_array())
      fail(ErrorCode::Schema, "digraph document must be a JSON array");
    std::vector<Universe::DigraphEntry> table;
    for (const auto& ej : doc) {
      Universe::DigraphEntry entry;
      entry.id = ej.at("id").get<uint32_t>();
      std::string kind = ej.at("kind").get<std::string>();
      if (kind == "atom") entry.kind = Kind::Atom;
      else if (kind == "set") entry.kind = Kind::Set;
      else fail(ErrorCode::Schema, "kind must be 'atom' or 'set'");
      if (ej.contains("ext"))
        for (const auto& m : ej.at("ext"))
          entry.ext.push_back(m.get<uint32_t>());
      table.push_back(std::move(entry));
    }
    auto u = std::make_shared<Universe>(Universe::digraph(table));
    *out = new sf_universe{std::move(u)};
  });
}

void sf_universe_free(sf_universe* u) { delete u; }

uint64_t sf_universe_size(const sf_universe* u) { return u->u->size(); }
uint32_t sf_universe_atom_count(const sf_universe* u) {
  return u->u->atom_count();
}
uint32_t sf_universe_depth(const sf_universe* u) { return u->u->depth(); }
uint32_t sf_universe_element_rank(const sf_universe* u, uint32_t id) {
  return u->u->rank(id);
}
int sf_universe_element_is_set(const sf_universe* u, uint32_t id) {
  return u->u->is_set(id) ? 1 : 0;
}

sf_status sf_universe_element_brace(const sf_universe* u, uint32_t id,
                                    char** out) {
  if (!u || !out) return invalid("universe and out must not be null");
  return guarded([&] {
    if (id >= u->u->size())
      fail(ErrorCode::Schema, "element id out of range");
    *out = dup_string(u->u->brace(static_cast<ElemId>(id)));
  });
}

sf_status sf_frame_create(sf_universe* u, uint32_t headroom, sf_frame** out) {
  if (!u || !out) return invalid("universe and out must not be null");
  return guarded([&] {
    auto f = std::make_shared<Frame>(*u->u, headroom);
    *out = new sf_frame{u->u, std::move(f)};
  });
}

void sf_frame_free(sf_frame* f) { delete f; }

uint64_t sf_frame_w_size(const sf_frame* f) { return f->f->w.size(); }

sf_status sf_session_create(sf_frame* f, char system, sf_session** out) {
  if (!f || !out) return invalid("frame and out must not be null");
  if (system != 'A' && system != 'a' && system != 'B' && system != 'b')
    return invalid("system must be 'A' or 'B'");
  *out = new sf_session{f->u, f->f, static_cast<char>(std::toupper(system)), {}};
  return SF_OK;
}

void sf_session_free(sf_session* s) { delete s; }

sf_status sf_session_set_system(sf_session* s, char system) {
  if (!s) return invalid("session must not be null");
  if (system != 'A' && system != 'a' && system != 'B' && system != 'b')
    return invalid("system must be 'A' or 'B'");
  s->system = static_cast<char>(std::toupper(system));
  return SF_OK;
}

sf_status sf_session_let(sf_session* s, const char* name, const char* term) {
  if (!s || !name || !term) return invalid("arguments must not be null");
  return guarded([&] { s->env[name] = eval_in_session(s, term); });
}

sf_status sf_session_eval(sf_session* s, const char* term, char** out) {
  if (!s || !term || !out) return invalid("arguments must not be null");
  return guarded([&] {
    Class c = eval_in_session(s, term);
    *out = dup_string(s->f->u().brace(c));
  });
}

sf_status sf_session_expand(sf_session* s, const char* term,
                            const char* variants, char** out) {
  if (!s || !term || !out) return invalid("arguments must not be null");
  return guarded([&] {
    const auto& defs = DefinitionTable::prelude();
    auto choices = parse_variant_csv(variants);
    TermPtr t = parse_term(term, defs.known_names());
    *out = dup_string(print_term(expand(t, defs, s->system, choices)));
  });
}

sf_status sf_session_oracle(sf_session* s, const char* expr, char** out) {
  if (!s || !expr || !out) return invalid("arguments must not be null");
  return guarded([&] {
    auto e = parse_oracle_expr(expr);
    Class c = eval_oracle_expr(e, *s->f, s->env);
    *out = dup_string(s->f->u().brace(c));
  });
}

sf_status sf_term_headroom(const char* term, char system, uint32_t* out) {
  if (!term || !out) return invalid("arguments must not be null");
  return guarded([&] {
    const auto& defs = DefinitionTable::prelude();
    TermPtr t = parse_term(term, defs.known_names());
    *out = headroom_of(expand(t, defs, system));
  });
}

sf_status sf_stratify(const char* formula, char** out) {
  if (!formula || !out) return invalid("arguments must not be null");
  return guarded([&] {
    FormulaPtr f = parse_formula(formula);
    *out = dup_string(describe(stratify_formula(f)));
  });
}

sf_status sf_suite_run(const char* config, char** report, int* unexpected) {
  if (!config || !report) return invalid("config and report required");
  return guarded([&] {
    nlohmann::json cfg;
    try {
      cfg = nlohmann::json::parse(config);
    } catch (const std::exception& e) {
      fail(ErrorCode::Schema,
           std::string("config is not valid JSON: ") + e.what());
    }
    VerifyOptions opts;
    opts.seed = cfg.value("seed", uint64_t(42));
    opts.jobs = cfg.value("jobs", 1);
    opts.timings = cfg.value("timings", false);
    if (cfg.contains("frames") && !cfg.at("frames").is_null())
      opts.frame_override =
          parse_frame_specs(cfg.at("frames").get<std::string>());
    if (cfg.contains("lemmas"))
      for (const auto& l : cfg.at("lemmas"))
        opts.lemma_filter.push_back(l.get<std::string>());
    if (cfg.contains("expected") && !cfg.at("expected").is_null()) {
      std::ifstream in(cfg.at("expected").get<std::string>());
      if (!in) fail(ErrorCode::Io, "cannot open expected-verdicts file");
      std::ostringstream buf;
      buf << in.rdbuf();
      opts.expected = load_expected_json(buf.str());
    }

    const Suite* suite = &default_suite();
    Suite loaded;
    if (cfg.contains("suite") && !cfg.at("suite").is_null()) {
      std::ifstream in(cfg.at("suite").get<std::string>());
      if (!in) fail(ErrorCode::Io, "cannot open suite file");
      std::ostringstream buf;
      buf << in.rdbuf();
      loaded = load_suite(buf.str());
      suite = &loaded;
    }

    RunReport r = run_suite(*suite, opts);
    *report = dup_string(r.json.dump(2) + "\n");
    if (unexpected) *unexpected = r.unexpected;
  });
}

sf_status sf_default_suite_json(char** out) {
  if (!out) return invalid("out must not be null");
  *out = dup_string(kDefaultSuiteJson);
  return SF_OK;
}

}  // extern "C"

namespace {

Class eval_in_session(sf_session* s, const char* term) {
  const auto& defs = DefinitionTable::prelude();
  TermPtr t = parse_term(term, defs.known_names());
  TermPtr prim = expand(t, defs, s->system);
  return eval_term(prim, *s->f, s->env);
}

}  // namespace
