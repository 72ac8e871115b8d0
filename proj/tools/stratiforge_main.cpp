// Command-line front end. Everything goes through the public C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stratiforge.h"

namespace {

void print_diag(sf_status st) {
  std::fprintf(stderr, "{\"error\": \"%s\", \"message\": %s}\n",
               sf_status_name(st),
               std::string("\"" + std::string(sf_last_error()) + "\"").c_str());
}

struct StringOut {
  char* s = nullptr;
  ~StringOut() { sf_string_free(s); }
};

struct UniverseOpts {
  uint32_t atoms = 2, depth = 2, headroom = 0;
  std::string digraph_file;

  void attach(CLI::App* cmd, bool with_headroom) {
    cmd->add_option("--atoms", atoms, "urelement count");
    cmd->add_option("--depth", depth, "powerset rounds");
    if (with_headroom)
      cmd->add_option("--headroom", headroom,
                      "rank margin between W and the universe");
    cmd->add_option("--digraph", digraph_file,
                    "JSON membership table instead of a cumulative universe");
  }

  sf_status build(sf_universe** out) const {
    if (!digraph_file.empty()) {
      std::ifstream in(digraph_file);
      if (!in) {
        std::fprintf(stderr,
                     "{\"error\": \"IoError\", \"message\": \"cannot open "
                     "%s\"}\n",
                     digraph_file.c_str());
        return SF_ERR_IO;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return sf_universe_from_digraph_json(buf.str().c_str(), out);
    }
    return sf_universe_build(atoms, depth, 0, out);
  }
};

int run_universe(const UniverseOpts& uo, bool list) {
  sf_universe* u = nullptr;
  if (sf_status st = uo.build(&u); st != SF_OK) {
    print_diag(st);
    return 2;
  }
  std::printf("elements: %llu (atoms %u, depth %u)\n",
              static_cast<unsigned long long>(sf_universe_size(u)),
              sf_universe_atom_count(u), sf_universe_depth(u));
  if (list) {
    for (uint64_t id = 0; id < sf_universe_size(u); ++id) {
      StringOut b;
      sf_universe_element_brace(u, static_cast<uint32_t>(id), &b.s);
      std::printf("%llu: %s (rank %u)\n", static_cast<unsigned long long>(id),
                  b.s, sf_universe_element_rank(u, static_cast<uint32_t>(id)));
    }
  }
  sf_universe_free(u);
  return 0;
}

struct Session {
  sf_universe* u = nullptr;
  sf_frame* f = nullptr;
  sf_session* s = nullptr;
  ~Session() {
    sf_session_free(s);
    sf_frame_free(f);
    sf_universe_free(u);
  }
  sf_status open(const UniverseOpts& uo, char system) {
    if (sf_status st = uo.build(&u); st != SF_OK) return st;
    if (sf_status st = sf_frame_create(u, uo.headroom, &f); st != SF_OK)
      return st;
    return sf_session_create(f, system, &s);
  }
};

int run_eval(const UniverseOpts& uo, char system, const std::string& term,
             const std::vector<std::string>& lets) {
  Session sess;
  if (sf_status st = sess.open(uo, system); st != SF_OK) {
    print_diag(st);
    return 2;
  }
  for (const auto& binding : lets) {
    size_t eq = binding.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr,
                   "{\"error\": \"InvalidArgument\", \"message\": \"--let "
                   "needs name=term\"}\n");
      return 2;
    }
    std::string name = binding.substr(0, eq);
    std::string value = binding.substr(eq + 1);
    if (sf_status st = sf_session_let(sess.s, name.c_str(), value.c_str());
        st != SF_OK) {
      print_diag(st);
      return 2;
    }
  }
  StringOut out;
  if (sf_status st = sf_session_eval(sess.s, term.c_str(), &out.s);
      st != SF_OK) {
    print_diag(st);
    return 2;
  }
  std::printf("%s\n", out.s);
  return 0;
}

int run_stratify(const std::string& formula) {
  StringOut out;
  if (sf_status st = sf_stratify(formula.c_str(), &out.s); st != SF_OK) {
    print_diag(st);
    return 2;
  }
  std::printf("%s\n", out.s);
  return 0;
}

int run_expand(char system, const std::string& term,
               const std::vector<std::string>& variants) {
  std::string csv;
  for (const auto& v : variants) {
    if (!csv.empty()) csv += ",";
    csv += v;
  }
  // expansion is frame-independent; a tiny frame carries the session
  UniverseOpts uo;
  uo.atoms = 0;
  uo.depth = 1;
  Session sess;
  if (sf_status st = sess.open(uo, system); st != SF_OK) {
    print_diag(st);
    return 2;
  }
  StringOut out;
  if (sf_status st = sf_session_expand(sess.s, term.c_str(),
                                       csv.empty() ? nullptr : csv.c_str(),
                                       &out.s);
      st != SF_OK) {
    print_diag(st);
    return 2;
  }
  std::printf("%s\n", out.s);
  return 0;
}

int run_verify(const std::string& suite, const std::vector<std::string>& lemmas,
               const std::string& frames, uint64_t seed, int jobs,
               const std::string& out_path, const std::string& expected,
               bool timings) {
  std::ostringstream cfg;
  cfg << "{";
  cfg << "\"seed\": " << seed << ", \"jobs\": " << jobs;
  cfg << ", \"timings\": " << (timings ? "true" : "false");
  if (!suite.empty()) cfg << ", \"suite\": \"" << suite << "\"";
  if (!frames.empty()) cfg << ", \"frames\": \"" << frames << "\"";
  if (!expected.empty()) cfg << ", \"expected\": \"" << expected << "\"";
  if (!lemmas.empty()) {
    cfg << ", \"lemmas\": [";
    for (size_t i = 0; i < lemmas.size(); ++i) {
      if (i) cfg << ", ";
      cfg << "\"" << lemmas[i] << "\"";
    }
    cfg << "]";
  }
  cfg << "}";

  StringOut report;
  int unexpected = 0;
  if (sf_status st = sf_suite_run(cfg.str().c_str(), &report.s, &unexpected);
      st != SF_OK) {
    print_diag(st);
    return 2;
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr,
                   "{\"error\": \"IoError\", \"message\": \"cannot write "
                   "%s\"}\n",
                   out_path.c_str());
      return 2;
    }
    out << report.s;
  } else {
    std::fputs(report.s, stdout);
  }
  if (unexpected > 0) {
    std::fprintf(stderr,
                 "{\"error\": \"UnexpectedVerdicts\", \"message\": \"%d "
                 "outcomes contradict their expectations\"}\n",
                 unexpected);
    return 1;
  }
  return 0;
}

int run_repl(const UniverseOpts& uo, char system) {
  Session sess;
  if (sf_status st = sess.open(uo, system); st != SF_OK) {
    print_diag(st);
    return 2;
  }
  std::printf("stratiforge repl (:q quits; let NAME = TERM; :stratify "
              ":expand :oracle :system)\n");
  std::string line;
  while (true) {
    std::printf("> ");
    std::fflush(stdout);
    if (!std::getline(std::cin, line)) break;
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line == ":q" || line == ":quit") break;
    sf_status st = SF_OK;
    StringOut out;
    if (line.rfind(":stratify", 0) == 0) {
      st = sf_stratify(line.substr(9).c_str(), &out.s);
    } else if (line.rfind(":expand", 0) == 0) {
      st = sf_session_expand(sess.s, line.substr(7).c_str(), nullptr, &out.s);
    } else if (line.rfind(":oracle", 0) == 0) {
      st = sf_session_oracle(sess.s, line.substr(7).c_str(), &out.s);
    } else if (line.rfind(":system", 0) == 0) {
      auto arg = line.find_first_not_of(" \t", 7);
      if (arg == std::string::npos) {
        std::printf("usage: :system a|b\n");
        continue;
      }
      st = sf_session_set_system(sess.s, line[arg]);
      if (st == SF_OK) continue;
    } else if (line.rfind("let", 0) == 0 && line.size() > 3 &&
               std::isspace(static_cast<unsigned char>(line[3]))) {
      std::string rest = line.substr(4);
      size_t eq = rest.find('=');
      if (eq == std::string::npos) {
        std::printf("usage: let NAME = TERM\n");
        continue;
      }
      std::string name = rest.substr(0, eq);
      name.erase(name.find_last_not_of(" \t") + 1);
      name.erase(0, name.find_first_not_of(" \t"));
      st = sf_session_let(sess.s, name.c_str(), rest.substr(eq + 1).c_str());
      if (st == SF_OK) continue;
    } else {
      st = sf_session_eval(sess.s, line.c_str(), &out.s);
    }
    if (st != SF_OK)
      std::printf("error: %s: %s\n", sf_status_name(st), sf_last_error());
    else if (out.s)
      std::printf("%s\n", out.s);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-universe workbench for stratified set operators"};
  app.require_subcommand(1);

  UniverseOpts uni_opts;
  bool list = false;
  auto* universe = app.add_subcommand("universe", "build and inspect a universe");
  uni_opts.attach(universe, false);
  universe->add_flag("--list", list, "print every element");

  UniverseOpts eval_opts;
  std::string term;
  std::string system_str = "a";
  std::vector<std::string> lets;
  auto* eval = app.add_subcommand("eval", "evaluate a term over a frame");
  eval_opts.attach(eval, true);
  eval->add_option("--system", system_str, "active axiom system (a|b)");
  eval->add_option("--let", lets, "bind NAME=TERM before evaluation");
  eval->add_option("term", term, "term to evaluate")->required();

  std::string formula;
  auto* stratify = app.add_subcommand("stratify", "type-check a formula");
  stratify->add_option("formula", formula, "formula text")->required();

  std::string expand_term, expand_system = "a";
  std::vector<std::string> variant_choices;
  auto* expand = app.add_subcommand("expand", "expand to primitive operators");
  expand->add_option("--system", expand_system, "active axiom system (a|b)");
  expand->add_option("--variant", variant_choices,
                     "NAME=INDEX variant choices");
  expand->add_option("term", expand_term, "term to expand")->required();

  std::string suite_path, frames_spec, out_path, expected_path;
  std::vector<std::string> lemma_filter;
  uint64_t seed = 42;
  int jobs = 1;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run a lemma suite");
  verify->add_option("--suite", suite_path, "suite JSON (default: built-in)");
  verify->add_option("--lemma", lemma_filter, "restrict to these lemma ids");
  verify->add_option("--frames", frames_spec,
                     "frame override list, e.g. 2,2,0;0,4,0");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--jobs", jobs, "parallel workers");
  verify->add_option("--out", out_path, "write the report here");
  verify->add_option("--expected", expected_path,
                     "expected-verdicts JSON for known refutations");
  verify->add_flag("--timings", timings, "include per-entry millis");

  UniverseOpts repl_opts;
  std::string repl_system = "a";
  auto* repl = app.add_subcommand("repl", "interactive loop");
  repl_opts.attach(repl, true);
  repl->add_option("--system", repl_system, "active axiom system (a|b)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (universe->parsed()) return run_universe(uni_opts, list);
  if (eval->parsed())
    return run_eval(eval_opts, system_str.empty() ? 'a' : system_str[0], term,
                    lets);
  if (stratify->parsed()) return run_stratify(formula);
  if (expand->parsed())
    return run_expand(expand_system.empty() ? 'a' : expand_system[0],
                      expand_term, variant_choices);
  if (verify->parsed())
    return run_verify(suite_path, lemma_filter, frames_spec, seed, jobs,
                      out_path, expected_path, timings);
  if (repl->parsed())
    return run_repl(repl_opts, repl_system.empty() ? 'a' : repl_system[0]);
  return 2;
}
