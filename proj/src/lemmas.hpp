#ifndef STRATIFORGE_LEMMAS_HPP
#define STRATIFORGE_LEMMAS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ast.hpp"
#include "eval.hpp"
#include "universe.hpp"

#include <json.hpp>

namespace stf {

struct FrameSpec {
  uint32_t atoms = 2, depth = 2, headroom = 0;
  std::string label() const;
  bool operator<(const FrameSpec& o) const {
    return std::tie(atoms, depth, headroom) <
           std::tie(o.atoms, o.depth, o.headroom);
  }
  bool operator==(const FrameSpec& o) const {
    return atoms == o.atoms && depth == o.depth && headroom == o.headroom;
  }
};
// "2,2,0" or "2,2" (headroom 0); several specs separated by ';'.
std::vector<FrameSpec> parse_frame_specs(const std::string& text);

enum class Expect { Verified, Refuted, Any };
enum class Status { Verified, Refuted, Inconclusive };
const char* status_name(Status s);

// Declarative oracle expressions: "kind(arg, ...)", "env:NAME", integers,
// or a comprehension {"var": ..., "formula": ...}.
struct OracleExpr;
using OracleExprPtr = std::shared_ptr<const OracleExpr>;
OracleExprPtr parse_oracle_expr(const std::string& text);
OracleExprPtr make_comprehend_oracle(const std::string& var,
                                     const std::string& formula);
Class eval_oracle_expr(const OracleExprPtr& e, const Frame& f, const Env& env);

struct LemmaBinder {
  enum class Domain { Classes, KRels, URels };
  std::string name;
  Domain domain = Domain::Classes;
};

struct LemmaLet {
  std::string name;
  OracleExprPtr value;
};

struct LemmaVariant {
  std::string label;
  std::string term_text;          // evaluated via expand + eval_term
  OracleExprPtr lhs_oracle;       // alternative left side
  std::map<std::string, int> choices;
  std::string adjust;             // e.g. "disjoint:A,B"
  OracleExprPtr oracle_override;  // replaces the lemma oracle
  Expect expect = Expect::Any;
  TermPtr expanded;               // cached at load time
};

struct LemmaSpec {
  std::string id, title, statement;
  char system = 'A';
  std::vector<LemmaBinder> binders;
  std::vector<LemmaLet> lets;
  std::vector<LemmaVariant> variants;
  OracleExprPtr oracle;
  std::vector<FrameSpec> frames;
  bool ksupport_binders = false;
  int samples = 100;
};

struct Suite {
  std::string name;
  std::vector<LemmaSpec> lemmas;
};

Suite load_suite(const std::string& json_text);
const Suite& default_suite();
extern const char* kDefaultSuiteJson;

struct Counterexample {
  Env env;
  std::string lhs_value, rhs_value;    // brace notation
  std::string only_lhs, only_rhs;      // symmetric difference
  nlohmann::ordered_json to_json(const Universe& u) const;
};

struct VariantOutcome {
  std::string lemma, frame, variant;
  Status status = Status::Inconclusive;
  uint64_t cases = 0;             // samples that compared equal
  uint64_t inconclusive = 0;      // samples skipped as unrepresentable
  std::string reason;             // first inconclusive reason
  std::optional<Counterexample> cex;
  Expect expect = Expect::Any;
  int64_t millis = 0;
};

// Verifies one lemma on one frame; deterministic in (seed, lemma id, frame).
std::vector<VariantOutcome> verify_lemma(const LemmaSpec& spec, const Frame& f,
                                         const FrameSpec& fs, uint64_t seed);

struct VerifyOptions {
  uint64_t seed = 42;
  int jobs = 1;
  bool timings = false;
  std::vector<FrameSpec> frame_override;   // empty: per-lemma frames
  std::vector<std::string> lemma_filter;   // empty: all
  // (lemma, frame-or-empty, variant-or-empty) -> expected status
  std::vector<std::tuple<std::string, std::string, std::string, Status>>
      expected;
};

struct RunReport {
  nlohmann::ordered_json json;
  int unexpected = 0;
  std::vector<VariantOutcome> rows;
};

RunReport run_suite(const Suite& suite, const VerifyOptions& opts);

// Expected-verdict overrides: JSON array of {lemma, frame?, variant?, status}.
std::vector<std::tuple<std::string, std::string, std::string, Status>>
load_expected_json(const std::string& json_text);

// Deterministic sampling primitives (shared with tests).
struct SampleRng {
  uint64_t state;
  explicit SampleRng(uint64_t seed) : state(seed) {}
  uint64_t next();
};
uint64_t sample_stream_seed(uint64_t seed, const std::string& lemma,
                            const std::string& frame);
Class sample_class(SampleRng& rng, const Class& slice);
Class sample_urel(SampleRng& rng, const Frame& f, const Class& support);
Class sample_krel(SampleRng& rng, const Frame& f, const Class& support);
Class binder_slice(const Frame& f, const FrameSpec& fs, bool ksupport);

}  // namespace stf

#endif
