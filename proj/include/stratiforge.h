/* stratiforge: finite membership universes, a two-system set-operator
 * language, stratification checking, and a brute-force identity
 * verification harness, behind a plain C interface.
 *
 * All handles are opaque. Functions return SF_OK (0) on success or a
 * nonzero error code; sf_last_error() describes the most recent failure on
 * the calling thread. Strings returned through char** are heap-allocated
 * and must be released with sf_string_free().
 */
#ifndef STRATIFORGE_H
#define STRATIFORGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sf_universe sf_universe;
typedef struct sf_frame sf_frame;
typedef struct sf_session sf_session;

typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_SIZE_CAP = 1,
  SF_ERR_DUPLICATE_EXTENSION = 2,
  SF_ERR_DANGLING_REFERENCE = 3,
  SF_ERR_UNREPRESENTABLE = 4,
  SF_ERR_SYNTAX = 5,
  SF_ERR_UNKNOWN_OPERATOR = 6,
  SF_ERR_UNRESOLVED_VARIANT = 7,
  SF_ERR_UNBOUND_VAR = 8,
  SF_ERR_SCHEMA = 9,
  SF_ERR_IO = 10,
  SF_ERR_INVALID_ARG = 11,
  SF_ERR_INTERNAL = 12
} sf_status;

const char* sf_status_name(sf_status s);
const char* sf_last_error(void);
void sf_string_free(char* s);
const char* sf_version(void);

/* --- universes ---------------------------------------------------------- */

/* Cumulative universe: `atoms` urelements plus all sets obtainable by
 * `depth` rounds of bounded powerset. size_cap 0 means the default (2^20
 * elements). */
sf_status sf_universe_build(uint32_t atoms, uint32_t depth, uint64_t size_cap,
                            sf_universe** out);
/* JSON list of {"id": int, "kind": "atom"|"set", "ext": [int]}. */
sf_status sf_universe_from_digraph_json(const char* json, sf_universe** out);
void sf_universe_free(sf_universe* u);
uint64_t sf_universe_size(const sf_universe* u);
uint32_t sf_universe_atom_count(const sf_universe* u);
uint32_t sf_universe_depth(const sf_universe* u);
uint32_t sf_universe_element_rank(const sf_universe* u, uint32_t id);
int sf_universe_element_is_set(const sf_universe* u, uint32_t id);
sf_status sf_universe_element_brace(const sf_universe* u, uint32_t id,
                                    char** out);

/* --- frames and sessions ------------------------------------------------ */

/* The frame's local universe W is everything of rank <= depth - headroom. */
sf_status sf_frame_create(sf_universe* u, uint32_t headroom, sf_frame** out);
void sf_frame_free(sf_frame* f);
uint64_t sf_frame_w_size(const sf_frame* f);

/* A session owns let-bindings and the active axiom system ('A' or 'B'). */
sf_status sf_session_create(sf_frame* f, char system, sf_session** out);
void sf_session_free(sf_session* s);
sf_status sf_session_set_system(sf_session* s, char system);
/* Binds `name` to the value of `term` (evaluated immediately). */
sf_status sf_session_let(sf_session* s, const char* name, const char* term);
/* Evaluates a term; the result class is printed in brace notation. */
sf_status sf_session_eval(sf_session* s, const char* term, char** out);
/* Expands every derived operator; `variants` is a comma-separated list of
 * name=index choices, or NULL. */
sf_status sf_session_expand(sf_session* s, const char* term,
                            const char* variants, char** out);
/* Evaluates an oracle expression such as "frege(2)" or "powerset(env:X)";
 * env names refer to session bindings. */
sf_status sf_session_oracle(sf_session* s, const char* expr, char** out);
/* Reification headroom demanded by a term's sing/pairset nesting. */
sf_status sf_term_headroom(const char* term, char system, uint32_t* out);

/* --- stratification ----------------------------------------------------- */

/* Prints either "stratified: x:0 y:1 ..." or "conflict (cycle offset k):
 * [atom] ..." into *out. A conflict is a result, not an error. */
sf_status sf_stratify(const char* formula, char** out);

/* --- verification ------------------------------------------------------- */

/* Runs a lemma suite. config is a JSON object:
 *   {"suite": <path or null for the built-in registry>,
 *    "lemmas": [ids...] (optional filter),
 *    "frames": "a,d,h;a,d,h" (optional override),
 *    "seed": 42, "jobs": 1, "timings": false,
 *    "expected": <path to expected-verdicts JSON, optional>}
 * *report receives the report JSON; *unexpected the number of outcomes that
 * contradict their expectation flags. */
sf_status sf_suite_run(const char* config, char** report, int* unexpected);
/* The built-in registry as a suite JSON document. */
sf_status sf_default_suite_json(char** out);

#ifdef __cplusplus
}
#endif

#endif /* STRATIFORGE_H */
