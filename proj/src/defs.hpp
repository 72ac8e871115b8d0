#ifndef STRATIFORGE_DEFS_HPP
#define STRATIFORGE_DEFS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ast.hpp"

namespace stf {

// One derived-operator definition. Entries whose source formula admits more
// than one reading carry several bodies; index 0 is the default used by
// plain expansion, the rest are selectable via a variant choice map.
struct Definition {
  std::string name;  // possibly system-qualified: "a.1", "b.uprod", ...
  std::vector<std::string> params;
  std::vector<TermPtr> variants;
};

class DefinitionTable {
 public:
  // The built-in prelude (embedded copy of data/prelude.stf).
  static const DefinitionTable& prelude();
  // Parses the prelude text format: "name(params) := term ;" lines,
  // "variant k: ..." continuation lines, '#' comments.
  static DefinitionTable load_text(const std::string& text);
  static DefinitionTable load_file(const std::string& path);

  void add(const std::string& head_name, std::vector<std::string> params,
           TermPtr body, int variant_index);

  const Definition* find_exact(const std::string& name) const;
  // Unqualified names try "<system>.<name>" first, then the plain name.
  const Definition* resolve(const std::string& name, char system) const;

  // Names the term parser should treat as operators (qualified and base).
  const std::set<std::string>& known_names() const { return known_; }
  const std::map<std::string, Definition>& all() const { return defs_; }

 private:
  std::map<std::string, Definition> defs_;
  std::set<std::string> known_;
};

// Rewrites every Named node to its definition body until only primitive
// constructors remain. `choices` picks variant bodies by definition name
// (qualified or unqualified); unnamed entries use variant 0.
TermPtr expand(const TermPtr& t, const DefinitionTable& defs, char system,
               const std::map<std::string, int>& choices = {});

extern const char* kPreludeText;

}  // namespace stf

#endif
