#ifndef STRATIFORGE_UNIVERSE_HPP
#define STRATIFORGE_UNIVERSE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stf {

using ElemId = uint32_t;

enum class ErrorCode {
  SizeCap,
  DuplicateExtension,
  DanglingReference,
  Unrepresentable,
  Syntax,
  UnknownOperator,
  UnresolvedVariant,
  UnboundVar,
  Schema,
  Io,
  Internal,
};

const char* error_code_name(ErrorCode c);

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

// A class (in the set-theoretic sense): sorted, duplicate-free element ids.
struct Class {
  std::vector<ElemId> ids;

  Class() = default;
  explicit Class(std::vector<ElemId> sorted_ids) : ids(std::move(sorted_ids)) {}
  static Class from_unsorted(std::vector<ElemId> v);

  bool contains(ElemId e) const;
  bool empty() const { return ids.empty(); }
  size_t size() const { return ids.size(); }
  auto begin() const { return ids.begin(); }
  auto end() const { return ids.end(); }
  bool operator==(const Class& o) const { return ids == o.ids; }
  bool operator!=(const Class& o) const { return ids != o.ids; }
  bool operator<(const Class& o) const { return ids < o.ids; }
};

Class class_union(const Class& a, const Class& b);
Class class_intersect(const Class& a, const Class& b);
Class class_difference(const Class& a, const Class& b);
bool class_subset(const Class& a, const Class& b);

enum class Kind : uint8_t { Atom, Set };

struct Element {
  Kind kind = Kind::Set;
  std::vector<ElemId> ext;  // sorted; empty for atoms
  uint32_t rank = 0;
};

// Finite membership structure. Immutable once built; queries are read-only
// and safe to share across threads.
class Universe {
 public:
  // Cumulative mode: atoms, then level-k sets = all subsets of the
  // level-(k-1) cumulative slice, k = 1..depth. Ids are atoms first, then
  // sets level by level in graded lexicographic order of extension.
  static Universe cumulative(uint32_t atom_count, uint32_t depth,
                             uint64_t size_cap = kDefaultSizeCap);

  // Explicit digraph mode: exactly the given membership relation.
  struct DigraphEntry {
    ElemId id;
    Kind kind;
    std::vector<ElemId> ext;
  };
  static Universe digraph(const std::vector<DigraphEntry>& table);

  static constexpr uint64_t kDefaultSizeCap = uint64_t(1) << 20;

  size_t size() const { return elements_.size(); }
  uint32_t atom_count() const { return atom_count_; }
  uint32_t depth() const { return depth_; }
  bool is_cumulative() const { return cumulative_; }

  const Element& element(ElemId id) const { return elements_.at(id); }
  bool is_set(ElemId id) const { return elements_[id].kind == Kind::Set; }
  const std::vector<ElemId>& ext(ElemId id) const { return elements_[id].ext; }
  uint32_t rank(ElemId id) const { return elements_[id].rank; }

  // The unique Set element with the given extension, if any.
  std::optional<ElemId> find_by_extension(const std::vector<ElemId>& ext) const;

  // The element whose extension is {a,b} ({a} when a == b), if present.
  std::optional<ElemId> find_pair(ElemId a, ElemId b) const;

  // All ids of rank <= r, in id order.
  Class rank_slice(uint32_t r) const;
  Class all_elements() const;

  // Validates ext_index and pair_index against the elements table.
  void check_indices() const;

  struct PairView {
    enum class Tag { None, Singleton, Doubleton } tag = Tag::None;
    ElemId a = 0, b = 0;
  };
  PairView classify_pair(ElemId e) const;

  // "{{},{{}}}" style; atoms print as @0, @1, ...
  std::string brace(ElemId e) const;
  std::string brace(const Class& c) const;

 private:
  Universe() = default;
  void build_indices();

  std::vector<Element> elements_;
  std::map<std::vector<ElemId>, ElemId> ext_index_;  // Set-kind only
  std::map<std::pair<ElemId, ElemId>, ElemId> pair_index_;
  uint32_t atom_count_ = 0;
  uint32_t depth_ = 0;
  bool cumulative_ = false;
};

// A universe together with the designated local universe W that interprets
// V. Quantifiers and complements in evaluation are relativized to W.
struct Frame {
  const Universe* universe = nullptr;
  Class w;
  uint32_t headroom = 0;

  Frame() = default;
  // Default W: everything of rank <= depth - headroom.
  Frame(const Universe& u, uint32_t headroom_);
  Frame(const Universe& u, Class w_, uint32_t headroom_);

  const Universe& u() const { return *universe; }
  uint32_t w_rank_cutoff() const;
};

// Locates the Set element whose extension equals c. Never returns an atom;
// the empty class reifies to the Set-kind empty set.
ElemId reify(const Frame& f, const Class& c);
ElemId reify(const Universe& u, const Class& c);

}  // namespace stf

#endif
