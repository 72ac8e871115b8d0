#include "universe.hpp"

#include <algorithm>

namespace stf {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::DuplicateExtension: return "DuplicateExtension";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::Unrepresentable: return "Unrepresentable";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::UnknownOperator: return "UnknownOperator";
    case ErrorCode::UnresolvedVariant: return "UnresolvedVariant";
    case ErrorCode::UnboundVar: return "UnboundVar";
    case ErrorCode::Schema: return "SchemaError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

Class Class::from_unsorted(std::vector<ElemId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return Class(std::move(v));
}

bool Class::contains(ElemId e) const {
  return std::binary_search(ids.begin(), ids.end(), e);
}

Class class_union(const Class& a, const Class& b) {
  Class r;
  r.ids.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(r.ids));
  return r;
}

Class class_intersect(const Class& a, const Class& b) {
  Class r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r.ids));
  return r;
}

Class class_difference(const Class& a, const Class& b) {
  Class r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r.ids));
  return r;
}

bool class_subset(const Class& a, const Class& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

// Total elements of U(atoms, depth) per the cumulative recurrence:
// |slice_0| = atoms, |slice_k| = atoms + 2^|slice_{k-1}|.
uint64_t estimate_cumulative(uint32_t atoms, uint32_t depth, uint64_t cap) {
  uint64_t slice = atoms;
  uint64_t total = atoms;
  for (uint32_t k = 1; k <= depth; ++k) {
    if (slice >= 63) fail(ErrorCode::SizeCap, "universe exceeds size cap");
    uint64_t sets = uint64_t(1) << slice;
    total = uint64_t(atoms) + sets;
    if (total > cap) fail(ErrorCode::SizeCap, "universe exceeds size cap");
    slice = total;
  }
  return total;
}

// Subsets of `pool` (sorted ids) in graded lexicographic order: by size,
// then lexicographically on the sorted id sequence.
template <typename F>
void for_each_subset_graded(const std::vector<ElemId>& pool, F&& f) {
  const size_t n = pool.size();
  std::vector<ElemId> subset;
  for (size_t k = 0; k <= n; ++k) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      subset.clear();
      for (size_t i : idx) subset.push_back(pool[i]);
      f(subset);
      if (k == 0) break;
      // next combination in lexicographic order
      size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

Universe Universe::cumulative(uint32_t atom_count, uint32_t depth,
                              uint64_t size_cap) {
  if (depth < 1) fail(ErrorCode::Schema, "depth must be >= 1");
  estimate_cumulative(atom_count, depth, size_cap);

  Universe u;
  u.atom_count_ = atom_count;
  u.depth_ = depth;
  u.cumulative_ = true;
  for (uint32_t i = 0; i < atom_count; ++i)
    u.elements_.push_back(Element{Kind::Atom, {}, 0});

  std::vector<ElemId> slice;  // cumulative slice of the previous level
  for (uint32_t i = 0; i < atom_count; ++i) slice.push_back(i);

  for (uint32_t level = 1; level <= depth; ++level) {
    std::vector<ElemId> added;
    for_each_subset_graded(slice, [&](const std::vector<ElemId>& ext) {
      if (u.ext_index_.count(ext)) return;  // already present at a lower level
      ElemId id = static_cast<ElemId>(u.elements_.size());
      uint32_t rank = 1;
      for (ElemId m : ext) rank = std::max(rank, u.elements_[m].rank + 1);
      u.elements_.push_back(Element{Kind::Set, ext, rank});
      u.ext_index_.emplace(ext, id);
      added.push_back(id);
    });
    slice.insert(slice.end(), added.begin(), added.end());
  }
  u.build_indices();
  return u;
}

Universe Universe::digraph(const std::vector<DigraphEntry>& table) {
  Universe u;
  u.cumulative_ = false;
  u.elements_.resize(table.size());
  std::vector<bool> seen(table.size(), false);
  for (const auto& e : table) {
    if (e.id >= table.size() || seen[e.id])
      fail(ErrorCode::Schema, "digraph ids must be dense and unique");
    seen[e.id] = true;
  }
  for (const auto& e : table) {
    if (e.kind == Kind::Atom && !e.ext.empty())
      fail(ErrorCode::Schema, "atom with nonempty extension");
    for (ElemId m : e.ext)
      if (m >= table.size())
        fail(ErrorCode::DanglingReference,
             "extension references undeclared id " + std::to_string(m));
    Element el;
    el.kind = e.kind;
    el.ext = e.ext;
    std::sort(el.ext.begin(), el.ext.end());
    el.ext.erase(std::unique(el.ext.begin(), el.ext.end()), el.ext.end());
    u.elements_[e.id] = std::move(el);
    if (e.kind == Kind::Atom) ++u.atom_count_;
  }
  // Ranks: memoized DFS; a membership cycle contributes 0 at re-entry.
  std::vector<int> state(u.elements_.size(), 0);  // 0 new, 1 active, 2 done
  std::vector<uint32_t> rank(u.elements_.size(), 0);
  auto dfs = [&](auto&& self, ElemId v) -> uint32_t {
    if (state[v] == 2) return rank[v];
    if (state[v] == 1) return 0;
    state[v] = 1;
    uint32_t r = 0;
    if (u.elements_[v].kind == Kind::Set) {
      r = 1;
      for (ElemId m : u.elements_[v].ext) r = std::max(r, self(self, m) + 1);
      if (u.elements_[v].ext.empty()) r = 1;
    }
    state[v] = 2;
    rank[v] = r;
    return r;
  };
  uint32_t max_rank = 0;
  for (ElemId v = 0; v < u.elements_.size(); ++v)
    max_rank = std::max(max_rank, dfs(dfs, v));
  for (ElemId v = 0; v < u.elements_.size(); ++v) u.elements_[v].rank = rank[v];
  u.depth_ = max_rank;

  for (ElemId v = 0; v < u.elements_.size(); ++v) {
    if (u.elements_[v].kind != Kind::Set) continue;
    auto [it, fresh] = u.ext_index_.emplace(u.elements_[v].ext, v);
    if (!fresh)
      fail(ErrorCode::DuplicateExtension,
           "two sets share extension " + u.brace(it->second));
  }
  u.build_indices();
  return u;
}

void Universe::build_indices() {
  pair_index_.clear();
  for (ElemId v = 0; v < elements_.size(); ++v) {
    const Element& e = elements_[v];
    if (e.kind != Kind::Set) continue;
    if (e.ext.size() == 1)
      pair_index_.emplace(std::make_pair(e.ext[0], e.ext[0]), v);
    else if (e.ext.size() == 2)
      pair_index_.emplace(std::make_pair(e.ext[0], e.ext[1]), v);
  }
}

std::optional<ElemId> Universe::find_by_extension(
    const std::vector<ElemId>& ext) const {
  auto it = ext_index_.find(ext);
  if (it == ext_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElemId> Universe::find_pair(ElemId a, ElemId b) const {
  if (a > b) std::swap(a, b);
  auto it = pair_index_.find(std::make_pair(a, b));
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

Class Universe::rank_slice(uint32_t r) const {
  Class c;
  for (ElemId v = 0; v < elements_.size(); ++v)
    if (elements_[v].rank <= r) c.ids.push_back(v);
  return c;
}

Class Universe::all_elements() const {
  Class c;
  c.ids.resize(elements_.size());
  for (ElemId v = 0; v < elements_.size(); ++v) c.ids[v] = v;
  return c;
}

void Universe::check_indices() const {
  size_t sets = 0;
  for (ElemId v = 0; v < elements_.size(); ++v) {
    const Element& e = elements_[v];
    if (e.kind != Kind::Set) continue;
    ++sets;
    auto it = ext_index_.find(e.ext);
    if (it == ext_index_.end() || it->second != v)
      fail(ErrorCode::Internal, "ext_index disagrees with elements table");
    if (e.ext.size() == 1 || e.ext.size() == 2) {
      auto p = find_pair(e.ext.front(), e.ext.back());
      if (!p || *p != v)
        fail(ErrorCode::Internal, "pair_index disagrees with elements table");
    }
  }
  if (sets != ext_index_.size())
    fail(ErrorCode::Internal, "ext_index has stale entries");
}

Universe::PairView Universe::classify_pair(ElemId e) const {
  const Element& el = elements_.at(e);
  PairView v;
  if (el.kind != Kind::Set) return v;
  if (el.ext.size() == 1) {
    v.tag = PairView::Tag::Singleton;
    v.a = v.b = el.ext[0];
  } else if (el.ext.size() == 2) {
    v.tag = PairView::Tag::Doubleton;
    v.a = el.ext[0];
    v.b = el.ext[1];
  }
  return v;
}

namespace {
void brace_rec(const Universe& u, ElemId e, std::string& out,
               std::vector<bool>& active) {
  const Element& el = u.element(e);
  if (el.kind == Kind::Atom) {
    out += "@" + std::to_string(e);
    return;
  }
  if (active[e]) {  // membership cycle (digraph mode)
    out += "#" + std::to_string(e);
    return;
  }
  active[e] = true;
  out += "{";
  bool first = true;
  for (ElemId m : el.ext) {
    if (!first) out += ",";
    first = false;
    brace_rec(u, m, out, active);
  }
  out += "}";
  active[e] = false;
}
}  // namespace

std::string Universe::brace(ElemId e) const {
  std::string out;
  std::vector<bool> active(elements_.size(), false);
  brace_rec(*this, e, out, active);
  return out;
}

std::string Universe::brace(const Class& c) const {
  std::string out = "{ ";
  bool first = true;
  for (ElemId e : c) {
    if (!first) out += ", ";
    first = false;
    out += brace(e);
  }
  if (first) return "{ }";
  out += " }";
  return out;
}

Frame::Frame(const Universe& u, uint32_t headroom_)
    : universe(&u), headroom(headroom_) {
  uint32_t cut = u.depth() >= headroom_ ? u.depth() - headroom_ : 0;
  w = u.rank_slice(cut);
}

Frame::Frame(const Universe& u, Class w_, uint32_t headroom_)
    : universe(&u), w(std::move(w_)), headroom(headroom_) {}

uint32_t Frame::w_rank_cutoff() const {
  uint32_t r = 0;
  for (ElemId e : w) r = std::max(r, universe->rank(e));
  return r;
}

ElemId reify(const Universe& u, const Class& c) {
  auto id = u.find_by_extension(c.ids);
  if (!id)
    fail(ErrorCode::Unrepresentable,
         "no element has extension " + u.brace(c));
  return *id;
}

ElemId reify(const Frame& f, const Class& c) { return reify(f.u(), c); }

}  // namespace stf
