#include "stratify.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "parse.hpp"
#include "universe.hpp"

namespace stf {

int TypeAssignment::level_of(const std::string& v) const {
  for (const auto& [name, lvl] : levels)
    if (name == v) return lvl;
  fail(ErrorCode::Internal, "no level for " + v);
}

namespace {

void collect_rec(const FormulaPtr& f, std::vector<LevelConstraint>& out) {
  switch (f->op) {
    case FormulaOp::Mem:
      out.push_back({f->lhs, f->rhs, 1, f->lhs + " in " + f->rhs});
      return;
    case FormulaOp::Eq:
      if (f->lhs != f->rhs)
        out.push_back({f->lhs, f->rhs, 0, f->lhs + " = " + f->rhs});
      return;
    default:
      for (const auto& a : f->args) collect_rec(a, out);
  }
}

// Offset-carrying union-find: level(x) = level(root(x)) + off(x).
struct OffsetUnionFind {
  std::map<std::string, std::string> parent;
  std::map<std::string, int> off;

  void ensure(const std::string& v) {
    if (!parent.count(v)) {
      parent[v] = v;
      off[v] = 0;
    }
  }

  std::pair<std::string, int> find(const std::string& v) {
    if (parent[v] == v) return {v, 0};
    auto [root, roff] = find(parent[v]);
    parent[v] = root;
    off[v] += roff;
    return {root, off[v]};
  }

  // level(y) = level(x) + d. Returns false on contradiction.
  bool merge(const std::string& x, const std::string& y, int d) {
    ensure(x);
    ensure(y);
    auto [rx, ox] = find(x);
    auto [ry, oy] = find(y);
    if (rx == ry) return oy == ox + d;
    parent[ry] = rx;
    off[ry] = ox + d - oy;
    return true;
  }
};

}  // namespace

std::vector<LevelConstraint> collect_constraints(const FormulaPtr& f) {
  std::vector<LevelConstraint> out;
  collect_rec(f, out);
  return out;
}

StratifyResult stratify_formula(const FormulaPtr& f) {
  auto constraints = collect_constraints(f);
  OffsetUnionFind uf;
  // Constraint graph retained for witness reconstruction.
  std::map<std::string, std::vector<std::pair<size_t, bool>>> adj;

  for (size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    if (!uf.merge(c.x, c.y, c.offset)) {
      // A path x ~> y already forces a different offset; close the cycle.
      std::map<std::string, std::pair<size_t, bool>> via;
      std::map<std::string, bool> seen;
      std::deque<std::string> queue{c.x};
      seen[c.x] = true;
      while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        if (v == c.y) break;
        for (auto [ei, fwd] : adj[v]) {
          const auto& e = constraints[ei];
          std::string next = fwd ? e.y : e.x;
          if (seen[next]) continue;
          seen[next] = true;
          via[next] = {ei, fwd};
          queue.push_back(next);
        }
      }
      ConflictWitness w;
      int path_offset = 0;
      std::string v = c.y;
      std::vector<LevelConstraint> path;
      while (v != c.x) {
        auto [ei, fwd] = via.at(v);
        const auto& e = constraints[ei];
        path.push_back(e);
        path_offset += fwd ? e.offset : -e.offset;
        v = fwd ? e.x : e.y;
      }
      std::reverse(path.begin(), path.end());
      w.cycle = std::move(path);
      w.cycle.push_back(c);
      // Walking x ~> y and returning through the new constraint nets a
      // nonzero shift of level(x) against itself.
      w.total_offset = c.offset - path_offset;
      return w;
    }
    adj[c.x].push_back({i, true});
    adj[c.y].push_back({i, false});
  }

  // Also type variables that occur only in trivial atoms (x = x) or not in
  // any atom: collect every name mentioned by the formula.
  std::vector<std::string> names;
  {
    std::deque<FormulaPtr> q{f};
    while (!q.empty()) {
      auto g = q.front();
      q.pop_front();
      if (g->op == FormulaOp::Mem || g->op == FormulaOp::Eq) {
        names.push_back(g->lhs);
        names.push_back(g->rhs);
      } else {
        if (g->op == FormulaOp::Forall || g->op == FormulaOp::Exists)
          names.push_back(g->lhs);
        for (const auto& a : g->args) q.push_back(a);
      }
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  // Normalize each component to minimum level 0.
  std::map<std::string, int> comp_min;
  std::vector<std::pair<std::string, std::pair<std::string, int>>> resolved;
  for (const auto& n : names) {
    uf.ensure(n);
    auto [root, off] = uf.find(n);
    resolved.push_back({n, {root, off}});
    auto it = comp_min.find(root);
    if (it == comp_min.end())
      comp_min[root] = off;
    else
      it->second = std::min(it->second, off);
  }
  TypeAssignment a;
  for (const auto& [n, ro] : resolved)
    a.levels.push_back({n, ro.second - comp_min[ro.first]});
  return a;
}

bool assignment_satisfies(const TypeAssignment& a, const FormulaPtr& f) {
  for (const auto& c : collect_constraints(f))
    if (a.level_of(c.y) != a.level_of(c.x) + c.offset) return false;
  return true;
}

std::string describe(const StratifyResult& r) {
  if (std::holds_alternative<TypeAssignment>(r)) {
    const auto& a = std::get<TypeAssignment>(r);
    std::string out = "stratified:";
    for (const auto& [n, lvl] : a.levels)
      out += " " + n + ":" + std::to_string(lvl);
    return out;
  }
  const auto& w = std::get<ConflictWitness>(r);
  std::string out =
      "conflict (cycle offset " + std::to_string(w.total_offset) + "):";
  for (const auto& c : w.cycle) out += " [" + c.atom + "]";
  return out;
}

}  // namespace stf
