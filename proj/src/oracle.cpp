#include "oracle.hpp"

#include <algorithm>
#include <set>

namespace stf {

std::optional<OrderedPair> decode_kpair(const Universe& u, ElemId e) {
  if (!u.is_set(e)) return std::nullopt;
  const auto& ext = u.ext(e);
  if (ext.size() == 1) {
    ElemId p = ext[0];
    if (!u.is_set(p) || u.ext(p).size() != 1) return std::nullopt;
    return OrderedPair{u.ext(p)[0], u.ext(p)[0]};
  }
  if (ext.size() == 2) {
    for (int i = 0; i < 2; ++i) {
      ElemId p = ext[i], q = ext[1 - i];
      if (!u.is_set(p) || u.ext(p).size() != 1) continue;
      if (!u.is_set(q) || u.ext(q).size() != 2) continue;
      ElemId a = u.ext(p)[0];
      const auto& qe = u.ext(q);
      if (qe[0] == a) return OrderedPair{a, qe[1]};
      if (qe[1] == a) return OrderedPair{a, qe[0]};
    }
  }
  return std::nullopt;
}

std::vector<OrderedPair> decode_krel(const Universe& u, const Class& rel) {
  std::vector<OrderedPair> out;
  for (ElemId e : rel) {
    auto p = decode_kpair(u, e);
    if (!p)
      fail(ErrorCode::Schema,
           "relation member " + u.brace(e) + " is not a Kuratowski pair");
    out.push_back(*p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElemId encode_kpair(const Frame& f, ElemId a, ElemId b) {
  ElemId sa = reify(f, Class{{a}});
  ElemId ab = reify(f, Class::from_unsorted({a, b}));
  return reify(f, Class::from_unsorted({sa, ab}));
}

Class encode_krel(const Frame& f, std::vector<OrderedPair> pairs) {
  std::vector<ElemId> ids;
  for (auto [a, b] : pairs) ids.push_back(encode_kpair(f, a, b));
  return Class::from_unsorted(std::move(ids));
}

Segments segment_relation(const Frame& f, const Class& r, const Class& s) {
  auto rp = decode_krel(f.u(), r);
  auto sp = decode_krel(f.u(), s);
  std::set<OrderedPair> rset(rp.begin(), rp.end());
  std::set<OrderedPair> sset(sp.begin(), sp.end());
  Segments out;
  for (auto p : rp) {
    if (p.a == p.b)
      out.r1.push_back(p);
    else if (sset.count(OrderedPair{p.b, p.a}))
      out.r2.push_back(p);
    else
      out.r3.push_back(p);
  }
  for (auto p : sp) {
    if (p.a == p.b)
      out.s1.push_back(p);
    else if (rset.count(OrderedPair{p.b, p.a}))
      out.s2.push_back(p);
    else
      out.s3.push_back(p);
  }
  return out;
}

namespace oracle {

namespace {

bool in_ext(const Universe& u, ElemId host, ElemId member) {
  const auto& e = u.ext(host);
  return std::binary_search(e.begin(), e.end(), member);
}

Class ext_class(const Universe& u, ElemId e) { return Class(u.ext(e)); }

std::vector<OrderedPair> raw_relprod(const std::vector<OrderedPair>& r,
                                     const std::vector<OrderedPair>& s) {
  std::vector<OrderedPair> out;
  for (auto p : r)
    for (auto q : s)
      if (p.b == q.a) out.push_back(OrderedPair{p.a, q.b});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Class complement_of(const Frame& f, const Class& a) {
  return class_difference(f.w, a);
}

Class frege(const Frame& f, uint32_t n) {
  Class out;
  for (ElemId e : f.w)
    if (f.u().is_set(e) && f.u().ext(e).size() == n) out.ids.push_back(e);
  return out;
}

Class zero(const Frame& f, bool include_atoms) {
  Class out;
  for (ElemId e : f.w)
    if (f.u().ext(e).empty() && (include_atoms || f.u().is_set(e)))
      out.ids.push_back(e);
  return out;
}

Class pairs_all(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    size_t n = f.u().is_set(e) ? f.u().ext(e).size() : 0;
    if (f.u().is_set(e) && (n == 1 || n == 2)) out.ids.push_back(e);
  }
  return out;
}

Class powerset(const Frame& f, const Class& a) {
  Class out;
  for (ElemId e : f.w)
    if (class_subset(ext_class(f.u(), e), a)) out.ids.push_back(e);
  return out;
}

Class singletons_of(const Frame& f, const Class& a) {
  Class out;
  for (ElemId e : f.w) {
    if (!f.u().is_set(e)) continue;
    const auto& ext = f.u().ext(e);
    if (ext.size() == 1 && a.contains(ext[0])) out.ids.push_back(e);
  }
  return out;
}

Class sing_of(const Frame& f, const Class& a) {
  return Class{{reify(f, a)}};
}

Class pair_of(const Frame& f, const Class& a, const Class& b) {
  return Class::from_unsorted({reify(f, a), reify(f, b)});
}

Class unordered_product(const Frame& f, const Class& a, const Class& b) {
  Class out;
  for (ElemId e : f.w) {
    if (!f.u().is_set(e)) continue;
    const auto& ext = f.u().ext(e);
    if (ext.size() == 1) {
      if (a.contains(ext[0]) && b.contains(ext[0])) out.ids.push_back(e);
    } else if (ext.size() == 2) {
      bool one_way = a.contains(ext[0]) && b.contains(ext[1]);
      bool other = a.contains(ext[1]) && b.contains(ext[0]);
      if (one_way || other) out.ids.push_back(e);
    }
  }
  return out;
}

Class triple_product(const Frame& f, const Class& x, const Class& y,
                     const Class& z) {
  Class out;
  for (ElemId e : f.w) {
    if (!f.u().is_set(e)) continue;
    const auto& ext = f.u().ext(e);
    if (ext.empty() || ext.size() > 3) continue;
    // ext must be {a,b,c} as a set for some a in X, b in Y, c in Z.
    bool found = false;
    for (ElemId a : ext) {
      if (found) break;
      if (!x.contains(a)) continue;
      for (ElemId b : ext) {
        if (found) break;
        if (!y.contains(b)) continue;
        for (ElemId c : ext) {
          if (!z.contains(c)) continue;
          std::vector<ElemId> cover{a, b, c};
          std::sort(cover.begin(), cover.end());
          cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
          if (cover == ext) {
            found = true;
            break;
          }
        }
      }
    }
    if (found) out.ids.push_back(e);
  }
  return out;
}

Class cap_pairs(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto pv = f.u().classify_pair(e);
    if (pv.tag == Universe::PairView::Tag::None) continue;
    if (!f.w.contains(pv.a) || !f.w.contains(pv.b)) continue;
    Class common =
        class_intersect(ext_class(f.u(), pv.a), ext_class(f.u(), pv.b));
    if (!class_intersect(common, f.w).empty()) out.ids.push_back(e);
  }
  return out;
}

Class cap_general(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    Class members = class_intersect(ext_class(f.u(), e), f.w);
    bool ok;
    if (members.empty()) {
      ok = !f.w.empty();
    } else {
      Class common = f.w;
      for (ElemId m : members) {
        common = class_intersect(common, ext_class(f.u(), m));
        if (common.empty()) break;
      }
      ok = !common.empty();
    }
    if (ok) out.ids.push_back(e);
  }
  return out;
}

Class cap1(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto pv = f.u().classify_pair(e);
    if (pv.tag == Universe::PairView::Tag::None) continue;
    if (!f.w.contains(pv.a) || !f.w.contains(pv.b)) continue;
    Class common = class_intersect(
        class_intersect(ext_class(f.u(), pv.a), ext_class(f.u(), pv.b)), f.w);
    bool ok = false;
    for (ElemId c : common)
      if (f.u().is_set(c) && f.u().ext(c).size() == 1) {
        ok = true;
        break;
      }
    if (ok) out.ids.push_back(e);
  }
  return out;
}

Class preproduct_closure(const Frame& f, const Class& r, const Class& s) {
  Class out;
  Class rw = class_intersect(r, f.w);
  Class sw = class_intersect(s, f.w);
  for (ElemId e : f.w) {
    Class need = class_intersect(ext_class(f.u(), e), f.w);
    bool ok = false;
    for (ElemId ri : rw) {
      if (ok) break;
      Class rem = class_difference(need, ext_class(f.u(), ri));
      if (rem.empty()) {
        ok = !sw.empty();
        continue;
      }
      for (ElemId si : sw)
        if (class_subset(rem, ext_class(f.u(), si))) {
          ok = true;
          break;
        }
    }
    if (ok) out.ids.push_back(e);
  }
  return out;
}

Class l_set(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    bool has_nonsingleton = false;
    for (ElemId m : class_intersect(ext_class(f.u(), e), f.w))
      if (!(f.u().is_set(m) && f.u().ext(m).size() == 1)) {
        has_nonsingleton = true;
        break;
      }
    if (has_nonsingleton) out.ids.push_back(e);
  }
  return out;
}

Class diagonal(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (p && p->a == p->b && f.w.contains(p->a)) out.ids.push_back(e);
  }
  return out;
}

Class kcap(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (!p || !f.w.contains(p->a) || !f.w.contains(p->b)) continue;
    Class common =
        class_intersect(ext_class(f.u(), p->a), ext_class(f.u(), p->b));
    if (!class_intersect(common, f.w).empty()) out.ids.push_back(e);
  }
  return out;
}

Class kcap1(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (!p || !f.w.contains(p->a) || !f.w.contains(p->b)) continue;
    Class common = class_intersect(
        class_intersect(ext_class(f.u(), p->a), ext_class(f.u(), p->b)), f.w);
    bool ok = false;
    for (ElemId c : common)
      if (f.u().is_set(c) && f.u().ext(c).size() == 1) {
        ok = true;
        break;
      }
    if (ok) out.ids.push_back(e);
  }
  return out;
}

Class inclusion(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (!p || !f.w.contains(p->a) || !f.w.contains(p->b)) continue;
    if (class_subset(class_intersect(ext_class(f.u(), p->a), f.w),
                     ext_class(f.u(), p->b)))
      out.ids.push_back(e);
  }
  return out;
}

Class eps_star(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (!p || !f.w.contains(p->a) || !f.w.contains(p->b)) continue;
    if (!f.u().is_set(p->a) || f.u().ext(p->a).size() != 1) continue;
    if (in_ext(f.u(), p->b, f.u().ext(p->a)[0])) out.ids.push_back(e);
  }
  return out;
}

namespace {
// {{a}}-shaped element's inner a, if that is the shape.
std::optional<ElemId> double_singleton_of(const Universe& u, ElemId e) {
  if (!u.is_set(e) || u.ext(e).size() != 1) return std::nullopt;
  ElemId inner = u.ext(e)[0];
  if (!u.is_set(inner) || u.ext(inner).size() != 1) return std::nullopt;
  return u.ext(inner)[0];
}
}  // namespace

Class proj1(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (!p) continue;
    auto tag = double_singleton_of(f.u(), p->a);
    auto inner = decode_kpair(f.u(), p->b);
    if (tag && inner && f.w.contains(p->b) && *tag == inner->a)
      out.ids.push_back(e);
  }
  return out;
}

Class proj2(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (!p) continue;
    auto tag = double_singleton_of(f.u(), p->a);
    auto inner = decode_kpair(f.u(), p->b);
    if (tag && inner && f.w.contains(p->b) && *tag == inner->b)
      out.ids.push_back(e);
  }
  return out;
}

Class inv_rel(const Frame& f) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (!p) continue;
    auto x = decode_kpair(f.u(), p->a);
    auto y = decode_kpair(f.u(), p->b);
    if (x && y && y->a == x->b && y->b == x->a) out.ids.push_back(e);
  }
  return out;
}

Class cartesian(const Frame& f, const Class& a, const Class& b) {
  Class out;
  for (ElemId e : f.w) {
    auto p = decode_kpair(f.u(), e);
    if (p && a.contains(p->a) && b.contains(p->b)) out.ids.push_back(e);
  }
  return out;
}

Class domain(const Frame& f, const Class& r) {
  std::vector<ElemId> ids;
  for (auto p : decode_krel(f.u(), r)) ids.push_back(p.a);
  return Class::from_unsorted(std::move(ids));
}

Class converse(const Frame& f, const Class& r) {
  auto rp = decode_krel(f.u(), r);
  for (auto& p : rp) std::swap(p.a, p.b);
  return encode_krel(f, std::move(rp));
}

Class relprod(const Frame& f, const Class& r, const Class& s) {
  return encode_krel(
      f, raw_relprod(decode_krel(f.u(), r), decode_krel(f.u(), s)));
}

Class kuratowski_image(const Frame& f, const Class& r) {
  std::vector<ElemId> ids;
  for (auto p : decode_krel(f.u(), r)) {
    ElemId sa = reify(f, Class{{p.a}});
    ElemId ab = reify(f, Class::from_unsorted({p.a, p.b}));
    ids.push_back(encode_kpair(f, sa, ab));
  }
  return Class::from_unsorted(std::move(ids));
}

Class singleton_image(const Frame& f, const Class& r) {
  std::vector<ElemId> ids;
  for (auto p : decode_krel(f.u(), r)) {
    ElemId sa = reify(f, Class{{p.a}});
    ElemId sb = reify(f, Class{{p.b}});
    ids.push_back(encode_kpair(f, sa, sb));
  }
  return Class::from_unsorted(std::move(ids));
}

Class stage_union(const Frame& f, const Class& r, const Class& s) {
  Segments seg = segment_relation(f, r, s);
  auto join = [](std::vector<OrderedPair> a, const std::vector<OrderedPair>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  };
  auto sp = decode_krel(f.u(), s);
  std::vector<OrderedPair> acc;
  acc = join(acc, raw_relprod(seg.r1, sp));
  acc = join(acc, raw_relprod(join(seg.r2, seg.r3), seg.s1));
  acc = join(acc, raw_relprod(seg.r2, seg.s2));
  acc = join(acc, raw_relprod(seg.r3, join(seg.s2, seg.s3)));
  acc = join(acc, raw_relprod(seg.r2, seg.s3));
  return encode_krel(f, std::move(acc));
}

namespace {

struct PairViews {
  // (a, b) readings of every pair-shaped member, both orientations.
  std::vector<std::pair<ElemId, ElemId>> views;
  std::set<std::pair<ElemId, ElemId>> lookup;
};

PairViews pair_views(const Frame& f, const Class& rel) {
  PairViews out;
  for (ElemId e : rel) {
    auto pv = f.u().classify_pair(e);
    if (pv.tag == Universe::PairView::Tag::None) continue;
    if (!f.w.contains(pv.a) || !f.w.contains(pv.b)) continue;
    out.views.push_back({pv.a, pv.b});
    out.lookup.insert({pv.a, pv.b});
    if (pv.tag == Universe::PairView::Tag::Doubleton) {
      out.views.push_back({pv.b, pv.a});
      out.lookup.insert({pv.b, pv.a});
    }
  }
  return out;
}

}  // namespace

Class comp_case1(const Frame& f, const Class& r, const Class& s) {
  Class out;
  for (ElemId e : class_intersect(r, s)) {
    if (!f.w.contains(e)) continue;
    auto pv = f.u().classify_pair(e);
    if (pv.tag == Universe::PairView::Tag::Singleton && f.w.contains(pv.a))
      out.ids.push_back(e);
  }
  return out;
}

Class comp_case2(const Frame& f, const Class& r, const Class& s) {
  std::vector<ElemId> ids;
  auto one_side = [&](const Class& singles, const Class& pairs) {
    for (ElemId e : pairs) {
      if (!f.w.contains(e)) continue;
      auto pv = f.u().classify_pair(e);
      if (pv.tag != Universe::PairView::Tag::Doubleton) continue;
      if (!f.w.contains(pv.a) || !f.w.contains(pv.b)) continue;
      for (ElemId a : {pv.a, pv.b}) {
        auto sa = f.u().find_pair(a, a);
        if (sa && f.w.contains(*sa) && singles.contains(*sa))
          ids.push_back(e);
      }
    }
  };
  one_side(r, s);
  one_side(s, r);
  return Class::from_unsorted(std::move(ids));
}

Class comp_case3(const Frame& f, const Class& r, const Class& s) {
  std::vector<ElemId> ids;
  for (ElemId e : class_intersect(r, s)) {
    if (!f.w.contains(e)) continue;
    auto pv = f.u().classify_pair(e);
    if (pv.tag != Universe::PairView::Tag::Doubleton) continue;
    if (!f.w.contains(pv.a) || !f.w.contains(pv.b)) continue;
    for (ElemId x : {pv.a, pv.b}) {
      auto sx = f.u().find_pair(x, x);
      if (sx && f.w.contains(*sx)) ids.push_back(*sx);
    }
  }
  return Class::from_unsorted(std::move(ids));
}

Class comp_case4(const Frame& f, const Class& r, const Class& s) {
  auto rv = pair_views(f, r);
  auto sv = pair_views(f, s);
  std::vector<ElemId> ids;
  for (auto [a, b] : rv.views) {
    if (a == b) continue;
    for (auto [b2, c] : sv.views) {
      if (b2 != b || b2 == c) continue;
      if (a == c) continue;
      auto y = f.u().find_pair(a, c);
      if (y && f.w.contains(*y)) ids.push_back(*y);
    }
  }
  return Class::from_unsorted(std::move(ids));
}

Class comp_case4_excluding(const Frame& f, const Class& r, const Class& s,
                           const Class& u_class, const Class& w_class) {
  ElemId ue = reify(f, u_class);
  ElemId we = reify(f, w_class);
  auto rv = pair_views(f, r);
  auto sv = pair_views(f, s);
  std::vector<ElemId> ids;
  auto banned = [&](ElemId x) { return x == ue || x == we; };
  for (auto [a, b] : rv.views) {
    if (a == b || banned(a) || banned(b)) continue;
    for (auto [b2, c] : sv.views) {
      if (b2 != b || b2 == c || a == c || banned(c)) continue;
      auto y = f.u().find_pair(a, c);
      if (y && f.w.contains(*y)) ids.push_back(*y);
    }
  }
  return Class::from_unsorted(std::move(ids));
}

Class comp_cases(const Frame& f, const Class& r, const Class& s) {
  return class_union(
      class_union(comp_case1(f, r, s), comp_case2(f, r, s)),
      class_union(comp_case3(f, r, s), comp_case4(f, r, s)));
}

Class comp_direct(const Frame& f, const Class& r, const Class& s) {
  auto rv = pair_views(f, r);
  auto sv = pair_views(f, s);
  std::vector<ElemId> ids;
  for (auto [a, b] : rv.views)
    for (auto [b2, c] : sv.views) {
      if (b2 != b) continue;
      auto y = f.u().find_pair(a, c);
      if (y && f.w.contains(*y)) ids.push_back(*y);
    }
  return Class::from_unsorted(std::move(ids));
}

Class xdel(const Frame& f, const Class& x, const Class& u_class,
           const Class& w_class) {
  ElemId ue = reify(f, u_class);
  ElemId we = reify(f, w_class);
  Class out;
  for (ElemId e : x) {
    auto pv = f.u().classify_pair(e);
    if (pv.tag == Universe::PairView::Tag::None) continue;
    if (pv.a == ue || pv.a == we || pv.b == ue || pv.b == we) continue;
    out.ids.push_back(e);
  }
  return out;
}

Class wedge_target(const Frame& f, const Class& r, const Class& s,
                   const Class& u_class, const Class& w_class) {
  ElemId ue = reify(f, u_class);
  ElemId we = reify(f, w_class);
  auto banned = [&](ElemId x) { return x == ue || x == we; };
  auto rv = pair_views(f, r);
  auto sv = pair_views(f, s);
  std::vector<ElemId> ids;
  for (auto [a, b] : rv.views) {
    if (a == b || banned(a) || banned(b)) continue;
    for (auto [b2, c] : sv.views) {
      if (b2 != b || b == c || a == c || banned(c)) continue;
      auto re = f.u().find_pair(a, b);
      auto se = f.u().find_pair(b, c);
      if (!re || !se || *re == *se) continue;
      auto y = f.u().find_pair(*re, *se);
      if (y && f.w.contains(*y)) ids.push_back(*y);
    }
  }
  return Class::from_unsorted(std::move(ids));
}

}  // namespace oracle

}  // namespace stf
