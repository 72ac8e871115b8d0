#ifndef STRATIFORGE_ORACLE_HPP
#define STRATIFORGE_ORACLE_HPP

#include <optional>
#include <vector>

#include "universe.hpp"

namespace stf {

// Ordered pairs in the Kuratowski encoding {{a},{a,b}}.
struct OrderedPair {
  ElemId a, b;
  bool operator==(const OrderedPair& o) const { return a == o.a && b == o.b; }
  bool operator<(const OrderedPair& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

// Decoding is unique: {{a}} is (a,a); {{a},{a,b}} with a != b is (a,b).
std::optional<OrderedPair> decode_kpair(const Universe& u, ElemId e);
std::vector<OrderedPair> decode_krel(const Universe& u, const Class& rel);
ElemId encode_kpair(const Frame& f, ElemId a, ElemId b);  // Unrepresentable
Class encode_krel(const Frame& f, std::vector<OrderedPair> pairs);

// Disjoint split of two Kuratowski relations: identity pairs, doubleton
// pairs whose converse is present in the other relation, and the rest.
struct Segments {
  std::vector<OrderedPair> r1, r2, r3, s1, s2, s3;
};
Segments segment_relation(const Frame& f, const Class& r, const Class& s);

// Brute-force semantics computed straight from set membership; these never
// evaluate operator terms.
namespace oracle {

Class complement_of(const Frame& f, const Class& a);
Class frege(const Frame& f, uint32_t n);
Class zero(const Frame& f, bool include_atoms);
Class pairs_all(const Frame& f);  // extension size 1 or 2
Class powerset(const Frame& f, const Class& a);
Class singletons_of(const Frame& f, const Class& a);
Class sing_of(const Frame& f, const Class& a);              // {reify(a)}
Class pair_of(const Frame& f, const Class& a, const Class& b);
Class unordered_product(const Frame& f, const Class& a, const Class& b);
Class triple_product(const Frame& f, const Class& x, const Class& y,
                     const Class& z);
Class cap_pairs(const Frame& f);
Class cap_general(const Frame& f);
Class cap1(const Frame& f);
Class preproduct_closure(const Frame& f, const Class& r, const Class& s);
Class l_set(const Frame& f);

// Kuratowski relation sets, as filters over existing elements of W.
Class diagonal(const Frame& f);
Class kcap(const Frame& f);        // components intersect
Class kcap1(const Frame& f);       // components share a singleton member
Class inclusion(const Frame& f);   // first component's extension inside second's
Class eps_star(const Frame& f);    // ({a}, x) with a in x
Class proj1(const Frame& f);       // ({{a}}, p) for pairs p with first a
Class proj2(const Frame& f);
Class inv_rel(const Frame& f);     // (p, q) with q the converse pair of p
Class cartesian(const Frame& f, const Class& a, const Class& b);

// Ordered-pair semantics re-encoded as Kuratowski elements (these reify and
// may report Unrepresentable).
Class domain(const Frame& f, const Class& r);  // plain class of first parts
Class converse(const Frame& f, const Class& r);
Class relprod(const Frame& f, const Class& r, const Class& s);
Class kuratowski_image(const Frame& f, const Class& r);
Class singleton_image(const Frame& f, const Class& r);
Class stage_union(const Frame& f, const Class& r, const Class& s);

// Case split of the unordered relative product of two pair-set relations.
Class comp_case1(const Frame& f, const Class& r, const Class& s);
Class comp_case2(const Frame& f, const Class& r, const Class& s);
Class comp_case3(const Frame& f, const Class& r, const Class& s);
Class comp_case4(const Frame& f, const Class& r, const Class& s);
Class comp_case4_excluding(const Frame& f, const Class& r, const Class& s,
                           const Class& u_class, const Class& w_class);
Class comp_cases(const Frame& f, const Class& r, const Class& s);
// Direct clause semantics of the unordered relative product.
Class comp_direct(const Frame& f, const Class& r, const Class& s);
Class xdel(const Frame& f, const Class& x, const Class& u_class,
           const Class& w_class);
Class wedge_target(const Frame& f, const Class& r, const Class& s,
                   const Class& u_class, const Class& w_class);

}  // namespace oracle

}  // namespace stf

#endif
