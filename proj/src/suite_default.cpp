#include "lemmas.hpp"

namespace stf {

// The built-in registry. Terms are operator-language syntax; "lets" bind
// names to brute-force oracle values so each entry tests one construction
// step against independent semantics. "expect" flags gate the verify exit
// code: refuted-where-expected documents a reading that fails as printed.
const char* kDefaultSuiteJson = R"json({
  "suite": "default",
  "lemmas": [
    {
      "id": "LA-01",
      "title": "Complement from the Sheffer stroke",
      "statement": "A' = sheffer(A, A)",
      "system": "A",
      "binders": [{"name": "A"}],
      "variants": [
        {"label": "as-written", "term": "A'", "expect": "verified"}
      ],
      "oracle": "complement(env:A)"
    },
    {
      "id": "LA-02",
      "title": "The universe as a Sheffer of a set with its complement",
      "statement": "V = sheffer(A, A')",
      "system": "A",
      "binders": [{"name": "A"}],
      "variants": [
        {"label": "as-written", "term": "sheffer(A, A')", "expect": "verified"},
        {"label": "constant", "term": "V", "expect": "verified"}
      ],
      "oracle": "w()"
    },
    {
      "id": "LA-03",
      "title": "Boolean union",
      "statement": "A u B = sheffer(A', B')",
      "system": "A",
      "binders": [{"name": "A"}, {"name": "B"}],
      "variants": [
        {"label": "as-written", "term": "A \\/ B", "expect": "verified"}
      ],
      "oracle": "union(env:A,env:B)"
    },
    {
      "id": "LA-04",
      "title": "Boolean intersection",
      "statement": "A n B = (A' u B')'   [printed as (A' u B)']",
      "system": "A",
      "binders": [{"name": "A"}, {"name": "B"}],
      "variants": [
        {"label": "as-printed", "term": "((A') \\/ B)'", "expect": "refuted"},
        {"label": "repaired", "term": "((A') \\/ (B'))'", "expect": "verified"}
      ],
      "oracle": "intersect(env:A,env:B)"
    },
    {
      "id": "LA-05",
      "title": "Boolean difference",
      "statement": "A \\ B = A n B'",
      "system": "A",
      "binders": [{"name": "A"}, {"name": "B"}],
      "variants": [
        {"label": "as-written", "term": "A \\ B", "expect": "verified"}
      ],
      "oracle": "diff(env:A,env:B)"
    },
    {
      "id": "LA-06",
      "title": "Unordered pair as union of singletons",
      "statement": "{A, B} = {A} u {B}",
      "system": "A",
      "binders": [{"name": "A"}, {"name": "B"}],
      "variants": [
        {"label": "as-written", "term": "{A, B}", "expect": "verified"}
      ],
      "oracle": "pair_of(env:A,env:B)"
    },
    {
      "id": "LA-07",
      "title": "Power set via pairs meeting the complement",
      "statement": "P(A) = (Un(({{A'}} : (V:V)) n X))' for a filter X",
      "system": "A",
      "binders": [{"name": "A"}],
      "variants": [
        {"label": "cap-repair", "term": "P(A)", "expect": "any"},
        {"label": "as-printed", "term": "P(A)", "choices": {"P": 1}, "expect": "any"},
        {"label": "empty-complement", "term": "P(A)", "choices": {"P": 2}, "expect": "any"}
      ],
      "oracle": "powerset(env:A)",
      "frames": [[2, 2, 0], [0, 4, 0], [0, 4, 2]]
    },
    {
      "id": "LA-08",
      "title": "V : V collects exactly the pairs",
      "statement": "2* = V : V = all one- and two-membered sets",
      "system": "A",
      "variants": [
        {"label": "as-written", "term": "V : V", "expect": "verified"}
      ],
      "oracle": "pairs()"
    },
    {
      "id": "LA-09",
      "title": "H: pairs of pairs",
      "statement": "H = P(2*) n 2*",
      "system": "A",
      "lets": [{"name": "PT", "value": "powerset(pairs())"}],
      "variants": [
        {"label": "semantic", "term": "PT /\\ (V : V)", "expect": "verified"}
      ],
      "oracle": "uprod(pairs(),pairs())"
    },
    {
      "id": "LA-10",
      "title": "G, I, J intermediates",
      "statement": "G = P((2*)') n 2*; I = (G:V) n (H:V); J = G minus intersecting pairs",
      "system": "A",
      "lets": [
        {"name": "Gs", "value": "uprod(complement(pairs()),complement(pairs()))"},
        {"name": "Hs", "value": "uprod(pairs(),pairs())"},
        {"name": "PG", "value": "powerset(complement(pairs()))"}
      ],
      "variants": [
        {"label": "G", "term": "PG /\\ (V : V)",
         "oracle": "uprod(complement(pairs()),complement(pairs()))", "expect": "verified"},
        {"label": "I", "term": "(Gs : V) /\\ (Hs : V)",
         "oracle": "uprod(complement(pairs()),pairs())", "expect": "verified"},
        {"label": "J", "term": "Gs \\ {&}",
         "oracle": "diff(uprod(complement(pairs()),complement(pairs())),cap_pairs())",
         "expect": "verified"}
      ]
    },
    {
      "id": "LA-11",
      "title": "Frege 2 from J and I",
      "statement": "2 = Un((J : (I n X)) n X) n 2* for a filter X",
      "system": "A",
      "lets": [
        {"name": "Jl", "value": "diff(uprod(complement(pairs()),complement(pairs())),cap_pairs())"},
        {"name": "Il", "value": "uprod(complement(pairs()),pairs())"}
      ],
      "variants": [
        {"label": "cap-repair", "term": "(Un((Jl : (Il /\\ {&})) /\\ {&})) /\\ (V : V)", "expect": "any"},
        {"label": "as-printed", "term": "(Un((Jl : (Il /\\ {{}})) /\\ {{}})) /\\ (V : V)", "expect": "any"},
        {"label": "empty-complement", "term": "(Un((Jl : (Il /\\ ({{}})')) /\\ ({{}})')) /\\ (V : V)", "expect": "any"}
      ],
      "oracle": "frege(2)"
    },
    {
      "id": "LA-12",
      "title": "Frege 1 as pairs minus doubletons",
      "statement": "1 = 2* \\ 2",
      "system": "A",
      "lets": [{"name": "two", "value": "frege(2)"}],
      "variants": [
        {"label": "semantic-two", "term": "(V : V) \\ two", "expect": "verified"},
        {"label": "full-chain", "term": "1", "expect": "any"}
      ],
      "oracle": "frege(1)"
    },
    {
      "id": "LA-13",
      "title": "Singleton power",
      "statement": "X^1 = P(X) n 1",
      "system": "A",
      "binders": [{"name": "X"}],
      "lets": [
        {"name": "PX", "value": "powerset(env:X)"},
        {"name": "one", "value": "frege(1)"}
      ],
      "variants": [
        {"label": "semantic", "term": "PX /\\ one", "expect": "verified"},
        {"label": "full-chain", "term": "X^1", "expect": "any"}
      ],
      "oracle": "singletons(env:X)"
    },
    {
      "id": "LA-14",
      "title": "Diagonal as the singleton power of 1",
      "statement": "[=] = 1^1",
      "system": "A",
      "lets": [
        {"name": "one", "value": "frege(1)"},
        {"name": "pone", "value": "powerset(frege(1))"}
      ],
      "variants": [
        {"label": "semantic", "term": "pone /\\ one", "expect": "verified"},
        {"label": "full-chain", "term": "[=]", "expect": "any"}
      ],
      "oracle": "diagonal()"
    },
    {
      "id": "LA-15",
      "title": "Domains of Kuratowski relations",
      "statement": "dom(R) = Un(Un(R) n 1)",
      "system": "A",
      "binders": [{"name": "R", "domain": "krels"}],
      "lets": [{"name": "one", "value": "frege(1)"}],
      "variants": [
        {"label": "semantic-one", "term": "Un((Un(R)) /\\ one)", "expect": "verified"},
        {"label": "full-chain", "term": "dom(R)", "expect": "any"}
      ],
      "oracle": "domain(env:R)"
    },
    {
      "id": "LA-16",
      "title": "Unordered products from singleton powers",
      "statement": "A*B = (A^1 : V) n (B^1 : V)",
      "system": "A",
      "binders": [{"name": "A"}, {"name": "B"}],
      "lets": [
        {"name": "A1", "value": "singletons(env:A)"},
        {"name": "B1", "value": "singletons(env:B)"}
      ],
      "variants": [
        {"label": "unconditioned", "term": "(A1 : V) /\\ (B1 : V)", "expect": "refuted"},
        {"label": "disjoint", "term": "(A1 : V) /\\ (B1 : V)", "adjust": "disjoint:A,B", "expect": "verified"}
      ],
      "oracle": "uprod(env:A,env:B)"
    },
    {
      "id": "LA-17",
      "title": "Cartesian products",
      "statement": "A x B = (A^1 * (A*B)) n X for a filter X",
      "system": "A",
      "binders": [{"name": "A"}, {"name": "B"}],
      "binder_slice": "ksupport",
      "lets": [
        {"name": "UP", "value": "uprod(singletons(env:A),uprod(env:A,env:B))"}
      ],
      "variants": [
        {"label": "cap-repair", "term": "UP /\\ {&}", "expect": "verified"},
        {"label": "as-printed", "term": "UP /\\ {{}}", "expect": "any"},
        {"label": "empty-complement", "term": "UP /\\ ({{}})'", "expect": "any"}
      ],
      "oracle": "cartesian(env:A,env:B)"
    },
    {
      "id": "LA-18",
      "title": "Ordered intersection relation set",
      "statement": "[n] = (1^1 * X) n X for a filter X",
      "system": "A",
      "lets": [
        {"name": "U0", "value": "uprod(singletons(frege(1)),cap_pairs())"},
        {"name": "U1", "value": "uprod(singletons(frege(1)),sing_of(empty()))"},
        {"name": "U2", "value": "uprod(singletons(frege(1)),complement(sing_of(empty())))"}
      ],
      "variants": [
        {"label": "cap-repair", "term": "U0 /\\ {&}", "expect": "any"},
        {"label": "as-printed", "term": "U1 /\\ {{}}", "expect": "any"},
        {"label": "empty-complement", "term": "U2 /\\ ({{}})'", "expect": "any"}
      ],
      "oracle": "kcap()"
    },
    {
      "id": "LA-19",
      "title": "First projection relation set",
      "statement": "pi1 = (1^1 >< V) n [n]",
      "system": "A",
      "lets": [
        {"name": "C", "value": "cartesian(singletons(frege(1)),w())"},
        {"name": "K", "value": "kcap()"}
      ],
      "variants": [
        {"label": "plain-V", "term": "C /\\ K", "expect": "any"}
      ],
      "oracle": "proj1()"
    },
    {
      "id": "LA-20",
      "title": "Frege zero",
      "statement": "0 = (Un(X))' for a filter X",
      "system": "A",
      "variants": [
        {"label": "cap-repair", "term": "0", "oracle": "zero(1)", "expect": "any"},
        {"label": "cap-repair-sets-only", "term": "0", "oracle": "zero(0)", "expect": "any"},
        {"label": "as-printed", "term": "0", "choices": {"a.0": 1}, "oracle": "zero(1)", "expect": "any"},
        {"label": "empty-complement", "term": "0", "choices": {"a.0": 2}, "oracle": "zero(1)", "expect": "any"}
      ]
    },
    {
      "id": "LA-21",
      "title": "Membership tagging, L, and composing the singleton-intersection set",
      "statement": "{e*} = (1^1 * V) n X; L = Un((1^1)^1 : {e*}); a closed form for {n1} : {n1}",
      "system": "A",
      "lets": [
        {"name": "UE", "value": "uprod(singletons(frege(1)),w())"},
        {"name": "SS", "value": "singletons(singletons(frege(1)))"},
        {"name": "ES", "value": "eps_star()"},
        {"name": "Q", "value": "intersect(uprod(diff(w(),union(zero(1),frege(1))),singletons(frege(1))),cap_pairs())"},
        {"name": "L1", "value": "l_set()"}
      ],
      "variants": [
        {"label": "eps-star-cap", "term": "UE /\\ {&}", "oracle": "eps_star()", "expect": "any"},
        {"label": "eps-star-printed", "term": "UE /\\ {{}}", "oracle": "eps_star()", "expect": "any"},
        {"label": "L-set", "term": "Un(SS : ES)", "oracle": "l_set()", "expect": "any"},
        {"label": "cap1-composition", "term": "((Q : Q) /\\ L1) \\/ (Q \\/ SS)",
         "oracle": "comp(cap1(),cap1())", "expect": "any"}
      ]
    },
    {
      "id": "LA-22",
      "title": "Stage terms for the ordered relative product",
      "statement": "R1|S = R1:S and the printed stage terms (2)-(5)",
      "system": "A",
      "binders": [{"name": "R", "domain": "krels"}, {"name": "S", "domain": "krels"}],
      "lets": [
        {"name": "DG", "value": "diagonal()"},
        {"name": "R1c", "value": "seg_r1(env:R,env:S)"},
        {"name": "R2c", "value": "seg_r2(env:R,env:S)"},
        {"name": "R3c", "value": "seg_r3(env:R,env:S)"},
        {"name": "S1c", "value": "seg_s1(env:R,env:S)"},
        {"name": "S2c", "value": "seg_s2(env:R,env:S)"},
        {"name": "S3c", "value": "seg_s3(env:R,env:S)"}
      ],
      "variants": [
        {"label": "stage1", "term": "R1c : S",
         "oracle": "relprod(seg_r1(env:R,env:S),env:S)", "expect": "verified"},
        {"label": "stage2", "term": "((((Un(R2c \\/ R3c)) /\\ DG) : (Un(S1c))) * DG) /\\ (R2c \\/ R3c)",
         "oracle": "relprod(union(seg_r2(env:R,env:S),seg_r3(env:R,env:S)),seg_s1(env:R,env:S))",
         "expect": "any"},
        {"label": "stage3", "term": "((Un(R2c)) /\\ DG)^1",
         "oracle": "relprod(seg_r2(env:R,env:S),seg_s2(env:R,env:S))", "expect": "any"},
        {"label": "stage4",
         "term": "((((R3c) : ((DG^11) /\\ {DG})) \\ {DG}) : ((((DG^11) /\\ {DG}) : ((((S2c) \\/ (S3c)) : ((DG^11) /\\ {DG})) \\ {DG})) \\ (DG^1))) /\\ {DG}",
         "oracle": "relprod(seg_r3(env:R,env:S),union(seg_s2(env:R,env:S),seg_s3(env:R,env:S)))",
         "expect": "any"},
        {"label": "stage5",
         "term": "((((R2c) : ((DG^11) /\\ {DG})) \\ {DG}) : ((((DG^11) /\\ {DG}) : (((S3c) : ((DG^11) /\\ {DG})) \\ {DG})) \\ (DG^1))) /\\ {&}",
         "oracle": "relprod(seg_r2(env:R,env:S),seg_s3(env:R,env:S))", "expect": "any"}
      ]
    },
    {
      "id": "LA-23",
      "title": "Five-stage decomposition of the relative product",
      "statement": "R|S = (R1|S) u ((R2 u R3)|S1) u (R2|S2) u (R3|(S2 u S3)) u (R2|S3)",
      "system": "A",
      "binders": [{"name": "R", "domain": "krels"}, {"name": "S", "domain": "krels"}],
      "variants": [
        {"label": "semantic-stages", "lhs": "relprod(env:R,env:S)", "expect": "verified"}
      ],
      "oracle": "stage_union(env:R,env:S)",
      "frames": [[2, 2, 2], [0, 4, 2]]
    },
    {
      "id": "LA-24",
      "title": "Inclusion relation set",
      "statement": "[c] = (((1) n [n]) | ((1 >< V) n [n]'))' n (V >< V)",
      "system": "A",
      "lets": [
        {"name": "RPc", "value": "relprod(intersect(frege(1),kcap()),intersect(cartesian(frege(1),w()),complement(kcap())))"},
        {"name": "RP2", "value": "relprod(intersect(singletons(frege(1)),kcap()),intersect(cartesian(frege(1),w()),complement(kcap())))"},
        {"name": "VV", "value": "cartesian(w(),w())"}
      ],
      "variants": [
        {"label": "plain-1", "term": "(RPc)' /\\ VV", "expect": "any"},
        {"label": "one-one", "term": "(RP2)' /\\ VV", "expect": "any"}
      ],
      "oracle": "inclusion()"
    },
    {
      "id": "LA-25",
      "title": "Intersection by a singleton element",
      "statement": "[n1] = ((V >< 1^(1^2)) n [n]) | ((1^(1^2) >< V) n [n])",
      "system": "A",
      "variants": [
        {"label": "semantic-adopted",
         "lhs": "relprod(intersect(cartesian(w(),singletons(singletons(frege(1)))),kcap()),intersect(cartesian(singletons(singletons(frege(1))),w()),kcap()))",
         "expect": "any"},
        {"label": "term-chain", "term": "[&1]", "expect": "any"}
      ],
      "oracle": "kcap1()"
    },
    {
      "id": "LA-26",
      "title": "Converses",
      "statement": "R^-1 = dom([-1] | ((R >< R) n [=]))",
      "system": "A",
      "binders": [{"name": "R", "domain": "krels"}],
      "samples": 50,
      "lets": [
        {"name": "RP2", "value": "relprod(inv_rel(),intersect(cartesian(env:R,env:R),diagonal()))"},
        {"name": "onec", "value": "frege(1)"}
      ],
      "variants": [
        {"label": "semantic-route", "term": "Un((Un(RP2)) /\\ onec)", "expect": "any"},
        {"label": "term-chain", "term": "R^-1", "expect": "any"}
      ],
      "oracle": "converse(env:R)"
    },
    {
      "id": "LA-27",
      "title": "Second projection relation set",
      "statement": "pi2 = pi1 | [-1]",
      "system": "A",
      "variants": [
        {"label": "semantic", "lhs": "relprod(proj1(),inv_rel())", "expect": "any"}
      ],
      "oracle": "proj2()"
    },
    {
      "id": "LA-28",
      "title": "Kuratowski images",
      "statement": "R^k = (1^(1^2) * R) n {n}",
      "system": "A",
      "binders": [{"name": "R", "domain": "krels"}],
      "samples": 50,
      "lets": [
        {"name": "UPk", "value": "uprod(singletons(singletons(frege(1))),env:R)"}
      ],
      "variants": [
        {"label": "adopted-reading", "term": "UPk /\\ {&}", "expect": "any"},
        {"label": "term-chain", "term": "R^k", "expect": "any"}
      ],
      "oracle": "kimage(env:R)"
    },
    {
      "id": "LA-29",
      "title": "Singleton images",
      "statement": "R! = (R^k | ((R^-1)^k)^-1) \\ (1^(1^2) n (R^k)')",
      "system": "A",
      "binders": [{"name": "R", "domain": "krels"}],
      "samples": 50,
      "variants": [
        {"label": "semantic-route",
         "lhs": "diff(relprod(kimage(env:R),converse(kimage(converse(env:R)))),intersect(singletons(singletons(frege(1))),complement(kimage(env:R))))",
         "expect": "any"},
        {"label": "term-chain", "term": "R^!", "expect": "any"}
      ],
      "oracle": "simage(env:R)"
    },
    {
      "id": "LB-01",
      "title": "Primitive clauses match their defining conditions",
      "statement": "each primitive equals the comprehension over its clause",
      "system": "B",
      "binders": [
        {"name": "A"}, {"name": "a"}, {"name": "b"},
        {"name": "R"}, {"name": "S"}
      ],
      "variants": [
        {"label": "complements", "term": "compl(A)",
         "oracle": {"var": "y", "formula": "~(y in A)"}, "expect": "verified"},
        {"label": "pairing", "term": "pairset(a, b)",
         "oracle": {"var": "y", "formula": "y = a | y = b"}, "expect": "verified"},
        {"label": "set-union", "term": "Un(A)",
         "oracle": {"var": "y", "formula": "exists m in A (y in m)"}, "expect": "verified"},
        {"label": "frege-1-star", "term": "1*",
         "oracle": {"var": "y", "formula": "exists z forall m in y (m = z)"}, "expect": "verified"},
        {"label": "preproduct", "term": "R ! S",
         "oracle": {"var": "y", "formula": "exists r in R (exists s in S (forall z in y (z in r | z in s)))"},
         "expect": "verified"},
        {"label": "cap-general", "term": "{&b}",
         "oracle": {"var": "y", "formula": "exists z forall m in y (z in m)"}, "expect": "verified"}
      ]
    },
    {
      "id": "LB-02",
      "title": "Frege naturals by preproduct recursion",
      "statement": "1 = 1* \\ 0; 2 = (1!1) \\ 1*; 3 = (2!1) \\ (1* u 2)",
      "system": "B",
      "lets": [
        {"name": "zeroc", "value": "zero(1)"},
        {"name": "onec", "value": "frege(1)"},
        {"name": "twoc", "value": "frege(2)"},
        {"name": "threec", "value": "frege(3)"}
      ],
      "variants": [
        {"label": "n1-class-difference", "term": "1* \\ zeroc", "oracle": "frege(1)", "expect": "verified"},
        {"label": "n1-as-printed", "term": "1* \\ {zeroc}", "oracle": "frege(1)", "expect": "any"},
        {"label": "n1-zero-chain", "term": "1", "oracle": "frege(1)", "expect": "any"},
        {"label": "n2", "term": "(onec ! onec) \\ 1*", "oracle": "frege(2)", "expect": "verified"},
        {"label": "n3", "term": "(twoc ! onec) \\ (1* \\/ twoc)", "oracle": "frege(3)", "expect": "verified"},
        {"label": "n4", "term": "(threec ! onec) \\ ((1* \\/ twoc) \\/ threec)", "oracle": "frege(4)", "expect": "any"}
      ]
    },
    {
      "id": "LB-03",
      "title": "Singleton power from pairing and preproduct",
      "statement": "R^1 = ({R} ! {R}) n 1",
      "system": "B",
      "binders": [{"name": "R"}],
      "lets": [{"name": "onec", "value": "frege(1)"}],
      "variants": [
        {"label": "semantic-one", "term": "(({R}) ! ({R})) /\\ onec", "expect": "verified"},
        {"label": "numeral-chain", "term": "(({R}) ! ({R})) /\\ 1", "expect": "any"}
      ],
      "oracle": "singletons(env:R)"
    },
    {
      "id": "LB-04",
      "title": "Pair power",
      "statement": "R^pair = (R^1 ! R^1) \\ 0",
      "system": "B",
      "binders": [{"name": "R"}],
      "lets": [
        {"name": "R1c", "value": "singletons(env:R)"},
        {"name": "zeroc", "value": "zero(1)"}
      ],
      "variants": [
        {"label": "class-difference", "term": "(R1c ! R1c) \\ zeroc", "expect": "verified"},
        {"label": "as-printed", "term": "(R1c ! R1c) \\ {zeroc}", "expect": "any"}
      ],
      "oracle": "uprod(env:R,env:R)"
    },
    {
      "id": "LB-05",
      "title": "Corrected unordered product",
      "statement": "R*S = ((R^1 ! S^1) \\ ((R\\S)^pair u (S\\R)^pair)) \\ 0",
      "system": "B",
      "binders": [{"name": "R"}, {"name": "S"}],
      "lets": [
        {"name": "R1c", "value": "singletons(env:R)"},
        {"name": "S1c", "value": "singletons(env:S)"},
        {"name": "RmSp", "value": "uprod(diff(env:R,env:S),diff(env:R,env:S))"},
        {"name": "SmRp", "value": "uprod(diff(env:S,env:R),diff(env:S,env:R))"},
        {"name": "RcSp", "value": "uprod(intersect(env:R,env:S),intersect(env:R,env:S))"},
        {"name": "zeroc", "value": "zero(1)"}
      ],
      "variants": [
        {"label": "difference-reading", "term": "((R1c ! S1c) \\ (RmSp \\/ SmRp)) \\ zeroc", "expect": "verified"},
        {"label": "as-printed", "term": "((R1c ! S1c) \\ (RcSp \\/ RcSp)) \\ zeroc", "expect": "any"}
      ],
      "oracle": "uprod(env:R,env:S)"
    },
    {
      "id": "LB-06",
      "title": "Triple unordered product",
      "statement": "X*Y*Z = ((X^1 ! Y^1 ! Z^1) n 3) u ((XnY)*Z) u ((XnZ)*Y) u ((YnZ)*X) u (XnYnZ)^1",
      "system": "B",
      "binders": [{"name": "X"}, {"name": "Y"}, {"name": "Z"}],
      "lets": [
        {"name": "X1", "value": "singletons(env:X)"},
        {"name": "Y1", "value": "singletons(env:Y)"},
        {"name": "Z1", "value": "singletons(env:Z)"},
        {"name": "threec", "value": "frege(3)"},
        {"name": "XYz", "value": "uprod(intersect(env:X,env:Y),env:Z)"},
        {"name": "XZy", "value": "uprod(intersect(env:X,env:Z),env:Y)"},
        {"name": "YZx", "value": "uprod(intersect(env:Y,env:Z),env:X)"},
        {"name": "XYZ1", "value": "singletons(intersect(intersect(env:X,env:Y),env:Z))"}
      ],
      "variants": [
        {"label": "semantic", "term": "(((X1 ! Y1) ! Z1) /\\ threec) \\/ ((XYz \\/ XZy) \\/ (YZx \\/ XYZ1))", "expect": "verified"},
        {"label": "numeral-chain", "term": "triple(X, Y, Z)", "expect": "any"}
      ],
      "oracle": "triple_prod(env:X,env:Y,env:Z)"
    },
    {
      "id": "LB-07",
      "title": "Workup of the easy composition cases",
      "statement": "R:S(1,1,1) = (Rn1)n(Sn1); R:S(1,2,2) = Un((R*S) n (1*2) n {n}) n 2; R:S(2,2,1) = (Un((Rn2)n(Sn2)))^1",
      "system": "B",
      "binders": [{"name": "R", "domain": "urels"}, {"name": "S", "domain": "urels"}],
      "lets": [
        {"name": "onec", "value": "frege(1)"},
        {"name": "twoc", "value": "frege(2)"},
        {"name": "RS", "value": "uprod(env:R,env:S)"},
        {"name": "OT", "value": "uprod(frege(1),frege(2))"}
      ],
      "variants": [
        {"label": "case-111", "term": "(R /\\ onec) /\\ (S /\\ onec)",
         "oracle": "comp_case1(env:R,env:S)", "expect": "verified"},
        {"label": "case-122", "term": "(Un((RS /\\ OT) /\\ {&})) /\\ twoc",
         "oracle": "comp_case2(env:R,env:S)", "expect": "any"},
        {"label": "case-221",
         "term": "(({Un((R /\\ twoc) /\\ (S /\\ twoc))}) ! ({Un((R /\\ twoc) /\\ (S /\\ twoc))})) /\\ onec",
         "oracle": "comp_case3(env:R,env:S)", "expect": "verified"}
      ]
    },
    {
      "id": "LB-08",
      "title": "Deleting two reference elements from a pair set",
      "statement": "X del(u,w) = X n ((V \\ {u,w}) * (V \\ {u,w}))",
      "system": "B",
      "binders": [{"name": "X", "domain": "urels"}],
      "lets": [
        {"name": "uc", "value": "zero(1)"},
        {"name": "wc", "value": "frege(1)"},
        {"name": "VmUW2", "value": "uprod(diff(w(),pair_of(zero(1),frege(1))),diff(w(),pair_of(zero(1),frege(1))))"}
      ],
      "variants": [
        {"label": "semantic-product", "term": "X /\\ VmUW2", "expect": "any"},
        {"label": "term-chain", "term": "xdel(X, uc, wc)", "expect": "any"}
      ],
      "oracle": "xdel(env:X,zero(1),frege(1))",
      "frames": [[2, 2, 2], [0, 4, 2]]
    },
    {
      "id": "LB-09",
      "title": "Chained-pair carrier for the hard composition case",
      "statement": "R^S(u,w) = (trio intersection) n {n}1",
      "system": "B",
      "binders": [{"name": "R", "domain": "urels"}, {"name": "S", "domain": "urels"}],
      "lets": [
        {"name": "uc", "value": "zero(1)"},
        {"name": "wc", "value": "frege(1)"},
        {"name": "C1v", "value": "cap1()"}
      ],
      "variants": [
        {"label": "term-chain", "term": "wedge(R, S, uc, wc, C1v)", "expect": "any"}
      ],
      "oracle": "wedge_target(env:R,env:S,zero(1),frege(1))",
      "frames": [[2, 2, 2], [0, 4, 2]]
    },
    {
      "id": "LB-10",
      "title": "Hard composition case with reference elements",
      "statement": "R:S(2,2,2,(u,w)) = Un(R^S(u,w)) n 2",
      "system": "B",
      "binders": [{"name": "R", "domain": "urels"}, {"name": "S", "domain": "urels"}],
      "lets": [
        {"name": "uc", "value": "zero(1)"},
        {"name": "wc", "value": "frege(1)"},
        {"name": "C1v", "value": "cap1()"},
        {"name": "twoc", "value": "frege(2)"}
      ],
      "variants": [
        {"label": "term-chain", "term": "(Un(wedge(R, S, uc, wc, C1v))) /\\ twoc", "expect": "any"}
      ],
      "oracle": "case4x(env:R,env:S,zero(1),frege(1))",
      "frames": [[2, 2, 2], [0, 4, 2]]
    },
    {
      "id": "LB-11",
      "title": "Union over the four reference-element choices",
      "statement": "R:S(2,2,2) = the (0,1) u (2,3) u (4,5) u (6,7) cases",
      "system": "B",
      "binders": [{"name": "R", "domain": "urels"}, {"name": "S", "domain": "urels"}],
      "variants": [
        {"label": "semantic-union",
         "lhs": "union(union(case4x(env:R,env:S,zero(1),frege(1)),case4x(env:R,env:S,frege(2),frege(3))),union(case4x(env:R,env:S,frege(4),frege(5)),case4x(env:R,env:S,frege(6),frege(7))))",
         "expect": "any"}
      ],
      "oracle": "comp_case4(env:R,env:S)",
      "frames": [[2, 2, 2], [0, 4, 2]]
    },
    {
      "id": "LB-12",
      "title": "Composition equals the union of its four cases",
      "statement": "R:S = R:S(1,1,1) u R:S(1,2,2) u R:S(2,2,1) u R:S(2,2,2)",
      "system": "B",
      "binders": [{"name": "R", "domain": "urels"}, {"name": "S", "domain": "urels"}],
      "variants": [
        {"label": "primitive-comp", "term": "R : S", "expect": "verified"}
      ],
      "oracle": "comp_cases(env:R,env:S)"
    }
  ]
})json";

}  // namespace stf
