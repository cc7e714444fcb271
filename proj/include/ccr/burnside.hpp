#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccr/framework.hpp"
#include "ccr/group.hpp"

namespace ccr {

// All subgroups of K (given as a subgroup of its parent), sorted by
// (order, element list).  Enumeration is closure-based: repeatedly extend
// known subgroups by one generator until nothing new appears.
std::vector<Subgroup> all_subgroups(const Subgroup& K);

// Basis bookkeeping for the Burnside ring of K: transitive K-sets up to
// isomorphism, i.e. K-conjugacy classes of subgroups of K.  Classes are
// sorted by (order, lex-minimal member), and each class representative is
// the lex-minimal subgroup in its class.
struct BurnsideBasis {
    Subgroup K;
    std::vector<Subgroup> subs;   // all subgroups, sorted
    std::vector<int> class_of;    // subs index -> class index
    std::vector<int> class_rep;   // class index -> subs index of representative

    int classes() const { return static_cast<int>(class_rep.size()); }
    const Subgroup& rep(int c) const { return subs[class_rep[c]]; }
    // Class of an arbitrary subgroup of K.
    int find_class(const Subgroup& H) const;
    // "[K/{...}]" with the representative's element indices.
    std::string label(int c) const;
};

BurnsideBasis burnside_basis(const Subgroup& K);

// Integer coefficient vectors on the basis classes of the target ring.

// [K/A] * [K/B] = sum over double cosets AxB in K of [K/(A cap xBx^-1)].
std::vector<long> burnside_mul(const BurnsideBasis& B, int c1, int c2);
// Restriction along U <= K: [K/H] |-> sum over UxH of [U/(U cap xHx^-1)].
std::vector<long> burnside_restrict(const BurnsideBasis& BK, const BurnsideBasis& BU, int c);
// Induction along U <= K: [U/H] |-> [K/H].
std::vector<long> burnside_induce(const BurnsideBasis& BU, const BurnsideBasis& BK, int c);
// Transport along conjugation: [K/H] |-> [xKx^-1 / xHx^-1].
std::vector<long> burnside_conj(const BurnsideBasis& BK, const BurnsideBasis& BxK, int x, int c);

// Compatibility of the three operations across every pair U <= K drawn from
// the subgroups of `top`: Frobenius reciprocity in both orders plus the
// double-coset formula for restricting an induced class.
CheckReport check_green_axioms(const Subgroup& top);

// Crossed Burnside system: component at g is the Burnside ring of the
// centralizer C(g), conjugation transports subgroup classes, and the product
// A(g) x A(h) -> A(gh) restricts both sides to C(g) cap C(h), multiplies
// there, and induces up to C(gh).
ComponentSystem crossed_burnside_system(std::shared_ptr<const FiniteGroup> G, const FieldSpec& f);

}  // namespace ccr
