#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccr/error.hpp"

namespace ccr {

// Finite group with elements indexed 0..n-1; index 0 is the identity.
// Construction validates the full set of group axioms and produces the
// inverse table.
struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> tab;  // tab[a][b] = a*b
    std::vector<int> inv;
    std::vector<std::string> labels;  // optional element names (may be empty)

    int mul(int a, int b) const { return tab[a][b]; }
    int conj(int x, int g) const { return tab[tab[x][g]][inv[x]]; }  // x g x^-1
    int order_of(int g) const;
    long exponent() const;
    bool is_abelian() const;
    std::string label(int g) const;

    static FiniteGroup from_table(std::vector<std::vector<int>> t);
    // BFS closure of permutation generators on 0..degree-1; elements are
    // indexed in discovery order (identity first), which is deterministic.
    static FiniteGroup from_perm_generators(const std::vector<std::vector<int>>& gens, int degree);
};

// Subgroup of a fixed parent, stored as the sorted element list plus a
// membership mask.  The parent is referenced, not owned.
struct Subgroup {
    const FiniteGroup* G = nullptr;
    std::vector<int> elems;    // ascending, elems[0] == 0
    std::vector<char> member;  // size G->n

    int order() const { return static_cast<int>(elems.size()); }
    bool contains(int g) const { return member[g]; }

    static Subgroup trivial(const FiniteGroup& G);
    static Subgroup full(const FiniteGroup& G);
    static Subgroup from_elements(const FiniteGroup& G, std::vector<int> elems);  // validates closure
    static Subgroup generated(const FiniteGroup& G, const std::vector<int>& gens);

    Subgroup conjugate(int x) const;  // x S x^-1
    bool same_as(const Subgroup& o) const { return elems == o.elems; }
    bool subset_of(const Subgroup& o) const;
    Subgroup intersect(const Subgroup& o) const;

    // The subgroup as a standalone group on local indices 0..order-1 (local
    // index = position in elems, so local 0 is the identity).
    FiniteGroup local_group() const;

    // Minimal-index representatives of left cosets xS, in ascending order of
    // the representative.
    std::vector<int> left_coset_reps() const;
};

// Action of a group L on the element set of a group G by automorphisms.
struct GroupAction {
    const FiniteGroup* L = nullptr;
    const FiniteGroup* G = nullptr;
    std::vector<std::vector<int>> table;  // table[x][g] = x.g

    int act(int x, int g) const { return table[x][g]; }

    static GroupAction conjugation(const FiniteGroup& G);
    static GroupAction trivial(const FiniteGroup& L, const FiniteGroup& G);
    // Validates: identity acts as id, act(x, act(y, g)) = act(xy, g), and
    // every act(x, -) is a group automorphism of G.
    static GroupAction from_table(const FiniteGroup& L, const FiniteGroup& G,
                                  std::vector<std::vector<int>> t);
};

struct Orbit {
    int rep = 0;                // minimal element index in the orbit
    std::vector<int> members;   // ascending
};

Subgroup stabilizer(const GroupAction& a, int g);
std::vector<Orbit> orbits(const GroupAction& a);
int orbit_rep_of(const GroupAction& a, int g);
// Minimal x in L with x.g == target; InputError if no such x exists.
int min_mover(const GroupAction& a, int g, int target);

// Minimal-index representatives of the double cosets K x H in the parent of
// K and H (which must share the parent group L).
std::vector<int> double_coset_reps(const Subgroup& K, const Subgroup& H);

// Representatives of the orbits of the stabilizer L_g on the factorization
// set { (h,k) : h*k = g }, acting diagonally.  Each orbit representative is
// the pair whose first component has minimal index.
std::vector<std::pair<int, int>> orbit_pair_reps(const GroupAction& a, int g);

// Canonical two-level factorization transversal for triple sums:
// for each (h,k) in orbit_pair_reps(g), for each (d,e) in orbit_pair_reps(h),
// emit (d,e,k).  Expanding each entry by the two nested stabilizer actions
// reproduces every triple (d,e,f) with d*e*f = g exactly once.
struct TripleRep {
    int d, e, k;
};
std::vector<TripleRep> triple_reps(const GroupAction& a, int g);

// The mirrored transversal, nesting on the second factor instead: for each
// (h,k) in orbit_pair_reps(g), for each (e,f) in orbit_pair_reps(k), emit
// (h,e,f).  The two transversals correspond class-by-class under the
// bijection (d,e,f) |-> (gfg^-1, d, e); right-nested sums over invariants
// must be taken over this set.
std::vector<TripleRep> triple_reps_right(const GroupAction& a, int g);

}  // namespace ccr
