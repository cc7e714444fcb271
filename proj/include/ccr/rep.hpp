#pragma once

#include <vector>

#include "ccr/group.hpp"
#include "ccr/linalg.hpp"

namespace ccr {

// Conjugacy-class bookkeeping; class 0 is the class of the identity and
// representatives are minimal element indices.
struct ClassData {
    std::vector<int> rep;
    std::vector<std::vector<int>> members;
    std::vector<int> class_of;
    std::vector<int> inverse_class;  // class of rep^{-1}

    int count() const { return static_cast<int>(rep.size()); }
    int size(int c) const { return static_cast<int>(members[c].size()); }
};

ClassData conjugacy_classes(const FiniteGroup& G);

// Exact character table over Cyc(field_order).  Rows are sorted by (degree,
// lexicographic value comparison), so equal inputs produce identical tables.
struct CharacterTable {
    FieldSpec field;
    ClassData cls;
    std::vector<long> degree;
    std::vector<std::vector<Scalar>> chi;  // chi[row][class]

    int count() const { return static_cast<int>(chi.size()); }
    // Value on an arbitrary group element.
    const Scalar& value(int row, int g) const { return chi[row][cls.class_of[g]]; }
};

// field_order = 0 picks exponent(G); otherwise it must be a multiple of the
// exponent so every character value lies in the field.  Internally the table
// is found by simultaneous diagonalization of the class-sum matrices over a
// prime field F_p with p = 1 (mod exponent), then the values are lifted
// exactly into the cyclotomic field via root-of-unity multiplicities; the
// lifted table is verified against the orthogonality relations before being
// returned.
CharacterTable character_table(const FiniteGroup& G, long field_order = 0);

// <a, b> = (1/|G|) sum_g a(g) b(g^{-1}) for class functions given by values
// per class.  For characters this is the standard inner product.
Scalar character_inner(const CharacterTable& T, const std::vector<Scalar>& a,
                       const std::vector<Scalar>& b);

// Explicit irreducible matrix representations, one per table row (same
// order, same field).  Degree-one rows are the character values themselves;
// higher-degree rows are realized inside the regular representation by
// cutting with a central idempotent times a multiplicity-one cyclic-subgroup
// idempotent, and every returned family is re-verified to be a homomorphism
// with the expected trace.
struct Irrep {
    long dim = 0;
    std::vector<Mat> rho;  // indexed by group element
};

std::vector<Irrep> irreducible_reps(const FiniteGroup& G, const CharacterTable& T);

}  // namespace ccr
