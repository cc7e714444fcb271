#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccr/framework.hpp"

namespace ccr {

// The group algebra of G as a component system: one-dimensional components
// indexed by the elements of G, L acting through the given automorphism
// action, all structure coefficients equal to 1.  `act` must point at the
// two owned groups.  The invariant subring picks one basis vector per
// L-orbit (orbit sums).
ComponentSystem group_algebra_system(std::shared_ptr<const FiniteGroup> L,
                                     std::shared_ptr<const FiniteGroup> G, GroupAction act,
                                     const FieldSpec& f);

// Conjugation shorthand (L = G): the invariant subring is the center, with
// the class sums as canonical basis.
ComponentSystem group_algebra_system(std::shared_ptr<const FiniteGroup> G, const FieldSpec& f);

// L = trivial group, so every element is invariant and the invariant ring
// is the whole group algebra.
ComponentSystem group_algebra_system_trivial(std::shared_ptr<const FiniteGroup> G,
                                             const FieldSpec& f);

struct ClassProductTable {
    std::vector<std::string> classes;  // label of the minimal element per class
    std::vector<int> class_sizes;
    // coeff[i][j][k]: coefficient of class sum k in (class sum i)(class sum j)
    std::vector<std::vector<std::vector<Scalar>>> coeff;
};

// Structure constants of the center in the class-sum basis, computed with
// the componentwise product (this is the ordinary product of class sums).
ClassProductTable center_structure_constants(const ComponentSystem& S);

// Same basis, but multiplied with the transversal product: one term per
// stabilizer orbit of factorizations instead of one per factorization.
// This is a different ring on the same module (no index factors).
ClassProductTable orbit_product_table(const ComponentSystem& S);

// The class sum over orbit i as an invariant element.
InvariantElement class_sum(const ComponentSystem& S, int i);

}  // namespace ccr
