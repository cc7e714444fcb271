#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ccr/cocycle.hpp"
#include "ccr/framework.hpp"
#include "ccr/group.hpp"
#include "ccr/twisted.hpp"

namespace ccr {

// The algebra H = (kG)* # L with basis p_g x-bar (index g*|L| + x) and
// product (p_g x-bar)(p_h y-bar) = [g = x.h] sigma_g(x,y) p_g (xy)-bar,
// together with the coproduct twist tau.  Built over the smallest cyclotomic
// field containing every sigma/tau value and every eigenvalue of every
// stabilizer-algebra simple module.
struct AbelianExtension {
    std::shared_ptr<const FiniteGroup> Lp, Gp;
    GroupAction act;
    SigmaFamily sigma;
    TauFamily tau;
    long m = 1;
    FieldSpec field;
    std::string name;

    int nL() const { return Lp->n; }
    int nG() const { return Gp->n; }
    int dim() const { return nL() * nG(); }
    int bidx(int g, int x) const { return g * nL() + x; }
    Scalar sigma_val(int g, int x, int y) const {
        return Scalar::root_of_unity(field, m, sigma.exp(g, x, y));
    }
    Scalar tau_val(int g, int h, int x) const {
        return Scalar::root_of_unity(field, m, tau.exp(g, h, x));
    }
};

// Validates the cocycle data (sigma family law, sigma/tau compatibility),
// asserts associativity of the basis product on all triples, and asserts
// that the coproduct p_g x-bar |-> sum_{hk=g} tau_{h,k}(x) p_h x-bar (x)
// p_k x-bar is multiplicative — so module tensor products along it are
// automatically modules.
AbelianExtension build_extension(std::shared_ptr<const FiniteGroup> L,
                                 std::shared_ptr<const FiniteGroup> G, const GroupAction& act,
                                 const SigmaFamily& sigma, const TauFamily& tau,
                                 std::string name);

// Module over the extension, with one matrix per basis label p_g x-bar.
struct HModule {
    const AbelianExtension* ext = nullptr;
    long dim = 0;
    std::vector<Mat> rep;  // index bidx(g, x)

    Scalar character(int g, int x) const { return rep[g * ext->nL() + x].trace(); }
};

// Checks the p_g are orthogonal idempotents summing to the identity and the
// full basis product law holds under rep; throws CheckError otherwise.
void verify_h_module(const HModule& M);

// Everything derived from one extension that fusion computations reuse: the
// stabilizer twisted algebras and their simple modules for every g, plus the
// full list of simple H-modules (one per orbit representative and simple of
// its stabilizer algebra).
struct FusionData {
    AbelianExtension ext;
    std::vector<Orbit> orbs;
    std::vector<int> orbit_of;
    std::vector<std::shared_ptr<const TwistedGroupAlgebra>> alg;  // per g in G
    std::vector<TwistedSimples> simples;                          // per g in G
    std::vector<std::pair<int, int>> hlabels;  // (orbit index, simple index)
    std::vector<HModule> hsimples;             // aligned with hlabels

    int orbit_count() const { return static_cast<int>(orbs.size()); }
    int rep_of(int orbit) const { return orbs[orbit].rep; }
};

FusionData prepare_fusion(AbelianExtension ext);

// W over the stabilizer algebra of g becomes x.W over the stabilizer algebra
// of x.g: (x.W)(v) = c(u)^{-1} W(u) with u = x^{-1} v x and the sigma-ratio
// twist c(u) = sigma_{x.g}(x,u) sigma_{x.g}(xu,x^{-1}) / sigma_{x.g}(x,x^{-1});
// the module law over the target algebra is re-verified on every call.
TwistedModule conj_module(const FusionData& F, int g, const TwistedModule& W, int x);

// Simple H-module attached to (orbit representative g_i, V): basis = (coset
// representative y of L_i in L) x (basis of V), with
//   (p_h x-bar)(y (x) v) = [h = y'.g_i] sigma_h(x,y) sigma_h(y',k)^{-1}
//                          (y' (x) k.v),   xy = y'k,  k in L_i.
HModule clifford_module(const FusionData& F, int orbit, const TwistedModule& V);

// Endomorphisms of H_g (x)_{(kG)*} k p_g: the commutant of the H_g-action on
// the |L_g|-dimensional column space must have dimension exactly |L_g|, be
// spanned by the maps phi_x, and compose oppositely by sigma_g:
// phi_y . phi_x = sigma_g(x,y) phi_{xy}.
CheckReport check_endo_lemma(const FusionData& F, int g);

// Formal nonnegative-integer sum of simple labels per orbit.
struct FusionSum {
    std::vector<std::vector<long>> mult;  // [orbit][simple index]

    bool operator==(const FusionSum& o) const { return mult == o.mult; }
    std::string str(const FusionData& F) const;
};

FusionSum zero_sum(const FusionData& F);

// Double-coset fusion product of V (over the stabilizer algebra of orbit i)
// and W (over orbit j): for each double-coset representative x of
// L_i \ L / L_j, restrict V and x.W to L_i n x.L_j, tensor along the tau
// twist, induce up to the stabilizer of g_i (x.g_j), move the result into
// the orbit-representative component by the minimal y with
// y.(g_i x.g_j) = g_k, and decompose.  The choice of y is spot-checked
// against a second representative.
FusionSum fusion_product(const FusionData& F, int i, const TwistedModule& V, int j,
                         const TwistedModule& W);

// Brute-force oracle: the tensor-product module along the coproduct,
// decomposed against the characters of all simple H-modules by exact linear
// solve.  Nonnegativity, integrality and dimension conservation are hard
// requirements.
FusionSum oracle_tensor(const FusionData& F, const HModule& M, const HModule& N);

// Decompose an arbitrary H-module against the simple characters.
FusionSum decompose_h_module(const FusionData& F, const HModule& M);

// The K_0-level component system: A(g) is free on the simple labels of the
// stabilizer algebra of g, conj comes from conj_module, mul from
// restrict-tensor-induce.  Verifies H1-H3 and H4'.
struct FusionSystem {
    ComponentSystem sys;
    std::shared_ptr<FusionData> data;
};

FusionSystem build_fusion_system(AbelianExtension ext);

// Independent check of the orbit-sum identity in the integral group ring:
// O(g_i) O(g_j) = sum over double-coset reps x of
// [L_{g_i(x.g_j)} : L_i n x.L_j] O(g_i (x.g_j)).
CheckReport check_orbit_sum_identity(const GroupAction& act);

}  // namespace ccr
