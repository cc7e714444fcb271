#pragma once

#include <string>
#include <vector>

#include "ccr/group.hpp"

namespace ccr {

// Outcome of a finite exhaustive check.  On failure `witness` names the first
// offending tuple in scan order together with the mismatching values.
struct CheckReport {
    bool ok = true;
    std::string name;
    std::string witness;
};

// Cocycle data is stored as integer exponent tables modulo m: an entry e
// stands for the root of unity zeta_m^e.  All identities then become integer
// congruences and are checked exactly.

// Normalized 3-cocycle omega on a group G with values in mu_m.
struct ThreeCocycle {
    const FiniteGroup* G = nullptr;
    long m = 1;
    std::vector<std::vector<std::vector<int>>> e;  // e[a][b][c] in [0,m)

    int exp(int a, int b, int c) const { return e[a][b][c]; }
    static ThreeCocycle trivial(const FiniteGroup& G);
    static ThreeCocycle from_table(const FiniteGroup& G, long m,
                                   std::vector<std::vector<std::vector<int>>> table);
};

// Family sigma_g(x,y) for g in G, x,y in L (meaningful on the stabilizer of
// g; stored on all of L x L).
struct SigmaFamily {
    long m = 1;
    std::vector<std::vector<std::vector<int>>> e;  // e[g][x][y]
    int exp(int g, int x, int y) const { return e[g][x][y]; }
};

// Family tau_{g,h}(x) for g,h in G, x in L.
struct TauFamily {
    long m = 1;
    std::vector<std::vector<std::vector<int>>> e;  // e[g][h][x]
    int exp(int g, int h, int x) const { return e[g][h][x]; }
};

// Pentagon identity w(a,b,c) w(a,bc,d) w(b,c,d) = w(ab,c,d) w(a,b,cd)
// plus normalization (value 1 whenever an argument is the identity).
CheckReport check_three_cocycle(const ThreeCocycle& w);

// sigma_g(x,y) = w(g,x,y) w(x,y,(xy)^{-1}g(xy)) / w(x, x^{-1}gx, y),
// defined for the conjugation action of G on itself.
SigmaFamily sigma_of_omega(const ThreeCocycle& w);

// tau_{g,h}(x) = w(g,h,x) w(x, x^{-1}gx, x^{-1}hx) / w(g, x, x^{-1}hx).
TauFamily tau_of_omega(const ThreeCocycle& w);

// Componentwise twisted 2-cocycle law together with normalization
// sigma_g(1,x) = sigma_g(x,1) = 1 and the counit row sigma_1 = 1:
//   sigma_{x^{-1}.g}(y,z) * sigma_g(x,yz) = sigma_g(x,y) * sigma_g(xy,z).
CheckReport check_sigma_family(const GroupAction& a, const SigmaFamily& s);

// Compatibility of sigma and tau on stabilizer intersections:
//   sigma_g(x,y) sigma_h(x,y)
//     = sigma_{gh}(x,y) tau_{g,h}(x)^{-1} tau_{g,h}(y)^{-1} tau_{g,h}(xy)
// for all g,h and x,y in L_g cap L_h, plus tau normalization
// tau_{g,h}(1) = tau_{1,h}(x) = tau_{g,1}(x) = 0 exponents.
CheckReport check_sigma_tau(const GroupAction& a, const SigmaFamily& s, const TauFamily& t);

// Exponent table of the rescaling x |-> tau_{g,h}(x) x used to twist a
// sigma_g*sigma_h-projective module into a sigma_{gh}-projective one.
std::vector<int> psi_twist(const TauFamily& t, int g, int h);

// The rescaling above is an algebra map: for all x,y in L_g cap L_h,
// psi(x) psi(y) computed with sigma_g*sigma_h equals psi applied to
// sigma_{gh}(x,y) (xy).  Equivalent to the compatibility law; checked
// directly as stated.
CheckReport check_psi_multiplicative(const GroupAction& a, const SigmaFamily& s,
                                     const TauFamily& t);

SigmaFamily trivial_sigma(const GroupAction& a);
TauFamily trivial_tau(const GroupAction& a);

}  // namespace ccr
