#pragma once

#include <memory>
#include <vector>

#include "ccr/group.hpp"
#include "ccr/linalg.hpp"
#include "ccr/rep.hpp"

namespace ccr {

// Twisted group algebra k_sigma H over a cyclotomic field: basis x-bar for x
// in the host subgroup, multiplication x-bar y-bar = sigma(x,y) (xy)-bar.
// The cocycle is stored as an exponent table modulo m on local host indices;
// construction refuses non-normalized tables and verifies the 2-cocycle law
// (= associativity of the twisted product) on all triples.
struct TwistedGroupAlgebra {
    std::shared_ptr<const FiniteGroup> ambient;
    Subgroup host;  // subgroup of *ambient; local index = position in elems
    long m = 1;
    std::vector<std::vector<int>> sig;  // sig[a][b] on local indices, in [0,m)
    FieldSpec field;                    // Cyc(k) with m | k and exp(extension) | k

    int n() const { return host.order(); }
    int local_of(int ambient_index) const;      // InputError when not a member
    int lmul(int a, int b) const;               // local product
    Scalar sigma(int a, int b) const;           // zeta_m^sig[a][b] in `field`
    Scalar sigma_inv(int a, int b) const;
};

// field_order = 0 picks lcm(m, exponent of the central extension), the
// smallest field containing every eigenvalue of every simple module.
TwistedGroupAlgebra make_twisted_algebra(std::shared_ptr<const FiniteGroup> ambient,
                                         Subgroup host, long m,
                                         std::vector<std::vector<int>> sig,
                                         long field_order = 0);

// The extension 1 -> Z/m -> E -> host -> 1 realizing sigma: elements (i, a)
// indexed i*|host|+a with (i,a)(j,b) = (i+j+sig(a,b), ab).  Simple modules
// of the twisted algebra are exactly the simple E-modules where the central
// generator (1, 1) acts as zeta_m.
FiniteGroup central_extension(const TwistedGroupAlgebra& alg);

struct TwistedModule {
    std::shared_ptr<const TwistedGroupAlgebra> alg;
    long dim = 0;
    std::vector<Mat> rep;  // per local host element

    Scalar character(int a) const { return rep[a].trace(); }
};

// Verifies rep(a) rep(b) = sigma(a,b) rep(ab) on all pairs and rep(1) = id;
// throws CheckError with the offending pair otherwise.
void verify_twisted_module(const TwistedModule& M);

struct TwistedSimples {
    std::shared_ptr<const TwistedGroupAlgebra> alg;
    std::vector<TwistedModule> simples;          // deterministic order
    std::vector<std::vector<Scalar>> character;  // [simple][local element]
};

// All simple modules, via the character table and explicit irreducibles of
// the central extension.  Postconditions checked: sum of dim^2 = |host|,
// characters linearly independent, every module passes
// verify_twisted_module.
TwistedSimples simple_modules(std::shared_ptr<const TwistedGroupAlgebra> alg);

// Same matrices on a subgroup of the host; the cocycle restricts.
TwistedModule restrict_module(const TwistedModule& M, const Subgroup& K);

// x-bar acts as zeta_{tau_m}^{tau_exp[x]} (M(x) (x) N(x)); the output lives
// over `out`, whose cocycle must make the module law hold (the sigma/tau
// compatibility identity guarantees it; it is re-verified, not assumed).
TwistedModule tensor_twisted(const TwistedModule& M, const TwistedModule& N,
                             const std::vector<int>& tau_exp, long tau_m,
                             std::shared_ptr<const TwistedGroupAlgebra> out);

// Induction from M's host K up to the host of `out` (K <= H, cocycles must
// agree on K).  Basis: (minimal coset representative) x (basis of M); the
// action reduces x y_c to y_{c'} k with k in K and tracks both sigma
// factors.  dim = [H:K] dim M.
TwistedModule induce_module(const TwistedModule& M,
                            std::shared_ptr<const TwistedGroupAlgebra> out);

// Multiplicity vector of M in the given simples, solved exactly from the
// character system; refuses non-integer or negative solutions (those signal
// a broken module rather than an input error).
std::vector<long> decompose(const TwistedModule& M, const TwistedSimples& S);

}  // namespace ccr
