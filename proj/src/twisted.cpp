#include "ccr/twisted.hpp"

#include <algorithm>
#include <numeric>

namespace ccr {

int TwistedGroupAlgebra::local_of(int ambient_index) const {
    auto it = std::lower_bound(host.elems.begin(), host.elems.end(), ambient_index);
    if (it == host.elems.end() || *it != ambient_index)
        throw InputError("element is not a member of the twisted algebra's host");
    return static_cast<int>(it - host.elems.begin());
}

int TwistedGroupAlgebra::lmul(int a, int b) const {
    return local_of(ambient->mul(host.elems[a], host.elems[b]));
}

Scalar TwistedGroupAlgebra::sigma(int a, int b) const {
    return Scalar::root_of_unity(field, m, sig[a][b]);
}

Scalar TwistedGroupAlgebra::sigma_inv(int a, int b) const {
    return Scalar::root_of_unity(field, m, (m - sig[a][b] % m) % m);
}

TwistedGroupAlgebra make_twisted_algebra(std::shared_ptr<const FiniteGroup> ambient,
                                         Subgroup host, long m,
                                         std::vector<std::vector<int>> sig,
                                         long field_order) {
    if (host.G != ambient.get()) throw InputError("host subgroup does not live in the ambient group");
    if (m < 1) throw InputError("cocycle order must be positive");
    const int n = host.order();
    if (static_cast<int>(sig.size()) != n)
        throw InputError("cocycle table must be host x host");
    for (const auto& row : sig) {
        if (static_cast<int>(row.size()) != n) throw InputError("cocycle table must be host x host");
        for (int v : row)
            if (v < 0 || v >= m) throw InputError("cocycle exponents must lie in [0, m)");
    }

    TwistedGroupAlgebra A;
    A.ambient = std::move(ambient);
    A.host = std::move(host);
    A.m = m;
    A.sig = std::move(sig);

    for (int a = 0; a < n; ++a)
        if (A.sig[0][a] != 0 || A.sig[a][0] != 0)
            throw InputError("cocycle is not normalized: sigma(1,x) = sigma(x,1) = 1 required");
    // 2-cocycle law <=> associativity of the twisted basis product
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                long lhs = A.sig[a][b] + A.sig[A.lmul(a, b)][c];
                long rhs = A.sig[b][c] + A.sig[a][A.lmul(b, c)];
                if ((lhs - rhs) % m != 0)
                    throw InputError("cocycle table violates the 2-cocycle identity at (" +
                                     std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");
            }

    if (field_order == 0) field_order = std::lcm(m, central_extension(A).exponent());
    if (field_order % m != 0)
        throw InputError("field order must be a multiple of the cocycle order");
    A.field = FieldSpec::Cyc(field_order);
    return A;
}

FiniteGroup central_extension(const TwistedGroupAlgebra& alg) {
    const int n = alg.n();
    const long m = alg.m;
    const int N = static_cast<int>(m) * n;
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (long i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a)
            for (long j = 0; j < m; ++j)
                for (int b = 0; b < n; ++b) {
                    long lift = (i + j + alg.sig[a][b]) % m;
                    t[i * n + a][j * n + b] = static_cast<int>(lift) * n + alg.lmul(a, b);
                }
    FiniteGroup E = FiniteGroup::from_table(std::move(t));
    for (long i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a)
            E.labels.push_back("(" + std::to_string(i) + ";" +
                               alg.ambient->label(alg.host.elems[a]) + ")");
    return E;
}

void verify_twisted_module(const TwistedModule& M) {
    const TwistedGroupAlgebra& A = *M.alg;
    if (!M.rep[0].is_identity())
        throw CheckError("twisted module does not send the identity to the identity matrix");
    for (int a = 0; a < A.n(); ++a)
        for (int b = 0; b < A.n(); ++b)
            if (!(M.rep[a] * M.rep[b] == M.rep[A.lmul(a, b)].scaled(A.sigma(a, b))))
                throw CheckError("twisted module law fails at local pair (" + std::to_string(a) +
                                 "," + std::to_string(b) + ")");
}

TwistedSimples simple_modules(std::shared_ptr<const TwistedGroupAlgebra> alg) {
    const TwistedGroupAlgebra& A = *alg;
    FiniteGroup E = central_extension(A);
    CharacterTable T = character_table(E, A.field.m);
    std::vector<Irrep> irr = irreducible_reps(E, T);

    TwistedSimples out;
    out.alg = alg;
    const int n = A.n();
    const Scalar zeta = Scalar::root_of_unity(A.field, A.m, 1);
    const int z = A.m > 1 ? n : 0;  // index of (1, identity)
    long dim2 = 0;
    for (int r = 0; r < T.count(); ++r) {
        // keep exactly the irreducibles where the central generator acts as
        // zeta_m (checked on the full matrix, not just the character)
        if (!(irr[r].rho[z] == Mat::identity(A.field, irr[r].dim).scaled(zeta))) continue;
        TwistedModule M;
        M.alg = alg;
        M.dim = irr[r].dim;
        M.rep.reserve(n);
        for (int a = 0; a < n; ++a) M.rep.push_back(irr[r].rho[a]);  // (0, a) has index a
        verify_twisted_module(M);
        dim2 += M.dim * M.dim;
        out.simples.push_back(std::move(M));
    }
    if (dim2 != n)
        throw MathError("simple twisted modules have dim^2 sum " + std::to_string(dim2) +
                        ", expected the host order " + std::to_string(n));

    out.character.resize(out.simples.size());
    for (size_t s = 0; s < out.simples.size(); ++s) {
        out.character[s].reserve(n);
        for (int a = 0; a < n; ++a) out.character[s].push_back(out.simples[s].character(a));
    }
    // linear independence makes decompose well-posed
    if (!out.simples.empty()) {
        Mat C(A.field, out.simples.size(), n);
        for (size_t s = 0; s < out.simples.size(); ++s)
            for (int a = 0; a < n; ++a) C.at(s, a) = out.character[s][a];
        if (rank_of(C) != out.simples.size())
            throw MathError("simple twisted characters are linearly dependent");
    }
    return out;
}

TwistedModule restrict_module(const TwistedModule& M, const Subgroup& K) {
    const TwistedGroupAlgebra& A = *M.alg;
    if (K.G != A.ambient.get() || !K.subset_of(A.host))
        throw InputError("restriction target is not a subgroup of the module's host");
    const int nk = K.order();
    std::vector<std::vector<int>> sig(nk, std::vector<int>(nk));
    for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nk; ++b)
            sig[a][b] = A.sig[A.local_of(K.elems[a])][A.local_of(K.elems[b])];
    auto sub = std::make_shared<TwistedGroupAlgebra>(
        make_twisted_algebra(A.ambient, K, A.m, std::move(sig), A.field.m));
    TwistedModule R;
    R.alg = sub;
    R.dim = M.dim;
    R.rep.reserve(nk);
    for (int a = 0; a < nk; ++a) R.rep.push_back(M.rep[A.local_of(K.elems[a])]);
    verify_twisted_module(R);
    return R;
}

TwistedModule tensor_twisted(const TwistedModule& M, const TwistedModule& N,
                             const std::vector<int>& tau_exp, long tau_m,
                             std::shared_ptr<const TwistedGroupAlgebra> out) {
    const TwistedGroupAlgebra& A = *out;
    if (!M.alg->host.same_as(A.host) || !N.alg->host.same_as(A.host))
        throw InputError("tensor factors must live over the output host");
    if (static_cast<int>(tau_exp.size()) != A.n())
        throw InputError("tau exponent table must cover the host");
    TwistedModule P;
    P.alg = out;
    P.dim = M.dim * N.dim;
    P.rep.reserve(A.n());
    for (int a = 0; a < A.n(); ++a) {
        Scalar tw = Scalar::root_of_unity(A.field, tau_m, tau_exp[a] % tau_m);
        P.rep.push_back(M.rep[a].kronecker(N.rep[a]).scaled(tw));
    }
    verify_twisted_module(P);  // encodes the sigma/tau compatibility identity
    return P;
}

TwistedModule induce_module(const TwistedModule& M,
                            std::shared_ptr<const TwistedGroupAlgebra> out) {
    const TwistedGroupAlgebra& A = *out;         // algebra on H
    const TwistedGroupAlgebra& B = *M.alg;       // algebra on K <= H
    if (B.ambient.get() != A.ambient.get() || !B.host.subset_of(A.host))
        throw InputError("induction requires the module's host inside the output host");
    if (B.m != A.m) throw InputError("induction requires matching cocycle orders");
    for (int a = 0; a < B.n(); ++a)
        for (int b = 0; b < B.n(); ++b)
            if (A.sig[A.local_of(B.host.elems[a])][A.local_of(B.host.elems[b])] != B.sig[a][b])
                throw InputError("cocycles disagree on the subalgebra");

    const FiniteGroup& G = *A.ambient;
    // minimal-index representatives of the cosets yK inside H
    std::vector<int> reps;            // ambient indices
    std::vector<int> coset_of(G.n, -1);
    for (int y : A.host.elems) {
        if (coset_of[y] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(y);
        for (int k : B.host.elems) coset_of[G.mul(y, k)] = c;
    }
    const long t = static_cast<long>(reps.size());

    TwistedModule I;
    I.alg = out;
    I.dim = t * M.dim;
    I.rep.reserve(A.n());
    for (int xl = 0; xl < A.n(); ++xl) {
        const int x = A.host.elems[xl];
        Mat R(A.field, I.dim, I.dim);
        for (long c = 0; c < t; ++c) {
            const int y = reps[c];
            const int z = G.mul(x, y);
            const long c2 = coset_of[z];
            const int y2 = reps[c2];
            const int k = G.mul(G.inv[y2], z);  // z = y2 k with k in K
            // x-bar y-bar = sigma(x,y) (xy)-bar  and  (y2 k)-bar = sigma(y2,k)^{-1} y2-bar k-bar
            Scalar coeff = A.sigma(xl, A.local_of(y)) * A.sigma_inv(A.local_of(y2), A.local_of(k));
            const Mat& Kk = M.rep[B.local_of(k)];
            for (long s = 0; s < M.dim; ++s)
                for (long u = 0; u < M.dim; ++u)
                    R.at(c2 * M.dim + u, c * M.dim + s) = coeff * Kk.at(u, s);
        }
        I.rep.push_back(std::move(R));
    }
    verify_twisted_module(I);
    return I;
}

std::vector<long> decompose(const TwistedModule& M, const TwistedSimples& S) {
    const TwistedGroupAlgebra& A = *S.alg;
    if (!M.alg->host.same_as(A.host) || M.alg->field != A.field)
        throw InputError("module and simples live over different algebras");
    const int n = A.n();
    const size_t ns = S.simples.size();
    Mat C(A.field, n, ns);
    Vec rhs(n);
    for (int a = 0; a < n; ++a) {
        for (size_t s = 0; s < ns; ++s) C.at(a, s) = S.character[s][a];
        rhs[a] = M.character(a);
    }
    SolveResult sol = solve_linear(C, rhs);
    if (!sol.consistent || !sol.kernel.empty())
        throw MathError("character system for decomposition is not uniquely solvable");
    std::vector<long> mult(ns);
    long dim = 0;
    for (size_t s = 0; s < ns; ++s) {
        auto v = sol.particular[s].as_integer();
        if (!v || *v < 0)
            throw MathError("module decomposes with non-integral or negative multiplicity");
        mult[s] = *v;
        dim += *v * S.simples[s].dim;
    }
    if (dim != M.dim) throw MathError("decomposition does not preserve dimension");
    return mult;
}

}  // namespace ccr
