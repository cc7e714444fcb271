#include "ccr/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ccr/error.hpp"

namespace ccr {

namespace {

long em(long e, long m) { return ((e % m) + m) % m; }

// Monomial product of two basis elements: either zero or a single basis
// element with a zeta_m^e coefficient.
struct Mono {
    bool zero = true;
    int g = 0, x = 0;
    long e = 0;
};

Mono basis_mul(const AbelianExtension& E, int g, int x, int h, int y) {
    if (E.act.act(x, h) != g) return {};
    Mono r;
    r.zero = false;
    r.g = g;
    r.x = E.Lp->mul(x, y);
    r.e = em(E.sigma.exp(g, x, y), E.m);
    return r;
}

std::vector<std::vector<int>> stabilizer_sig(const AbelianExtension& E, const Subgroup& S,
                                             int g) {
    const int n = S.order();
    std::vector<std::vector<int>> sig(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            sig[a][b] = static_cast<int>(em(E.sigma.exp(g, S.elems[a], S.elems[b]), E.m));
    return sig;
}

std::shared_ptr<const TwistedGroupAlgebra> stabilizer_algebra(const AbelianExtension& E,
                                                              Subgroup S, int g) {
    return std::make_shared<const TwistedGroupAlgebra>(
        make_twisted_algebra(E.Lp, std::move(S), E.m, stabilizer_sig(E, S, g), E.field.m));
}

}  // namespace

AbelianExtension build_extension(std::shared_ptr<const FiniteGroup> L,
                                 std::shared_ptr<const FiniteGroup> G, const GroupAction& act,
                                 const SigmaFamily& sigma, const TauFamily& tau,
                                 std::string name) {
    if (!L || !G || act.L != L.get() || act.G != G.get())
        throw InputError("extension action does not match the supplied groups");
    if (sigma.m != tau.m || sigma.m < 1)
        throw InputError("sigma and tau must share one modulus >= 1");
    const int nL = L->n, nG = G->n;
    auto bad_shape = [&]() -> bool {
        if (static_cast<int>(sigma.e.size()) != nG) return true;
        for (const auto& sx : sigma.e) {
            if (static_cast<int>(sx.size()) != nL) return true;
            for (const auto& sy : sx)
                if (static_cast<int>(sy.size()) != nL) return true;
        }
        if (static_cast<int>(tau.e.size()) != nG) return true;
        for (const auto& th : tau.e) {
            if (static_cast<int>(th.size()) != nG) return true;
            for (const auto& tx : th)
                if (static_cast<int>(tx.size()) != nL) return true;
        }
        return false;
    };
    if (bad_shape()) throw InputError("sigma/tau tables do not match the group sizes");

    CheckReport cr = check_sigma_family(act, sigma);
    if (!cr.ok) throw CheckError("sigma family law fails: " + cr.witness);
    cr = check_sigma_tau(act, sigma, tau);
    if (!cr.ok) throw CheckError("sigma/tau compatibility fails: " + cr.witness);

    AbelianExtension E;
    E.Lp = std::move(L);
    E.Gp = std::move(G);
    E.act = act;
    E.sigma = sigma;
    E.tau = tau;
    E.m = sigma.m;
    E.name = std::move(name);

    // Smallest cyclotomic field carrying every stabilizer algebra's simple
    // modules (and zeta_m itself, hence every sigma/tau value).
    long M = E.m;
    for (int g = 0; g < nG; ++g) {
        TwistedGroupAlgebra A = make_twisted_algebra(E.Lp, stabilizer(act, g), E.m,
                                                     stabilizer_sig(E, stabilizer(act, g), g), 0);
        M = std::lcm(M, A.field.m);
    }
    E.field = FieldSpec::Cyc(M);

    // Associativity of the basis product on all triples.
    for (int g = 0; g < nG; ++g)
        for (int x = 0; x < nL; ++x)
            for (int h = 0; h < nG; ++h)
                for (int y = 0; y < nL; ++y) {
                    Mono ab = basis_mul(E, g, x, h, y);
                    for (int k = 0; k < nG; ++k)
                        for (int z = 0; z < nL; ++z) {
                            Mono l = ab.zero ? Mono{} : basis_mul(E, ab.g, ab.x, k, z);
                            if (!l.zero) l.e = em(l.e + ab.e, E.m);
                            Mono bc = basis_mul(E, h, y, k, z);
                            Mono r = bc.zero ? Mono{} : basis_mul(E, g, x, bc.g, bc.x);
                            if (!r.zero) r.e = em(r.e + bc.e, E.m);
                            if (l.zero != r.zero ||
                                (!l.zero && (l.g != r.g || l.x != r.x || l.e != r.e)))
                                throw MathError("extension basis product is not associative");
                        }
                }

    // sum_g p_g 1 is a two-sided identity.
    for (int g = 0; g < nG; ++g)
        for (int x = 0; x < nL; ++x) {
            Mono r = basis_mul(E, g, x, E.act.act(E.Lp->inv[x], g), 0);
            if (r.zero || r.g != g || r.x != x || r.e != 0)
                throw MathError("extension unit fails on the right");
            Mono l = basis_mul(E, g, 0, g, x);
            if (l.zero || l.g != g || l.x != x || l.e != 0)
                throw MathError("extension unit fails on the left");
        }

    // Multiplicativity of the coproduct: comparing
    // Delta(b1) Delta(b2) = Delta(b1 b2) coefficientwise at p_h (.) p_k
    // reduces to one exponent congruence per (h, k, x, y); establishing it
    // here makes every coproduct tensor of modules a module for free.
    for (int h = 0; h < nG; ++h)
        for (int k = 0; k < nG; ++k) {
            const int g = E.Gp->mul(h, k);
            for (int x = 0; x < nL; ++x) {
                const int xi = E.Lp->inv[x];
                const int hh = E.act.act(xi, h), kk = E.act.act(xi, k);
                for (int y = 0; y < nL; ++y) {
                    long lhs = E.tau.exp(h, k, x) + E.tau.exp(hh, kk, y) +
                               E.sigma.exp(h, x, y) + E.sigma.exp(k, x, y);
                    long rhs = E.sigma.exp(g, x, y) + E.tau.exp(h, k, E.Lp->mul(x, y));
                    if (em(lhs - rhs, E.m) != 0) {
                        std::ostringstream os;
                        os << "coproduct is not multiplicative at h=" << h << " k=" << k
                           << " x=" << x << " y=" << y;
                        throw CheckError(os.str());
                    }
                }
            }
        }
    return E;
}

void verify_h_module(const HModule& M) {
    const AbelianExtension& E = *M.ext;
    const size_t d = static_cast<size_t>(M.dim);
    if (M.rep.size() != static_cast<size_t>(E.dim()))
        throw CheckError("module does not assign a matrix to every basis element");
    for (const Mat& A : M.rep)
        if (A.rows() != d || A.cols() != d) throw CheckError("module matrix has wrong shape");

    Mat sum(E.field, d, d);
    for (int g = 0; g < E.nG(); ++g) sum = sum + M.rep[E.bidx(g, 0)];
    if (!sum.is_identity()) throw CheckError("projections p_g do not sum to the identity");

    for (int g = 0; g < E.nG(); ++g)
        for (int x = 0; x < E.nL(); ++x)
            for (int h = 0; h < E.nG(); ++h)
                for (int y = 0; y < E.nL(); ++y) {
                    Mat P = M.rep[E.bidx(g, x)] * M.rep[E.bidx(h, y)];
                    Mono r = basis_mul(E, g, x, h, y);
                    if (r.zero) {
                        if (!P.is_zero()) throw CheckError("module law fails on a zero product");
                    } else {
                        Mat Q = M.rep[E.bidx(r.g, r.x)].scaled(
                            Scalar::root_of_unity(E.field, E.m, r.e));
                        if (!(P - Q).is_zero()) throw CheckError("module law fails on a product");
                    }
                }
}

FusionData prepare_fusion(AbelianExtension ext) {
    FusionData F;
    F.ext = std::move(ext);
    const AbelianExtension& E = F.ext;
    F.orbs = orbits(E.act);
    F.orbit_of.assign(E.nG(), -1);
    for (size_t i = 0; i < F.orbs.size(); ++i)
        for (int g : F.orbs[i].members) F.orbit_of[g] = static_cast<int>(i);

    F.alg.resize(E.nG());
    F.simples.resize(E.nG());
    for (int g = 0; g < E.nG(); ++g) {
        F.alg[g] = stabilizer_algebra(E, stabilizer(E.act, g), g);
        F.simples[g] = simple_modules(F.alg[g]);
    }

    long dimsum = 0;
    for (int i = 0; i < F.orbit_count(); ++i) {
        const int g = F.rep_of(i);
        for (size_t s = 0; s < F.simples[g].simples.size(); ++s) {
            F.hlabels.emplace_back(i, static_cast<int>(s));
            F.hsimples.push_back(clifford_module(F, i, F.simples[g].simples[s]));
            dimsum += F.hsimples.back().dim * F.hsimples.back().dim;
        }
    }
    if (dimsum != static_cast<long>(E.dim()))
        throw MathError("squared dimensions of the simple modules do not sum to dim H");

    // Linear independence of the simple characters (makes decompositions
    // against them well posed).
    Mat C(E.field, F.hsimples.size(), E.dim());
    for (size_t s = 0; s < F.hsimples.size(); ++s)
        for (int g = 0; g < E.nG(); ++g)
            for (int x = 0; x < E.nL(); ++x)
                C.at(s, E.bidx(g, x)) = F.hsimples[s].character(g, x);
    if (rank_of(C) != F.hsimples.size())
        throw MathError("simple module characters are linearly dependent");
    return F;
}

TwistedModule conj_module(const FusionData& F, int g, const TwistedModule& W, int x) {
    const AbelianExtension& E = F.ext;
    if (!W.alg->host.same_as(F.alg[g]->host))
        throw InputError("module to conjugate does not live over the stabilizer of g");
    const int tg = E.act.act(x, g);
    const TwistedGroupAlgebra& T = *F.alg[tg];
    const int xi = E.Lp->inv[x];
    TwistedModule R;
    R.alg = F.alg[tg];
    R.dim = W.dim;
    R.rep.reserve(T.n());
    for (int a = 0; a < T.n(); ++a) {
        const int v = T.host.elems[a];
        const int u = E.Lp->mul(E.Lp->mul(xi, v), x);
        const long ce = em(E.sigma.exp(tg, x, u) + E.sigma.exp(tg, E.Lp->mul(x, u), xi) -
                               E.sigma.exp(tg, x, xi),
                           E.m);
        R.rep.push_back(W.rep[W.alg->local_of(u)].scaled(
            Scalar::root_of_unity(E.field, E.m, em(-ce, E.m))));
    }
    verify_twisted_module(R);
    return R;
}

HModule clifford_module(const FusionData& F, int orbit, const TwistedModule& V) {
    const AbelianExtension& E = F.ext;
    const int gi = F.rep_of(orbit);
    if (!V.alg->host.same_as(F.alg[gi]->host))
        throw InputError("module does not live over the stabilizer of the orbit representative");
    const Subgroup& Li = F.alg[gi]->host;
    const std::vector<int> creps = Li.left_coset_reps();
    const int t = static_cast<int>(creps.size());
    std::vector<int> coset_of(E.nL(), -1);
    for (int c = 0; c < t; ++c)
        for (int k : Li.elems) coset_of[E.Lp->mul(creps[c], k)] = c;

    HModule M;
    M.ext = &F.ext;
    M.dim = static_cast<long>(t) * V.dim;
    const size_t dV = static_cast<size_t>(V.dim);
    M.rep.reserve(E.dim());
    for (int h = 0; h < E.nG(); ++h)
        for (int x = 0; x < E.nL(); ++x) {
            Mat A(E.field, static_cast<size_t>(M.dim), static_cast<size_t>(M.dim));
            for (int c = 0; c < t; ++c) {
                const int z = E.Lp->mul(x, creps[c]);
                const int c2 = coset_of[z];
                const int y2 = creps[c2];
                if (E.act.act(y2, gi) != h) continue;
                const int k = E.Lp->mul(E.Lp->inv[y2], z);
                const long e = em(E.sigma.exp(h, x, creps[c]) - E.sigma.exp(h, y2, k), E.m);
                Mat B = V.rep[V.alg->local_of(k)].scaled(Scalar::root_of_unity(E.field, E.m, e));
                for (size_t r = 0; r < dV; ++r)
                    for (size_t s = 0; s < dV; ++s)
                        A.at(static_cast<size_t>(c2) * dV + r, static_cast<size_t>(c) * dV + s) =
                            B.at(r, s);
            }
            M.rep.push_back(std::move(A));
        }
    verify_h_module(M);
    return M;
}

CheckReport check_endo_lemma(const FusionData& F, int g) {
    const AbelianExtension& E = F.ext;
    const Subgroup& Lg = F.alg[g]->host;
    const int n = Lg.order();
    CheckReport rep;
    rep.name = "endo(g=" + std::to_string(g) + ")";
    auto fail = [&](const std::string& w) {
        rep.ok = false;
        rep.witness = w;
        return rep;
    };

    // Action of p_g y-bar on the column space H_g (x) k p_g with basis
    // { x-bar (x) p_g : x in L_g }; every p_h y-bar with h != g acts as zero.
    std::vector<Mat> ops;
    ops.reserve(n);
    for (int a = 0; a < n; ++a) {
        const int y = Lg.elems[a];
        Mat A(E.field, n, n);
        for (int b = 0; b < n; ++b) {
            const int x = Lg.elems[b];
            A.at(F.alg[g]->local_of(E.Lp->mul(y, x)), b) =
                Scalar::root_of_unity(E.field, E.m, em(E.sigma.exp(g, y, x), E.m));
        }
        ops.push_back(std::move(A));
    }

    // Commutant dimension: solve A T = T A for all ops simultaneously.
    Mat sys(E.field, static_cast<size_t>(n) * n * ops.size(), static_cast<size_t>(n) * n);
    size_t row = 0;
    for (const Mat& A : ops) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                for (int r = 0; r < n; ++r)
                    sys.at(row, static_cast<size_t>(r) * n + j) =
                        sys.at(row, static_cast<size_t>(r) * n + j) + A.at(i, r);
                for (int c = 0; c < n; ++c)
                    sys.at(row, static_cast<size_t>(i) * n + c) =
                        sys.at(row, static_cast<size_t>(i) * n + c) - A.at(c, j);
                ++row;
            }
    }
    const std::vector<Vec> ker = kernel_basis(sys);
    if (static_cast<int>(ker.size()) != n)
        return fail("commutant has dimension " + std::to_string(ker.size()) + ", expected " +
                    std::to_string(n));

    // phi_x (w-bar (x) p) = sigma_g(w, x) (wx-bar (x) p).
    std::vector<Mat> phis;
    phis.reserve(n);
    for (int b = 0; b < n; ++b) {
        const int x = Lg.elems[b];
        Mat P(E.field, n, n);
        for (int a = 0; a < n; ++a) {
            const int w = Lg.elems[a];
            P.at(F.alg[g]->local_of(E.Lp->mul(w, x)), a) =
                Scalar::root_of_unity(E.field, E.m, em(E.sigma.exp(g, w, x), E.m));
        }
        phis.push_back(std::move(P));
    }
    for (int b = 0; b < n; ++b)
        for (const Mat& A : ops)
            if (!(A * phis[b] - phis[b] * A).is_zero())
                return fail("phi_" + std::to_string(Lg.elems[b]) + " is not an endomorphism");
    Mat span(E.field, static_cast<size_t>(n) * n, n);
    for (int b = 0; b < n; ++b)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                span.at(static_cast<size_t>(i) * n + j, b) = phis[b].at(i, j);
    if (rank_of(span) != static_cast<size_t>(n)) return fail("the maps phi_x do not span");

    // Opposite composition twisted by sigma_g.
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            const int x = Lg.elems[b], y = Lg.elems[c];
            Mat lhs = phis[c] * phis[b];
            Mat rhs = phis[F.alg[g]->local_of(E.Lp->mul(x, y))].scaled(
                Scalar::root_of_unity(E.field, E.m, em(E.sigma.exp(g, x, y), E.m)));
            if (!(lhs - rhs).is_zero())
                return fail("phi_y phi_x != sigma_g(x,y) phi_xy at x=" + std::to_string(x) +
                            " y=" + std::to_string(y));
        }
    rep.ok = true;
    return rep;
}

FusionSum zero_sum(const FusionData& F) {
    FusionSum s;
    s.mult.resize(F.orbit_count());
    for (int i = 0; i < F.orbit_count(); ++i)
        s.mult[i].assign(F.simples[F.rep_of(i)].simples.size(), 0);
    return s;
}

std::string FusionSum::str(const FusionData& F) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < mult.size(); ++i)
        for (size_t s = 0; s < mult[i].size(); ++s) {
            if (mult[i][s] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (mult[i][s] != 1) os << mult[i][s] << "*";
            os << "[" << F.rep_of(static_cast<int>(i)) << ":S" << s << "]";
        }
    if (first) os << "0";
    return os.str();
}

FusionSum fusion_product(const FusionData& F, int i, const TwistedModule& V, int j,
                         const TwistedModule& W) {
    const AbelianExtension& E = F.ext;
    const int gi = F.rep_of(i), gj = F.rep_of(j);
    const Subgroup& Li = F.alg[gi]->host;
    const Subgroup& Lj = F.alg[gj]->host;
    if (!V.alg->host.same_as(Li) || !W.alg->host.same_as(Lj))
        throw InputError("fusion factors do not live over their orbit stabilizers");
    FusionSum out = zero_sum(F);
    for (int x : double_coset_reps(Li, Lj)) {
        const int xgj = E.act.act(x, gj);
        const TwistedModule xW = conj_module(F, gj, W, x);
        const Subgroup Dp = Li.intersect(F.alg[xgj]->host);
        const TwistedModule rV = restrict_module(V, Dp);
        const TwistedModule rW = restrict_module(xW, Dp);
        const int prod = E.Gp->mul(gi, xgj);
        auto out_alg = stabilizer_algebra(E, Dp, prod);
        std::vector<int> tau_exp(Dp.order());
        for (int a = 0; a < Dp.order(); ++a)
            tau_exp[a] = static_cast<int>(em(E.tau.exp(gi, xgj, Dp.elems[a]), E.m));
        const TwistedModule T = tensor_twisted(rV, rW, tau_exp, E.m, out_alg);
        const TwistedModule I = induce_module(T, F.alg[prod]);
        if (I.dim != (F.alg[prod]->n() / Dp.order()) * V.dim * W.dim)
            throw MathError("induced summand has the wrong dimension");
        const int k = F.orbit_of[prod];
        const int gk = F.rep_of(k);
        const int y = min_mover(E.act, prod, gk);
        const std::vector<long> mult = decompose(conj_module(F, prod, I, y), F.simples[gk]);
        // The decomposition must not depend on which mover was used.
        if (F.alg[gk]->host.order() > 1) {
            const int y2 = E.Lp->mul(F.alg[gk]->host.elems[1], y);
            if (decompose(conj_module(F, prod, I, y2), F.simples[gk]) != mult)
                throw MathError("summand decomposition depends on the choice of mover");
        }
        for (size_t s = 0; s < mult.size(); ++s) out.mult[k][s] += mult[s];
    }
    // Dimension conservation for the induced H-modules.
    long lhs = (E.nL() / Li.order()) * V.dim * (E.nL() / Lj.order()) * W.dim;
    long rhs = 0;
    for (int k = 0; k < F.orbit_count(); ++k) {
        const int gk = F.rep_of(k);
        for (size_t s = 0; s < out.mult[k].size(); ++s)
            rhs += out.mult[k][s] * (E.nL() / F.alg[gk]->host.order()) *
                   F.simples[gk].simples[s].dim;
    }
    if (lhs != rhs) throw MathError("fusion product does not preserve dimension");
    return out;
}

FusionSum oracle_tensor(const FusionData& F, const HModule& M, const HModule& N) {
    const AbelianExtension& E = F.ext;
    if (M.ext != &F.ext || N.ext != &F.ext)
        throw InputError("tensor factors belong to a different extension");
    HModule T;
    T.ext = &F.ext;
    T.dim = M.dim * N.dim;
    T.rep.reserve(E.dim());
    for (int g = 0; g < E.nG(); ++g)
        for (int x = 0; x < E.nL(); ++x) {
            Mat A(E.field, static_cast<size_t>(T.dim), static_cast<size_t>(T.dim));
            Scalar chi = Scalar::zero(E.field);
            for (int h = 0; h < E.nG(); ++h) {
                const int k = E.Gp->mul(E.Gp->inv[h], g);
                const Scalar t = E.tau_val(h, k, x);
                A = A + M.rep[E.bidx(h, x)].kronecker(N.rep[E.bidx(k, x)]).scaled(t);
                chi = chi + t * M.character(h, x) * N.character(k, x);
            }
            if (!(A.trace() - chi).is_zero())
                throw MathError("tensor character disagrees with its trace");
            T.rep.push_back(std::move(A));
        }
    return decompose_h_module(F, T);
}

FusionSum decompose_h_module(const FusionData& F, const HModule& M) {
    const AbelianExtension& E = F.ext;
    const size_t ns = F.hsimples.size();
    Mat C(E.field, E.dim(), ns);
    Vec rhs(static_cast<size_t>(E.dim()), Scalar::zero(E.field));
    for (int g = 0; g < E.nG(); ++g)
        for (int x = 0; x < E.nL(); ++x) {
            const int r = E.bidx(g, x);
            for (size_t s = 0; s < ns; ++s) C.at(r, s) = F.hsimples[s].character(g, x);
            rhs[r] = M.character(g, x);
        }
    SolveResult sol = solve_linear(C, rhs);
    if (!sol.consistent || !sol.kernel.empty())
        throw MathError("character system for the module is not uniquely solvable");
    FusionSum out = zero_sum(F);
    long dim = 0;
    for (size_t s = 0; s < ns; ++s) {
        auto v = sol.particular[s].as_integer();
        if (!v || *v < 0)
            throw MathError("module decomposes with non-integral or negative multiplicity");
        out.mult[F.hlabels[s].first][F.hlabels[s].second] = *v;
        dim += *v * F.hsimples[s].dim;
    }
    if (dim != M.dim) throw MathError("decomposition does not preserve dimension");
    return out;
}

FusionSystem build_fusion_system(AbelianExtension ext) {
    auto data = std::make_shared<FusionData>(prepare_fusion(std::move(ext)));
    const FusionData& F = *data;
    const AbelianExtension& E = F.ext;
    const int nG = E.nG(), nL = E.nL();

    ComponentSystem S;
    S.L_owner = E.Lp;
    S.G_owner = E.Gp;
    S.act = E.act;
    S.field = FieldSpec::Q();
    S.name = "fusion(" + E.name + ")";
    S.labels.resize(nG);
    for (int g = 0; g < nG; ++g)
        for (size_t s = 0; s < F.simples[g].simples.size(); ++s)
            S.labels[g].push_back("S" + std::to_string(s) + "(d" +
                                  std::to_string(F.simples[g].simples[s].dim) + ")");

    auto to_vec = [&](const std::vector<long>& m) {
        Vec v;
        v.reserve(m.size());
        for (long c : m) v.push_back(Scalar::from_int(S.field, c));
        return v;
    };

    S.conj.resize(nG);
    for (int g = 0; g < nG; ++g) {
        S.conj[g].reserve(nL);
        for (int x = 0; x < nL; ++x) {
            const int tg = E.act.act(x, g);
            std::vector<Vec> cols;
            for (const TwistedModule& W : F.simples[g].simples)
                cols.push_back(to_vec(decompose(conj_module(F, g, W, x), F.simples[tg])));
            S.conj[g].push_back(Mat::from_cols(S.field, cols));
        }
    }

    S.mul.resize(nG);
    for (int g = 0; g < nG; ++g) {
        S.mul[g].reserve(nG);
        for (int h = 0; h < nG; ++h) {
            const int gh = E.Gp->mul(g, h);
            const Subgroup Dp = F.alg[g]->host.intersect(F.alg[h]->host);
            auto out_alg = stabilizer_algebra(E, Dp, gh);
            std::vector<int> tau_exp(Dp.order());
            for (int a = 0; a < Dp.order(); ++a)
                tau_exp[a] = static_cast<int>(em(E.tau.exp(g, h, Dp.elems[a]), E.m));
            std::vector<Vec> cols;
            for (const TwistedModule& V : F.simples[g].simples)
                for (const TwistedModule& W : F.simples[h].simples) {
                    TwistedModule T = tensor_twisted(restrict_module(V, Dp),
                                                     restrict_module(W, Dp), tau_exp, E.m,
                                                     out_alg);
                    cols.push_back(to_vec(decompose(induce_module(T, F.alg[gh]), F.simples[gh])));
                }
            S.mul[g].push_back(Mat::from_cols(S.field, cols));
        }
    }

    // Unit: the trivial module of the (untwisted, by the counit row of
    // sigma) identity-component algebra.
    int unit_idx = -1;
    for (size_t s = 0; s < F.simples[0].simples.size(); ++s) {
        if (F.simples[0].simples[s].dim != 1) continue;
        bool triv = true;
        for (int a = 0; a < F.alg[0]->n() && triv; ++a)
            triv = F.simples[0].character[s][a].is_one();
        if (triv) {
            unit_idx = static_cast<int>(s);
            break;
        }
    }
    if (unit_idx < 0) throw MathError("identity component has no trivial module");
    S.unit = vec_zero(S.field, F.simples[0].simples.size());
    S.unit[unit_idx] = Scalar::one(S.field);

    S.finalize();
    FusionSystem out;
    out.sys = std::move(S);
    out.data = std::move(data);
    return out;
}

CheckReport check_orbit_sum_identity(const GroupAction& act) {
    const FiniteGroup& G = *act.G;
    CheckReport rep;
    rep.name = "orbit-sum";
    const std::vector<Orbit> orbs = orbits(act);
    std::vector<int> orbit_of(G.n);
    for (size_t i = 0; i < orbs.size(); ++i)
        for (int g : orbs[i].members) orbit_of[g] = static_cast<int>(i);
    for (const Orbit& oi : orbs)
        for (const Orbit& oj : orbs) {
            std::vector<long> lhs(G.n, 0), rhs(G.n, 0);
            for (int a : oi.members)
                for (int b : oj.members) ++lhs[G.mul(a, b)];
            const Subgroup Li = stabilizer(act, oi.rep);
            const Subgroup Lj = stabilizer(act, oj.rep);
            for (int x : double_coset_reps(Li, Lj)) {
                const int prod = G.mul(oi.rep, act.act(x, oj.rep));
                const Subgroup Dp = Li.intersect(stabilizer(act, act.act(x, oj.rep)));
                const long idx = stabilizer(act, prod).order() / Dp.order();
                for (int g : orbs[orbit_of[prod]].members) rhs[g] += idx;
            }
            if (lhs != rhs) {
                rep.ok = false;
                std::ostringstream os;
                os << "orbit product of reps " << oi.rep << ", " << oj.rep
                   << " disagrees with the double-coset expansion";
                rep.witness = os.str();
                return rep;
            }
        }
    rep.ok = true;
    return rep;
}

}  // namespace ccr
