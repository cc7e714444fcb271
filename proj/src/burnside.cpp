#include "ccr/burnside.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ccr/error.hpp"

namespace ccr {

namespace {

bool sub_less(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
}

// Double-coset representatives U x H inside K (minimal element per coset).
std::vector<int> dc_reps_in(const Subgroup& K, const Subgroup& U, const Subgroup& H) {
    const FiniteGroup& G = *K.G;
    std::vector<char> covered(G.n, 0);
    std::vector<int> reps;
    for (int x : K.elems) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (int u : U.elems) {
            int ux = G.mul(u, x);
            for (int h : H.elems) covered[G.mul(ux, h)] = 1;
        }
    }
    return reps;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const Subgroup& K) {
    if (K.order() > 48)
        throw InputError("all_subgroups: group order " + std::to_string(K.order()) +
                         " exceeds the supported bound of 48");
    const FiniteGroup& G = *K.G;
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out, frontier;
    Subgroup triv = Subgroup::trivial(G);
    seen.insert(triv.elems);
    out.push_back(triv);
    frontier.push_back(triv);
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const Subgroup& H : frontier) {
            for (int k : K.elems) {
                if (H.contains(k)) continue;
                std::vector<int> gens = H.elems;
                gens.push_back(k);
                Subgroup H2 = Subgroup::generated(G, gens);
                if (seen.insert(H2.elems).second) {
                    out.push_back(H2);
                    next.push_back(H2);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), sub_less);
    return out;
}

BurnsideBasis burnside_basis(const Subgroup& K) {
    BurnsideBasis B;
    B.K = K;
    B.subs = all_subgroups(K);
    B.class_of.assign(B.subs.size(), -1);
    std::map<std::vector<int>, int> index_of;
    for (size_t i = 0; i < B.subs.size(); ++i) index_of[B.subs[i].elems] = static_cast<int>(i);
    for (size_t i = 0; i < B.subs.size(); ++i) {
        if (B.class_of[i] >= 0) continue;
        int c = static_cast<int>(B.class_rep.size());
        B.class_rep.push_back(static_cast<int>(i));
        for (int x : K.elems) {
            auto it = index_of.find(B.subs[i].conjugate(x).elems);
            if (it == index_of.end())
                throw MathError("burnside_basis: conjugate escaped the subgroup list");
            B.class_of[it->second] = c;
        }
    }
    return B;
}

int BurnsideBasis::find_class(const Subgroup& H) const {
    auto it = std::lower_bound(subs.begin(), subs.end(), H, sub_less);
    if (it == subs.end() || !it->same_as(H))
        throw InputError("find_class: not a subgroup of this Burnside basis");
    return class_of[it - subs.begin()];
}

std::string BurnsideBasis::label(int c) const {
    std::string s = "[";
    const Subgroup& H = rep(c);
    for (size_t i = 0; i < H.elems.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(H.elems[i]);
    }
    return s + "]";
}

std::vector<long> burnside_mul(const BurnsideBasis& B, int c1, int c2) {
    const Subgroup& A = B.rep(c1);
    const Subgroup& C = B.rep(c2);
    std::vector<long> out(B.classes(), 0);
    for (int x : dc_reps_in(B.K, A, C)) out[B.find_class(A.intersect(C.conjugate(x)))] += 1;
    return out;
}

std::vector<long> burnside_restrict(const BurnsideBasis& BK, const BurnsideBasis& BU, int c) {
    const Subgroup& H = BK.rep(c);
    std::vector<long> out(BU.classes(), 0);
    for (int x : dc_reps_in(BK.K, BU.K, H))
        out[BU.find_class(BU.K.intersect(H.conjugate(x)))] += 1;
    return out;
}

std::vector<long> burnside_induce(const BurnsideBasis& BU, const BurnsideBasis& BK, int c) {
    std::vector<long> out(BK.classes(), 0);
    out[BK.find_class(BU.rep(c))] += 1;
    return out;
}

std::vector<long> burnside_conj(const BurnsideBasis& BK, const BurnsideBasis& BxK, int x, int c) {
    std::vector<long> out(BxK.classes(), 0);
    out[BxK.find_class(BK.rep(c).conjugate(x))] += 1;
    return out;
}

namespace {

std::vector<long> vadd(std::vector<long> a, const std::vector<long>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<long> vscale(long c, std::vector<long> a) {
    for (auto& v : a) v *= c;
    return a;
}

std::string sub_str(const Subgroup& H) {
    std::string s = "{";
    for (size_t i = 0; i < H.elems.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(H.elems[i]);
    }
    return s + "}";
}

std::string vstr(const std::vector<long>& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

// Product of two integer combinations in one Burnside basis.
std::vector<long> combo_mul(const BurnsideBasis& B, const std::vector<long>& a,
                            const std::vector<long>& b) {
    std::vector<long> out(B.classes(), 0);
    for (int i = 0; i < B.classes(); ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < B.classes(); ++j) {
            if (!b[j]) continue;
            out = vadd(std::move(out), vscale(a[i] * b[j], burnside_mul(B, i, j)));
        }
    }
    return out;
}

std::vector<long> combo_map(const std::vector<long>& a, int target_classes,
                            const std::vector<std::vector<long>>& columns) {
    std::vector<long> out(target_classes, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) out = vadd(std::move(out), vscale(a[i], columns[i]));
    return out;
}

}  // namespace

CheckReport check_green_axioms(const Subgroup& top) {
    std::vector<Subgroup> subs = all_subgroups(top);
    std::map<std::vector<int>, BurnsideBasis> bases;
    auto basis_of = [&](const Subgroup& U) -> const BurnsideBasis& {
        auto it = bases.find(U.elems);
        if (it == bases.end()) it = bases.emplace(U.elems, burnside_basis(U)).first;
        return it->second;
    };
    const BurnsideBasis& BK = basis_of(top);

    // Frobenius reciprocity for each U <= top.
    for (const Subgroup& U : subs) {
        const BurnsideBasis& BU = basis_of(U);
        std::vector<std::vector<long>> ind_cols(BU.classes());
        for (int c = 0; c < BU.classes(); ++c) ind_cols[c] = burnside_induce(BU, BK, c);
        for (int a = 0; a < BU.classes(); ++a) {
            for (int b = 0; b < BK.classes(); ++b) {
                std::vector<long> resb = burnside_restrict(BK, BU, b);
                std::vector<long> au(BU.classes(), 0);
                au[a] = 1;
                std::vector<long> lhs =
                    combo_map(combo_mul(BU, au, resb), BK.classes(), ind_cols);
                std::vector<long> bu(BK.classes(), 0);
                bu[b] = 1;
                std::vector<long> rhs = combo_mul(BK, burnside_induce(BU, BK, a), bu);
                if (lhs != rhs)
                    return {false, "frobenius",
                            "induce(a * res b) != induce(a) * b for U=" + sub_str(U) +
                                " a=" + BU.label(a) + " b=" + BK.label(b) + ": " + vstr(lhs) +
                                " vs " + vstr(rhs)};
            }
        }
    }

    // Double-coset formula for res(ind(-)) across every pair U, W <= top.
    for (const Subgroup& U : subs) {
        const BurnsideBasis& BU = basis_of(U);
        for (const Subgroup& W : subs) {
            const BurnsideBasis& BW = basis_of(W);
            for (int c = 0; c < BW.classes(); ++c) {
                std::vector<long> lhs = burnside_restrict(
                    BK, BU, BK.find_class(BW.rep(c)));
                std::vector<long> rhs(BU.classes(), 0);
                for (int x : dc_reps_in(top, U, W)) {
                    Subgroup xW = W.conjugate(x);
                    Subgroup inter = U.intersect(xW);
                    const BurnsideBasis& BxW = basis_of(xW);
                    const BurnsideBasis& BI = basis_of(inter);
                    int cx = BxW.find_class(BW.rep(c).conjugate(x));
                    std::vector<long> resx = burnside_restrict(BxW, BI, cx);
                    std::vector<std::vector<long>> up(BI.classes());
                    for (int d = 0; d < BI.classes(); ++d) up[d] = burnside_induce(BI, BU, d);
                    rhs = vadd(std::move(rhs), combo_map(resx, BU.classes(), up));
                }
                if (lhs != rhs)
                    return {false, "mackey",
                            "res(ind) double-coset expansion fails for U=" + sub_str(U) +
                                ", W=" + sub_str(W) + ", class " + BW.label(c) + ": " +
                                vstr(lhs) + " vs " + vstr(rhs)};
            }
        }
    }
    return {true, "green", ""};
}

ComponentSystem crossed_burnside_system(std::shared_ptr<const FiniteGroup> Gp, const FieldSpec& f) {
    const FiniteGroup& G = *Gp;
    if (G.n > 24)
        throw InputError("crossed_burnside_system: group order " + std::to_string(G.n) +
                         " exceeds the supported bound of 24");
    ComponentSystem S;
    S.L_owner = Gp;
    S.G_owner = Gp;
    S.act = GroupAction::conjugation(G);
    S.field = f;
    S.name = "crossed-burnside(" + std::to_string(G.n) + ")";

    std::vector<Subgroup> cent(G.n);
    std::vector<BurnsideBasis> basis(G.n);
    for (int g = 0; g < G.n; ++g) {
        cent[g] = stabilizer(S.act, g);  // centralizer of g
        basis[g] = burnside_basis(cent[g]);
    }

    S.labels.resize(G.n);
    S.conj.resize(G.n);
    S.mul.resize(G.n);
    for (int g = 0; g < G.n; ++g) {
        S.labels[g].resize(basis[g].classes());
        for (int c = 0; c < basis[g].classes(); ++c) S.labels[g][c] = basis[g].label(c);
    }
    for (int g = 0; g < G.n; ++g) {
        S.conj[g].resize(G.n);
        for (int x = 0; x < G.n; ++x) {
            int xg = S.act.act(x, g);
            Mat M(f, basis[xg].classes(), basis[g].classes());
            for (int c = 0; c < basis[g].classes(); ++c) {
                std::vector<long> col = burnside_conj(basis[g], basis[xg], x, c);
                for (int r = 0; r < basis[xg].classes(); ++r)
                    M.at(r, c) = Scalar::from_int(f, col[r]);
            }
            S.conj[g][x] = std::move(M);
        }
    }
    for (int g = 0; g < G.n; ++g) {
        S.mul[g].resize(G.n);
        for (int h = 0; h < G.n; ++h) {
            int gh = G.mul(g, h);
            Subgroup U = cent[g].intersect(cent[h]);
            BurnsideBasis BU = burnside_basis(U);
            std::vector<std::vector<long>> up(BU.classes());
            for (int d = 0; d < BU.classes(); ++d) up[d] = burnside_induce(BU, basis[gh], d);
            std::vector<std::vector<long>> res1(basis[g].classes()), res2(basis[h].classes());
            for (int c = 0; c < basis[g].classes(); ++c)
                res1[c] = burnside_restrict(basis[g], BU, c);
            for (int c = 0; c < basis[h].classes(); ++c)
                res2[c] = burnside_restrict(basis[h], BU, c);
            Mat M(f, basis[gh].classes(),
                  static_cast<size_t>(basis[g].classes()) * basis[h].classes());
            for (int s = 0; s < basis[g].classes(); ++s) {
                for (int t = 0; t < basis[h].classes(); ++t) {
                    std::vector<long> inU = combo_mul(BU, res1[s], res2[t]);
                    std::vector<long> col = combo_map(inU, basis[gh].classes(), up);
                    size_t cidx = static_cast<size_t>(s) * basis[h].classes() + t;
                    for (int r = 0; r < basis[gh].classes(); ++r)
                        M.at(r, cidx) = Scalar::from_int(f, col[r]);
                }
            }
            S.mul[g][h] = std::move(M);
        }
    }
    S.unit = vec_zero(f, basis[0].classes());
    S.unit[basis[0].find_class(Subgroup::full(G))] = Scalar::one(f);
    S.finalize();
    return S;
}

}  // namespace ccr
