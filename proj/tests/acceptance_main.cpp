// Acceptance gate: one line per criterion, wall-clock budget enforced,
// nonzero exit if anything fails.  Everything is exact arithmetic, so every
// comparison below is equality at tolerance zero.

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccr/burnside.hpp"
#include "ccr/cocycle.hpp"
#include "ccr/error.hpp"
#include "ccr/framework.hpp"
#include "ccr/fusion.hpp"
#include "ccr/group.hpp"
#include "ccr/group_algebra.hpp"
#include "ccr/twisted.hpp"
#include "fixtures.hpp"

using namespace ccr;

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

// ---- shared helpers ----

std::vector<Scalar> convolve(const FiniteGroup& G, const FieldSpec& f,
                             const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out(G.n, Scalar::zero(f));
    for (int h = 0; h < G.n; ++h)
        for (int k = 0; k < G.n; ++k) out[G.mul(h, k)] = out[G.mul(h, k)] + a[h] * b[k];
    return out;
}

AbelianExtension plain_double(fx::GroupPtr G, const char* name) {
    GroupAction a = GroupAction::conjugation(*G);
    return build_extension(G, G, a, trivial_sigma(a), trivial_tau(a), name);
}

AbelianExtension twisted_double(fx::GroupPtr G, const ThreeCocycle& w, const char* name) {
    GroupAction a = GroupAction::conjugation(*G);
    return build_extension(G, G, a, sigma_of_omega(w), tau_of_omega(w), name);
}

// Full pair-product table of a fusion datum; also checks the tensor oracle
// and dimension conservation on the way.
std::vector<std::vector<FusionSum>> pair_table(const FusionData& F) {
    const int n = static_cast<int>(F.hlabels.size());
    std::vector<std::vector<FusionSum>> tab(n, std::vector<FusionSum>(n, zero_sum(F)));
    long sq = 0;
    for (int a = 0; a < n; ++a) sq += F.hsimples[a].dim * F.hsimples[a].dim;
    require(sq == F.ext.nG() * F.ext.nL(), F.ext.name + ": sum dim^2 != |G||L|");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto [i, s] = F.hlabels[a];
            auto [j, t] = F.hlabels[b];
            tab[a][b] = fusion_product(F, i, F.simples[F.rep_of(i)].simples[s], j,
                                       F.simples[F.rep_of(j)].simples[t]);
            FusionSum oracle = oracle_tensor(F, F.hsimples[a], F.hsimples[b]);
            require(tab[a][b] == oracle,
                    F.ext.name + ": fusion/oracle mismatch at pair (" + std::to_string(a) +
                        "," + std::to_string(b) + ")");
        }
    return tab;
}

// index of an hsimple label
int hindex(const FusionData& F, int orbit, int s) {
    for (size_t a = 0; a < F.hlabels.size(); ++a)
        if (F.hlabels[a] == std::make_pair(orbit, s)) return static_cast<int>(a);
    throw std::runtime_error("label not found");
}

// multiply formal sums through a precomputed pair table
FusionSum fuse_via(const FusionData& F, const std::vector<std::vector<FusionSum>>& tab,
                   const FusionSum& A, const FusionSum& B) {
    FusionSum out = zero_sum(F);
    for (int i = 0; i < F.orbit_count(); ++i)
        for (size_t s = 0; s < A.mult[i].size(); ++s) {
            if (!A.mult[i][s]) continue;
            const int a = hindex(F, i, static_cast<int>(s));
            for (int j = 0; j < F.orbit_count(); ++j)
                for (size_t t = 0; t < B.mult[j].size(); ++t) {
                    if (!B.mult[j][t]) continue;
                    const int b = hindex(F, j, static_cast<int>(t));
                    for (int k = 0; k < F.orbit_count(); ++k)
                        for (size_t u = 0; u < tab[a][b].mult[k].size(); ++u)
                            out.mult[k][u] += A.mult[i][s] * B.mult[j][t] * tab[a][b].mult[k][u];
                }
        }
    return out;
}

FusionSum single(const FusionData& F, int orbit, int s) {
    FusionSum sum = zero_sum(F);
    sum.mult[orbit][s] = 1;
    return sum;
}

// ---- criteria ----

void criterion_group_algebra_axioms() {
    for (auto G : {fx::s3(), fx::d4(), fx::q8(), fx::cyclic(6)}) {
        ComponentSystem S = group_algebra_system(G, FieldSpec::Q());
        for (const char* k : {"H1", "H2", "H3", "H4"})
            require(S.verdict(k).ok, "group algebra axiom failed: " + std::string(k));
        for (int g = 0; g < G->n; ++g)
            for (int h = 0; h < G->n; ++h) {
                GradedElement p = product_full(basis_graded(S, g, 0), basis_graded(S, h, 0));
                std::vector<Scalar> a(G->n, Scalar::zero(S.field)), b = a;
                a[g] = Scalar::one(S.field);
                b[h] = Scalar::one(S.field);
                auto expect = convolve(*G, S.field, a, b);
                for (int x = 0; x < G->n; ++x)
                    require(p.comp[x][0] == expect[x], "convolution mismatch");
            }
    }
}

void criterion_center_table() {
    auto G = fx::s3();
    ComponentSystem S = group_algebra_system(G, FieldSpec::Q());
    ClassProductTable t = center_structure_constants(S);
    auto os = orbits(S.act);
    require(t.classes.size() == 3, "S3 must have 3 classes");
    // oracle: convolve indicator vectors, read off representatives
    for (size_t i = 0; i < os.size(); ++i)
        for (size_t j = 0; j < os.size(); ++j) {
            std::vector<Scalar> a(G->n, Scalar::zero(S.field)), b = a;
            for (int g : os[i].members) a[g] = Scalar::one(S.field);
            for (int g : os[j].members) b[g] = Scalar::one(S.field);
            auto prod = convolve(*G, S.field, a, b);
            for (size_t k = 0; k < os.size(); ++k)
                require(t.coeff[i][j][k] == prod[os[k].rep], "center table != oracle");
        }
    require(t.coeff[2][2][0] == Scalar::from_int(S.field, 3) &&
                t.coeff[2][2][1] == Scalar::from_int(S.field, 3),
            "frozen entry C2*C2 = 3C0 + 3C1");
}

void criterion_index_comparison() {
    for (FieldSpec f : {FieldSpec::Q(), FieldSpec::Fp(3)}) {
        auto G = fx::s3();
        ComponentSystem S = group_algebra_system(G, f);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                auto rep = compare_products(class_sum(S, i), class_sum(S, j));
                require(rep.full_matches_indexed,
                        "indexed sum != full product over " + f.str());
            }
    }
}

void criterion_doublecoset_vs_orbit() {
    for (auto G : {fx::s3(), fx::d4(), fx::q8()}) {
        ComponentSystem S = group_algebra_system(G, FieldSpec::Q());
        const int r = static_cast<int>(S.orbs.size());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                InvariantElement a = class_sum(S, i), b = class_sum(S, j);
                require(invariant_eq(product_orbit(a, b),
                                     product_doublecoset(S, i, a.comp[i], j, b.comp[j])),
                        "double-coset product != orbit product");
            }
    }
    // and on the crossed Burnside system of S3, whose basis is richer
    ComponentSystem X = crossed_burnside_system(fx::s3(), FieldSpec::Q());
    auto B = invariant_basis(X);
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j) {
            // single-orbit components only (the invariant basis is aligned)
            int oi = -1, oj = -1;
            for (int k = 0; k < static_cast<int>(X.orbs.size()); ++k) {
                if (!vec_is_zero(B[i].comp[k])) oi = oi < 0 ? k : -2;
                if (!vec_is_zero(B[j].comp[k])) oj = oj < 0 ? k : -2;
            }
            if (oi < 0 || oj < 0) continue;
            require(invariant_eq(product_orbit(B[i], B[j]),
                                 product_doublecoset(X, oi, B[i].comp[oi], oj, B[j].comp[oj])),
                    "crossed system: double-coset != orbit");
        }
}

void criterion_crossed_burnside() {
    for (auto G : {fx::cyclic(2), fx::cyclic(4), fx::s3(), fx::d4()}) {
        require(check_green_axioms(Subgroup::full(*G)).ok, "green axioms");
        ComponentSystem S = crossed_burnside_system(G, FieldSpec::Q());
        for (const char* k : {"H1", "H2", "H3", "H4p"})
            require(S.verdict(k).ok, "crossed system axiom failed: " + std::string(k));
        S.require_orbit_verified();
    }
    // frozen Z2 table
    ComponentSystem S = crossed_burnside_system(fx::cyclic(2), FieldSpec::Q());
    auto B = invariant_basis(S);
    require(B.size() == 4, "crossed Burnside ring of Z2 has rank 4");
    auto c = [&](const InvariantElement& v, int orb, int s) { return v.comp[orb][s]; };
    Scalar one = Scalar::one(S.field), two = Scalar::from_int(S.field, 2);
    require(c(product_orbit(B[0], B[0]), 0, 0) == two, "[Z2/1]^2 = 2 [Z2/1]");
    require(c(product_orbit(B[3], B[3]), 0, 1) == one, "[Z2/Z2]_t^2 = [Z2/Z2]_e");
    for (int i = 0; i < 4; ++i) {
        require(invariant_eq(product_orbit(B[1], B[i]), B[i]), "b1 is the left unit");
        require(invariant_eq(product_orbit(B[i], B[1]), B[i]), "b1 is the right unit");
    }
}

void criterion_fusion_oracle() {
    auto Z2 = fx::cyclic(2);
    auto Z4 = fx::cyclic(4);
    std::vector<AbelianExtension> exts;
    exts.push_back(plain_double(Z2, "DZ2"));
    exts.push_back(twisted_double(Z2, ThreeCocycle::trivial(*Z2), "DZ2-om0"));
    exts.push_back(twisted_double(Z2, fx::zn_omega(*Z2), "DwZ2"));
    exts.push_back(plain_double(fx::s3(), "DS3"));
    exts.push_back(twisted_double(Z4, fx::zn_omega(*Z4), "DwZ4"));
    for (auto& e : exts) {
        FusionData F = prepare_fusion(std::move(e));
        pair_table(F);  // oracle agreement + dimension count inside
    }
}

void check_all_triples(const FusionData& F) {
    auto tab = pair_table(F);
    const int n = static_cast<int>(F.hlabels.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                auto [k, u] = F.hlabels[c];
                auto [i, s] = F.hlabels[a];
                FusionSum left = fuse_via(F, tab, tab[a][b], single(F, k, u));
                FusionSum right = fuse_via(F, tab, single(F, i, s), tab[b][c]);
                require(left == right, F.ext.name + ": associativity fails at (" +
                                           std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + ")");
            }
}

void criterion_fusion_associativity() {
    auto Z2 = fx::cyclic(2);
    auto Z4 = fx::cyclic(4);
    {
        FusionData F = prepare_fusion(plain_double(Z2, "DZ2"));
        check_all_triples(F);
    }
    {
        FusionData F = prepare_fusion(twisted_double(Z2, fx::zn_omega(*Z2), "DwZ2"));
        check_all_triples(F);
    }
    {
        FusionData F = prepare_fusion(plain_double(fx::s3(), "DS3"));
        check_all_triples(F);
    }
    {
        FusionData F = prepare_fusion(twisted_double(Z4, fx::zn_omega(*Z4), "DwZ4"));
        check_all_triples(F);
    }
}

void criterion_cocycles() {
    for (int n : {2, 3, 4, 6}) {
        auto Z = fx::cyclic(n);
        ThreeCocycle w = fx::zn_omega(*Z);
        require(check_three_cocycle(w).ok, "carry cocycle fails pentagon");
        GroupAction a = GroupAction::conjugation(*Z);
        require(check_sigma_family(a, sigma_of_omega(w)).ok, "derived sigma family");
        require(check_sigma_tau(a, sigma_of_omega(w), tau_of_omega(w)).ok,
                "sigma/tau compatibility");
        require(check_psi_multiplicative(a, sigma_of_omega(w), tau_of_omega(w)).ok,
                "psi twist multiplicativity");
    }
    auto G = fx::s3();
    ThreeCocycle w = fx::s3_omega(*G);
    require(check_three_cocycle(w).ok, "S3 cocycle fails pentagon");
    GroupAction a = GroupAction::conjugation(*G);
    require(check_sigma_family(a, sigma_of_omega(w)).ok, "S3 sigma family");
    require(check_sigma_tau(a, sigma_of_omega(w), tau_of_omega(w)).ok, "S3 sigma/tau");
    require(check_psi_multiplicative(a, sigma_of_omega(w), tau_of_omega(w)).ok, "S3 psi");
    // corruption must be caught
    auto Z4 = fx::cyclic(4);
    ThreeCocycle bad = fx::zn_omega(*Z4);
    bad.e[1][1][1] = (bad.e[1][1][1] + 1) % static_cast<int>(bad.m);
    require(!check_three_cocycle(bad).ok, "corrupted cocycle accepted");
}

void criterion_endo_lemma() {
    FusionData F3 = prepare_fusion(plain_double(fx::s3(), "DS3"));
    for (int g = 0; g < 6; ++g)
        require(check_endo_lemma(F3, g).ok, "endo lemma DS3 at g=" + std::to_string(g));
    auto Z4 = fx::cyclic(4);
    FusionData F4 = prepare_fusion(twisted_double(Z4, fx::zn_omega(*Z4), "DwZ4"));
    for (int g = 0; g < 4; ++g)
        require(check_endo_lemma(F4, g).ok, "endo lemma DwZ4 at g=" + std::to_string(g));
    auto Z2 = fx::cyclic(2);
    FusionData F2 = prepare_fusion(twisted_double(Z2, fx::zn_omega(*Z2), "DwZ2"));
    for (int g = 0; g < 2; ++g)
        require(check_endo_lemma(F2, g).ok, "endo lemma DwZ2 at g=" + std::to_string(g));
}

void criterion_twisted_modules() {
    // untwisted algebras: full simple set with the right dimension count
    for (auto G : {fx::s3(), fx::d4(), fx::q8(), fx::cyclic(6)}) {
        auto alg = std::make_shared<const TwistedGroupAlgebra>(make_twisted_algebra(
            G, Subgroup::full(*G), 1,
            std::vector<std::vector<int>>(G->n, std::vector<int>(G->n, 0))));
        TwistedSimples S = simple_modules(alg);
        long sq = 0;
        for (auto& M : S.simples) sq += M.dim * M.dim;
        require(sq == G->n, "sum of dim^2 != |G|");
    }
    // the twisted Klein algebra: one simple of dimension 2, frozen character
    auto V = fx::v4();
    std::vector<std::vector<int>> sig(4, std::vector<int>(4, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) sig[a][b] = (a & 1) * ((b >> 1) & 1) % 2;
    auto alg = std::make_shared<const TwistedGroupAlgebra>(
        make_twisted_algebra(V, Subgroup::full(*V), 2, sig));
    require(alg->field == FieldSpec::Cyc(4), "twisted Klein field");
    FiniteGroup E = central_extension(*alg);
    require(E.n == 8 && !E.is_abelian() && E.exponent() == 4, "central extension shape");
    int involutions = 0;
    for (int g = 0; g < E.n; ++g) involutions += E.order_of(g) == 2;
    require(involutions == 5, "central extension must be dihedral, not quaternion");
    TwistedSimples S = simple_modules(alg);
    require(S.simples.size() == 1 && S.simples[0].dim == 2, "single 2-dim simple");
    require(S.character[0][0] == Scalar::from_int(alg->field, 2), "character at 1");
    for (int a = 1; a < 4; ++a)
        require(S.character[0][a].is_zero(), "character vanishes off 1");

    // induction: regular module of C3 < S3 induces to the regular of S3
    auto G = fx::s3();
    auto full = std::make_shared<const TwistedGroupAlgebra>(make_twisted_algebra(
        G, Subgroup::full(*G), 1, std::vector<std::vector<int>>(6, std::vector<int>(6, 0))));
    Subgroup C3 = Subgroup::generated(*G, {1});
    auto sub = std::make_shared<const TwistedGroupAlgebra>(make_twisted_algebra(
        G, C3, 1, std::vector<std::vector<int>>(3, std::vector<int>(3, 0)), full->field.m));
    TwistedModule reg;
    reg.alg = sub;
    reg.dim = 3;
    FiniteGroup L = C3.local_group();
    for (int a = 0; a < 3; ++a) {
        Mat P(full->field, 3, 3);
        for (int b = 0; b < 3; ++b) P.at(L.mul(a, b), b) = Scalar::one(full->field);
        reg.rep.push_back(P);
    }
    verify_twisted_module(reg);
    TwistedSimples SF = simple_modules(full);
    std::vector<long> mult = decompose(induce_module(reg, full), SF);
    std::vector<long> dims;
    for (auto& M : SF.simples) dims.push_back(M.dim);
    require(mult == dims, "induced regular != regular");

    // tensor multiplies characters when the rescaling is trivial
    std::vector<int> no_twist(6, 0);
    for (auto& M : SF.simples)
        for (auto& N : SF.simples) {
            TwistedModule T = tensor_twisted(M, N, no_twist, 1, full);
            for (int a = 0; a < 6; ++a)
                require(T.character(a) == M.character(a) * N.character(a),
                        "tensor character mismatch");
        }
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void()> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"group algebra systems verify H1-H4 and match convolution", 5.0,
         criterion_group_algebra_axioms},
        {"S3 center structure constants match the oracle", 1.0, criterion_center_table},
        {"full product equals indexed orbit sum over Q and F3", 1.0,
         criterion_index_comparison},
        {"double-coset product agrees with the orbit transversal product", 30.0,
         criterion_doublecoset_vs_orbit},
        {"crossed Burnside systems: green axioms, H4', frozen Z2 table", 60.0,
         criterion_crossed_burnside},
        {"fusion products equal the coproduct tensor oracle on five doubles", 300.0,
         criterion_fusion_oracle},
        {"Grothendieck-ring associativity on all simple triples", 300.0,
         criterion_fusion_associativity},
        {"cocycle identities: pentagon, sigma family, tau compatibility", 10.0,
         criterion_cocycles},
        {"endomorphism commutant lemma on every component", 30.0, criterion_endo_lemma},
        {"twisted group algebra module theory (simples, induce, tensor)", 60.0,
         criterion_twisted_modules},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        std::string err;
        try {
            c.fn();
        } catch (const std::exception& e) {
            err = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool over = secs > c.budget_seconds;
        bool pass = err.empty() && !over;
        if (!pass) ++failures;
        std::printf("[%s] %zu/%zu %s (%.2fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL",
                    i + 1, criteria.size(), c.name.c_str(), secs, c.budget_seconds,
                    err.empty() ? "" : " — ", err.c_str());
    }
    if (failures) std::printf("acceptance: %d criterion(s) failed\n", failures);
    else std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return failures ? 1 : 0;
}
