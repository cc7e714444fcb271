#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ccr/burnside.hpp"
#include "ccr/error.hpp"
#include "ccr/framework.hpp"
#include "fixtures.hpp"

using namespace ccr;

// ---- independent reference computations on explicit G-sets ----

// A finite K-set given by one permutation of points per element of K.
struct KSet {
    const FiniteGroup* K;
    std::vector<std::vector<int>> act;  // act[k][p]
    int points() const { return act.empty() ? 0 : static_cast<int>(act[0].size()); }
};

// The coset space K/H with K acting by left translation.
static KSet coset_space(const Subgroup& H) {
    const FiniteGroup& K = *H.G;
    auto reps = H.left_coset_reps();
    std::vector<int> coset_of(K.n, -1);
    for (size_t c = 0; c < reps.size(); ++c)
        for (int h : H.elems) coset_of[K.mul(reps[c], h)] = static_cast<int>(c);
    KSet X{&K, std::vector<std::vector<int>>(K.n, std::vector<int>(reps.size()))};
    for (int k = 0; k < K.n; ++k)
        for (size_t c = 0; c < reps.size(); ++c) X.act[k][c] = coset_of[K.mul(k, reps[c])];
    return X;
}

static KSet product_set(const KSet& X, const KSet& Y) {
    const int nx = X.points(), ny = Y.points();
    KSet P{X.K, std::vector<std::vector<int>>(X.K->n, std::vector<int>(nx * ny))};
    for (int k = 0; k < X.K->n; ++k)
        for (int p = 0; p < nx; ++p)
            for (int q = 0; q < ny; ++q) P.act[k][p * ny + q] = X.act[k][p] * ny + Y.act[k][q];
    return P;
}

// Decompose a K-set into transitive pieces and identify each piece by the
// conjugacy class of a point stabilizer.
static std::vector<long> decompose_set(const BurnsideBasis& B, const KSet& X) {
    const FiniteGroup& K = *X.K;
    std::vector<long> out(B.classes(), 0);
    std::vector<char> seen(X.points(), 0);
    for (int p = 0; p < X.points(); ++p) {
        if (seen[p]) continue;
        std::vector<int> stab;
        for (int k = 0; k < K.n; ++k) {
            seen[X.act[k][p]] = 1;
            if (X.act[k][p] == p) stab.push_back(k);
        }
        out[B.find_class(Subgroup::from_elements(K, stab))]++;
    }
    return out;
}

TEST_CASE("subgroup enumeration: frozen counts and sanity") {
    auto count = [](fx::GroupPtr G) {
        return all_subgroups(Subgroup::full(*G)).size();
    };
    CHECK(count(fx::s3()) == 6);    // 1, three <t>, <r>, S3
    CHECK(count(fx::d4()) == 10);
    CHECK(count(fx::q8()) == 6);    // 1, <-1>, <i>, <j>, <k>, Q8
    CHECK(count(fx::cyclic(4)) == 3);
    CHECK(count(fx::v4()) == 5);
    // orders divide the group order, and the list is sorted by order
    auto subs = all_subgroups(Subgroup::full(*fx::d4()));
    for (size_t i = 0; i < subs.size(); ++i) {
        CHECK(8 % subs[i].order() == 0);
        if (i) CHECK(subs[i - 1].order() <= subs[i].order());
    }
}

TEST_CASE("burnside basis: frozen class counts") {
    auto classes = [](fx::GroupPtr G) {
        return burnside_basis(Subgroup::full(*G)).classes();
    };
    CHECK(classes(fx::s3()) == 4);      // 1, C2, C3, S3
    CHECK(classes(fx::d4()) == 8);      // three C2 classes fuse to two... and so on
    CHECK(classes(fx::cyclic(2)) == 2);
    CHECK(classes(fx::cyclic(4)) == 3);
    CHECK(classes(fx::q8()) == 6);      // all subgroups normal
    CHECK(classes(fx::v4()) == 5);      // abelian: classes = subgroups
}

TEST_CASE("burnside product equals the G-set product oracle") {
    for (auto G : {fx::s3(), fx::d4(), fx::cyclic(4)}) {
        CAPTURE(G->n);
        BurnsideBasis B = burnside_basis(Subgroup::full(*G));
        for (int c1 = 0; c1 < B.classes(); ++c1)
            for (int c2 = 0; c2 < B.classes(); ++c2) {
                KSet prod = product_set(coset_space(B.rep(c1)), coset_space(B.rep(c2)));
                CHECK(burnside_mul(B, c1, c2) == decompose_set(B, prod));
            }
    }
}

TEST_CASE("restriction matches the point-wise oracle") {
    auto G = fx::s3();
    BurnsideBasis BG = burnside_basis(Subgroup::full(*G));
    for (const Subgroup& U : all_subgroups(Subgroup::full(*G))) {
        BurnsideBasis BU = burnside_basis(U);
        for (int c = 0; c < BG.classes(); ++c) {
            // same points, only U acting: decompose by point stabilizers in U
            KSet X = coset_space(BG.rep(c));
            std::vector<std::vector<int>> act;
            for (int u : U.elems) act.push_back(X.act[u]);
            std::vector<long> expect(BU.classes(), 0);
            std::vector<char> seen(X.points(), 0);
            for (int p = 0; p < X.points(); ++p) {
                if (seen[p]) continue;
                std::vector<int> stab;
                for (size_t ui = 0; ui < U.elems.size(); ++ui) {
                    seen[act[ui][p]] = 1;
                    if (act[ui][p] == p) stab.push_back(U.elems[ui]);
                }
                expect[BU.find_class(Subgroup::from_elements(*G, stab))]++;
            }
            CHECK(burnside_restrict(BG, BU, c) == expect);
        }
    }
}

TEST_CASE("induction then restriction obeys the double coset formula") {
    auto G = fx::s3();
    CheckReport r = check_green_axioms(Subgroup::full(*G));
    CHECK(r.ok);
    CHECK(check_green_axioms(Subgroup::full(*fx::cyclic(2))).ok);
    CHECK(check_green_axioms(Subgroup::full(*fx::cyclic(4))).ok);
    CHECK(check_green_axioms(Subgroup::full(*fx::v4())).ok);
}

TEST_CASE("crossed system over Z2: frozen rank-4 table") {
    auto Z = fx::cyclic(2);
    ComponentSystem S = crossed_burnside_system(Z, FieldSpec::Q());
    CHECK(S.verified());          // abelian: full associativity holds
    CHECK(S.verdict("H4p").ok);   // and the transversal form too
    REQUIRE(S.orbs.size() == 2);
    REQUIRE(S.dim(0) == 2);
    REQUIRE(S.dim(1) == 2);

    // basis: b0 = [Z2/1]_e, b1 = [Z2/Z2]_e (the unit), b2 = [Z2/1]_t,
    // b3 = [Z2/Z2]_t, components indexed by e, t
    auto B = invariant_basis(S);
    REQUIRE(B.size() == 4);
    auto prod = [&](int i, int j) { return product_orbit(B[i], B[j]); };
    auto coeff = [&](const InvariantElement& v, int orb, int s) { return v.comp[orb][s]; };
    Scalar zero = Scalar::zero(S.field), one = Scalar::one(S.field);
    Scalar two = Scalar::from_int(S.field, 2);

    // multiplication by the unit b1 fixes everything
    for (int i = 0; i < 4; ++i) {
        CHECK(invariant_eq(prod(1, i), B[i]));
        CHECK(invariant_eq(prod(i, 1), B[i]));
    }
    // [Z2/1]^2 = 2 [Z2/1] in both graded spots
    CHECK(coeff(prod(0, 0), 0, 0) == two);
    CHECK(coeff(prod(0, 0), 0, 1) == zero);
    CHECK(coeff(prod(2, 2), 0, 0) == two);
    CHECK(coeff(prod(2, 2), 0, 1) == zero);
    // grading: free class at t squared lands at e; [Z2/Z2]_t^2 = [Z2/Z2]_e
    CHECK(coeff(prod(3, 3), 0, 0) == zero);
    CHECK(coeff(prod(3, 3), 0, 1) == one);
    CHECK(coeff(prod(3, 3), 1, 0) == zero);
    CHECK(coeff(prod(3, 3), 1, 1) == zero);
    // mixed: [Z2/1]_e * [Z2/Z2]_t = [Z2/1]_t
    CHECK(coeff(prod(0, 3), 1, 0) == one);
    CHECK(coeff(prod(0, 3), 1, 1) == zero);
}

TEST_CASE("crossed system axiom profile on nonabelian groups") {
    auto G = fx::s3();
    ComponentSystem S = crossed_burnside_system(G, FieldSpec::Q());
    CHECK(S.verdict("H1").ok);
    CHECK(S.verdict("H2").ok);
    CHECK(S.verdict("H3").ok);
    // the transfer product is associative at the invariant level ...
    CHECK(S.verdict("H4p").ok);
    // ... but genuinely not componentwise
    CheckReport r = S.verdict("H4");
    CHECK(!r.ok);
    CHECK(!r.witness.empty());
    CHECK_NOTHROW(S.require_orbit_verified());
    CHECK_THROWS_AS(S.require_verified(), CheckError);
}

TEST_CASE("crossed system components are centralizer Burnside rings") {
    auto G = fx::s3();
    ComponentSystem S = crossed_burnside_system(G, FieldSpec::Q());
    GroupAction conj = GroupAction::conjugation(*G);
    for (int g = 0; g < G->n; ++g) {
        BurnsideBasis B = burnside_basis(stabilizer(conj, g));
        CHECK(S.dim(g) == B.classes());
        // labels carry the subgroup data
        for (int c = 0; c < B.classes(); ++c) CHECK(S.labels[g][c] == B.label(c));
    }
}

TEST_CASE("crossed product against a direct transfer-formula recomputation") {
    // independent recomputation of m_{g,h}(base s, base t) for S3:
    // restrict to C(g) cap C(h), multiply there, induce to C(gh)
    auto G = fx::s3();
    ComponentSystem S = crossed_burnside_system(G, FieldSpec::Q());
    GroupAction conj = GroupAction::conjugation(*G);
    for (int g = 0; g < G->n; ++g)
        for (int h = 0; h < G->n; ++h) {
            BurnsideBasis Bg = burnside_basis(stabilizer(conj, g));
            BurnsideBasis Bh = burnside_basis(stabilizer(conj, h));
            BurnsideBasis Bgh = burnside_basis(stabilizer(conj, G->mul(g, h)));
            BurnsideBasis Bi = burnside_basis(Bg.K.intersect(Bh.K));
            for (int s = 0; s < Bg.classes(); ++s)
                for (int t = 0; t < Bh.classes(); ++t) {
                    auto rs = burnside_restrict(Bg, Bi, s);
                    auto rt = burnside_restrict(Bh, Bi, t);
                    std::vector<long> acc(Bgh.classes(), 0);
                    for (int a = 0; a < Bi.classes(); ++a)
                        for (int b = 0; b < Bi.classes(); ++b) {
                            if (rs[a] == 0 || rt[b] == 0) continue;
                            auto ab = burnside_mul(Bi, a, b);
                            for (int c = 0; c < Bi.classes(); ++c) {
                                if (ab[c] == 0) continue;
                                auto ind = burnside_induce(Bi, Bgh, c);
                                for (int d = 0; d < Bgh.classes(); ++d)
                                    acc[d] += rs[a] * rt[b] * ab[c] * ind[d];
                            }
                        }
                    Vec es(S.dim(g), Scalar::zero(S.field));
                    es[s] = Scalar::one(S.field);
                    Vec et(S.dim(h), Scalar::zero(S.field));
                    et[t] = Scalar::one(S.field);
                    Vec got = S.apply_mul(g, h, es, et);
                    REQUIRE(got.size() == acc.size());
                    for (size_t d = 0; d < acc.size(); ++d)
                        CHECK(got[d] == Scalar::from_int(S.field, acc[d]));
                }
        }
}
