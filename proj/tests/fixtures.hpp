#pragma once

// Shared constructions for the test binaries: small groups with a fixed,
// documented indexing, and the standard cyclic-group 3-cocycles.

#include <memory>
#include <vector>

#include "ccr/cocycle.hpp"
#include "ccr/group.hpp"

namespace fx {

using ccr::FiniteGroup;
using ccr::GroupAction;
using ccr::ThreeCocycle;

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(t)));
}

// Klein four-group as bit vectors {0,1,2,3} under xor.
inline GroupPtr v4() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(t)));
}

// S3 on {0,1,2}; elements in the order
//   0: id   1: (012)   2: (021)   3: (01)   4: (12)   5: (02)
inline GroupPtr s3() {
    static const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto compose = [&](int a, int b) {
        std::vector<int> c(3);
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (int j = 0; j < 6; ++j)
            if (perms[j] == c) return j;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = compose(a, b);
    FiniteGroup G = FiniteGroup::from_table(std::move(t));
    G.labels = {"e", "(012)", "(021)", "(01)", "(12)", "(02)"};
    return std::make_shared<const FiniteGroup>(std::move(G));
}

// Dihedral group of the square, generated by the rotation (0123) and the
// reflection swapping 0<->3 and 1<->2.  Order 8.
inline GroupPtr d4() {
    return std::make_shared<const FiniteGroup>(
        FiniteGroup::from_perm_generators({{1, 2, 3, 0}, {3, 2, 1, 0}}, 4));
}

// Quaternion group {1,-1,i,-i,j,-j,k,-k} in that element order.
inline GroupPtr q8() {
    // regular multiplication encoded via (sign, axis) pairs
    auto idx = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    auto mul = [&](int a, int b) {
        const int sa = (a % 2) ? -1 : 1, ua = a / 2;
        const int sb = (b % 2) ? -1 : 1, ub = b / 2;
        // axes: 0 = 1, 1 = i, 2 = j, 3 = k
        static const int prod_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int prod_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1},
                                            {1, 1, -1, -1}};
        return idx(sa * sb * prod_sign[ua][ub], prod_axis[ua][ub]);
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(t)));
}

// The standard generator of H^3(Z/n, C^*) as an exponent table mod n:
//   omega(a,b,c) = zeta_n ^ (a * floor((b+c)/n)).
inline ThreeCocycle zn_omega(const FiniteGroup& Zn) {
    const int n = Zn.n;
    ThreeCocycle w;
    w.G = &Zn;
    w.m = n;
    w.e.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) w.e[a][b][c] = (a * ((b + c) / n)) % n;
    return w;
}

// Inflation of the nontrivial Z/2 cocycle along the sign map of S3 (m = 2).
inline ThreeCocycle s3_omega(const FiniteGroup& S3) {
    ThreeCocycle w;
    w.G = &S3;
    w.m = 2;
    auto sgn = [](int g) { return g >= 3 ? 1 : 0; };
    w.e.assign(6, std::vector<std::vector<int>>(6, std::vector<int>(6)));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c) w.e[a][b][c] = sgn(a) * sgn(b) * sgn(c);
    return w;
}

}  // namespace fx
