#include "ccr/cocycle.hpp"

#include <sstream>

namespace ccr {

namespace {
int norm_mod(long v, long m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

std::string wit(std::initializer_list<int> xs, long lhs, long rhs, long m) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << "): exponent " << lhs << " != " << rhs << " (mod " << m << ")";
    return os.str();
}
}  // namespace

ThreeCocycle ThreeCocycle::trivial(const FiniteGroup& G) {
    ThreeCocycle w;
    w.G = &G;
    w.m = 1;
    w.e.assign(G.n, std::vector<std::vector<int>>(G.n, std::vector<int>(G.n, 0)));
    return w;
}

ThreeCocycle ThreeCocycle::from_table(const FiniteGroup& G, long m,
                                      std::vector<std::vector<std::vector<int>>> table) {
    if (m < 1) throw InputError("cocycle modulus must be >= 1");
    if (static_cast<int>(table.size()) != G.n)
        throw InputError("omega table must be |G| x |G| x |G|");
    for (auto& plane : table) {
        if (static_cast<int>(plane.size()) != G.n)
            throw InputError("omega table must be |G| x |G| x |G|");
        for (auto& row : plane) {
            if (static_cast<int>(row.size()) != G.n)
                throw InputError("omega table must be |G| x |G| x |G|");
            for (auto& v : row) v = norm_mod(v, m);
        }
    }
    ThreeCocycle w;
    w.G = &G;
    w.m = m;
    w.e = std::move(table);
    return w;
}

CheckReport check_three_cocycle(const ThreeCocycle& w) {
    CheckReport r;
    r.name = "three_cocycle";
    const FiniteGroup& G = *w.G;
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            for (int c = 0; c < G.n; ++c) {
                if ((a == 0 || b == 0 || c == 0) && w.exp(a, b, c) != 0) {
                    r.ok = false;
                    r.witness = "not normalized at " + wit({a, b, c}, w.exp(a, b, c), 0, w.m);
                    return r;
                }
                for (int d = 0; d < G.n; ++d) {
                    long lhs = w.exp(a, b, c) + w.exp(a, G.mul(b, c), d) + w.exp(b, c, d);
                    long rhs = w.exp(G.mul(a, b), c, d) + w.exp(a, b, G.mul(c, d));
                    if (norm_mod(lhs, w.m) != norm_mod(rhs, w.m)) {
                        r.ok = false;
                        r.witness = wit({a, b, c, d}, lhs, rhs, w.m);
                        return r;
                    }
                }
            }
    return r;
}

SigmaFamily sigma_of_omega(const ThreeCocycle& w) {
    const FiniteGroup& G = *w.G;
    SigmaFamily s;
    s.m = w.m;
    s.e.assign(G.n, std::vector<std::vector<int>>(G.n, std::vector<int>(G.n, 0)));
    for (int g = 0; g < G.n; ++g)
        for (int x = 0; x < G.n; ++x)
            for (int y = 0; y < G.n; ++y) {
                int xy = G.mul(x, y);
                int gxy = G.conj(G.inv[xy], g);  // (xy)^{-1} g (xy)
                int gx = G.conj(G.inv[x], g);    // x^{-1} g x
                long v = w.exp(g, x, y) + w.exp(x, y, gxy) - w.exp(x, gx, y);
                s.e[g][x][y] = norm_mod(v, w.m);
            }
    return s;
}

TauFamily tau_of_omega(const ThreeCocycle& w) {
    const FiniteGroup& G = *w.G;
    TauFamily t;
    t.m = w.m;
    t.e.assign(G.n, std::vector<std::vector<int>>(G.n, std::vector<int>(G.n, 0)));
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h)
            for (int x = 0; x < G.n; ++x) {
                int gx = G.conj(G.inv[x], g);
                int hx = G.conj(G.inv[x], h);
                long v = w.exp(g, h, x) + w.exp(x, gx, hx) - w.exp(g, x, hx);
                t.e[g][h][x] = norm_mod(v, w.m);
            }
    return t;
}

CheckReport check_sigma_family(const GroupAction& a, const SigmaFamily& s) {
    CheckReport r;
    r.name = "sigma_family";
    const FiniteGroup& G = *a.G;
    const FiniteGroup& L = *a.L;
    for (int g = 0; g < G.n; ++g)
        for (int x = 0; x < L.n; ++x) {
            if (s.exp(g, 0, x) != 0 || s.exp(g, x, 0) != 0) {
                r.ok = false;
                r.witness = "sigma not normalized at g=" + std::to_string(g) +
                            ", x=" + std::to_string(x);
                return r;
            }
        }
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            if (s.exp(0, x, y) != 0) {
                r.ok = false;
                r.witness = "sigma_1 must be trivial, witness (" + std::to_string(x) + "," +
                            std::to_string(y) + ")";
                return r;
            }
    for (int g = 0; g < G.n; ++g)
        for (int x = 0; x < L.n; ++x) {
            int gx = a.act(L.inv[x], g);  // x^{-1}.g
            for (int y = 0; y < L.n; ++y)
                for (int z = 0; z < L.n; ++z) {
                    long lhs = s.exp(gx, y, z) + s.exp(g, x, L.mul(y, z));
                    long rhs = s.exp(g, x, y) + s.exp(g, L.mul(x, y), z);
                    if ((lhs - rhs) % s.m != 0) {
                        r.ok = false;
                        r.witness = wit({g, x, y, z}, lhs, rhs, s.m);
                        return r;
                    }
                }
        }
    return r;
}

CheckReport check_sigma_tau(const GroupAction& a, const SigmaFamily& s, const TauFamily& t) {
    CheckReport r;
    r.name = "sigma_tau";
    if (s.m != t.m) {
        r.ok = false;
        r.witness = "sigma and tau use different moduli";
        return r;
    }
    const FiniteGroup& G = *a.G;
    const FiniteGroup& L = *a.L;
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h)
            if (t.exp(g, h, 0) != 0) {
                r.ok = false;
                r.witness = "tau_{g,h}(1) != 1 at g=" + std::to_string(g) +
                            ", h=" + std::to_string(h);
                return r;
            }
    for (int g = 0; g < G.n; ++g)
        for (int x = 0; x < L.n; ++x)
            if (t.exp(0, g, x) != 0 || t.exp(g, 0, x) != 0) {
                r.ok = false;
                r.witness = "tau with identity grading component must be trivial, g=" +
                            std::to_string(g) + ", x=" + std::to_string(x);
                return r;
            }
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h) {
            int gh = G.mul(g, h);
            for (int x = 0; x < L.n; ++x) {
                if (a.act(x, g) != g || a.act(x, h) != h) continue;
                for (int y = 0; y < L.n; ++y) {
                    if (a.act(y, g) != g || a.act(y, h) != h) continue;
                    long lhs = s.exp(g, x, y) + s.exp(h, x, y);
                    long rhs = s.exp(gh, x, y) - t.exp(g, h, x) - t.exp(g, h, y) +
                               t.exp(g, h, L.mul(x, y));
                    if ((lhs - rhs) % s.m != 0) {
                        r.ok = false;
                        r.witness = wit({g, h, x, y}, lhs, rhs, s.m);
                        return r;
                    }
                }
            }
        }
    return r;
}

std::vector<int> psi_twist(const TauFamily& t, int g, int h) { return t.e[g][h]; }

CheckReport check_psi_multiplicative(const GroupAction& a, const SigmaFamily& s,
                                     const TauFamily& t) {
    CheckReport r;
    r.name = "psi_multiplicative";
    const FiniteGroup& G = *a.G;
    const FiniteGroup& L = *a.L;
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h) {
            int gh = G.mul(g, h);
            auto tw = psi_twist(t, g, h);
            for (int x = 0; x < L.n; ++x) {
                if (a.act(x, g) != g || a.act(x, h) != h) continue;
                for (int y = 0; y < L.n; ++y) {
                    if (a.act(y, g) != g || a.act(y, h) != h) continue;
                    // psi(x)psi(y) in k_{sigma_g sigma_h}:
                    //   tau(x)+tau(y)+sigma_g(x,y)+sigma_h(x,y) on (xy)
                    // psi(sigma_{gh}(x,y)(xy)) = sigma_{gh}(x,y)+tau(xy) on (xy)
                    long lhs = tw[x] + tw[y] + s.exp(g, x, y) + s.exp(h, x, y);
                    long rhs = s.exp(gh, x, y) + tw[L.mul(x, y)];
                    if ((lhs - rhs) % s.m != 0) {
                        r.ok = false;
                        r.witness = wit({g, h, x, y}, lhs, rhs, s.m);
                        return r;
                    }
                }
            }
        }
    return r;
}

SigmaFamily trivial_sigma(const GroupAction& a) {
    SigmaFamily s;
    s.m = 1;
    s.e.assign(a.G->n, std::vector<std::vector<int>>(a.L->n, std::vector<int>(a.L->n, 0)));
    return s;
}

TauFamily trivial_tau(const GroupAction& a) {
    TauFamily t;
    t.m = 1;
    t.e.assign(a.G->n, std::vector<std::vector<int>>(a.G->n, std::vector<int>(a.L->n, 0)));
    return t;
}

}  // namespace ccr
