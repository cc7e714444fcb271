#include "ccr/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ccr {

namespace {

long isqrt_floor(long v) {
    long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Smallest prime p = 1 (mod m) with p > floor and p coprime to |G|.
long pick_prime(long m, long floor_excl, long order) {
    for (long p = m + 1;; p += m) {
        if (p <= floor_excl) continue;
        if (!is_prime(p)) continue;
        if (order % p == 0) continue;
        return p;
    }
}

long fp_pow(long b, long e, long p) {
    long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

ClassData conjugacy_classes(const FiniteGroup& G) {
    GroupAction conj = GroupAction::conjugation(G);
    std::vector<Orbit> os = orbits(conj);
    ClassData c;
    c.class_of.assign(G.n, -1);
    for (const Orbit& o : os) {
        int idx = static_cast<int>(c.rep.size());
        c.rep.push_back(o.rep);
        c.members.push_back(o.members);
        for (int g : o.members) c.class_of[g] = idx;
    }
    c.inverse_class.resize(c.count());
    for (int i = 0; i < c.count(); ++i) c.inverse_class[i] = c.class_of[G.inv[c.rep[i]]];
    return c;
}

CharacterTable character_table(const FiniteGroup& G, long field_order) {
    long expo = G.exponent();
    if (field_order == 0) field_order = expo;
    if (field_order % expo != 0)
        throw InputError("character table field order must be a multiple of the group exponent");
    const FieldSpec F = FieldSpec::Cyc(field_order);

    ClassData cls = conjugacy_classes(G);
    const int k = cls.count();

    // Class-sum multiplication matrices over F_p, p = 1 (mod exponent) and
    // large enough that degrees and root-of-unity multiplicities (all bounded
    // by sqrt|G|) lift uniquely from their residues.
    const long p = pick_prime(expo, 2 * isqrt_floor(G.n) + 1, G.n);
    const FieldSpec P = FieldSpec::Fp(p);
    std::vector<Mat> M(k, Mat(P, k, k));
    for (int i = 0; i < k; ++i) {
        // column j of M[i]: class-sum product C_i * C_j expressed over classes
        for (int j = 0; j < k; ++j) {
            std::vector<long> coeff(k, 0);
            for (int x : cls.members[i])
                for (int y : cls.members[j]) ++coeff[cls.class_of[G.mul(x, y)]];
            // every member of a class appears with the same multiplicity
            for (int l = 0; l < k; ++l) {
                if (coeff[l] % cls.size(l) != 0)
                    throw MathError("class algebra structure constants are not class-constant");
                M[i].at(l, j) = Scalar::fp(p, coeff[l] / cls.size(l) % p);
            }
        }
    }

    // Simultaneous eigenspace refinement: the class algebra is split
    // commutative semisimple over F_p, so the common eigenspaces are lines.
    std::vector<Mat> spaces{Mat::identity(P, k)};
    for (int i = 1; i < k; ++i) {
        std::vector<Mat> next;
        for (const Mat& B : spaces) {
            if (B.cols() == 1) {
                next.push_back(B);
                continue;
            }
            Mat A = M[i] * B;
            size_t found = 0;
            for (long lam = 0; lam < p && found < B.cols(); ++lam) {
                Mat shifted = A - B.scaled(Scalar::fp(p, lam));
                std::vector<Vec> ker = kernel_basis(shifted);
                if (ker.empty()) continue;
                found += ker.size();
                next.push_back(B * Mat::from_cols(P, ker));
            }
            if (found != B.cols())
                throw MathError("class algebra failed to split over the chosen prime field");
        }
        spaces.swap(next);
    }
    if (static_cast<int>(spaces.size()) != k)
        throw MathError("expected one common eigenvector per irreducible character");

    const Scalar one_p = Scalar::fp(p, 1);
    std::vector<std::vector<long>> omega(k, std::vector<long>(k));  // [row][class]
    std::vector<long> degree(k);
    for (int r = 0; r < k; ++r) {
        Vec v = spaces[r].col(0);
        size_t nz = 0;
        while (v[nz].is_zero()) ++nz;
        for (int i = 0; i < k; ++i) {
            Vec w = M[i].apply(v);
            omega[r][i] = *((w[nz] / v[nz]).as_integer());
        }
        // chi(1)^2 = |G| / sum_i omega_i * omega_{i*} / |C_i|
        Scalar s = Scalar::zero(P);
        for (int i = 0; i < k; ++i)
            s = s + Scalar::fp(p, omega[r][i]) * Scalar::fp(p, omega[r][cls.inverse_class[i]]) /
                        Scalar::fp(p, cls.size(i) % p);
        long d2 = *((Scalar::fp(p, G.n % p) / s).as_integer());
        long deg = 0;
        for (long d = 1; d <= isqrt_floor(G.n); ++d)
            if (d * d % p == d2) {
                deg = d;
                break;
            }
        if (deg == 0) throw MathError("character degree not recovered from its residue");
        degree[r] = deg;
    }

    // Exact lift: chi(g) = sum_j m_j zeta_d^j where m_j counts the
    // eigenvalue zeta_d^j of rho(g); the m_j are residues of small integers.
    const long theta = [&] {
        // primitive expo-th root of unity in F_p
        for (long c = 2; c < p; ++c) {
            long t = fp_pow(c, (p - 1) / expo, p);
            bool prim = t != 1;
            for (long d = 2; prim && d < expo; ++d)
                if (expo % d == 0 && fp_pow(t, d, p) == 1) prim = false;
            if (prim) return t;
        }
        throw MathError("no primitive root of unity found");
    }();

    std::vector<std::vector<Scalar>> chi(k, std::vector<Scalar>(k));
    for (int r = 0; r < k; ++r) {
        std::vector<long> chi_p(k);
        for (int i = 0; i < k; ++i) {
            Scalar v = Scalar::fp(p, degree[r] % p) * Scalar::fp(p, omega[r][i]) /
                       Scalar::fp(p, cls.size(i) % p);
            chi_p[i] = *v.as_integer();
        }
        for (int i = 0; i < k; ++i) {
            const int g = cls.rep[i];
            const long d = G.order_of(g);
            const long th_d = fp_pow(theta, expo / d, p);
            const long dinv = fp_pow(d % p, p - 2, p);
            Scalar val = Scalar::zero(F);
            long total = 0;
            for (long j = 0; j < d; ++j) {
                long acc = 0;
                int pw = 0;  // g^l
                for (long l = 0; l < d; ++l) {
                    long ev = fp_pow(th_d, (d - j % d) * l % d, p);  // theta_d^{-lj}
                    acc = (acc + chi_p[cls.class_of[pw]] * ev) % p;
                    pw = G.mul(pw, g);
                }
                long mj = acc * dinv % p;
                if (mj > degree[r])
                    throw MathError("root-of-unity multiplicity exceeds the degree");
                total += mj;
                if (mj != 0)
                    val = val + Scalar::from_int(F, mj) * Scalar::root_of_unity(F, d, j);
            }
            if (total != degree[r])
                throw MathError("eigenvalue multiplicities do not sum to the degree");
            chi[r][i] = val;
        }
    }

    CharacterTable T;
    T.field = F;
    T.cls = std::move(cls);
    T.degree = std::move(degree);
    T.chi = std::move(chi);

    // deterministic row order
    std::vector<int> ord(k);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        if (T.degree[a] != T.degree[b]) return T.degree[a] < T.degree[b];
        for (int i = 0; i < k; ++i) {
            int c = T.chi[a][i].cmp(T.chi[b][i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    {
        std::vector<long> dg(k);
        std::vector<std::vector<Scalar>> ch(k);
        for (int r = 0; r < k; ++r) {
            dg[r] = T.degree[ord[r]];
            ch[r] = std::move(T.chi[ord[r]]);
        }
        T.degree = std::move(dg);
        T.chi = std::move(ch);
    }

    // Hard verification of the lift: first orthogonality and the degree sum.
    long dsum = 0;
    for (int r = 0; r < k; ++r) dsum += T.degree[r] * T.degree[r];
    if (dsum != G.n) throw MathError("degree squares do not sum to the group order");
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Scalar ip = character_inner(T, T.chi[a], T.chi[b]);
            if (ip != Scalar::from_int(F, a == b ? 1 : 0))
                throw MathError("character table fails the orthogonality relations");
        }
    return T;
}

Scalar character_inner(const CharacterTable& T, const std::vector<Scalar>& a,
                       const std::vector<Scalar>& b) {
    const FieldSpec& F = T.field;
    Scalar s = Scalar::zero(F);
    for (int i = 0; i < T.cls.count(); ++i)
        s = s + Scalar::from_int(F, T.cls.size(i)) * a[i] * b[T.cls.inverse_class[i]];
    return s / Scalar::from_int(F, static_cast<long>(T.cls.class_of.size()));
}

namespace {

// Group-algebra convolution of element-indexed coefficient vectors.
Vec convolve(const FiniteGroup& G, const FieldSpec& F, const Vec& a, const Vec& b) {
    Vec out = vec_zero(F, G.n);
    for (int g = 0; g < G.n; ++g) {
        if (a[g].is_zero()) continue;
        for (int h = 0; h < G.n; ++h) {
            if (b[h].is_zero()) continue;
            int gh = G.mul(g, h);
            out[gh] = out[gh] + a[g] * b[h];
        }
    }
    return out;
}

}  // namespace

std::vector<Irrep> irreducible_reps(const FiniteGroup& G, const CharacterTable& T) {
    const FieldSpec& F = T.field;
    std::vector<Irrep> out(T.count());

    // distinct cyclic subgroups, by ascending generator index
    std::vector<std::pair<int, std::vector<int>>> cyclics;  // (generator, powers)
    std::set<std::vector<int>> seen;
    for (int c = 1; c < G.n; ++c) {
        std::vector<int> pows{0};
        int x = c;
        while (x != 0) {
            pows.push_back(x);
            x = G.mul(x, c);
        }
        std::vector<int> key = pows;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) cyclics.emplace_back(c, pows);
    }

    for (int r = 0; r < T.count(); ++r) {
        Irrep& ir = out[r];
        ir.dim = T.degree[r];
        ir.rho.resize(G.n);
        if (ir.dim == 1) {
            for (int g = 0; g < G.n; ++g) {
                Mat m(F, 1, 1);
                m.at(0, 0) = T.value(r, g);
                ir.rho[g] = m;
            }
            continue;
        }

        // central idempotent of the character
        Vec e_chi = vec_zero(F, G.n);
        Scalar scale = Scalar::from_int(F, ir.dim) / Scalar::from_int(F, G.n);
        for (int g = 0; g < G.n; ++g) e_chi[g] = scale * T.value(r, G.inv[g]);

        // multiplicity-one cyclic cut: <Res_C chi, lambda> = 1
        bool cut_found = false;
        for (const auto& [c, pows] : cyclics) {
            const long d = static_cast<long>(pows.size());
            for (long t = 0; t < d && !cut_found; ++t) {
                Scalar mult = Scalar::zero(F);
                for (long l = 0; l < d; ++l)
                    mult = mult +
                           T.value(r, pows[l]) * Scalar::root_of_unity(F, d, (d - t) * l % d);
                mult = mult / Scalar::from_int(F, d);
                if (mult != Scalar::one(F)) continue;
                cut_found = true;

                Vec pi = vec_zero(F, G.n);
                Scalar dd = Scalar::from_int(F, d);
                for (long l = 0; l < d; ++l)
                    pi[pows[l]] = Scalar::root_of_unity(F, d, (d - t) * l % d) / dd;
                Vec eps = convolve(G, F, e_chi, pi);

                // left ideal (FG)eps: columns g.eps; basis by column reduction
                Mat R(F, G.n, G.n);
                for (int g = 0; g < G.n; ++g)
                    for (int h = 0; h < G.n; ++h) R.at(h, g) = eps[G.mul(G.inv[g], h)];
                Mat U = column_space_basis(R);
                if (static_cast<long>(U.cols()) != ir.dim)
                    throw MathError("idempotent cut has unexpected rank");

                // rho(g) solves  (left action of g on U) = U rho(g)
                for (int g = 0; g < G.n; ++g) {
                    Mat LU(F, G.n, U.cols());
                    for (size_t j = 0; j < U.cols(); ++j)
                        for (int h = 0; h < G.n; ++h) LU.at(G.mul(g, h), j) = U.at(h, j);
                    ir.rho[g] = solve_exact(U, LU);
                }
            }
            if (cut_found) break;
        }
        if (!cut_found)
            throw MathError("no multiplicity-one cyclic character found for a degree-" +
                            std::to_string(ir.dim) + " irreducible");
    }

    // verification: homomorphism property, identity, traces
    for (int r = 0; r < T.count(); ++r) {
        const Irrep& ir = out[r];
        if (!ir.rho[0].is_identity()) throw MathError("irrep does not send identity to identity");
        for (int g = 0; g < G.n; ++g) {
            if (ir.rho[g].trace() != T.value(r, g))
                throw MathError("irrep trace disagrees with its character");
            for (int h = 0; h < G.n; ++h)
                if (!(ir.rho[g] * ir.rho[h] == ir.rho[G.mul(g, h)]))
                    throw MathError("irrep fails the homomorphism property");
        }
    }
    return out;
}

}  // namespace ccr
