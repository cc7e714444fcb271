#include "ccr/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace ccr {

namespace {
std::string tuple_str(std::initializer_list<int> xs) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << ")";
    return os.str();
}
}  // namespace

int FiniteGroup::order_of(int g) const {
    int k = 1, cur = g;
    while (cur != 0) {
        cur = mul(cur, g);
        ++k;
    }
    return k;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (int g = 0; g < n; ++g) e = std::lcm(e, static_cast<long>(order_of(g)));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::string FiniteGroup::label(int g) const {
    if (g >= 0 && g < static_cast<int>(labels.size()) && !labels[g].empty()) return labels[g];
    return "g" + std::to_string(g);
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> t) {
    FiniteGroup g;
    g.n = static_cast<int>(t.size());
    if (g.n == 0) throw InputError("empty Cayley table");
    for (const auto& row : t)
        if (static_cast<int>(row.size()) != g.n)
            throw InputError("Cayley table is not square");
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (t[a][b] < 0 || t[a][b] >= g.n)
                throw InputError("Cayley table entry out of range at " + tuple_str({a, b}));
    for (int a = 0; a < g.n; ++a) {
        if (t[0][a] != a || t[a][0] != a)
            throw InputError("index 0 is not a two-sided identity (witness element " +
                             std::to_string(a) + ")");
    }
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    throw InputError("Cayley table not associative, witness " + tuple_str({a, b, c}));
    g.inv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b)
            if (t[a][b] == 0 && t[b][a] == 0) g.inv[a] = b;
        if (g.inv[a] < 0)
            throw InputError("element " + std::to_string(a) + " has no inverse");
    }
    g.tab = std::move(t);
    return g;
}

FiniteGroup FiniteGroup::from_perm_generators(const std::vector<std::vector<int>>& gens, int degree) {
    if (degree <= 0) throw InputError("permutation degree must be positive");
    for (const auto& p : gens) {
        if (static_cast<int>(p.size()) != degree)
            throw InputError("permutation generator has wrong degree");
        std::vector<char> seen(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v]) throw InputError("generator is not a permutation");
            seen[v] = 1;
        }
    }
    using Perm = std::vector<int>;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        for (const auto& gp : gens) {
            Perm nxt(degree);
            for (int i = 0; i < degree; ++i) nxt[i] = gp[elems[cur][i]];  // gp after cur
            auto it = index.find(nxt);
            if (it == index.end()) {
                index.emplace(nxt, static_cast<int>(elems.size()));
                elems.push_back(nxt);
                q.push(static_cast<int>(elems.size()) - 1);
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Perm comp(degree);
            for (int i = 0; i < degree; ++i) comp[i] = elems[a][elems[b][i]];
            t[a][b] = index.at(comp);
        }
    FiniteGroup g = from_table(std::move(t));
    g.labels.resize(n);
    for (int a = 0; a < n; ++a) {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < degree; ++i) os << (i ? " " : "") << elems[a][i];
        os << "]";
        g.labels[a] = os.str();
    }
    return g;
}

Subgroup Subgroup::trivial(const FiniteGroup& G) { return from_elements(G, {0}); }

Subgroup Subgroup::full(const FiniteGroup& G) {
    std::vector<int> all(G.n);
    std::iota(all.begin(), all.end(), 0);
    return from_elements(G, std::move(all));
}

Subgroup Subgroup::from_elements(const FiniteGroup& G, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup s;
    s.G = &G;
    s.member.assign(G.n, 0);
    for (int e : elems) {
        if (e < 0 || e >= G.n) throw InputError("subgroup element out of range");
        s.member[e] = 1;
    }
    if (elems.empty() || elems[0] != 0) throw InputError("subgroup must contain the identity");
    for (int a : elems) {
        if (!s.member[G.inv[a]]) throw InputError("subgroup not closed under inverse");
        for (int b : elems)
            if (!s.member[G.mul(a, b)]) throw InputError("subgroup not closed under product");
    }
    s.elems = std::move(elems);
    return s;
}

Subgroup Subgroup::generated(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.n, 0);
    in[0] = 1;
    std::vector<int> stack{0};
    for (int g : gens) {
        if (g < 0 || g >= G.n) throw InputError("generator out of range");
        if (!in[g]) {
            in[g] = 1;
            stack.push_back(g);
        }
    }
    // closure under products (inverses follow in a finite group)
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < stack.size(); ++i)
            for (size_t j = 0; j < stack.size(); ++j) {
                int p = G.mul(stack[i], stack[j]);
                if (!in[p]) {
                    in[p] = 1;
                    stack.push_back(p);
                    grew = true;
                }
            }
    }
    std::vector<int> elems;
    for (int g = 0; g < G.n; ++g)
        if (in[g]) elems.push_back(g);
    return from_elements(G, std::move(elems));
}

Subgroup Subgroup::conjugate(int x) const {
    std::vector<int> out;
    out.reserve(elems.size());
    for (int e : elems) out.push_back(G->conj(x, e));
    return from_elements(*G, std::move(out));
}

bool Subgroup::subset_of(const Subgroup& o) const {
    for (int e : elems)
        if (!o.member[e]) return false;
    return true;
}

Subgroup Subgroup::intersect(const Subgroup& o) const {
    std::vector<int> out;
    for (int e : elems)
        if (o.member[e]) out.push_back(e);
    return from_elements(*G, std::move(out));
}

FiniteGroup Subgroup::local_group() const {
    int m = order();
    std::vector<int> pos(G->n, -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = pos[G->mul(elems[i], elems[j])];
    FiniteGroup g = FiniteGroup::from_table(std::move(t));
    g.labels.resize(m);
    for (int i = 0; i < m; ++i) g.labels[i] = G->label(elems[i]);
    return g;
}

std::vector<int> Subgroup::left_coset_reps() const {
    std::vector<char> seen(G->n, 0);
    std::vector<int> reps;
    for (int y = 0; y < G->n; ++y) {
        if (seen[y]) continue;
        reps.push_back(y);
        for (int s : elems) seen[G->mul(y, s)] = 1;
    }
    return reps;
}

GroupAction GroupAction::conjugation(const FiniteGroup& G) {
    GroupAction a;
    a.L = &G;
    a.G = &G;
    a.table.assign(G.n, std::vector<int>(G.n));
    for (int x = 0; x < G.n; ++x)
        for (int g = 0; g < G.n; ++g) a.table[x][g] = G.conj(x, g);
    return a;
}

GroupAction GroupAction::trivial(const FiniteGroup& L, const FiniteGroup& G) {
    GroupAction a;
    a.L = &L;
    a.G = &G;
    a.table.assign(L.n, std::vector<int>(G.n));
    for (int x = 0; x < L.n; ++x)
        for (int g = 0; g < G.n; ++g) a.table[x][g] = g;
    return a;
}

GroupAction GroupAction::from_table(const FiniteGroup& L, const FiniteGroup& G,
                                    std::vector<std::vector<int>> t) {
    if (static_cast<int>(t.size()) != L.n) throw InputError("action table has wrong row count");
    for (const auto& row : t)
        if (static_cast<int>(row.size()) != G.n) throw InputError("action table has wrong column count");
    for (int x = 0; x < L.n; ++x)
        for (int g = 0; g < G.n; ++g)
            if (t[x][g] < 0 || t[x][g] >= G.n) throw InputError("action table entry out of range");
    for (int g = 0; g < G.n; ++g)
        if (t[0][g] != g) throw InputError("identity of L must act trivially");
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            for (int g = 0; g < G.n; ++g)
                if (t[x][t[y][g]] != t[L.mul(x, y)][g])
                    throw InputError("action table is not a left action, witness " +
                                     tuple_str({x, y, g}));
    for (int x = 0; x < L.n; ++x) {
        std::vector<char> seen(G.n, 0);
        for (int g = 0; g < G.n; ++g) {
            if (seen[t[x][g]]) throw InputError("action of element is not bijective");
            seen[t[x][g]] = 1;
        }
        for (int a = 0; a < G.n; ++a)
            for (int b = 0; b < G.n; ++b)
                if (t[x][G.mul(a, b)] != G.mul(t[x][a], t[x][b]))
                    throw InputError("action is not by automorphisms, witness " +
                                     tuple_str({x, a, b}));
    }
    GroupAction a;
    a.L = &L;
    a.G = &G;
    a.table = std::move(t);
    return a;
}

Subgroup stabilizer(const GroupAction& a, int g) {
    std::vector<int> elems;
    for (int x = 0; x < a.L->n; ++x)
        if (a.act(x, g) == g) elems.push_back(x);
    return Subgroup::from_elements(*a.L, std::move(elems));
}

std::vector<Orbit> orbits(const GroupAction& a) {
    std::vector<char> seen(a.G->n, 0);
    std::vector<Orbit> out;
    for (int g = 0; g < a.G->n; ++g) {
        if (seen[g]) continue;
        Orbit o;
        o.rep = g;
        for (int x = 0; x < a.L->n; ++x) {
            int h = a.act(x, g);
            if (!seen[h]) {
                seen[h] = 1;
                o.members.push_back(h);
            }
        }
        std::sort(o.members.begin(), o.members.end());
        out.push_back(std::move(o));
    }
    return out;
}

int orbit_rep_of(const GroupAction& a, int g) {
    int best = g;
    for (int x = 0; x < a.L->n; ++x) best = std::min(best, a.act(x, g));
    return best;
}

int min_mover(const GroupAction& a, int g, int target) {
    for (int x = 0; x < a.L->n; ++x)
        if (a.act(x, g) == target) return x;
    throw InputError("min_mover: elements are not in the same orbit");
}

std::vector<int> double_coset_reps(const Subgroup& K, const Subgroup& H) {
    if (K.G != H.G) throw TypeError("double_coset_reps: subgroups of different parents");
    const FiniteGroup& L = *K.G;
    std::vector<char> seen(L.n, 0);
    std::vector<int> reps;
    for (int x = 0; x < L.n; ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int a : K.elems)
            for (int b : H.elems) seen[L.mul(L.mul(a, x), b)] = 1;
    }
    return reps;
}

std::vector<std::pair<int, int>> orbit_pair_reps(const GroupAction& a, int g) {
    const FiniteGroup& G = *a.G;
    Subgroup Lg = stabilizer(a, g);
    std::vector<char> seen(G.n, 0);  // keyed by first component h (k = h^{-1} g)
    std::vector<std::pair<int, int>> reps;
    for (int h = 0; h < G.n; ++h) {
        if (seen[h]) continue;
        reps.emplace_back(h, G.mul(G.inv[h], g));
        for (int x : Lg.elems) seen[a.act(x, h)] = 1;
    }
    return reps;
}

std::vector<TripleRep> triple_reps(const GroupAction& a, int g) {
    std::vector<TripleRep> out;
    for (auto [h, k] : orbit_pair_reps(a, g))
        for (auto [d, e] : orbit_pair_reps(a, h)) out.push_back({d, e, k});
    return out;
}

std::vector<TripleRep> triple_reps_right(const GroupAction& a, int g) {
    std::vector<TripleRep> out;
    for (auto [h, k] : orbit_pair_reps(a, g))
        for (auto [e, f] : orbit_pair_reps(a, k)) out.push_back({h, e, f});
    return out;
}

}  // namespace ccr
