#include "ccr/group_algebra.hpp"

#include "ccr/error.hpp"

namespace ccr {

ComponentSystem group_algebra_system(std::shared_ptr<const FiniteGroup> Lp,
                                     std::shared_ptr<const FiniteGroup> Gp, GroupAction act,
                                     const FieldSpec& f) {
    if (act.L != Lp.get() || act.G != Gp.get())
        throw InputError("group_algebra_system: action does not reference the owned groups");
    const FiniteGroup& G = *Gp;
    ComponentSystem S;
    S.L_owner = std::move(Lp);
    S.G_owner = Gp;
    S.act = std::move(act);
    S.field = f;
    S.name = "group-algebra(|G|=" + std::to_string(G.n) +
             ",|L|=" + std::to_string(S.act.L->n) + ")";
    S.labels.resize(G.n);
    S.conj.resize(G.n);
    S.mul.resize(G.n);
    Mat one(f, 1, 1);
    one.at(0, 0) = Scalar::one(f);
    for (int g = 0; g < G.n; ++g) {
        S.labels[g] = {G.label(g)};
        S.conj[g].assign(S.act.L->n, one);
        S.mul[g].assign(G.n, one);
    }
    S.unit = {Scalar::one(f)};
    S.finalize();
    return S;
}

ComponentSystem group_algebra_system(std::shared_ptr<const FiniteGroup> Gp, const FieldSpec& f) {
    GroupAction act = GroupAction::conjugation(*Gp);
    return group_algebra_system(Gp, Gp, std::move(act), f);
}

ComponentSystem group_algebra_system_trivial(std::shared_ptr<const FiniteGroup> Gp,
                                             const FieldSpec& f) {
    auto one = std::make_shared<FiniteGroup>(FiniteGroup::from_table({{0}}));
    GroupAction act = GroupAction::trivial(*one, *Gp);
    return group_algebra_system(std::move(one), Gp, std::move(act), f);
}

InvariantElement class_sum(const ComponentSystem& S, int i) {
    if (i < 0 || i >= static_cast<int>(S.orbs.size()))
        throw InputError("class_sum: orbit index out of range");
    InvariantElement e = zero_invariant(S);
    for (auto& v : e.comp[i]) v = Scalar::one(S.field);
    return e;
}

namespace {

ClassProductTable class_table(const ComponentSystem& S, bool componentwise) {
    ClassProductTable t;
    size_t nc = S.orbs.size();
    for (const Orbit& o : S.orbs) {
        t.classes.push_back(S.act.G->label(o.rep));
        t.class_sizes.push_back(static_cast<int>(o.members.size()));
    }
    t.coeff.resize(nc);
    for (size_t i = 0; i < nc; ++i) {
        t.coeff[i].resize(nc);
        InvariantElement ci = class_sum(S, static_cast<int>(i));
        for (size_t j = 0; j < nc; ++j) {
            InvariantElement cj = class_sum(S, static_cast<int>(j));
            InvariantElement p = componentwise
                                     ? restrict_invariant(product_full(expand(ci), expand(cj)))
                                     : product_orbit(ci, cj);
            // A class sum has coefficient 1 at every member, so the component
            // at the representative is the class-sum coefficient itself.
            t.coeff[i][j].resize(nc);
            for (size_t k = 0; k < nc; ++k) t.coeff[i][j][k] = p.comp[k][0];
        }
    }
    return t;
}

}  // namespace

ClassProductTable center_structure_constants(const ComponentSystem& S) {
    return class_table(S, true);
}

ClassProductTable orbit_product_table(const ComponentSystem& S) { return class_table(S, false); }

}  // namespace ccr
