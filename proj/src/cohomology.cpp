#include "projpair/cohomology.hpp"

#include <algorithm>

namespace projpair {

namespace {

bool cocycle_relation_holds(const GroupAction& action, const std::vector<Elem>& values) {
    const FiniteGroup& q_grp = *action.actor;
    const FiniteGroup& a_grp = *action.space;
    if (values[0] != 0) return false;
    for (Elem q1 = 0; q1 < q_grp.order; ++q1) {
        for (Elem q2 = 0; q2 < q_grp.order; ++q2) {
            Elem lhs = values[std::size_t(q_grp.mul(q1, q2))];
            Elem rhs = a_grp.mul(values[std::size_t(q1)],
                                 action.act(q1, values[std::size_t(q2)]));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// Elements of `group` ordered so that tree parents precede children.
std::vector<Elem> tree_order(const FiniteGroup& group) {
    std::vector<int> depth(std::size_t(group.order), -1);
    depth[0] = 0;
    std::function<int(Elem)> depth_of = [&](Elem x) -> int {
        if (depth[std::size_t(x)] < 0)
            depth[std::size_t(x)] = depth_of(group.tree_parent[std::size_t(x)]) + 1;
        return depth[std::size_t(x)];
    };
    std::vector<Elem> order(std::size_t(group.order));
    for (Elem x = 0; x < group.order; ++x) {
        order[std::size_t(x)] = x;
        depth_of(x);
    }
    std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
        return depth[std::size_t(a)] < depth[std::size_t(b)];
    });
    return order;
}

}  // namespace

Cocycle make_cocycle(GroupAction action, std::vector<Elem> values) {
    if (int(values.size()) != action.actor->order)
        throw InvalidInput("cocycle: value vector size " + std::to_string(values.size()) +
                           " does not match actor order " +
                           std::to_string(action.actor->order));
    for (Elem v : values)
        if (v < 0 || v >= action.space->order)
            throw InvalidInput("cocycle: value " + std::to_string(v) +
                               " outside the space group");
    if (!cocycle_relation_holds(action, values))
        throw InvalidInput("cocycle: relation x(q1 q2) = x(q1) * (q1 . x(q2)) fails");
    return Cocycle{std::move(action), std::move(values)};
}

std::vector<Cocycle> enumerate_cocycles(const GroupAction& action) {
    const FiniteGroup& q_grp = *action.actor;
    const FiniteGroup& a_grp = *action.space;
    const std::vector<Elem>& gens = q_grp.generators;
    const std::vector<Elem> order = tree_order(q_grp);

    std::vector<Cocycle> result;
    std::vector<Elem> gen_values(gens.size(), 0);
    std::vector<Elem> values(std::size_t(q_grp.order));

    // Propagate generator values through the spanning tree: for x = p * g,
    // x(p*g) = x(p) * (p . x(g)). Then check the full relation once.
    auto propagate_and_check = [&]() -> bool {
        values[0] = 0;
        for (Elem x : order) {
            if (x == 0) continue;
            Elem p = q_grp.tree_parent[std::size_t(x)];
            Elem gv = gen_values[std::size_t(q_grp.tree_gen[std::size_t(x)])];
            values[std::size_t(x)] = a_grp.mul(values[std::size_t(p)], action.act(p, gv));
        }
        return cocycle_relation_holds(action, values);
    };

    if (gens.empty()) {  // trivial actor: only the zero cocycle
        result.push_back(Cocycle{action, {0}});
        return result;
    }

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == gens.size()) {
            if (propagate_and_check()) result.push_back(Cocycle{action, values});
            return;
        }
        for (Elem a = 0; a < a_grp.order; ++a) {
            gen_values[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
    return result;
}

GroupHom cocycle_to_section(const Cocycle& x, const SemidirectProduct& sd) {
    GroupPtr q_ptr = sd.quot.target;
    if (q_ptr != x.action.actor || sd.embed_space.source != x.action.space)
        throw InvalidInput("cocycle_to_section: semidirect product built from a "
                           "different action");
    const int nq = q_ptr->order;
    std::vector<Elem> map(std::size_t(nq), 0);
    for (Elem q = 0; q < nq; ++q)
        map[std::size_t(q)] = x.values[std::size_t(q)] * nq + q;
    return make_hom(q_ptr, sd.group, std::move(map));
}

Cocycle section_to_cocycle(const GroupHom& beta_prime, const GroupAction& action,
                           const SemidirectProduct& sd) {
    if (beta_prime.source != action.actor || beta_prime.target != sd.group)
        throw InvalidInput("section_to_cocycle: map is not Q -> A ⋊ Q");
    const int nq = action.actor->order;
    std::vector<Elem> values(std::size_t(nq), 0);
    for (Elem q = 0; q < nq; ++q) {
        Elem e = beta_prime(q);
        if (e % nq != q)
            throw InvalidInput("section_to_cocycle: not a section of the quotient at "
                               "element " + std::to_string(q));
        values[std::size_t(q)] = e / nq;
    }
    return make_cocycle(action, std::move(values));
}

bool cohomologous(const Cocycle& x, const Cocycle& y) {
    if (x.action.actor != y.action.actor || x.action.space != y.action.space)
        throw InvalidInput("cohomologous: cocycles live over different actions");
    const FiniteGroup& q_grp = *x.action.actor;
    const FiniteGroup& a_grp = *x.action.space;
    for (Elem a = 0; a < a_grp.order; ++a) {
        bool ok = true;
        for (Elem q = 0; q < q_grp.order && ok; ++q) {
            Elem twisted = a_grp.mul(a_grp.inv(a),
                                     a_grp.mul(x.values[std::size_t(q)],
                                               x.action.act(q, a)));
            ok = twisted == y.values[std::size_t(q)];
        }
        if (ok) return true;
    }
    return false;
}

RestrictionReport restriction_surjective(const GroupAction& action, const Subgroup& sub,
                                         bool class_level) {
    if (sub.parent != action.actor)
        throw InvalidInput("restriction_surjective: subgroup is not in the actor");
    EmbeddedGroup eg = subgroup_as_group(sub);
    const int ns = eg.group->order;
    const int na = action.space->order;
    std::vector<std::uint16_t> table(std::size_t(ns) * na);
    for (Elem i = 0; i < ns; ++i)
        for (Elem a = 0; a < na; ++a)
            table[std::size_t(i) * na + a] =
                std::uint16_t(action.act(eg.inclusion(i), a));
    GroupAction restricted = make_action(eg.group, action.space, std::move(table));

    RestrictionReport report;
    std::vector<Cocycle> full = enumerate_cocycles(action);
    std::vector<Cocycle> small = enumerate_cocycles(restricted);
    report.actor_cocycles = (long long)(full.size());
    report.sub_cocycles = (long long)(small.size());

    auto restriction_of = [&](const Cocycle& big) {
        std::vector<Elem> values(std::size_t(ns), 0);
        for (Elem i = 0; i < ns; ++i)
            values[std::size_t(i)] = big.values[std::size_t(eg.inclusion(i))];
        return Cocycle{restricted, std::move(values)};
    };

    report.surjective = true;
    for (const Cocycle& target : small) {
        bool found = false;
        for (const Cocycle& big : full) {
            Cocycle res = restriction_of(big);
            bool match = class_level ? cohomologous(res, target)
                                     : res.values == target.values;
            if (match) {
                report.extensions.emplace_back(target, big);
                found = true;
                break;
            }
        }
        if (!found) {
            report.surjective = false;
            report.unextendable = target;
            report.extensions.clear();
            return report;
        }
    }
    return report;
}

}  // namespace projpair
