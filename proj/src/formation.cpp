#include "projpair/formation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace projpair {

std::vector<std::vector<Elem>> conjugacy_classes(GroupPtr group) {
    int n = group->order;
    std::vector<int> class_of(n, -1);
    std::vector<std::vector<Elem>> classes;
    for (Elem a = 0; a < n; ++a) {
        if (class_of[a] >= 0) continue;
        std::vector<Elem> cls;
        for (Elem x = 0; x < n; ++x) {
            Elem c = group->conj(a, x);
            if (class_of[c] < 0) {
                class_of[c] = int(classes.size());
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

namespace {

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(GroupPtr group) {
    auto classes = conjugacy_classes(group);
    // Every normal subgroup is the join of the normal closures of the
    // classes it contains, so the join-closure of the single-class normal
    // closures exhausts them.
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup> subs;
    auto add = [&](Subgroup s) {
        if (seen.insert(s.members).second) subs.push_back(std::move(s));
    };
    add(trivial_subgroup(group));
    for (const auto& cls : classes)
        add(normal_closure(group, cls));
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<Elem> seed = subs[i].members;
            seed.insert(seed.end(), subs[j].members.begin(), subs[j].members.end());
            add(subgroup_closure(group, seed));
        }
    }
    std::sort(subs.begin(), subs.end(), subgroup_less);
    return subs;
}

std::vector<Subgroup> all_subgroups(GroupPtr group) {
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup> subs;
    auto add = [&](Subgroup s) {
        if (seen.insert(s.members).second) subs.push_back(std::move(s));
    };
    add(trivial_subgroup(group));
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (Elem x = 1; x < group->order; ++x) {
            if (subs[i].contains(x)) continue;
            std::vector<Elem> seed = subs[i].members;
            seed.push_back(x);
            add(subgroup_closure(group, seed));
        }
    }
    std::sort(subs.begin(), subs.end(), subgroup_less);
    return subs;
}

Subgroup derived_subgroup(GroupPtr group) {
    std::vector<Elem> comms;
    for (Elem a = 0; a < group->order; ++a)
        for (Elem b = 0; b < group->order; ++b)
            comms.push_back(group->mul(group->mul(group->inv(a), group->inv(b)),
                                       group->mul(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(group, comms);
}

bool is_abelian(GroupPtr group) {
    for (Elem a = 0; a < group->order; ++a)
        for (Elem b = 0; b < a; ++b)
            if (group->mul(a, b) != group->mul(b, a)) return false;
    return true;
}

bool is_solvable(GroupPtr group) {
    GroupPtr cur = group;
    while (cur->order > 1) {
        Subgroup derived = derived_subgroup(cur);
        if (derived.size() == cur->order) return false;  // series stabilized
        cur = subgroup_as_group(derived).group;
    }
    return true;
}

bool is_simple(GroupPtr group) {
    if (group->order == 1) return false;
    return normal_subgroups(group).size() == 2;
}

int exponent_of(GroupPtr group) {
    long long e = 1;
    for (int k : group->element_order) e = std::lcm(e, (long long)k);
    return int(e);
}

GroupFingerprint fingerprint(GroupPtr group) {
    return {group->order, is_abelian(group), exponent_of(group)};
}

bool isomorphic(GroupPtr a, GroupPtr b) {
    if (!(fingerprint(a) == fingerprint(b))) return false;
    return first_hom(a, b, {}, /*surjective_only=*/true).has_value();
}

std::vector<GroupPtr> composition_factors(GroupPtr group) {
    std::vector<GroupPtr> factors;
    std::vector<GroupPtr> stack{group};
    while (!stack.empty()) {
        GroupPtr g = stack.back();
        stack.pop_back();
        if (g->order == 1) continue;
        auto normals = normal_subgroups(g);
        // Maximal proper normal subgroup: largest order, first on ties.
        const Subgroup* max_n = nullptr;
        for (const auto& n : normals)
            if (n.size() < g->order && (!max_n || n.size() > max_n->size()))
                max_n = &n;
        if (!max_n) throw std::logic_error("no normal subgroups found");
        factors.push_back(quotient_group(g, *max_n).group);
        if (max_n->size() > 1) stack.push_back(subgroup_as_group(*max_n).group);
    }
    return factors;
}

FormationSpec FormationSpec::p_group(int p) {
    if (!is_prime(p)) throw InvalidInput("p_group formation requires a prime");
    FormationSpec s;
    s.kind = Kind::PGroup;
    s.p = p;
    return s;
}

FormationSpec FormationSpec::solvable() {
    FormationSpec s;
    s.kind = Kind::Solvable;
    return s;
}

FormationSpec FormationSpec::composition_factors_in(std::vector<GroupPtr> factors) {
    FormationSpec s;
    s.kind = Kind::CompositionFactorsIn;
    s.factors = std::move(factors);
    return s;
}

bool formation_member(GroupPtr group, const FormationSpec& spec) {
    switch (spec.kind) {
        case FormationSpec::Kind::All:
            return true;
        case FormationSpec::Kind::PGroup: {
            int n = group->order;
            while (n % spec.p == 0) n /= spec.p;
            return n == 1;
        }
        case FormationSpec::Kind::Solvable:
            return is_solvable(group);
        case FormationSpec::Kind::CompositionFactorsIn: {
            for (GroupPtr f : composition_factors(group)) {
                bool found = false;
                for (GroupPtr d : spec.factors)
                    if (isomorphic(f, d)) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace projpair
