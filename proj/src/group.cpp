#include "projpair/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace projpair {

namespace {

void check_cap(long long order, int cap) {
    if (order > cap)
        throw CapExceeded("group order " + std::to_string(order) +
                          " exceeds cap " + std::to_string(cap));
}

void fill_element_orders(FiniteGroup& g) {
    g.element_order.assign(g.order, 0);
    for (Elem a = 0; a < g.order; ++a) {
        Elem x = a;
        int k = 1;
        while (x != 0) {
            x = g.mul(x, a);
            ++k;
        }
        g.element_order[a] = k;
    }
}

void fill_inverses(FiniteGroup& g) {
    g.inverse.assign(g.order, -1);
    for (Elem a = 0; a < g.order; ++a) {
        for (Elem b = 0; b < g.order; ++b) {
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                g.inverse[a] = b;
                break;
            }
        }
        if (g.inverse[a] < 0)
            throw InvalidInput("element " + std::to_string(a) + " has no two-sided inverse");
    }
}

// BFS spanning tree over the already-built table, following generators in
// listed order. Fails if the generators do not generate.
void fill_tree(FiniteGroup& g) {
    g.tree_parent.assign(g.order, -1);
    g.tree_gen.assign(g.order, -1);
    std::vector<char> seen(g.order, 0);
    seen[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Elem x = queue[qi];
        for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
            Elem y = g.mul(x, g.generators[gi]);
            if (!seen[y]) {
                seen[y] = 1;
                g.tree_parent[y] = x;
                g.tree_gen[y] = int(gi);
                queue.push_back(y);
            }
        }
    }
    if (int(queue.size()) != g.order)
        throw InvalidInput("generators do not generate the group");
}

}  // namespace

std::vector<int> FiniteGroup::word_of(Elem a) const {
    std::vector<int> word;
    while (a != 0) {
        word.push_back(tree_gen[a]);
        a = tree_parent[a];
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> cycles_to_permutation(int degree,
                                       const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree || to < 0 || to >= degree)
                throw InvalidInput("cycle point out of range");
            img[from] = to;
        }
    }
    return img;
}

GroupPtr build_group_from_permutations(int degree,
                                       const std::vector<std::vector<int>>& gens,
                                       const std::string& name, int cap) {
    using Perm = std::vector<int>;
    for (const auto& p : gens) {
        if (int(p.size()) != degree)
            throw InvalidInput("generator degree mismatch");
        std::vector<char> hit(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= degree || hit[v])
                throw InvalidInput("generator is not a permutation");
            hit[v] = 1;
        }
    }

    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    auto compose = [degree](const Perm& a, const Perm& b) {
        Perm r(degree);
        for (int i = 0; i < degree; ++i) r[i] = b[a[i]];
        return r;
    };

    // Breadth-first closure over generator words, generators applied in
    // listed order; this fixes the canonical element enumeration.
    std::map<Perm, Elem> index;
    std::vector<Perm> elems{id};
    index[id] = 0;
    for (std::size_t qi = 0; qi < elems.size(); ++qi) {
        Perm cur = elems[qi];
        for (const auto& g : gens) {
            Perm next = compose(cur, g);
            if (index.find(next) == index.end()) {
                check_cap(static_cast<long long>(elems.size()) + 1, cap);
                index[next] = Elem(elems.size());
                elems.push_back(std::move(next));
            }
        }
    }

    auto grp = std::make_shared<FiniteGroup>();
    grp->order = int(elems.size());
    grp->name = name;
    grp->table.assign(std::size_t(grp->order) * grp->order, 0);
    for (Elem a = 0; a < grp->order; ++a)
        for (Elem b = 0; b < grp->order; ++b)
            grp->table[std::size_t(a) * grp->order + b] = std::uint16_t(index.at(compose(elems[a], elems[b])));

    for (const auto& g : gens) grp->generators.push_back(index.at(g));
    // Drop duplicate/identity generators while preserving order.
    {
        std::vector<Elem> unique_gens;
        for (Elem g : grp->generators)
            if (g != 0 && std::find(unique_gens.begin(), unique_gens.end(), g) == unique_gens.end())
                unique_gens.push_back(g);
        grp->generators = unique_gens;
    }

    fill_inverses(*grp);
    fill_element_orders(*grp);
    if (!grp->generators.empty())
        fill_tree(*grp);
    else if (grp->order > 1)
        throw InvalidInput("non-trivial group with no generators");
    else {
        grp->tree_parent.assign(1, -1);
        grp->tree_gen.assign(1, -1);
    }
    return grp;
}

GroupPtr build_group_from_table(const std::vector<std::vector<int>>& table,
                                std::vector<Elem> generators,
                                const std::string& name, int cap) {
    int n = int(table.size());
    if (n == 0) throw InvalidInput("empty multiplication table");
    check_cap(n, cap);
    for (const auto& row : table) {
        if (int(row.size()) != n) throw InvalidInput("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidInput("table entry out of range");
    }
    for (int i = 0; i < n; ++i)
        if (table[0][i] != i || table[i][0] != i)
            throw InvalidInput("element 0 is not a two-sided identity");

    auto grp = std::make_shared<FiniteGroup>();
    grp->order = n;
    grp->name = name;
    grp->table.assign(std::size_t(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            grp->table[std::size_t(a) * n + b] = std::uint16_t(table[a][b]);

    // Exhaustive associativity check at desk scale; larger tables get the
    // Latin-square check plus generator-based spot checks.
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (grp->mul(grp->mul(a, b), c) != grp->mul(a, grp->mul(b, c)))
                        throw InvalidInput("multiplication table is not associative");
    } else {
        for (int a = 0; a < n; ++a) {
            std::vector<char> row(n, 0), col(n, 0);
            for (int b = 0; b < n; ++b) {
                row[grp->mul(a, b)] = 1;
                col[grp->mul(b, a)] = 1;
            }
            for (int b = 0; b < n; ++b)
                if (!row[b] || !col[b]) throw InvalidInput("table is not a Latin square");
        }
    }

    fill_inverses(*grp);
    fill_element_orders(*grp);

    if (generators.empty() && n > 1) {
        // Greedy minimal generating sequence in canonical element order.
        std::vector<char> closed(n, 0);
        closed[0] = 1;
        int closed_count = 1;
        while (closed_count < n) {
            Elem pick = -1;
            for (Elem x = 1; x < n; ++x)
                if (!closed[x]) { pick = x; break; }
            generators.push_back(pick);
            // close
            std::vector<Elem> queue{pick};
            closed[pick] = 1;
            ++closed_count;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                for (Elem y = 0; y < n; ++y) {
                    if (!closed[y]) continue;
                    for (Elem p : {grp->mul(queue[qi], y), grp->mul(y, queue[qi])}) {
                        if (!closed[p]) {
                            closed[p] = 1;
                            ++closed_count;
                            queue.push_back(p);
                        }
                    }
                }
            }
        }
    }
    for (Elem g : generators)
        if (g < 0 || g >= n) throw InvalidInput("generator index out of range");
    grp->generators = std::move(generators);
    if (!grp->generators.empty())
        fill_tree(*grp);
    else {
        grp->tree_parent.assign(n, -1);
        grp->tree_gen.assign(n, -1);
        if (n > 1) throw InvalidInput("generators do not generate the group");
    }
    return grp;
}

Subgroup make_subgroup(GroupPtr group, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup s;
    s.parent = group;
    s.mask.assign(group->order, 0);
    for (Elem x : members) {
        if (x < 0 || x >= group->order) throw InvalidInput("subgroup member out of range");
        s.mask[x] = 1;
    }
    if (members.empty() || members[0] != 0)
        throw InvalidInput("subgroup does not contain the identity");
    for (Elem a : members)
        for (Elem b : members)
            if (!s.mask[group->mul(a, b)])
                throw InvalidInput("subgroup members are not closed under multiplication");
    if (group->order % int(members.size()) != 0)
        throw InvalidInput("subgroup size does not divide group order");
    s.members = std::move(members);
    return s;
}

Subgroup trivial_subgroup(GroupPtr group) { return make_subgroup(group, {0}); }

Subgroup whole_subgroup(GroupPtr group) {
    std::vector<Elem> all(group->order);
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(group, std::move(all));
}

Subgroup subgroup_closure(GroupPtr group, const std::vector<Elem>& seed) {
    std::vector<char> in(group->order, 0);
    std::vector<Elem> elems{0};
    in[0] = 1;
    for (Elem x : seed) {
        if (x < 0 || x >= group->order) throw InvalidInput("seed element out of range");
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            for (Elem p : {group->mul(elems[i], elems[j]), group->mul(elems[j], elems[i])}) {
                if (!in[p]) {
                    in[p] = 1;
                    elems.push_back(p);
                }
            }
        }
    }
    return make_subgroup(group, std::move(elems));
}

Subgroup normal_core(const Subgroup& sub) {
    const auto& g = *sub.parent;
    std::vector<Elem> kept;
    for (Elem s : sub.members) {
        bool ok = true;
        for (Elem x = 0; x < g.order && ok; ++x)
            if (!sub.contains(g.conj(s, x))) ok = false;
        if (ok) kept.push_back(s);
    }
    return make_subgroup(sub.parent, std::move(kept));
}

Subgroup normal_closure(GroupPtr group, const std::vector<Elem>& seed) {
    std::vector<Elem> conj_seed;
    for (Elem s : seed)
        for (Elem x = 0; x < group->order; ++x)
            conj_seed.push_back(group->conj(s, x));
    return subgroup_closure(group, conj_seed);
}

bool is_normal(const Subgroup& sub) {
    const auto& g = *sub.parent;
    for (Elem s : sub.members)
        for (Elem x = 0; x < g.order; ++x)
            if (!sub.contains(g.conj(s, x))) return false;
    return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.parent != b.parent) throw InvalidInput("subgroup intersection across different groups");
    std::vector<Elem> out;
    for (Elem x : a.members)
        if (b.contains(x)) out.push_back(x);
    return make_subgroup(a.parent, std::move(out));
}

std::vector<Elem> product_set(const Subgroup& a, const Subgroup& b) {
    if (a.parent != b.parent) throw InvalidInput("product set across different groups");
    std::vector<char> in(a.parent->order, 0);
    std::vector<Elem> out;
    for (Elem x : a.members)
        for (Elem y : b.members) {
            Elem p = a.parent->mul(x, y);
            if (!in[p]) {
                in[p] = 1;
                out.push_back(p);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Subgroup sylow_subgroup(GroupPtr group, int p) {
    if (!is_prime(p)) throw InvalidInput("p is not prime");
    int target = 1;
    int n = group->order;
    while (n % p == 0) {
        n /= p;
        target *= p;
    }
    auto is_p_power = [p](int k) {
        while (k % p == 0) k /= p;
        return k == 1;
    };
    Subgroup sub = trivial_subgroup(group);
    while (sub.size() < target) {
        bool grown = false;
        for (Elem y = 1; y < group->order && !grown; ++y) {
            if (sub.contains(y)) continue;
            if (!is_p_power(group->element_order[y])) continue;
            std::vector<Elem> seed = sub.members;
            seed.push_back(y);
            Subgroup bigger = subgroup_closure(group, seed);
            if (bigger.size() <= target && is_p_power(bigger.size())) {
                sub = std::move(bigger);
                grown = true;
            }
        }
        if (!grown)
            throw std::logic_error("sylow subgroup growth stalled");  // cannot happen
    }
    return sub;
}

std::vector<Elem> greedy_generators(const Subgroup& sub) {
    std::vector<Elem> gens;
    Subgroup cur = trivial_subgroup(sub.parent);
    while (cur.size() < sub.size()) {
        Elem pick = -1;
        for (Elem x : sub.members)
            if (!cur.contains(x)) { pick = x; break; }
        gens.push_back(pick);
        std::vector<Elem> seed = cur.members;
        seed.push_back(pick);
        cur = subgroup_closure(sub.parent, seed);
    }
    return gens;
}

}  // namespace projpair
