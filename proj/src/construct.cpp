#include "projpair/construct.hpp"

#include <algorithm>
#include <unordered_map>

namespace projpair {

namespace {

void check_cap(long long order, int cap) {
    if (order > cap)
        throw CapExceeded("constructed group order " + std::to_string(order) +
                          " exceeds cap " + std::to_string(cap));
}

std::string named(const std::string& a, const char* op, const std::string& b) {
    if (a.empty() || b.empty()) return "";
    return "(" + a + op + b + ")";
}

}  // namespace

DirectProduct direct_product(GroupPtr left, GroupPtr right, int cap) {
    long long n = (long long)left->order * right->order;
    check_cap(n, cap);
    int lr = right->order;
    auto idx = [lr](Elem a, Elem b) { return a * lr + b; };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (Elem a = 0; a < left->order; ++a)
        for (Elem b = 0; b < right->order; ++b)
            for (Elem c = 0; c < left->order; ++c)
                for (Elem d = 0; d < right->order; ++d)
                    table[idx(a, b)][idx(c, d)] = idx(left->mul(a, c), right->mul(b, d));
    std::vector<Elem> gens;
    for (Elem g : left->generators) gens.push_back(idx(g, 0));
    for (Elem g : right->generators) gens.push_back(idx(0, g));
    GroupPtr total = build_group_from_table(table, gens, named(left->name, "x", right->name), cap);

    DirectProduct out;
    out.group = total;
    {
        std::vector<Elem> m(left->order);
        for (Elem a = 0; a < left->order; ++a) m[a] = idx(a, 0);
        out.inject_left = make_hom(left, total, std::move(m));
    }
    {
        std::vector<Elem> m(right->order);
        for (Elem b = 0; b < right->order; ++b) m[b] = idx(0, b);
        out.inject_right = make_hom(right, total, std::move(m));
    }
    {
        std::vector<Elem> ml(n), mr(n);
        for (Elem a = 0; a < left->order; ++a)
            for (Elem b = 0; b < right->order; ++b) {
                ml[idx(a, b)] = a;
                mr[idx(a, b)] = b;
            }
        out.project_left = make_hom(total, left, std::move(ml));
        out.project_right = make_hom(total, right, std::move(mr));
    }
    return out;
}

FiberProduct fiber_product(const GroupHom& beta, const GroupHom& alpha, int cap) {
    if (beta.target != alpha.target)
        throw InvalidInput("fiber product requires homs with a common target");
    GroupPtr h = beta.source, g = alpha.source;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem a = 0; a < h->order; ++a)
        for (Elem b = 0; b < g->order; ++b)
            if (beta.map[a] == alpha.map[b]) pairs.push_back({a, b});
    check_cap((long long)pairs.size(), cap);
    int n = int(pairs.size());
    std::unordered_map<long long, int> index;
    index.reserve(pairs.size() * 2);
    for (int i = 0; i < n; ++i)
        index[(long long)pairs[i].first * g->order + pairs[i].second] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem a = h->mul(pairs[i].first, pairs[j].first);
            Elem b = g->mul(pairs[i].second, pairs[j].second);
            table[i][j] = index.at((long long)a * g->order + b);
        }
    GroupPtr total = build_group_from_table(table, {}, named(h->name, "x_", g->name), cap);

    FiberProduct out;
    out.total = total;
    {
        std::vector<Elem> ml(n), mr(n);
        for (int i = 0; i < n; ++i) {
            ml[i] = pairs[i].first;
            mr[i] = pairs[i].second;
        }
        out.left_proj = make_hom(total, h, std::move(ml));
        out.right_proj = make_hom(total, g, std::move(mr));
    }
    out.left_over = beta;
    out.right_over = alpha;
    return out;
}

GroupHom fiber_lift(const GroupHom& theta_bar, const GroupHom& mu,
                    const FiberProduct& square) {
    if (theta_bar.source != mu.source)
        throw InvalidInput("fiber_lift homs must share a source");
    if (square.left_proj.target != theta_bar.target ||
        square.right_proj.target != mu.target)
        throw InvalidInput("fiber_lift square projections do not match the homs");
    GroupPtr total = square.total;
    int right_order = square.right_proj.target->order;
    std::unordered_map<long long, int> by_pair;
    for (Elem x = 0; x < total->order; ++x) {
        long long key = (long long)square.left_proj.map[x] * right_order +
                        square.right_proj.map[x];
        if (!by_pair.emplace(key, x).second)
            throw InvalidInput("square is not cartesian: duplicate projection pair");
    }
    GroupPtr src = theta_bar.source;
    std::vector<Elem> m(src->order);
    for (Elem x = 0; x < src->order; ++x) {
        long long key = (long long)theta_bar.map[x] * right_order + mu.map[x];
        auto it = by_pair.find(key);
        if (it == by_pair.end())
            throw InvalidInput("fiber_lift: incompatible pair at source element " +
                               std::to_string(x));
        m[x] = it->second;
    }
    return make_hom(src, total, std::move(m));
}

GroupAction make_action(GroupPtr actor, GroupPtr space,
                        std::vector<std::uint16_t> table) {
    GroupAction a;
    a.actor = actor;
    a.space = space;
    a.table = std::move(table);
    if (a.table.size() != std::size_t(actor->order) * space->order)
        throw InvalidInput("action table has wrong size");
    for (Elem x = 0; x < space->order; ++x)
        if (a.act(0, x) != x) throw InvalidInput("identity does not act trivially");
    for (Elem q = 0; q < actor->order; ++q) {
        // act(q, -) must be an automorphism of the space.
        std::vector<char> hit(space->order, 0);
        for (Elem x = 0; x < space->order; ++x) {
            Elem y = a.act(q, x);
            if (hit[y]) throw InvalidInput("action is not bijective");
            hit[y] = 1;
        }
        for (Elem x = 0; x < space->order; ++x)
            for (Elem y = 0; y < space->order; ++y)
                if (a.act(q, space->mul(x, y)) != space->mul(a.act(q, x), a.act(q, y)))
                    throw InvalidInput("action does not preserve multiplication");
    }
    for (Elem q1 = 0; q1 < actor->order; ++q1)
        for (Elem q2 = 0; q2 < actor->order; ++q2)
            for (Elem x = 0; x < space->order; ++x)
                if (a.act(actor->mul(q1, q2), x) != a.act(q1, a.act(q2, x)))
                    throw InvalidInput("action is not compatible with actor multiplication");
    return a;
}

GroupAction trivial_action(GroupPtr actor, GroupPtr space) {
    std::vector<std::uint16_t> table(std::size_t(actor->order) * space->order);
    for (Elem q = 0; q < actor->order; ++q)
        for (Elem x = 0; x < space->order; ++x)
            table[std::size_t(q) * space->order + x] = std::uint16_t(x);
    return make_action(actor, space, std::move(table));
}

GroupAction action_from_generator_automorphisms(
    GroupPtr actor, GroupPtr space, const std::vector<std::vector<Elem>>& images) {
    if (images.size() != actor->generators.size())
        throw InvalidInput("one automorphism per actor generator required");
    int ns = space->order;
    std::vector<std::uint16_t> table(std::size_t(actor->order) * ns);
    for (Elem x = 0; x < ns; ++x) table[x] = std::uint16_t(x);  // identity row
    // Extend along the actor's BFS tree: act(parent * gen) = act(parent) ∘ act(gen).
    for (Elem q = 1; q < actor->order; ++q) {
        Elem p = actor->tree_parent[q];
        int gi = actor->tree_gen[q];
        const auto& gen_img = images[gi];
        if (int(gen_img.size()) != ns) throw InvalidInput("automorphism image has wrong length");
        for (Elem x = 0; x < ns; ++x) {
            Elem y = gen_img[x];
            if (y < 0 || y >= ns) throw InvalidInput("automorphism image out of range");
            table[std::size_t(q) * ns + x] = table[std::size_t(p) * ns + y];
        }
    }
    return make_action(actor, space, std::move(table));
}

GroupAction conjugation_action(GroupPtr group, const Subgroup& normal_sub) {
    if (!is_normal(normal_sub)) throw InvalidInput("conjugation action needs a normal subgroup");
    EmbeddedGroup space = subgroup_as_group(normal_sub);
    int ns = space.group->order;
    std::vector<int> to_local(group->order, -1);
    for (int i = 0; i < ns; ++i) to_local[normal_sub.members[i]] = i;
    std::vector<std::uint16_t> table(std::size_t(group->order) * ns);
    for (Elem q = 0; q < group->order; ++q)
        for (int i = 0; i < ns; ++i) {
            Elem conj = group->conj(normal_sub.members[i], group->inv(q));  // q a q^-1
            table[std::size_t(q) * ns + i] = std::uint16_t(to_local[conj]);
        }
    return make_action(group, space.group, std::move(table));
}

GroupAction restrict_action(const GroupAction& action, const Subgroup& sub) {
    if (sub.parent != action.actor) throw InvalidInput("restrict_action subgroup mismatch");
    EmbeddedGroup actor = subgroup_as_group(sub);
    int ns = action.space->order;
    std::vector<std::uint16_t> table(std::size_t(actor.group->order) * ns);
    for (Elem q = 0; q < actor.group->order; ++q)
        for (Elem x = 0; x < ns; ++x)
            table[std::size_t(q) * ns + x] = std::uint16_t(action.act(actor.inclusion.map[q], x));
    return make_action(actor.group, action.space, std::move(table));
}

SemidirectProduct semidirect_product(const GroupAction& action, int cap) {
    GroupPtr a = action.space, q = action.actor;
    long long n = (long long)a->order * q->order;
    check_cap(n, cap);
    int nq = q->order;
    auto idx = [nq](Elem x, Elem y) { return x * nq + y; };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (Elem x = 0; x < a->order; ++x)
        for (Elem y = 0; y < nq; ++y)
            for (Elem x2 = 0; x2 < a->order; ++x2)
                for (Elem y2 = 0; y2 < nq; ++y2)
                    table[idx(x, y)][idx(x2, y2)] =
                        idx(a->mul(x, action.act(y, x2)), q->mul(y, y2));
    std::vector<Elem> gens;
    for (Elem g : a->generators) gens.push_back(idx(g, 0));
    for (Elem g : q->generators) gens.push_back(idx(0, g));
    GroupPtr total = build_group_from_table(table, gens, named(a->name, ":", q->name), cap);

    SemidirectProduct out;
    out.group = total;
    {
        std::vector<Elem> m(a->order);
        for (Elem x = 0; x < a->order; ++x) m[x] = idx(x, 0);
        out.embed_space = make_hom(a, total, std::move(m));
    }
    {
        std::vector<Elem> m(nq);
        for (Elem y = 0; y < nq; ++y) m[y] = idx(0, y);
        out.embed_actor = make_hom(q, total, std::move(m));
    }
    {
        std::vector<Elem> m(n);
        for (Elem x = 0; x < a->order; ++x)
            for (Elem y = 0; y < nq; ++y) m[idx(x, y)] = y;
        out.quot = make_hom(total, q, std::move(m));
    }
    return out;
}

WreathProduct wreath_product(GroupPtr space, GroupPtr top, int cap) {
    int m = top->order;
    long long power = 1;
    for (int i = 0; i < m; ++i) {
        power *= space->order;
        if (power > cap) check_cap(power, cap);
    }
    check_cap(power * m, cap);
    int np = int(power);
    int na = space->order;

    // A^G with coordinate i attached to element i of G; index big-endian,
    // coordinate 0 most significant.
    auto coord = [&](int f, int i) {
        for (int k = m - 1; k > i; --k) f /= na;
        return f % na;
    };
    auto encode = [&](const std::vector<int>& t) {
        int f = 0;
        for (int i = 0; i < m; ++i) f = f * na + t[i];
        return f;
    };
    std::vector<std::vector<int>> ptable(np, std::vector<int>(np));
    for (int f = 0; f < np; ++f)
        for (int g = 0; g < np; ++g) {
            std::vector<int> t(m);
            for (int i = 0; i < m; ++i) t[i] = space->mul(coord(f, i), coord(g, i));
            ptable[f][g] = encode(t);
        }
    std::vector<Elem> pgens;
    for (int i = 0; i < m; ++i)
        for (Elem g : space->generators) {
            std::vector<int> t(m, 0);
            t[i] = g;
            pgens.push_back(encode(t));
        }
    GroupPtr base = build_group_from_table(ptable, pgens,
                                           space->name.empty() ? "" : space->name + "^" + std::to_string(m),
                                           cap);

    // Translation action: (q . f)(x) = f(q^-1 x).
    std::vector<std::uint16_t> atable(std::size_t(m) * np);
    for (Elem q = 0; q < m; ++q)
        for (int f = 0; f < np; ++f) {
            std::vector<int> t(m);
            for (int i = 0; i < m; ++i) t[i] = coord(f, top->mul(top->inv(q), i));
            atable[std::size_t(q) * np + f] = std::uint16_t(encode(t));
        }
    GroupAction action = make_action(top, base, std::move(atable));
    SemidirectProduct sd = semidirect_product(action, cap);

    WreathProduct out;
    out.group = sd.group;
    out.base_group = base;
    out.base_embed = sd.embed_space;
    out.top_quot = sd.quot;
    {
        std::vector<Elem> mcoord(na);
        for (Elem x = 0; x < na; ++x) {
            std::vector<int> t(m, 0);
            t[0] = x;  // coordinate of the identity of G
            mcoord[x] = sd.embed_space.map[encode(t)];
        }
        out.coord_embed = make_hom(space, sd.group, std::move(mcoord));
    }
    return out;
}

FiberPower fiber_power(const GroupHom& beta, int n, int cap) {
    if (n < 1) throw InvalidInput("fiber power level must be positive");
    GroupPtr h = beta.source;
    // Predicted size |H|^n / |B|^(n-1) when beta is surjective; enumerate
    // by walking fibers so work is proportional to the result.
    std::vector<std::vector<Elem>> fibers(beta.target->order);
    for (Elem x = 0; x < h->order; ++x) fibers[beta.map[x]].push_back(x);

    std::vector<std::vector<Elem>> tuples;
    {
        std::vector<Elem> t(n);
        // h_1 ranges over all of H in order; later coordinates over the
        // fiber of beta(h_1), giving lexicographic tuple order.
        std::function<void(int, const std::vector<Elem>&)> rec =
            [&](int pos, const std::vector<Elem>& fiber) {
                if (pos == n) {
                    tuples.push_back(t);
                    if ((long long)tuples.size() > cap)
                        throw CapExceeded("fiber power order exceeds cap");
                    return;
                }
                if (pos == 0) {
                    for (Elem x = 0; x < h->order; ++x) {
                        t[0] = x;
                        rec(1, fibers[beta.map[x]]);
                    }
                } else {
                    for (Elem x : fiber) {
                        t[pos] = x;
                        rec(pos + 1, fiber);
                    }
                }
            };
        rec(0, {});
    }
    int total_n = int(tuples.size());
    std::unordered_map<long long, int> index;
    index.reserve(total_n * 2);
    auto key_of = [&](const std::vector<Elem>& t) {
        long long k = 0;
        for (int i = 0; i < n; ++i) k = k * h->order + t[i];
        return k;
    };
    for (int i = 0; i < total_n; ++i) index[key_of(tuples[i])] = i;
    std::vector<std::vector<int>> table(total_n, std::vector<int>(total_n));
    std::vector<Elem> prod(n);
    for (int i = 0; i < total_n; ++i)
        for (int j = 0; j < total_n; ++j) {
            for (int k = 0; k < n; ++k) prod[k] = h->mul(tuples[i][k], tuples[j][k]);
            table[i][j] = index.at(key_of(prod));
        }
    GroupPtr total = build_group_from_table(
        table, {}, h->name.empty() ? "" : "Delta" + std::to_string(n) + "(" + h->name + ")", cap);

    FiberPower out;
    out.base = beta;
    out.n = n;
    out.total = total;
    for (int k = 0; k < n; ++k) {
        std::vector<Elem> m(total_n);
        for (int i = 0; i < total_n; ++i) m[i] = tuples[i][k];
        out.projections.push_back(make_hom(total, h, std::move(m)));
    }
    out.beta_hat = compose(beta, out.projections[0]);
    return out;
}

}  // namespace projpair
