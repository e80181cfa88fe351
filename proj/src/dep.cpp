#include "projpair/dep.hpp"

#include <algorithm>
#include <unordered_map>

namespace projpair {

namespace {

std::optional<Elem> first_unhit(const GroupHom& hom) {
    std::vector<char> hit(hom.target->order, 0);
    for (Elem v : hom.map) hit[v] = 1;
    for (Elem b = 0; b < hom.target->order; ++b)
        if (!hit[b]) return b;
    return std::nullopt;
}

}  // namespace

std::vector<std::string> validate_dep(const DoubleEmbeddingProblem& dep) {
    std::vector<std::string> diags;
    if (dep.pair.distinguished.parent != dep.L())
        diags.push_back("pair: distinguished subgroup is not a subgroup of the ambient group");
    if (dep.beta.source != dep.H || dep.beta.target != dep.B)
        diags.push_back("beta: wrong source or target group");
    if (dep.nu.source != dep.L() || dep.nu.target != dep.B)
        diags.push_back("nu: wrong source or target group");
    if (dep.G.parent != dep.H) diags.push_back("G: not a subgroup of H");
    if (dep.A.parent != dep.B) diags.push_back("A: not a subgroup of B");
    if (!diags.empty()) return diags;

    if (auto b = first_unhit(dep.beta))
        diags.push_back("beta: not surjective, element " + std::to_string(*b) +
                        " of B is not hit");
    if (auto b = first_unhit(dep.nu))
        diags.push_back("nu: not surjective, element " + std::to_string(*b) +
                        " of B is not hit");

    // Lower square: beta(G) = A.
    std::vector<char> hit_a(dep.B->order, 0);
    for (Elem g : dep.G.members) {
        Elem b = dep.beta.map[g];
        if (!dep.A.contains(b))
            diags.push_back("alpha: beta maps G-element " + std::to_string(g) +
                            " outside A (to " + std::to_string(b) + ")");
        else
            hit_a[b] = 1;
    }
    for (Elem a : dep.A.members)
        if (!hit_a[a]) {
            diags.push_back("alpha: not surjective onto A, element " + std::to_string(a) +
                            " is not hit from G");
            break;
        }

    // Lower-right: nu(Gm) = A.
    std::fill(hit_a.begin(), hit_a.end(), 0);
    for (Elem x : dep.Gm().members) {
        Elem b = dep.nu.map[x];
        if (!dep.A.contains(b))
            diags.push_back("mu: nu maps Gm-element " + std::to_string(x) +
                            " outside A (to " + std::to_string(b) + ")");
        else
            hit_a[b] = 1;
    }
    for (Elem a : dep.A.members)
        if (!hit_a[a]) {
            diags.push_back("mu: not surjective onto A, element " + std::to_string(a) +
                            " is not hit from Gm");
            break;
        }
    return diags;
}

void require_valid(const DoubleEmbeddingProblem& dep) {
    auto diags = validate_dep(dep);
    if (!diags.empty()) throw InvalidInput("invalid DEP: " + diags.front());
}

DoubleEmbeddingProblem normalize_dep(const DoubleEmbeddingProblem& raw) {
    // New A = mu(Gm), new B = nu(L); G, H shrink to the preimages.
    std::vector<Elem> a_members, b_members;
    for (Elem x : raw.Gm().members) a_members.push_back(raw.nu.map[x]);
    for (Elem x = 0; x < raw.L()->order; ++x) b_members.push_back(raw.nu.map[x]);
    Subgroup new_a_in_b = make_subgroup(raw.B, a_members);
    Subgroup new_b_in_b = make_subgroup(raw.B, b_members);

    EmbeddedGroup b_emb = subgroup_as_group(new_b_in_b);
    std::vector<int> b_local(raw.B->order, -1);
    for (int i = 0; i < b_emb.group->order; ++i) b_local[b_emb.inclusion.map[i]] = i;

    Subgroup h_sub = preimage_of(raw.beta, new_b_in_b);
    EmbeddedGroup h_emb = subgroup_as_group(h_sub);

    std::vector<Elem> beta_map(h_emb.group->order);
    for (int i = 0; i < h_emb.group->order; ++i)
        beta_map[i] = b_local[raw.beta.map[h_emb.inclusion.map[i]]];
    GroupHom new_beta = make_hom(h_emb.group, b_emb.group, std::move(beta_map));

    std::vector<Elem> nu_map(raw.L()->order);
    for (Elem x = 0; x < raw.L()->order; ++x) nu_map[x] = b_local[raw.nu.map[x]];
    GroupHom new_nu = make_hom(raw.L(), b_emb.group, std::move(nu_map));

    // G' = alpha-preimage of the new A, inside the new H.
    std::vector<Elem> g_members;
    for (int i = 0; i < h_emb.group->order; ++i) {
        Elem h = h_emb.inclusion.map[i];
        if (raw.G.contains(h) && new_a_in_b.contains(raw.beta.map[h])) g_members.push_back(i);
    }
    std::vector<Elem> a_local;
    for (Elem a : new_a_in_b.members) a_local.push_back(b_local[a]);

    DoubleEmbeddingProblem out;
    out.pair = raw.pair;
    out.H = h_emb.group;
    out.B = b_emb.group;
    out.G = make_subgroup(h_emb.group, std::move(g_members));
    out.A = make_subgroup(b_emb.group, std::move(a_local));
    out.beta = std::move(new_beta);
    out.nu = std::move(new_nu);
    require_valid(out);
    return out;
}

WeakSolution make_weak_solution(const DoubleEmbeddingProblem& dep, GroupHom theta) {
    WeakSolution sol;
    sol.theta = std::move(theta);
    sol.eta = restrict_hom(sol.theta, dep.Gm());
    verify_weak_solution(dep, sol);
    return sol;
}

void verify_weak_solution(const DoubleEmbeddingProblem& dep, const WeakSolution& sol) {
    if (sol.theta.source != dep.L() || sol.theta.target != dep.H)
        throw InvalidInput("weak solution: theta has wrong source or target");
    for (Elem x = 0; x < dep.L()->order; ++x)
        if (dep.beta.map[sol.theta.map[x]] != dep.nu.map[x])
            throw InvalidInput("weak solution: beta∘theta != nu at element " + std::to_string(x));
    for (Elem g : dep.Gm().members) {
        if (!dep.G.contains(sol.theta.map[g]))
            throw InvalidInput("weak solution: theta(Gm) escapes G at element " + std::to_string(g));
        if (sol.eta.map[g] != sol.theta.map[g])
            throw InvalidInput("weak solution: eta is not the restriction of theta");
        // alpha∘eta = mu is beta∘theta = nu read on Gm, but check it on its own.
        if (dep.beta.map[sol.eta.map[g]] != dep.nu.map[g])
            throw InvalidInput("weak solution: alpha∘eta != mu at element " + std::to_string(g));
    }
}

std::pair<bool, std::optional<SplitWitness>> is_split(const DoubleEmbeddingProblem& dep) {
    EmbeddedGroup g_emb = subgroup_as_group(dep.G);
    EmbeddedGroup a_emb = subgroup_as_group(dep.A);
    std::vector<int> a_local(dep.B->order, -1);
    for (int i = 0; i < a_emb.group->order; ++i) a_local[a_emb.inclusion.map[i]] = i;
    std::vector<Elem> alpha_map(g_emb.group->order);
    for (int i = 0; i < g_emb.group->order; ++i)
        alpha_map[i] = a_local[dep.beta.map[g_emb.inclusion.map[i]]];
    GroupHom alpha = make_hom(g_emb.group, a_emb.group, std::move(alpha_map));

    auto alpha_sec = first_section_of(alpha);
    if (!alpha_sec) return {false, std::nullopt};
    auto beta_sec = first_section_of(dep.beta);
    if (!beta_sec) return {false, std::nullopt};

    // Re-express the alpha section in ambient coordinates.
    std::vector<Elem> sec_map(dep.B->order, -1);
    for (int i = 0; i < a_emb.group->order; ++i)
        sec_map[a_emb.inclusion.map[i]] = g_emb.inclusion.map[alpha_sec->map[i]];
    SplitWitness w;
    w.alpha_section = make_subhom(dep.A, dep.H, std::move(sec_map));
    w.beta_section = *beta_sec;
    return {true, w};
}

namespace {

HomConstraints weak_constraints(const DoubleEmbeddingProblem& dep) {
    HomConstraints c;
    c.commuting = HomConstraints::Commuting{dep.beta, dep.nu};
    c.image_in = HomConstraints::ImageIn{dep.Gm(), dep.G};
    return c;
}

}  // namespace

std::vector<WeakSolution> solve_weak(const DoubleEmbeddingProblem& dep, bool want_all) {
    std::vector<WeakSolution> out;
    enumerate_homs(dep.L(), dep.H, weak_constraints(dep), false, [&](const GroupHom& h) {
        out.push_back(make_weak_solution(dep, h));
        return want_all;
    });
    return out;
}

std::optional<WeakSolution> solve_weak_first(const DoubleEmbeddingProblem& dep) {
    auto sols = solve_weak(dep, false);
    if (sols.empty()) return std::nullopt;
    return sols.front();
}

std::vector<SubHom> lower_solutions(const DoubleEmbeddingProblem& dep) {
    EmbeddedGroup gm_emb = subgroup_as_group(dep.Gm());
    HomConstraints c;
    c.commuting = HomConstraints::Commuting{dep.beta, compose(dep.nu, gm_emb.inclusion)};
    c.image_in = HomConstraints::ImageIn{whole_subgroup(gm_emb.group), dep.G};
    std::vector<SubHom> out;
    for (const GroupHom& h : all_homs(gm_emb.group, dep.H, c)) {
        std::vector<Elem> m(dep.L()->order, -1);
        for (int i = 0; i < gm_emb.group->order; ++i) m[gm_emb.inclusion.map[i]] = h.map[i];
        out.push_back(make_subhom(dep.Gm(), dep.H, std::move(m)));
    }
    return out;
}

namespace {

void check_lower_solution(const DoubleEmbeddingProblem& dep, const SubHom& eta) {
    if (eta.domain.members != dep.Gm().members || eta.domain.parent != dep.L() ||
        eta.target != dep.H)
        throw InvalidInput("eta: domain or target mismatch with the DEP");
    for (Elem g : dep.Gm().members) {
        if (!dep.G.contains(eta.map[g]))
            throw InvalidInput("eta: value outside G at element " + std::to_string(g));
        if (dep.beta.map[eta.map[g]] != dep.nu.map[g])
            throw InvalidInput("eta: alpha∘eta != mu at element " + std::to_string(g));
    }
}

}  // namespace

std::optional<WeakSolution> solve_weak_prescribed(const DoubleEmbeddingProblem& dep,
                                                  const SubHom& eta) {
    check_lower_solution(dep, eta);
    HomConstraints c;
    c.commuting = HomConstraints::Commuting{dep.beta, dep.nu};
    c.restriction = eta;
    auto h = first_hom(dep.L(), dep.H, c);
    if (!h) return std::nullopt;
    return make_weak_solution(dep, *h);
}

std::optional<WeakSolution> lift_via_fiber(const DoubleEmbeddingProblem& dep,
                                           const SubHom& eta, int cap) {
    check_lower_solution(dep, eta);
    FiberProduct fp = fiber_product(dep.beta, dep.nu, cap);  // total = H x_B L

    // G-hat = graph of eta inside the fiber product.
    std::unordered_map<long long, int> pair_index;
    int l_order = dep.L()->order;
    for (Elem x = 0; x < fp.total->order; ++x)
        pair_index[(long long)fp.left_proj.map[x] * l_order + fp.right_proj.map[x]] = x;
    std::vector<Elem> graph;
    for (Elem g : dep.Gm().members)
        graph.push_back(pair_index.at((long long)eta.map[g] * l_order + g));
    Subgroup g_hat = make_subgroup(fp.total, std::move(graph));

    HomConstraints c;
    c.commuting = HomConstraints::Commuting{fp.right_proj, identity_hom(dep.L())};
    c.image_in = HomConstraints::ImageIn{dep.Gm(), g_hat};
    auto theta_hat = first_hom(dep.L(), fp.total, c);
    if (!theta_hat) return std::nullopt;
    return make_weak_solution(dep, compose(fp.left_proj, *theta_hat));
}

DominationWitness dominate_split(const DoubleEmbeddingProblem& dep,
                                 const GroupHom& theta, const SubHom& eta,
                                 int cap) {
    // theta solves the higher EP, eta the lower EP; no compatibility needed.
    if (theta.source != dep.L() || theta.target != dep.H)
        throw InvalidInput("theta has wrong source or target");
    for (Elem x = 0; x < dep.L()->order; ++x)
        if (dep.beta.map[theta.map[x]] != dep.nu.map[x])
            throw InvalidInput("theta: beta∘theta != nu at element " + std::to_string(x));
    check_lower_solution(dep, eta);

    // N = ker(theta) ∩ core_L(ker(eta)): the largest normal subgroup with
    // N <= ker(theta) and Gm ∩ N <= ker(eta).
    std::vector<Elem> eta_ker;
    for (Elem g : dep.Gm().members)
        if (eta.map[g] == 0) eta_ker.push_back(g);
    Subgroup eta_kernel = make_subgroup(dep.L(), std::move(eta_ker));
    Subgroup n_sub = intersect(theta.kernel, normal_core(eta_kernel));

    QuotientGroup q = quotient_group(dep.L(), n_sub);  // B-hat = L/N, nu-hat = q
    // tau: B-hat -> B induced by nu (well-defined since N <= ker nu).
    std::vector<Elem> tau_map(q.group->order, -1);
    for (Elem x = 0; x < dep.L()->order; ++x) tau_map[q.projection.map[x]] = dep.nu.map[x];
    GroupHom tau = make_hom(q.group, dep.B, std::move(tau_map));

    FiberProduct fp = fiber_product(dep.beta, tau, cap);  // H-hat = H x_B B-hat

    Subgroup a_hat = image_of(q.projection, dep.Gm());
    std::vector<Elem> g_hat_members;
    for (Elem x = 0; x < fp.total->order; ++x)
        if (dep.G.contains(fp.left_proj.map[x]) && a_hat.contains(fp.right_proj.map[x]))
            g_hat_members.push_back(x);

    DominationWitness w;
    w.dominating.pair = dep.pair;
    w.dominating.H = fp.total;
    w.dominating.B = q.group;
    w.dominating.G = make_subgroup(fp.total, std::move(g_hat_members));
    w.dominating.A = a_hat;
    w.dominating.beta = fp.right_proj;
    w.dominating.nu = q.projection;
    require_valid(w.dominating);

    w.pi_higher = fp.left_proj;
    w.pi_quot = tau;
    w.pi_lower = restrict_hom(fp.left_proj, w.dominating.G);
    w.pi_lower_quot = restrict_hom(tau, a_hat);

    std::unordered_map<long long, int> pair_index;
    int bh_order = q.group->order;
    for (Elem x = 0; x < fp.total->order; ++x)
        pair_index[(long long)fp.left_proj.map[x] * bh_order + fp.right_proj.map[x]] = x;

    // beta-hat'(x) = (theta(rep x), x); any representative works since
    // N <= ker(theta).
    std::vector<Elem> rep(bh_order, -1);
    for (Elem x = 0; x < dep.L()->order; ++x)
        if (rep[q.projection.map[x]] < 0) rep[q.projection.map[x]] = x;
    std::vector<Elem> beta_sec(bh_order);
    for (Elem x = 0; x < bh_order; ++x)
        beta_sec[x] = pair_index.at((long long)theta.map[rep[x]] * bh_order + x);
    w.sections.beta_section = make_hom(q.group, fp.total, std::move(beta_sec));

    // alpha-hat'(x) = (eta(rep x), x) with the representative taken in Gm.
    std::vector<Elem> alpha_sec(bh_order, -1);
    for (Elem g : dep.Gm().members) {
        Elem cls = q.projection.map[g];
        if (alpha_sec[cls] < 0)
            alpha_sec[cls] = pair_index.at((long long)eta.map[g] * bh_order + cls);
    }
    w.sections.alpha_section = make_subhom(a_hat, fp.total, std::move(alpha_sec));

    auto split = is_split(w.dominating);
    if (!split.first) throw std::logic_error("dominating DEP is not split");
    return w;
}

WeakSolution induced_solution(const DoubleEmbeddingProblem& dominated,
                              const DominationWitness& witness,
                              const WeakSolution& sol) {
    verify_weak_solution(witness.dominating, sol);
    return make_weak_solution(dominated, compose(witness.pi_higher, sol.theta));
}

WeakSolution canonical_dominating_solution(const DominationWitness& witness) {
    GroupHom theta_hat = compose(witness.sections.beta_section, witness.dominating.nu);
    return make_weak_solution(witness.dominating, theta_hat);
}

KernelReduction finite_kernel_reduction(const DoubleEmbeddingProblem& dep) {
    const Subgroup& k = dep.beta.kernel;
    std::vector<Elem> kg_seed = k.members;
    kg_seed.insert(kg_seed.end(), dep.G.members.begin(), dep.G.members.end());
    Subgroup kg = subgroup_closure(dep.H, kg_seed);

    std::vector<Subgroup> candidates = normal_subgroups(dep.H);
    const Subgroup* best = nullptr;
    for (const Subgroup& u : candidates) {
        if (intersect(k, u).size() != 1) continue;
        bool inside = true;
        for (Elem x : u.members)
            if (kg.contains(x) && !dep.G.contains(x)) {
                inside = false;
                break;
            }
        if (!inside) continue;
        if (!best || u.size() > best->size()) best = &u;  // first on ties
    }
    if (!best) throw std::logic_error("U = 1 should always be admissible");

    KernelReduction r;
    r.U = *best;
    QuotientGroup qh = quotient_group(dep.H, r.U);
    r.H_bar = qh.group;
    r.pi = qh.projection;
    r.G_bar = image_of(qh.projection, dep.G);
    Subgroup beta_u = image_of(dep.beta, r.U);
    QuotientGroup qb = quotient_group(dep.B, beta_u);
    r.B_bar = qb.group;
    r.pi_B = qb.projection;
    r.A_bar = image_of(qb.projection, dep.A);
    std::vector<Elem> bb_map(r.H_bar->order, -1);
    for (Elem h = 0; h < dep.H->order; ++h)
        bb_map[r.pi.map[h]] = r.pi_B.map[dep.beta.map[h]];
    r.beta_bar = make_hom(r.H_bar, r.B_bar, std::move(bb_map));

    // Certificate (KG) ∩ (UG) = G, checked exhaustively.
    std::vector<Elem> ug_seed = r.U.members;
    ug_seed.insert(ug_seed.end(), dep.G.members.begin(), dep.G.members.end());
    Subgroup ug = subgroup_closure(dep.H, ug_seed);
    Subgroup both = intersect(kg, ug);
    r.certificate = (both.members == dep.G.members);
    return r;
}

std::optional<Subgroup> split_over_subgroup(const FinitePair& pair, const Subgroup& n_sub) {
    GroupPtr l = pair.ambient;
    const Subgroup& gm = pair.distinguished;
    if (n_sub.parent != l) throw InvalidInput("N must live in the ambient group");
    for (Elem x : n_sub.members)
        if (!gm.contains(x)) throw InvalidInput("N is not a subgroup of Gm");

    // N-hat = intersection of the Gm-conjugates of N.
    std::vector<Elem> core;
    for (Elem s : n_sub.members) {
        bool ok = true;
        for (Elem x : gm.members)
            if (!n_sub.contains(l->conj(s, x))) {
                ok = false;
                break;
            }
        if (ok) core.push_back(s);
    }
    Subgroup n_hat = make_subgroup(l, std::move(core));

    EmbeddedGroup gm_emb = subgroup_as_group(gm);
    std::vector<Elem> n_hat_local;
    {
        std::vector<int> to_local(l->order, -1);
        for (int i = 0; i < gm_emb.group->order; ++i) to_local[gm_emb.inclusion.map[i]] = i;
        for (Elem x : n_hat.members) n_hat_local.push_back(to_local[x]);
    }
    QuotientGroup q = quotient_group(gm_emb.group, make_subgroup(gm_emb.group, n_hat_local));

    // theta: L -> Gm/N-hat restricting to the quotient map on Gm.
    std::vector<Elem> rmap(l->order, -1);
    for (int i = 0; i < gm_emb.group->order; ++i)
        rmap[gm_emb.inclusion.map[i]] = q.projection.map[i];
    HomConstraints c;
    c.restriction = make_subhom(gm, q.group, std::move(rmap));
    auto theta = first_hom(l, q.group, c);
    if (!theta) return std::nullopt;

    // M = theta^-1(N / N-hat).
    std::vector<Elem> n_mod_local;
    {
        std::vector<int> to_local(l->order, -1);
        for (int i = 0; i < gm_emb.group->order; ++i) to_local[gm_emb.inclusion.map[i]] = i;
        for (Elem x : n_sub.members) n_mod_local.push_back(q.projection.map[to_local[x]]);
    }
    Subgroup m = preimage_of(*theta, make_subgroup(q.group, n_mod_local));

    // Postconditions, asserted on every success.
    if (intersect(gm, m).members != n_sub.members)
        throw std::logic_error("split_over_subgroup: Gm ∩ M != N");
    if (int(product_set(gm, m).size()) != l->order)
        throw std::logic_error("split_over_subgroup: Gm·M != L");
    bool n_normal_in_gm = true;
    for (Elem s : n_sub.members)
        for (Elem x : gm.members)
            if (!n_sub.contains(l->conj(s, x))) n_normal_in_gm = false;
    if (n_normal_in_gm) {
        if (n_hat.members != n_sub.members)
            throw std::logic_error("split_over_subgroup: N normal in Gm but N-hat != N");
        if (!is_normal(m)) throw std::logic_error("split_over_subgroup: normality transfer failed");
    }
    return m;
}

std::optional<Subgroup> semidirect_complement(const FinitePair& pair) {
    return split_over_subgroup(pair, trivial_subgroup(pair.ambient));
}

WreathObstruction wreath_obstruction_dep(const FinitePair& pair, const SubHom& eta,
                                         const GroupHom& nu, int cap) {
    GroupPtr l = pair.ambient;
    const Subgroup& gm = pair.distinguished;
    if (!is_normal(gm)) throw InvalidInput("Gm must be normal in L");
    GroupPtr a = eta.target;
    GroupPtr g = nu.target;
    if (a->order <= 1 || g->order <= 1)
        throw InvalidInput("wreath obstruction targets must be nontrivial");
    if (eta.domain.members != gm.members || eta.domain.parent != l)
        throw InvalidInput("eta must be defined on Gm");
    if (image_of(eta).size() != a->order) throw InvalidInput("eta must be surjective");
    if (nu.source != l) throw InvalidInput("nu must be defined on L");
    if (!nu.is_surjective()) throw InvalidInput("nu must be surjective");
    for (Elem x : gm.members)
        if (nu.map[x] != 0)
            throw InvalidInput("nu must kill Gm (the diagram's lower quotient is trivial)");

    WreathObstruction out;
    out.wreath = wreath_product(a, g, cap);

    out.dep.pair = pair;
    out.dep.H = out.wreath.group;
    out.dep.B = g;
    out.dep.G = image_of(out.wreath.coord_embed, whole_subgroup(a));
    out.dep.A = trivial_subgroup(g);
    out.dep.beta = out.wreath.top_quot;
    out.dep.nu = nu;
    require_valid(out.dep);

    std::vector<Elem> m(l->order, -1);
    for (Elem x : gm.members) m[x] = out.wreath.coord_embed.map[eta.map[x]];
    out.prescribed_eta = make_subhom(gm, out.wreath.group, std::move(m));
    return out;
}

bool sylow_obstruction_check(GroupPtr Q, int p, const GroupHom& psi) {
    if (!is_prime(p)) throw InvalidInput("p must be prime");
    if (psi.source != Q) throw InvalidInput("psi must be defined on Q");
    if (!psi.is_surjective()) throw InvalidInput("psi must be surjective");
    GroupPtr s = psi.target;
    if (is_abelian(s)) throw InvalidInput("S must be non-abelian");
    if (!is_simple(s)) throw InvalidInput("S must be simple");
    if (s->order % p != 0) throw InvalidInput("p must divide |S|");

    Subgroup sylow = sylow_subgroup(Q, p);
    for (const Subgroup& m : normal_subgroups(Q)) {
        if (intersect(m, sylow).size() != 1) continue;
        if (int(product_set(m, sylow).size()) == Q->order) return false;
    }
    return true;
}

}  // namespace projpair
