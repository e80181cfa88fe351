#include <doctest.h>

#include "projpair/catalog.hpp"
#include "projpair/dep.hpp"

using namespace projpair;

namespace {

// The "identity DEP" over (L, Gm): H = B = L, beta = id, nu = id,
// G = A = Gm. Always valid; theta = nu is always a solution.
DoubleEmbeddingProblem identity_dep(GroupPtr l, const Subgroup& gm) {
    DoubleEmbeddingProblem dep;
    dep.pair = FinitePair{l, gm};
    dep.H = l;
    dep.B = l;
    dep.G = gm;
    dep.A = gm;
    dep.beta = identity_hom(l);
    dep.nu = identity_hom(l);
    return dep;
}

DoubleEmbeddingProblem s3_sign_dep() {
    GroupPtr s3 = catalog_group("S3");
    GroupPtr c2 = catalog_group("C2");
    DoubleEmbeddingProblem dep;
    dep.pair = FinitePair{s3, subgroup_closure(s3, {2})};  // Gm = A3
    dep.H = c2;
    dep.B = c2;
    dep.G = trivial_subgroup(c2);
    dep.A = trivial_subgroup(c2);
    dep.beta = identity_hom(c2);
    dep.nu = hom_from_generator_images(s3, c2, {1, 0});  // sign
    return dep;
}

}  // namespace

TEST_CASE("validate_dep accepts the identity DEP and reports violations") {
    GroupPtr s3 = catalog_group("S3");
    DoubleEmbeddingProblem dep = identity_dep(s3, subgroup_closure(s3, {2}));
    CHECK(validate_dep(dep).empty());
    CHECK_NOTHROW(require_valid(dep));

    SUBCASE("non-surjective nu is diagnosed by name") {
        DoubleEmbeddingProblem bad = s3_sign_dep();
        bad.nu = trivial_hom(s3, catalog_group("C2"));
        auto diags = validate_dep(bad);
        REQUIRE(!diags.empty());
        bool mentions_nu = false;
        for (const std::string& d : diags)
            mentions_nu = mentions_nu || d.find("nu") != std::string::npos;
        CHECK(mentions_nu);
    }

    SUBCASE("beta(G) proper in A is diagnosed") {
        DoubleEmbeddingProblem bad = identity_dep(s3, subgroup_closure(s3, {2}));
        bad.G = trivial_subgroup(s3);  // beta(G) = 1 but A = Gm
        auto diags = validate_dep(bad);
        CHECK(!diags.empty());
        CHECK_THROWS_AS(require_valid(bad), InvalidInput);
    }
}

TEST_CASE("normalize_dep shrinks non-surjective diagrams") {
    GroupPtr s3 = catalog_group("S3");
    GroupPtr c2 = catalog_group("C2");

    SUBCASE("already surjective input is unchanged") {
        DoubleEmbeddingProblem dep = s3_sign_dep();
        DoubleEmbeddingProblem norm = normalize_dep(dep);
        CHECK(norm.B->order == dep.B->order);
        CHECK(norm.H->order == dep.H->order);
        CHECK(validate_dep(norm).empty());
    }

    SUBCASE("nu with proper image shrinks B and H") {
        DirectProduct v4 = direct_product(c2, c2);
        DoubleEmbeddingProblem raw;
        raw.pair = FinitePair{c2, whole_subgroup(c2)};
        raw.H = v4.group;
        raw.B = v4.group;
        raw.G = whole_subgroup(v4.group);
        raw.A = whole_subgroup(v4.group);
        raw.beta = identity_hom(v4.group);
        raw.nu = v4.inject_left;  // image = first factor, proper in V4
        DoubleEmbeddingProblem norm = normalize_dep(raw);
        CHECK(norm.B->order == 2);
        CHECK(norm.H->order == 2);
        CHECK(validate_dep(norm).empty());
    }
}

TEST_CASE("is_split") {
    GroupPtr s3 = catalog_group("S3");
    CHECK(is_split(identity_dep(s3, subgroup_closure(s3, {2}))).first);

    // higher problem beta: C4 -> C2 admits no section
    GroupPtr c4 = catalog_group("C4");
    GroupPtr c2 = catalog_group("C2");
    DoubleEmbeddingProblem dep;
    dep.pair = FinitePair{c4, whole_subgroup(c4)};
    dep.H = c4;
    dep.B = c2;
    dep.G = whole_subgroup(c4);
    dep.A = whole_subgroup(c2);
    dep.beta = hom_from_generator_images(c4, c2, {1});
    dep.nu = dep.beta;
    REQUIRE(validate_dep(dep).empty());
    CHECK(!is_split(dep).first);
}

TEST_CASE("solve_weak on the identity DEP finds theta = nu first") {
    GroupPtr s3 = catalog_group("S3");
    DoubleEmbeddingProblem dep = identity_dep(s3, subgroup_closure(s3, {2}));
    auto sols = solve_weak(dep, false);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].theta.map == dep.nu.map);
    verify_weak_solution(dep, sols[0]);
}

TEST_CASE("solve_weak V4 example") {
    GroupPtr c2 = catalog_group("C2");
    DirectProduct v4 = direct_product(c2, c2);
    GroupPtr l = v4.group;
    Subgroup first = image_of(v4.inject_left, whole_subgroup(c2));
    DoubleEmbeddingProblem dep;
    dep.pair = FinitePair{l, first};
    dep.H = l;
    dep.B = c2;
    dep.G = first;
    dep.A = trivial_subgroup(c2);
    dep.beta = v4.project_right;
    dep.nu = v4.project_right;
    REQUIRE(validate_dep(dep).empty());
    auto sols = solve_weak(dep, true);
    bool has_identity = false;
    for (const WeakSolution& s : sols) {
        verify_weak_solution(dep, s);
        has_identity = has_identity || s.theta.map == identity_hom(l).map;
    }
    CHECK(has_identity);
}

TEST_CASE("trivial lower problem reduces to the higher EP alone") {
    GroupPtr s3 = catalog_group("S3");
    GroupPtr c2 = catalog_group("C2");
    DoubleEmbeddingProblem dep;
    dep.pair = FinitePair{s3, trivial_subgroup(s3)};
    dep.H = c2;
    dep.B = c2;
    dep.G = trivial_subgroup(c2);  // alpha: G -> A must stay surjective
    dep.A = trivial_subgroup(c2);
    dep.beta = identity_hom(c2);
    dep.nu = hom_from_generator_images(s3, c2, {1, 0});
    REQUIRE(validate_dep(dep).empty());

    HomConstraints plain;
    plain.commuting = HomConstraints::Commuting{dep.beta, dep.nu};
    CHECK(solve_weak(dep, true).size() == all_homs(s3, c2, plain).size());
}

TEST_CASE("solve_weak_prescribed and lift_via_fiber agree") {
    std::vector<DoubleEmbeddingProblem> deps;
    GroupPtr s3 = catalog_group("S3");
    deps.push_back(identity_dep(s3, subgroup_closure(s3, {2})));
    deps.push_back(s3_sign_dep());
    GroupPtr d4 = catalog_group("D4");
    deps.push_back(identity_dep(d4, sylow_subgroup(d4, 2)));

    for (const DoubleEmbeddingProblem& dep : deps) {
        for (const SubHom& eta : lower_solutions(dep)) {
            std::optional<WeakSolution> direct = solve_weak_prescribed(dep, eta);
            std::optional<WeakSolution> fibered = lift_via_fiber(dep, eta);
            CHECK(direct.has_value() == fibered.has_value());
            if (direct) verify_weak_solution(dep, *direct);
            if (fibered) {
                verify_weak_solution(dep, *fibered);
                for (Elem g : dep.Gm().members) CHECK(fibered->theta(g) == eta(g));
            }
            if (direct)
                for (Elem g : dep.Gm().members) CHECK(direct->theta(g) == eta(g));
        }
    }
}

TEST_CASE("identity DEP prescribed with eta = nu restriction returns theta = nu") {
    GroupPtr s3 = catalog_group("S3");
    DoubleEmbeddingProblem dep = identity_dep(s3, subgroup_closure(s3, {2}));
    SubHom eta = restrict_hom(dep.nu, dep.Gm());
    std::optional<WeakSolution> sol = solve_weak_prescribed(dep, eta);
    REQUIRE(sol.has_value());
    CHECK(sol->theta.map == dep.nu.map);
}

TEST_CASE("dominate_split") {
    SUBCASE("injective theta and eta give N = 1, B_hat iso L") {
        GroupPtr s3 = catalog_group("S3");
        DoubleEmbeddingProblem dep = identity_dep(s3, subgroup_closure(s3, {2}));
        GroupHom theta = identity_hom(s3);
        SubHom eta = restrict_hom(theta, dep.Gm());
        DominationWitness w = dominate_split(dep, theta, eta);
        CHECK(w.dominating.B->order == 6);
        CHECK(is_split(w.dominating).first);
        WeakSolution canonical = canonical_dominating_solution(w);
        verify_weak_solution(w.dominating, canonical);
        WeakSolution induced = induced_solution(dep, w, canonical);
        verify_weak_solution(dep, induced);
    }

    SUBCASE("sign DEP: B_hat = L / ker(theta n core)") {
        DoubleEmbeddingProblem dep = s3_sign_dep();
        auto sols = solve_weak(dep, false);
        REQUIRE(!sols.empty());
        GroupHom theta = sols[0].theta;
        SubHom eta = sols[0].eta;
        DominationWitness w = dominate_split(dep, theta, eta);
        CHECK(validate_dep(w.dominating).empty());
        CHECK(is_split(w.dominating).first);
        CHECK(w.pi_higher.is_surjective());
        CHECK(w.pi_quot.is_surjective());
        WeakSolution canonical = canonical_dominating_solution(w);
        verify_weak_solution(w.dominating, canonical);
        WeakSolution induced = induced_solution(dep, w, canonical);
        verify_weak_solution(dep, induced);
    }
}

TEST_CASE("finite_kernel_reduction") {
    SUBCASE("G = H degenerate case allows U = H") {
        GroupPtr s3 = catalog_group("S3");
        DoubleEmbeddingProblem dep;
        dep.pair = FinitePair{s3, whole_subgroup(s3)};
        dep.H = s3;
        dep.B = cyclic_group(1);
        dep.G = whole_subgroup(s3);
        dep.A = whole_subgroup(dep.B);
        dep.beta = trivial_hom(s3, dep.B);
        dep.nu = trivial_hom(s3, dep.B);
        REQUIRE(validate_dep(dep).empty());
        // K = H here, so K cap U = 1 forces U = 1 unless... K = ker beta = H:
        // U must satisfy K cap U = 1, so U = 1. The reduction is the identity.
        KernelReduction red = finite_kernel_reduction(dep);
        CHECK(red.certificate);
        CHECK(red.H_bar->order == dep.H->order / red.U.size());
    }

    SUBCASE("V4 over C2 finds a complementary U") {
        GroupPtr c2 = catalog_group("C2");
        DirectProduct v4 = direct_product(c2, c2);
        Subgroup g_line = image_of(v4.inject_right, whole_subgroup(c2));
        DoubleEmbeddingProblem dep;
        dep.pair = FinitePair{c2, whole_subgroup(c2)};
        dep.H = v4.group;
        dep.B = c2;
        dep.G = g_line;
        dep.A = whole_subgroup(c2);
        dep.beta = v4.project_right;
        dep.nu = identity_hom(c2);
        REQUIRE(validate_dep(dep).empty());
        KernelReduction red = finite_kernel_reduction(dep);
        CHECK(red.certificate);
        CHECK(red.U.size() == 2);   // the G-line itself complements K
        CHECK(red.H_bar->order == 2);
        CHECK(red.beta_bar.is_surjective());
    }
}

TEST_CASE("split_over_subgroup and semidirect_complement") {
    GroupPtr s3 = catalog_group("S3");
    GroupPtr c4 = catalog_group("C4");
    GroupPtr c2 = catalog_group("C2");

    SUBCASE("Gm = L returns M = N") {
        Subgroup n = subgroup_closure(s3, {2});
        auto m = split_over_subgroup(FinitePair{s3, whole_subgroup(s3)}, n);
        REQUIRE(m.has_value());
        CHECK(m->members == n.members);
    }

    SUBCASE("V4 with trivial N finds a complement") {
        DirectProduct v4 = direct_product(c2, c2);
        Subgroup first = image_of(v4.inject_left, whole_subgroup(c2));
        auto m = split_over_subgroup(FinitePair{v4.group, first},
                                     trivial_subgroup(v4.group));
        REQUIRE(m.has_value());
        CHECK(intersect(*m, first).size() == 1);
        CHECK(product_set(first, *m).size() == 4);
    }

    SUBCASE("C4 over its C2 has no complement") {
        Elem sq = c4->mul(c4->generators[0], c4->generators[0]);
        FinitePair pair{c4, subgroup_closure(c4, {sq})};
        CHECK(!semidirect_complement(pair).has_value());
    }

    SUBCASE("S3 over a C2 has the order-3 normal complement") {
        FinitePair pair{s3, subgroup_closure(s3, {1})};
        auto m = semidirect_complement(pair);
        REQUIRE(m.has_value());
        CHECK(m->size() == 3);
        CHECK(is_normal(*m));
        CHECK(intersect(*m, pair.distinguished).size() == 1);
        CHECK(product_set(pair.distinguished, *m).size() == 6);
    }

    SUBCASE("trivial Gm gives M = L") {
        FinitePair pair{s3, trivial_subgroup(s3)};
        auto m = semidirect_complement(pair);
        REQUIRE(m.has_value());
        CHECK(m->size() == 6);
    }

    SUBCASE("N not inside Gm is rejected") {
        FinitePair pair{s3, subgroup_closure(s3, {1})};
        CHECK_THROWS_AS((void)split_over_subgroup(pair, subgroup_closure(s3, {2})),
                        InvalidInput);
    }
}

TEST_CASE("normal N transfers normality to M") {
    // L = D4, Gm = the cyclic C4, N = the order-2 subgroup of Gm (normal in
    // Gm since Gm is abelian).
    GroupPtr d4 = catalog_group("D4");
    Subgroup c4_sub = [&] {
        for (Elem a = 1; a < d4->order; ++a)
            if (d4->element_order[std::size_t(a)] == 4) return subgroup_closure(d4, {a});
        FAIL("no order-4 element");
        return trivial_subgroup(d4);
    }();
    REQUIRE(c4_sub.size() == 4);
    Elem sq = -1;
    for (Elem a : c4_sub.members)
        if (d4->element_order[std::size_t(a)] == 2) sq = a;
    Subgroup n = subgroup_closure(d4, {sq});
    auto m = split_over_subgroup(FinitePair{d4, c4_sub}, n);
    if (m) {
        CHECK(intersect(*m, c4_sub).members == n.members);
        CHECK(product_set(c4_sub, *m).size() == 8);
        CHECK(is_normal(*m));
    }
}

TEST_CASE("wreath obstruction DEP") {
    GroupPtr c2 = catalog_group("C2");
    GroupPtr c3 = catalog_group("C3");

    SUBCASE("V4 with first factor: no prescribed lift exists") {
        DirectProduct v4 = direct_product(c2, c2);
        Subgroup first = image_of(v4.inject_left, whole_subgroup(c2));
        std::vector<Elem> eta_map(4, -1);
        for (Elem x : first.members) eta_map[std::size_t(x)] = v4.project_left(x);
        SubHom eta = make_subhom(first, c2, eta_map);
        GroupHom nu = v4.project_right;
        WreathObstruction obs =
            wreath_obstruction_dep(FinitePair{v4.group, first}, eta, nu);
        CHECK(validate_dep(obs.dep).empty());
        CHECK(obs.wreath.group->order == 8);
        CHECK(!solve_weak_prescribed(obs.dep, obs.prescribed_eta).has_value());
        CHECK(!lift_via_fiber(obs.dep, obs.prescribed_eta).has_value());
    }

    SUBCASE("S3 with A3 over C3 and C2") {
        GroupPtr s3 = catalog_group("S3");
        Subgroup a3 = subgroup_closure(s3, {2});
        EmbeddedGroup eg = subgroup_as_group(a3);
        std::vector<Elem> eta_map(6, -1);
        // A3 -> C3 isomorphism via local BFS index
        for (Elem i = 0; i < 3; ++i) eta_map[std::size_t(eg.inclusion(i))] = i;
        SubHom eta = make_subhom(a3, c3, eta_map);
        GroupHom nu = hom_from_generator_images(s3, c2, {1, 0});
        WreathObstruction obs =
            wreath_obstruction_dep(FinitePair{s3, a3}, eta, nu);
        CHECK(obs.wreath.group->order == 18);
        CHECK(!solve_weak_prescribed(obs.dep, obs.prescribed_eta).has_value());
    }

    SUBCASE("trivial targets are rejected") {
        DirectProduct v4 = direct_product(c2, c2);
        Subgroup first = image_of(v4.inject_left, whole_subgroup(c2));
        std::vector<Elem> triv_map(4, -1);
        for (Elem x : first.members) triv_map[std::size_t(x)] = 0;
        SubHom eta_triv = make_subhom(first, cyclic_group(1), triv_map);
        CHECK_THROWS_AS((void)wreath_obstruction_dep(FinitePair{v4.group, first},
                                                     eta_triv, v4.project_right),
                        InvalidInput);
    }

    SUBCASE("non-normal Gm is rejected") {
        GroupPtr s3 = catalog_group("S3");
        Subgroup two = subgroup_closure(s3, {1});
        std::vector<Elem> eta_map(6, -1);
        for (Elem x : two.members) eta_map[std::size_t(x)] = x == 0 ? 0 : 1;
        SubHom eta = make_subhom(two, c2, eta_map);
        GroupHom nu = hom_from_generator_images(s3, c2, {1, 0});
        CHECK_THROWS_AS(
            (void)wreath_obstruction_dep(FinitePair{s3, two}, eta, nu), InvalidInput);
    }
}

TEST_CASE("sylow_obstruction_check") {
    GroupPtr a5 = catalog_group("A5");
    CHECK(sylow_obstruction_check(a5, 2, identity_hom(a5)));
    CHECK(sylow_obstruction_check(a5, 5, identity_hom(a5)));
    CHECK_THROWS_AS((void)sylow_obstruction_check(a5, 7, identity_hom(a5)),
                    InvalidInput);
    // abelian target rejected
    GroupPtr c5 = catalog_group("C5");
    GroupHom onto_c5 = [&] {
        GroupPtr c10 = catalog_group("C10");
        return hom_from_generator_images(c10, c5, {c5->generators[0]});
    }();
    CHECK_THROWS_AS((void)sylow_obstruction_check(catalog_group("C10"), 5, onto_c5),
                    InvalidInput);
}
