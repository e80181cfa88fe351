#include <doctest.h>

#include "projpair/catalog.hpp"
#include "projpair/sampler.hpp"

using namespace projpair;

namespace {

GroupHom sign_hom() {
    return hom_from_generator_images(catalog_group("S3"), catalog_group("C2"), {1, 0});
}

}  // namespace

TEST_CASE("rationals normalize") {
    Rational r = make_rational(6, 8);
    CHECK(r.num == 3);
    CHECK(r.den == 4);
    CHECK(make_rational(0, 5) == make_rational(0, 9));
    CHECK(make_rational(1, 3) < make_rational(19, 27));
    CHECK_THROWS_AS((void)make_rational(1, 0), InvalidInput);
}

TEST_CASE("sigma_membership basics") {
    GroupHom beta = sign_hom();
    FiberPower d1 = fiber_power(beta, 1);
    const GroupHom& mu = d1.beta_hat;

    // vacuous: mu(sigma) != b
    CHECK(sigma_membership(mu, beta, {0}, {1}, {1}));

    // Delta_1 iso H: sigma = h under the projection, theta = projection works
    for (Elem x = 0; x < d1.total->order; ++x) {
        Elem h = d1.projections[0](x);
        CHECK(sigma_membership(mu, beta, {x}, {h}, {beta(h)}));
    }

    CHECK_THROWS_AS((void)sigma_membership(mu, beta, {0, 1}, {0}, {0}), InvalidInput);
}

TEST_CASE("sigma_membership false case confirmed by exhaustion over theta") {
    GroupHom beta = sign_hom();
    FiberPower d1 = fiber_power(beta, 1);
    const GroupHom& mu = d1.beta_hat;
    // sigma = identity, h = a 3-cycle: theta(identity) = h is impossible
    Elem three_cycle = 2;
    REQUIRE(catalog_group("S3")->element_order[2] == 3);
    CHECK(!sigma_membership(mu, beta, {0}, {three_cycle}, {0}));

    // independent confirmation: no hom at all does it
    HomConstraints c;
    c.commuting = HomConstraints::Commuting{beta, mu};
    bool witnessed = false;
    for (const GroupHom& theta : all_homs(mu.source, beta.source, c))
        witnessed = witnessed || theta(0) == three_cycle;
    CHECK(!witnessed);
}

TEST_CASE("kernel independence") {
    GroupHom beta = sign_hom();

    SUBCASE("single theta is always independent") {
        FiberPower d1 = fiber_power(beta, 1);
        CHECK(kernel_independence_check({d1.projections[0]}, d1.beta_hat));
    }

    SUBCASE("projections of Delta_2 and Delta_3 are independent") {
        FiberPower d2 = fiber_power(beta, 2);
        CHECK(kernel_independence_check(d2.projections, d2.beta_hat));
        FiberPower d3 = fiber_power(beta, 3);
        CHECK(kernel_independence_check(d3.projections, d3.beta_hat));
    }

    SUBCASE("a duplicated nontrivial kernel is dependent") {
        FiberPower d2 = fiber_power(beta, 2);
        CHECK(!kernel_independence_check(
            {d2.projections[0], d2.projections[0]}, d2.beta_hat));
    }
}

TEST_CASE("lower bounds") {
    GroupHom beta = sign_hom();
    ExperimentSpec spec;
    spec.beta = beta;
    spec.b = {1};
    spec.h = {1};
    spec.trials = 50;
    spec.seed = 1;

    spec.e = 1;
    spec.n = 1;
    CHECK(run_experiment(spec).lower_bound == make_rational(1, 3));
    spec.n = 3;
    CHECK(run_experiment(spec).lower_bound == make_rational(19, 27));

    spec.e = 2;
    spec.n = 1;
    spec.b = {1, 0};
    spec.h = {1, 2};
    CHECK(run_experiment(spec).lower_bound == make_rational(1, 9));
}

TEST_CASE("exact fraction dominates the lower bound and bounds the estimate") {
    GroupHom beta = sign_hom();
    ExperimentSpec spec;
    spec.beta = beta;
    spec.e = 1;
    spec.n = 3;
    spec.b = {0};
    spec.h = {2};  // a 3-cycle target
    spec.trials = 4000;
    spec.seed = 99;
    ExperimentReport report = run_experiment(spec);
    REQUIRE(report.exact_fraction.has_value());
    CHECK(!(*report.exact_fraction < report.lower_bound));
    CHECK(report.independence_verified);
    CHECK(report.model_order == 54);
    CHECK(report.coset_size == 27);
    double exact = report.exact_fraction->value();
    double slack = 3.0 * report.std_error + 1e-12;
    CHECK(report.estimate >= exact - slack);
    CHECK(report.estimate <= exact + slack);
}

TEST_CASE("reports are identical for a fixed seed regardless of threads") {
    GroupHom beta = sign_hom();
    ExperimentSpec spec;
    spec.beta = beta;
    spec.e = 1;
    spec.n = 2;
    spec.b = {1};
    spec.h = {3};
    spec.trials = 1500;
    spec.seed = 7;
    REQUIRE(beta(3) == 1);
    ExperimentReport one = run_experiment(spec, 1);
    ExperimentReport four = run_experiment(spec, 4);
    CHECK(one.sigma_hits == four.sigma_hits);
    CHECK(one.estimate == four.estimate);
    CHECK(one.exact_fraction->num == four.exact_fraction->num);
}

TEST_CASE("sigma_membership is constant on cosets of the joint kernel") {
    GroupHom beta = sign_hom();
    FiberPower d2 = fiber_power(beta, 2);
    const GroupHom& mu = d2.beta_hat;
    Subgroup joint = intersect(d2.projections[0].kernel, d2.projections[1].kernel);
    std::vector<Elem> h = {1};
    std::vector<Elem> b = {1};
    for (Elem sigma = 0; sigma < d2.total->order; ++sigma) {
        if (mu(sigma) != b[0]) continue;
        bool base = sigma_membership(mu, beta, {sigma}, h, b);
        for (Elem k : joint.members)
            CHECK(sigma_membership(mu, beta, {d2.total->mul(sigma, k)}, h, b) == base);
    }
}

TEST_CASE("experiment validation errors") {
    GroupHom beta = sign_hom();
    ExperimentSpec spec;
    spec.beta = beta;
    spec.e = 1;
    spec.n = 1;
    spec.b = {1};
    spec.h = {2};  // beta(2) = 0 != 1
    spec.trials = 10;
    CHECK_THROWS_AS((void)run_experiment(spec), InvalidInput);
    spec.h = {1};
    spec.trials = 0;
    CHECK_THROWS_AS((void)run_experiment(spec), InvalidInput);
    spec.trials = 10;
    spec.n = 9;  // |Delta_9| = 6^9 / 2^8 blows the cap
    CHECK_THROWS_AS((void)run_experiment(spec), CapExceeded);
}
