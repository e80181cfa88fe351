#pragma once

#include <cstdint>

#include "projpair/construct.hpp"

namespace projpair {

/// Exact nonnegative rational, always kept in lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return double(num) / double(den); }
};

Rational make_rational(long long num, long long den);
bool operator==(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);

/// One lifting-measure experiment over the fiber-power model L = Delta_n of
/// beta: H -> B: estimate the measure, within the coset C = {sigma :
/// mu(sigma) = b}, of tuples admitting a weak solution pinned to h.
struct ExperimentSpec {
    GroupHom beta;            // H -> B, surjective
    int e = 1;                // tuple length
    int n = 1;                // fiber-power level
    std::vector<Elem> b;      // target tuple in B^e
    std::vector<Elem> h;      // lift tuple in H^e, beta(h) = b
    long long trials = 1000;  // Monte Carlo sample count
    std::uint64_t seed = 0;
    int cap = kDefaultOrderCap;
};

struct ExperimentReport {
    std::optional<Rational> exact_fraction;  // present when |C| <= 10^6
    double estimate = 0.0;
    double std_error = 0.0;
    Rational lower_bound;  // 1 - (1 - (|B|/|H|)^e)^n
    bool independence_verified = false;
    long long samples_in_C = 0;  // Monte Carlo samples drawn from C
    long long sigma_hits = 0;    // samples that admitted a pinned solution
    long long coset_size = 0;    // |C| = |ker mu|^e
    int model_order = 0;         // |Delta_n|
};

/// True iff mu(sigma) != b, or some theta: L -> H satisfies beta∘theta = mu
/// and theta(sigma_i) = h_i for every i.
bool sigma_membership(const GroupHom& mu, const GroupHom& beta,
                      const std::vector<Elem>& sigma, const std::vector<Elem>& h,
                      const std::vector<Elem>& b);

/// Independence of {ker theta_i} inside ker mu: for every subset I the
/// normalized size of the intersection is the product of the normalized
/// sizes. Checked with exact integer arithmetic.
bool kernel_independence_check(const std::vector<GroupHom>& homs, const GroupHom& mu);

ExperimentReport run_experiment(const ExperimentSpec& spec, int threads = 1);

/// Deterministic per-trial RNG stream (splitmix64).
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace projpair
