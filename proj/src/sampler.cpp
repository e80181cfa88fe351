#include "projpair/sampler.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace projpair {

namespace {

long long checked_mul(long long a, long long b) {
    __int128 p = (__int128)a * b;
    if (p > (__int128)INT64_MAX)
        throw CapExceeded("rational arithmetic overflow");
    return (long long)p;
}

Rational rational_mul(const Rational& a, const Rational& b) {
    return make_rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rational rational_one_minus(const Rational& a) {
    return make_rational(a.den - a.num, a.den);
}

Rational rational_pow(Rational a, int k) {
    Rational r = make_rational(1, 1);
    for (int i = 0; i < k; ++i) r = rational_mul(r, a);
    return r;
}

}  // namespace

Rational make_rational(long long num, long long den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}

bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

bool sigma_membership(const GroupHom& mu, const GroupHom& beta,
                      const std::vector<Elem>& sigma, const std::vector<Elem>& h,
                      const std::vector<Elem>& b) {
    if (sigma.size() != h.size() || sigma.size() != b.size())
        throw InvalidInput("sigma_membership: tuple lengths differ");
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (mu(sigma[i]) != b[i]) return true;  // vacuous: mu(sigma) != b
    HomConstraints constraints;
    constraints.commuting = HomConstraints::Commuting{beta, mu};
    for (std::size_t i = 0; i < sigma.size(); ++i)
        constraints.pin.emplace_back(sigma[i], h[i]);
    return first_hom(mu.source, beta.source, constraints).has_value();
}

bool kernel_independence_check(const std::vector<GroupHom>& homs, const GroupHom& mu) {
    if (homs.empty()) throw InvalidInput("kernel_independence_check: no homomorphisms");
    GroupPtr source = mu.source;
    for (const GroupHom& theta : homs)
        if (theta.source != source)
            throw InvalidInput("kernel_independence_check: mismatched sources");
    std::vector<Subgroup> ks;
    ks.reserve(homs.size());
    for (const GroupHom& theta : homs) ks.push_back(intersect(theta.kernel, mu.kernel));
    const long long m = mu.kernel.size();
    const std::size_t k = homs.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
        Subgroup inter = mu.kernel;
        __int128 prod = 1;
        int picked = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            inter = intersect(inter, ks[i]);
            prod *= ks[i].size();
            ++picked;
        }
        __int128 lhs = (__int128)inter.size();
        for (int i = 0; i + 1 < picked; ++i) lhs *= m;
        if (lhs != prod) return false;
    }
    return true;
}

ExperimentReport run_experiment(const ExperimentSpec& spec, int threads) {
    const GroupHom& beta = spec.beta;
    if (!beta.is_surjective()) throw InvalidInput("experiment: beta must be surjective");
    if (spec.e < 1) throw InvalidInput("experiment: e must be >= 1");
    if (spec.n < 1) throw InvalidInput("experiment: n must be >= 1");
    if (spec.trials < 1) throw InvalidInput("experiment: trials must be >= 1");
    if (int(spec.b.size()) != spec.e || int(spec.h.size()) != spec.e)
        throw InvalidInput("experiment: b and h must have length e");
    for (int i = 0; i < spec.e; ++i) {
        if (spec.h[i] < 0 || spec.h[i] >= beta.source->order)
            throw InvalidInput("experiment: h entry outside H");
        if (spec.b[i] < 0 || spec.b[i] >= beta.target->order)
            throw InvalidInput("experiment: b entry outside B");
        if (beta(spec.h[i]) != spec.b[i])
            throw InvalidInput("experiment: beta(h[" + std::to_string(i) +
                               "]) != b[" + std::to_string(i) + "]");
    }

    FiberPower fp = fiber_power(beta, spec.n, spec.cap);
    const GroupHom& mu = fp.beta_hat;
    GroupPtr L = fp.total;

    ExperimentReport report;
    report.model_order = L->order;
    report.independence_verified = kernel_independence_check(fp.projections, mu);

    Rational ratio = rational_pow(
        make_rational(beta.target->order, beta.source->order), spec.e);
    report.lower_bound = rational_one_minus(rational_pow(rational_one_minus(ratio), spec.n));

    // The coset C: coordinate i ranges over rep_i * ker(mu).
    const std::vector<Elem>& kernel = mu.kernel.members;
    const long long ksize = kernel.size();
    std::vector<Elem> reps(std::size_t(spec.e), -1);
    for (int i = 0; i < spec.e; ++i)
        for (Elem x = 0; x < L->order; ++x)
            if (mu(x) == spec.b[i]) { reps[std::size_t(i)] = x; break; }

    long long coset_size = 1;
    bool coset_huge = false;
    for (int i = 0; i < spec.e; ++i) {
        coset_size *= ksize;
        if (coset_size > 1000000) { coset_huge = true; break; }
    }
    report.coset_size = coset_huge ? -1 : coset_size;

    std::map<std::vector<Elem>, bool> memo;
    std::mutex memo_mutex;
    auto member = [&](const std::vector<Elem>& sigma) {
        {
            std::lock_guard<std::mutex> lock(memo_mutex);
            auto it = memo.find(sigma);
            if (it != memo.end()) return it->second;
        }
        bool value = sigma_membership(mu, beta, sigma, spec.h, spec.b);
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(sigma, value);
        return value;
    };

    if (!coset_huge) {
        // Exhaustive: odometer over ker(mu)^e.
        std::vector<int> idx(std::size_t(spec.e), 0);
        std::vector<Elem> sigma(std::size_t(spec.e));
        long long hits = 0;
        for (long long count = 0; count < coset_size; ++count) {
            for (int i = 0; i < spec.e; ++i)
                sigma[std::size_t(i)] =
                    L->mul(reps[std::size_t(i)], kernel[std::size_t(idx[std::size_t(i)])]);
            if (member(sigma)) ++hits;
            for (int i = spec.e - 1; i >= 0; --i) {
                if (++idx[std::size_t(i)] < ksize) break;
                idx[std::size_t(i)] = 0;
            }
        }
        report.exact_fraction = make_rational(hits, coset_size);
    }

    // Monte Carlo over C, uniform: sample ker(mu)^e, translate by reps.
    // Per-trial sub-seed keeps the tally independent of the worker count.
    auto trial_hit = [&](long long t) {
        std::uint64_t state = spec.seed + 0x9E3779B97F4A7C15ULL * std::uint64_t(t + 1);
        std::vector<Elem> sigma(std::size_t(spec.e));
        const std::uint64_t bound = UINT64_MAX - UINT64_MAX % std::uint64_t(ksize);
        for (int i = 0; i < spec.e; ++i) {
            std::uint64_t draw;
            do { draw = splitmix64(state); } while (draw >= bound);
            sigma[std::size_t(i)] =
                L->mul(reps[std::size_t(i)], kernel[std::size_t(draw % ksize)]);
        }
        return member(sigma);
    };

    long long hits = 0;
    if (threads <= 1) {
        for (long long t = 0; t < spec.trials; ++t)
            if (trial_hit(t)) ++hits;
    } else {
        std::vector<long long> partial(std::size_t(threads), 0);
        std::vector<std::thread> workers;
        for (int w = 0; w < threads; ++w) {
            workers.emplace_back([&, w]() {
                long long local = 0;
                for (long long t = w; t < spec.trials; t += threads)
                    if (trial_hit(t)) ++local;
                partial[std::size_t(w)] = local;
            });
        }
        for (std::thread& worker : workers) worker.join();
        for (long long p : partial) hits += p;
    }

    report.samples_in_C = spec.trials;
    report.sigma_hits = hits;
    report.estimate = double(hits) / double(spec.trials);
    report.std_error =
        std::sqrt(report.estimate * (1.0 - report.estimate) / double(spec.trials));
    return report;
}

}  // namespace projpair
