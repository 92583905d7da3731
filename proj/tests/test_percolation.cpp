#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "analytic.hpp"
#include "graph.hpp"
#include "ode.hpp"
#include "oracles.hpp"
#include "percolation.hpp"

using namespace evosir;

TEST_CASE("percolate at the extremes") {
    rng r(1);
    auto g = evolving_graph::erdos_renyi(2000, 4.0, r);
    auto full = percolate(g, 1.0, r);
    CHECK(full.edge_count() == g.edge_count());
    auto none = percolate(g, 0.0, r);
    CHECK(none.edge_count() == 0);
    CHECK_THROWS_AS(percolate(g, 1.5, r), domain_error);
}

TEST_CASE("percolation thins the mean degree to mu tau") {
    const std::uint64_t n = 10000;
    rng r(9);
    auto g = evolving_graph::erdos_renyi(n, 5.0, r);
    auto thinned = percolate(g, 0.4, r);
    const double pairs = 0.5 * n * (n - 1);
    const double p = 5.0 / n * 0.4;
    const double sd_edges = std::sqrt(pairs * p * (1 - p));
    CHECK(std::abs(static_cast<double>(thinned.edge_count()) - pairs * p) < 3 * sd_edges);
}

TEST_CASE("percolated G(n, mu/n) is distributionally G(n, mu tau/n)") {
    const std::uint64_t n = 100000;
    rng r(33);
    auto g = evolving_graph::erdos_renyi(n, 5.0, r);
    auto thinned = percolate(g, 0.4, r);
    rng r2(34);
    auto direct = evolving_graph::erdos_renyi(n, 2.0, r2);
    std::map<std::uint64_t, double> ha, hb;
    for (std::uint64_t v = 0; v < n; ++v) {
        ha[thinned.degree(static_cast<vertex_id>(v))] += 1.0 / n;
        hb[direct.degree(static_cast<vertex_id>(v))] += 1.0 / n;
    }
    double tv = 0.0;
    for (std::uint64_t k = 0; k < 40; ++k) {
        const double a = ha.count(k) ? ha[k] : 0.0;
        const double b = hb.count(k) ? hb[k] : 0.0;
        tv += std::abs(a - b);
    }
    CHECK(tv / 2 < 0.01);
}

TEST_CASE("explore_fixed with mu_bar = 0 peels one vertex per step") {
    const std::uint64_t n = 400;
    auto tr = explore_fixed(n, 0.0, 5, /*stop_at_giant=*/false);
    REQUIRE(tr.steps() == n);
    for (std::size_t t = 0; t < tr.steps(); ++t) {
        CHECK(tr.u_series[t] == n - t);
        CHECK(tr.a_series[t] == 0);
    }
}

TEST_CASE("exploration bookkeeping: U + A + R = n, R_t = t, U nonincreasing") {
    auto tr = explore_fixed(20000, 2.0, 11);
    for (std::size_t t = 0; t < tr.steps(); ++t) {
        CHECK(tr.u_series[t] + static_cast<std::uint64_t>(tr.a_series[t]) + t == 20000);
        if (t > 0)
            CHECK(tr.u_series[t] <= tr.u_series[t - 1]);
        CHECK(tr.a_series[t] >= 0);
    }
}

TEST_CASE("explore_fixed follows e^{-mu_bar s} and ends at the giant fraction") {
    const std::uint64_t n = 100000;
    const double expected_crossing = oracle::survival_fraction(2.0);
    for (std::uint64_t seed : {101ull, 202ull}) {
        auto tr = explore_fixed(n, 2.0, seed);
        double sup = 0.0;
        for (std::size_t t = 0; t < tr.steps(); ++t) {
            const double s = static_cast<double>(t) / n;
            sup = std::max(sup,
                           std::abs(static_cast<double>(tr.u_series[t]) / n - std::exp(-2 * s)));
        }
        CHECK(sup < std::pow(static_cast<double>(n), -0.4));
        const double crossing = static_cast<double>(tr.giant_crossing()) / n;
        CHECK(std::abs(crossing - expected_crossing) < 0.01);
    }
}

TEST_CASE("explore_exponential: vanishing lambda reveals nothing") {
    const std::uint64_t n = 2000;
    auto tr = explore_exponential(n, 5.0, 1e-9, 3, false);
    for (std::size_t t = 0; t < tr.steps(); ++t)
        CHECK(tr.u_series[t] >= n - t - 3); // at most a stray activation
}

TEST_CASE("explore_exponential follows e^{-s mu E tau} and Theorem-3 crossing") {
    const std::uint64_t n = 100000;
    auto tr = explore_exponential(n, 5.0, 1.0, 404);
    double sup = 0.0;
    for (std::size_t t = 0; t < tr.steps(); ++t) {
        const double s = static_cast<double>(t) / n;
        sup = std::max(sup,
                       std::abs(static_cast<double>(tr.u_series[t]) / n - std::exp(-2.5 * s)));
    }
    CHECK(sup < std::pow(static_cast<double>(n), -0.4));

    epidemic_params p;
    p.mu = 5;
    p.lambda = 1;
    p.rho = 0;
    p.model = infection_model::exponential_unit_mean;
    p.variant = dynamics_variant::static_sir;
    CHECK(std::abs(static_cast<double>(tr.giant_crossing()) / n - final_size(p)) < 0.01);
}

TEST_CASE("explore_rewiring with alpha = 0 reduces to the fixed exploration") {
    const std::uint64_t n = 100000;
    const double tau = 0.4;
    auto rew = explore_rewiring(n, 5.0, tau, 0.0, 7);
    auto fix = explore_fixed(n, 5.0 * tau, 7);
    const std::size_t len = std::min(rew.steps(), fix.steps());
    double sup = 0.0;
    for (std::size_t t = 0; t < len; ++t)
        sup = std::max(sup, std::abs(static_cast<double>(rew.u_series[t]) / n -
                                     static_cast<double>(fix.u_series[t]) / n));
    CHECK(sup < 0.02);
}

TEST_CASE("explore_rewiring conserves alpha u + (1-alpha) v and tracks the closed form") {
    const std::uint64_t n = 100000;
    epidemic_params p;
    p.mu = 5;
    p.lambda = 2;
    p.rho = 4;
    p.model = infection_model::fixed_unit_time;
    p.variant = dynamics_variant::evo_sir;
    const double tau = transmissibility(p);      // tau^f_r(2, 4)
    const double alpha = rewiring_loss(p);       // alpha^f
    auto tr = explore_rewiring(n, 5.0, tau, alpha, 55);
    REQUIRE(!tr.v_series.empty());

    const double c0 = alpha * 1.0 + (1 - alpha) * 5.0;
    double drift = 0.0, sup16 = 0.0;
    for (std::size_t t = 0; t < tr.steps(); ++t) {
        const double u = static_cast<double>(tr.u_series[t]) / n;
        const double v = tr.v_series[t];
        drift = std::max(drift, std::abs(alpha * u + (1 - alpha) * v - c0));
        const double s = static_cast<double>(t) / n;
        sup16 = std::max(sup16, std::abs(u - ml_pair_closed_form(5.0, tau, alpha, s)));
    }
    CHECK(drift < 0.02);
    CHECK(sup16 < 0.03);
}

TEST_CASE("raising alpha shortens the giant exploration") {
    const std::uint64_t n = 3000;
    const double tau = 0.5;
    double mean_lo = 0.0, mean_hi = 0.0;
    const int seeds = 100;
    for (int s = 0; s < seeds; ++s) {
        mean_lo += static_cast<double>(
            explore_rewiring(n, 5.0, tau, 0.10, 1000 + s).giant_crossing());
        mean_hi += static_cast<double>(
            explore_rewiring(n, 5.0, tau, 0.45, 1000 + s).giant_crossing());
    }
    CHECK(mean_hi / seeds < mean_lo / seeds);
}

TEST_CASE("cluster_size_of_random_vertex") {
    evolving_graph one(1);
    rng r(1);
    CHECK(cluster_size_of_random_vertex(one, r) == 1);

    evolving_graph k5(5);
    for (vertex_id a = 0; a < 5; ++a)
        for (vertex_id b = a + 1; b < 5; ++b)
            k5.add_edge(a, b);
    CHECK(cluster_size_of_random_vertex(k5, r) == 5);

    const std::uint64_t n = 100000;
    rng gr(12);
    auto g = evolving_graph::erdos_renyi(n, 2.0, gr);
    const int draws = 2000;
    int big = 0;
    for (int i = 0; i < draws; ++i)
        if (cluster_size_of_random_vertex(g, gr) > n / 20)
            ++big;
    const double want = oracle::survival_fraction(2.0);
    const double se = std::sqrt(want * (1 - want) / draws);
    CHECK(std::abs(static_cast<double>(big) / draws - want) < 3 * se + 0.01);
}
