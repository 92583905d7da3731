#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "analytic.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "percolation.hpp"
#include "sim.hpp"

using namespace evosir;

namespace {

epidemic_params make(std::uint64_t n, double mu, double lambda, double rho, infection_model m,
                     dynamics_variant v) {
    epidemic_params p;
    p.n = n;
    p.mu = mu;
    p.lambda = lambda;
    p.rho = rho;
    p.model = m;
    p.variant = v;
    return p;
}

constexpr auto fixed = infection_model::fixed_unit_time;
constexpr auto expo = infection_model::exponential_unit_mean;

evolving_graph er(std::uint64_t n, double mu, std::uint64_t seed) {
    rng r(seed);
    return evolving_graph::erdos_renyi(n, mu, r);
}

} // namespace

TEST_CASE("lambda = 0 infects nobody beyond the seed") {
    for (auto variant :
         {dynamics_variant::static_sir, dynamics_variant::del_sir, dynamics_variant::evo_sir}) {
        const auto p = make(500, 4, 0, 3, fixed, variant);
        const auto out = run_epidemic(p, er(500, 4, 1), 99);
        CHECK(out.final_removed == 1);
        CHECK(out.peak_infected == 1);
        CHECK(out.extinction_time == 1.0); // fixed unit infectious period
    }
}

TEST_CASE("identical seeds give identical outcomes") {
    const auto p = make(2000, 5, 1.5, 2, expo, dynamics_variant::evo_sir);
    const auto g = er(2000, 5, 7);
    const auto a = run_epidemic(p, g, 1234);
    const auto b = run_epidemic(p, g, 1234);
    CHECK(a.final_removed == b.final_removed);
    CHECK(a.peak_infected == b.peak_infected);
    CHECK(a.rewire_events == b.rewire_events);
    CHECK(a.extinction_time == b.extinction_time);
    CHECK(a.traj_t == b.traj_t);
    CHECK(a.traj_i == b.traj_i);
    const auto c = run_epidemic(p, g, 1235);
    CHECK(a.traj_t != c.traj_t); // different seed actually changes the run
}

TEST_CASE("rho = 0 makes delSIR and evoSIR byte-identical") {
    const auto g = er(3000, 5, 11);
    const auto pd = make(3000, 5, 1.0, 0, expo, dynamics_variant::del_sir);
    const auto pe = make(3000, 5, 1.0, 0, expo, dynamics_variant::evo_sir);
    const auto od = run_epidemic(pd, g, 42);
    const auto oe = run_epidemic(pe, g, 42);
    CHECK(od.final_removed == oe.final_removed);
    CHECK(od.traj_t == oe.traj_t);
    CHECK(od.traj_s == oe.traj_s);
    CHECK(od.rewire_events == 0);
    CHECK(oe.rewire_events == 0);
}

TEST_CASE("every sample conserves S + I + R = n, R nondecreasing, final >= 1") {
    const auto p = make(4000, 5, 2, 4, expo, dynamics_variant::evo_sir);
    sim_options so;
    so.mode = sim_options::trajectory_mode::every_event;
    so.audit_graph = true; // full structural audit of the rewired graph at the end
    const auto out = run_epidemic(p, er(4000, 5, 3), 5, so);
    REQUIRE(out.traj_t.size() > 2);
    for (std::size_t i = 0; i < out.traj_t.size(); ++i) {
        CHECK(out.traj_s[i] + out.traj_i[i] + out.traj_r[i] == 4000);
        if (i > 0) {
            CHECK(out.traj_r[i] >= out.traj_r[i - 1]);
            CHECK(out.traj_t[i] >= out.traj_t[i - 1]);
        }
    }
    CHECK(out.final_removed >= 1);
    CHECK(out.final_removed == out.traj_r.back());
}

TEST_CASE("delSIR run deletes edges, audits clean") {
    const auto p = make(4000, 5, 1.2, 3, fixed, dynamics_variant::del_sir);
    sim_options so;
    so.audit_graph = true;
    const auto out = run_epidemic(p, er(4000, 5, 13), 77, so);
    CHECK(out.rewire_events == 0);
    if (out.final_removed > 40)
        CHECK(out.delete_events > 0);
}

TEST_CASE("static fixed-time runs satisfy the single-crossing property") {
    // the engine throws if any edge transmits twice; a supercritical run
    // exercises plenty of crossings
    const auto p = make(10000, 5, 1.2, 0, fixed, dynamics_variant::static_sir);
    const auto out = run_epidemic(p, er(10000, 5, 21), 9);
    CHECK(out.final_removed > 100);
}

TEST_CASE("fixed-time StaticSIR matches percolation cluster sizes (KS)") {
    // scaled-down version of the acceptance check
    const std::uint64_t n = 2000;
    const double lambda = -std::log(0.6); // tau = 0.4
    const auto p = make(n, 5, lambda, 0, fixed, dynamics_variant::static_sir);
    sim_options so;
    so.mode = sim_options::trajectory_mode::none;
    const int trials = 600;
    std::vector<double> sim_sizes, perc_sizes;
    for (int i = 0; i < trials; ++i) {
        auto g = er(n, 5, derive_seed(100, i));
        sim_sizes.push_back(static_cast<double>(
            run_epidemic(p, g, derive_seed(200, i), so).final_removed));
        rng pr(derive_seed(300, i));
        const auto reduced = percolate(g, 0.4, pr);
        perc_sizes.push_back(static_cast<double>(cluster_size_of_random_vertex(reduced, pr)));
    }
    const double d = oracle::ks_statistic(sim_sizes, perc_sizes);
    const double crit = 1.628 * std::sqrt(2.0 / trials); // alpha = 0.01
    CHECK(d < crit);
}

TEST_CASE("exponential StaticSIR final size approaches the Theorem-3 fixed point") {
    const auto p = make(5000, 5, 1, 0, expo, dynamics_variant::static_sir);
    const auto table = run_trials(p, 300, 9000);
    const double want = final_size(p); // root of exp(-2.5(1-z)) = z
    CHECK(std::abs(table.summary.mean_final_fraction_large - want) < 0.02);
}

TEST_CASE("run_trials with a single trial reduces to that outcome") {
    const auto p = make(1000, 5, 1.5, 1, expo, dynamics_variant::evo_sir);
    const auto table = run_trials(p, 1, 77);
    REQUIRE(table.rows.size() == 1);
    rng gr(table.rows[0].graph_seed);
    auto g = evolving_graph::erdos_renyi(1000, 5, gr);
    sim_options so;
    so.mode = sim_options::trajectory_mode::none;
    const auto direct = run_epidemic(p, std::move(g), table.rows[0].sim_seed, so);
    CHECK(direct.final_removed == table.rows[0].final_removed);
    const double frac = static_cast<double>(direct.final_removed) / 1000.0;
    if (frac >= table.summary.threshold_fraction) {
        CHECK(table.summary.large_count == 1);
        CHECK(table.summary.mean_final_fraction_large == doctest::Approx(frac));
    } else {
        CHECK(table.summary.large_count == 0);
    }
}

TEST_CASE("run_trials is independent of the worker count") {
    const auto p = make(2000, 5, 1.8, 2, fixed, dynamics_variant::evo_sir);
    const auto serial = run_trials(p, 24, 5, -1.0, 1);
    const auto parallel = run_trials(p, 24, 5, -1.0, 4);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(serial.rows[i].final_removed == parallel.rows[i].final_removed);
        CHECK(serial.rows[i].sim_seed == parallel.rows[i].sim_seed);
    }
}

TEST_CASE("compare_variants: no removal means no difference") {
    const auto p = make(2000, 5, 1.0, 0, expo, dynamics_variant::evo_sir);
    const auto res = compare_variants(p, 20, 31);
    CHECK(res.mean_diff == 0.0);
    CHECK(res.se_diff == 0.0);
}

TEST_CASE("coupling: delSIR mean final size does not exceed evoSIR's") {
    // (Fixed, mu=5, rho=4, lambda=1.2), 500 graphs; statistical version of
    // the containment coupling
    const auto p = make(10000, 5, 1.2, 4, fixed, dynamics_variant::evo_sir);
    const auto res = compare_variants(p, 500, 2718);
    CHECK(res.mean_final_fraction_del <=
          res.mean_final_fraction_evo + 3 * res.se_diff + 1e-12);
}

TEST_CASE("subcritical both variants stay at logarithmic size") {
    const auto p = make(10000, 5, 1.0, 4, expo, dynamics_variant::evo_sir); // lambda_c = 1.25
    const auto res = compare_variants(p, 200, 314);
    const double bound = 40.0 * std::log(10000.0) / 10000.0;
    CHECK(res.mean_final_fraction_del < bound);
    CHECK(res.mean_final_fraction_evo < bound);
}

TEST_CASE("rewiring at criticality lets the infection curve re-accelerate") {
    // at (fixed, mu=5, rho=4, lambda = lambda_c) large runs start flat and
    // then climb: max I(t) at least twice I(t = 5)
    const double lc = critical_lambda(5, 4, fixed); // ~1.0084
    const std::uint64_t n = 200000;
    const auto p = make(n, 5, lc, 4, fixed, dynamics_variant::evo_sir);
    sim_options so;
    so.mode = sim_options::trajectory_mode::fixed_dt;
    so.trajectory_dt = 0.05;
    int large_found = 0;
    for (int trial = 0; trial < 400 && large_found < 3; ++trial) {
        auto g = er(n, 5, derive_seed(41, 2 * trial));
        const auto out = run_epidemic(p, std::move(g), derive_seed(41, 2 * trial + 1), so);
        if (out.final_removed < n / 20)
            continue;
        ++large_found;
        double i_at_5 = 0.0, i_max = 0.0;
        for (std::size_t k = 0; k < out.traj_t.size(); ++k) {
            i_max = std::max(i_max, static_cast<double>(out.traj_i[k]));
            if (out.traj_t[k] <= 5.0 + 1e-9)
                i_at_5 = static_cast<double>(out.traj_i[k]);
        }
        CHECK(i_max >= 2.0 * std::max(i_at_5, 1.0));
    }
    CHECK(large_found >= 3);
}
