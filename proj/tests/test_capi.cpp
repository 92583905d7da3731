// Exercises the shared-library surface exactly as an external client would:
// through evosir.h only, no core headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "evosir.h"

namespace {

evosir_params base_params() {
    evosir_params p;
    p.n = 2000;
    p.mu = 5.0;
    p.lambda = 1.0;
    p.rho = 0.0;
    p.infection_model = EVOSIR_INFECTION_EXPONENTIAL;
    p.variant = EVOSIR_VARIANT_STATIC;
    return p;
}

} // namespace

TEST_CASE("version and status names") {
    CHECK(evosir_version() != nullptr);
    CHECK(std::string(evosir_version()) == "0.1.0");
    CHECK(std::string(evosir_status_name(EVOSIR_OK)) == "ok");
    CHECK(std::string(evosir_status_name(EVOSIR_NO_EPIDEMIC)) == "no epidemic possible");
}

TEST_CASE("derive_seed is stable and index-sensitive") {
    CHECK(evosir_derive_seed(1, 0) == evosir_derive_seed(1, 0));
    CHECK(evosir_derive_seed(1, 0) != evosir_derive_seed(1, 1));
    CHECK(evosir_derive_seed(1, 0) != evosir_derive_seed(2, 0));
}

TEST_CASE("graph lifecycle and error codes") {
    evosir_rng* rng = evosir_rng_new(7);
    REQUIRE(rng != nullptr);
    evosir_graph* g = nullptr;
    REQUIRE(evosir_graph_generate_er(1000, 3.0, rng, &g) == EVOSIR_OK);
    CHECK(evosir_graph_vertex_count(g) == 1000);
    CHECK(evosir_graph_edge_count(g) > 1000); // ~1500 expected

    evosir_graph* copy = nullptr;
    REQUIRE(evosir_graph_clone(g, &copy) == EVOSIR_OK);
    CHECK(evosir_graph_edge_count(copy) == evosir_graph_edge_count(g));

    uint64_t deg = 0;
    CHECK(evosir_graph_degree(g, 0, &deg) == EVOSIR_OK);
    CHECK(evosir_graph_degree(g, 5000, &deg) == EVOSIR_ERR_PARAM);

    // generate with an impossible mean degree
    evosir_graph* bad = nullptr;
    CHECK(evosir_graph_generate_er(100, 1000.0, rng, &bad) == EVOSIR_ERR_PARAM);
    CHECK(std::strlen(evosir_last_error()) > 0);

    // deleting a missing edge is a state error
    evosir_graph* tiny = nullptr;
    REQUIRE(evosir_graph_generate_er(3, 0.0, rng, &tiny) == EVOSIR_OK);
    CHECK(evosir_graph_delete_edge(tiny, 0, 1) == EVOSIR_ERR_STATE);

    // forced rewire target on a 2-vertex graph
    evosir_graph* pair = nullptr;
    REQUIRE(evosir_graph_generate_er(2, 1.0, rng, &pair) == EVOSIR_OK);
    if (evosir_graph_edge_count(pair) == 1) {
        uint64_t w = 0;
        REQUIRE(evosir_graph_rewire_endpoint(pair, 0, 1, rng, &w) == EVOSIR_OK);
        CHECK(w == 1);
    }

    evosir_graph_free(pair);
    evosir_graph_free(tiny);
    evosir_graph_free(copy);
    evosir_graph_free(g);
    evosir_rng_free(rng);
}

TEST_CASE("components buffer protocol") {
    evosir_rng* rng = evosir_rng_new(9);
    evosir_graph* g = nullptr;
    REQUIRE(evosir_graph_generate_er(500, 0.5, rng, &g) == EVOSIR_OK);
    size_t count = 0;
    double giant = 0.0;
    // query pass with no buffer
    REQUIRE(evosir_graph_components(g, nullptr, 0, &count, &giant) == EVOSIR_OK);
    CHECK(count > 1);
    CHECK(giant > 0.0);
    // short buffer keeps the full count
    std::vector<uint64_t> sizes(3);
    size_t count2 = 0;
    REQUIRE(evosir_graph_components(g, sizes.data(), sizes.size(), &count2, &giant) == EVOSIR_OK);
    CHECK(count2 == count);
    CHECK(sizes[0] >= sizes[1]);
    CHECK(sizes[1] >= sizes[2]);
    evosir_graph_free(g);
    evosir_rng_free(rng);
}

TEST_CASE("percolation and cluster sampling through the C surface") {
    evosir_rng* rng = evosir_rng_new(11);
    evosir_graph* g = nullptr;
    REQUIRE(evosir_graph_generate_er(5000, 5.0, rng, &g) == EVOSIR_OK);
    evosir_graph* reduced = nullptr;
    REQUIRE(evosir_graph_percolate(g, 0.4, rng, &reduced) == EVOSIR_OK);
    CHECK(evosir_graph_edge_count(reduced) < evosir_graph_edge_count(g));
    CHECK(evosir_graph_percolate(g, 1.5, rng, &reduced) == EVOSIR_ERR_PARAM);
    uint64_t size = 0;
    REQUIRE(evosir_graph_cluster_size(reduced, rng, &size) == EVOSIR_OK);
    CHECK(size >= 1);
    evosir_graph_free(reduced);
    evosir_graph_free(g);
    evosir_rng_free(rng);
}

TEST_CASE("simulation outcome accessors") {
    evosir_rng* rng = evosir_rng_new(3);
    evosir_graph* g = nullptr;
    REQUIRE(evosir_graph_generate_er(2000, 5.0, rng, &g) == EVOSIR_OK);

    evosir_params p = base_params();
    p.lambda = 1.5;
    p.rho = 2.0;
    p.variant = EVOSIR_VARIANT_EVO;
    evosir_sim_options opts;
    evosir_sim_options_init(&opts);
    CHECK(opts.initial_infected == 1);

    evosir_outcome* out = nullptr;
    REQUIRE(evosir_sim_run(&p, g, 99, &opts, &out) == EVOSIR_OK);
    CHECK(evosir_outcome_final_removed(out) >= 1);
    CHECK(evosir_outcome_seed(out) == 99);
    const size_t len = evosir_outcome_trajectory_len(out);
    REQUIRE(len > 0);
    const double* t;
    const uint32_t *s, *i, *r;
    REQUIRE(evosir_outcome_trajectory(out, &t, &s, &i, &r) == EVOSIR_OK);
    for (size_t k = 0; k < len; ++k)
        CHECK(s[k] + i[k] + r[k] == 2000);
    evosir_outcome_free(out);

    // the graph passed in is untouched (simulation copies it)
    CHECK(evosir_graph_vertex_count(g) == 2000);

    // mismatched n is a parameter error
    p.n = 999;
    CHECK(evosir_sim_run(&p, g, 99, &opts, &out) == EVOSIR_ERR_PARAM);

    evosir_graph_free(g);
    evosir_rng_free(rng);
}

TEST_CASE("trials table and summary") {
    evosir_params p = base_params();
    p.n = 1000;
    p.lambda = 1.0;
    evosir_trials* trials = nullptr;
    REQUIRE(evosir_run_trials(&p, 40, 4242, -1.0, 0, &trials) == EVOSIR_OK);
    REQUIRE(evosir_trials_rows(trials) == 40);
    uint64_t final_removed = 0, sim_seed = 0;
    REQUIRE(evosir_trials_row(trials, 0, nullptr, &sim_seed, &final_removed, nullptr, nullptr,
                              nullptr, nullptr) == EVOSIR_OK);
    CHECK(sim_seed == evosir_derive_seed(4242, 1));
    CHECK(final_removed >= 1);
    CHECK(evosir_trials_row(trials, 40, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
                            nullptr) == EVOSIR_ERR_PARAM);
    evosir_trial_summary summary;
    REQUIRE(evosir_trials_summary(trials, &summary) == EVOSIR_OK);
    CHECK(summary.threshold_fraction > 0.0);
    CHECK(summary.large_fraction >= 0.0);
    CHECK(summary.large_fraction <= 1.0);
    evosir_trials_free(trials);
}

TEST_CASE("compare_variants parity at rho = 0") {
    evosir_params p = base_params();
    p.n = 1000;
    p.variant = EVOSIR_VARIANT_EVO;
    evosir_compare_result res;
    REQUIRE(evosir_compare_variants(&p, 10, 5, 0, &res) == EVOSIR_OK);
    CHECK(res.mean_diff == 0.0);
}

TEST_CASE("analytic surface") {
    evosir_params p = base_params();
    p.mu = 5;
    p.lambda = 2;
    p.rho = 4;
    p.variant = EVOSIR_VARIANT_EVO;
    evosir_analytic_report rep;
    REQUIRE(evosir_analytic(&p, &rep) == EVOSIR_OK);
    CHECK(rep.supercritical == 1);
    CHECK(rep.p_large == doctest::Approx(1.0 - rep.z0));

    double v = 0.0;
    CHECK(evosir_transmissibility(&p, &v) == EVOSIR_OK);
    CHECK(v == doctest::Approx(2.0 / 7.0));
    CHECK(evosir_critical_lambda(5, 4, EVOSIR_INFECTION_EXPONENTIAL, &v) == EVOSIR_OK);
    CHECK(v == 1.25);
    CHECK(evosir_critical_lambda(0.9, 4, EVOSIR_INFECTION_EXPONENTIAL, &v) ==
          EVOSIR_NO_EPIDEMIC);
    CHECK(evosir_critical_rho(5, 1, EVOSIR_INFECTION_EXPONENTIAL, &v) == EVOSIR_OK);
    CHECK(v == 3.0);
    CHECK(evosir_r0_branching(5, 5, 1.25, 4, &v) == EVOSIR_OK);
    CHECK(v == doctest::Approx(1.0));
    int below = 0;
    CHECK(evosir_evo_final_size_approx(&p, &below, &v) == EVOSIR_OK);
    CHECK(below == 0);
    CHECK(v > 0.0);

    p.lambda = -1.0;
    CHECK(evosir_transmissibility(&p, &v) == EVOSIR_ERR_PARAM);
    p.lambda = 1.0;
    p.infection_model = 17;
    CHECK(evosir_transmissibility(&p, &v) == EVOSIR_ERR_PARAM);
}

TEST_CASE("gf fixed point via callback") {
    double m = 2.0;
    auto gf = [](double z, void* ctx) {
        return std::exp(-*static_cast<double*>(ctx) * (1.0 - z));
    };
    double z0 = 0.0;
    REQUIRE(evosir_gf_fixed_point(gf, &m, 1e-12, &z0) == EVOSIR_OK);
    CHECK(1.0 - z0 == doctest::Approx(0.7968).epsilon(1e-3));
    CHECK(evosir_gf_fixed_point(nullptr, &m, 1e-12, &z0) == EVOSIR_ERR_PARAM);
}

TEST_CASE("series columns carry the integrators and explorations") {
    evosir_series* s = nullptr;
    REQUIRE(evosir_ode_ml_pair(5.0, 0.5, 0.25, 1e-3, &s) == EVOSIR_OK);
    REQUIRE(evosir_series_cols(s) == 3);
    CHECK(std::string(evosir_series_col_name(s, 0)) == "s");
    CHECK(std::string(evosir_series_col_name(s, 1)) == "u");
    const double* u = evosir_series_col_by_name(s, "u");
    REQUIRE(u != nullptr);
    CHECK(u[0] == 1.0);
    CHECK(evosir_series_col(s, 99) == nullptr);
    evosir_series_free(s);

    evosir_series* tr = nullptr;
    REQUIRE(evosir_explore_rewiring(20000, 5.0, 0.4, 0.25, 3, 1, &tr) == EVOSIR_OK);
    CHECK(evosir_series_cols(tr) == 5); // step, U, A, R, v
    CHECK(evosir_series_col_by_name(tr, "v") != nullptr);
    evosir_series_free(tr);

    evosir_series* fx = nullptr;
    REQUIRE(evosir_explore_fixed(20000, 2.0, 3, 1, &fx) == EVOSIR_OK);
    CHECK(evosir_series_cols(fx) == 4);
    const double* ucol = evosir_series_col_by_name(fx, "U");
    const double* acol = evosir_series_col_by_name(fx, "A");
    REQUIRE(ucol != nullptr);
    for (size_t k = 0; k < evosir_series_rows(fx); k += 100)
        CHECK(ucol[k] + acol[k] + static_cast<double>(k) == 20000.0);
    evosir_series_free(fx);

    evosir_series* mv = nullptr;
    REQUIRE(evosir_ode_miller_volz(2.0, 1.0, 5.0, 1e-4, 1e-3, 5.0, &mv) == EVOSIR_OK);
    CHECK(evosir_series_col_by_name(mv, "theta") != nullptr);
    evosir_series_free(mv);

    // bad arguments propagate as parameter errors
    CHECK(evosir_ode_homogeneous(2.0, 1000.0, 0.0, 10.0, 1e-3, &s) == EVOSIR_ERR_PARAM);
    CHECK(evosir_explore_rewiring(1000, 5.0, 0.4, 1.5, 3, 1, &tr) == EVOSIR_ERR_PARAM);
}

TEST_CASE("edge list export writes a parseable file") {
    evosir_rng* rng = evosir_rng_new(21);
    evosir_graph* g = nullptr;
    REQUIRE(evosir_graph_generate_er(50, 2.0, rng, &g) == EVOSIR_OK);
    const char* path = "capi_edges.txt";
    REQUIRE(evosir_graph_write_edge_list(g, path) == EVOSIR_OK);
    std::FILE* f = std::fopen(path, "r");
    REQUIRE(f != nullptr);
    unsigned long long a, b;
    size_t lines = 0;
    while (std::fscanf(f, "%llu %llu", &a, &b) == 2) {
        CHECK(a < 50);
        CHECK(b < 50);
        ++lines;
    }
    std::fclose(f);
    std::remove(path);
    CHECK(lines == evosir_graph_edge_count(g));
    CHECK(evosir_graph_write_edge_list(g, "/nonexistent-dir/x/y") == EVOSIR_ERR_IO);
    evosir_graph_free(g);
    evosir_rng_free(rng);
}
