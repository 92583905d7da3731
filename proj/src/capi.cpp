#include "evosir.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "analytic.hpp"
#include "graph.hpp"
#include "ode.hpp"
#include "percolation.hpp"
#include "rng.hpp"
#include "sim.hpp"

struct evosir_graph {
    evosir::evolving_graph impl;
};
struct evosir_rng {
    evosir::rng impl;
};
struct evosir_outcome {
    evosir::epidemic_outcome impl;
};
struct evosir_trials {
    evosir::trial_table impl;
};
struct evosir_series {
    evosir::ode_series impl;
};

namespace {

thread_local std::string g_last_error;

evosir_status fail(evosir_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs the body and maps core exceptions onto status codes.
template <typename F> evosir_status guard(F&& body) {
    try {
        return body();
    } catch (const evosir::no_epidemic_error& e) {
        return fail(EVOSIR_NO_EPIDEMIC, e.what());
    } catch (const evosir::numeric_error& e) {
        return fail(EVOSIR_ERR_NUMERIC, e.what());
    } catch (const evosir::domain_error& e) {
        return fail(EVOSIR_ERR_PARAM, e.what());
    } catch (const evosir::state_error& e) {
        return fail(EVOSIR_ERR_STATE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EVOSIR_ERR_STATE, "out of memory");
    } catch (const std::exception& e) {
        return fail(EVOSIR_ERR_STATE, e.what());
    }
}

evosir_status convert_params(const evosir_params* in, evosir::epidemic_params& out) {
    if (!in)
        return fail(EVOSIR_ERR_PARAM, "params is NULL");
    if (in->infection_model != EVOSIR_INFECTION_FIXED &&
        in->infection_model != EVOSIR_INFECTION_EXPONENTIAL)
        return fail(EVOSIR_ERR_PARAM, "unknown infection model");
    if (in->variant != EVOSIR_VARIANT_STATIC && in->variant != EVOSIR_VARIANT_DEL &&
        in->variant != EVOSIR_VARIANT_EVO)
        return fail(EVOSIR_ERR_PARAM, "unknown dynamics variant");
    out.n = in->n;
    out.mu = in->mu;
    out.lambda = in->lambda;
    out.rho = in->rho;
    out.model = in->infection_model == EVOSIR_INFECTION_FIXED
                    ? evosir::infection_model::fixed_unit_time
                    : evosir::infection_model::exponential_unit_mean;
    out.variant = in->variant == EVOSIR_VARIANT_STATIC ? evosir::dynamics_variant::static_sir
                  : in->variant == EVOSIR_VARIANT_DEL  ? evosir::dynamics_variant::del_sir
                                                       : evosir::dynamics_variant::evo_sir;
    return EVOSIR_OK;
}

evosir_series* wrap_series(evosir::ode_series&& s) {
    return new evosir_series{std::move(s)};
}

evosir_status to_model(int infection_model, evosir::infection_model& model) {
    if (infection_model == EVOSIR_INFECTION_FIXED)
        model = evosir::infection_model::fixed_unit_time;
    else if (infection_model == EVOSIR_INFECTION_EXPONENTIAL)
        model = evosir::infection_model::exponential_unit_mean;
    else
        return fail(EVOSIR_ERR_PARAM, "unknown infection model");
    return EVOSIR_OK;
}

evosir_series* wrap_trace(const evosir::exploration_trace& tr) {
    evosir::ode_series s;
    s.names = {"step", "U", "A", "R"};
    const bool has_v = !tr.v_series.empty();
    if (has_v)
        s.names.push_back("v");
    s.cols.resize(s.names.size());
    const std::size_t len = tr.steps();
    for (auto& col : s.cols)
        col.reserve(len);
    for (std::size_t t = 0; t < len; ++t) {
        s.cols[0].push_back(static_cast<double>(t));
        s.cols[1].push_back(static_cast<double>(tr.u_series[t]));
        s.cols[2].push_back(static_cast<double>(tr.a_series[t]));
        s.cols[3].push_back(static_cast<double>(t));
        if (has_v)
            s.cols[4].push_back(tr.v_series[t]);
    }
    return new evosir_series{std::move(s)};
}

} // namespace

extern "C" {

const char* evosir_version(void) { return "0.1.0"; }

const char* evosir_status_name(evosir_status status) {
    switch (status) {
    case EVOSIR_OK: return "ok";
    case EVOSIR_ERR_PARAM: return "parameter error";
    case EVOSIR_ERR_STATE: return "state error";
    case EVOSIR_ERR_NUMERIC: return "numeric error";
    case EVOSIR_NO_EPIDEMIC: return "no epidemic possible";
    case EVOSIR_ERR_IO: return "io error";
    }
    return "unknown";
}

const char* evosir_last_error(void) { return g_last_error.c_str(); }

uint64_t evosir_derive_seed(uint64_t base, uint64_t index) {
    return evosir::derive_seed(base, index);
}

/* ---------------------------------------------------------------- graphs */

evosir_rng* evosir_rng_new(uint64_t seed) { return new (std::nothrow) evosir_rng{evosir::rng(seed)}; }

void evosir_rng_free(evosir_rng* rng) { delete rng; }

evosir_status evosir_graph_generate_er(uint64_t n, double mu, evosir_rng* rng,
                                       evosir_graph** out) {
    if (!rng || !out)
        return fail(EVOSIR_ERR_PARAM, "generate_er: NULL argument");
    return guard([&] {
        auto g = evosir::evolving_graph::erdos_renyi(n, mu, rng->impl);
        *out = new evosir_graph{std::move(g)};
        return EVOSIR_OK;
    });
}

evosir_status evosir_graph_clone(const evosir_graph* g, evosir_graph** out) {
    if (!g || !out)
        return fail(EVOSIR_ERR_PARAM, "clone: NULL argument");
    return guard([&] {
        *out = new evosir_graph{g->impl};
        return EVOSIR_OK;
    });
}

void evosir_graph_free(evosir_graph* g) { delete g; }

uint64_t evosir_graph_vertex_count(const evosir_graph* g) {
    return g ? g->impl.vertex_count() : 0;
}

uint64_t evosir_graph_edge_count(const evosir_graph* g) { return g ? g->impl.edge_count() : 0; }

evosir_status evosir_graph_degree(const evosir_graph* g, uint64_t v, uint64_t* out) {
    if (!g || !out)
        return fail(EVOSIR_ERR_PARAM, "degree: NULL argument");
    if (v >= g->impl.vertex_count())
        return fail(EVOSIR_ERR_PARAM, "degree: vertex out of range");
    *out = g->impl.degree(static_cast<evosir::vertex_id>(v));
    return EVOSIR_OK;
}

evosir_status evosir_graph_delete_edge(evosir_graph* g, uint64_t u, uint64_t v) {
    if (!g)
        return fail(EVOSIR_ERR_PARAM, "delete_edge: NULL graph");
    if (u >= g->impl.vertex_count() || v >= g->impl.vertex_count())
        return fail(EVOSIR_ERR_PARAM, "delete_edge: vertex out of range");
    return guard([&] {
        g->impl.delete_edge(static_cast<evosir::vertex_id>(u), static_cast<evosir::vertex_id>(v));
        return EVOSIR_OK;
    });
}

evosir_status evosir_graph_rewire_endpoint(evosir_graph* g, uint64_t u, uint64_t v,
                                           evosir_rng* rng, uint64_t* new_neighbor) {
    if (!g || !rng || !new_neighbor)
        return fail(EVOSIR_ERR_PARAM, "rewire_endpoint: NULL argument");
    if (u >= g->impl.vertex_count() || v >= g->impl.vertex_count())
        return fail(EVOSIR_ERR_PARAM, "rewire_endpoint: vertex out of range");
    return guard([&] {
        *new_neighbor = g->impl.rewire_endpoint(static_cast<evosir::vertex_id>(u),
                                                static_cast<evosir::vertex_id>(v), rng->impl);
        return EVOSIR_OK;
    });
}

evosir_status evosir_graph_components(const evosir_graph* g, uint64_t* sizes, size_t cap,
                                      size_t* count, double* giant_fraction) {
    if (!g || !count || !giant_fraction)
        return fail(EVOSIR_ERR_PARAM, "components: NULL argument");
    if (cap > 0 && !sizes)
        return fail(EVOSIR_ERR_PARAM, "components: sizes is NULL with cap > 0");
    return guard([&] {
        const auto summary = g->impl.components();
        *count = summary.sizes.size();
        *giant_fraction = summary.giant_fraction;
        const size_t m = cap < summary.sizes.size() ? cap : summary.sizes.size();
        for (size_t i = 0; i < m; ++i)
            sizes[i] = summary.sizes[i];
        return EVOSIR_OK;
    });
}

evosir_status evosir_graph_percolate(const evosir_graph* g, double tau, evosir_rng* rng,
                                     evosir_graph** out) {
    if (!g || !rng || !out)
        return fail(EVOSIR_ERR_PARAM, "percolate: NULL argument");
    return guard([&] {
        *out = new evosir_graph{evosir::percolate(g->impl, tau, rng->impl)};
        return EVOSIR_OK;
    });
}

evosir_status evosir_graph_cluster_size(const evosir_graph* g, evosir_rng* rng, uint64_t* out) {
    if (!g || !rng || !out)
        return fail(EVOSIR_ERR_PARAM, "cluster_size: NULL argument");
    return guard([&] {
        *out = evosir::cluster_size_of_random_vertex(g->impl, rng->impl);
        return EVOSIR_OK;
    });
}

evosir_status evosir_graph_write_edge_list(const evosir_graph* g, const char* path) {
    if (!g || !path)
        return fail(EVOSIR_ERR_PARAM, "write_edge_list: NULL argument");
    std::ofstream os(path);
    if (!os)
        return fail(EVOSIR_ERR_IO, std::string("write_edge_list: cannot open ") + path);
    g->impl.write_edge_list(os);
    os.flush();
    if (!os)
        return fail(EVOSIR_ERR_IO, std::string("write_edge_list: write failed for ") + path);
    return EVOSIR_OK;
}

/* ------------------------------------------------------------ simulation */

void evosir_sim_options_init(evosir_sim_options* opts) {
    if (!opts)
        return;
    opts->initial_infected = 1;
    opts->trajectory_mode = EVOSIR_TRAJ_AUTO;
    opts->trajectory_dt = 0.05;
}

evosir_status evosir_sim_run(const evosir_params* params, const evosir_graph* g,
                             uint64_t sim_seed, const evosir_sim_options* opts,
                             evosir_outcome** out) {
    if (!g || !out)
        return fail(EVOSIR_ERR_PARAM, "sim_run: NULL argument");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    evosir::sim_options so;
    if (opts) {
        so.initial_infected = opts->initial_infected;
        switch (opts->trajectory_mode) {
        case EVOSIR_TRAJ_AUTO: so.mode = evosir::sim_options::trajectory_mode::automatic; break;
        case EVOSIR_TRAJ_EVERY_EVENT:
            so.mode = evosir::sim_options::trajectory_mode::every_event;
            break;
        case EVOSIR_TRAJ_FIXED_DT: so.mode = evosir::sim_options::trajectory_mode::fixed_dt; break;
        case EVOSIR_TRAJ_NONE: so.mode = evosir::sim_options::trajectory_mode::none; break;
        default: return fail(EVOSIR_ERR_PARAM, "sim_run: unknown trajectory mode");
        }
        so.trajectory_dt = opts->trajectory_dt;
        if (so.mode == evosir::sim_options::trajectory_mode::fixed_dt && !(so.trajectory_dt > 0))
            return fail(EVOSIR_ERR_PARAM, "sim_run: trajectory_dt must be > 0");
    }
    return guard([&] {
        auto outcome = evosir::run_epidemic(p, g->impl, sim_seed, so);
        *out = new evosir_outcome{std::move(outcome)};
        return EVOSIR_OK;
    });
}

void evosir_outcome_free(evosir_outcome* o) { delete o; }

uint64_t evosir_outcome_final_removed(const evosir_outcome* o) {
    return o ? o->impl.final_removed : 0;
}
uint64_t evosir_outcome_peak_infected(const evosir_outcome* o) {
    return o ? o->impl.peak_infected : 0;
}
uint64_t evosir_outcome_rewire_events(const evosir_outcome* o) {
    return o ? o->impl.rewire_events : 0;
}
uint64_t evosir_outcome_delete_events(const evosir_outcome* o) {
    return o ? o->impl.delete_events : 0;
}
double evosir_outcome_extinction_time(const evosir_outcome* o) {
    return o ? o->impl.extinction_time : 0.0;
}
uint64_t evosir_outcome_seed(const evosir_outcome* o) { return o ? o->impl.seed : 0; }

size_t evosir_outcome_trajectory_len(const evosir_outcome* o) {
    return o ? o->impl.traj_t.size() : 0;
}

evosir_status evosir_outcome_trajectory(const evosir_outcome* o, const double** t,
                                        const uint32_t** s, const uint32_t** i,
                                        const uint32_t** r) {
    if (!o || !t || !s || !i || !r)
        return fail(EVOSIR_ERR_PARAM, "trajectory: NULL argument");
    *t = o->impl.traj_t.data();
    *s = o->impl.traj_s.data();
    *i = o->impl.traj_i.data();
    *r = o->impl.traj_r.data();
    return EVOSIR_OK;
}

evosir_status evosir_run_trials(const evosir_params* params, uint32_t trials,
                                uint64_t base_seed, double large_threshold, int jobs,
                                evosir_trials** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "run_trials: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        auto table = evosir::run_trials(p, trials, base_seed, large_threshold, jobs);
        *out = new evosir_trials{std::move(table)};
        return EVOSIR_OK;
    });
}

void evosir_trials_free(evosir_trials* t) { delete t; }

size_t evosir_trials_rows(const evosir_trials* t) { return t ? t->impl.rows.size() : 0; }

evosir_status evosir_trials_row(const evosir_trials* t, size_t index, uint64_t* graph_seed,
                                uint64_t* sim_seed, uint64_t* final_removed,
                                uint64_t* peak_infected, uint64_t* rewire_events,
                                uint64_t* delete_events, double* extinction_time) {
    if (!t)
        return fail(EVOSIR_ERR_PARAM, "trials_row: NULL table");
    if (index >= t->impl.rows.size())
        return fail(EVOSIR_ERR_PARAM, "trials_row: index out of range");
    const auto& row = t->impl.rows[index];
    if (graph_seed)
        *graph_seed = row.graph_seed;
    if (sim_seed)
        *sim_seed = row.sim_seed;
    if (final_removed)
        *final_removed = row.final_removed;
    if (peak_infected)
        *peak_infected = row.peak_infected;
    if (rewire_events)
        *rewire_events = row.rewire_events;
    if (delete_events)
        *delete_events = row.delete_events;
    if (extinction_time)
        *extinction_time = row.extinction_time;
    return EVOSIR_OK;
}

evosir_status evosir_trials_summary(const evosir_trials* t, evosir_trial_summary* out) {
    if (!t || !out)
        return fail(EVOSIR_ERR_PARAM, "trials_summary: NULL argument");
    const auto& s = t->impl.summary;
    out->threshold_fraction = s.threshold_fraction;
    out->large_count = s.large_count;
    out->large_fraction = s.large_fraction;
    out->large_fraction_se = s.large_fraction_se;
    out->mean_final_fraction_large = s.mean_final_fraction_large;
    out->se_final_fraction_large = s.se_final_fraction_large;
    return EVOSIR_OK;
}

evosir_status evosir_compare_variants(const evosir_params* params, uint32_t trials,
                                      uint64_t base_seed, int jobs,
                                      evosir_compare_result* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "compare_variants: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        const auto res = evosir::compare_variants(p, trials, base_seed, jobs);
        out->trials = res.trials;
        out->mean_final_fraction_del = res.mean_final_fraction_del;
        out->se_del = res.se_del;
        out->mean_final_fraction_evo = res.mean_final_fraction_evo;
        out->se_evo = res.se_evo;
        out->mean_diff = res.mean_diff;
        out->se_diff = res.se_diff;
        return EVOSIR_OK;
    });
}

/* -------------------------------------------------------------- analytic */

evosir_status evosir_analytic(const evosir_params* params, evosir_analytic_report* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "analytic: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        const auto rep = evosir::analyze(p);
        out->tau = rep.tau;
        out->alpha = rep.alpha;
        out->lambda_c = rep.lambda_c;
        out->z0 = rep.z0;
        out->p_large = rep.p_large;
        out->final_size = rep.final_size;
        out->evo_final_size = rep.evo_final_size;
        out->supercritical = rep.supercritical ? 1 : 0;
        return EVOSIR_OK;
    });
}

evosir_status evosir_transmissibility(const evosir_params* params, double* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "transmissibility: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        *out = evosir::transmissibility(p);
        return EVOSIR_OK;
    });
}

evosir_status evosir_critical_lambda(double mu, double rho, int infection_model, double* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "critical_lambda: NULL output");
    evosir::infection_model model;
    if (const auto st = to_model(infection_model, model); st != EVOSIR_OK)
        return st;
    return guard([&] {
        *out = evosir::critical_lambda(mu, rho, model);
        return EVOSIR_OK;
    });
}

evosir_status evosir_critical_rho(double mu, double lambda, int infection_model, double* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "critical_rho: NULL output");
    evosir::infection_model model;
    if (const auto st = to_model(infection_model, model); st != EVOSIR_OK)
        return st;
    return guard([&] {
        *out = evosir::critical_rho(mu, lambda, model);
        return EVOSIR_OK;
    });
}

evosir_status evosir_epidemic_probability(const evosir_params* params, double* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "epidemic_probability: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        *out = evosir::epidemic_probability(p);
        return EVOSIR_OK;
    });
}

evosir_status evosir_final_size(const evosir_params* params, double* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "final_size: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        *out = evosir::final_size(p);
        return EVOSIR_OK;
    });
}

evosir_status evosir_evo_final_size_approx(const evosir_params* params, int* below_critical,
                                           double* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "evo_final_size_approx: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        bool below = false;
        *out = evosir::evo_final_size_approx(p, &below);
        if (below_critical)
            *below_critical = below ? 1 : 0;
        return EVOSIR_OK;
    });
}

evosir_status evosir_r0_branching(double mu, double sigma2, double lambda, double rho,
                                  double* out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "r0_branching: NULL output");
    return guard([&] {
        *out = evosir::r0_branching(mu, sigma2, lambda, rho);
        return EVOSIR_OK;
    });
}

evosir_status evosir_gf_fixed_point(evosir_gf_fn gf, void* ctx, double tol, double* out) {
    if (!gf || !out)
        return fail(EVOSIR_ERR_PARAM, "gf_fixed_point: NULL argument");
    if (!(tol > 0))
        return fail(EVOSIR_ERR_PARAM, "gf_fixed_point: tol must be > 0");
    return guard([&] {
        *out = evosir::gf_fixed_point([gf, ctx](double z) { return gf(z, ctx); }, tol);
        return EVOSIR_OK;
    });
}

/* ------------------------------------------------------------------ series */

void evosir_series_free(evosir_series* s) { delete s; }

size_t evosir_series_rows(const evosir_series* s) { return s ? s->impl.rows() : 0; }

size_t evosir_series_cols(const evosir_series* s) { return s ? s->impl.names.size() : 0; }

const char* evosir_series_col_name(const evosir_series* s, size_t index) {
    if (!s || index >= s->impl.names.size())
        return NULL;
    return s->impl.names[index].c_str();
}

const double* evosir_series_col(const evosir_series* s, size_t index) {
    if (!s || index >= s->impl.cols.size())
        return NULL;
    return s->impl.cols[index].data();
}

const double* evosir_series_col_by_name(const evosir_series* s, const char* name) {
    if (!s || !name)
        return NULL;
    for (size_t i = 0; i < s->impl.names.size(); ++i)
        if (s->impl.names[i] == name)
            return s->impl.cols[i].data();
    return NULL;
}

evosir_status evosir_ode_homogeneous(double beta, double n, double i0, double t_end,
                                     double dt, evosir_series** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "ode_homogeneous: NULL output");
    return guard([&] {
        *out = wrap_series(evosir::integrate_homogeneous(beta, n, i0, t_end, dt));
        return EVOSIR_OK;
    });
}

evosir_status evosir_ode_sk(const evosir_params* params, double i0, uint32_t k_max, double dt,
                            double t_end, evosir_series** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "ode_sk: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        *out = wrap_series(evosir::integrate_sk(p, i0, k_max, dt, t_end));
        return EVOSIR_OK;
    });
}

evosir_status evosir_ode_sk_rewire(const evosir_params* params, double i0, uint32_t k_max,
                                   double dt, double t_end, evosir_series** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "ode_sk_rewire: NULL output");
    evosir::epidemic_params p;
    if (const auto st = convert_params(params, p); st != EVOSIR_OK)
        return st;
    return guard([&] {
        *out = wrap_series(evosir::integrate_sk_rewire(p, i0, k_max, dt, t_end));
        return EVOSIR_OK;
    });
}

evosir_status evosir_ode_miller_volz(double beta, double gamma, double mu, double i0,
                                     double dt, double t_end, evosir_series** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "ode_miller_volz: NULL output");
    return guard([&] {
        *out = wrap_series(evosir::integrate_miller_volz_poisson(beta, gamma, mu, i0, dt, t_end));
        return EVOSIR_OK;
    });
}

evosir_status evosir_ode_ml_pair(double mu, double tau, double alpha, double dt,
                                 evosir_series** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "ode_ml_pair: NULL output");
    return guard([&] {
        *out = wrap_series(evosir::integrate_ml_pair(mu, tau, alpha, dt));
        return EVOSIR_OK;
    });
}

evosir_status evosir_explore_fixed(uint64_t n, double mu_bar, uint64_t seed, int stop_at_giant,
                                   evosir_series** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "explore_fixed: NULL output");
    return guard([&] {
        *out = wrap_trace(evosir::explore_fixed(n, mu_bar, seed, stop_at_giant != 0));
        return EVOSIR_OK;
    });
}

evosir_status evosir_explore_exponential(uint64_t n, double mu, double lambda, uint64_t seed,
                                         int stop_at_giant, evosir_series** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "explore_exponential: NULL output");
    return guard([&] {
        *out = wrap_trace(evosir::explore_exponential(n, mu, lambda, seed, stop_at_giant != 0));
        return EVOSIR_OK;
    });
}

evosir_status evosir_explore_rewiring(uint64_t n, double mu, double tau, double alpha,
                                      uint64_t seed, int stop_at_giant, evosir_series** out) {
    if (!out)
        return fail(EVOSIR_ERR_PARAM, "explore_rewiring: NULL output");
    return guard([&] {
        *out = wrap_trace(evosir::explore_rewiring(n, mu, tau, alpha, seed, stop_at_giant != 0));
        return EVOSIR_OK;
    });
}

} // extern "C"
