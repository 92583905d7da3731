/* evosir: SIR epidemics on Erdos-Renyi graphs with edge deletion (delSIR) or
 * rewiring (evoSIR). C interface to the simulation, percolation, analytic and
 * ODE layers. All objects returned through double pointers are owned by the
 * caller and released with the matching _free function. Functions returning
 * evosir_status leave outputs untouched on failure; a thread-local message is
 * available from evosir_last_error(). Handles are never shared internally, so
 * distinct handles may be used from distinct threads freely.
 */
#ifndef EVOSIR_H
#define EVOSIR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum evosir_status {
    EVOSIR_OK = 0,
    EVOSIR_ERR_PARAM = 1,    /* argument outside its domain */
    EVOSIR_ERR_STATE = 2,    /* operation contradicts object state */
    EVOSIR_ERR_NUMERIC = 3,  /* solver or quadrature failure */
    EVOSIR_NO_EPIDEMIC = 4,  /* requested critical value does not exist */
    EVOSIR_ERR_IO = 5
} evosir_status;

typedef enum evosir_infection_model {
    EVOSIR_INFECTION_FIXED = 0,       /* infections last exactly time 1 */
    EVOSIR_INFECTION_EXPONENTIAL = 1  /* Exp(1) infectious periods */
} evosir_infection_model;

typedef enum evosir_variant {
    EVOSIR_VARIANT_STATIC = 0, /* no edge removal */
    EVOSIR_VARIANT_DEL = 1,    /* S-I edges deleted at rate rho */
    EVOSIR_VARIANT_EVO = 2     /* S-I edges rewired at rate rho */
} evosir_variant;

typedef struct evosir_params {
    uint64_t n;      /* population size; may be 0 for pure analytics */
    double mu;       /* mean degree, > 0 */
    double lambda;   /* infection rate, >= 0 */
    double rho;      /* removal/rewiring rate, >= 0 */
    int infection_model; /* evosir_infection_model */
    int variant;         /* evosir_variant */
} evosir_params;

const char* evosir_version(void);
const char* evosir_status_name(evosir_status status);
/* Message describing the most recent failure on this thread. */
const char* evosir_last_error(void);

/* Splittable seed stream: the seed of work item `index` under `base`. */
uint64_t evosir_derive_seed(uint64_t base, uint64_t index);

/* ---------------------------------------------------------------- graphs */

typedef struct evosir_graph evosir_graph;
typedef struct evosir_rng evosir_rng;

evosir_rng* evosir_rng_new(uint64_t seed);
void evosir_rng_free(evosir_rng* rng);

/* G(n, mu/n); requires 0 <= mu <= n-1 (any mu when n is 0 or 1). */
evosir_status evosir_graph_generate_er(uint64_t n, double mu, evosir_rng* rng,
                                       evosir_graph** out);
evosir_status evosir_graph_clone(const evosir_graph* g, evosir_graph** out);
void evosir_graph_free(evosir_graph* g);

uint64_t evosir_graph_vertex_count(const evosir_graph* g);
uint64_t evosir_graph_edge_count(const evosir_graph* g);
evosir_status evosir_graph_degree(const evosir_graph* g, uint64_t v, uint64_t* out);

/* Removes one copy of (u, v); EVOSIR_ERR_STATE when absent. */
evosir_status evosir_graph_delete_edge(evosir_graph* g, uint64_t u, uint64_t v);

/* Replaces one copy of (u, v) by (u, w), w uniform over all vertices except
 * u; parallel edges permitted. Stores w in *new_neighbor. */
evosir_status evosir_graph_rewire_endpoint(evosir_graph* g, uint64_t u, uint64_t v,
                                           evosir_rng* rng, uint64_t* new_neighbor);

/* Component sizes in descending order. Writes min(count, cap) entries;
 * *count always receives the number of components and *giant_fraction the
 * largest size divided by n. sizes may be NULL when cap is 0. */
evosir_status evosir_graph_components(const evosir_graph* g, uint64_t* sizes, size_t cap,
                                      size_t* count, double* giant_fraction);

/* Keeps each edge independently with probability tau (bond percolation). */
evosir_status evosir_graph_percolate(const evosir_graph* g, double tau, evosir_rng* rng,
                                     evosir_graph** out);

/* Component size of a uniformly random vertex. */
evosir_status evosir_graph_cluster_size(const evosir_graph* g, evosir_rng* rng, uint64_t* out);

/* Writes "u v" per line, one line per edge, 0-indexed. */
evosir_status evosir_graph_write_edge_list(const evosir_graph* g, const char* path);

/* ------------------------------------------------------------ simulation */

typedef struct evosir_outcome evosir_outcome;

typedef enum evosir_trajectory_mode {
    EVOSIR_TRAJ_AUTO = 0,  /* every event for n <= 1e4, else the dt grid */
    EVOSIR_TRAJ_EVERY_EVENT = 1,
    EVOSIR_TRAJ_FIXED_DT = 2,
    EVOSIR_TRAJ_NONE = 3
} evosir_trajectory_mode;

typedef struct evosir_sim_options {
    uint32_t initial_infected; /* number of uniformly random seed vertices, >= 1 */
    int trajectory_mode;       /* evosir_trajectory_mode */
    double trajectory_dt;      /* grid step for EVOSIR_TRAJ_FIXED_DT */
} evosir_sim_options;

void evosir_sim_options_init(evosir_sim_options* opts);

/* Runs one epidemic to extinction on a private copy of the graph. */
evosir_status evosir_sim_run(const evosir_params* params, const evosir_graph* g,
                             uint64_t sim_seed, const evosir_sim_options* opts,
                             evosir_outcome** out);

void evosir_outcome_free(evosir_outcome* o);
uint64_t evosir_outcome_final_removed(const evosir_outcome* o);
uint64_t evosir_outcome_peak_infected(const evosir_outcome* o);
uint64_t evosir_outcome_rewire_events(const evosir_outcome* o);
uint64_t evosir_outcome_delete_events(const evosir_outcome* o);
double evosir_outcome_extinction_time(const evosir_outcome* o);
uint64_t evosir_outcome_seed(const evosir_outcome* o);
size_t evosir_outcome_trajectory_len(const evosir_outcome* o);
/* Borrowed pointers into the outcome; valid until evosir_outcome_free. */
evosir_status evosir_outcome_trajectory(const evosir_outcome* o, const double** t,
                                        const uint32_t** s, const uint32_t** i,
                                        const uint32_t** r);

typedef struct evosir_trials evosir_trials;

typedef struct evosir_trial_summary {
    double threshold_fraction; /* resolved large-epidemic cut (fraction of n) */
    uint64_t large_count;
    double large_fraction;
    double large_fraction_se;
    double mean_final_fraction_large; /* NaN when no trial was large */
    double se_final_fraction_large;
} evosir_trial_summary;

/* `trials` independent runs, each on a fresh G(n, mu/n); trial i draws its
 * graph seed as evosir_derive_seed(base_seed, 2i) and its simulation seed as
 * evosir_derive_seed(base_seed, 2i+1). large_threshold < 0 selects the
 * analytic default (1-z0)/2 (0.05 when subcritical). jobs <= 0 uses all
 * hardware threads; the result does not depend on jobs. */
evosir_status evosir_run_trials(const evosir_params* params, uint32_t trials,
                                uint64_t base_seed, double large_threshold, int jobs,
                                evosir_trials** out);

void evosir_trials_free(evosir_trials* t);
size_t evosir_trials_rows(const evosir_trials* t);
evosir_status evosir_trials_row(const evosir_trials* t, size_t index, uint64_t* graph_seed,
                                uint64_t* sim_seed, uint64_t* final_removed,
                                uint64_t* peak_infected, uint64_t* rewire_events,
                                uint64_t* delete_events, double* extinction_time);
evosir_status evosir_trials_summary(const evosir_trials* t, evosir_trial_summary* out);

typedef struct evosir_compare_result {
    uint32_t trials;
    double mean_final_fraction_del, se_del;
    double mean_final_fraction_evo, se_evo;
    double mean_diff, se_diff; /* evo - del, paired by trial */
} evosir_compare_result;

/* delSIR vs evoSIR on identical generated graphs with matched seeds. */
evosir_status evosir_compare_variants(const evosir_params* params, uint32_t trials,
                                      uint64_t base_seed, int jobs,
                                      evosir_compare_result* out);

/* -------------------------------------------------------------- analytic */

typedef struct evosir_analytic_report {
    double tau;           /* transmissibility with removal in the race */
    double alpha;         /* probability removal preempts a transmission */
    double lambda_c;      /* +inf when no epidemic is possible */
    double z0;            /* subunit fixed point of the offspring gf */
    double p_large;       /* 1 - z0 */
    double final_size;    /* StaticSIR/delSIR limiting fraction */
    double evo_final_size; /* logistic-closure approximation for evoSIR */
    int supercritical;
} evosir_analytic_report;

evosir_status evosir_analytic(const evosir_params* params, evosir_analytic_report* out);
evosir_status evosir_transmissibility(const evosir_params* params, double* out);
evosir_status evosir_critical_lambda(double mu, double rho, int infection_model, double* out);
evosir_status evosir_critical_rho(double mu, double lambda, int infection_model, double* out);
evosir_status evosir_epidemic_probability(const evosir_params* params, double* out);
evosir_status evosir_final_size(const evosir_params* params, double* out);
/* below_critical (optional) receives 1 when the approximation is pinned at 0. */
evosir_status evosir_evo_final_size_approx(const evosir_params* params, int* below_critical,
                                           double* out);
evosir_status evosir_r0_branching(double mu, double sigma2, double lambda, double rho,
                                  double* out);

/* Smallest fixed point in [0, 1] of a probability generating function
 * supplied as a callback; |gf(z0) - z0| < tol on success. */
typedef double (*evosir_gf_fn)(double z, void* ctx);
evosir_status evosir_gf_fixed_point(evosir_gf_fn gf, void* ctx, double tol, double* out);

/* -------------------------------------------- series (ODE, explorations) */

/* Column table: every integrator and exploration returns one. Column 0 is
 * the time (or step) axis. */
typedef struct evosir_series evosir_series;

void evosir_series_free(evosir_series* s);
size_t evosir_series_rows(const evosir_series* s);
size_t evosir_series_cols(const evosir_series* s);
const char* evosir_series_col_name(const evosir_series* s, size_t index);
/* Borrowed pointer to rows() doubles; NULL for an invalid index. */
const double* evosir_series_col(const evosir_series* s, size_t index);
const double* evosir_series_col_by_name(const evosir_series* s, const char* name);

/* Homogeneous-mixing SIR. Columns t,S,I,R (counts out of n). */
evosir_status evosir_ode_homogeneous(double beta, double n, double i0, double t_end,
                                     double dt, evosir_series** out);

/* Susceptible-degree system on G(n, mu/n). Columns t,S,I,R,F. */
evosir_status evosir_ode_sk(const evosir_params* params, double i0, uint32_t k_max,
                            double dt, double t_end, evosir_series** out);

/* Rewiring modification with growing mean susceptible degree.
 * Columns t,S,I,R,F,mu_t. */
evosir_status evosir_ode_sk_rewire(const evosir_params* params, double i0, uint32_t k_max,
                                   double dt, double t_end, evosir_series** out);

/* Miller edge-based ODE with Poisson(mu) degrees. Columns t,S,I,R,theta
 * (fractions). */
evosir_status evosir_ode_miller_volz(double beta, double gamma, double mu, double i0,
                                     double dt, double t_end, evosir_series** out);

/* Unexplored-mass pair du = -v tau u (1-alpha), dv = v tau u alpha on [0,1].
 * Columns s,u,v. */
evosir_status evosir_ode_ml_pair(double mu, double tau, double alpha, double dt,
                                 evosir_series** out);

/* Exploration processes; one vertex explored per step so U+A+R=n, R_t=t.
 * Columns step,U,A,R (plus v for the rewiring variant). stop_at_giant != 0
 * ends the trace at the first active-set death past sqrt(n). */
evosir_status evosir_explore_fixed(uint64_t n, double mu_bar, uint64_t seed,
                                   int stop_at_giant, evosir_series** out);
evosir_status evosir_explore_exponential(uint64_t n, double mu, double lambda, uint64_t seed,
                                         int stop_at_giant, evosir_series** out);
evosir_status evosir_explore_rewiring(uint64_t n, double mu, double tau, double alpha,
                                      uint64_t seed, int stop_at_giant, evosir_series** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EVOSIR_H */
