#pragma once

#include <cstdint>
#include <vector>

#include "analytic.hpp"
#include "graph.hpp"

namespace evosir {

struct sim_options {
    enum class trajectory_mode { automatic, every_event, fixed_dt, none };

    std::uint32_t initial_infected = 1; // distinct uniformly random seed vertices
    trajectory_mode mode = trajectory_mode::automatic;
    double trajectory_dt = 0.05; // grid used by fixed_dt (and automatic for n > 1e4)
    bool audit_graph = false;    // full structural audit of the evolved graph at extinction
};

struct epidemic_outcome {
    std::uint64_t final_removed = 0;
    std::uint64_t peak_infected = 0;
    std::uint64_t rewire_events = 0;
    std::uint64_t delete_events = 0;
    double extinction_time = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> traj_t;
    std::vector<std::uint32_t> traj_s, traj_i, traj_r;
};

// Exact event-driven run until I = 0. The trial owns the graph it mutates;
// pass a copy to keep the original. Event semantics: an S-I adjacency races an
// Exp(lambda) infection clock against an Exp(rho) removal clock (delSIR
// deletes, evoSIR rewires the susceptible endpoint to a uniform non-self
// target), both cut off at the infected endpoint's recovery time, which is
// known at infection (t+1 fixed, t+Exp(1) exponential). Recovery silences the
// vertex; S-S and removed-adjacent edges stay dormant until an endpoint is
// infected. Scheduling is lazy: stale queue entries are skipped via per-edge
// episode version counters.
epidemic_outcome run_epidemic(const epidemic_params& p, evolving_graph graph,
                              std::uint64_t sim_seed, const sim_options& opts = {});

struct trial_row {
    std::uint32_t trial = 0;
    std::uint64_t graph_seed = 0;
    std::uint64_t sim_seed = 0;
    std::uint64_t final_removed = 0;
    std::uint64_t peak_infected = 0;
    std::uint64_t rewire_events = 0;
    std::uint64_t delete_events = 0;
    double extinction_time = 0.0;
};

struct trial_summary {
    double threshold_fraction = 0.0; // resolved "large epidemic" cut, as a fraction of n
    std::uint64_t large_count = 0;
    double large_fraction = 0.0;
    double large_fraction_se = 0.0;
    double mean_final_fraction_large = 0.0; // NaN when no trial was large
    double se_final_fraction_large = 0.0;
};

struct trial_table {
    std::vector<trial_row> rows;
    trial_summary summary;
};

// Runs `trials` independent trials, each on a fresh G(n, mu/n). Trial i uses
// graph seed derive_seed(base, 2i) and sim seed derive_seed(base, 2i+1), so
// the table is reproducible and extends without reshuffling. A negative
// large_threshold selects the analytic default (1-z0)/2, falling back to 0.05
// for subcritical parameters where that cut degenerates to zero. jobs <= 0
// uses all hardware threads; results are identical for any jobs value.
trial_table run_trials(const epidemic_params& p, std::uint32_t trials, std::uint64_t base_seed,
                       double large_threshold = -1.0, int jobs = 0);

struct compare_result {
    std::uint32_t trials = 0;
    double mean_final_fraction_del = 0.0, se_del = 0.0;
    double mean_final_fraction_evo = 0.0, se_evo = 0.0;
    double mean_diff = 0.0, se_diff = 0.0; // evo - del, paired by trial
};

// delSIR vs evoSIR on identical generated graphs and matched sim seeds.
compare_result compare_variants(const epidemic_params& p, std::uint32_t trials,
                                std::uint64_t base_seed, int jobs = 0);

} // namespace evosir
