#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace evosir {

// Sequential reveal of a random graph; one vertex is explored per step, so
// R_t = t and U_t + A_t + R_t = n throughout. When the active set empties the
// next seed is taken from the unexplored pool and the step index is recorded
// in a_zero_steps.
struct exploration_trace {
    std::vector<std::uint64_t> u_series;  // U_t for t = 0..len-1
    std::vector<std::int64_t> a_series;   // A_t = n - t - U_t
    std::vector<double> v_series;         // mean unexplored degree (rewiring only)
    std::vector<std::uint64_t> a_zero_steps;
    std::uint64_t n = 0;

    std::size_t steps() const { return u_series.size(); }
    // First step past sqrt(n) where the active set emptied, i.e. the end of
    // the giant exploration; 0 when the trace never got that far.
    std::uint64_t giant_crossing() const;
};

// Keeps each live edge independently with probability tau.
evolving_graph percolate(const evolving_graph& g, double tau, rng& rnd);

// Exploration of an implicit G(n, mu_bar/n): each step activates
// binomial(U_t, mu_bar/n) fresh vertices. stop_at_giant ends the trace at the
// first active-set death past sqrt(n).
exploration_trace explore_fixed(std::uint64_t n, double mu_bar, std::uint64_t seed,
                                bool stop_at_giant = true);

// Exponential-infection variant: step s draws T ~ Exp(1) and thins with
// tau_s = 1 - e^{-lambda T}, giving binomial(U_s, mu tau_s / n) activations.
exploration_trace explore_exponential(std::uint64_t n, double mu, double lambda,
                                      std::uint64_t seed, bool stop_at_giant = true);

// Rewiring variant: per step, binomial(D_t, tau/n) revealed contacts where
// D_t is the total unexplored degree mass; each contact independently infects
// (probability 1-alpha, removing a uniform unexplored vertex) or is rewired
// (probability alpha, adding one stub to a uniform vertex, which grows D_t
// when the target is unexplored). v_series tracks D_t / U_t.
exploration_trace explore_rewiring(std::uint64_t n, double mu, double tau, double alpha,
                                   std::uint64_t seed, bool stop_at_giant = true);

// Component size of a uniformly chosen vertex (BFS).
std::uint64_t cluster_size_of_random_vertex(const evolving_graph& g, rng& rnd);

} // namespace evosir
