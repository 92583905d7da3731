#include "percolation.hpp"

#include <cmath>
#include <functional>
#include <queue>

#include "errors.hpp"

namespace evosir {

std::uint64_t exploration_trace::giant_crossing() const {
    const auto cutoff =
        static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    for (std::uint64_t t : a_zero_steps)
        if (t > cutoff)
            return t;
    return 0;
}

evolving_graph percolate(const evolving_graph& g, double tau, rng& rnd) {
    if (tau < 0.0 || tau > 1.0)
        throw domain_error("percolate: tau must lie in [0, 1]");
    evolving_graph out(g.vertex_count());
    for (std::uint64_t e = 0; e < g.capacity(); ++e) {
        const auto& inst = g.instance(static_cast<edge_id>(e));
        if (inst.alive && rnd.uniform() < tau)
            out.add_edge(inst.u, inst.v);
    }
    return out;
}

namespace {

// Shared frame of the exploration processes. One vertex is explored per step;
// seeds (the first vertex and every restart after the active set dies) are
// drawn from the unexplored pool within their step, so U_t + A_t + R_t = n
// and R_t = t hold for the whole recorded trace. per_step(U) returns the
// number of fresh activations; consume_seed() mirrors the pool bookkeeping of
// the caller when a seed is taken.
template <typename StepFn, typename SeedFn>
exploration_trace explore_loop(std::uint64_t n, bool stop_at_giant, StepFn per_step,
                               SeedFn consume_seed, std::vector<double>* v_out = nullptr,
                               const std::function<double()>& v_value = {}) {
    exploration_trace tr;
    tr.n = n;
    if (n == 0)
        return tr;
    std::uint64_t unexplored = n;
    std::int64_t active = 0;
    const auto cutoff = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    for (std::uint64_t t = 0; t < n; ++t) {
        tr.u_series.push_back(unexplored);
        tr.a_series.push_back(active);
        if (v_out)
            v_out->push_back(v_value());
        if (active <= 0) {
            if (t > 0)
                tr.a_zero_steps.push_back(t);
            if (stop_at_giant && t > cutoff)
                break;
            if (unexplored == 0)
                break;
            consume_seed();
            --unexplored;
            active = 1;
        }
        const std::uint64_t fresh = per_step(unexplored);
        unexplored -= fresh;
        active += static_cast<std::int64_t>(fresh) - 1;
    }
    return tr;
}

} // namespace

exploration_trace explore_fixed(std::uint64_t n, double mu_bar, std::uint64_t seed,
                                bool stop_at_giant) {
    if (mu_bar < 0.0)
        throw domain_error("explore_fixed: mu_bar must be >= 0");
    rng rnd(seed);
    const double p = n > 0 ? mu_bar / static_cast<double>(n) : 0.0;
    return explore_loop(
        n, stop_at_giant, [&](std::uint64_t u) { return rnd.binomial(u, p); }, [] {});
}

exploration_trace explore_exponential(std::uint64_t n, double mu, double lambda,
                                      std::uint64_t seed, bool stop_at_giant) {
    if (!(mu > 0.0) || !(lambda > 0.0))
        throw domain_error("explore_exponential: need mu > 0 and lambda > 0");
    rng rnd(seed);
    return explore_loop(
        n, stop_at_giant,
        [&](std::uint64_t u) {
            const double t_inf = rnd.exponential(1.0);
            const double tau_s = -std::expm1(-lambda * t_inf);
            return rnd.binomial(u, mu * tau_s / static_cast<double>(n));
        },
        [] {});
}

exploration_trace explore_rewiring(std::uint64_t n, double mu, double tau, double alpha,
                                   std::uint64_t seed, bool stop_at_giant) {
    if (!(mu > 0.0) || !(tau > 0.0) || tau > 1.0 || alpha < 0.0 || alpha >= 1.0)
        throw domain_error("explore_rewiring: need mu > 0, tau in (0,1], alpha in [0,1)");
    rng rnd(seed);

    // Unexplored pool with per-vertex degrees; removal swaps with the back so
    // pool[0..pool_size) are exactly the unexplored vertices.
    std::vector<std::uint32_t> degree(n);
    std::vector<std::uint32_t> pool(n);
    std::vector<std::uint32_t> slot(n);
    std::uint64_t degree_mass = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        degree[v] = static_cast<std::uint32_t>(rnd.poisson(mu));
        degree_mass += degree[v];
        pool[v] = static_cast<std::uint32_t>(v);
        slot[v] = static_cast<std::uint32_t>(v);
    }
    std::size_t pool_size = n;
    auto remove_from_pool = [&](std::size_t idx) {
        const std::uint32_t v = pool[idx];
        degree_mass -= degree[v];
        pool[idx] = pool[pool_size - 1];
        slot[pool[idx]] = static_cast<std::uint32_t>(idx);
        pool[pool_size - 1] = v;
        slot[v] = static_cast<std::uint32_t>(pool_size - 1);
        --pool_size;
    };

    auto fresh_fn = [&](std::uint64_t) -> std::uint64_t {
        const std::uint64_t contacts =
            rnd.binomial(degree_mass, tau / static_cast<double>(n));
        std::uint64_t infected = 0;
        for (std::uint64_t c = 0; c < contacts; ++c) {
            if (rnd.uniform() < alpha) {
                // rewired: the edge reattaches to a uniform vertex
                const std::uint64_t target = rnd.uniform_below(n);
                if (slot[target] < pool_size) {
                    ++degree[target];
                    ++degree_mass;
                }
            } else if (pool_size > 0) {
                remove_from_pool(rnd.uniform_below(pool_size));
                ++infected;
            }
        }
        return infected;
    };
    auto seed_fn = [&] {
        if (pool_size > 0)
            remove_from_pool(rnd.uniform_below(pool_size));
    };
    auto v_value = [&]() -> double {
        return pool_size > 0 ? static_cast<double>(degree_mass) / static_cast<double>(pool_size)
                             : 0.0;
    };
    std::vector<double> v_series;
    exploration_trace tr = explore_loop(n, stop_at_giant, fresh_fn, seed_fn, &v_series,
                                        std::function<double()>(v_value));
    tr.v_series = std::move(v_series);
    return tr;
}

std::uint64_t cluster_size_of_random_vertex(const evolving_graph& g, rng& rnd) {
    const std::uint64_t n = g.vertex_count();
    if (n == 0)
        throw state_error("cluster_size_of_random_vertex: empty graph");
    const auto start = static_cast<vertex_id>(rnd.uniform_below(n));
    std::vector<bool> seen(n, false);
    std::queue<vertex_id> frontier;
    frontier.push(start);
    seen[start] = true;
    std::uint64_t size = 0;
    while (!frontier.empty()) {
        const vertex_id v = frontier.front();
        frontier.pop();
        ++size;
        g.for_each_incident(v, [&](edge_id, vertex_id w) {
            if (!seen[w]) {
                seen[w] = true;
                frontier.push(w);
            }
        });
    }
    return size;
}

} // namespace evosir
