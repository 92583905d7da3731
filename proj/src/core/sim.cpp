#include "sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>

#include "rng.hpp"

namespace evosir {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

enum vertex_state : std::uint8_t { susceptible = 0, infected = 1, removed = 2 };
enum event_kind : std::uint32_t { ev_infect = 0, ev_remove = 1, ev_recover = 2 };

struct event {
    double time;
    std::uint32_t kind;
    std::uint32_t target;  // edge id (infect/remove) or vertex id (recover)
    std::uint32_t version; // edge episode stamp; unused for recover
};

struct event_after {
    bool operator()(const event& a, const event& b) const { return a.time > b.time; }
};

class engine {
  public:
    engine(const epidemic_params& p, evolving_graph& g, std::uint64_t seed,
           const sim_options& opts)
        : p_(p), g_(g), rnd_(seed), opts_(opts), state_(g.vertex_count(), susceptible),
          recovery_at_(g.vertex_count(), inf), version_(g.capacity(), 0),
          crossings_(p.variant == dynamics_variant::static_sir ? g.capacity() : 0, 0) {
        removal_active_ = p.variant != dynamics_variant::static_sir && p.effective_rho() > 0.0;
        const std::uint64_t n = g.vertex_count();
        auto mode = opts.mode;
        if (mode == sim_options::trajectory_mode::automatic)
            mode = n <= 10000 ? sim_options::trajectory_mode::every_event
                              : sim_options::trajectory_mode::fixed_dt;
        every_event_ = mode == sim_options::trajectory_mode::every_event;
        grid_mode_ = mode == sim_options::trajectory_mode::fixed_dt;
        s_count_ = n;
    }

    epidemic_outcome run(std::uint64_t seed_echo) {
        out_.seed = seed_echo;
        sample(0.0);
        seed_infections();
        while (!queue_.empty() && i_count_ > 0) {
            const event ev = queue_.top();
            queue_.pop();
            switch (ev.kind) {
            case ev_infect: {
                if (ev.version != version_[ev.target])
                    break;
                const auto& inst = g_.instance(ev.target);
                const vertex_id y = state_[inst.u] == susceptible ? inst.u : inst.v;
                if (!crossings_.empty() && ++crossings_[ev.target] > 1)
                    throw state_error("sim: edge crossed twice in StaticSIR");
                infect(y, ev.time);
                break;
            }
            case ev_remove:
                if (ev.version != version_[ev.target])
                    break;
                remove_edge(ev.target, ev.time);
                break;
            case ev_recover:
                recover(static_cast<vertex_id>(ev.target), ev.time);
                break;
            }
        }
        out_.final_removed = r_count_;
        if (grid_mode_)
            sample_point(out_.extinction_time); // grid rows lag; pin the endpoint
        if (opts_.audit_graph)
            g_.audit();
        return std::move(out_);
    }

  private:
    void seed_infections() {
        const std::uint64_t n = g_.vertex_count();
        std::uint32_t want = std::max<std::uint32_t>(1, opts_.initial_infected);
        if (want > n)
            throw domain_error("sim: more initial infected than vertices");
        while (want > 0) {
            const auto v = static_cast<vertex_id>(rnd_.uniform_below(n));
            if (state_[v] != susceptible)
                continue;
            infect(v, 0.0);
            --want;
        }
    }

    void schedule_si(edge_id e, vertex_id infected_end, vertex_id, double now) {
        const double cut = recovery_at_[infected_end];
        const double t_inf = p_.lambda > 0.0 ? now + rnd_.exponential(p_.lambda) : inf;
        const double t_rem = removal_active_ ? now + rnd_.exponential(p_.effective_rho()) : inf;
        // Only the first of the three clocks matters; later ones never fire.
        if (t_inf <= t_rem) {
            if (t_inf < cut)
                queue_.push({t_inf, ev_infect, e, version_[e]});
        } else if (t_rem < cut) {
            queue_.push({t_rem, ev_remove, e, version_[e]});
        }
    }

    void infect(vertex_id v, double now) {
        state_[v] = infected;
        --s_count_;
        ++i_count_;
        out_.peak_infected = std::max<std::uint64_t>(out_.peak_infected, i_count_);
        const double dwell =
            p_.model == infection_model::fixed_unit_time ? 1.0 : rnd_.exponential(1.0);
        recovery_at_[v] = now + dwell;
        queue_.push({recovery_at_[v], ev_recover, v, 0});
        g_.for_each_incident(v, [&](edge_id e, vertex_id w) {
            ++version_[e]; // every incident episode changes with v's state
            if (state_[w] == susceptible)
                schedule_si(e, v, w, now);
        });
        sample(now);
    }

    void remove_edge(edge_id e, double now) {
        const auto& inst = g_.instance(e);
        const vertex_id y = state_[inst.u] == susceptible ? inst.u : inst.v;
        ++version_[e];
        if (p_.variant == dynamics_variant::del_sir) {
            g_.delete_instance(e);
            ++out_.delete_events;
            return;
        }
        // evoSIR: y drops the infected partner and reattaches anywhere but itself
        std::uint64_t w = rnd_.uniform_below(g_.vertex_count() - 1);
        if (w >= y)
            ++w;
        g_.rewire_instance(e, y, static_cast<vertex_id>(w));
        ++out_.rewire_events;
        if (state_[w] == infected)
            schedule_si(e, static_cast<vertex_id>(w), y, now);
    }

    void recover(vertex_id v, double now) {
        state_[v] = removed;
        --i_count_;
        ++r_count_;
        out_.extinction_time = now;
        sample(now);
    }

    void sample(double now) {
        if (every_event_) {
            sample_point(now);
        } else if (grid_mode_) {
            while (next_grid_ < now) {
                out_.traj_t.push_back(next_grid_);
                out_.traj_s.push_back(last_s_);
                out_.traj_i.push_back(last_i_);
                out_.traj_r.push_back(last_r_);
                next_grid_ += opts_.trajectory_dt;
            }
        }
        last_s_ = static_cast<std::uint32_t>(s_count_);
        last_i_ = static_cast<std::uint32_t>(i_count_);
        last_r_ = static_cast<std::uint32_t>(r_count_);
    }

    void sample_point(double t) {
        out_.traj_t.push_back(t);
        out_.traj_s.push_back(static_cast<std::uint32_t>(s_count_));
        out_.traj_i.push_back(static_cast<std::uint32_t>(i_count_));
        out_.traj_r.push_back(static_cast<std::uint32_t>(r_count_));
    }

    const epidemic_params& p_;
    evolving_graph& g_;
    rng rnd_;
    sim_options opts_;
    bool removal_active_ = false;
    bool every_event_ = false;
    bool grid_mode_ = false;
    std::vector<std::uint8_t> state_;
    std::vector<double> recovery_at_;
    std::vector<std::uint32_t> version_;
    std::vector<std::uint8_t> crossings_; // StaticSIR single-crossing check
    std::priority_queue<event, std::vector<event>, event_after> queue_;
    std::uint64_t s_count_ = 0, i_count_ = 0, r_count_ = 0;
    std::uint32_t last_s_ = 0, last_i_ = 0, last_r_ = 0;
    double next_grid_ = 0.0;
    epidemic_outcome out_;
};

} // namespace

epidemic_outcome run_epidemic(const epidemic_params& p, evolving_graph graph,
                              std::uint64_t sim_seed, const sim_options& opts) {
    p.validate();
    if (p.n != graph.vertex_count())
        throw domain_error("run_epidemic: params.n differs from graph vertex count");
    if (graph.vertex_count() == 0)
        throw domain_error("run_epidemic: empty graph");
    engine eng(p, graph, sim_seed, opts);
    return eng.run(sim_seed);
}

namespace {

double resolve_threshold(const epidemic_params& p, double requested) {
    if (requested >= 0.0)
        return requested;
    const double p_large = epidemic_probability(p);
    // (1-z0)/2 per the exploration classifier; subcritical parameters leave
    // that cut at zero, so fall back to a fixed 5% of n.
    return p_large > 0.0 ? 0.5 * p_large : 0.05;
}

template <typename Fn> void parallel_for(std::uint32_t count, int jobs, Fn&& body) {
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, count == 0 ? 1 : count);
    if (workers <= 1) {
        for (std::uint32_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::uint32_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                body(i);
            }
        });
    for (auto& th : pool)
        th.join();
}

void finish_summary(const epidemic_params& p, double threshold, trial_table& table) {
    const double n = static_cast<double>(p.n);
    auto& s = table.summary;
    s.threshold_fraction = threshold;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& row : table.rows) {
        const double frac = static_cast<double>(row.final_removed) / n;
        if (frac >= threshold) {
            ++s.large_count;
            sum += frac;
            sum_sq += frac * frac;
        }
    }
    const double trials = static_cast<double>(table.rows.size());
    s.large_fraction = static_cast<double>(s.large_count) / trials;
    s.large_fraction_se = std::sqrt(s.large_fraction * (1.0 - s.large_fraction) / trials);
    if (s.large_count > 0) {
        const double m = sum / static_cast<double>(s.large_count);
        s.mean_final_fraction_large = m;
        if (s.large_count > 1) {
            const double var = (sum_sq - sum * m) / static_cast<double>(s.large_count - 1);
            s.se_final_fraction_large =
                std::sqrt(std::max(0.0, var) / static_cast<double>(s.large_count));
        }
    } else {
        s.mean_final_fraction_large = std::numeric_limits<double>::quiet_NaN();
        s.se_final_fraction_large = std::numeric_limits<double>::quiet_NaN();
    }
}

} // namespace

trial_table run_trials(const epidemic_params& p, std::uint32_t trials, std::uint64_t base_seed,
                       double large_threshold, int jobs) {
    p.validate();
    if (trials == 0)
        throw domain_error("run_trials: trials must be >= 1");
    if (p.n == 0)
        throw domain_error("run_trials: params.n must be set");
    const double threshold = resolve_threshold(p, large_threshold);
    trial_table table;
    table.rows.resize(trials);
    sim_options opts;
    opts.mode = sim_options::trajectory_mode::none;
    parallel_for(trials, jobs, [&](std::uint32_t i) {
        const std::uint64_t graph_seed = derive_seed(base_seed, 2ull * i);
        const std::uint64_t sim_seed = derive_seed(base_seed, 2ull * i + 1);
        rng graph_rnd(graph_seed);
        auto g = evolving_graph::erdos_renyi(p.n, p.mu, graph_rnd);
        const auto outcome = run_epidemic(p, std::move(g), sim_seed, opts);
        auto& row = table.rows[i];
        row.trial = i;
        row.graph_seed = graph_seed;
        row.sim_seed = sim_seed;
        row.final_removed = outcome.final_removed;
        row.peak_infected = outcome.peak_infected;
        row.rewire_events = outcome.rewire_events;
        row.delete_events = outcome.delete_events;
        row.extinction_time = outcome.extinction_time;
    });
    finish_summary(p, threshold, table);
    return table;
}

compare_result compare_variants(const epidemic_params& p, std::uint32_t trials,
                                std::uint64_t base_seed, int jobs) {
    p.validate();
    if (trials == 0)
        throw domain_error("compare_variants: trials must be >= 1");
    if (p.n == 0)
        throw domain_error("compare_variants: params.n must be set");
    std::vector<double> del_frac(trials), evo_frac(trials);
    sim_options opts;
    opts.mode = sim_options::trajectory_mode::none;
    const double n = static_cast<double>(p.n);
    parallel_for(trials, jobs, [&](std::uint32_t i) {
        const std::uint64_t graph_seed = derive_seed(base_seed, 2ull * i);
        const std::uint64_t sim_seed = derive_seed(base_seed, 2ull * i + 1);
        rng graph_rnd(graph_seed);
        const auto g = evolving_graph::erdos_renyi(p.n, p.mu, graph_rnd);
        epidemic_params q = p;
        q.variant = dynamics_variant::del_sir;
        del_frac[i] = static_cast<double>(run_epidemic(q, g, sim_seed, opts).final_removed) / n;
        q.variant = dynamics_variant::evo_sir;
        evo_frac[i] = static_cast<double>(run_epidemic(q, g, sim_seed, opts).final_removed) / n;
    });
    auto mean_se = [&](const std::vector<double>& xs, double& mean, double& se) {
        double sum = 0.0;
        for (double x : xs)
            sum += x;
        mean = sum / static_cast<double>(xs.size());
        double ss = 0.0;
        for (double x : xs)
            ss += (x - mean) * (x - mean);
        se = xs.size() > 1
                 ? std::sqrt(ss / static_cast<double>(xs.size() - 1) /
                             static_cast<double>(xs.size()))
                 : 0.0;
    };
    compare_result res;
    res.trials = trials;
    mean_se(del_frac, res.mean_final_fraction_del, res.se_del);
    mean_se(evo_frac, res.mean_final_fraction_evo, res.se_evo);
    std::vector<double> diff(trials);
    for (std::uint32_t i = 0; i < trials; ++i)
        diff[i] = evo_frac[i] - del_frac[i];
    mean_se(diff, res.mean_diff, res.se_diff);
    return res;
}

} // namespace evosir
