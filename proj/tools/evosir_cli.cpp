// Command-line front end over the evosir C API: analytic tables, Monte Carlo
// campaigns, parameter sweeps, ODE trajectories, exploration traces and
// percolation summaries, all with reproducible seeds and CSV/JSON output.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evosir.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_bad_config = 2;
constexpr int exit_numeric = 3;

struct cli_error {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw cli_error{code, message}; }

void check(evosir_status st, const std::string& where) {
    if (st == EVOSIR_OK)
        return;
    const int code = st == EVOSIR_ERR_NUMERIC ? exit_numeric : exit_bad_config;
    die(code, where + ": " + evosir_status_name(st) + " (" + evosir_last_error() + ")");
}

// ---------------------------------------------------------------- output

std::string format_cell(const ordered_json& v) {
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        return buf;
    }
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

struct table {
    std::vector<std::string> columns;
    std::vector<std::vector<ordered_json>> rows;

    void add_row(std::initializer_list<ordered_json> cells) { rows.emplace_back(cells); }
};

void write_output(const std::string& path, const std::string& format, const std::string& command,
                  const ordered_json& config, const table& t) {
    std::ostringstream body;
    if (format == "csv") {
        body << "# evosir " << evosir_version() << " " << command << " config=" << config.dump()
             << "\n";
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            body << (c ? "," : "") << t.columns[c];
        body << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                body << (c ? "," : "") << format_cell(row[c]);
            body << "\n";
        }
    } else {
        ordered_json doc;
        doc["version"] = evosir_version();
        doc["command"] = command;
        doc["config"] = config;
        doc["columns"] = t.columns;
        auto& data = doc["data"] = ordered_json::array();
        for (const auto& row : t.rows) {
            ordered_json r = ordered_json::array();
            for (const auto& cell : row)
                r.push_back(cell);
            data.push_back(std::move(r));
        }
        body << doc.dump(2) << "\n";
    }
    if (path.empty() || path == "-") {
        std::cout << body.str();
        return;
    }
    std::ofstream os(path);
    if (!os)
        die(exit_bad_config, "cannot open output file " + path);
    os << body.str();
    if (!os.flush())
        die(exit_bad_config, "write failed for " + path);
}

table series_to_table(const evosir_series* s) {
    table t;
    const std::size_t cols = evosir_series_cols(s);
    const std::size_t rows = evosir_series_rows(s);
    std::vector<const double*> data(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        t.columns.push_back(evosir_series_col_name(s, c));
        data[c] = evosir_series_col(s, c);
    }
    t.rows.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<ordered_json> row(cols);
        for (std::size_t c = 0; c < cols; ++c)
            row[c] = data[c][r];
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------- config

struct shared_opts {
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string format = "csv";
    int jobs = 0;
    std::string config_path;
};

void add_shared(CLI::App* cmd, shared_opts& o) {
    cmd->add_option("--seed", o.seed, "base seed for all randomness");
    cmd->add_option("--out", o.out, "output path, - for stdout")->capture_default_str();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--jobs", o.jobs, "worker threads, 0 = all cores");
    cmd->add_option("--config", o.config_path, "JSON config file; flags override its values");
}

ordered_json load_config(const std::string& path) {
    if (path.empty())
        return ordered_json::object();
    std::ifstream is(path);
    if (!is)
        die(exit_bad_config, "cannot open config file " + path);
    ordered_json cfg;
    try {
        is >> cfg;
    } catch (const std::exception& e) {
        die(exit_bad_config, std::string("config parse error: ") + e.what());
    }
    if (!cfg.is_object())
        die(exit_bad_config, "config file must hold a JSON object");
    return cfg;
}

// Applies a config value when the flag was not given on the command line.
template <typename T>
void cfg_override(const CLI::App& cmd, const ordered_json& cfg, const std::string& key, T& field) {
    if (!cfg.contains(key))
        return;
    const auto* opt = cmd.get_option_no_throw("--" + key);
    if (opt && opt->count() > 0)
        return;
    try {
        field = cfg.at(key).get<T>();
    } catch (const std::exception& e) {
        die(exit_bad_config, "config key '" + key + "': " + e.what());
    }
}

struct model_opts {
    std::uint64_t n = 10000;
    double mu = 5.0;
    double lambda = 1.0;
    double rho = 0.0;
    std::string model = "exponential";
    std::string variant = "evo";
};

void add_model(CLI::App* cmd, model_opts& m, bool with_n = true) {
    if (with_n)
        cmd->add_option("--n", m.n, "population size")->capture_default_str();
    cmd->add_option("--mu", m.mu, "mean degree")->capture_default_str();
    cmd->add_option("--lambda", m.lambda, "infection rate")->capture_default_str();
    cmd->add_option("--rho", m.rho, "removal/rewiring rate")->capture_default_str();
    cmd->add_option("--model", m.model, "infection time model")
        ->check(CLI::IsMember({"fixed", "exponential"}))
        ->capture_default_str();
    cmd->add_option("--variant", m.variant, "dynamics variant")
        ->check(CLI::IsMember({"static", "del", "evo"}))
        ->capture_default_str();
}

evosir_params to_params(const model_opts& m) {
    evosir_params p;
    p.n = m.n;
    p.mu = m.mu;
    p.lambda = m.lambda;
    p.rho = m.rho;
    p.infection_model =
        m.model == "fixed" ? EVOSIR_INFECTION_FIXED : EVOSIR_INFECTION_EXPONENTIAL;
    p.variant = m.variant == "static" ? EVOSIR_VARIANT_STATIC
                : m.variant == "del"  ? EVOSIR_VARIANT_DEL
                                      : EVOSIR_VARIANT_EVO;
    return p;
}

struct sweep_axis {
    std::string param; // mu | lambda | rho
    double min = 0.0;
    double max = 0.0;
    std::uint32_t steps = 1;

    double value(std::uint32_t i) const {
        if (steps <= 1)
            return min;
        return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
};

sweep_axis parse_sweep(const std::string& spec) {
    sweep_axis axis;
    std::stringstream ss(spec);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':'))
        parts.push_back(part);
    if (parts.size() != 4)
        die(exit_bad_config, "sweep spec must be param:min:max:steps, got '" + spec + "'");
    axis.param = parts[0];
    if (axis.param != "mu" && axis.param != "lambda" && axis.param != "rho")
        die(exit_bad_config, "sweep parameter must be mu, lambda or rho");
    try {
        axis.min = std::stod(parts[1]);
        axis.max = std::stod(parts[2]);
        const long steps = std::stol(parts[3]);
        if (steps < 1)
            die(exit_bad_config, "sweep steps must be >= 1");
        axis.steps = static_cast<std::uint32_t>(steps);
    } catch (const cli_error&) {
        throw;
    } catch (const std::exception&) {
        die(exit_bad_config, "cannot parse sweep spec '" + spec + "'");
    }
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max))
        die(exit_bad_config, "sweep bounds must be finite");
    return axis;
}

void apply_axis(evosir_params& p, const sweep_axis& axis, std::uint32_t i) {
    const double v = axis.value(i);
    if (axis.param == "mu")
        p.mu = v;
    else if (axis.param == "lambda")
        p.lambda = v;
    else
        p.rho = v;
}

ordered_json model_config(const model_opts& m, bool with_n = true) {
    ordered_json cfg;
    if (with_n)
        cfg["n"] = m.n;
    cfg["mu"] = m.mu;
    cfg["lambda"] = m.lambda;
    cfg["rho"] = m.rho;
    cfg["model"] = m.model;
    cfg["variant"] = m.variant;
    return cfg;
}

using graph_ptr = std::unique_ptr<evosir_graph, decltype(&evosir_graph_free)>;
using rng_ptr = std::unique_ptr<evosir_rng, decltype(&evosir_rng_free)>;
using series_ptr = std::unique_ptr<evosir_series, decltype(&evosir_series_free)>;
using outcome_ptr = std::unique_ptr<evosir_outcome, decltype(&evosir_outcome_free)>;
using trials_ptr = std::unique_ptr<evosir_trials, decltype(&evosir_trials_free)>;

// ------------------------------------------------------------- analytic

struct analytic_cmd {
    shared_opts shared;
    model_opts model;
    std::string sweep_spec;

    int run(const CLI::App& cmd) {
        const ordered_json cfg = load_config(shared.config_path);
        cfg_override(cmd, cfg, "mu", model.mu);
        cfg_override(cmd, cfg, "lambda", model.lambda);
        cfg_override(cmd, cfg, "rho", model.rho);
        cfg_override(cmd, cfg, "model", model.model);
        cfg_override(cmd, cfg, "variant", model.variant);
        cfg_override(cmd, cfg, "sweep", sweep_spec);

        std::optional<sweep_axis> axis;
        if (!sweep_spec.empty())
            axis = parse_sweep(sweep_spec);

        table t;
        t.columns = {"mu",    "lambda",  "rho",     "model",      "variant",       "tau",
                     "alpha", "lambda_c", "z0",     "p_large",    "final_size",
                     "evo_final_size",    "supercritical"};
        const std::uint32_t points = axis ? axis->steps : 1;
        for (std::uint32_t i = 0; i < points; ++i) {
            evosir_params p = to_params(model);
            p.n = 0;
            if (axis)
                apply_axis(p, *axis, i);
            evosir_analytic_report rep;
            check(evosir_analytic(&p, &rep), "analytic");
            t.add_row({p.mu, p.lambda, p.rho, model.model, model.variant, rep.tau, rep.alpha,
                       rep.lambda_c, rep.z0, rep.p_large, rep.final_size, rep.evo_final_size,
                       rep.supercritical});
        }
        ordered_json echo = model_config(model, false);
        if (axis)
            echo["sweep"] = sweep_spec;
        write_output(shared.out, shared.format, "analytic", echo, t);
        return exit_ok;
    }
};

// ------------------------------------------------------------ run/sweep

void append_trial_rows(table& t, const evosir_params& p, const model_opts& m,
                       const evosir_trials* trials, double sweep_value,
                       const std::string& sweep_param) {
    const std::size_t rows = evosir_trials_rows(trials);
    for (std::size_t i = 0; i < rows; ++i) {
        uint64_t graph_seed, sim_seed, final_removed, peak, rewires, deletions;
        double ext_time;
        check(evosir_trials_row(trials, i, &graph_seed, &sim_seed, &final_removed, &peak,
                                &rewires, &deletions, &ext_time),
              "trials_row");
        std::vector<ordered_json> row;
        if (!sweep_param.empty())
            row.push_back(sweep_value);
        for (const ordered_json& cell :
             {ordered_json(i), ordered_json(sim_seed), ordered_json(p.n), ordered_json(p.mu),
              ordered_json(p.lambda), ordered_json(p.rho), ordered_json(m.model),
              ordered_json(m.variant), ordered_json(final_removed), ordered_json(peak),
              ordered_json(rewires), ordered_json(deletions), ordered_json(ext_time)})
            row.push_back(cell);
        t.rows.push_back(std::move(row));
    }
}

std::vector<std::string> trial_columns(const std::string& sweep_param) {
    std::vector<std::string> cols;
    if (!sweep_param.empty())
        cols.push_back(sweep_param);
    for (const char* c : {"trial", "seed", "n", "mu", "lambda", "rho", "model", "variant",
                          "final_removed", "peak_infected", "rewires", "deletions",
                          "extinction_time"})
        cols.emplace_back(c);
    return cols;
}

struct run_cmd {
    shared_opts shared;
    model_opts model;
    std::uint32_t trials = 200;
    double threshold = -1.0;
    std::string summary_out;
    std::string trajectories_out;

    int run(const CLI::App& cmd) {
        const ordered_json cfg = load_config(shared.config_path);
        cfg_override(cmd, cfg, "n", model.n);
        cfg_override(cmd, cfg, "mu", model.mu);
        cfg_override(cmd, cfg, "lambda", model.lambda);
        cfg_override(cmd, cfg, "rho", model.rho);
        cfg_override(cmd, cfg, "model", model.model);
        cfg_override(cmd, cfg, "variant", model.variant);
        cfg_override(cmd, cfg, "trials", trials);
        cfg_override(cmd, cfg, "threshold", threshold);
        if (trials < 1)
            die(exit_bad_config, "trials must be >= 1");

        const evosir_params p = to_params(model);
        trials_ptr result(nullptr, evosir_trials_free);
        {
            evosir_trials* raw = nullptr;
            check(evosir_run_trials(&p, trials, shared.seed, threshold, shared.jobs, &raw),
                  "run_trials");
            result.reset(raw);
        }

        ordered_json echo = model_config(model);
        echo["trials"] = trials;
        echo["threshold"] = threshold;
        echo["seed"] = shared.seed;

        table t;
        t.columns = trial_columns("");
        append_trial_rows(t, p, model, result.get(), 0.0, "");
        write_output(shared.out, shared.format, "run", echo, t);

        if (!summary_out.empty()) {
            evosir_trial_summary s;
            check(evosir_trials_summary(result.get(), &s), "trials_summary");
            table st;
            st.columns = {"trials",      "threshold_fraction",       "large_count",
                          "large_fraction", "large_fraction_se",
                          "mean_final_fraction_large", "se_final_fraction_large"};
            st.add_row({trials, s.threshold_fraction, s.large_count, s.large_fraction,
                        s.large_fraction_se, s.mean_final_fraction_large,
                        s.se_final_fraction_large});
            write_output(summary_out, shared.format, "run-summary", echo, st);
        }

        if (!trajectories_out.empty()) {
            table tt;
            tt.columns = {"trial", "t", "S", "I", "R"};
            evosir_sim_options so;
            evosir_sim_options_init(&so);
            for (std::uint32_t i = 0; i < trials; ++i) {
                rng_ptr grng(evosir_rng_new(evosir_derive_seed(shared.seed, 2ull * i)),
                             evosir_rng_free);
                evosir_graph* graw = nullptr;
                check(evosir_graph_generate_er(p.n, p.mu, grng.get(), &graw), "generate_er");
                graph_ptr g(graw, evosir_graph_free);
                evosir_outcome* oraw = nullptr;
                check(evosir_sim_run(&p, g.get(), evosir_derive_seed(shared.seed, 2ull * i + 1),
                                     &so, &oraw),
                      "sim_run");
                outcome_ptr o(oraw, evosir_outcome_free);
                const double* ts;
                const uint32_t *ss, *is, *rs;
                check(evosir_outcome_trajectory(o.get(), &ts, &ss, &is, &rs), "trajectory");
                const std::size_t len = evosir_outcome_trajectory_len(o.get());
                for (std::size_t k = 0; k < len; ++k)
                    tt.add_row({i, ts[k], ss[k], is[k], rs[k]});
            }
            write_output(trajectories_out, shared.format, "run-trajectories", echo, tt);
        }
        return exit_ok;
    }
};

struct sweep_cmd {
    shared_opts shared;
    model_opts model;
    std::uint32_t trials = 200;
    double threshold = -1.0;
    std::string sweep_spec;
    std::string summary_out;

    int run(const CLI::App& cmd) {
        const ordered_json cfg = load_config(shared.config_path);
        cfg_override(cmd, cfg, "n", model.n);
        cfg_override(cmd, cfg, "mu", model.mu);
        cfg_override(cmd, cfg, "lambda", model.lambda);
        cfg_override(cmd, cfg, "rho", model.rho);
        cfg_override(cmd, cfg, "model", model.model);
        cfg_override(cmd, cfg, "variant", model.variant);
        cfg_override(cmd, cfg, "trials", trials);
        cfg_override(cmd, cfg, "threshold", threshold);
        cfg_override(cmd, cfg, "sweep", sweep_spec);
        if (sweep_spec.empty())
            die(exit_bad_config, "sweep requires --sweep param:min:max:steps");
        const sweep_axis axis = parse_sweep(sweep_spec);
        if (trials < 1)
            die(exit_bad_config, "trials must be >= 1");

        ordered_json echo = model_config(model);
        echo["trials"] = trials;
        echo["threshold"] = threshold;
        echo["seed"] = shared.seed;
        echo["sweep"] = sweep_spec;

        table scatter;
        scatter.columns = trial_columns(axis.param);
        table summary;
        summary.columns = {axis.param,
                           "trials",
                           "threshold_fraction",
                           "large_count",
                           "large_fraction",
                           "large_fraction_se",
                           "mean_final_fraction_large",
                           "se_final_fraction_large",
                           "analytic_p_large",
                           "analytic_final_size",
                           "analytic_evo_final_size"};

        for (std::uint32_t i = 0; i < axis.steps; ++i) {
            evosir_params p = to_params(model);
            apply_axis(p, axis, i);
            const std::uint64_t point_seed = evosir_derive_seed(shared.seed, i);
            evosir_trials* raw = nullptr;
            const evosir_status st =
                evosir_run_trials(&p, trials, point_seed, threshold, shared.jobs, &raw);
            if (st != EVOSIR_OK) {
                // flag the point and keep sweeping
                std::cerr << "sweep point " << axis.param << "=" << axis.value(i)
                          << " failed: " << evosir_last_error() << "\n";
                summary.add_row({axis.value(i), trials, ordered_json(), 0, ordered_json(),
                                 ordered_json(), ordered_json(), ordered_json(), ordered_json(),
                                 ordered_json(), ordered_json()});
                continue;
            }
            trials_ptr result(raw, evosir_trials_free);
            append_trial_rows(scatter, p, model, result.get(), axis.value(i), axis.param);

            evosir_trial_summary s;
            check(evosir_trials_summary(result.get(), &s), "trials_summary");
            evosir_analytic_report rep;
            check(evosir_analytic(&p, &rep), "analytic");
            summary.add_row({axis.value(i), trials, s.threshold_fraction, s.large_count,
                             s.large_fraction, s.large_fraction_se, s.mean_final_fraction_large,
                             s.se_final_fraction_large, rep.p_large, rep.final_size,
                             rep.evo_final_size});
        }
        write_output(shared.out, shared.format, "sweep", echo, scatter);
        if (!summary_out.empty())
            write_output(summary_out, shared.format, "sweep-summary", echo, summary);
        return exit_ok;
    }
};

// ------------------------------------------------------------------ ode

struct ode_cmd {
    shared_opts shared;
    model_opts model;
    std::string system = "sk";
    double beta = 2.0;
    double gamma = 1.0;
    double i0 = -1.0; // default depends on the system
    double dt = 1e-3;
    double t_end = 30.0;
    std::uint32_t k_max = 0; // 0 -> 8 * mu
    double tau = 0.5;
    double alpha = 0.25;

    int run(const CLI::App& cmd) {
        const ordered_json cfg = load_config(shared.config_path);
        cfg_override(cmd, cfg, "system", system);
        cfg_override(cmd, cfg, "n", model.n);
        cfg_override(cmd, cfg, "mu", model.mu);
        cfg_override(cmd, cfg, "lambda", model.lambda);
        cfg_override(cmd, cfg, "rho", model.rho);
        cfg_override(cmd, cfg, "model", model.model);
        cfg_override(cmd, cfg, "variant", model.variant);
        cfg_override(cmd, cfg, "beta", beta);
        cfg_override(cmd, cfg, "gamma", gamma);
        cfg_override(cmd, cfg, "i0", i0);
        cfg_override(cmd, cfg, "dt", dt);
        cfg_override(cmd, cfg, "t-end", t_end);
        cfg_override(cmd, cfg, "k-max", k_max);
        cfg_override(cmd, cfg, "tau", tau);
        cfg_override(cmd, cfg, "alpha", alpha);

        ordered_json echo;
        echo["system"] = system;
        evosir_series* raw = nullptr;
        if (system == "homogeneous") {
            const double n = static_cast<double>(model.n);
            const double seed_i0 = i0 > 0 ? i0 : 1e-4 * n;
            echo["n"] = model.n;
            echo["beta"] = beta;
            echo["i0"] = seed_i0;
            echo["dt"] = dt;
            echo["t_end"] = t_end;
            check(evosir_ode_homogeneous(beta, n, seed_i0, t_end, dt, &raw), "ode homogeneous");
        } else if (system == "sk" || system == "sk_rewire") {
            evosir_params p = to_params(model);
            const double seed_i0 = i0 > 0 ? i0 : 1e-4 * static_cast<double>(p.n);
            const std::uint32_t km = k_max > 0 ? k_max : static_cast<std::uint32_t>(8.0 * p.mu);
            echo.update(model_config(model));
            echo["i0"] = seed_i0;
            echo["k_max"] = km;
            echo["dt"] = dt;
            echo["t_end"] = t_end;
            if (system == "sk")
                check(evosir_ode_sk(&p, seed_i0, km, dt, t_end, &raw), "ode sk");
            else
                check(evosir_ode_sk_rewire(&p, seed_i0, km, dt, t_end, &raw), "ode sk_rewire");
        } else if (system == "miller_volz") {
            const double seed_i0 = i0 > 0 ? i0 : 1e-4;
            echo["beta"] = beta;
            echo["gamma"] = gamma;
            echo["mu"] = model.mu;
            echo["i0"] = seed_i0;
            echo["dt"] = dt;
            echo["t_end"] = t_end;
            check(evosir_ode_miller_volz(beta, gamma, model.mu, seed_i0, dt, t_end, &raw),
                  "ode miller_volz");
        } else if (system == "ml_pair") {
            echo["mu"] = model.mu;
            echo["tau"] = tau;
            echo["alpha"] = alpha;
            echo["dt"] = dt;
            check(evosir_ode_ml_pair(model.mu, tau, alpha, dt, &raw), "ode ml_pair");
        } else {
            die(exit_bad_config, "unknown ode system '" + system + "'");
        }
        series_ptr series(raw, evosir_series_free);
        write_output(shared.out, shared.format, "ode", echo, series_to_table(series.get()));
        return exit_ok;
    }
};

// -------------------------------------------------------------- explore

struct explore_cmd {
    shared_opts shared;
    std::string variant = "fixed";
    std::uint64_t n = 100000;
    double mu_bar = 2.0;
    double mu = 5.0;
    double lambda = 1.0;
    double tau = 0.5;
    double alpha = 0.25;
    bool full = false;

    int run(const CLI::App& cmd) {
        const ordered_json cfg = load_config(shared.config_path);
        cfg_override(cmd, cfg, "variant", variant);
        cfg_override(cmd, cfg, "n", n);
        cfg_override(cmd, cfg, "mu-bar", mu_bar);
        cfg_override(cmd, cfg, "mu", mu);
        cfg_override(cmd, cfg, "lambda", lambda);
        cfg_override(cmd, cfg, "tau", tau);
        cfg_override(cmd, cfg, "alpha", alpha);

        ordered_json echo;
        echo["variant"] = variant;
        echo["n"] = n;
        echo["seed"] = shared.seed;
        echo["full"] = full;
        const int stop = full ? 0 : 1;
        evosir_series* raw = nullptr;
        if (variant == "fixed") {
            echo["mu_bar"] = mu_bar;
            check(evosir_explore_fixed(n, mu_bar, shared.seed, stop, &raw), "explore fixed");
        } else if (variant == "exponential") {
            echo["mu"] = mu;
            echo["lambda"] = lambda;
            check(evosir_explore_exponential(n, mu, lambda, shared.seed, stop, &raw),
                  "explore exponential");
        } else if (variant == "rewiring") {
            echo["mu"] = mu;
            echo["tau"] = tau;
            echo["alpha"] = alpha;
            check(evosir_explore_rewiring(n, mu, tau, alpha, shared.seed, stop, &raw),
                  "explore rewiring");
        } else {
            die(exit_bad_config, "unknown exploration variant '" + variant + "'");
        }
        series_ptr series(raw, evosir_series_free);
        write_output(shared.out, shared.format, "explore", echo, series_to_table(series.get()));
        return exit_ok;
    }
};

// ------------------------------------------------------------ percolate

struct percolate_cmd {
    shared_opts shared;
    std::uint64_t n = 10000;
    double mu = 5.0;
    double tau = 0.5;
    std::uint32_t clusters = 0;
    std::string export_edges;

    int run(const CLI::App& cmd) {
        const ordered_json cfg = load_config(shared.config_path);
        cfg_override(cmd, cfg, "n", n);
        cfg_override(cmd, cfg, "mu", mu);
        cfg_override(cmd, cfg, "tau", tau);
        cfg_override(cmd, cfg, "clusters", clusters);

        rng_ptr rng(evosir_rng_new(shared.seed), evosir_rng_free);
        evosir_graph* graw = nullptr;
        check(evosir_graph_generate_er(n, mu, rng.get(), &graw), "generate_er");
        graph_ptr g(graw, evosir_graph_free);
        evosir_graph* praw = nullptr;
        check(evosir_graph_percolate(g.get(), tau, rng.get(), &praw), "percolate");
        graph_ptr reduced(praw, evosir_graph_free);

        size_t count = 0;
        double giant = 0.0;
        check(evosir_graph_components(reduced.get(), nullptr, 0, &count, &giant), "components");

        ordered_json echo;
        echo["n"] = n;
        echo["mu"] = mu;
        echo["tau"] = tau;
        echo["seed"] = shared.seed;
        echo["clusters"] = clusters;

        table t;
        t.columns = {"n",          "mu",      "tau",           "edges_original",
                     "edges_kept", "components", "giant_fraction"};
        t.add_row({n, mu, tau, evosir_graph_edge_count(g.get()),
                   evosir_graph_edge_count(reduced.get()), count, giant});
        write_output(shared.out, shared.format, "percolate", echo, t);

        if (clusters > 0) {
            table ct;
            ct.columns = {"draw", "cluster_size"};
            for (std::uint32_t i = 0; i < clusters; ++i) {
                uint64_t size = 0;
                check(evosir_graph_cluster_size(reduced.get(), rng.get(), &size), "cluster_size");
                ct.add_row({i, size});
            }
            const std::string path =
                shared.out == "-" ? std::string("-") : shared.out + ".clusters";
            write_output(path, shared.format, "percolate-clusters", echo, ct);
        }
        if (!export_edges.empty())
            check(evosir_graph_write_edge_list(reduced.get(), export_edges.c_str()),
                  "write_edge_list");
        return exit_ok;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIR epidemics on Erdos-Renyi graphs with edge deletion or rewiring"};
    app.require_subcommand(1);
    app.set_version_flag("--version", evosir_version());

    analytic_cmd analytic;
    auto* c_analytic = app.add_subcommand("analytic", "closed-form tables over a sweep axis");
    add_shared(c_analytic, analytic.shared);
    add_model(c_analytic, analytic.model, false);
    c_analytic->add_option("--sweep", analytic.sweep_spec, "axis as param:min:max:steps");

    run_cmd runc;
    auto* c_run = app.add_subcommand("run", "Monte Carlo trials at one parameter point");
    add_shared(c_run, runc.shared);
    add_model(c_run, runc.model);
    c_run->add_option("--trials", runc.trials, "number of trials")->capture_default_str();
    c_run->add_option("--threshold", runc.threshold,
                      "large-epidemic cut as fraction of n; negative = analytic default");
    c_run->add_option("--summary-out", runc.summary_out, "also write the summary table here");
    c_run->add_option("--trajectories-out", runc.trajectories_out,
                      "also write per-trial trajectories here");

    sweep_cmd sweep;
    auto* c_sweep = app.add_subcommand("sweep", "Monte Carlo scatter along a parameter axis");
    add_shared(c_sweep, sweep.shared);
    add_model(c_sweep, sweep.model);
    c_sweep->add_option("--trials", sweep.trials, "trials per sweep point")->capture_default_str();
    c_sweep->add_option("--threshold", sweep.threshold,
                        "large-epidemic cut as fraction of n; negative = analytic default");
    c_sweep->add_option("--sweep", sweep.sweep_spec, "axis as param:min:max:steps");
    c_sweep->add_option("--summary-out", sweep.summary_out,
                        "write the per-point summary (with analytic overlays) here");

    ode_cmd ode;
    auto* c_ode = app.add_subcommand("ode", "deterministic limit systems");
    add_shared(c_ode, ode.shared);
    add_model(c_ode, ode.model);
    c_ode->add_option("--system", ode.system,
                      "homogeneous | sk | sk_rewire | miller_volz | ml_pair")
        ->capture_default_str();
    c_ode->add_option("--beta", ode.beta, "infection rate (homogeneous, miller_volz)");
    c_ode->add_option("--gamma", ode.gamma, "recovery rate (miller_volz)");
    c_ode->add_option("--i0", ode.i0, "initial infected (count, or fraction for miller_volz)");
    c_ode->add_option("--dt", ode.dt, "integrator step")->capture_default_str();
    c_ode->add_option("--t-end", ode.t_end, "integration horizon")->capture_default_str();
    c_ode->add_option("--k-max", ode.k_max, "histogram truncation, 0 = 8*mu");
    c_ode->add_option("--tau", ode.tau, "transmissibility (ml_pair)");
    c_ode->add_option("--alpha", ode.alpha, "rewiring loss probability (ml_pair)");

    explore_cmd explore;
    auto* c_explore = app.add_subcommand("explore", "exploration process traces");
    add_shared(c_explore, explore.shared);
    c_explore->add_option("--variant", explore.variant, "fixed | exponential | rewiring")
        ->capture_default_str();
    c_explore->add_option("--n", explore.n, "population size")->capture_default_str();
    c_explore->add_option("--mu-bar", explore.mu_bar, "thinned mean degree (fixed variant)");
    c_explore->add_option("--mu", explore.mu, "mean degree (exponential/rewiring)");
    c_explore->add_option("--lambda", explore.lambda, "infection rate (exponential variant)");
    c_explore->add_option("--tau", explore.tau, "transmissibility (rewiring variant)");
    c_explore->add_option("--alpha", explore.alpha, "rewiring loss (rewiring variant)");
    c_explore->add_flag("--full", explore.full, "run all n steps instead of stopping at the giant");

    percolate_cmd percolate;
    auto* c_percolate = app.add_subcommand("percolate", "bond percolation on a fresh G(n, mu/n)");
    add_shared(c_percolate, percolate.shared);
    c_percolate->add_option("--n", percolate.n, "population size")->capture_default_str();
    c_percolate->add_option("--mu", percolate.mu, "mean degree")->capture_default_str();
    c_percolate->add_option("--tau", percolate.tau, "edge retention probability")
        ->capture_default_str();
    c_percolate->add_option("--clusters", percolate.clusters,
                            "sample this many random-vertex cluster sizes");
    c_percolate->add_option("--export-edges", percolate.export_edges,
                            "write the reduced edge list to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_bad_config;
    }

    try {
        if (c_analytic->parsed())
            return analytic.run(*c_analytic);
        if (c_run->parsed())
            return runc.run(*c_run);
        if (c_sweep->parsed())
            return sweep.run(*c_sweep);
        if (c_ode->parsed())
            return ode.run(*c_ode);
        if (c_explore->parsed())
            return explore.run(*c_explore);
        if (c_percolate->parsed())
            return percolate.run(*c_percolate);
    } catch (const cli_error& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_config;
    }
    return exit_bad_config;
}
