#pragma once

#include <cstdint>
#include <functional>

#include "errors.hpp"

namespace evosir {

enum class infection_model { fixed_unit_time, exponential_unit_mean };
enum class dynamics_variant { static_sir, del_sir, evo_sir };

// Single source of all rates. `n` may be 0 for pure analytics.
struct epidemic_params {
    std::uint64_t n = 0;
    double mu = 0.0;     // mean degree, > 0
    double lambda = 0.0; // infection rate, >= 0
    double rho = 0.0;    // rewiring/deletion rate, >= 0
    infection_model model = infection_model::exponential_unit_mean;
    dynamics_variant variant = dynamics_variant::static_sir;

    // StaticSIR carries no removal clocks whatever rho says.
    double effective_rho() const {
        return variant == dynamics_variant::static_sir ? 0.0 : rho;
    }
    void validate() const;
};

struct analytic_report {
    double tau = 0.0;           // transmissibility with removal in the race
    double alpha = 0.0;         // probability removal preempts a transmission
    double lambda_c = 0.0;      // +inf when no epidemic is possible
    double z0 = 1.0;            // subunit fixed point of the offspring gf
    double p_large = 0.0;       // 1 - z0
    double final_size = 0.0;    // StaticSIR/delSIR prediction
    double evo_final_size = 0.0; // logistic-closure approximation for evoSIR
    bool supercritical = false;
};

// Probability an infection crosses a given S-I edge before recovery and
// before removal. Fixed time: lambda/(lambda+rho) * (1 - e^{-(lambda+rho)});
// exponential: lambda/(lambda+1+rho).
double transmissibility(const epidemic_params& p);

// Same with the removal clock switched off.
double base_transmissibility(const epidemic_params& p);

// alpha = 1 - tau_r / tau, the share of would-be transmissions that the
// removal clock eliminates.
double rewiring_loss(const epidemic_params& p);

// Root of mu * tau_r(lambda, rho) = 1. Exponential model closed form
// (1+rho)/(mu-1). Throws no_epidemic_error when mu <= 1.
double critical_lambda(double mu, double rho, infection_model model);

// Root of mu * tau_r(lambda, rho) = 1 in rho. Exponential closed form
// mu*lambda - lambda - 1. Throws no_epidemic_error when the process is
// subcritical already at rho = 0.
double critical_rho(double mu, double lambda, infection_model model);

// Smallest fixed point of a probability generating function on [0, 1].
// Returns 1 when the offspring mean is <= 1. For the degenerate gf(z) = z
// every point is fixed and the smallest, 0, is returned. Guarantees
// |gf(z0) - z0| < tol or throws numeric_error carrying the residual.
double gf_fixed_point(const std::function<double(double)>& gf, double tol = 1e-12);

// Offspring generating function of the number of direct infections caused by
// one infected on G(n, mu/n). Fixed times: exp(-mu tau_r (1-z)). Exponential
// times: e^{-c} * Int_0^1 exp(c x^r) dx with r = lambda+rho, c = mu_r(1-z),
// mu_r = mu lambda / r (the x = e^{-t} substitution keeps it bounded).
double offspring_gf(const epidemic_params& p, double z);

// 1 - z0 of the offspring generating function; 0 when subcritical.
double epidemic_probability(const epidemic_params& p);

// Limiting fraction infected in a large epidemic for StaticSIR and delSIR:
// 1 - z0 of exp(-mu tau_r (1-z)) = z with the model's tau_r.
double final_size(const epidemic_params& p);

// Approximate evoSIR final size: smallest t > 0 with u(t) = 1 - t for the
// logistic solution u(t) = A / (B + (A-B) e^{At}), A = tau[mu(1-alpha)+alpha],
// B = tau*alpha. Returns 0 and sets *below_critical when mu tau(1-alpha) <= 1.
double evo_final_size_approx(const epidemic_params& p, bool* below_critical = nullptr);

// Branching approximation to R0 on a graph with degree mean mu and variance
// sigma2: lambda/(lambda+1+rho) * (mu - 1 + sigma2/mu).
double r0_branching(double mu, double sigma2, double lambda, double rho);

analytic_report analyze(const epidemic_params& p);

namespace detail {
// Adaptive Simpson quadrature with absolute tolerance; throws numeric_error
// when the recursion depth limit is hit before reaching tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);
} // namespace detail

} // namespace evosir
