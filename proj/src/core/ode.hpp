#pragma once

#include <functional>
#include <string>
#include <vector>

#include "analytic.hpp"

namespace evosir {

// Column table produced by the integrators; col(0) is always the time axis.
struct ode_series {
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;

    std::size_t rows() const { return cols.empty() ? 0 : cols.front().size(); }
    const std::vector<double>& col(const std::string& name) const;
    double terminal(const std::string& name) const { return col(name).back(); }
};

// Homogeneous-mixing SIR: dS = -beta S I / n, dI = beta S I / n - I, dR = I.
// Columns: t, S, I, R. Throws numeric_error if S+I+R drifts beyond 1e-6 n.
ode_series integrate_homogeneous(double beta, double n, double i0, double t_end, double dt);

// Susceptible-degree system on G(n, mu/n): S_k = susceptibles with k infected
// neighbors, F = sum k S_k,
//   dS_k = -lambda k S_k + lambda F (mu/n)(S_{k-1} - S_k) + [(k+1)S_{k+1} - k S_k],
//   dI = lambda F - I, dR = I.
// Initial data: I=i0, S_1=mu*i0, S_0=n-i0-S_1. Columns: t, S, I, R, F.
// Throws numeric_error when the k_max tail grows past 1e-8 n.
ode_series integrate_sk(const epidemic_params& p, double i0, unsigned k_max, double dt,
                        double t_end);

// Same system with rewiring at rate rho: an extra demotion channel
// rho (1 - I/n) [(k+1)S_{k+1} - k S_k] (a rewire detaches the infected
// neighbor unless the new target is itself infected), the promotion factor
// mu/n replaced by the growing mean susceptible degree mu_t/n, and
//   d mu_t = (rho F / n)(1 - (I+R)/n).
// Columns: t, S, I, R, F, mu_t.
ode_series integrate_sk_rewire(const epidemic_params& p, double i0, unsigned k_max, double dt,
                               double t_end);

// Miller's edge-based ODE with degree generating function psi:
//   d theta = -beta theta + beta (1-i0) psi'(theta)/psi'(1) + gamma (1-theta),
// S = (1-i0) psi(theta), I = 1 - S - R, dR = gamma I. Fractions, not counts.
// Columns: t, S, I, R, theta. Throws numeric_error if theta leaves (0, 1].
ode_series integrate_miller_volz(double beta, double gamma,
                                 const std::function<double(double)>& psi,
                                 const std::function<double(double)>& dpsi, double i0, double dt,
                                 double t_end);

// Poisson(mu) degree distribution convenience overload.
ode_series integrate_miller_volz_poisson(double beta, double gamma, double mu, double i0,
                                         double dt, double t_end);

// Unexplored-mass pair du = -v tau u (1-alpha), dv = v tau u alpha on s in
// [0,1] from (u,v) = (1, mu). Columns: s, u, v.
ode_series integrate_ml_pair(double mu, double tau, double alpha, double dt);

// Logistic closed form of the pair system, u(t) = A / (B + (A-B) e^{At}).
double ml_pair_closed_form(double mu, double tau, double alpha, double t);

} // namespace evosir
