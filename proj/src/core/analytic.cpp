#include "analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace evosir {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double tau_fixed(double lambda, double rho) {
    if (lambda <= 0.0)
        return 0.0;
    if (rho <= 0.0)
        return -std::expm1(-lambda);
    return lambda / (lambda + rho) * (-std::expm1(-(lambda + rho)));
}

double tau_exponential(double lambda, double rho) {
    if (lambda <= 0.0)
        return 0.0;
    return lambda / (lambda + 1.0 + rho);
}

double tau_for(infection_model model, double lambda, double rho) {
    return model == infection_model::fixed_unit_time ? tau_fixed(lambda, rho)
                                                     : tau_exponential(lambda, rho);
}

// Expanding bisection for an increasing-or-decreasing h with h(lo) known sign.
double bisect(const std::function<double(double)>& h, double lo, double hi, double xtol) {
    double flo = h(lo);
    double fhi = h(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw numeric_error("bisect: no sign change in bracket", std::min(std::abs(flo), std::abs(fhi)));
    for (int i = 0; i < 200 && hi - lo > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = h(mid);
        if (fm == 0.0)
            return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

void epidemic_params::validate() const {
    if (!(mu > 0.0))
        throw domain_error("params: mean degree mu must be > 0");
    if (lambda < 0.0)
        throw domain_error("params: infection rate lambda must be >= 0");
    if (rho < 0.0)
        throw domain_error("params: removal rate rho must be >= 0");
}

double transmissibility(const epidemic_params& p) {
    p.validate();
    return tau_for(p.model, p.lambda, p.effective_rho());
}

double base_transmissibility(const epidemic_params& p) {
    p.validate();
    return tau_for(p.model, p.lambda, 0.0);
}

double rewiring_loss(const epidemic_params& p) {
    p.validate();
    if (p.model == infection_model::exponential_unit_mean)
        return p.effective_rho() / (p.effective_rho() + 1.0 + p.lambda);
    const double tau = tau_fixed(p.lambda, 0.0);
    if (tau <= 0.0)
        return 0.0;
    return 1.0 - tau_fixed(p.lambda, p.effective_rho()) / tau;
}

double critical_lambda(double mu, double rho, infection_model model) {
    if (!(mu > 0.0))
        throw domain_error("critical_lambda: mu must be > 0");
    if (rho < 0.0)
        throw domain_error("critical_lambda: rho must be >= 0");
    if (mu <= 1.0)
        throw no_epidemic_error("critical_lambda: no epidemic possible for mu <= 1");
    if (model == infection_model::exponential_unit_mean)
        return (1.0 + rho) / (mu - 1.0);
    // mu * tau^f_r(lambda) is increasing in lambda with limit mu > 1.
    auto h = [&](double lambda) { return mu * tau_fixed(lambda, rho) - 1.0; };
    double hi = 1.0;
    while (h(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e9)
            throw no_epidemic_error("critical_lambda: mu * tau stays below 1");
    }
    return bisect(h, 0.0, hi, 1e-9);
}

double critical_rho(double mu, double lambda, infection_model model) {
    if (!(mu > 0.0))
        throw domain_error("critical_rho: mu must be > 0");
    if (lambda < 0.0)
        throw domain_error("critical_rho: lambda must be >= 0");
    const double m0 = mu * tau_for(model, lambda, 0.0);
    if (m0 < 1.0)
        throw no_epidemic_error("critical_rho: subcritical even without removal");
    if (model == infection_model::exponential_unit_mean)
        return std::max(0.0, mu * lambda - lambda - 1.0);
    if (m0 == 1.0)
        return 0.0;
    auto h = [&](double rho) { return mu * tau_fixed(lambda, rho) - 1.0; };
    double hi = 1.0;
    while (h(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e9)
            throw numeric_error("critical_rho: bracket expansion failed", h(hi));
    }
    return bisect(h, 0.0, hi, 1e-9);
}

double gf_fixed_point(const std::function<double(double)>& gf, double tol) {
    // Iteration from 0 converges monotonically to the smallest fixed point of
    // an increasing gf; near criticality it stalls and bisection takes over.
    double z = 0.0;
    const int cap = 100000;
    for (int i = 0; i < cap; ++i) {
        const double next = gf(z);
        if (std::abs(next - z) < 1e-15) {
            z = next;
            break;
        }
        z = next;
    }
    double residual = std::abs(gf(z) - z);
    if (residual < tol)
        return z;

    const double top = 1.0 - 1e-12;
    if (gf(top) - top > 0.0) {
        // no subunit crossing left of 1: the smallest fixed point is 1 itself
        residual = std::abs(gf(1.0) - 1.0);
        if (residual >= tol)
            throw numeric_error("gf_fixed_point: gf(1) != 1", residual);
        return 1.0;
    }
    auto h = [&](double x) { return gf(x) - x; };
    const double z0 = bisect(h, z, top, 1e-15);
    residual = std::abs(gf(z0) - z0);
    if (residual >= tol)
        throw numeric_error("gf_fixed_point: residual above tolerance", residual);
    return z0;
}

namespace detail {

namespace {
double simpson_rec(const std::function<double(double)>& f, double a, double m, double b,
                   double fa, double fm, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw numeric_error("adaptive_simpson: depth limit reached", std::abs(delta));
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 60);
}

} // namespace detail

double offspring_gf(const epidemic_params& p, double z) {
    const double rho = p.effective_rho();
    if (p.model == infection_model::fixed_unit_time)
        return std::exp(-p.mu * tau_fixed(p.lambda, rho) * (1.0 - z));
    if (p.lambda <= 0.0)
        return 1.0;
    const double r = p.lambda + rho;
    const double mu_r = p.mu * p.lambda / r;
    const double c = mu_r * (1.0 - z);
    const double integral = detail::adaptive_simpson(
        [c, r](double x) { return std::exp(c * std::pow(x, r)); }, 0.0, 1.0, 1e-10);
    return std::exp(-c) * integral;
}

double epidemic_probability(const epidemic_params& p) {
    p.validate();
    const double mean = p.mu * transmissibility(p);
    if (mean <= 1.0)
        return 0.0;
    const double z0 = gf_fixed_point([&](double z) { return offspring_gf(p, z); }, 1e-12);
    return 1.0 - z0;
}

double final_size(const epidemic_params& p) {
    p.validate();
    const double m = p.mu * transmissibility(p);
    if (m <= 1.0)
        return 0.0;
    const double z0 = gf_fixed_point([m](double z) { return std::exp(-m * (1.0 - z)); }, 1e-12);
    return 1.0 - z0;
}

double evo_final_size_approx(const epidemic_params& p, bool* below_critical) {
    p.validate();
    const double tau = base_transmissibility(p);
    const double alpha = rewiring_loss(p);
    if (below_critical)
        *below_critical = false;
    if (p.mu * tau * (1.0 - alpha) <= 1.0) {
        if (below_critical)
            *below_critical = true;
        return 0.0;
    }
    const double a = tau * (p.mu * (1.0 - alpha) + alpha);
    const double b = tau * alpha;
    auto u = [a, b](double t) { return a / (b + (a - b) * std::exp(a * t)); };
    // h(0) = 0 and h is convex with h'(0) = 1 - mu*tau*(1-alpha) < 0, so the
    // unique positive root lies in (0, 1); keep h(lo) <= 0 < h(hi).
    auto h = [&](double t) { return u(t) - (1.0 - t); };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double r0_branching(double mu, double sigma2, double lambda, double rho) {
    if (!(mu > 0.0))
        throw domain_error("r0_branching: mu must be > 0");
    if (sigma2 < 0.0)
        throw domain_error("r0_branching: sigma2 must be >= 0");
    if (lambda < 0.0 || rho < 0.0)
        throw domain_error("r0_branching: rates must be >= 0");
    return lambda / (lambda + 1.0 + rho) * (mu - 1.0 + sigma2 / mu);
}

analytic_report analyze(const epidemic_params& p) {
    p.validate();
    analytic_report rep;
    rep.tau = transmissibility(p);
    rep.alpha = rewiring_loss(p);
    try {
        rep.lambda_c = critical_lambda(p.mu, p.effective_rho(), p.model);
    } catch (const no_epidemic_error&) {
        rep.lambda_c = inf;
    }
    rep.supercritical = p.mu * rep.tau > 1.0;
    rep.p_large = epidemic_probability(p);
    rep.z0 = 1.0 - rep.p_large;
    rep.final_size = final_size(p);
    rep.evo_final_size = evo_final_size_approx(p);
    return rep;
}

} // namespace evosir
