#include "ode.hpp"

#include <cmath>

#include "errors.hpp"

namespace evosir {

const std::vector<double>& ode_series::col(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return cols[i];
    throw domain_error("ode_series: no column named " + name);
}

namespace {

using deriv_fn = std::function<void(double, const std::vector<double>&, std::vector<double>&)>;

class rk4 {
  public:
    explicit rk4(std::size_t dim) : k1_(dim), k2_(dim), k3_(dim), k4_(dim), tmp_(dim) {}

    void step(const deriv_fn& f, double t, double dt, std::vector<double>& y) {
        const std::size_t d = y.size();
        f(t, y, k1_);
        for (std::size_t i = 0; i < d; ++i)
            tmp_[i] = y[i] + 0.5 * dt * k1_[i];
        f(t + 0.5 * dt, tmp_, k2_);
        for (std::size_t i = 0; i < d; ++i)
            tmp_[i] = y[i] + 0.5 * dt * k2_[i];
        f(t + 0.5 * dt, tmp_, k3_);
        for (std::size_t i = 0; i < d; ++i)
            tmp_[i] = y[i] + dt * k3_[i];
        f(t + dt, tmp_, k4_);
        for (std::size_t i = 0; i < d; ++i)
            y[i] += dt / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }

  private:
    std::vector<double> k1_, k2_, k3_, k4_, tmp_;
};

void check_positive_step(double dt, double t_end) {
    if (!(dt > 0.0) || !(t_end >= 0.0))
        throw domain_error("integrator: dt must be > 0 and t_end >= 0");
}

} // namespace

ode_series integrate_homogeneous(double beta, double n, double i0, double t_end, double dt) {
    check_positive_step(dt, t_end);
    if (!(n > 0.0) || !(i0 > 0.0) || i0 > n || beta < 0.0)
        throw domain_error("integrate_homogeneous: need n > 0, 0 < i0 <= n, beta >= 0");
    std::vector<double> y = {n - i0, i0, 0.0};
    deriv_fn f = [beta, n](double, const std::vector<double>& s, std::vector<double>& d) {
        const double flow = beta * s[0] * s[1] / n;
        d[0] = -flow;
        d[1] = flow - s[1];
        d[2] = s[1];
    };
    ode_series out;
    out.names = {"t", "S", "I", "R"};
    out.cols.resize(4);
    rk4 stepper(3);
    const auto record = [&](double t) {
        out.cols[0].push_back(t);
        out.cols[1].push_back(y[0]);
        out.cols[2].push_back(y[1]);
        out.cols[3].push_back(y[2]);
    };
    record(0.0);
    const std::size_t steps = static_cast<std::size_t>(std::ceil(t_end / dt));
    for (std::size_t s = 0; s < steps; ++s) {
        stepper.step(f, s * dt, dt, y);
        if (std::abs(y[0] + y[1] + y[2] - n) > 1e-6 * n)
            throw numeric_error("integrate_homogeneous: conservation drift",
                                std::abs(y[0] + y[1] + y[2] - n));
        record((s + 1) * dt);
    }
    return out;
}

namespace {

// Shared body of the S_k systems; `rewire` switches on the rho channel.
ode_series integrate_sk_impl(const epidemic_params& p, double i0, unsigned k_max, double dt,
                             double t_end, bool rewire) {
    p.validate();
    check_positive_step(dt, t_end);
    if (p.n == 0)
        throw domain_error("integrate_sk: params.n must be set");
    const double n = static_cast<double>(p.n);
    if (!(i0 > 0.0) || i0 > n)
        throw domain_error("integrate_sk: need 0 < i0 <= n");
    if (k_max < 2)
        throw domain_error("integrate_sk: k_max too small");
    const double lambda = p.lambda;
    const double rho = rewire ? p.effective_rho() : 0.0;

    // layout: y[0..k_max] = S_k, then I, R, F, and mu_t when rewiring
    const std::size_t iI = k_max + 1, iR = k_max + 2, iF = k_max + 3, iMu = k_max + 4;
    std::vector<double> y(rewire ? k_max + 5 : k_max + 4, 0.0);
    y[1] = p.mu * i0;
    y[0] = n - i0 - y[1];
    y[iI] = i0;
    y[iF] = y[1];
    if (rewire)
        y[iMu] = p.mu;
    if (y[0] < 0.0)
        throw domain_error("integrate_sk: i0 too large for the initial histogram");

    deriv_fn f = [&, n, lambda, rho, k_max, iI, iR, iF, iMu,
                  rewire](double, const std::vector<double>& s, std::vector<double>& d) {
        double flux = 0.0; // F recomputed from the histogram
        for (unsigned k = 1; k <= k_max; ++k)
            flux += k * s[k];
        const double promote = lambda * flux * (rewire ? s[iMu] : p.mu) / n;
        const double demote = 1.0 + (rewire ? rho * (1.0 - s[iI] / n) : 0.0);
        double dF = 0.0;
        for (unsigned k = 0; k <= k_max; ++k) {
            const double below = k > 0 ? s[k - 1] : 0.0;
            const double above = k < k_max ? s[k + 1] : 0.0;
            d[k] = -lambda * k * s[k] + promote * (below - s[k]) +
                   demote * ((k + 1) * above - static_cast<double>(k) * s[k]);
            dF += k * d[k];
        }
        d[iI] = lambda * flux - s[iI];
        d[iR] = s[iI];
        d[iF] = dF;
        if (rewire)
            d[iMu] = rho * flux / n * (1.0 - (s[iI] + s[iR]) / n);
    };

    ode_series out;
    out.names = {"t", "S", "I", "R", "F"};
    if (rewire)
        out.names.push_back("mu_t");
    out.cols.resize(out.names.size());
    const auto record = [&](double t) {
        double total_s = 0.0;
        for (unsigned k = 0; k <= k_max; ++k)
            total_s += y[k];
        out.cols[0].push_back(t);
        out.cols[1].push_back(total_s);
        out.cols[2].push_back(y[iI]);
        out.cols[3].push_back(y[iR]);
        out.cols[4].push_back(y[iF]);
        if (rewire)
            out.cols[5].push_back(y[iMu]);
    };
    record(0.0);
    rk4 stepper(y.size());
    const std::size_t steps = static_cast<std::size_t>(std::ceil(t_end / dt));
    for (std::size_t s = 0; s < steps; ++s) {
        stepper.step(f, s * dt, dt, y);
        if (y[k_max] > 1e-8 * n)
            throw numeric_error("integrate_sk: histogram tail overflow, increase k_max",
                                y[k_max] / n);
        double flux = 0.0;
        for (unsigned k = 1; k <= k_max; ++k)
            flux += k * y[k];
        if (std::abs(flux - y[iF]) > 1e-8 * n)
            throw numeric_error("integrate_sk: tracked F drifted from the histogram",
                                std::abs(flux - y[iF]) / n);
        record((s + 1) * dt);
    }
    return out;
}

} // namespace

ode_series integrate_sk(const epidemic_params& p, double i0, unsigned k_max, double dt,
                        double t_end) {
    return integrate_sk_impl(p, i0, k_max, dt, t_end, false);
}

ode_series integrate_sk_rewire(const epidemic_params& p, double i0, unsigned k_max, double dt,
                               double t_end) {
    return integrate_sk_impl(p, i0, k_max, dt, t_end, true);
}

ode_series integrate_miller_volz(double beta, double gamma,
                                 const std::function<double(double)>& psi,
                                 const std::function<double(double)>& dpsi, double i0, double dt,
                                 double t_end) {
    check_positive_step(dt, t_end);
    if (beta < 0.0 || !(gamma > 0.0) || !(i0 > 0.0) || i0 >= 1.0)
        throw domain_error("integrate_miller_volz: need beta >= 0, gamma > 0, i0 in (0,1)");
    const double dpsi1 = dpsi(1.0);
    if (!(dpsi1 > 0.0))
        throw domain_error("integrate_miller_volz: psi'(1) must be > 0");
    const double s0 = 1.0 - i0;
    std::vector<double> y = {1.0, 0.0}; // theta, R
    deriv_fn f = [&](double, const std::vector<double>& s, std::vector<double>& d) {
        const double theta = s[0];
        const double susceptible = s0 * psi(theta);
        const double infected = 1.0 - susceptible - s[1];
        d[0] = -beta * theta + beta * s0 * dpsi(theta) / dpsi1 + gamma * (1.0 - theta);
        d[1] = gamma * infected;
    };
    ode_series out;
    out.names = {"t", "S", "I", "R", "theta"};
    out.cols.resize(5);
    const auto record = [&](double t) {
        const double susceptible = s0 * psi(y[0]);
        out.cols[0].push_back(t);
        out.cols[1].push_back(susceptible);
        out.cols[2].push_back(1.0 - susceptible - y[1]);
        out.cols[3].push_back(y[1]);
        out.cols[4].push_back(y[0]);
    };
    record(0.0);
    rk4 stepper(2);
    const std::size_t steps = static_cast<std::size_t>(std::ceil(t_end / dt));
    for (std::size_t s = 0; s < steps; ++s) {
        stepper.step(f, s * dt, dt, y);
        if (!(y[0] > 0.0) || y[0] > 1.0 + 1e-9)
            throw numeric_error("integrate_miller_volz: theta left (0, 1]", y[0]);
        record((s + 1) * dt);
    }
    return out;
}

ode_series integrate_miller_volz_poisson(double beta, double gamma, double mu, double i0,
                                         double dt, double t_end) {
    if (!(mu > 0.0))
        throw domain_error("integrate_miller_volz: mu must be > 0");
    auto psi = [mu](double z) { return std::exp(-mu * (1.0 - z)); };
    auto dpsi = [mu](double z) { return mu * std::exp(-mu * (1.0 - z)); };
    return integrate_miller_volz(beta, gamma, psi, dpsi, i0, dt, t_end);
}

ode_series integrate_ml_pair(double mu, double tau, double alpha, double dt) {
    check_positive_step(dt, 1.0);
    if (!(mu > 0.0) || tau < 0.0 || tau > 1.0 || alpha < 0.0 || alpha >= 1.0)
        throw domain_error("integrate_ml_pair: need mu > 0, tau in [0,1], alpha in [0,1)");
    std::vector<double> y = {1.0, mu};
    deriv_fn f = [tau, alpha](double, const std::vector<double>& s, std::vector<double>& d) {
        const double flow = s[1] * tau * s[0];
        d[0] = -flow * (1.0 - alpha);
        d[1] = flow * alpha;
    };
    ode_series out;
    out.names = {"s", "u", "v"};
    out.cols.resize(3);
    const auto record = [&](double t) {
        out.cols[0].push_back(t);
        out.cols[1].push_back(y[0]);
        out.cols[2].push_back(y[1]);
    };
    record(0.0);
    rk4 stepper(2);
    const std::size_t steps = static_cast<std::size_t>(std::ceil(1.0 / dt));
    for (std::size_t s = 0; s < steps; ++s) {
        const double t = s * dt;
        const double h = std::min(dt, 1.0 - t);
        stepper.step(f, t, h, y);
        record(t + h);
        if (t + h >= 1.0)
            break;
    }
    return out;
}

double ml_pair_closed_form(double mu, double tau, double alpha, double t) {
    const double a = tau * (mu * (1.0 - alpha) + alpha);
    const double b = tau * alpha;
    return a / (b + (a - b) * std::exp(a * t));
}

} // namespace evosir
