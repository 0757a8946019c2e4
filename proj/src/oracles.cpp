#include "solow/oracles.hpp"

#include "solow/errors.hpp"
#include "solow/special_functions.hpp"

#include <cmath>
#include <sstream>

namespace solow {

std::string_view to_string(TrajectoryMethod m) {
    switch (m) {
        case TrajectoryMethod::ExactClassical: return "exact-classical";
        case TrajectoryMethod::AbmFractional: return "abm-fractional";
        case TrajectoryMethod::Series: return "series";
    }
    return "unknown";
}

double exact_classical_value(const ModelParams& params, double t) {
    const double one_minus_mu = 1.0 - params.mu;
    const double ratio = params.p / params.q;
    const double v = ratio + (std::pow(params.k0, one_minus_mu) - ratio) * std::exp(-params.q * one_minus_mu * t);
    return std::pow(v, 1.0 / one_minus_mu);
}

Trajectory solve_exact_classical(const ModelParams& params, std::span<const double> times) {
    params.validate();
    if (params.alpha != 1.0) {
        throw InvalidArgument("exact classical solution requires alpha == 1");
    }
    Trajectory traj;
    traj.method = TrajectoryMethod::ExactClassical;
    traj.times.assign(times.begin(), times.end());
    traj.values.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
            throw InvalidArgument("sample times must be nonnegative and strictly increasing");
        }
        traj.values.push_back(times[i] == 0.0 ? params.k0 : exact_classical_value(params, times[i]));
    }
    traj.trusted.assign(times.size(), 1);
    return traj;
}

Trajectory solve_abm_fractional(const ModelParams& params, double t_end, int steps) {
    params.validate();
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw InvalidArgument("ABM horizon must be positive");
    }
    if (steps < kMinAbmSteps) {
        throw InvalidArgument("ABM needs at least 16 steps");
    }
    const double alpha = params.alpha;
    const auto n_steps = static_cast<std::size_t>(steps);
    const double h = t_end / static_cast<double>(steps);
    const double pred_scale = std::pow(h, alpha) / gamma_fn(alpha + 1.0);
    const double corr_scale = std::pow(h, alpha) / gamma_fn(alpha + 2.0);

    // pow_a[m] = m^alpha, pow_a1[m] = m^(alpha+1)
    std::vector<double> pow_a(n_steps + 2), pow_a1(n_steps + 2);
    for (std::size_t m = 0; m < pow_a.size(); ++m) {
        pow_a[m] = std::pow(static_cast<double>(m), alpha);
        pow_a1[m] = std::pow(static_cast<double>(m), alpha + 1.0);
    }

    Trajectory traj;
    traj.method = TrajectoryMethod::AbmFractional;
    traj.times.resize(n_steps + 1);
    traj.values.resize(n_steps + 1);
    std::vector<double> rhs(n_steps + 1);
    traj.times[0] = 0.0;
    traj.values[0] = params.k0;
    rhs[0] = growth_rate(params, params.k0);

    for (std::size_t n = 0; n < n_steps; ++n) {
        // Predictor weights b_j = (n+1-j)^a - (n-j)^a.
        double pred = 0.0;
        for (std::size_t j = 0; j <= n; ++j) {
            pred += (pow_a[n + 1 - j] - pow_a[n - j]) * rhs[j];
        }
        const double k_pred = params.k0 + pred_scale * pred;
        if (!(k_pred > 0.0) || !std::isfinite(k_pred)) {
            std::ostringstream msg;
            msg << "ABM predictor left the positive half-line at t=" << (n + 1) * h << " (k=" << k_pred << ")";
            throw SolverError(msg.str());
        }

        // Corrector weights: a_0 = n^{a+1} - (n-a)(n+1)^a,
        // a_j = (n-j+2)^{a+1} + (n-j)^{a+1} - 2 (n-j+1)^{a+1}.
        double corr = (pow_a1[n] - (static_cast<double>(n) - alpha) * pow_a[n + 1]) * rhs[0];
        for (std::size_t j = 1; j <= n; ++j) {
            corr += (pow_a1[n - j + 2] + pow_a1[n - j] - 2.0 * pow_a1[n - j + 1]) * rhs[j];
        }
        corr += growth_rate(params, k_pred);
        const double k_next = params.k0 + corr_scale * corr;
        if (!(k_next > 0.0) || !std::isfinite(k_next)) {
            std::ostringstream msg;
            msg << "ABM corrector left the positive half-line at t=" << (n + 1) * h;
            throw SolverError(msg.str());
        }
        traj.times[n + 1] = static_cast<double>(n + 1) * h;
        traj.values[n + 1] = k_next;
        rhs[n + 1] = growth_rate(params, k_next);
    }
    traj.times[n_steps] = t_end;
    traj.trusted.assign(n_steps + 1, 1);
    return traj;
}

double abm_refinement_gap(const ModelParams& params, double t_end, int steps) {
    const double coarse = solve_abm_fractional(params, t_end, steps).values.back();
    const double fine = solve_abm_fractional(params, t_end, 2 * steps).values.back();
    return std::abs(coarse - fine) / std::abs(fine);
}

}  // namespace solow
