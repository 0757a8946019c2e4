#include "solow/equilibrium.hpp"

#include "solow/errors.hpp"
#include "solow/oracles.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace solow {

std::string_view to_string(Stability s) {
    return s == Stability::Unstable ? "unstable" : "asymptotically stable";
}

namespace {

Stability classify(double derivative) {
    return derivative > 0.0 ? Stability::Unstable : Stability::AsymptoticallyStable;
}

double rhs_derivative(const ModelParams& params, double k) {
    if (k == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return params.p * params.mu * std::pow(k, params.mu - 1.0) - params.q;
}

}  // namespace

EquilibriumReport find_equilibria(const ModelParams& params) {
    params.validate();
    EquilibriumReport r;
    r.derivative_at_zero = rhs_derivative(params, 0.0);
    r.k_zero_stability = classify(r.derivative_at_zero);

    r.k_star = steady_state(params);
    r.derivative_at_star = rhs_derivative(params, r.k_star);
    r.k_star_stability = classify(r.derivative_at_star);
    r.rhs_at_star = growth_rate(params, r.k_star);

    r.inflection_k = std::pow(params.p * params.mu / params.q, 1.0 / (1.0 - params.mu));
    r.rhs_max = growth_rate(params, r.inflection_k);
    return r;
}

BalancedGrowth balanced_growth_capital(const ModelParams& params, double L0, double psi, double t) {
    params.validate();
    if (!(L0 > 0.0) || !std::isfinite(psi) || !(t >= 0.0)) {
        throw InvalidArgument("balanced growth needs L0 > 0, finite psi and t >= 0");
    }
    const double k_star = steady_state(params);
    ModelParams classical = params;
    classical.alpha = 1.0;
    const double k_t = t == 0.0 ? params.k0 : exact_classical_value(classical, t);
    const double gap = std::abs(k_t - k_star) / k_star;
    return {k_star * L0 * std::exp(psi * t), gap <= kNearEquilibriumTolerance, gap};
}

std::string equilibrium_json(const ModelParams& params, const EquilibriumReport& r) {
    nlohmann::ordered_json j;
    j["params"] = {{"p", params.p}, {"q", params.q}, {"mu", params.mu}, {"alpha", params.alpha}, {"k0", params.k0}};
    j["k_zero"] = {{"value", r.k_zero},
                   {"stability", to_string(r.k_zero_stability)},
                   // JSON has no infinity; the sign is what matters.
                   {"derivative", std::isinf(r.derivative_at_zero) ? nlohmann::ordered_json("+inf")
                                                                   : nlohmann::ordered_json(r.derivative_at_zero)}};
    j["k_star"] = {{"value", r.k_star},
                   {"stability", to_string(r.k_star_stability)},
                   {"derivative", r.derivative_at_star},
                   {"rhs", r.rhs_at_star}};
    j["rhs_maximum"] = {{"k", r.inflection_k}, {"rhs", r.rhs_max}};
    return j.dump(2) + "\n";
}

std::string equilibrium_table(const ModelParams& params, const EquilibriumReport& r) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "params: p=%.6g q=%.6g mu=%.6g alpha=%.6g k0=%.6g\n", params.p, params.q,
                  params.mu, params.alpha, params.k0);
    os << line;
    os << "point        k                        d(rhs)/dk                stability\n";
    std::snprintf(line, sizeof line, "k_zero       %-24.17g %-24s %s\n", r.k_zero, "+inf",
                  std::string(to_string(r.k_zero_stability)).c_str());
    os << line;
    std::snprintf(line, sizeof line, "k_star       %-24.17g %-24.17g %s\n", r.k_star, r.derivative_at_star,
                  std::string(to_string(r.k_star_stability)).c_str());
    os << line;
    std::snprintf(line, sizeof line, "rhs_max      %-24.17g rhs=%.17g\n", r.inflection_k, r.rhs_max);
    os << line;
    return os.str();
}

}  // namespace solow
