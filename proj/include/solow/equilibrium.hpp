#pragma once

#include "solow/params.hpp"

#include <string>
#include <string_view>

namespace solow {

enum class Stability { Unstable, AsymptoticallyStable };

std::string_view to_string(Stability s);

/// Fixed points of p k^mu - q k and their linearised stability.
struct EquilibriumReport {
    double k_zero = 0.0;
    Stability k_zero_stability = Stability::Unstable;
    /// d/dk (p k^mu - q k) at k -> 0+; +inf for mu < 1.
    double derivative_at_zero = 0.0;

    double k_star = 0.0;
    Stability k_star_stability = Stability::AsymptoticallyStable;
    /// q (mu - 1) for mu < 1.
    double derivative_at_star = 0.0;
    /// p k_star^mu - q k_star, zero up to rounding.
    double rhs_at_star = 0.0;

    /// Where p k^mu - q k is largest: (p mu / q)^{1/(1-mu)}. This is where a
    /// trajectory starting below it changes curvature; it is not k_star.
    double inflection_k = 0.0;
    double rhs_max = 0.0;
};

/// Both fixed points, classified by the sign of the right-hand side's
/// derivative (positive: unstable, negative: asymptotically stable).
EquilibriumReport find_equilibria(const ModelParams& params);

struct BalancedGrowth {
    /// k_star L0 exp(psi t).
    double capital;
    /// Whether the exact classical trajectory is within 1% of k_star at t.
    bool near_equilibrium;
    double relative_gap;
};

inline constexpr double kNearEquilibriumTolerance = 0.01;

/// Asymptotic total capital K(t) ~ k_star L(t) with L(t) = L0 exp(psi t).
/// The near-equilibrium check always uses the classical (alpha = 1) closed form.
BalancedGrowth balanced_growth_capital(const ModelParams& params, double L0, double psi, double t);

std::string equilibrium_json(const ModelParams& params, const EquilibriumReport& report);
std::string equilibrium_table(const ModelParams& params, const EquilibriumReport& report);

}  // namespace solow
