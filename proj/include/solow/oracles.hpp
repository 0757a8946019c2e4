#pragma once

#include "solow/params.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace solow {

enum class TrajectoryMethod { ExactClassical, AbmFractional, Series };

std::string_view to_string(TrajectoryMethod m);

/// Sampled (t, k) pairs from one solver.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> values;
    /// 1 where the sample is reliable; only series samples can be 0.
    std::vector<std::uint8_t> trusted;
    TrajectoryMethod method = TrajectoryMethod::Series;

    [[nodiscard]] std::size_t size() const noexcept { return times.size(); }
};

/// Bernoulli closed form of the classical model (alpha == 1):
///   k(t) = [p/q + (k0^{1-mu} - p/q) exp(-q (1-mu) t)]^{1/(1-mu)}.
double exact_classical_value(const ModelParams& params, double t);

/// Samples the closed form. times must be nonnegative and strictly increasing.
/// Throws InvalidArgument unless alpha == 1.
Trajectory solve_exact_classical(const ModelParams& params, std::span<const double> times);

inline constexpr int kMinAbmSteps = 16;

/// Fractional Adams-Bashforth-Moulton (product rectangle predictor, product
/// trapezoid corrector, one correction) on the uniform grid t_j = j t_end/steps.
/// The full memory is kept. Throws SolverError if the predictor leaves k > 0.
Trajectory solve_abm_fractional(const ModelParams& params, double t_end, int steps);

/// |k_steps(t_end) - k_{2 steps}(t_end)| / |k_{2 steps}(t_end)|. Values above
/// kAbmRefinementTolerance indicate the step is too coarse.
double abm_refinement_gap(const ModelParams& params, double t_end, int steps);

inline constexpr double kAbmRefinementTolerance = 1e-3;

}  // namespace solow
