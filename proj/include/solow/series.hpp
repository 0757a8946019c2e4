#pragma once

#include "solow/adomian.hpp"
#include "solow/params.hpp"

#include <array>

namespace solow {

inline constexpr int kDefaultSeriesOrder = 5;
inline constexpr int kMaxSeriesOrder = 64;
/// Largest accepted |c_N t^{N alpha}| / max(|k0|, |sum|).
inline constexpr double kTrustTolerance = 0.05;

/// Truncated series k(t) = sum_{n=0..N} c_n t^{n alpha}. Immutable.
class SeriesSolution {
public:
    SeriesSolution(ModelParams params, CoeffVec coeffs);

    [[nodiscard]] const ModelParams& params() const noexcept { return params_; }
    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const CoeffVec& coeffs() const noexcept { return coeffs_; }

private:
    ModelParams params_;
    CoeffVec coeffs_;
};

/// Sumudu/Adomian series of the given order.
///
/// Transforming D^alpha k = p k^mu - q k, applying the multiplier -u^alpha and
/// inverting monomial by monomial (S[t^g] = Gamma(g+1) u^g) gives
///
///   c_0 = k0,
///   c_{n+1} = (p a_n - q c_n) Gamma(n alpha + 1) / Gamma((n+1) alpha + 1),
///
/// with a_n the Adomian coefficients of k^mu. At alpha = 1 the factor is
/// exactly 1/(n+1). When k0 is the nonzero equilibrium (bitwise equal to
/// steady_state(params)) all higher coefficients are exactly zero.
SeriesSolution build_series(const ModelParams& params, int order = kDefaultSeriesOrder);

struct SeriesValue {
    double value;
    bool trusted;
};

/// Horner evaluation in x = t^alpha plus the last-term trust guard.
SeriesValue eval_series(const SeriesSolution& sol, double t);

/// c_0..c_3 from the closed forms printed for the classical model:
///   c1 = f0, c2 = f0 (p mu k0^{mu-1} - q) / 2!,
///   c3 = f0 {(p mu k0^{mu-1} - q)^2 - p mu (mu-1)/2 k0^{mu-2}} / 3!,
/// with f0 = p k0^mu - q k0. Transcribed as printed; see the test suite for
/// how c3 compares with the exact recursion. Throws InvalidArgument unless
/// alpha == 1.
std::array<double, 4> classical_taylor_check(const ModelParams& params);

}  // namespace solow
