#pragma once

// Gamma-family and Mittag-Leffler evaluation.
//
// All functions are pure and safe to call concurrently.

namespace solow {

/// ln Gamma(x) for x > 0.
///
/// Arguments below 10 are shifted upwards with the recurrence
/// Gamma(x+1) = x Gamma(x); the shifted value is evaluated with the Stirling
/// series truncated after the B_18 term, whose remainder at x >= 10 is below
/// 2e-18. Throws DomainError for x <= 0 or non-finite x.
double ln_gamma(double x);

/// Gamma(x) for 0 < x < 171.6 (exp of ln_gamma).
double gamma_fn(double x);

/// Gamma(a)/Gamma(b) evaluated in log space so that large arguments do not
/// overflow. Throws DomainError unless a, b > 0.
double gamma_ratio(double a, double b);

/// Supported region of the one-parameter Mittag-Leffler function.
struct MittagLefflerDomain {
    static constexpr double kMinAlpha = 0.3;
    static constexpr double kMaxAlpha = 2.0;
    static constexpr double kMaxPositiveZ = 50.0;
    /// Negative arguments with |z|^(1/alpha) above this use the spectral
    /// integral (alpha < 1) or exp (alpha == 1) instead of the Taylor series.
    static constexpr double kTaylorCancellationLimit = 8.0;
};

struct MLParams {
    double alpha;
    double z;
};

/// E_alpha(z) = sum_n z^n / Gamma(alpha n + 1).
///
/// Taylor series with Neumaier-compensated summation wherever the series does
/// not cancel catastrophically. For z < 0 with |z|^(1/alpha) beyond
/// kTaylorCancellationLimit and alpha < 1 it uses
///
///   E_alpha(-x) = sin(alpha pi)/(alpha pi) *
///                 int_0^inf exp(-x^(1/alpha) r^(1/alpha)) / (r^2 + 2 r cos(alpha pi) + 1) dr
///
/// which is the Laplace-spectral representation of the completely monotone
/// function t -> E_alpha(-t^alpha). Throws DomainError outside
/// alpha in [0.3, 2], z <= 50, finite result.
double mittag_leffler(const MLParams& p);

inline double mittag_leffler(double alpha, double z) { return mittag_leffler(MLParams{alpha, z}); }

/// Sum of the Taylor series alone (no branch selection); exposed for tests.
double mittag_leffler_taylor(double alpha, double z);

}  // namespace solow
