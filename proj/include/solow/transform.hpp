#pragma once

#include "solow/params.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace solow {

using RealFn = std::function<double(double)>;

/// n-point Gauss-Laguerre rule for weight e^{-t} on [0, inf).
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule; n in [2, 512]. Nodes from the Golub-Welsch eigenproblem,
/// polished by Newton steps on L_n, weights from x / ((n+1) L_{n+1}(x))^2.
const GaussLaguerreRule& gauss_laguerre(int n);

inline constexpr int kLaguerreNodeCounts[] = {32, 64, 128};
/// Largest accepted gap between the 64- and 128-node tail estimates.
inline constexpr double kSumuduRefinementTolerance = 1e-6;

struct SumuduEstimate {
    double value;
    double refinement_gap;
    bool converged;
};

/// S[f](u) = int_0^inf f(t u) e^{-t} dt for u > 0.
///
/// [0, 1] is integrated with tanh-sinh, which tolerates the algebraic
/// endpoint behaviour of t^gamma or E_alpha(-t^alpha); the tail is
/// e^{-1} int_0^inf f((1 + s) u) e^{-s} ds by Gauss-Laguerre with 32, 64 and
/// 128 nodes. f must be of exponential order below 1/u.
SumuduEstimate sumudu_numeric(const RealFn& f, double u);

/// Closed-form S[t^gamma](u) = Gamma(gamma + 1) u^gamma.
double sumudu_monomial(double gamma, double u);

/// Convolution (psi * zeta)(t) = int_0^t psi(t - x) zeta(x) dx by adaptive
/// Gauss-Kronrod.
double convolve(const RealFn& psi, const RealFn& zeta, double t);

struct IdentityCheck {
    std::string identity;
    std::string point;
    double lhs;
    double rhs;
    double deviation;
    double tolerance;
    bool pass;
};

struct VerificationReport {
    std::vector<IdentityCheck> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::vector<std::string> failing_identities() const;
    void append(const VerificationReport& other);
    /// Plain-text table: one row per check, then max deviation per identity.
    [[nodiscard]] std::string table() const;
};

inline constexpr double kIdentityTolerance = 1e-5;
inline constexpr double kMonomialRelativeTolerance = 1e-6;

/// S[1] = 1 and S[t] = u by quadrature.
VerificationReport verify_unit_preservation(std::span<const double> u_grid, double tol = kIdentityTolerance);

/// Quadrature vs. closed-form S[t^gamma]; deviation is relative.
VerificationReport verify_monomial_transforms(std::span<const double> gammas, std::span<const double> u_grid,
                                              double tol = kMonomialRelativeTolerance);

/// (i)  S[E_alpha(-a t^alpha)] = 1 / (1 + a u^alpha)
/// (ii) S[1 - E_alpha(-a t^alpha)] = a u^alpha / (1 + a u^alpha)
VerificationReport verify_ml_identities(double alpha, double a, std::span<const double> u_grid,
                                        double tol = kIdentityTolerance);

/// S[k'] = (S[k] - k0)/u and S[k''] = (S[k] - k0 - u k'(0))/u^2 for the exact
/// classical solution with these p, q, mu, k0 (alpha is ignored).
VerificationReport verify_derivative_rule(const ModelParams& params, std::span<const double> u_grid,
                                          double tol = kIdentityTolerance);

/// S[D^alpha t^beta] = u^{-alpha} (S[t^beta] - 0), with the Caputo derivative
/// of the monomial Gamma(beta+1)/Gamma(beta+1-alpha) t^{beta-alpha}.
VerificationReport verify_caputo_rule(double beta, double alpha, std::span<const double> u_grid,
                                      double tol = kIdentityTolerance);

/// S[psi * zeta] = u S[psi] S[zeta].
VerificationReport verify_convolution(const RealFn& psi, const RealFn& zeta, std::string_view label,
                                      std::span<const double> u_grid, double tol = kIdentityTolerance);

/// Every transform identity on its documented grid. A negative
/// tolerance_override keeps the per-identity defaults; any other value
/// replaces all of them (0 makes every check fail).
VerificationReport run_identity_suite(double tolerance_override = -1.0);

}  // namespace solow
