#pragma once

namespace solow {

/// One instance of the (fractional) Solow-Swan model
///
///   D^alpha k = p k^mu - q k,  k(0) = k0,
///
/// where D^alpha is the Caputo derivative (the ordinary derivative at alpha = 1).
struct ModelParams {
    double p = 0.5;       ///< productivity coefficient, 1/time
    double q = 0.2;       ///< depreciation plus labour growth, 1/time
    double mu = 1.0 / 3;  ///< capital elasticity
    double alpha = 1.0;   ///< fractional order
    double k0 = 1.0;      ///< initial capital-labour ratio

    /// Throws InvalidArgument unless p, q, k0 > 0, 0 < mu < 1 and 0 < alpha <= 1.
    void validate() const;

    /// p=0.5, q=0.2, mu=1/3, k0=1 with the given order.
    static ModelParams reference(double alpha = 1.0) { return {0.5, 0.2, 1.0 / 3, alpha, 1.0}; }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Right-hand side p k^mu - q k.
double growth_rate(const ModelParams& params, double k);

/// Nonzero equilibrium (p/q)^{1/(1-mu)}.
double steady_state(const ModelParams& params);

}  // namespace solow
