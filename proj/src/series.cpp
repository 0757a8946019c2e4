#include "solow/series.hpp"

#include "solow/errors.hpp"
#include "solow/special_functions.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace solow {

SeriesSolution::SeriesSolution(ModelParams params, CoeffVec coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
        throw InvalidArgument("series solution needs order >= 1");
    }
}

SeriesSolution build_series(const ModelParams& params, int order) {
    params.validate();
    if (order < 1 || order > kMaxSeriesOrder) {
        throw InvalidArgument("series order must lie in [1, " + std::to_string(kMaxSeriesOrder) + "], got " +
                              std::to_string(order));
    }
    const auto n_terms = static_cast<std::size_t>(order) + 1;
    CoeffVec c(n_terms, 0.0);
    c[0] = params.k0;
    if (params.k0 == steady_state(params)) {
        return {params, std::move(c)};
    }

    CoeffVec a;
    a.reserve(n_terms);
    const double alpha = params.alpha;
    for (std::size_t n = 0; n + 1 < n_terms; ++n) {
        a.push_back(next_adomian_coeff(params.mu, std::span<const double>(c.data(), n + 1), a));
        const double factor = (alpha == 1.0)
                                  ? 1.0 / static_cast<double>(n + 1)
                                  : gamma_ratio(static_cast<double>(n) * alpha + 1.0,
                                                static_cast<double>(n + 1) * alpha + 1.0);
        c[n + 1] = (params.p * a[n] - params.q * c[n]) * factor;
    }
    return {params, std::move(c)};
}

SeriesValue eval_series(const SeriesSolution& sol, double t) {
    if (!(t >= 0.0)) {
        throw InvalidArgument("eval_series: t must be >= 0");
    }
    const auto& c = sol.coeffs();
    if (t == 0.0) {
        return {c[0], true};
    }
    const double x = std::pow(t, sol.params().alpha);
    double sum = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        sum = sum * x + *it;
    }
    const double last = std::abs(c.back() * std::pow(x, sol.order()));
    const double scale = std::max(std::abs(c[0]), std::abs(sum));
    const bool trusted = std::isfinite(sum) && last <= kTrustTolerance * scale;
    return {sum, trusted};
}

std::array<double, 4> classical_taylor_check(const ModelParams& params) {
    params.validate();
    if (params.alpha != 1.0) {
        throw InvalidArgument("classical_taylor_check requires alpha == 1");
    }
    const double p = params.p;
    const double q = params.q;
    const double mu = params.mu;
    const double k0 = params.k0;
    if (k0 == steady_state(params)) {
        return {k0, 0.0, 0.0, 0.0};
    }
    const double f0 = p * std::pow(k0, mu) - q * k0;
    const double slope = p * mu * std::pow(k0, mu - 1.0) - q;
    const double c3_bracket = slope * slope - p * mu * (mu - 1.0) / 2.0 * std::pow(k0, mu - 2.0);
    return {k0, f0, f0 * slope / 2.0, f0 * c3_bracket / 6.0};
}

}  // namespace solow
