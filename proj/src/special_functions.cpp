#include "solow/special_functions.hpp"

#include "solow/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace solow {

namespace {

// B_{2k} / (2k (2k-1)) for k = 1..9.
constexpr std::array<double, 9> kStirlingCoeffs = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

constexpr double kStirlingThreshold = 10.0;

double stirling_ln_gamma(double x) {
    const double inv_x2 = 1.0 / (x * x);
    double series = kStirlingCoeffs.back();
    for (auto it = kStirlingCoeffs.rbegin() + 1; it != kStirlingCoeffs.rend(); ++it) {
        series = series * inv_x2 + *it;
    }
    series /= x;
    constexpr double half_ln_two_pi = 0.91893853320467274178032973640562;
    return (x - 0.5) * std::log(x) - x + half_ln_two_pi + series;
}

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double term) {
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            carry += (sum - t) + term;
        } else {
            carry += (term - t) + sum;
        }
        sum = t;
    }
    [[nodiscard]] double value() const { return sum + carry; }
};

double ml_spectral_negative(double alpha, double x) {
    // E_alpha(-x) = sin(alpha pi)/(alpha pi) * int_0^inf exp(-s r^(1/alpha)) / (r^2 + 2 r cos(alpha pi) + 1) dr
    // with s = x^(1/alpha). Substituting u = s r^(1/alpha) leaves exp(-u) u^(alpha-1) times a bounded factor,
    // which the double-exponential rules integrate without adaptivity trouble.
    const double s = std::pow(x, 1.0 / alpha);
    const double c = std::cos(alpha * std::numbers::pi);
    auto integrand = [&](double u) {
        if (!(u > 0.0)) {
            return 0.0;
        }
        const double r = std::pow(u / s, alpha);
        return std::exp(-u) * alpha * (r / u) / (r * r + 2.0 * r * c + 1.0);
    };
    thread_local boost::math::quadrature::tanh_sinh<double> head_rule(12);
    thread_local boost::math::quadrature::exp_sinh<double> tail_rule(12);
    constexpr double tol = 1e-13;
    const double split = std::min(s, 1.0);
    const double head = head_rule.integrate(integrand, 0.0, split, tol);
    const double tail = tail_rule.integrate([&](double v) { return integrand(split + v); }, tol);
    return std::sin(alpha * std::numbers::pi) / (alpha * std::numbers::pi) * (head + tail);
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("ln_gamma: argument must be positive and finite, got " + std::to_string(x));
    }
    if (x == 1.0 || x == 2.0) {
        return 0.0;
    }
    if (x >= kStirlingThreshold) {
        return stirling_ln_gamma(x);
    }
    double shifted = x;
    double product = 1.0;
    while (shifted < kStirlingThreshold) {
        product *= shifted;
        shifted += 1.0;
    }
    return stirling_ln_gamma(shifted) - std::log(product);
}

double gamma_fn(double x) {
    if (!(x > 0.0) || !(x < 171.6)) {
        throw DomainError("gamma_fn: argument outside (0, 171.6): " + std::to_string(x));
    }
    return std::exp(ln_gamma(x));
}

double gamma_ratio(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("gamma_ratio: arguments must be positive");
    }
    if (a == b) {
        return 1.0;
    }
    return std::exp(ln_gamma(a) - ln_gamma(b));
}

double mittag_leffler_taylor(double alpha, double z) {
    if (z == 0.0) {
        return 1.0;
    }
    // Terms grow until alpha*n is about |z|^(1/alpha); only stop after that.
    const double peak = std::pow(std::abs(z), 1.0 / alpha) / alpha + 1.0;
    const double ln_abs_z = std::log(std::abs(z));
    CompensatedSum acc;
    acc.add(1.0);
    constexpr int max_terms = 20000;
    for (int n = 1; n < max_terms; ++n) {
        const double magnitude = std::exp(n * ln_abs_z - ln_gamma(alpha * n + 1.0));
        const double term = (z < 0.0 && (n % 2 == 1)) ? -magnitude : magnitude;
        acc.add(term);
        if (n > peak && magnitude <= 1e-16 * std::abs(acc.value())) {
            return acc.value();
        }
    }
    throw DomainError("mittag_leffler: Taylor series did not converge");
}

double mittag_leffler(const MLParams& p) {
    const auto [alpha, z] = p;
    if (!std::isfinite(alpha) || !std::isfinite(z)) {
        throw DomainError("mittag_leffler: non-finite input");
    }
    if (alpha < MittagLefflerDomain::kMinAlpha || alpha > MittagLefflerDomain::kMaxAlpha) {
        throw DomainError("mittag_leffler: alpha outside [0.3, 2]: " + std::to_string(alpha));
    }
    if (z == 0.0) {
        return 1.0;
    }
    const double scaled = std::pow(std::abs(z), 1.0 / alpha);
    if (z > 0.0) {
        if (z > MittagLefflerDomain::kMaxPositiveZ || scaled > 700.0) {
            throw DomainError("mittag_leffler: positive argument too large (result overflows or exceeds z <= 50)");
        }
        return mittag_leffler_taylor(alpha, z);
    }
    if (scaled <= MittagLefflerDomain::kTaylorCancellationLimit) {
        return mittag_leffler_taylor(alpha, z);
    }
    if (alpha == 1.0) {
        return std::exp(z);
    }
    if (alpha < 1.0) {
        return ml_spectral_negative(alpha, -z);
    }
    throw DomainError("mittag_leffler: negative argument too large for alpha > 1");
}

}  // namespace solow
