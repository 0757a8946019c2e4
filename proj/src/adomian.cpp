#include "solow/adomian.hpp"

#include "solow/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <string>

namespace solow {

namespace {

void check_coeffs(std::span<const double> c) {
    if (c.empty()) {
        throw DomainError("adomian: empty coefficient vector");
    }
    if (!(c[0] > 0.0)) {
        throw DomainError("adomian: leading coefficient must be positive, got " + std::to_string(c[0]));
    }
    for (double v : c) {
        if (!std::isfinite(v)) {
            throw DomainError("adomian: non-finite coefficient");
        }
    }
}

}  // namespace

double next_adomian_coeff(double mu, std::span<const double> c, std::span<const double> a) {
    const std::size_t n = a.size();
    if (n == 0) {
        return std::pow(c[0], mu);
    }
    if (c.size() <= n) {
        throw DomainError("adomian: need c_0..c_n to compute a_n");
    }
    double acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        const double weight = static_cast<double>(j) * mu - static_cast<double>(n - j);
        acc += weight * c[j] * a[n - j];
    }
    return acc / (static_cast<double>(n) * c[0]);
}

CoeffVec adomian_power_coeffs(double mu, std::span<const double> c) {
    check_coeffs(c);
    if (!std::isfinite(mu)) {
        throw DomainError("adomian: non-finite exponent");
    }
    CoeffVec a;
    a.reserve(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        a.push_back(next_adomian_coeff(mu, c, a));
    }
    return a;
}

AdomianOracleEstimate adomian_bruteforce_oracle(double mu, std::span<const double> c, int n) {
    using Real = boost::multiprecision::cpp_bin_float_50;
    check_coeffs(c);
    if (n < 0) {
        throw DomainError("adomian oracle: negative index");
    }

    auto f = [&](const Real& x) {
        Real poly = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            poly = poly * x + Real(*it);
        }
        if (poly <= 0) {
            throw DomainError("adomian oracle: polynomial not positive on the stencil");
        }
        return Real(pow(poly, Real(mu)));
    };

    // h^-n sum_k (-1)^k C(n,k) f((n/2 - k) h)
    auto central = [&](const Real& h) {
        Real acc = 0;
        Real binom = 1;
        for (int k = 0; k <= n; ++k) {
            const Real x = (Real(n) / 2 - k) * h;
            acc += ((k % 2 == 0) ? binom : Real(-binom)) * f(x);
            binom = binom * (n - k) / (k + 1);
        }
        return Real(acc / pow(h, n));
    };

    const Real h = Real(1) / 100;
    const Real d0 = central(h);
    const Real d1 = central(h / 2);
    const Real d2 = central(h / 4);
    const Real r10 = (4 * d1 - d0) / 3;
    const Real r11 = (4 * d2 - d1) / 3;
    const Real r2 = (16 * r11 - r10) / 15;

    Real factorial = 1;
    for (int k = 2; k <= n; ++k) {
        factorial *= k;
    }
    return {static_cast<double>(r2 / factorial), n <= 6};
}

}  // namespace solow
