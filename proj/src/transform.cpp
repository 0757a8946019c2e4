#include "solow/transform.hpp"

#include "solow/errors.hpp"
#include "solow/oracles.hpp"
#include "solow/special_functions.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>

namespace solow {

namespace {

constexpr double kHeadEnd = 1.0;

struct LaguerreValues {
    long double below;  // L_{n-1}(x)
    long double at;     // L_n(x)
    long double above;  // L_{n+1}(x)
};

LaguerreValues laguerre_values(int n, long double x) {
    long double prev = 1.0L;
    long double cur = 1.0L - x;
    long double before = 0.0L;
    for (int k = 1; k <= n; ++k) {
        const long double next = ((2.0L * k + 1.0L - x) * cur - k * prev) / (k + 1.0L);
        before = prev;
        prev = cur;
        cur = next;
    }
    return {before, prev, cur};
}

GaussLaguerreRule build_rule(int n) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        jacobi(i, i) = 2.0 * i + 1.0;
        if (i + 1 < n) {
            jacobi(i, i + 1) = jacobi(i + 1, i) = i + 1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        long double x = solver.eigenvalues()(i);
        for (int it = 0; it < 4; ++it) {
            const auto v = laguerre_values(n, x);
            const long double step = v.at / (n * (v.at - v.below) / x);
            x -= step;
            if (std::abs(step) <= 1e-18L * x) {
                break;
            }
        }
        const long double above = laguerre_values(n, x).above;
        rule.nodes[i] = static_cast<double>(x);
        rule.weights[i] = static_cast<double>(x / ((n + 1.0L) * (n + 1.0L) * above * above));
    }
    return rule;
}

double laguerre_tail(const RealFn& f, double u, int n) {
    const auto& rule = gauss_laguerre(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (rule.weights[i] == 0.0) {
            continue;
        }
        acc += rule.weights[i] * f((kHeadEnd + rule.nodes[i]) * u);
    }
    return std::exp(-kHeadEnd) * acc;
}

std::string format_point(const char* fmt, double a, double b = 0.0, double c = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

IdentityCheck make_check(std::string identity, std::string point, double lhs, double rhs, double tol,
                         bool relative = false) {
    double dev = std::abs(lhs - rhs);
    if (relative) {
        dev /= std::abs(rhs);
    }
    const bool pass = std::isfinite(dev) && dev <= tol;
    return {std::move(identity), std::move(point), lhs, rhs, dev, tol, pass};
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre(int n) {
    if (n < 2 || n > 512) {
        throw InvalidArgument("Gauss-Laguerre node count must lie in [2, 512]");
    }
    static std::mutex mutex;
    static std::map<int, GaussLaguerreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_rule(n)).first;
    }
    return it->second;
}

SumuduEstimate sumudu_numeric(const RealFn& f, double u) {
    if (!(u > 0.0) || !std::isfinite(u)) {
        throw DomainError("sumudu_numeric: u must be positive");
    }
    thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    auto head_integrand = [&](double t) { return f(t * u) * std::exp(-t); };
    const double head = integrator.integrate(head_integrand, 0.0, kHeadEnd, 1e-13);

    double tails[std::size(kLaguerreNodeCounts)];
    for (std::size_t i = 0; i < std::size(kLaguerreNodeCounts); ++i) {
        tails[i] = laguerre_tail(f, u, kLaguerreNodeCounts[i]);
    }
    const double gap = std::abs(tails[2] - tails[1]);
    const double value = head + tails[2];
    return {value, gap, std::isfinite(value) && gap <= kSumuduRefinementTolerance};
}

double sumudu_monomial(double gamma, double u) {
    if (!(gamma >= 0.0)) {
        throw DomainError("sumudu_monomial: gamma must be >= 0");
    }
    if (!(u > 0.0)) {
        throw DomainError("sumudu_monomial: u must be positive");
    }
    if (gamma == 0.0) {
        return 1.0;
    }
    return std::exp(ln_gamma(gamma + 1.0) + gamma * std::log(u));
}

double convolve(const RealFn& psi, const RealFn& zeta, double t) {
    if (t <= 0.0) {
        return 0.0;
    }
    auto integrand = [&](double x) { return psi(t - x) * zeta(x); };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, t, 12, 1e-10);
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

std::vector<std::string> VerificationReport::failing_identities() const {
    std::vector<std::string> names;
    for (const auto& c : checks) {
        if (!c.pass && std::find(names.begin(), names.end(), c.identity) == names.end()) {
            names.push_back(c.identity);
        }
    }
    return names;
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::table() const {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-22s %-28s %-22s %-22s %-10s %-8s %s\n", "identity", "point", "lhs", "rhs",
                  "deviation", "tol", "status");
    os << line;
    for (const auto& c : checks) {
        std::snprintf(line, sizeof line, "%-22s %-28s %-22.15g %-22.15g %-10.3e %-8.1e %s\n", c.identity.c_str(),
                      c.point.c_str(), c.lhs, c.rhs, c.deviation, c.tolerance, c.pass ? "ok" : "FAIL");
        os << line;
    }
    os << "\nsummary\n";
    std::vector<std::string> order;
    std::map<std::string, std::pair<double, bool>> worst;
    for (const auto& c : checks) {
        auto [it, inserted] = worst.try_emplace(c.identity, c.deviation, c.pass);
        if (inserted) {
            order.push_back(c.identity);
        } else {
            it->second.first = std::max(it->second.first, c.deviation);
            it->second.second = it->second.second && c.pass;
        }
    }
    for (const auto& name : order) {
        const auto& [dev, ok] = worst[name];
        std::snprintf(line, sizeof line, "%-22s max deviation %-10.3e %s\n", name.c_str(), dev, ok ? "ok" : "FAIL");
        os << line;
    }
    return os.str();
}

VerificationReport verify_unit_preservation(std::span<const double> u_grid, double tol) {
    VerificationReport report;
    for (double u : u_grid) {
        const auto one = sumudu_numeric([](double) { return 1.0; }, u);
        report.checks.push_back(make_check("unit-preservation", format_point("S[1] u=%g", u), one.value, 1.0, tol));
        const auto lin = sumudu_numeric([](double t) { return t; }, u);
        report.checks.push_back(make_check("unit-preservation", format_point("S[t] u=%g", u), lin.value, u, tol));
    }
    return report;
}

VerificationReport verify_monomial_transforms(std::span<const double> gammas, std::span<const double> u_grid,
                                              double tol) {
    VerificationReport report;
    for (double g : gammas) {
        for (double u : u_grid) {
            const auto est = sumudu_numeric([g](double t) { return t == 0.0 && g == 0.0 ? 1.0 : std::pow(t, g); }, u);
            report.checks.push_back(make_check("monomial", format_point("gamma=%g u=%g", g, u), est.value,
                                               sumudu_monomial(g, u), tol, true));
        }
    }
    return report;
}

VerificationReport verify_ml_identities(double alpha, double a, std::span<const double> u_grid, double tol) {
    VerificationReport report;
    auto relaxation = [alpha, a](double t) { return mittag_leffler(alpha, -a * std::pow(t, alpha)); };
    for (double u : u_grid) {
        const double ua = a * std::pow(u, alpha);
        const auto first = sumudu_numeric(relaxation, u);
        report.checks.push_back(make_check("mittag-leffler-(i)", format_point("a=%g alpha=%g u=%g", a, alpha, u),
                                           first.value, 1.0 / (1.0 + ua), tol));
        const auto second = sumudu_numeric([&](double t) { return 1.0 - relaxation(t); }, u);
        report.checks.push_back(make_check("mittag-leffler-(ii)", format_point("a=%g alpha=%g u=%g", a, alpha, u),
                                           second.value, ua / (1.0 + ua), tol));
    }
    return report;
}

VerificationReport verify_derivative_rule(const ModelParams& params, std::span<const double> u_grid, double tol) {
    ModelParams classical = params;
    classical.alpha = 1.0;
    classical.validate();
    auto k = [&](double t) { return exact_classical_value(classical, t); };
    auto dk = [&](double t) { return growth_rate(classical, k(t)); };
    auto d2k = [&](double t) {
        const double kt = k(t);
        const double slope = classical.p * classical.mu * std::pow(kt, classical.mu - 1.0) - classical.q;
        return slope * growth_rate(classical, kt);
    };
    const double k0 = classical.k0;
    const double dk0 = growth_rate(classical, k0);

    VerificationReport report;
    for (double u : u_grid) {
        const double big_k = sumudu_numeric(k, u).value;
        const double first = sumudu_numeric(dk, u).value;
        report.checks.push_back(
            make_check("derivative-rule-1", format_point("u=%g", u), first, (big_k - k0) / u, tol));
        const double second = sumudu_numeric(d2k, u).value;
        report.checks.push_back(make_check("derivative-rule-2", format_point("u=%g", u), second,
                                           (big_k - k0 - u * dk0) / (u * u), tol));
    }
    return report;
}

VerificationReport verify_caputo_rule(double beta, double alpha, std::span<const double> u_grid, double tol) {
    if (!(beta > 0.0) || !(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("verify_caputo_rule: need beta > 0 and 0 < alpha <= 1");
    }
    const double scale = gamma_ratio(beta + 1.0, beta + 1.0 - alpha);
    auto caputo = [=](double t) { return scale * std::pow(t, beta - alpha); };
    auto monomial = [=](double t) { return std::pow(t, beta); };
    VerificationReport report;
    for (double u : u_grid) {
        const double lhs = sumudu_numeric(caputo, u).value;
        const double rhs = std::pow(u, -alpha) * (sumudu_numeric(monomial, u).value - monomial(0.0));
        report.checks.push_back(
            make_check("caputo-rule", format_point("beta=%g alpha=%g u=%g", beta, alpha, u), lhs, rhs, tol));
    }
    return report;
}

VerificationReport verify_convolution(const RealFn& psi, const RealFn& zeta, std::string_view label,
                                      std::span<const double> u_grid, double tol) {
    VerificationReport report;
    for (double u : u_grid) {
        const double lhs = sumudu_numeric([&](double t) { return convolve(psi, zeta, t); }, u).value;
        const double rhs = u * sumudu_numeric(psi, u).value * sumudu_numeric(zeta, u).value;
        char point[96];
        std::snprintf(point, sizeof point, "%.*s u=%g", static_cast<int>(label.size()), label.data(), u);
        report.checks.push_back(make_check("convolution", point, lhs, rhs, tol));
    }
    return report;
}

VerificationReport run_identity_suite(double tolerance_override) {
    auto tol = [&](double fallback) { return tolerance_override >= 0.0 ? tolerance_override : fallback; };
    const double u_grid[] = {0.1, 0.5, 1.0};
    const double u_grid_wide[] = {0.1, 0.5, 1.0, 2.0};

    VerificationReport report;
    report.append(verify_unit_preservation(u_grid_wide, tol(kIdentityTolerance)));

    const double gammas[] = {0.0, 0.5, 1.0, 1.6, 2.0, 3.0};
    report.append(verify_monomial_transforms(gammas, u_grid, tol(kMonomialRelativeTolerance)));

    report.append(verify_derivative_rule(ModelParams::reference(), u_grid_wide, tol(kIdentityTolerance)));

    const double caputo_u[] = {0.1, 0.4, 1.0};
    const std::pair<double, double> caputo_cases[] = {{1.5, 0.6}, {2.0, 0.5}, {1.0, 0.8}, {0.9, 0.3}};
    for (auto [beta, alpha] : caputo_cases) {
        report.append(verify_caputo_rule(beta, alpha, caputo_u, tol(kIdentityTolerance)));
    }

    const double conv_u[] = {0.1, 0.3, 1.0};
    const RealFn one = [](double) { return 1.0; };
    const RealFn ident = [](double t) { return t; };
    const RealFn decay = [](double t) { return std::exp(-t); };
    const RealFn sine = [](double t) { return std::sin(t); };
    const RealFn cosine = [](double t) { return std::cos(t); };
    report.append(verify_convolution(one, one, "1*1", conv_u, tol(kIdentityTolerance)));
    report.append(verify_convolution(ident, one, "t*1", conv_u, tol(kIdentityTolerance)));
    report.append(verify_convolution(decay, ident, "exp(-t)*t", conv_u, tol(kIdentityTolerance)));
    report.append(verify_convolution(sine, cosine, "sin*cos", conv_u, tol(kIdentityTolerance)));

    for (double alpha : {0.5, 0.8, 1.0}) {
        for (double a : {1.0, 2.0}) {
            report.append(verify_ml_identities(alpha, a, u_grid, tol(kIdentityTolerance)));
        }
    }
    return report;
}

}  // namespace solow
