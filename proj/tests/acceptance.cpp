// Acceptance gate: one PASS/FAIL line per criterion (or sub-check), exit code
// 0 only if every line passes.

#include "solow/adomian.hpp"
#include "solow/equilibrium.hpp"
#include "solow/oracles.hpp"
#include "solow/series.hpp"
#include "solow/special_functions.hpp"
#include "solow/sweep.hpp"
#include "solow/transform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"

using namespace solow;
using solow::testing::ParamGenerator;
using solow::testing::relative_difference;

namespace {

int g_failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
    std::printf("[%s] %-4s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

/// Runs body, then reports the criterion's runtime limit as its own line.
void timed(const std::string& id, double limit_seconds, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0.0) {
        report(id + "t", elapsed < limit_seconds, fmt("runtime %.3f s < %.0f s", elapsed, limit_seconds));
    }
}

struct RhsJet {
    double f0;
    double f1;
    double f2;
};

RhsJet rhs_jet(const ModelParams& m) {
    return {m.p * std::pow(m.k0, m.mu) - m.q * m.k0, m.p * m.mu * std::pow(m.k0, m.mu - 1.0) - m.q,
            m.p * m.mu * (m.mu - 1.0) * std::pow(m.k0, m.mu - 2.0)};
}

double max_series_error_vs_exact(const ModelParams& m, int order, double t_end) {
    const SeriesSolution sol = build_series(m, order);
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = t_end * i / 1000.0;
        worst = std::max(worst, relative_difference(eval_series(sol, t).value, exact_classical_value(m, t)));
    }
    return worst;
}

void criterion_1() {
    timed("1", 1.0, [] {
        const ModelParams m = ModelParams::reference();
        const double e8 = max_series_error_vs_exact(m, 8, 1.0);
        report("1a", e8 <= 1e-4, fmt("classical series N=8 vs closed form on [0,1]: max rel err %.3e <= 1e-4", e8));
        const double e5 = max_series_error_vs_exact(m, 5, 0.5);
        report("1b", e5 <= 1e-3, fmt("classical series N=5 vs closed form on [0,0.5]: max rel err %.3e <= 1e-3", e5));
    });
}

void criterion_2() {
    timed("2", 1.0, [] {
        ParamGenerator gen(2024);
        double worst[4] = {0, 0, 0, 0};
        for (int i = 0; i < 50; ++i) {
            const ModelParams m = gen.classical();
            const auto printed = classical_taylor_check(m);
            const SeriesSolution sol = build_series(m, 3);
            for (int n = 1; n <= 3; ++n) {
                worst[n] = std::max(worst[n], relative_difference(sol.coeffs()[n], printed[n]));
            }
        }
        for (int n = 1; n <= 3; ++n) {
            report(fmt("2c%d", n), worst[n] <= 1e-12,
                   fmt("build_series c%d vs printed classical closed form, 50 random sets: max rel diff %.3e <= 1e-12",
                       n, worst[n]));
        }
    });
}

void criterion_3() {
    timed("3", 5.0, [] {
        for (double alpha : {0.6, 0.8}) {
            const ModelParams m = ModelParams::reference(alpha);
            const SeriesSolution sol = build_series(m, 8);
            const Trajectory abm = solve_abm_fractional(m, 0.5, 1024);
            double worst = 0.0;
            for (std::size_t i = 0; i < abm.size(); ++i) {
                worst = std::max(worst, relative_difference(eval_series(sol, abm.times[i]).value, abm.values[i]));
            }
            report(fmt("3/%.1f", alpha), worst <= 1e-2,
                   fmt("fractional series N=8 vs 1024-step ABM, alpha=%.1f, t in [0,0.5]: max rel gap %.3e <= 1e-2",
                       alpha, worst));
        }
    });
}

void criterion_4() {
    ParamGenerator gen(4044);
    double w1 = 0.0, w2 = 0.0, structure = 0.0, classical_w3 = 0.0;
    for (int i = 0; i < 200; ++i) {
        const ModelParams m = gen.fractional();
        const RhsJet j = rhs_jet(m);
        const double a = m.alpha;
        const SeriesSolution sol = build_series(m, 3);
        const CoeffVec& c = sol.coeffs();
        w1 = std::max(w1, relative_difference(c[1], j.f0 / gamma_fn(a + 1.0)));
        w2 = std::max(w2, relative_difference(c[2], j.f0 * j.f1 / gamma_fn(2.0 * a + 1.0)));
        const double ratio = gamma_fn(2.0 * a + 1.0) / (gamma_fn(a + 1.0) * gamma_fn(a + 1.0));
        const double documented = (j.f0 * j.f1 * j.f1 + ratio * 0.5 * j.f2 * j.f0 * j.f0) / gamma_fn(3.0 * a + 1.0);
        structure = std::max(structure, relative_difference(c[3], documented));

        ModelParams classical = m;
        classical.alpha = 1.0;
        const double printed_w3 = j.f0 * (j.f1 * j.f1 - 0.5 * j.f2) / 6.0;
        classical_w3 = std::max(classical_w3, relative_difference(build_series(classical, 3).coeffs()[3], printed_w3));
    }
    report("4a", w1 <= 1e-12, fmt("fractional w1 = f0 t^a/Gamma(a+1), 200 random sets: max rel diff %.3e <= 1e-12", w1));
    report("4b", w2 <= 1e-12,
           fmt("fractional w2 = f0 f1 t^2a/Gamma(2a+1), 200 random sets: max rel diff %.3e <= 1e-12", w2));
    report("4c", classical_w3 <= 1e-12,
           fmt("implemented w3 equals the printed w3 at alpha=1: max rel diff %.3e <= 1e-12", classical_w3));
    report("4d", structure <= 1e-12,
           fmt("w3 = [f0 f1^2 + Gamma(2a+1)/Gamma(a+1)^2 (f2/2) f0^2] t^3a/Gamma(3a+1) regression: max rel diff "
               "%.3e <= 1e-12",
               structure));
}

void criterion_5() {
    timed("5", 10.0, [] {
        const VerificationReport rep = run_identity_suite();
        std::map<std::string, double> worst;
        for (const auto& c : rep.checks) {
            worst[c.identity] = std::max(worst[c.identity], c.deviation);
        }
        std::string detail;
        for (const auto& [name, dev] : worst) {
            detail += fmt(" %s=%.1e", name.c_str(), dev);
        }
        std::string failing;
        for (const auto& name : rep.failing_identities()) {
            failing += " " + name;
        }
        report("5", rep.passed(),
               fmt("transform identity suite, %zu checks within tolerance (<= 1e-5 abs, monomials 1e-6 rel):%s%s",
                   rep.checks.size(), detail.c_str(), failing.empty() ? "" : (" failing:" + failing).c_str()));
    });
}

void criterion_6() {
    timed("6", 5.0, [] {
        ParamGenerator gen(6006);
        const double mus[] = {0.2, 0.33, 0.5, 0.8};
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double mu = mus[i % 4];
            std::vector<double> c{gen.uniform(0.5, 4.0)};
            for (int k = 0; k < 5; ++k) {
                c.push_back(gen.uniform(-2.0, 2.0));
            }
            const CoeffVec a = adomian_power_coeffs(mu, c);
            for (int n = 0; n <= 5; ++n) {
                worst = std::max(worst, relative_difference(a[n], adomian_bruteforce_oracle(mu, c, n).value));
            }
        }
        report("6", worst <= 1e-6,
               fmt("Miller recurrence vs finite-difference oracle, 100 instances, n <= 5: max rel diff %.3e <= 1e-6",
                   worst));
    });
}

void criterion_7() {
    const ModelParams classical = ModelParams::reference();
    const double star = steady_state(classical);
    const double horizon = std::log(1e4) / (classical.q * (1.0 - classical.mu));
    const double gap_exact = std::abs(exact_classical_value(classical, horizon) - star) / star;
    const double gap_abm1 = std::abs(solve_abm_fractional(classical, horizon, 4096).values.back() - star) / star;
    report("7a", gap_exact <= 1e-3 && gap_abm1 <= 1e-3,
           fmt("classical closed form and ABM(alpha=1) at T=%.1f reach k*=%.6f: rel gaps %.3e, %.3e <= 1e-3", horizon,
               star, gap_exact, gap_abm1));

    const ModelParams fractional = ModelParams::reference(0.8);
    const Trajectory tr = solve_abm_fractional(fractional, 600.0, 6000);
    bool monotone = true;
    for (std::size_t i = 1; i < tr.size(); ++i) {
        monotone = monotone && tr.values[i] > tr.values[i - 1] && tr.values[i] <= star * (1.0 + 1e-9);
    }
    const double gap_frac = std::abs(tr.values.back() - star) / star;
    report("7b", monotone && gap_frac <= 1e-2,
           fmt("fractional ABM alpha=0.8 to T=600: monotone approach %s, rel gap %.3e <= 1e-2",
               monotone ? "yes" : "no", gap_frac));

    const EquilibriumReport eq = find_equilibria(classical);
    ModelParams perturbed = classical;
    perturbed.k0 = 1e-6 * star;
    const bool moves_away = growth_rate(perturbed, perturbed.k0) > 0.0 &&
                            exact_classical_value(perturbed, 1.0) > perturbed.k0 &&
                            solve_abm_fractional(perturbed, 1.0, 256).values.back() > perturbed.k0;
    report("7c",
           eq.k_zero_stability == Stability::Unstable && eq.k_star_stability == Stability::AsymptoticallyStable &&
               moves_away,
           fmt("k=0 classified %s, k* classified %s; trajectory from 1e-6 k* moves away from 0: %s",
               std::string(to_string(eq.k_zero_stability)).c_str(),
               std::string(to_string(eq.k_star_stability)).c_str(), moves_away ? "yes" : "no"));

    ParamGenerator gen(7007);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mu = gen.uniform(0.05, 0.95);
        const std::vector<double> c{gen.uniform(0.5, 4.0), gen.uniform(-2.0, 2.0), gen.uniform(-2.0, 2.0)};
        const double expected = mu * c[2] * std::pow(c[0], mu - 1.0) +
                                0.5 * mu * (mu - 1.0) * c[1] * c[1] * std::pow(c[0], mu - 2.0);
        worst = std::max(worst, relative_difference(adomian_power_coeffs(mu, c)[2], expected));
    }
    report("7d", worst <= 1e-12, fmt("A2 closed form, 200 random instances: max rel diff %.3e <= 1e-12", worst));
}

/// Checks sign * (k[i+1] - k[i]) >= 0 (or > 0 when strict) along the axis at every t > 0.
bool axis_monotone(const SweepGrid& grid, TrajectoryMethod method, int sign, bool strict, int& columns) {
    std::map<double, std::vector<double>> by_t;
    for (const auto& row : grid.rows) {
        if (row.method == method && row.t > 0.0) {
            by_t[row.t].push_back(row.k);
        }
    }
    columns = static_cast<int>(by_t.size());
    for (const auto& [t, ks] : by_t) {
        for (std::size_t i = 1; i < ks.size(); ++i) {
            const double step = sign * (ks[i] - ks[i - 1]);
            if (strict ? !(step > 0.0) : !(step >= 0.0)) {
                return false;
            }
        }
    }
    return true;
}

void criterion_8() {
    timed("8", 10.0, [] {
        struct Shape {
            const char* preset;
            int sign;
            bool strict;
            const char* claim;
        };
        for (const Shape& s : {Shape{"fig-ktp", 1, false, "k nondecreasing in p"},
                               Shape{"fig-ktq", -1, false, "k nonincreasing in q"},
                               Shape{"fig-ktmu", 1, true, "k increasing in mu"}}) {
            SweepConfig c = sweep_preset(s.preset);
            c.method = SolveMethod::Both;
            const SweepGrid grid = run_sweep(c, 4);
            bool below = true;
            for (int i = 0; i < c.axis_count; ++i) {
                below = below && c.params_at(i).k0 < steady_state(c.params_at(i));
            }
            int columns = 0;
            const bool exact_ok = axis_monotone(grid, TrajectoryMethod::ExactClassical, s.sign, s.strict, columns);
            int series_columns = 0;
            const bool series_ok = axis_monotone(grid, TrajectoryMethod::Series, s.sign, s.strict, series_columns);
            report(fmt("8/%s", s.preset), below && exact_ok && series_ok,
                   fmt("%s: %s at all %d sampled t > 0 (closed form and series agree), k0 below every k*: %s",
                       s.preset, s.claim, columns, below ? "yes" : "no"));
        }

        // Smaller alpha gives a larger early response at t = 0.1.
        SweepConfig c = sweep_preset("fig-ktalpha");
        c.method = SolveMethod::Both;
        const SweepGrid grid = run_sweep(c, 4);
        std::vector<double> series_k, abm_k;
        for (const auto& row : grid.rows) {
            if (std::abs(row.t - 0.1) < 1e-12) {
                (row.method == TrajectoryMethod::Series ? series_k : abm_k).push_back(row.k);
            }
        }
        bool ordered = series_k.size() == static_cast<std::size_t>(c.axis_count) && abm_k.size() == series_k.size();
        for (std::size_t i = 1; ordered && i < series_k.size(); ++i) {
            ordered = series_k[i] < series_k[i - 1] && abm_k[i] < abm_k[i - 1];
        }
        report("8/fig-ktalpha", ordered,
               fmt("fig-ktalpha at t=0.1: k strictly decreasing in alpha over [%.2f, %.2f] (series and ABM): k from "
                   "%.6f to %.6f",
                   c.axis_min, c.axis_max, series_k.empty() ? 0.0 : series_k.front(),
                   series_k.empty() ? 0.0 : series_k.back()));
    });
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void criterion_9() {
    const auto dir = std::filesystem::temp_directory_path() / "solow_acceptance";
    std::filesystem::create_directories(dir);
    bool runs_equal = true, threads_equal = true;
    std::size_t bytes = 0;
    for (const auto& name : preset_names()) {
        SweepConfig c = sweep_preset(name);
        c.method = SolveMethod::Both;
        const auto a = (dir / (name + "-a.csv")).string();
        const auto b = (dir / (name + "-b.csv")).string();
        const auto p = (dir / (name + "-p.csv")).string();
        write_grid(run_sweep(c, 1), a, 1);
        write_grid(run_sweep(c, 1), b, 1);
        write_grid(run_sweep(c, 8), p, 8);
        const std::string first = slurp(a);
        bytes += first.size();
        runs_equal = runs_equal && first == slurp(b);
        threads_equal = threads_equal && first == slurp(p);
    }
    std::filesystem::remove_all(dir);
    report("9a", runs_equal, fmt("two serial runs of every preset (method both) write identical CSV bytes (%zu bytes)",
                                 bytes));
    report("9b", threads_equal, "serial and 8-thread sweeps write identical CSV bytes for every preset");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%d failing line(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
