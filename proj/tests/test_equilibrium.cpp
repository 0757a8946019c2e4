#include "solow/equilibrium.hpp"
#include "solow/errors.hpp"
#include "solow/oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <limits>

#include "generators.hpp"

using namespace solow;
using solow::testing::relative_difference;

TEST_SUITE("equilibrium") {
    TEST_CASE("fixed points and classification") {
        const EquilibriumReport r = find_equilibria(ModelParams::reference());
        CHECK(r.k_zero == 0.0);
        CHECK(r.k_zero_stability == Stability::Unstable);
        CHECK(r.derivative_at_zero == std::numeric_limits<double>::infinity());
        CHECK(r.k_star == doctest::Approx(std::pow(2.5, 1.5)).epsilon(1e-15));
        CHECK(r.k_star_stability == Stability::AsymptoticallyStable);
        CHECK(r.derivative_at_star == doctest::Approx(0.2 * (1.0 / 3 - 1.0)).epsilon(1e-14));
        CHECK(std::abs(r.rhs_at_star) <= 1e-12);
    }

    TEST_CASE("properties over random parameters") {
        solow::testing::ParamGenerator gen(61);
        for (int i = 0; i < 200; ++i) {
            const ModelParams m = gen.fractional();
            const EquilibriumReport r = find_equilibria(m);
            CHECK(relative_difference(r.k_star, std::pow(m.p / m.q, 1.0 / (1.0 - m.mu))) <= 1e-14);
            CHECK(std::abs(r.rhs_at_star) <= 1e-12 * std::max(1.0, r.k_star));
            CHECK(r.derivative_at_star < 0.0);
            CHECK(relative_difference(r.derivative_at_star, m.q * (m.mu - 1.0)) <= 1e-12);
            // The right-hand side peaks strictly between 0 and k_star.
            CHECK(r.inflection_k > 0.0);
            CHECK(r.inflection_k < r.k_star);
            CHECK(r.rhs_max >= growth_rate(m, r.inflection_k * 0.99));
            CHECK(r.rhs_max >= growth_rate(m, r.inflection_k * 1.01));
        }
    }

    TEST_CASE("p = q gives k_star = 1") {
        for (double mu : {0.1, 0.5, 0.9}) {
            CHECK(find_equilibria(ModelParams{0.7, 0.7, mu, 1.0, 1.0}).k_star == doctest::Approx(1.0).epsilon(1e-15));
        }
    }

    TEST_CASE("scale equivariance") {
        solow::testing::ParamGenerator gen(62);
        for (int i = 0; i < 50; ++i) {
            ModelParams m = gen.classical();
            const double base = steady_state(m);
            ModelParams scaled = m;
            const double lambda = gen.uniform(0.1, 10.0);
            scaled.p *= lambda;
            scaled.q *= lambda;
            CHECK(relative_difference(steady_state(scaled), base) <= 1e-13);
            ModelParams doubled = m;
            doubled.p *= 2.0;
            CHECK(relative_difference(steady_state(doubled), base * std::pow(2.0, 1.0 / (1.0 - m.mu))) <= 1e-13);
        }
    }

    TEST_CASE("classical trajectories converge") {
        // Horizon where exp(-q (1 - mu) T) = 1e-4.
        auto horizon = [](const ModelParams& m) { return std::log(1e4) / (m.q * (1.0 - m.mu)); };
        const ModelParams ref = ModelParams::reference();
        CHECK(relative_difference(exact_classical_value(ref, horizon(ref)), steady_state(ref)) <= 1e-3);

        // In general the remaining gap is about 1e-4 |k0^(1-mu) q/p - 1| / (1 - mu).
        solow::testing::ParamGenerator gen(63);
        for (int i = 0; i < 50; ++i) {
            const ModelParams m = gen.classical();
            const double spread = std::abs(std::pow(m.k0, 1.0 - m.mu) * m.q / m.p - 1.0);
            const double bound = 1.01e-4 * spread / (1.0 - m.mu) + 1e-14;
            CHECK(relative_difference(exact_classical_value(m, horizon(m)), steady_state(m)) <= bound);
        }
    }

    TEST_CASE("fractional trajectory converges slowly but surely") {
        const ModelParams m = ModelParams::reference(0.8);
        const Trajectory tr = solve_abm_fractional(m, 600.0, 6000);
        const double star = steady_state(m);
        CHECK(std::abs(tr.values.back() - star) / star <= 1e-2);
        for (std::size_t i = 1; i < tr.size(); ++i) {
            CHECK(tr.values[i] > tr.values[i - 1]);
        }
    }

    TEST_CASE("zero is repelling") {
        solow::testing::ParamGenerator gen(64);
        for (int i = 0; i < 50; ++i) {
            ModelParams m = gen.classical();
            m.k0 = 1e-6 * steady_state(m);
            CHECK(growth_rate(m, m.k0) > 0.0);
            CHECK(exact_classical_value(m, 0.5) > m.k0);
            CHECK(exact_classical_value(m, 1.0) > exact_classical_value(m, 0.5));
        }
    }

    TEST_CASE("balanced growth capital") {
        const ModelParams m = ModelParams::reference();
        const double star = steady_state(m);
        const BalancedGrowth late = balanced_growth_capital(m, 100.0, 0.02, 50.0);
        CHECK(late.capital == doctest::Approx(star * 100.0 * std::exp(1.0)).epsilon(1e-14));
        CHECK(late.near_equilibrium);

        const BalancedGrowth flat = balanced_growth_capital(m, 3.0, 0.0, 80.0);
        CHECK(flat.capital == doctest::Approx(3.0 * star).epsilon(1e-15));

        ModelParams settled = m;
        settled.k0 = star * 1.001;
        const BalancedGrowth now = balanced_growth_capital(settled, 1.0, 0.05, 0.0);
        CHECK(now.capital == doctest::Approx(star).epsilon(1e-15));
        CHECK(now.near_equilibrium);

        CHECK_FALSE(balanced_growth_capital(m, 1.0, 0.02, 1.0).near_equilibrium);
        CHECK_THROWS_AS(balanced_growth_capital(m, 0.0, 0.02, 1.0), InvalidArgument);
        CHECK_THROWS_AS(balanced_growth_capital(m, 1.0, 0.02, -1.0), InvalidArgument);
    }

    TEST_CASE("renderings") {
        const ModelParams m = ModelParams::reference();
        const EquilibriumReport r = find_equilibria(m);
        const auto j = nlohmann::json::parse(equilibrium_json(m, r));
        CHECK(j["k_zero"]["stability"] == "unstable");
        CHECK(j["k_zero"]["derivative"] == "+inf");
        CHECK(j["k_star"]["stability"] == "asymptotically stable");
        CHECK(j["k_star"]["value"].get<double>() == r.k_star);
        CHECK(j["rhs_maximum"]["k"].get<double>() == r.inflection_k);
        const std::string table = equilibrium_table(m, r);
        CHECK(table.find("unstable") != std::string::npos);
        CHECK(table.find("asymptotically stable") != std::string::npos);
        CHECK(to_string(Stability::Unstable) == "unstable");
    }

    TEST_CASE("validation") {
        ModelParams bad = ModelParams::reference();
        bad.q = 0.0;
        CHECK_THROWS_AS(find_equilibria(bad), InvalidArgument);
    }
}
