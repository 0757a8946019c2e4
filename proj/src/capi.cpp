#include "solow/solow.h"

#include "solow/equilibrium.hpp"
#include "solow/errors.hpp"
#include "solow/oracles.hpp"
#include "solow/series.hpp"
#include "solow/special_functions.hpp"
#include "solow/sweep.hpp"
#include "solow/transform.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct solow_series {
    solow::SeriesSolution solution;
};

struct solow_trajectory {
    solow::Trajectory trajectory;
};

struct solow_sweep_config {
    solow::SweepConfig config;
};

struct solow_sweep_grid {
    solow::SweepGrid grid;
};

struct solow_verify_report {
    solow::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

solow_status fail(solow_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
solow_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return SOLOW_OK;
    } catch (const solow::InvalidArgument& e) {
        return fail(SOLOW_ERR_INVALID_ARGUMENT, e.what());
    } catch (const solow::DomainError& e) {
        return fail(SOLOW_ERR_DOMAIN, e.what());
    } catch (const solow::SolverError& e) {
        return fail(SOLOW_ERR_SOLVER, e.what());
    } catch (const solow::ParseError& e) {
        return fail(SOLOW_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SOLOW_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SOLOW_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SOLOW_ERR_INTERNAL, "unknown error");
    }
}

solow::ModelParams to_cpp(const solow_params& p) {
    return {p.p, p.q, p.mu, p.alpha, p.k0};
}

solow::SolveMethod to_cpp(solow_method m) {
    switch (m) {
        case SOLOW_METHOD_SERIES: return solow::SolveMethod::Series;
        case SOLOW_METHOD_ABM: return solow::SolveMethod::Abm;
        case SOLOW_METHOD_EXACT: return solow::SolveMethod::Exact;
        case SOLOW_METHOD_BOTH: return solow::SolveMethod::Both;
    }
    throw solow::InvalidArgument("unknown method code");
}

solow_stability to_c(solow::Stability s) {
    return s == solow::Stability::Unstable ? SOLOW_UNSTABLE : SOLOW_ASYMPTOTICALLY_STABLE;
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define SOLOW_REQUIRE(ptr)                                                  \
    do {                                                                    \
        if ((ptr) == nullptr) {                                             \
            return fail(SOLOW_ERR_NULL_POINTER, #ptr " must not be NULL"); \
        }                                                                   \
    } while (0)

}  // namespace

extern "C" {

const char* solow_version(void) {
    return "1.0.0";
}

const char* solow_last_error(void) {
    return g_last_error.c_str();
}

const char* solow_status_string(solow_status status) {
    switch (status) {
        case SOLOW_OK: return "ok";
        case SOLOW_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SOLOW_ERR_DOMAIN: return "domain error";
        case SOLOW_ERR_SOLVER: return "solver error";
        case SOLOW_ERR_PARSE: return "parse error";
        case SOLOW_ERR_NULL_POINTER: return "null pointer";
        case SOLOW_ERR_OUT_OF_RANGE: return "index out of range";
        case SOLOW_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void solow_string_free(char* s) {
    std::free(s);
}

solow_params solow_reference_params(void) {
    const auto r = solow::ModelParams::reference();
    return {r.p, r.q, r.mu, r.alpha, r.k0};
}

solow_status solow_params_validate(const solow_params* params) {
    SOLOW_REQUIRE(params);
    return guarded([&] { to_cpp(*params).validate(); });
}

solow_status solow_parse_method(const char* name, solow_method* out) {
    SOLOW_REQUIRE(name);
    SOLOW_REQUIRE(out);
    return guarded([&] {
        switch (solow::parse_method(name)) {
            case solow::SolveMethod::Series: *out = SOLOW_METHOD_SERIES; break;
            case solow::SolveMethod::Abm: *out = SOLOW_METHOD_ABM; break;
            case solow::SolveMethod::Exact: *out = SOLOW_METHOD_EXACT; break;
            case solow::SolveMethod::Both: *out = SOLOW_METHOD_BOTH; break;
        }
    });
}

solow_status solow_ln_gamma(double x, double* out) {
    SOLOW_REQUIRE(out);
    return guarded([&] { *out = solow::ln_gamma(x); });
}

solow_status solow_mittag_leffler(double alpha, double z, double* out) {
    SOLOW_REQUIRE(out);
    return guarded([&] { *out = solow::mittag_leffler(alpha, z); });
}

solow_status solow_series_build(const solow_params* params, int order, solow_series** out) {
    SOLOW_REQUIRE(params);
    SOLOW_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new solow_series{solow::build_series(to_cpp(*params), order)}; });
}

void solow_series_destroy(solow_series* series) {
    delete series;
}

int solow_series_order(const solow_series* series) {
    return series == nullptr ? -1 : series->solution.order();
}

solow_status solow_series_coeffs(const solow_series* series, double* out, size_t len) {
    SOLOW_REQUIRE(series);
    SOLOW_REQUIRE(out);
    const auto& c = series->solution.coeffs();
    const size_t n = len < c.size() ? len : c.size();
    std::memcpy(out, c.data(), n * sizeof(double));
    return SOLOW_OK;
}

solow_status solow_series_eval(const solow_series* series, double t, double* value, int* trusted) {
    SOLOW_REQUIRE(series);
    SOLOW_REQUIRE(value);
    return guarded([&] {
        const auto v = solow::eval_series(series->solution, t);
        *value = v.value;
        if (trusted != nullptr) {
            *trusted = v.trusted ? 1 : 0;
        }
    });
}

solow_status solow_solve(const solow_params* params, solow_method method, double t_max, int samples, int order,
                         solow_trajectory** out) {
    SOLOW_REQUIRE(params);
    SOLOW_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        *out = new solow_trajectory{solow::run_solve(to_cpp(*params), t_max, samples, to_cpp(method), order)};
    });
}

void solow_trajectory_destroy(solow_trajectory* traj) {
    delete traj;
}

size_t solow_trajectory_size(const solow_trajectory* traj) {
    return traj == nullptr ? 0 : traj->trajectory.size();
}

const char* solow_trajectory_method(const solow_trajectory* traj) {
    if (traj == nullptr) {
        return "";
    }
    return solow::to_string(traj->trajectory.method).data();
}

solow_status solow_trajectory_point(const solow_trajectory* traj, size_t index, double* t, double* k,
                                    int* trusted) {
    SOLOW_REQUIRE(traj);
    const auto& tr = traj->trajectory;
    if (index >= tr.size()) {
        return fail(SOLOW_ERR_OUT_OF_RANGE, "trajectory index out of range");
    }
    if (t != nullptr) *t = tr.times[index];
    if (k != nullptr) *k = tr.values[index];
    if (trusted != nullptr) *trusted = tr.trusted[index];
    return SOLOW_OK;
}

solow_status solow_compare(const solow_params* params, double t_max, int samples, int order,
                           solow_compare_result* out) {
    SOLOW_REQUIRE(params);
    SOLOW_REQUIRE(out);
    return guarded([&] {
        const auto r = solow::compare_series_oracle(to_cpp(*params), t_max, samples, order);
        out->max_relative_gap = r.max_relative_gap;
        out->t_at_max = r.t_at_max;
        out->trusted_points = r.trusted_points;
        out->total_points = r.total_points;
        out->oracle = r.oracle == solow::TrajectoryMethod::ExactClassical ? SOLOW_METHOD_EXACT : SOLOW_METHOD_ABM;
    });
}

solow_status solow_find_equilibria(const solow_params* params, solow_equilibrium_report* out) {
    SOLOW_REQUIRE(params);
    SOLOW_REQUIRE(out);
    return guarded([&] {
        const auto r = solow::find_equilibria(to_cpp(*params));
        out->k_zero = r.k_zero;
        out->k_zero_stability = to_c(r.k_zero_stability);
        out->derivative_at_zero = r.derivative_at_zero;
        out->k_star = r.k_star;
        out->k_star_stability = to_c(r.k_star_stability);
        out->derivative_at_star = r.derivative_at_star;
        out->rhs_at_star = r.rhs_at_star;
        out->inflection_k = r.inflection_k;
        out->rhs_max = r.rhs_max;
    });
}

solow_status solow_equilibria_json(const solow_params* params, char** out) {
    SOLOW_REQUIRE(params);
    SOLOW_REQUIRE(out);
    return guarded([&] {
        const auto p = to_cpp(*params);
        *out = duplicate(solow::equilibrium_json(p, solow::find_equilibria(p)));
    });
}

solow_status solow_equilibria_table(const solow_params* params, char** out) {
    SOLOW_REQUIRE(params);
    SOLOW_REQUIRE(out);
    return guarded([&] {
        const auto p = to_cpp(*params);
        *out = duplicate(solow::equilibrium_table(p, solow::find_equilibria(p)));
    });
}

solow_status solow_balanced_growth_capital(const solow_params* params, double L0, double psi, double t,
                                           double* capital, int* near_equilibrium) {
    SOLOW_REQUIRE(params);
    SOLOW_REQUIRE(capital);
    return guarded([&] {
        const auto r = solow::balanced_growth_capital(to_cpp(*params), L0, psi, t);
        *capital = r.capital;
        if (near_equilibrium != nullptr) {
            *near_equilibrium = r.near_equilibrium ? 1 : 0;
        }
    });
}

solow_status solow_sweep_config_create(solow_sweep_config** out) {
    SOLOW_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new solow_sweep_config{}; });
}

solow_status solow_sweep_config_preset(const char* name, solow_sweep_config** out) {
    SOLOW_REQUIRE(name);
    SOLOW_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new solow_sweep_config{solow::sweep_preset(name)}; });
}

void solow_sweep_config_destroy(solow_sweep_config* config) {
    delete config;
}

solow_status solow_sweep_config_load(solow_sweep_config* config, const char* path) {
    SOLOW_REQUIRE(config);
    SOLOW_REQUIRE(path);
    return guarded([&] { config->config = solow::load_config_file(path, config->config); });
}

solow_status solow_sweep_config_set(solow_sweep_config* config, const char* key, const char* value) {
    SOLOW_REQUIRE(config);
    SOLOW_REQUIRE(key);
    SOLOW_REQUIRE(value);
    return guarded([&] { solow::apply_config_entry(config->config, key, value); });
}

solow_status solow_sweep_config_validate(const solow_sweep_config* config) {
    SOLOW_REQUIRE(config);
    return guarded([&] { config->config.validate(); });
}

solow_status solow_sweep_config_render(const solow_sweep_config* config, char** out) {
    SOLOW_REQUIRE(config);
    SOLOW_REQUIRE(out);
    return guarded([&] { *out = duplicate(solow::render_config(config->config)); });
}

size_t solow_preset_count(void) {
    return solow::preset_names().size();
}

const char* solow_preset_name(size_t index) {
    const auto& names = solow::preset_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

solow_status solow_sweep_run(const solow_sweep_config* config, unsigned threads, solow_sweep_grid** out) {
    SOLOW_REQUIRE(config);
    SOLOW_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new solow_sweep_grid{solow::run_sweep(config->config, threads)}; });
}

void solow_sweep_grid_destroy(solow_sweep_grid* grid) {
    delete grid;
}

size_t solow_sweep_grid_rows(const solow_sweep_grid* grid) {
    return grid == nullptr ? 0 : grid->grid.rows.size();
}

solow_status solow_sweep_grid_row(const solow_sweep_grid* grid, size_t index, double* t, double* axis, double* k,
                                  int* trusted, const char** method) {
    SOLOW_REQUIRE(grid);
    if (index >= grid->grid.rows.size()) {
        return fail(SOLOW_ERR_OUT_OF_RANGE, "grid row index out of range");
    }
    const auto& r = grid->grid.rows[index];
    if (t != nullptr) *t = r.t;
    if (axis != nullptr) *axis = r.axis;
    if (k != nullptr) *k = r.k;
    if (trusted != nullptr) *trusted = r.trusted ? 1 : 0;
    if (method != nullptr) *method = solow::csv_method_name(r.method).data();
    return SOLOW_OK;
}

solow_status solow_sweep_grid_csv(const solow_sweep_grid* grid, char** out) {
    SOLOW_REQUIRE(grid);
    SOLOW_REQUIRE(out);
    return guarded([&] { *out = duplicate(solow::to_csv(grid->grid.rows)); });
}

solow_status solow_sweep_grid_write(const solow_sweep_grid* grid, const char* path, unsigned threads) {
    SOLOW_REQUIRE(grid);
    SOLOW_REQUIRE(path);
    return guarded([&] { solow::write_grid(grid->grid, path, threads); });
}

solow_status solow_sweep_gnuplot_script(const solow_sweep_config* config, const char* csv_path, char** out) {
    SOLOW_REQUIRE(config);
    SOLOW_REQUIRE(csv_path);
    SOLOW_REQUIRE(out);
    return guarded([&] { *out = duplicate(solow::gnuplot_script(config->config, csv_path)); });
}

solow_status solow_verify_run(double tolerance, solow_verify_report** out) {
    SOLOW_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new solow_verify_report{solow::run_identity_suite(tolerance)}; });
}

void solow_verify_report_destroy(solow_verify_report* report) {
    delete report;
}

int solow_verify_passed(const solow_verify_report* report) {
    return report != nullptr && report->report.passed() ? 1 : 0;
}

solow_status solow_verify_table(const solow_verify_report* report, char** out) {
    SOLOW_REQUIRE(report);
    SOLOW_REQUIRE(out);
    return guarded([&] { *out = duplicate(report->report.table()); });
}

solow_status solow_verify_failures(const solow_verify_report* report, char** out) {
    SOLOW_REQUIRE(report);
    SOLOW_REQUIRE(out);
    return guarded([&] {
        std::string joined;
        for (const auto& name : report->report.failing_identities()) {
            joined += name;
            joined += '\n';
        }
        *out = duplicate(joined);
    });
}

}  // extern "C"
