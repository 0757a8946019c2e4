// solow: command-line front end over the C API in libsolow.
//
//   solow solve       one trajectory (series, abm, exact or both)
//   solow sweep       k(t, axis) grid as CSV
//   solow equilibria  fixed points and stability
//   solow verify      transform identity suite
//   solow compare     series vs. oracle on the trusted region
//
// Exit codes: 0 success, 1 verification/comparison (or solver) failure,
// 2 usage or validation error.

#include "solow/solow.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
};

int exit_code_for(solow_status status) {
    switch (status) {
        case SOLOW_OK: return kExitOk;
        case SOLOW_ERR_INVALID_ARGUMENT:
        case SOLOW_ERR_DOMAIN:
        case SOLOW_ERR_PARSE:
        case SOLOW_ERR_NULL_POINTER:
        case SOLOW_ERR_OUT_OF_RANGE: return kExitUsage;
        default: return kExitFailure;
    }
}

void check(solow_status status, const char* what) {
    if (status != SOLOW_OK) {
        std::cerr << "solow: " << what << ": " << solow_status_string(status) << ": " << solow_last_error() << "\n";
        throw CliError{exit_code_for(status)};
    }
}

struct StringDeleter {
    void operator()(char* s) const { solow_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SeriesDeleter {
    void operator()(solow_series* s) const { solow_series_destroy(s); }
};
struct TrajectoryDeleter {
    void operator()(solow_trajectory* t) const { solow_trajectory_destroy(t); }
};
struct ConfigDeleter {
    void operator()(solow_sweep_config* c) const { solow_sweep_config_destroy(c); }
};
struct GridDeleter {
    void operator()(solow_sweep_grid* g) const { solow_sweep_grid_destroy(g); }
};
struct ReportDeleter {
    void operator()(solow_verify_report* r) const { solow_verify_report_destroy(r); }
};

std::string real_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Model flags shared by several subcommands; unset flags keep the defaults.
struct ModelFlags {
    std::optional<double> p, q, mu, alpha, k0;

    void attach(CLI::App* app) {
        app->add_option("--p", p, "productivity coefficient");
        app->add_option("--q", q, "depreciation plus labour growth rate");
        app->add_option("--mu", mu, "capital elasticity in (0, 1)");
        app->add_option("--alpha", alpha, "fractional order in (0, 1]");
        app->add_option("--k0", k0, "initial capital-labour ratio");
    }

    [[nodiscard]] solow_params resolve() const {
        solow_params params = solow_reference_params();
        if (p) params.p = *p;
        if (q) params.q = *q;
        if (mu) params.mu = *mu;
        if (alpha) params.alpha = *alpha;
        if (k0) params.k0 = *k0;
        check(solow_params_validate(&params), "parameters");
        return params;
    }

    void apply(solow_sweep_config* config) const {
        auto set = [&](const char* key, const std::optional<double>& v) {
            if (v) check(solow_sweep_config_set(config, key, real_text(*v).c_str()), key);
        };
        set("p", p);
        set("q", q);
        set("mu", mu);
        set("alpha", alpha);
        set("k0", k0);
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "solow: cannot write '" << path << "'\n";
        throw CliError{kExitUsage};
    }
    out << text;
}

std::string trajectory_rows(const solow_trajectory* traj, const char* method) {
    std::string out;
    const size_t n = solow_trajectory_size(traj);
    for (size_t i = 0; i < n; ++i) {
        double t = 0.0, k = 0.0;
        int trusted = 0;
        check(solow_trajectory_point(traj, i, &t, &k, &trusted), "trajectory");
        out += real_text(t) + "," + real_text(k) + "," + (trusted ? "1" : "0") + "," + method + "\n";
    }
    return out;
}

const char* short_name(solow_method m) {
    switch (m) {
        case SOLOW_METHOD_SERIES: return "series";
        case SOLOW_METHOD_ABM: return "abm";
        case SOLOW_METHOD_EXACT: return "exact";
        case SOLOW_METHOD_BOTH: return "both";
    }
    return "?";
}

struct SolveArgs {
    ModelFlags model;
    int order = 5;
    double t_max = 2.0;
    int samples = 41;
    std::string method = "series";
    std::string out;
};

int run_solve(const SolveArgs& args) {
    const solow_params params = args.model.resolve();
    solow_method method{};
    check(solow_parse_method(args.method.c_str(), &method), "method");

    std::vector<solow_method> methods{method};
    if (method == SOLOW_METHOD_BOTH) {
        methods = {SOLOW_METHOD_SERIES, params.alpha == 1.0 ? SOLOW_METHOD_EXACT : SOLOW_METHOD_ABM};
    }
    std::string csv = "t,k,trusted,method\n";
    for (solow_method m : methods) {
        solow_trajectory* raw = nullptr;
        check(solow_solve(&params, m, args.t_max, args.samples, args.order, &raw), "solve");
        std::unique_ptr<solow_trajectory, TrajectoryDeleter> traj(raw);
        csv += trajectory_rows(traj.get(), short_name(m));
    }
    emit(csv, args.out);

    if (method == SOLOW_METHOD_BOTH) {
        solow_compare_result cmp{};
        check(solow_compare(&params, args.t_max, args.samples, args.order, &cmp), "compare");
        std::cerr << "max relative gap on trusted region: " << real_text(cmp.max_relative_gap) << " ("
                  << cmp.trusted_points << "/" << cmp.total_points << " trusted samples)\n";
    }
    return kExitOk;
}

struct SweepArgs {
    ModelFlags model;
    std::string preset;
    std::string config_path;
    std::optional<int> order;
    std::optional<double> t_max;
    std::optional<int> samples;
    std::optional<std::string> method;
    std::optional<std::string> axis;
    std::optional<double> axis_min, axis_max;
    std::optional<int> axis_count;
    unsigned threads = 0;
    std::string out;
    std::string gnuplot;
    bool print_config = false;
};

int run_sweep(const SweepArgs& args) {
    solow_sweep_config* raw = nullptr;
    if (args.preset.empty()) {
        check(solow_sweep_config_create(&raw), "config");
    } else {
        check(solow_sweep_config_preset(args.preset.c_str(), &raw), "preset");
    }
    std::unique_ptr<solow_sweep_config, ConfigDeleter> config(raw);
    if (!args.config_path.empty()) {
        check(solow_sweep_config_load(config.get(), args.config_path.c_str()), "config file");
    }
    args.model.apply(config.get());
    auto set_int = [&](const char* key, const std::optional<int>& v) {
        if (v) check(solow_sweep_config_set(config.get(), key, std::to_string(*v).c_str()), key);
    };
    auto set_real = [&](const char* key, const std::optional<double>& v) {
        if (v) check(solow_sweep_config_set(config.get(), key, real_text(*v).c_str()), key);
    };
    auto set_text = [&](const char* key, const std::optional<std::string>& v) {
        if (v) check(solow_sweep_config_set(config.get(), key, v->c_str()), key);
    };
    set_int("order", args.order);
    set_real("t_max", args.t_max);
    set_int("t_count", args.samples);
    set_text("method", args.method);
    set_text("axis", args.axis);
    set_real("axis_min", args.axis_min);
    set_real("axis_max", args.axis_max);
    set_int("axis_count", args.axis_count);
    check(solow_sweep_config_validate(config.get()), "sweep config");

    if (args.print_config) {
        char* text = nullptr;
        check(solow_sweep_config_render(config.get(), &text), "config");
        std::cerr << OwnedString(text).get();
    }

    const unsigned threads = args.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : args.threads;
    solow_sweep_grid* grid_raw = nullptr;
    check(solow_sweep_run(config.get(), threads, &grid_raw), "sweep");
    std::unique_ptr<solow_sweep_grid, GridDeleter> grid(grid_raw);

    if (args.out.empty() || args.out == "-") {
        char* csv = nullptr;
        check(solow_sweep_grid_csv(grid.get(), &csv), "csv");
        std::cout << OwnedString(csv).get();
    } else {
        check(solow_sweep_grid_write(grid.get(), args.out.c_str(), threads), "write");
    }
    if (!args.gnuplot.empty()) {
        char* script = nullptr;
        const std::string data = args.out.empty() || args.out == "-" ? "sweep.csv" : args.out;
        check(solow_sweep_gnuplot_script(config.get(), data.c_str(), &script), "gnuplot script");
        emit(OwnedString(script).get(), args.gnuplot);
    }
    return kExitOk;
}

int run_equilibria(const ModelFlags& model, bool json, const std::string& out) {
    const solow_params params = model.resolve();
    char* text = nullptr;
    if (json) {
        check(solow_equilibria_json(&params, &text), "equilibria");
    } else {
        check(solow_equilibria_table(&params, &text), "equilibria");
    }
    emit(OwnedString(text).get(), out);
    return kExitOk;
}

int run_verify(double tolerance) {
    solow_verify_report* raw = nullptr;
    check(solow_verify_run(tolerance, &raw), "verify");
    std::unique_ptr<solow_verify_report, ReportDeleter> report(raw);
    char* table = nullptr;
    check(solow_verify_table(report.get(), &table), "verify");
    std::cout << OwnedString(table).get();
    if (solow_verify_passed(report.get())) {
        std::cout << "all identities within tolerance\n";
        return kExitOk;
    }
    char* failures = nullptr;
    check(solow_verify_failures(report.get(), &failures), "verify");
    std::cerr << "failing identities:\n" << OwnedString(failures).get();
    return kExitFailure;
}

int run_compare(const SolveArgs& args, double tolerance) {
    const solow_params params = args.model.resolve();
    solow_compare_result cmp{};
    check(solow_compare(&params, args.t_max, args.samples, args.order, &cmp), "compare");
    std::cout << "oracle: " << short_name(cmp.oracle) << "\n"
              << "trusted samples: " << cmp.trusted_points << "/" << cmp.total_points << "\n"
              << "max relative gap: " << real_text(cmp.max_relative_gap) << " at t=" << real_text(cmp.t_at_max)
              << "\n"
              << "tolerance: " << real_text(tolerance) << "\n";
    const bool ok = cmp.max_relative_gap <= tolerance;
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical and Caputo-fractional Solow-Swan solver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", solow_version());

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "sample one trajectory");
    solve.model.attach(solve_cmd);
    solve_cmd->add_option("--order", solve.order, "series truncation order")->capture_default_str();
    solve_cmd->add_option("--t-max", solve.t_max, "horizon")->capture_default_str();
    solve_cmd->add_option("--samples", solve.samples, "number of samples on [0, t-max]")->capture_default_str();
    solve_cmd->add_option("--method", solve.method, "series | abm | exact | both")->capture_default_str();
    solve_cmd->add_option("--out", solve.out, "output CSV (default stdout)");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "k(t, axis) grid as CSV");
    sweep.model.attach(sweep_cmd);
    sweep_cmd->add_option("--preset", sweep.preset, "fig-ktq | fig-ktp | fig-ktmu | fig-ktq-frac | fig-ktalpha");
    sweep_cmd->add_option("--config", sweep.config_path, "key=value config file");
    sweep_cmd->add_option("--order", sweep.order, "series truncation order");
    sweep_cmd->add_option("--t-max", sweep.t_max, "horizon");
    sweep_cmd->add_option("--samples", sweep.samples, "number of t samples");
    sweep_cmd->add_option("--method", sweep.method, "series | abm | exact | both");
    sweep_cmd->add_option("--axis", sweep.axis, "swept parameter: p | q | mu | alpha");
    sweep_cmd->add_option("--axis-min", sweep.axis_min, "first axis value");
    sweep_cmd->add_option("--axis-max", sweep.axis_max, "last axis value");
    sweep_cmd->add_option("--axis-count", sweep.axis_count, "number of axis values");
    sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0 = hardware)");
    sweep_cmd->add_option("--out", sweep.out, "output CSV; a .meta.json sidecar is written next to it");
    sweep_cmd->add_option("--gnuplot-script", sweep.gnuplot, "also write a gnuplot script to this path");
    sweep_cmd->add_flag("--print-config", sweep.print_config, "echo the resolved config to stderr");

    ModelFlags eq_model;
    bool eq_json = false;
    std::string eq_out;
    auto* eq_cmd = app.add_subcommand("equilibria", "fixed points and stability");
    eq_model.attach(eq_cmd);
    eq_cmd->add_flag("--json", eq_json, "print JSON instead of a table");
    eq_cmd->add_option("--out", eq_out, "write the report to a file");

    double verify_tol = -1.0;
    auto* verify_cmd = app.add_subcommand("verify", "check the transform identities by quadrature");
    verify_cmd->add_option("--tolerance", verify_tol, "override every tolerance (negative keeps defaults)");

    SolveArgs compare;
    double compare_tol = 1e-3;
    auto* compare_cmd = app.add_subcommand("compare", "series vs. exact/ABM oracle on the trusted region");
    compare.model.attach(compare_cmd);
    compare_cmd->add_option("--order", compare.order, "series truncation order")->capture_default_str();
    compare_cmd->add_option("--t-max", compare.t_max, "horizon")->capture_default_str();
    compare_cmd->add_option("--samples", compare.samples, "number of samples")->capture_default_str();
    compare_cmd->add_option("--tolerance", compare_tol, "largest accepted relative gap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve);
        if (sweep_cmd->parsed()) return run_sweep(sweep);
        if (eq_cmd->parsed()) return run_equilibria(eq_model, eq_json, eq_out);
        if (verify_cmd->parsed()) return run_verify(verify_tol);
        if (compare_cmd->parsed()) return run_compare(compare, compare_tol);
    } catch (const CliError& e) {
        return e.code;
    }
    return kExitUsage;
}
