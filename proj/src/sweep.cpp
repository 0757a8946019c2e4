#include "solow/sweep.hpp"

#include "solow/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace solow {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad real value for '" + std::string(key) + "': '" + std::string(text) + "'");
    }
    return value;
}

int parse_int(std::string_view key, std::string_view text) {
    text = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad integer value for '" + std::string(key) + "': '" + std::string(text) + "'");
    }
    return value;
}

void append_real(std::string& out, double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    (void)ec;
    out.append(buf, ptr);
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        v[static_cast<std::size_t>(i)] = (i == count - 1) ? hi : lo + (hi - lo) * i / (count - 1);
    }
    return v;
}

// All samples of one axis value, for each method in the config.
struct Column {
    std::vector<std::vector<double>> values;
    std::vector<std::vector<std::uint8_t>> trusted;
    std::vector<TrajectoryMethod> methods;
};

std::vector<SolveMethod> expand_methods(const SweepConfig& config, const ModelParams& params) {
    if (config.method == SolveMethod::Both) {
        return {SolveMethod::Series, oracle_method_for(params)};
    }
    return {config.method};
}

TrajectoryMethod trajectory_method(SolveMethod m) {
    switch (m) {
        case SolveMethod::Series: return TrajectoryMethod::Series;
        case SolveMethod::Exact: return TrajectoryMethod::ExactClassical;
        case SolveMethod::Abm: return TrajectoryMethod::AbmFractional;
        case SolveMethod::Both: break;
    }
    throw InvalidArgument("method 'both' has no single trajectory type");
}

Column evaluate_column(const SweepConfig& config, int axis_index) {
    const ModelParams params = config.params_at(axis_index);
    Column col;
    for (SolveMethod m : expand_methods(config, params)) {
        col.methods.push_back(trajectory_method(m));
        try {
            const Trajectory traj = run_solve(params, config.t_max, config.t_count, m, config.order);
            col.values.push_back(traj.values);
            col.trusted.push_back(traj.trusted);
        } catch (const SolverError&) {
            const auto n = static_cast<std::size_t>(config.t_count);
            col.values.emplace_back(n, std::numeric_limits<double>::quiet_NaN());
            col.trusted.emplace_back(n, 0);
        } catch (const DomainError&) {
            const auto n = static_cast<std::size_t>(config.t_count);
            col.values.emplace_back(n, std::numeric_limits<double>::quiet_NaN());
            col.trusted.emplace_back(n, 0);
        }
    }
    return col;
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::P: return "p";
        case SweepAxis::Q: return "q";
        case SweepAxis::Mu: return "mu";
        case SweepAxis::Alpha: return "alpha";
    }
    return "?";
}

std::string_view to_string(SolveMethod method) {
    switch (method) {
        case SolveMethod::Series: return "series";
        case SolveMethod::Abm: return "abm";
        case SolveMethod::Exact: return "exact";
        case SolveMethod::Both: return "both";
    }
    return "?";
}

SweepAxis parse_axis(std::string_view text) {
    text = trim(text);
    if (text == "p") return SweepAxis::P;
    if (text == "q") return SweepAxis::Q;
    if (text == "mu") return SweepAxis::Mu;
    if (text == "alpha") return SweepAxis::Alpha;
    throw ParseError("unknown sweep axis '" + std::string(text) + "' (expected p, q, mu or alpha)");
}

SolveMethod parse_method(std::string_view text) {
    text = trim(text);
    if (text == "series") return SolveMethod::Series;
    if (text == "abm") return SolveMethod::Abm;
    if (text == "exact") return SolveMethod::Exact;
    if (text == "both") return SolveMethod::Both;
    throw ParseError("unknown method '" + std::string(text) + "' (expected series, abm, exact or both)");
}

std::string_view csv_method_name(TrajectoryMethod method) {
    switch (method) {
        case TrajectoryMethod::Series: return "series";
        case TrajectoryMethod::ExactClassical: return "exact";
        case TrajectoryMethod::AbmFractional: return "abm";
    }
    return "?";
}

TrajectoryMethod parse_csv_method(std::string_view text) {
    if (text == "series") return TrajectoryMethod::Series;
    if (text == "exact") return TrajectoryMethod::ExactClassical;
    if (text == "abm") return TrajectoryMethod::AbmFractional;
    throw ParseError("unknown CSV method '" + std::string(text) + "'");
}

double SweepConfig::axis_value(int index) const {
    return (index == axis_count - 1) ? axis_max : axis_min + (axis_max - axis_min) * index / (axis_count - 1);
}

double SweepConfig::time_value(int index) const {
    return (index == t_count - 1) ? t_max : t_max * index / (t_count - 1);
}

ModelParams SweepConfig::params_at(int axis_index) const {
    ModelParams params = base;
    const double v = axis_value(axis_index);
    switch (axis) {
        case SweepAxis::P: params.p = v; break;
        case SweepAxis::Q: params.q = v; break;
        case SweepAxis::Mu: params.mu = v; break;
        case SweepAxis::Alpha: params.alpha = v; break;
    }
    return params;
}

void SweepConfig::validate() const {
    if (axis_count < 2 || t_count < 2) {
        throw InvalidArgument("sweep counts must be >= 2");
    }
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw InvalidArgument("t_max must be positive");
    }
    if (!(axis_min <= axis_max)) {
        throw InvalidArgument("axis_min must not exceed axis_max");
    }
    if (order < 1 || order > kMaxSeriesOrder) {
        throw InvalidArgument("series order must lie in [1, 64]");
    }
    // Each constraint is an interval, so the two end points cover the axis.
    for (int i : {0, axis_count - 1}) {
        const ModelParams params = params_at(i);
        try {
            params.validate();
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(std::string(e.what()) + " (at " + std::string(to_string(axis)) + "=" +
                                  std::to_string(axis_value(i)) + ")");
        }
        if (method == SolveMethod::Exact && params.alpha != 1.0) {
            throw InvalidArgument("method 'exact' requires alpha == 1 across the sweep");
        }
    }
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"fig-ktq", "fig-ktp", "fig-ktmu", "fig-ktq-frac", "fig-ktalpha"};
    return names;
}

SweepConfig sweep_preset(std::string_view name) {
    SweepConfig c;
    c.base = ModelParams::reference(1.0);
    if (name == "fig-ktq") {
        c.axis = SweepAxis::Q;
        c.axis_min = 0.05;
        c.axis_max = 0.45;
    } else if (name == "fig-ktp") {
        c.axis = SweepAxis::P;
        c.axis_min = 0.25;
        c.axis_max = 1.0;
    } else if (name == "fig-ktmu") {
        c.axis = SweepAxis::Mu;
        c.axis_min = 0.1;
        c.axis_max = 0.9;
    } else if (name == "fig-ktq-frac") {
        c.base.alpha = 0.8;
        c.axis = SweepAxis::Q;
        c.axis_min = 0.05;
        c.axis_max = 0.45;
    } else if (name == "fig-ktalpha") {
        c.base.alpha = 0.8;
        c.axis = SweepAxis::Alpha;
        c.axis_min = 0.5;
        c.axis_max = 1.0;
    } else {
        throw InvalidArgument("unknown preset '" + std::string(name) + "'");
    }
    return c;
}

void apply_config_entry(SweepConfig& c, std::string_view key, std::string_view value) {
    key = trim(key);
    if (key == "p") c.base.p = parse_real(key, value);
    else if (key == "q") c.base.q = parse_real(key, value);
    else if (key == "mu") c.base.mu = parse_real(key, value);
    else if (key == "alpha") c.base.alpha = parse_real(key, value);
    else if (key == "k0") c.base.k0 = parse_real(key, value);
    else if (key == "axis") c.axis = parse_axis(value);
    else if (key == "axis_min") c.axis_min = parse_real(key, value);
    else if (key == "axis_max") c.axis_max = parse_real(key, value);
    else if (key == "axis_count") c.axis_count = parse_int(key, value);
    else if (key == "t_max") c.t_max = parse_real(key, value);
    else if (key == "t_count") c.t_count = parse_int(key, value);
    else if (key == "order") c.order = parse_int(key, value);
    else if (key == "method") c.method = parse_method(value);
    else throw ParseError("unknown config key '" + std::string(key) + "'");
}

SweepConfig parse_config(std::istream& in, SweepConfig base) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        try {
            apply_config_entry(base, view.substr(0, eq), view.substr(eq + 1));
        } catch (const ParseError& e) {
            throw ParseError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return base;
}

SweepConfig load_config_file(const std::string& path, SweepConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'");
    }
    return parse_config(in, base);
}

std::string render_config(const SweepConfig& c) {
    std::string out;
    auto real = [&](std::string_view key, double v) {
        out.append(key);
        out.push_back('=');
        append_real(out, v);
        out.push_back('\n');
    };
    auto text = [&](std::string_view key, std::string_view v) {
        out.append(key);
        out.push_back('=');
        out.append(v);
        out.push_back('\n');
    };
    real("p", c.base.p);
    real("q", c.base.q);
    real("mu", c.base.mu);
    real("alpha", c.base.alpha);
    real("k0", c.base.k0);
    text("axis", to_string(c.axis));
    real("axis_min", c.axis_min);
    real("axis_max", c.axis_max);
    text("axis_count", std::to_string(c.axis_count));
    real("t_max", c.t_max);
    text("t_count", std::to_string(c.t_count));
    text("order", std::to_string(c.order));
    text("method", to_string(c.method));
    return out;
}

int abm_steps_for(int t_count) {
    const int intervals = std::max(t_count - 1, 1);
    const int per_interval = (1024 + intervals - 1) / intervals;
    return std::max(per_interval * intervals, kMinAbmSteps);
}

SolveMethod oracle_method_for(const ModelParams& params) {
    return params.alpha == 1.0 ? SolveMethod::Exact : SolveMethod::Abm;
}

Trajectory run_solve(const ModelParams& params, double t_max, int samples, SolveMethod method, int order) {
    params.validate();
    if (!(t_max > 0.0) || !std::isfinite(t_max)) {
        throw InvalidArgument("t_max must be positive");
    }
    if (samples < 2) {
        throw InvalidArgument("need at least 2 samples");
    }
    const std::vector<double> times = linspace(0.0, t_max, samples);
    switch (method) {
        case SolveMethod::Series: {
            const SeriesSolution sol = build_series(params, order);
            Trajectory traj;
            traj.method = TrajectoryMethod::Series;
            traj.times = times;
            for (double t : times) {
                const SeriesValue v = eval_series(sol, t);
                traj.values.push_back(v.value);
                traj.trusted.push_back(v.trusted ? 1 : 0);
            }
            return traj;
        }
        case SolveMethod::Exact:
            return solve_exact_classical(params, times);
        case SolveMethod::Abm: {
            const int steps = abm_steps_for(samples);
            const Trajectory full = solve_abm_fractional(params, t_max, steps);
            const int stride = steps / (samples - 1);
            Trajectory traj;
            traj.method = TrajectoryMethod::AbmFractional;
            traj.times = times;
            for (int i = 0; i < samples; ++i) {
                traj.values.push_back(full.values[static_cast<std::size_t>(i * stride)]);
            }
            traj.trusted.assign(times.size(), 1);
            return traj;
        }
        case SolveMethod::Both: break;
    }
    throw InvalidArgument("run_solve: choose a single method (series, abm or exact)");
}

CompareResult compare_series_oracle(const ModelParams& params, double t_max, int samples, int order) {
    const Trajectory series = run_solve(params, t_max, samples, SolveMethod::Series, order);
    const Trajectory oracle = run_solve(params, t_max, samples, oracle_method_for(params), order);
    CompareResult result;
    result.oracle = oracle.method;
    result.total_points = series.size();
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!series.trusted[i]) {
            continue;
        }
        ++result.trusted_points;
        const double gap = std::abs(series.values[i] - oracle.values[i]) / std::abs(oracle.values[i]);
        if (gap > result.max_relative_gap) {
            result.max_relative_gap = gap;
            result.t_at_max = series.times[i];
        }
    }
    return result;
}

SweepGrid run_sweep(const SweepConfig& config, unsigned threads) {
    config.validate();
    const auto n_axis = static_cast<std::size_t>(config.axis_count);
    std::vector<Column> columns(n_axis);

    const unsigned workers = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(n_axis));
    if (workers == 1) {
        for (std::size_t i = 0; i < n_axis; ++i) {
            columns[i] = evaluate_column(config, static_cast<int>(i));
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n_axis; i = next++) {
                    columns[i] = evaluate_column(config, static_cast<int>(i));
                }
            });
        }
    }

    SweepGrid grid;
    grid.config = config;
    for (int ti = 0; ti < config.t_count; ++ti) {
        const double t = config.time_value(ti);
        for (std::size_t ai = 0; ai < n_axis; ++ai) {
            const Column& col = columns[ai];
            for (std::size_t m = 0; m < col.methods.size(); ++m) {
                const auto idx = static_cast<std::size_t>(ti);
                const double k = col.values[m][idx];
                grid.rows.push_back(
                    {t, config.axis_value(static_cast<int>(ai)), k, col.trusted[m][idx] != 0 && std::isfinite(k),
                     col.methods[m]});
            }
        }
    }
    return grid;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out(kCsvHeader);
    out.push_back('\n');
    for (const auto& r : rows) {
        append_real(out, r.t);
        out.push_back(',');
        append_real(out, r.axis);
        out.push_back(',');
        append_real(out, r.k);
        out.append(r.trusted ? ",1," : ",0,");
        out.append(csv_method_name(r.method));
        out.push_back('\n');
    }
    return out;
}

std::vector<SweepRow> parse_csv(std::string_view text) {
    std::vector<SweepRow> rows;
    std::size_t pos = 0;
    int line_no = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw ParseError("CSV header must be '" + std::string(kCsvHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::string_view fields[5];
        std::size_t start = 0;
        for (int f = 0; f < 5; ++f) {
            const auto comma = line.find(',', start);
            if ((comma == std::string_view::npos) != (f == 4)) {
                throw ParseError("CSV line " + std::to_string(line_no) + ": expected 5 fields");
            }
            fields[f] = line.substr(start, comma == std::string_view::npos ? line.size() - start : comma - start);
            start = comma + 1;
        }
        if (fields[3] != "0" && fields[3] != "1") {
            throw ParseError("CSV line " + std::to_string(line_no) + ": trusted must be 0 or 1");
        }
        rows.push_back({parse_real("t", fields[0]), parse_real("axis", fields[1]), parse_real("k", fields[2]),
                        fields[3] == "1", parse_csv_method(fields[4])});
    }
    if (!header_seen) {
        throw ParseError("empty CSV");
    }
    return rows;
}

std::string sweep_metadata_json(const SweepGrid& grid, unsigned threads) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);

    const SweepConfig& c = grid.config;
    nlohmann::ordered_json j;
    j["generated_at"] = stamp;
    j["threads"] = threads;
    j["rows"] = grid.rows.size();
    j["config"] = {{"p", c.base.p},
                   {"q", c.base.q},
                   {"mu", c.base.mu},
                   {"alpha", c.base.alpha},
                   {"k0", c.base.k0},
                   {"axis", to_string(c.axis)},
                   {"axis_min", c.axis_min},
                   {"axis_max", c.axis_max},
                   {"axis_count", c.axis_count},
                   {"t_max", c.t_max},
                   {"t_count", c.t_count},
                   {"order", c.order},
                   {"method", to_string(c.method)}};
    j["trust_tolerance"] = kTrustTolerance;
    return j.dump(2) + "\n";
}

void write_grid(const SweepGrid& grid, const std::string& path, unsigned threads) {
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ParseError("cannot write '" + path + "'");
        }
        out << to_csv(grid.rows);
    }
    std::ofstream meta(path + ".meta.json", std::ios::binary | std::ios::trunc);
    if (!meta) {
        throw ParseError("cannot write '" + path + ".meta.json'");
    }
    meta << sweep_metadata_json(grid, threads);
}

std::string gnuplot_script(const SweepConfig& config, const std::string& csv_path) {
    std::ostringstream os;
    const std::string axis(to_string(config.axis));
    os << "# k(t, " << axis << ") surface from " << csv_path << "\n"
       << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set xlabel 't'\n"
       << "set ylabel '" << axis << "'\n"
       << "set zlabel 'k'\n"
       << "set ticslevel 0\n"
       << "set title 'k(t, " << axis << "), " << to_string(config.method) << "'\n"
       << "# column 4 is the trust flag; untrusted samples are dropped\n"
       << "splot '" << csv_path << "' using 1:2:($4 == 1 ? $3 : NaN) with points pt 7 ps 0.5 notitle\n"
       << "pause -1\n";
    return os.str();
}

}  // namespace solow
