#pragma once

#include "solow/oracles.hpp"
#include "solow/params.hpp"
#include "solow/series.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace solow {

enum class SweepAxis { P, Q, Mu, Alpha };
enum class SolveMethod { Series, Abm, Exact, Both };

std::string_view to_string(SweepAxis axis);
std::string_view to_string(SolveMethod method);
SweepAxis parse_axis(std::string_view text);
SolveMethod parse_method(std::string_view text);

/// Short method tag used in CSV rows: series | exact | abm.
std::string_view csv_method_name(TrajectoryMethod method);
TrajectoryMethod parse_csv_method(std::string_view text);

/// A parameter sweep: one model per axis value, sampled on a uniform t grid.
struct SweepConfig {
    ModelParams base = ModelParams::reference();
    SweepAxis axis = SweepAxis::Q;
    double axis_min = 0.05;
    double axis_max = 0.45;
    int axis_count = 21;
    double t_max = 2.0;
    int t_count = 41;
    int order = kDefaultSeriesOrder;
    SolveMethod method = SolveMethod::Series;

    /// Throws InvalidArgument if any axis value gives invalid params, a count
    /// is below 2, t_max <= 0, or method = exact meets alpha != 1.
    void validate() const;

    [[nodiscard]] double axis_value(int index) const;
    [[nodiscard]] double time_value(int index) const;
    [[nodiscard]] ModelParams params_at(int axis_index) const;

    friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// fig-ktq, fig-ktp, fig-ktmu, fig-ktq-frac, fig-ktalpha.
const std::vector<std::string>& preset_names();
SweepConfig sweep_preset(std::string_view name);

/// Applies one key=value entry. Keys: p q mu alpha k0 axis axis_min axis_max
/// axis_count t_max t_count order method. Unknown keys throw ParseError.
void apply_config_entry(SweepConfig& config, std::string_view key, std::string_view value);

/// Reads flat key=value lines ('#' starts a comment) on top of `base`.
SweepConfig parse_config(std::istream& in, SweepConfig base = {});
SweepConfig load_config_file(const std::string& path, SweepConfig base = {});
std::string render_config(const SweepConfig& config);

struct SweepRow {
    double t;
    double axis;
    double k;
    bool trusted;
    TrajectoryMethod method;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepGrid {
    SweepConfig config;
    /// t-major, then axis, then method (series before the oracle).
    std::vector<SweepRow> rows;
};

/// ABM steps used for a t grid: the smallest multiple of (t_count - 1) that
/// is at least 1024, so every sample lands on a solver node.
int abm_steps_for(int t_count);

/// Evaluates every axis column independently on up to `threads` workers.
/// The result does not depend on `threads`. A column whose solver fails is
/// emitted as NaN rows marked untrusted.
SweepGrid run_sweep(const SweepConfig& config, unsigned threads = 1);

inline constexpr std::string_view kCsvHeader = "t,axis,k,trusted,method";

/// Header plus one LF-terminated line per row, reals with 17 significant digits.
std::string to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(std::string_view text);

/// Writes the CSV to `path` and run metadata to `path + ".meta.json"`.
void write_grid(const SweepGrid& grid, const std::string& path, unsigned threads);
std::string sweep_metadata_json(const SweepGrid& grid, unsigned threads);

/// Companion gnuplot script plotting k over (t, axis) from the CSV.
std::string gnuplot_script(const SweepConfig& config, const std::string& csv_path);

/// Uniform samples of one backend on [0, t_max]. method must not be Both.
Trajectory run_solve(const ModelParams& params, double t_max, int samples, SolveMethod method,
                     int order = kDefaultSeriesOrder);

/// Backend used to check a series: exact when alpha == 1, ABM otherwise.
SolveMethod oracle_method_for(const ModelParams& params);

struct CompareResult {
    double max_relative_gap = 0.0;
    double t_at_max = 0.0;
    std::size_t trusted_points = 0;
    std::size_t total_points = 0;
    TrajectoryMethod oracle = TrajectoryMethod::ExactClassical;
};

inline constexpr double kCompareTolerance = 1e-3;

/// Series vs. oracle on the samples where the series is trusted.
CompareResult compare_series_oracle(const ModelParams& params, double t_max, int samples,
                                    int order = kDefaultSeriesOrder);

}  // namespace solow
