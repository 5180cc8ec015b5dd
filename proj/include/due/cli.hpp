#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "due/metrics.hpp"
#include "due/network.hpp"
#include "due/solvers.hpp"

namespace due {

/// Time grid as written in a config: exactly one of num_intervals and
/// dt_seconds. A step that does not divide the window extends t1.
struct GridSpec {
    double t0 = 0.0;  ///< hours
    double t1 = 1.0;  ///< hours
    std::optional<std::size_t> num_intervals;
    std::optional<double> dt_seconds;

    TimeGrid build() const;
};

/// Contents of a run config. Paths are resolved against the config file.
struct RunConfig {
    std::string name;
    std::filesystem::path network;
    GridSpec grid;
    std::optional<double> horizon_buffer;  ///< hours; automatic when absent
    double gamma = 1.0;
    std::string cost_time_unit = "h";  ///< h, min or s
    SolverConfig solver;
    GapOptions gap;
    std::filesystem::path output;
    bool dump_dnl = false;
    bool record_wall_time = false;
    std::uint64_t seed = 0;

    double cost_scale() const;
};

/// Parses a JSON config. Unknown keys, missing required keys and bad values
/// are config errors; `base` anchors relative paths.
RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base = {});
RunConfig load_config(const std::filesystem::path& file);

struct RunOutcome {
    Network network;
    TimeGrid grid;
    SolverResult result;
    Profile delays;  ///< A at the reported solution
    GapReport gaps;
    std::optional<LoadingResult> loading;  ///< only when dump_dnl is set
};

/// Loads the instance, runs the solver from the uniform profile and
/// evaluates the gap at the reported solution. Writes nothing.
RunOutcome execute(const RunConfig& config);

/// Writes log.csv, flows.csv, delays.csv, gaps.csv, summary.json and, when
/// present, dnl.csv into config.output. Each file is replaced atomically.
void write_outputs(const RunConfig& config, const RunOutcome& outcome);

/// Writes `content` to a sibling temporary file and renames it into place.
void write_atomically(const std::filesystem::path& file, const std::string& content);

struct RunOverrides {
    bool dump_dnl = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> output;
};

/// Exit status 0 on success, 1 on a library error (reported on `err` with its
/// category and location).
int cmd_run(const std::filesystem::path& config_file, const RunOverrides& overrides, std::ostream& out,
            std::ostream& err);

/// Loading failures become a failing row; never throws for instance defects.
std::vector<CheckResult> validate_directory(const std::filesystem::path& dir);

/// Prints the check table; exit status 0 when every check passes.
int cmd_validate(const std::filesystem::path& dir, std::ostream& out);

/// Runs two or more configs over the same instance and grid (concurrently
/// when `parallel`) and writes energy.csv and gap_summary.csv into `output`.
int cmd_compare(const std::vector<std::filesystem::path>& config_files, const std::filesystem::path& output,
                bool parallel, std::ostream& out, std::ostream& err);

}  // namespace due
