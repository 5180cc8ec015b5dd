#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "due/hilbert.hpp"
#include "due/solvers.hpp"

namespace due {

struct GapOptions {
    double eps_support = -1.0;  ///< rate threshold; negative selects 1e-6 * max rate
    bool strict = false;        ///< widen with the cheapest unused cell
};

struct GapReport {
    std::vector<double> gaps;              ///< per O-D pair
    std::vector<std::size_t> unsupported;  ///< O-D pairs without any used cell
    double eps_support = 0.0;
};

/// Range of A over the used cells (h > eps) of every O-D pair.
GapReport od_gap(const Profile& h, const Profile& ah, const std::vector<std::vector<std::size_t>>& paths_by_od,
                 const GapOptions& options = {});

/// ||next - curr|| / ||curr||; NaN when ||curr|| = 0.
double relative_energy(const Profile& next, const Profile& curr);

struct Summary {
    double min = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

/// Order statistics with linear interpolation between ranks.
Summary summarize(std::vector<double> values);

/// One row per iteration; wall time only when requested.
void write_log_csv(const std::vector<IterationRecord>& log, std::ostream& out, bool wall_time = false);

/// Long format: path_id,k,t_start,value.
void write_profile_csv(const Profile& profile, const std::vector<std::string>& path_ids, std::ostream& out);

void write_gap_csv(const GapReport& report, const std::vector<std::string>& od_ids, std::ostream& out);

/// Shortest round-trip decimal form used in every output file.
std::string format_double(double v);

}  // namespace due
