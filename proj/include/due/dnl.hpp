#pragma once

// Path-based dynamic network loading with the link transmission model:
// cumulative curves per link, point queues at origins, a general junction
// model and exit-time extraction.

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "due/hilbert.hpp"
#include "due/network.hpp"

namespace due {

/// Nondecreasing count curve sampled at grid boundaries t0 + k*dt,
/// k = 0..K. Linear between samples, zero before t0, constant after t1.
class CumulativeCurve {
public:
    CumulativeCurve() = default;
    explicit CumulativeCurve(TimeGrid grid);

    const TimeGrid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return values_.size(); }

    double& operator[](std::size_t k) { return values_[k]; }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const noexcept { return values_; }

    double at(double t) const noexcept;

    /// Slope on the interval [t_k, t_{k+1}).
    double rate(std::size_t k) const noexcept { return (values_[k + 1] - values_[k]) / grid_.dt(); }

private:
    TimeGrid grid_{};
    std::vector<double> values_;
};

/// Upstream and downstream curves of a FIFO element (link or origin queue)
/// with their per-path split. `paths` lists the global path ids using it.
struct StreamState {
    CumulativeCurve up;
    CumulativeCurve down;
    std::vector<std::size_t> paths;
    std::vector<std::vector<double>> path_up;
    std::vector<std::vector<double>> path_down;
    std::size_t steps_done = 0;  ///< samples 0..steps_done are final

    /// Index of `path` within `paths`, or npos.
    std::size_t local(std::size_t path) const noexcept;
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
};

struct LinkState : StreamState {
    std::size_t link = 0;
    std::vector<double> demand;  ///< sending flow per step
    std::vector<double> supply;  ///< receiving flow per step
};

struct OriginQueue : StreamState {
    std::size_t node = 0;

    /// Vehicles waiting at grid point k.
    double queue(std::size_t k) const { return std::max(0.0, up[k] - down[k]); }
};

struct DnlOptions {
    /// Extra loading time after t1 (hours); negative selects twice the
    /// longest free-flow path time.
    double horizon_buffer = -1.0;
    double eps_count = 1e-9;   ///< vehicles; smaller counts are treated as zero
    double big_m_factor = 10;  ///< M = factor * max capacity
};

struct LoadingResult {
    TimeGrid grid;  ///< loading grid, extends past the departure window
    std::size_t departure_intervals = 0;
    std::vector<LinkState> links;
    std::vector<OriginQueue> origins;
    std::vector<std::size_t> origin_of_node;  ///< node -> index into origins, or npos
    std::vector<CumulativeCurve> arrivals;    ///< per node, vehicles absorbed by its sink
    double max_junction_imbalance = 0.0;     ///< max |sum in - sum out| over all nodes and steps

    double total_departed() const;
    double total_arrived() const;
};

/// Triangular diagram flow at density rho. Throws numeric error outside [0, rho_jam].
double fundamental_flow(const Link& link, double rho);

/// Sending flow D_i(t): the inflow trace f_in(t - L/v) when the link is in
/// free flow at its exit (N_up(t - L/v) == N_down(t) up to eps), else C.
double link_demand(const LinkState& state, const Link& link, double t, double eps = 1e-9);

/// Receiving flow S_i(t): the outflow trace f_out(t - L/w) when the queue
/// reaches the entrance (N_up(t) == N_down(t - L/w) + rho_jam L), else C.
double link_supply(const LinkState& state, const Link& link, double t, double eps = 1e-9);

/// Step form used by the loader over [t_k, t_{k+1}].
double step_demand(const LinkState& state, const Link& link, std::size_t k, double eps = 1e-9);
double step_supply(const LinkState& state, const Link& link, std::size_t k, double eps = 1e-9);

struct JunctionFlows {
    std::vector<double> outflow;  ///< per incoming link, f_out
    std::vector<double> inflow;   ///< per outgoing link, f_in
    std::vector<double> theta;    ///< reduction factor per incoming link
};

/// General node model: a single reduction factor per incoming link (FIFO)
/// and supply shared in proportion to `priorities` (capacities in the
/// loader; the demands themselves when empty). `split` is m x n row-major;
/// rows with positive demand must sum to 1. Supplies may be infinite (sinks).
JunctionFlows junction_flows(std::span<const double> demands, std::span<const double> supplies,
                             std::span<const double> split, std::span<const double> priorities = {});

/// D_o = M if the queue is positive, else the current departure rate.
double origin_demand(double queue, double inflow, double big_m) noexcept;

struct OriginStep {
    double release = 0.0;
    double queue = 0.0;
};

/// Explicit Euler step of the point queue; the release never drives the
/// queue negative.
OriginStep step_origin_queue(double queue, double inflow, double supply, double demand, double dt) noexcept;

/// Loads departure rates `h` (one row per path, nonnegative) onto the
/// network. The loading grid shares dt with h.grid() and is extended by the
/// horizon buffer.
LoadingResult run_dnl(const Profile& h, const Network& net, const DnlOptions& options = {});

/// Checks dt <= L / max(v, w) for every link; throws naming the first
/// offending link.
void check_cfl(const Network& net, double dt);

/// Smallest s with N_down(s) >= N_up(t), linear between samples. Returns
/// t0 when N_up(t) is zero. Throws UnfinishedTrip when the count is not
/// reached on the grid.
double exit_time(const CumulativeCurve& up, const CumulativeCurve& down, double t, double eps = 1e-9);

/// D_p at the midpoint of every departure interval: origin queue first,
/// then the links in path order, each at least free-flow time.
Profile path_delay(const LoadingResult& loading, const Network& net, const TimeGrid& departure_grid,
                   double eps = 1e-9);

/// A_p(t) = D_p(t) + gamma * max(0, t + D_p(t) - target_w), t at interval
/// midpoints.
Profile effective_delay(const Profile& delays, const TripTable& trips, const std::vector<std::size_t>& od_of_path,
                        double gamma);

/// One row per grid point per link and origin queue.
void write_loading_csv(const LoadingResult& loading, const Network& net, std::ostream& out);

}  // namespace due
