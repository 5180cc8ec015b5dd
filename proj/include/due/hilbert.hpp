#pragma once

// Discretized L2 substrate: piecewise-constant path profiles on a uniform time
// grid, the weighted inner product, and projection onto the feasible flow set.

#include <cstddef>
#include <span>
#include <vector>

namespace due {

/// Uniform partition of [t0, t1] into K intervals. Interval k covers
/// [t0 + k*dt, t0 + (k+1)*dt).
class TimeGrid {
public:
    TimeGrid() = default;
    TimeGrid(double t0, double t1, std::size_t num_intervals);

    /// Grid with the given origin and step, extended to `num_intervals`.
    static TimeGrid with_step(double t0, double dt, std::size_t num_intervals);

    double t0() const noexcept { return t0_; }
    double t1() const noexcept { return t1_; }
    double dt() const noexcept { return dt_; }
    std::size_t size() const noexcept { return num_intervals_; }

    double start(std::size_t k) const noexcept { return t0_ + static_cast<double>(k) * dt_; }
    double midpoint(std::size_t k) const noexcept { return t0_ + (static_cast<double>(k) + 0.5) * dt_; }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

private:
    double t0_ = 0.0;
    double t1_ = 1.0;
    double dt_ = 1.0;
    std::size_t num_intervals_ = 1;
};

/// Dense (path x interval) array of piecewise-constant values. Used both for
/// departure rates (PathFlowProfile) and for effective delays (DelayProfile).
class Profile {
public:
    Profile() = default;
    Profile(TimeGrid grid, std::size_t num_paths, double fill = 0.0);
    Profile(TimeGrid grid, std::size_t num_paths, std::vector<double> values);

    const TimeGrid& grid() const noexcept { return grid_; }
    std::size_t num_paths() const noexcept { return num_paths_; }
    std::size_t num_intervals() const noexcept { return grid_.size(); }
    std::size_t size() const noexcept { return values_.size(); }

    double& operator()(std::size_t path, std::size_t k) { return values_[path * grid_.size() + k]; }
    double operator()(std::size_t path, std::size_t k) const { return values_[path * grid_.size() + k]; }

    std::span<double> row(std::size_t path) { return {values_.data() + path * grid_.size(), grid_.size()}; }
    std::span<const double> row(std::size_t path) const {
        return {values_.data() + path * grid_.size(), grid_.size()};
    }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    bool same_shape(const Profile& other) const noexcept {
        return num_paths_ == other.num_paths_ && grid_ == other.grid_;
    }

    bool all_finite() const noexcept;

    Profile& operator+=(const Profile& other);
    Profile& operator-=(const Profile& other);
    Profile& operator*=(double s) noexcept;

    /// this += s * other
    Profile& axpy(double s, const Profile& other);

    friend Profile operator+(Profile a, const Profile& b) { return a += b; }
    friend Profile operator-(Profile a, const Profile& b) { return a -= b; }
    friend Profile operator*(double s, Profile a) { return a *= s; }

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    TimeGrid grid_{};
    std::size_t num_paths_ = 0;
    std::vector<double> values_;
};

using PathFlowProfile = Profile;
using DelayProfile = Profile;

/// sum_p sum_k f[p,k] * g[p,k] * dt
double inner(const Profile& f, const Profile& g);
double norm(const Profile& f);
double distance(const Profile& f, const Profile& g);

struct OdDemand {
    double demand = 0.0;       ///< vehicles
    double target_time = 0.0;  ///< desired arrival time
};

/// Demand Q_w and target arrival time per O-D pair, indexed by O-D position.
struct TripTable {
    std::vector<OdDemand> entries;

    std::size_t size() const noexcept { return entries.size(); }
    double total_demand() const noexcept;
};

/// The set X = { g >= 0 : sum_{p in P_w} sum_k g[p,k] dt = Q_w for every w }.
/// It is a product of scaled simplices, one block per O-D pair.
class FeasibleSet {
public:
    FeasibleSet() = default;
    FeasibleSet(std::vector<double> demands, std::vector<std::vector<std::size_t>> paths_by_od,
                std::size_t num_paths);

    std::size_t num_paths() const noexcept { return num_paths_; }
    std::size_t num_ods() const noexcept { return demands_.size(); }
    const std::vector<double>& demands() const noexcept { return demands_; }
    const std::vector<std::vector<std::size_t>>& paths_by_od() const noexcept { return paths_by_od_; }
    std::size_t od_of_path(std::size_t path) const { return od_of_path_.at(path); }

    /// Orthogonal projection in the discretized L2 norm.
    Profile project(const Profile& f) const;

    /// Uniform split Q_w / (|P_w| (t1 - t0)) on every cell.
    Profile uniform(const TimeGrid& grid) const;

    /// Largest absolute mass mismatch relative to Q_w; negative entries count
    /// as violations of size |value| * dt / Q_w.
    double max_violation(const Profile& f) const;

private:
    std::vector<double> demands_;
    std::vector<std::vector<std::size_t>> paths_by_od_;
    std::vector<std::size_t> od_of_path_;
    std::size_t num_paths_ = 0;
};

/// Euclidean projection of `values` onto { x >= 0, sum x = radius } in place,
/// by sorting and a cumulative scan for the threshold.
void project_simplex(std::span<double> values, double radius);

Profile project_feasible(const Profile& f, const TripTable& trips,
                         const std::vector<std::vector<std::size_t>>& paths_by_od);

/// || h - P_X(h - tau * Ah) ||
double residual_norm(const Profile& h, double tau, const Profile& Ah, const FeasibleSet& set);
double residual_norm(const Profile& h, double tau, const Profile& Ah, const TripTable& trips,
                     const std::vector<std::vector<std::size_t>>& paths_by_od);

}  // namespace due
