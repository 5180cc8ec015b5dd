#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "due/hilbert.hpp"
#include "due/operators.hpp"
#include "due/schedule.hpp"

namespace due {

enum class Algorithm { fb, fbf, ifbf };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

struct SolverConfig {
    Algorithm algorithm = Algorithm::ifbf;
    double tau0 = 1.0;   ///< initial step; the fixed step for FB
    double mu = 0.5;     ///< step-size safety factor in (0, 1)
    double lambda = 0.5; ///< IFBF relaxation in (0, 1)
    double alpha = 0.7;  ///< IFBF inertia cap in (0, 1)
    Schedule alpha_n = Schedule::constant(0.0);    ///< FBF anchor weight
    Schedule beta_n = Schedule::constant(0.0);     ///< FBF relaxation, IFBF damping
    Schedule epsilon_n = Schedule::constant(0.0);  ///< IFBF inertia budget
    std::size_t max_iterations = 200;
    double tolerance = 0.0;  ///< stop when the residual drops to this value
    bool strict_schedules = false;
    std::uint64_t seed = 0;  ///< reserved
};

/// Checks scalar parameters and schedules for the chosen algorithm.
/// Pointwise violations over the iteration range and bad scalars throw
/// config errors; asymptotic violations are returned as warnings, or
/// thrown when strict_schedules is set.
std::vector<std::string> validate_config(const SolverConfig& config);

struct IterationRecord {
    std::size_t n = 0;
    double tau = 0.0;    ///< step used at iteration n
    double alpha = 0.0;  ///< alpha_n (FBF schedule or IFBF inertia)
    double beta = 0.0;
    double epsilon = 0.0;
    double residual = 0.0;         ///< ||x_n - P(x_n - tau_n A(x_n))||, x_n the forward point
    double relative_energy = 0.0;  ///< ||h_{n+1} - h_n|| / ||h_n||, NaN when ||h_n|| = 0
    double step_gap = 0.0;         ///< ||x_n - y_n||
    double operator_gap = 0.0;     ///< ||A(x_n) - A(y_n)||
    double inertia = 0.0;          ///< alpha_n ||h_n - h_{n-1}|| (IFBF)
    std::size_t operator_calls = 0;  ///< cumulative within the run
    double wall_seconds = 0.0;
};

struct SolverResult {
    Profile solution;  ///< last projected point y_N (FBF, IFBF) or P_X(h_N) (FB)
    Profile last_iterate;
    std::vector<IterationRecord> log;
    std::vector<std::string> warnings;
    std::size_t iterations = 0;
    std::size_t operator_calls = 0;
    std::string stop_reason;
};

SolverResult run_fb(DelayOperator& op, const FeasibleSet& set, const SolverConfig& config, const Profile& h0);
SolverResult run_fbf(DelayOperator& op, const FeasibleSet& set, const SolverConfig& config, const Profile& h0);
SolverResult run_ifbf(DelayOperator& op, const FeasibleSet& set, const SolverConfig& config, const Profile& h0,
                      const Profile* h_minus1 = nullptr);

/// Dispatches on config.algorithm.
SolverResult run_solver(DelayOperator& op, const FeasibleSet& set, const SolverConfig& config, const Profile& h0);

/// tau_{n+1} = min(tau_n, mu ||x - y|| / ||A(x) - A(y)||), tau_n when the
/// denominator vanishes relative to ||A(x)||.
double next_step(double tau, double mu, double step_gap, double operator_gap, double operator_scale) noexcept;

/// alpha_{n+1} = min(alpha, eps / ||h_{n+1} - h_n||), alpha when the iterates coincide.
double next_inertia(double alpha, double eps, double change) noexcept;

}  // namespace due
