#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "due/dnl.hpp"
#include "due/hilbert.hpp"
#include "due/network.hpp"

namespace due {

/// Maps path-flow profiles to delay profiles on the same grid. Every call to
/// evaluate() counts once; an identical repeated input is served from a
/// single-slot cache without reloading.
class DelayOperator {
public:
    virtual ~DelayOperator() = default;

    Profile evaluate(const Profile& h);

    std::size_t calls() const noexcept { return calls_.load(); }
    std::size_t computations() const noexcept { return computations_.load(); }

    virtual std::optional<double> lipschitz() const { return std::nullopt; }

protected:
    virtual Profile compute(const Profile& h) const = 0;

private:
    std::atomic<std::size_t> calls_{0};
    std::atomic<std::size_t> computations_{0};
    std::mutex cache_mutex_;
    std::optional<Profile> cached_input_;
    std::optional<Profile> cached_output_;
};

struct DnlOperatorOptions {
    double gamma = 1.0;       ///< late-arrival penalty slope
    double cost_scale = 1.0;  ///< multiplies A (hours -> cost units)
    DnlOptions dnl{};
    int horizon_retries = 4;  ///< buffer doublings after an unfinished trip
};

/// A(h) = cost_scale * (D(h+) + gamma * max(0, t + D(h+) - target)), where h+
/// clamps negative rates to zero.
class DnlOperator final : public DelayOperator {
public:
    DnlOperator(const Network& net, TimeGrid grid, DnlOperatorOptions options = {});

    const Network& network() const noexcept { return net_; }
    const TimeGrid& grid() const noexcept { return grid_; }
    const DnlOperatorOptions& options() const noexcept { return options_; }

    /// Loading of max(h, 0) with the horizon retries applied.
    LoadingResult load(const Profile& h) const;

protected:
    Profile compute(const Profile& h) const override;

private:
    const Network& net_;
    TimeGrid grid_;
    DnlOperatorOptions options_;
};

/// Dense row-major matrix.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
    Matrix(std::size_t r, std::size_t c, std::vector<double> values);

    static Matrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::vector<double> apply(const std::vector<double>& x) const;
};

/// Largest singular value by power iteration on M^T M.
double spectral_norm(const Matrix& m, std::size_t max_iterations = 100000, double tol = 1e-15);

/// A(x) = M x + q on the flattened profile.
class AffineOperator final : public DelayOperator {
public:
    AffineOperator(Matrix m, std::vector<double> q);

    const Matrix& matrix() const noexcept { return m_; }
    const std::vector<double>& offset() const noexcept { return q_; }
    std::optional<double> lipschitz() const override { return l_; }

protected:
    Profile compute(const Profile& h) const override;

private:
    Matrix m_;
    std::vector<double> q_;
    double l_;
};

/// A'(x) = theta(x) A(x) with theta(x) = 1 / (1 + ||x||).
class ScaledOperator final : public DelayOperator {
public:
    using Field = std::function<double(const Profile&)>;

    explicit ScaledOperator(std::shared_ptr<DelayOperator> base, Field theta = default_theta);

    static double default_theta(const Profile& h);

protected:
    Profile compute(const Profile& h) const override;

private:
    std::shared_ptr<DelayOperator> base_;
    Field theta_;
};

/// Wraps a plain function (tests and constant operators).
class FunctionOperator final : public DelayOperator {
public:
    using Fn = std::function<Profile(const Profile&)>;

    explicit FunctionOperator(Fn fn, std::optional<double> lipschitz = std::nullopt)
        : fn_(std::move(fn)), l_(lipschitz) {}

    std::optional<double> lipschitz() const override { return l_; }

protected:
    Profile compute(const Profile& h) const override { return fn_(h); }

private:
    Fn fn_;
    std::optional<double> l_;
};

/// Finite-dimensional VI with a certified reference solution.
struct SyntheticVI {
    TimeGrid grid;
    FeasibleSet set;
    std::shared_ptr<DelayOperator> op;
    Profile solution;
    double lipschitz = 0.0;
};

/// Extragradient iterations from `start` until the fixed-point residual
/// with tau = 1 is at most `tol`. Throws a numeric error otherwise.
Profile reference_solution(DelayOperator& op, const FeasibleSet& set, const Profile& start, double lipschitz,
                           double tol = 1e-10, std::size_t max_iterations = 2000000);

/// Affine VI on one interval of unit length; one O-D block holding all
/// coordinates with the given total.
SyntheticVI affine_vi(Matrix m, std::vector<double> q, double total);

/// Same feasible set and solution as `base`, operator scaled by theta.
SyntheticVI scaled_pseudo_monotone(const SyntheticVI& base);

}  // namespace due
