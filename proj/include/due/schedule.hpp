#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace due {

/// Behaviour of a schedule for large n: value(n) ~ limit + coefficient * n^exponent.
struct Asymptotics {
    double limit = 0.0;  ///< may be +-infinity
    double coefficient = 0.0;
    double exponent = 0.0;

    /// Whether sum_n value(n) diverges.
    bool sum_diverges() const noexcept;
};

/// Closed-form parameter sequence. Grammar:
///   const(c)                  c
///   pow(a, b, c)              c * (a + n)^b
///   affine_pow(c0, c1, a, b)  c0 + c1 * (a + n)^b
///   rational(a, b, c)         a / (b * n + c)
/// A bare number is a constant. The offset shifts the index: value(n) is
/// the family evaluated at n + offset.
class Schedule {
public:
    enum class Family { constant, power, affine_power, rational };

    Schedule() = default;

    static Schedule parse(std::string_view spec);
    static Schedule constant(double c);

    double operator()(std::size_t n) const;

    Schedule with_offset(std::size_t offset) const;
    std::size_t offset() const noexcept { return offset_; }

    Family family() const noexcept { return family_; }
    const std::vector<double>& params() const noexcept { return params_; }
    const std::string& text() const noexcept { return text_; }

    Asymptotics asymptotics() const;

    /// True when value(n) / other(n) -> 0.
    bool negligible_against(const Schedule& other) const;

private:
    Family family_ = Family::constant;
    std::vector<double> params_{0.0};
    std::string text_ = "const(0)";
    std::size_t offset_ = 0;
};

}  // namespace due
