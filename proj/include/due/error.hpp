#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace due {

/// Coarse classification used by the CLI to report failures.
enum class ErrorCategory {
    parse,
    validation,
    config,
    numeric,
    dimension,
    sequencing,
    unfinished_trip,
};

std::string_view to_string(ErrorCategory category);

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message, std::string location = {});

    ErrorCategory category() const noexcept { return category_; }
    const std::string& location() const noexcept { return location_; }
    /// Message without the category and location prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCategory category_;
    std::string location_;
    std::string message_;
};

/// A vehicle (real or virtual) did not leave a link inside the loading horizon.
class UnfinishedTrip : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit UnfinishedTrip(const std::string& message, std::size_t path = npos,
                            std::size_t interval = npos);

    std::size_t path() const noexcept { return path_; }
    std::size_t interval() const noexcept { return interval_; }

private:
    std::size_t path_;
    std::size_t interval_;
};

}  // namespace due
