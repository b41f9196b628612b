#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace panelopt {

enum class ErrorCode {
    Ok = 0,
    InvalidArgument,
    InvalidGeometry,
    MalformedFile,
    EndpointSingularity,
    SingularSystem,
    NoStagnationPoint,
    DegenerateDistribution,
    ShapeMismatch,
    EmptyWorkload,
    ConfigParse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure the library reports is an Error carrying a code, so batch
// drivers can capture it per problem without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define PANELOPT_REQUIRE(cond, code, msg)                    \
    do {                                                     \
        if (!(cond)) throw ::panelopt::Error((code), (msg)); \
    } while (false)

}  // namespace panelopt
