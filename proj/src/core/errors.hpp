#pragma once

#include <stdexcept>
#include <string>

namespace y2d {

// Error identifiers, shared verbatim with the C API layer.
enum class ErrorCode : int {
    None = 0,
    Domain = 1,
    InvalidArgument = 2,
    SubdivisionLimit = 3,
    TailNotDecaying = 4,
    StepCheckFailed = 5,
    VerificationMismatch = 6,
    BracketViolation = 7,
    BoundViolation = 8,
    OptimizerStall = 9,
    SizeLimit = 10,
    ThresholdExceeded = 11,
    ConvergenceDomain = 12,
    FitDegenerate = 13,
    Internal = 14,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace y2d
