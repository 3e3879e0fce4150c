#pragma once

#include <stdexcept>
#include <string>

namespace blockdiff {

enum class ErrorCode {
    UnknownToken,
    SchemaShape,
    ValueOverflow,
    TextTooLong,
    AnchorViolation,
    MalformedNumber,
    InteriorNull,
    MaskInCausal,
    LengthOverflow,
    StaleCandidate,
    MaskOnAnchor,
    Diverged,
    ShapeMismatch,
    SingularSystem,
    ConfigError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace blockdiff
