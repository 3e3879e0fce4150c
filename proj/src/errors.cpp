#include "blockdiff/errors.hpp"

namespace blockdiff {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownToken: return "UnknownToken";
        case ErrorCode::SchemaShape: return "SchemaShape";
        case ErrorCode::ValueOverflow: return "ValueOverflow";
        case ErrorCode::TextTooLong: return "TextTooLong";
        case ErrorCode::AnchorViolation: return "AnchorViolation";
        case ErrorCode::MalformedNumber: return "MalformedNumber";
        case ErrorCode::InteriorNull: return "InteriorNull";
        case ErrorCode::MaskInCausal: return "MaskInCausal";
        case ErrorCode::LengthOverflow: return "LengthOverflow";
        case ErrorCode::StaleCandidate: return "StaleCandidate";
        case ErrorCode::MaskOnAnchor: return "MaskOnAnchor";
        case ErrorCode::Diverged: return "Diverged";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace blockdiff
