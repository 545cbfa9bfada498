#include "fewsphere/error.hpp"

namespace fewsphere {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::EvenLength: return "EvenLength";
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::NotAffinelySpanning: return "NotAffinelySpanning";
        case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::InconsistentSystem: return "InconsistentSystem";
        case ErrorCode::ToleranceExhausted: return "ToleranceExhausted";
        case ErrorCode::NotFullDimensional: return "NotFullDimensional";
        case ErrorCode::NonSimplicial: return "NonSimplicial";
        case ErrorCode::InteriorPoint: return "InteriorPoint";
        case ErrorCode::NotMaxOddCycle: return "NotMaxOddCycle";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    }
    return "Unknown";
}

}  // namespace fewsphere
