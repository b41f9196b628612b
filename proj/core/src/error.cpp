#include "panelopt/error.hpp"

namespace panelopt {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Ok: return "Ok";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidGeometry: return "InvalidGeometry";
        case ErrorCode::MalformedFile: return "MalformedFile";
        case ErrorCode::EndpointSingularity: return "EndpointSingularity";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::NoStagnationPoint: return "NoStagnationPoint";
        case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::EmptyWorkload: return "EmptyWorkload";
        case ErrorCode::ConfigParse: return "ConfigParse";
    }
    return "Unknown";
}

}  // namespace panelopt
