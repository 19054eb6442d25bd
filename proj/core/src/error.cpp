#include "illiqdep/error.hpp"

namespace illiqdep {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::InvalidLag: return "InvalidLag";
        case ErrorKind::DegenerateSeries: return "DegenerateSeries";
        case ErrorKind::SampleTooSmall: return "SampleTooSmall";
        case ErrorKind::BandwidthTooSmall: return "BandwidthTooSmall";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(message), kind_(kind), index_(index) {}

}  // namespace illiqdep
