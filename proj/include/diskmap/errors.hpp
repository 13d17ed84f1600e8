#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diskmap {

enum class ErrorKind {
    RadiusExceeded,
    SingularPoint,
    DegenerateDenominator,
    PhiOutOfRange,
    LevelNotOnRay,
    NormalVanished,
    InvalidArgument,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::RadiusExceeded: return "RadiusExceeded";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::PhiOutOfRange: return "PhiOutOfRange";
    case ErrorKind::LevelNotOnRay: return "LevelNotOnRay";
    case ErrorKind::NormalVanished: return "NormalVanished";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace diskmap
