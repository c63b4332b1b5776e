#pragma once

#include <stdexcept>
#include <string>

namespace tifs {

enum class ErrorKind {
    GcdNotOne,
    NotStronglyConnected,
    NotOrthogonal,
    NotContractive,
    ComponentsOverlap,
    NoPrefixAtLevel,
    LevelTooSmall,
    DepthTooLarge,
    InadmissibleWord,
    TileNotInContext,
    InvalidAddress,
    NotDeflatable,
    EmptyPeriod,
    PrefixTooShort,
    NoRootInRange,
    UnsupportedDimension,
    ConfigError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace tifs
