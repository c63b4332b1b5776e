#include "tifs/error.hpp"

namespace tifs {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotContractive: return "NotContractive";
    case ErrorKind::ComponentsOverlap: return "ComponentsOverlap";
    case ErrorKind::NoPrefixAtLevel: return "NoPrefixAtLevel";
    case ErrorKind::LevelTooSmall: return "LevelTooSmall";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::InadmissibleWord: return "InadmissibleWord";
    case ErrorKind::TileNotInContext: return "TileNotInContext";
    case ErrorKind::InvalidAddress: return "InvalidAddress";
    case ErrorKind::NotDeflatable: return "NotDeflatable";
    case ErrorKind::EmptyPeriod: return "EmptyPeriod";
    case ErrorKind::PrefixTooShort: return "PrefixTooShort";
    case ErrorKind::NoRootInRange: return "NoRootInRange";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace tifs
