#include "fput/error.hpp"

namespace fput {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ConfigInvalid: return "ConfigInvalid";
        case ErrorKind::NoRoot: return "NoRoot";
        case ErrorKind::MultipleRoots: return "MultipleRoots";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::SpringSingular: return "SpringSingular";
        case ErrorKind::SingularDenominator: return "SingularDenominator";
        case ErrorKind::NotInDomain: return "NotInDomain";
        case ErrorKind::NearSpectrum: return "NearSpectrum";
        case ErrorKind::ContourThroughSpectrum: return "ContourThroughSpectrum";
        case ErrorKind::MuOutOfRange: return "MuOutOfRange";
        case ErrorKind::SymbolSingular: return "SymbolSingular";
        case ErrorKind::DegenerateEigenvalues: return "DegenerateEigenvalues";
        case ErrorKind::NewtonDiverged: return "NewtonDiverged";
        case ErrorKind::JacobianSingular: return "JacobianSingular";
        case ErrorKind::UnderResolved: return "UnderResolved";
        case ErrorKind::WindowInsideCore: return "WindowInsideCore";
        case ErrorKind::NonConvergentTails: return "NonConvergentTails";
        case ErrorKind::DomainTooSmall: return "DomainTooSmall";
        case ErrorKind::Blowup: return "Blowup";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace fput
