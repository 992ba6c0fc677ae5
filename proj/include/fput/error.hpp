#pragma once

#include <stdexcept>
#include <string>

namespace fput {

enum class ErrorKind {
    ConfigInvalid,
    NoRoot,
    MultipleRoots,
    Unsupported,
    SpringSingular,
    SingularDenominator,
    NotInDomain,
    NearSpectrum,
    ContourThroughSpectrum,
    MuOutOfRange,
    SymbolSingular,
    DegenerateEigenvalues,
    NewtonDiverged,
    JacobianSingular,
    UnderResolved,
    WindowInsideCore,
    NonConvergentTails,
    DomainTooSmall,
    Blowup,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it to
// an exit status (configuration problems vs numerical failures).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const { return kind_; }
    bool is_config_error() const { return kind_ == ErrorKind::ConfigInvalid; }

private:
    ErrorKind kind_;
};

}  // namespace fput
