#include <hft/error.hpp>

namespace hft
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::VariableSetMismatch:
        return "VariableSetMismatch";
    case ErrorKind::InvalidReplacement:
        return "InvalidReplacement";
    case ErrorKind::InvalidDenominator:
        return "InvalidDenominator";
    case ErrorKind::NotPolynomial:
        return "NotPolynomial";
    case ErrorKind::InvalidStabilityParameter:
        return "InvalidStabilityParameter";
    case ErrorKind::InvalidModel:
        return "InvalidModel";
    case ErrorKind::ZeroWeight:
        return "ZeroWeight";
    case ErrorKind::NonIntegerMultiplicity:
        return "NonIntegerMultiplicity";
    case ErrorKind::DivisionByZero:
        return "DivisionByZero";
    case ErrorKind::ModeUnavailable:
        return "ModeUnavailable";
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    case ErrorKind::ParseError:
        return "ParseError";
    }
    return "Unknown";
}

} // namespace hft
