#ifndef HFT_ERROR_HPP
#define HFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hft
{

enum class ErrorKind {
    VariableSetMismatch,
    InvalidReplacement,
    InvalidDenominator,
    NotPolynomial,
    InvalidStabilityParameter,
    InvalidModel,
    ZeroWeight,
    NonIntegerMultiplicity,
    DivisionByZero,
    ModeUnavailable,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library. `context` carries structured detail
// (usually JSON, e.g. the offending BoxTuple) for callers that report it.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what, std::string context = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what),
          context_(std::move(context))
    {
    }

    ErrorKind kind() const noexcept
    {
        return kind_;
    }
    // what() without the kind prefix.
    const std::string &message() const noexcept
    {
        return message_;
    }
    const std::string &context() const noexcept
    {
        return context_;
    }

private:
    ErrorKind kind_;
    std::string message_;
    std::string context_;
};

} // namespace hft

#endif
