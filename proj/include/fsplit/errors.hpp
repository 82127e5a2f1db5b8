#ifndef FSPLIT_ERRORS_HPP
#define FSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsplit
{

enum class ErrorCode {
    DivisionByZero,
    IncompatibleOrders,
    NeedsExtension,
    DimensionMismatch,
    TruncationLoss,
    PoleBound,
    ZeroSeries,
    NotAUnit,
    NotDivisible,
    CoefficientNotInvertible,
    NonzeroConstantTerm,
    IndexOutOfRange,
    DegenerateLinearPart,
    NotOrderK,
    MultipleWVariables,
    NotReduced,
    NotAProductOfLinearForms,
    SeedsNotDistinct,
    TruncationInsufficient,
    NotClosedUnderAction,
    NotNormalizable,
    InvalidParams,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; callers that
// need to branch on the failure kind inspect code().
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept
    {
        return code_;
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what)
{
    throw Error(code, std::string(to_string(code)) + ": " + what);
}

} // namespace fsplit

#endif
