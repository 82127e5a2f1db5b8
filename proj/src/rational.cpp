#include <fsplit/errors.hpp>
#include <fsplit/rational.hpp>

#include <cctype>

namespace fsplit
{

std::string_view to_string(ErrorCode code)
{
    switch (code) {
        case ErrorCode::DivisionByZero:
            return "DivisionByZero";
        case ErrorCode::IncompatibleOrders:
            return "IncompatibleOrders";
        case ErrorCode::NeedsExtension:
            return "NeedsExtension";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::TruncationLoss:
            return "TruncationLoss";
        case ErrorCode::PoleBound:
            return "PoleBound";
        case ErrorCode::ZeroSeries:
            return "ZeroSeries";
        case ErrorCode::NotAUnit:
            return "NotAUnit";
        case ErrorCode::NotDivisible:
            return "NotDivisible";
        case ErrorCode::CoefficientNotInvertible:
            return "CoefficientNotInvertible";
        case ErrorCode::NonzeroConstantTerm:
            return "NonzeroConstantTerm";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::DegenerateLinearPart:
            return "DegenerateLinearPart";
        case ErrorCode::NotOrderK:
            return "NotOrderK";
        case ErrorCode::MultipleWVariables:
            return "MultipleWVariables";
        case ErrorCode::NotReduced:
            return "NotReduced";
        case ErrorCode::NotAProductOfLinearForms:
            return "NotAProductOfLinearForms";
        case ErrorCode::SeedsNotDistinct:
            return "SeedsNotDistinct";
        case ErrorCode::TruncationInsufficient:
            return "TruncationInsufficient";
        case ErrorCode::NotClosedUnderAction:
            return "NotClosedUnderAction";
        case ErrorCode::NotNormalizable:
            return "NotNormalizable";
        case ErrorCode::InvalidParams:
            return "InvalidParams";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace
{

Integer parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        fail(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            fail(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace fsplit
