#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace effdom {

/// Every failure the library reports, one enumerator per distinct cause.
enum class Errc {
    NonPrimeP,
    UnsupportedExtension,
    FieldTooLarge,
    DivisionByZero,
    FieldMismatch,
    DimensionMismatch,
    ZeroDivisor,
    SizeCapExceeded,
    BadConnectionSet,
    BadParameter,
    LengthMismatch,
    ValueOutOfRange,
    NotRegular,
    NotEfficient,
    NotZeroOne,
    BadK,
    BadPartition,
    NotDominatable,
    AlphaOutOfRange,
    NonConstantRowSums,
    NotEquitable,
    CellCountMismatch,
    NotConstantOnFibres,
    NotPerfectCode,
    NotEigenvector,
    ZeroVector,
    TrivialCase,
    CertificateViolation,
    InfeasibleK,
    AuditFailure,
    Overflow,
    Parse,
    Internal,
};

auto to_string(Errc code) -> std::string_view;

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string & message);

    auto code() const noexcept -> Errc { return _code; }

private:
    Errc _code;
};

}
