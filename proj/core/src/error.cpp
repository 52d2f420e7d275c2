#include <effdom/error.hpp>

namespace effdom {

auto to_string(Errc code) -> std::string_view
{
    switch (code) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::UnsupportedExtension: return "UnsupportedExtension";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::BadConnectionSet: return "BadConnectionSet";
    case Errc::BadParameter: return "BadParameter";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ValueOutOfRange: return "ValueOutOfRange";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotEfficient: return "NotEfficient";
    case Errc::NotZeroOne: return "NotZeroOne";
    case Errc::BadK: return "BadK";
    case Errc::BadPartition: return "BadPartition";
    case Errc::NotDominatable: return "NotDominatable";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::NonConstantRowSums: return "NonConstantRowSums";
    case Errc::NotEquitable: return "NotEquitable";
    case Errc::CellCountMismatch: return "CellCountMismatch";
    case Errc::NotConstantOnFibres: return "NotConstantOnFibres";
    case Errc::NotPerfectCode: return "NotPerfectCode";
    case Errc::NotEigenvector: return "NotEigenvector";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::TrivialCase: return "TrivialCase";
    case Errc::CertificateViolation: return "CertificateViolation";
    case Errc::InfeasibleK: return "InfeasibleK";
    case Errc::AuditFailure: return "AuditFailure";
    case Errc::Overflow: return "Overflow";
    case Errc::Parse: return "Parse";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    _code(code)
{
}

}
