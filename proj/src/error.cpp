#include "hypfam/error.hpp"

namespace hypfam {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::IndeterminateAtPoint: return "IndeterminateAtPoint";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::ProbeFailure: return "ProbeFailure";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::LeadingZero: return "LeadingZero";
    case ErrorKind::RatioVanishes: return "RatioVanishes";
    case ErrorKind::RatioPole: return "RatioPole";
    case ErrorKind::BetaVanishes: return "BetaVanishes";
    case ErrorKind::NotThreeTerm: return "NotThreeTerm";
    case ErrorKind::InsufficientMoments: return "InsufficientMoments";
    case ErrorKind::NotJacobiType: return "NotJacobiType";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::MissingForcedFactor: return "MissingForcedFactor";
    case ErrorKind::NotRationalNormalForm: return "NotRationalNormalForm";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::GaugeVanishesOnDiagonal: return "GaugeVanishesOnDiagonal";
    case ErrorKind::IdentityFailure: return "IdentityFailure";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<long> where)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message)
    , kind_(kind)
    , where_(std::move(where))
{
}

} // namespace hypfam
