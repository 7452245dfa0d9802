#ifndef HYPFAM_ERROR_HPP
#define HYPFAM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypfam {

enum class ErrorKind {
    ZeroDenominator,
    PoleAtPoint,
    IndeterminateAtPoint,
    NotSeparable,
    ProbeFailure,
    SyntaxError,
    InvalidParams,
    LeadingZero,
    RatioVanishes,
    RatioPole,
    BetaVanishes,
    NotThreeTerm,
    InsufficientMoments,
    NotJacobiType,
    NoMatch,
    MissingForcedFactor,
    NotRationalNormalForm,
    Ambiguous,
    DomainError,
    ConvergenceFailure,
    GaugeVanishesOnDiagonal,
    IdentityFailure,
    InvalidDecomposition,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. `where()` carries the integer coordinates that
/// locate the failure: a byte offset for SyntaxError, a lattice point (n, k)
/// for ratio errors, an index for BetaVanishes / ConvergenceFailure.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<long> where = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<long>& where() const noexcept { return where_; }

private:
    ErrorKind kind_;
    std::vector<long> where_;
};

} // namespace hypfam

#endif // HYPFAM_ERROR_HPP
