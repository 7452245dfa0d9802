#ifndef HYPFAM_CLASSIFY_HPP
#define HYPFAM_CLASSIFY_HPP

#include "hypfam/error.hpp"
#include "hypfam/families.hpp"
#include "hypfam/separate.hpp"

#include <optional>

namespace hypfam {

/// f = kappa * q(s+u) p(s-u) g(u, s+1) / (w(s) g(u, s)), with p, q, w monic and
/// g content-normalized.
struct Decomposition {
    Rational kappa{1};
    UniPoly p;
    UniPoly q;
    UniPoly w;
    BiPoly g{1};
};

BiRat assemble_f(const Decomposition& d);

struct ClassifyResult {
    FamilySpec spec;
    Decomposition decomposition;
    bool quasi_valid = false;
    bool orthogonal = false;
};

/// Whatever was recovered before classification stopped.
struct PartialDecomposition {
    BiRat reduced;
    std::optional<UniPoly> w;
    std::optional<SumDiffSplit> split;
};

class ClassifyError : public Error {
public:
    ClassifyError(ErrorKind kind, const std::string& message, PartialDecomposition partial)
        : Error(kind, message), partial_(std::move(partial))
    {
    }
    const PartialDecomposition& partial() const { return partial_; }

private:
    PartialDecomposition partial_;
};

/// Identifies the Jacobi-type family whose coefficient ratio is N/D.
/// Throws ClassifyError with kind NotJacobiType, NotSeparable,
/// MissingForcedFactor or NoMatch; ZeroDenominator for D = 0.
ClassifyResult classify_jacobi_type(const BiPoly& N, const BiPoly& D);

/// Normal-form decomposition of a rational-type coefficient ratio. Throws
/// NotRationalNormalForm when no split of the denominator works and Ambiguous
/// when more than one does.
Decomposition decompose_rational_f(const BiRat& f);

} // namespace hypfam

#endif // HYPFAM_CLASSIFY_HPP
