#ifndef HYPFAM_SEPARATE_HPP
#define HYPFAM_SEPARATE_HPP

#include "hypfam/bipoly.hpp"

namespace hypfam {

struct SumDiffSplit {
    Rational kappa;
    UniPoly q; // monic, in the variable s + u
    UniPoly p; // monic, in the variable s - u
};

/// Writes x(u, s) = kappa * q(s + u) * p(s - u) when such a split exists.
/// Throws NotSeparable otherwise, and ProbeFailure if every probe point of the
/// fixed probe sequence is a zero of x.
SumDiffSplit separate_sum_diff(const BiPoly& x);

/// kappa * q(s + u) * p(s - u).
BiPoly assemble_sum_diff(const SumDiffSplit& split);

} // namespace hypfam

#endif // HYPFAM_SEPARATE_HPP
