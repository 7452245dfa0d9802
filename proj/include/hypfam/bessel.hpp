#ifndef HYPFAM_BESSEL_HPP
#define HYPFAM_BESSEL_HPP

#include "hypfam/unipoly.hpp"

#include <vector>

namespace hypfam {

/// Power series below this argument, large-argument asymptotics above.
inline constexpr double kBesselSeriesLimit = 16.0;

/// J_nu(x) for x >= 0. Orders in (-2, -1) are accepted as well (needed for
/// the F sums with -1 < c < 0); throws DomainError for nu <= -2, nu = -1 or
/// x < 0.
double bessel_j(double nu, double x);

/// The first K positive real zeros of J_nu, strictly increasing. McMahon
/// seeds refined by Newton; throws ConvergenceFailure with where() = {k}.
std::vector<double> bessel_zeros(double nu, int K);

/// For -2 < nu < -1, J_nu has one pair of purely imaginary zeros +-iy; returns
/// y > 0. Throws DomainError outside that range.
double bessel_imaginary_zero(double nu);

/// Horner evaluation with coefficients rounded to double.
double eval_poly_float(const UniPoly& P, double x);

struct GramEntry {
    int n = 0;
    int m = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    /// Estimate of |sum over zeros beyond K|, from a_k ~ 1/(k pi).
    double tail_bound = 0.0;
    double abs_err() const;
    double rel_err() const; // abs_err / rhs, or abs_err when rhs = 0
};

/// Truncated left side of
///   4c sum_k a_k^2 E_n(-a_k^2) E_m(-a_k^2) = c / (2^{4n} (c)_{2n}^2 (2n+c)) delta_{nm}
/// with a_k = 1/j_{c-1,k}. Requires c > 0.
GramEntry discrete_gram_E(const Rational& c, int n, int m, int K);
/// Same, reusing zeros of J_{c-1} computed by the caller.
GramEntry discrete_gram_E(const Rational& c, int n, int m, const std::vector<double>& zeros);

/// Truncated left side of
///   16c^2(c+1) sum_k a_k^4 F_n(-a_k^2) F_m(-a_k^2) = (c+1) / (2^{4n} (c+1)_{2n}^2 (2n+1+c)) delta_{nm}.
/// Requires c > -1, c != 0. For c < 0 the imaginary zero of J_{c-1} is
/// included in the sum.
GramEntry discrete_gram_F(const Rational& c, int n, int m, int K);
GramEntry discrete_gram_F(const Rational& c, int n, int m, const std::vector<double>& zeros);

} // namespace hypfam

#endif // HYPFAM_BESSEL_HPP
