#ifndef HYPFAM_LOMMEL_HPP
#define HYPFAM_LOMMEL_HPP

#include "hypfam/unipoly.hpp"

#include <vector>

namespace hypfam {

/// h_0..h_N from h_{n+1} = 2z(n+c)h_n - h_{n-1}, h_{-1} = 0, h_0 = 1.
std::vector<UniPoly> lommel_rec(const Rational& c, int N);

/// h_n from the closed sums
///   h_{2m}   = (-1)^m sum_k C(m+k, 2k)   (m+c-k)_{2k}   (-4z^2)^k
///   h_{2m+1} = (-1)^m sum_k C(m+k+1, 2k+1) (m+c-k)_{2k+1} (-1)^k (2z)^{2k+1}
UniPoly lommel_explicit(const Rational& c, int n);

/// Monic E_n and F_n from their explicit sums in 4^k z^k (independent of the
/// series and ratio constructions in families).
UniPoly e_explicit(const Rational& c, int n);
UniPoly f_explicit(const Rational& c, int n);

/// Both Lommel identities at one n:
///   E_n(-z^2)  = (-1)^n h_{2n}   / (2^{2n} (c)_{2n})
///   z F_n(-z^2) = (-1)^n h_{2n+1} / (2^{2n+1} (c)_{2n+1})
/// with E_n, F_n the monic series polynomials; the explicit sums are compared
/// against the same polynomials.
struct EFLommelCheck {
    UniPoly lhs_e, rhs_e;
    UniPoly lhs_f, rhs_f;
    bool e_equal = false;
    bool f_equal = false;
    bool e_explicit_equal = false;
    bool f_explicit_equal = false;
    bool all_equal() const { return e_equal && f_equal && e_explicit_equal && f_explicit_equal; }
};

/// Throws InvalidParams for c in Z<=0.
EFLommelCheck ef_lommel_check(const Rational& c, int n);

/// G_0..G_N built from E and F with the factor 2^n (c)_n:
///   G_{2m} = (-1)^m 2^{2m} (c)_{2m} E_m(-z^2),
///   G_{2m+1} = (-1)^m 2^{2m+1} (c)_{2m+1} z F_m(-z^2).
/// Throws IdentityFailure if some G_n differs from h_n or the recursion
/// G_{n+1} = 2(c+n) z G_n - G_{n-1} fails for 1 <= n < N.
std::vector<UniPoly> g_sequence(const Rational& c, int N);

} // namespace hypfam

#endif // HYPFAM_LOMMEL_HPP
