#ifndef HYPFAM_GAUGE_HPP
#define HYPFAM_GAUGE_HPP

#include "hypfam/families.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypfam {

/// Coefficient-ratio data of a rational-type family: c(n, k+1) = f(n, k) c(n, k),
/// c(n+1, k) = h(n, k) c(n, k), z P_n = P_{n+1} + alpha(n) P_n + beta(n) P_{n-1}
/// for n >= 1, and P_1 = z + c0.
struct RationalFamily {
    std::string label;
    BiRat f;
    std::optional<BiRat> h;
    BiRat alpha;
    BiRat beta;
    Rational c0;
    /// beta(n) values that replace the closed form at isolated n.
    std::map<int, Rational> beta_overrides;
    bool is_jacobi_type = false;
};

struct BuiltFamily {
    RationalFamily family;
    PolySeq seq;
    /// The polynomial gauge used in the construction, content-normalized.
    std::optional<BiPoly> gauge;
};

/// c_R(n, k) = g(n, k) c_Q(n, k) / g(n, n). Throws GaugeVanishesOnDiagonal
/// with where() = {n}.
PolySeq apply_gauge(const BiPoly& g, const PolySeq& Q);

/// Ratio functions of the gauged family: f g(u, s+1)/g and
/// h g(u+1, s) g(u, u) / (g g(u+1, u+1)).
BiRat gauge_f(const BiRat& f, const BiPoly& g);
BiRat gauge_h(const BiRat& h, const BiPoly& g);

/// h = w(u) q(u+s) / (kappa q(2u) q(2u+1) p(s-u-1)) for
/// f = kappa q(s+u) p(s-u) / w(s). Throws InvalidDecomposition unless
/// f(u+1, s)/f = h(u, s+1)/h.
BiRat h_closed_form(const UniPoly& p, const UniPoly& q, const UniPoly& w, const Rational& kappa = 1);

/// The data of one of the five Jacobi-type families, including the beta(1)
/// override where the table is exceptional.
RationalFamily jacobi_type_family(const FamilySpec& spec);

/// r(t) = (t - l + 3/2)_{2l-1}.
UniPoly r_poly(int l);

/// Jacobi(1, l + 1/2) gauged by r(s) + lambda r(u). Throws InvalidParams for
/// lambda = -1 or l < 1.
BuiltFamily family_r_l_lambda(int l, const Rational& lambda, int N);

/// R_n = Q_{n+1} - P_{n+1} made monic, with P = Jacobi(1, l + 1/2) and
/// Q = Jacobi(1, 3/2 - l). Its ratio is
///   f = (r(s+1) - r(u+1)) / (r(s) - r(u+1)) * (s-u-1)(s+u+2) / ((s+1)(s+l+1/2)),
/// Jacobi(2, l + 1/2) gauged by (r(s) - r(u+1)) / (s - u - 1). Throws
/// IdentityFailure if the generated sequence does not have this ratio.
BuiltFamily family_diffshift(int l, int N);

/// The family with
///   g = (u+s+1)(s-u-c) - lambda (u+s+c+1)(s-u), p = t(t-c), q = (t+1)(t+c+1),
///   w = (s+1)(s+3/2), f = p(s-u) q(u+s) g(u,s+1) / (w g),
/// generated from f by the coefficient product. Throws InvalidParams for c in
/// Z<=0.
BuiltFamily family_p_c_lambda(const Rational& c, const Rational& lambda, int N);

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    std::string detail; // first counterexample when failed
    /// Lattice points where f or h is singular, so the ratio check does not apply.
    std::vector<std::pair<int, int>> exceptional_points;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Checks f(u+1,s)/f = h(u,s+1)/h and f(u,s-1)^-1 = h + alpha + beta/h(u-1,s)
/// as rational-function identities, then generates P_0..P_N from f and checks
/// the h ratios on 0 <= k <= n < N and the three-term relation for 1 <= n < N.
VerifyReport verify_rational_family(const RationalFamily& fam, int N);

} // namespace hypfam

#endif // HYPFAM_GAUGE_HPP
