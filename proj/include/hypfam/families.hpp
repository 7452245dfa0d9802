#ifndef HYPFAM_FAMILIES_HPP
#define HYPFAM_FAMILIES_HPP

#include "hypfam/birat.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypfam {

enum class FamilyKind { Jacobi, Laguerre, Bessel, E, F };

std::string_view to_string(FamilyKind kind);
/// Accepts the lower-case names used on the command line.
std::optional<FamilyKind> family_kind_from_string(std::string_view name);

/// One of the five Jacobi-type families. Only the parameters used by the kind
/// are meaningful: Jacobi(a, b), Laguerre(b), Bessel(a), E(c), F(c). Unused
/// parameters are kept at zero so that equality is structural.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Laguerre;
    Rational a;
    Rational b;
    Rational c;
    Rational rescale{1};

    static FamilySpec jacobi(const Rational& a, const Rational& b, const Rational& rescale = 1);
    static FamilySpec laguerre(const Rational& b, const Rational& rescale = 1);
    static FamilySpec bessel(const Rational& a, const Rational& rescale = 1);
    static FamilySpec e(const Rational& c, const Rational& rescale = 1);
    static FamilySpec f(const Rational& c, const Rational& rescale = 1);

    FamilySpec with_rescale(const Rational& r) const;
    /// e.g. "jacobi(a=2, b=1)" or "e(c=3/2, rescale=3)".
    std::string describe() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Human-readable reason the spec fails quasi-orthogonality, or nullopt when
/// it is quasi-valid.
std::optional<std::string> quasi_violation(const FamilySpec& spec);
bool is_quasi_valid(const FamilySpec& spec);

/// Weaker condition under which every polynomial of the family exists with
/// nonzero coefficients (all of the quasi conditions except a - b for
/// Jacobi). Generation is gated on this.
std::optional<std::string> definition_violation(const FamilySpec& spec);

/// Positivity domain: the family is orthogonal for a positive functional.
bool is_orthogonal(const FamilySpec& spec);

enum class Provenance { Series, RatioProduct, Recurrence, Gauge, Lommel, DiffShift };
std::string_view to_string(Provenance p);

struct PolySeq {
    std::vector<UniPoly> polys; // polys[n] has degree n
    Provenance provenance = Provenance::Series;
};

enum class Normalization { Monic, Hyper };

/// Parameters of the truncated series sum_k prod (gamma)_k / (prod (delta)_k k!) z^k.
struct HyperParams {
    std::vector<Rational> gammas;
    std::vector<Rational> deltas;
};

HyperParams hyper_params(const FamilySpec& spec, int n);

/// Truncated series with constant term 1, n + 1 terms.
UniPoly truncated_series(const HyperParams& hp, int n);

/// n-th polynomial of the family from the series. Monic output is rescaled as
/// P(z) -> r^-n P(r z); Hyper output is the monic one divided by its value at 0.
/// Throws InvalidParams when the spec is not defined.
UniPoly family_poly_series(const FamilySpec& spec, int n, Normalization norm = Normalization::Monic);

/// Factors of the coefficient ratio f = rescale * q(s+u) p(s-u) / w(s).
struct FamilyShape {
    UniPoly p;
    UniPoly q;
    UniPoly w;
};

FamilyShape family_shape(const FamilySpec& spec);
BiRat family_f(const FamilySpec& spec);

/// c(n, 0..n) with c(n, n) = 1 and c(n, k) = prod_{i=k}^{n-1} f(n, i)^-1.
/// Throws RatioVanishes / RatioPole with where() = {n, i}.
std::vector<Rational> coeffs_from_f(const BiRat& f, int n);
UniPoly assemble(const std::vector<Rational>& coeffs);

/// Recurrence coefficients as rational functions of u (s does not occur).
struct AlphaBeta {
    BiRat alpha;
    BiRat beta;
};

/// alpha(u) = A(u) - A(u+1) and beta(u) = B(u) - B(u+1) - A(u)^2 + A(u)A(u+1)
/// with A(u) = f(u, u-1)^-1, B(u) = f(u, u-2)^-1 f(u, u-1)^-1: the recurrence
/// coefficients implied by the top three coefficients of each P_n.
AlphaBeta alpha_beta_from_f(const BiRat& f);

/// Tabulated alpha, beta, divided by rescale and rescale^2. Each call checks
/// the table against alpha_beta_from_f(family_f(spec)) and throws
/// IdentityFailure on disagreement.
AlphaBeta alpha_beta_closed(const FamilySpec& spec);

/// P_1 = z + c0.
Rational family_c0(const FamilySpec& spec);

/// True for Jacobi and Bessel with a = 0, where the tabulated beta(1) does not
/// give the actual recurrence coefficient.
bool beta1_exception(const FamilySpec& spec);

/// Coefficients actually driving the family's recurrence: alpha[n], beta[n]
/// for 1 <= n <= N, evaluated from the table; beta[1] is replaced by the value
/// forced by P_2 when beta1_exception holds. alpha[0] holds -c0 and beta[0] = 0.
struct RecurrenceCoeffs {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    Rational c0;
    bool beta1_exception = false;
};

RecurrenceCoeffs family_recurrence_coeffs(const FamilySpec& spec, int N);

/// P_0 = 1, P_1 = z + c0, P_{n+1} = (z - alpha(n)) P_n - beta(n) P_{n-1} for
/// n < N. With require_nonzero_beta, a zero beta(n) for 1 <= n < N throws
/// BetaVanishes with where() = {n}.
PolySeq recurrence_generate(const std::function<Rational(int)>& alpha, const std::function<Rational(int)>& beta,
                            const Rational& c0, int N, bool require_nonzero_beta = true);

PolySeq family_series_seq(const FamilySpec& spec, int N);
PolySeq family_ratio_seq(const FamilySpec& spec, int N);
PolySeq family_recurrence_seq(const FamilySpec& spec, int N);

/// (alpha_n, beta_n) with z P = Pnext + alpha_n P + beta_n Pprev; throws
/// NotThreeTerm if no such pair exists.
std::pair<Rational, Rational> actual_recurrence_coeffs(const UniPoly& Pprev, const UniPoly& P, const UniPoly& Pnext);

/// Moments mu_0..mu_K of the functional with mu_0 = 1 defined by the
/// recurrence. alpha[0] is ignored: the bookkeeping value -c0 (z P_0 = P_1 - c0 P_0)
/// takes its place. alpha and beta need at least floor(K/2) + 1 entries.
std::vector<Rational> moment_functional(const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                                        const Rational& c0, int K);

using Matrix = std::vector<std::vector<Rational>>;

/// Q_ij = M(P_i P_j). Throws InsufficientMoments if mu is too short.
Matrix gram_matrix(const PolySeq& P, const std::vector<Rational>& mu);

/// Coefficient k of the residual is k prod(k + delta_j - 1) c_k - prod(k - 1 + gamma_l) c_{k-1}.
UniPoly pfq_ode_residual(const std::vector<Rational>& gammas, const std::vector<Rational>& deltas, const UniPoly& P);

} // namespace hypfam

#endif // HYPFAM_FAMILIES_HPP
