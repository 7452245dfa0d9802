#ifndef HYPFAM_BIPOLY_HPP
#define HYPFAM_BIPOLY_HPP

#include "hypfam/rational.hpp"
#include "hypfam/unipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypfam {

enum class Var { U, S };

/// Sparse polynomial in u and s over Q. Keys are (deg_u, deg_s); zero
/// coefficients are never stored.
class BiPoly {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Rational>;

    BiPoly() = default;
    BiPoly(const Rational& c); // NOLINT(google-explicit-constructor)
    BiPoly(long c) : BiPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)
    BiPoly(int c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static BiPoly u();
    static BiPoly s();
    static BiPoly monomial(const Rational& c, int deg_u, int deg_s);
    /// Embeds a univariate polynomial as a polynomial in one variable.
    static BiPoly from_uni(const UniPoly& p, Var v);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;
    int degree(Var v) const;
    bool depends_on(Var v) const { return degree(v) > 0; }
    Rational coeff(int deg_u, int deg_s) const;

    /// Leading term under graded-lex order (total degree first, then deg_u).
    std::pair<Exponent, Rational> leading_term() const;
    /// Positive rational c with this = c * (primitive integer polynomial).
    Rational content() const;
    /// Coprime integer coefficients, positive leading coefficient.
    BiPoly normalized() const;

    Rational eval(const Rational& u0, const Rational& s0) const;
    /// Substitutes a value for one variable, leaving a polynomial in the other.
    UniPoly eval_at(Var v, const Rational& value) const;
    /// Returns the polynomial as univariate in the variable that is not `v`.
    /// Only valid when the polynomial does not depend on `v`.
    UniPoly to_uni(Var remaining) const;

    /// x(u, s) -> x(u_expr, s_expr).
    BiPoly substitute(const BiPoly& u_expr, const BiPoly& s_expr) const;
    BiPoly shift(Var v, const Rational& delta) const;
    /// x(u, s) -> x(s, u).
    BiPoly swapped() const;

    /// Coefficients with respect to s, each a polynomial in u; index j is the
    /// coefficient of s^j.
    std::vector<UniPoly> coeffs_in_s() const;
    static BiPoly from_coeffs_in_s(const std::vector<UniPoly>& cs);

    /// Canonical text: graded-lex descending, explicit '*', "p/q" rationals.
    std::string to_string() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;
    BiPoly pow(int e) const;

private:
    void add_term(const Exponent& e, const Rational& c);
    Terms terms_;
};

/// p(arg) for a univariate p.
BiPoly compose(const UniPoly& p, const BiPoly& arg);

/// Greatest common divisor, content-normalized; gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);

/// Views x as a polynomial in `v` and splits off the gcd of its coefficients:
/// x = c * rest with c monic in the other variable. For x = 0 returns (0, 0).
std::pair<UniPoly, BiPoly> content_wrt(const BiPoly& x, Var v);

} // namespace hypfam

#endif // HYPFAM_BIPOLY_HPP
