#ifndef HYPFAM_UNIPOLY_HPP
#define HYPFAM_UNIPOLY_HPP

#include "hypfam/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypfam {

/// Dense univariate polynomial over Q, ascending coefficients. Trailing zeros
/// are always trimmed, so the zero polynomial has no coefficients and
/// degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    /// t + shift
    static UniPoly linear(const Rational& shift);
    /// Product of (t - r) over the given roots.
    static UniPoly from_roots(std::span<const Rational> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of t^k, zero when k is out of range.
    Rational coeff(int k) const;
    const Rational& lead() const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    long double eval(long double x) const;

    UniPoly monic() const;
    UniPoly derivative() const;
    /// P(a*t + b).
    UniPoly compose_affine(const Rational& a, const Rational& b) const;
    /// P(t^2) scaled: returns P(scale * t^2).
    UniPoly substitute_square(const Rational& scale) const;
    UniPoly shifted_up(int k) const; // t^k * P
    UniPoly pow(int e) const;

    /// Euclidean division; throws ZeroDenominator for a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    /// Rational roots with multiplicity, ascending. The cofactor with no
    /// rational roots is returned in `rest` (monic).
    std::vector<Rational> rational_roots(UniPoly* rest = nullptr) const;

    std::string to_string(char var = 'z') const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// (t + shift)(t + shift + 1)...(t + shift + length - 1); length 0 gives 1.
UniPoly pochhammer_poly(const Rational& shift, int length);

} // namespace hypfam

#endif // HYPFAM_UNIPOLY_HPP
