#ifndef HYPFAM_BIRAT_HPP
#define HYPFAM_BIRAT_HPP

#include "hypfam/bipoly.hpp"

#include <string>

namespace hypfam {

/// Reduced rational function in u and s. The numerator and denominator are
/// coprime and the denominator has coprime integer coefficients with a
/// positive graded-lex leading coefficient, so equal functions compare equal.
class BiRat {
public:
    BiRat() : den_(1) {}
    BiRat(const BiPoly& p) : num_(p), den_(1) {} // NOLINT(google-explicit-constructor)
    BiRat(const Rational& c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
    BiRat(long c) : BiRat(Rational(c)) {}          // NOLINT(google-explicit-constructor)
    BiRat(int c) : BiRat(Rational(c)) {}           // NOLINT(google-explicit-constructor)

    /// Throws ZeroDenominator when den = 0.
    static BiRat reduce(const BiPoly& num, const BiPoly& den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

    /// Throws PoleAtPoint or IndeterminateAtPoint when den vanishes.
    Rational eval(const Rational& u0, const Rational& s0) const;

    BiRat substitute(const BiPoly& u_expr, const BiPoly& s_expr) const;
    BiRat shift(Var v, const Rational& delta) const;
    BiRat inverse() const;

    std::string to_string() const;

    BiRat operator-() const;
    friend BiRat operator+(const BiRat& a, const BiRat& b);
    friend BiRat operator-(const BiRat& a, const BiRat& b);
    friend BiRat operator*(const BiRat& a, const BiRat& b);
    friend BiRat operator/(const BiRat& a, const BiRat& b);
    friend bool operator==(const BiRat& a, const BiRat& b) = default;

private:
    BiPoly num_;
    BiPoly den_;
};

} // namespace hypfam

#endif // HYPFAM_BIRAT_HPP
