#include "hypfam/birat.hpp"

#include "hypfam/error.hpp"

namespace hypfam {

BiRat BiRat::reduce(const BiPoly& num, const BiPoly& den)
{
    if (den.is_zero())
        throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    BiRat out;
    if (num.is_zero())
        return out;
    BiPoly n = num;
    BiPoly d = den;
    const BiPoly g = gcd(n, d);
    if (!g.is_constant()) {
        n = *divide_exact(n, g);
        d = *divide_exact(d, g);
    }
    const BiPoly dn = d.normalized();
    // d = scale * dn, so n/d = (n/scale)/dn.
    const Rational scale = d.leading_term().second / dn.leading_term().second;
    out.num_ = n * scale.inverse();
    out.den_ = dn;
    return out;
}

Rational BiRat::eval(const Rational& u0, const Rational& s0) const
{
    const Rational d = den_.eval(u0, s0);
    if (d.is_zero()) {
        const std::vector<long> where = {u0.is_integer() ? u0.num().get_si() : 0,
                                         s0.is_integer() ? s0.num().get_si() : 0};
        const std::string at = "(" + u0.to_string() + ", " + s0.to_string() + ")";
        if (num_.eval(u0, s0).is_zero())
            throw Error(ErrorKind::IndeterminateAtPoint, "0/0 at " + at, where);
        throw Error(ErrorKind::PoleAtPoint, "pole at " + at, where);
    }
    return num_.eval(u0, s0) / d;
}

BiRat BiRat::substitute(const BiPoly& u_expr, const BiPoly& s_expr) const
{
    return reduce(num_.substitute(u_expr, s_expr), den_.substitute(u_expr, s_expr));
}

BiRat BiRat::shift(Var v, const Rational& delta) const
{
    if (!delta.is_integer())
        return reduce(num_.shift(v, delta), den_.shift(v, delta));
    // Integer shifts preserve coprimality, the leading term and the integer
    // content, so the result is already canonical.
    BiRat out;
    out.num_ = num_.shift(v, delta);
    out.den_ = den_.shift(v, delta);
    return out;
}

BiRat BiRat::inverse() const
{
    if (num_.is_zero())
        throw Error(ErrorKind::ZeroDenominator, "inverse of zero rational function");
    return reduce(den_, num_);
}

std::string BiRat::to_string() const
{
    if (den_ == BiPoly(1))
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

BiRat BiRat::operator-() const
{
    BiRat out = *this;
    out.num_ = -num_;
    return out;
}

BiRat operator+(const BiRat& a, const BiRat& b)
{
    if (a.den_ == b.den_)
        return BiRat::reduce(a.num_ + b.num_, a.den_);
    return BiRat::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BiRat operator-(const BiRat& a, const BiRat& b)
{
    return a + (-b);
}

BiRat operator*(const BiRat& a, const BiRat& b)
{
    return BiRat::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

BiRat operator/(const BiRat& a, const BiRat& b)
{
    if (b.is_zero())
        throw Error(ErrorKind::ZeroDenominator, "division by zero rational function");
    return BiRat::reduce(a.num_ * b.den_, a.den_ * b.num_);
}

} // namespace hypfam
