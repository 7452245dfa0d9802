#include "hypfam/rational.hpp"

#include "hypfam/error.hpp"

#include <cctype>
#include <ostream>

namespace hypfam {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q))
{
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto fail = [&](const char* what) -> Rational {
        throw Error(ErrorKind::SyntaxError, std::string(what) + " in rational literal '" + std::string(text) + "'",
                    {static_cast<long>(pos)});
    };
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&]() -> std::string {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        return std::string(text.substr(start, pos - start));
    };
    const std::string num_digits = digits();
    if (num_digits.empty())
        return fail("expected digits");
    std::string den_digits = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den_digits = digits();
        if (den_digits.empty())
            return fail("expected denominator digits");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos != text.size())
        return fail("unexpected character");
    mpz_class num(num_digits, 10);
    mpz_class den(den_digits, 10);
    if (den == 0) {
        pos = text.find('/') + 1;
        return fail("zero denominator");
    }
    if (negative)
        num = -num;
    return Rational(num, den);
}

long double Rational::to_long_double() const
{
    // Split into integer and fractional parts to keep the conversion accurate
    // for values far from 1.
    mpz_class ip = q_.get_num() / q_.get_den();
    mpq_class frac = q_ - mpq_class(ip);
    return static_cast<long double>(ip.get_d()) + static_cast<long double>(frac.get_d());
}

std::string Rational::to_string() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(ErrorKind::ZeroDenominator, "division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const
{
    return Rational(1) / *this;
}

Rational Rational::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

bool is_negative_integer(const Rational& r)
{
    return r.is_integer() && r.sign() < 0;
}

bool is_nonpositive_integer(const Rational& r)
{
    return r.is_integer() && r.sign() <= 0;
}

Rational pochhammer(const Rational& x, long k)
{
    Rational out(1);
    for (long i = 0; i < k; ++i)
        out *= x + Rational(i);
    return out;
}

Rational binomial(long n, long k)
{
    if (k < 0 || k > n)
        return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out);
}

} // namespace hypfam
