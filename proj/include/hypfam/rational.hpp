#ifndef HYPFAM_RATIONAL_HPP
#define HYPFAM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hypfam {

/// Exact arbitrary-precision rational. Always canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& num, const mpz_class& den = 1);
    explicit Rational(mpq_class q);

    /// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
    /// Throws Error(SyntaxError) with the byte offset of the first bad char.
    static Rational parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational pow(long e) const;

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

bool is_negative_integer(const Rational& r);    // r in Z_{<0}
bool is_nonpositive_integer(const Rational& r); // r in Z_{<=0}

/// Rising factorial (x)_k = x(x+1)...(x+k-1).
Rational pochhammer(const Rational& x, long k);
Rational binomial(long n, long k);

} // namespace hypfam

#endif // HYPFAM_RATIONAL_HPP
