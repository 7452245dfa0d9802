#include "hypfam/unipoly.hpp"

#include "hypfam/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hypfam {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
{
    trim();
}

UniPoly UniPoly::constant(const Rational& c)
{
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rational& shift)
{
    return UniPoly{shift, Rational(1)};
}

UniPoly UniPoly::from_roots(std::span<const Rational> roots)
{
    UniPoly out = constant(1);
    for (const auto& r : roots)
        out = out * linear(-r);
    return out;
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::lead() const
{
    static const Rational zero;
    return coeffs_.empty() ? zero : coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double UniPoly::eval(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

long double UniPoly::eval(long double x) const
{
    long double acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_long_double();
    return acc;
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * lead().inverse();
}

UniPoly UniPoly::derivative() const
{
    std::vector<Rational> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const
{
    const UniPoly inner{b, a};
    UniPoly out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        out = out * inner + constant(*it);
    return out;
}

UniPoly UniPoly::substitute_square(const Rational& scale) const
{
    std::vector<Rational> out(coeffs_.empty() ? 0 : 2 * coeffs_.size() - 1);
    Rational power(1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[2 * k] = coeffs_[k] * power;
        power *= scale;
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted_up(int k) const
{
    if (is_zero())
        return *this;
    std::vector<Rational> out(static_cast<std::size_t>(k));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(int e) const
{
    UniPoly out = constant(1);
    for (int i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const
{
    if (divisor.is_zero())
        throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd)
        return {UniPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational inv_lead = divisor.lead().inverse();
    for (int k = degree(); k >= dd; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
        quot[static_cast<std::size_t>(k - dd)] = c;
        if (c.is_zero())
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<Rational> UniPoly::rational_roots(UniPoly* rest) const
{
    std::vector<Rational> roots;
    UniPoly p = monic();
    while (p.degree() >= 1 && p.coeff(0).is_zero()) {
        roots.emplace_back(0);
        p = p.divmod(UniPoly{Rational(0), Rational(1)}).first;
    }
    if (p.degree() >= 1) {
        // Clear denominators to get an integer polynomial; candidates are
        // +-(divisor of constant term)/(divisor of leading term).
        mpz_class l = 1;
        for (const auto& c : p.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        const mpz_class c0 = (p.coeff(0) * Rational(l)).num();
        const mpz_class cn = (p.lead() * Rational(l)).num();
        std::set<Rational> candidates;
        for (const auto& a : positive_divisors(c0))
            for (const auto& b : positive_divisors(cn)) {
                candidates.insert(Rational(a, b));
                candidates.insert(-Rational(a, b));
            }
        for (const auto& r : candidates) {
            while (p.degree() >= 1 && p.eval(r).is_zero()) {
                roots.push_back(r);
                p = p.divmod(linear(-r)).first;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    if (rest)
        *rest = p.monic();
    return roots;
}

std::string UniPoly::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one())
            os << mag << "*";
        os << var;
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

UniPoly UniPoly::operator-() const
{
    UniPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly pochhammer_poly(const Rational& shift, int length)
{
    UniPoly out = UniPoly::constant(1);
    for (int i = 0; i < length; ++i)
        out = out * UniPoly::linear(shift + Rational(i));
    return out;
}

} // namespace hypfam
