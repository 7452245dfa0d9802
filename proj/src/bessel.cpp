#include "hypfam/bessel.hpp"

#include "hypfam/error.hpp"
#include "hypfam/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace hypfam {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr int kMaxNewton = 50;

void check_order(double nu)
{
    if (!(nu > -2.0) || nu == -1.0)
        throw Error(ErrorKind::DomainError, "Bessel order must satisfy nu > -2, nu != -1; got " + std::to_string(nu));
}

long double series(long double nu, long double x)
{
    const long double half = x / 2.0L;
    const long double q = -half * half;
    long double term = std::pow(half, nu) / std::tgamma(nu + 1.0L);
    long double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= q / (static_cast<long double>(n) * (static_cast<long double>(n) + nu));
        sum += term;
        if (n > half && std::fabs(term) <= 1e-21L * std::fabs(sum))
            break;
    }
    return sum;
}

// Hankel expansion J = sqrt(2/(pi x)) (P cos chi - Q sin chi), summed up to
// the smallest term. Empty when that term exceeds 1e-13, the accuracy the
// expansion reaches near the series limit.
std::optional<long double> hankel(long double nu, long double x)
{
    const long double mu = 4.0L * nu * nu;
    long double P = 1.0L;
    long double Q = 0.0L;
    long double a = 1.0L;
    long double smallest = 1.0L;
    for (int k = 1; k < 200; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        const long double next = a * (mu - odd * odd) / (static_cast<long double>(k) * 8.0L * x);
        if (next == 0.0L) {
            smallest = 0.0L;
            break;
        }
        // Past sqrt(mu) the terms only grow once they start growing.
        if (odd * odd > mu && std::fabs(next) > std::fabs(a))
            break;
        a = next;
        // a_k enters P (k even) or Q (k odd) with sign (-1)^floor(k/2).
        const long double signed_a = ((k / 2) % 2 == 0) ? a : -a;
        if (k % 2 == 0)
            P += signed_a;
        else
            Q += signed_a;
        smallest = std::min(smallest, std::fabs(a));
        if (smallest < 1e-20L)
            break;
    }
    if (smallest > 1e-13L)
        return std::nullopt;
    const long double chi = x - (nu / 2.0L + 0.25L) * kPi;
    return std::sqrt(2.0L / (kPi * x)) * (P * std::cos(chi) - Q * std::sin(chi));
}

long double j_eval(long double nu, long double x)
{
    // Below the turning point the series has little cancellation.
    if (x <= kBesselSeriesLimit || x < nu)
        return series(nu, x);
    if (auto h = hankel(nu, x))
        return *h;
    // Upward recurrence J_{v+1} = (2v/x) J_v - J_{v-1} is stable for v < x.
    const long double base = nu - std::floor(nu);
    const auto j0 = hankel(base, x);
    const auto j1 = hankel(base + 1.0L, x);
    if (!j0 || !j1)
        return series(nu, x);
    long double prev = *j0;
    long double cur = *j1;
    for (long double v = base + 1.0L; v < nu - 0.5L; v += 1.0L) {
        const long double next = 2.0L * v / x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

long double j_prime(long double nu, long double x)
{
    return -j_eval(nu + 1.0L, x) + nu / x * j_eval(nu, x);
}

double mcmahon(double nu, int k)
{
    const double mu = 4.0 * nu * nu;
    const double beta = (k + nu / 2.0 - 0.25) * std::numbers::pi;
    const double e = 8.0 * beta;
    return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
}

std::optional<double> newton(double nu, double x)
{
    for (int it = 0; it < kMaxNewton; ++it) {
        const long double f = j_eval(nu, x);
        const long double d = j_prime(nu, x);
        if (d == 0.0L || !std::isfinite(static_cast<double>(d)))
            return std::nullopt;
        const double step = static_cast<double>(f / d);
        x -= step;
        if (!std::isfinite(x) || x <= 0.0)
            return std::nullopt;
        if (std::fabs(step) <= 4e-16 * x)
            return x;
    }
    return std::nullopt;
}

// Sign-change scan on (lo, hi) followed by bisection.
std::optional<double> bracket(double nu, double lo, double hi)
{
    const double step = 0.05;
    double a = lo;
    long double fa = j_eval(nu, a);
    for (double b = lo + step; b <= hi + step; b += step) {
        const long double fb = j_eval(nu, b);
        if ((fa < 0) != (fb < 0)) {
            for (int i = 0; i < 200 && b - a > 1e-15 * b; ++i) {
                const double mid = 0.5 * (a + b);
                const long double fm = j_eval(nu, mid);
                if ((fm < 0) == (fa < 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        a = b;
        fa = fb;
    }
    return std::nullopt;
}

long double reduced_i(long double nu, long double y)
{
    // I_nu(y) / (y/2)^nu
    const long double q = y * y / 4.0L;
    long double term = 1.0L / std::tgamma(nu + 1.0L);
    long double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= q / (static_cast<long double>(n) * (static_cast<long double>(n) + nu));
        sum += term;
        if (std::fabs(term) <= 1e-21L * std::fabs(sum))
            break;
    }
    return sum;
}

Rational rhs_e(const Rational& c, int n)
{
    return c / (Rational(2).pow(4 * n) * pochhammer(c, 2 * n).pow(2) * (Rational(2 * n) + c));
}

Rational rhs_f(const Rational& c, int n)
{
    const Rational c1 = c + Rational(1);
    return c1 / (Rational(2).pow(4 * n) * pochhammer(c1, 2 * n).pow(2) * (Rational(2 * n + 1) + c));
}

} // namespace

double GramEntry::abs_err() const
{
    return std::fabs(lhs - rhs);
}

double GramEntry::rel_err() const
{
    return rhs != 0.0 ? abs_err() / std::fabs(rhs) : abs_err();
}

double bessel_j(double nu, double x)
{
    check_order(nu);
    if (x < 0.0 || std::isnan(x))
        throw Error(ErrorKind::DomainError, "Bessel argument must be >= 0");
    if (x == 0.0) {
        if (nu == 0.0)
            return 1.0;
        if (nu > 0.0)
            return 0.0;
        throw Error(ErrorKind::DomainError, "J_nu(0) is infinite for negative order");
    }
    return static_cast<double>(j_eval(nu, x));
}

std::vector<double> bessel_zeros(double nu, int K)
{
    check_order(nu);
    if (K < 1)
        throw Error(ErrorKind::DomainError, "need at least one zero");
    // Below order -1 the first McMahon root is replaced by an imaginary pair.
    const int offset = nu < -1.0 ? 1 : 0;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(K));
    double prev = 0.0;
    for (int k = 1; k <= K; ++k) {
        const double seed = mcmahon(nu, k + offset);
        std::optional<double> root;
        if (seed > prev)
            root = newton(nu, seed);
        const bool plausible = root && *root > prev + 1.0 && std::fabs(*root - seed) < 1.0;
        if (!plausible) {
            root = bracket(nu, prev + 1e-3, std::max(seed, prev) + std::numbers::pi);
            if (root)
                root = newton(nu, *root).value_or(*root);
        }
        if (!root || *root <= prev)
            throw Error(ErrorKind::ConvergenceFailure,
                        "zero " + std::to_string(k) + " of J_" + std::to_string(nu) + " not found", {k});
        out.push_back(*root);
        prev = *root;
    }
    return out;
}

double bessel_imaginary_zero(double nu)
{
    if (!(nu > -2.0 && nu < -1.0))
        throw Error(ErrorKind::DomainError, "imaginary zeros exist only for -2 < nu < -1");
    double lo = 0.0;
    double hi = 1.0;
    while (reduced_i(nu, hi) < 0.0L)
        hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (reduced_i(nu, mid) < 0.0L)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double eval_poly_float(const UniPoly& P, double x)
{
    return P.eval(x);
}

GramEntry discrete_gram_E(const Rational& c, int n, int m, int K)
{
    if (c.sign() <= 0)
        throw Error(ErrorKind::DomainError, "the E sum needs c > 0");
    return discrete_gram_E(c, n, m, bessel_zeros((c - Rational(1)).to_double(), K));
}

GramEntry discrete_gram_E(const Rational& c, int n, int m, const std::vector<double>& zeros)
{
    if (c.sign() <= 0)
        throw Error(ErrorKind::DomainError, "the E sum needs c > 0");
    const UniPoly En = family_poly_series(FamilySpec::e(c), n);
    const UniPoly Em = family_poly_series(FamilySpec::e(c), m);
    long double sum = 0.0L;
    for (double j : zeros) {
        const double a2 = 1.0 / (j * j);
        sum += static_cast<long double>(a2) * En.eval(-a2) * Em.eval(-a2);
    }
    const double cd = c.to_double();
    GramEntry out;
    out.n = n;
    out.m = m;
    out.lhs = static_cast<double>(4.0L * cd * sum);
    out.rhs = n == m ? rhs_e(c, n).to_double() : 0.0;
    const double shift = static_cast<double>(zeros.size()) + (cd - 1.0) / 2.0 + 0.25;
    out.tail_bound = 4.0 * cd * std::fabs(En.coeff(0).to_double() * Em.coeff(0).to_double()) /
                     (std::numbers::pi * std::numbers::pi * shift);
    return out;
}

GramEntry discrete_gram_F(const Rational& c, int n, int m, int K)
{
    if (!(c > Rational(-1)) || c.is_zero())
        throw Error(ErrorKind::DomainError, "the F sum needs c > -1, c != 0");
    return discrete_gram_F(c, n, m, bessel_zeros((c - Rational(1)).to_double(), K));
}

GramEntry discrete_gram_F(const Rational& c, int n, int m, const std::vector<double>& zeros)
{
    if (!(c > Rational(-1)) || c.is_zero())
        throw Error(ErrorKind::DomainError, "the F sum needs c > -1, c != 0");
    const UniPoly Fn = family_poly_series(FamilySpec::f(c), n);
    const UniPoly Fm = family_poly_series(FamilySpec::f(c), m);
    const double nu = (c - Rational(1)).to_double();
    long double sum = 0.0L;
    if (c.sign() < 0) {
        // Zero at iy: a^2 = -1/y^2, a^4 = 1/y^4.
        const double y = bessel_imaginary_zero(nu);
        const double b2 = 1.0 / (y * y);
        sum += static_cast<long double>(b2 * b2) * Fn.eval(b2) * Fm.eval(b2);
    }
    for (double j : zeros) {
        const double a2 = 1.0 / (j * j);
        sum += static_cast<long double>(a2 * a2) * Fn.eval(-a2) * Fm.eval(-a2);
    }
    const double cd = c.to_double();
    GramEntry out;
    out.n = n;
    out.m = m;
    out.lhs = static_cast<double>(16.0L * cd * cd * (cd + 1.0) * sum);
    out.rhs = n == m ? rhs_f(c, n).to_double() : 0.0;
    const double shift = static_cast<double>(zeros.size()) + (nu < -1.0 ? 1.0 : 0.0) + nu / 2.0 + 0.25;
    const double pi4 = std::pow(std::numbers::pi, 4);
    out.tail_bound = 16.0 * cd * cd * (cd + 1.0) * std::fabs(Fn.coeff(0).to_double() * Fm.coeff(0).to_double()) /
                     (3.0 * pi4 * shift * shift * shift);
    return out;
}

} // namespace hypfam
