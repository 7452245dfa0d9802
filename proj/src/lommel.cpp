#include "hypfam/lommel.hpp"

#include "hypfam/error.hpp"
#include "hypfam/families.hpp"

namespace hypfam {

namespace {

const UniPoly Z{Rational(0), Rational(1)};

Rational sign_pow(int m)
{
    return Rational(m % 2 == 0 ? 1 : -1);
}

void require_c(const Rational& c)
{
    if (is_nonpositive_integer(c))
        throw Error(ErrorKind::InvalidParams, "c must not be a non-positive integer, got " + c.to_string());
}

} // namespace

std::vector<UniPoly> lommel_rec(const Rational& c, int N)
{
    std::vector<UniPoly> h{UniPoly::constant(1)};
    UniPoly prev; // h_{-1}
    for (int n = 0; n < N; ++n) {
        UniPoly next = Rational(2) * (Rational(n) + c) * (Z * h.back()) - prev;
        prev = h.back();
        h.push_back(std::move(next));
    }
    return h;
}

UniPoly lommel_explicit(const Rational& c, int n)
{
    const int m = n / 2;
    UniPoly out;
    if (n % 2 == 0) {
        for (int k = 0; k <= m; ++k) {
            const Rational coef = binomial(m + k, 2 * k) * pochhammer(Rational(m - k) + c, 2 * k) * Rational(-4).pow(k);
            out += UniPoly::monomial(coef, 2 * k);
        }
    } else {
        for (int k = 0; k <= m; ++k) {
            const Rational coef = binomial(m + k + 1, 2 * k + 1) * pochhammer(Rational(m - k) + c, 2 * k + 1) *
                                  sign_pow(k) * Rational(2).pow(2 * k + 1);
            out += UniPoly::monomial(coef, 2 * k + 1);
        }
    }
    return sign_pow(m) * out;
}

UniPoly e_explicit(const Rational& c, int n)
{
    UniPoly out;
    for (int k = 0; k <= n; ++k)
        out += UniPoly::monomial(binomial(n + k, 2 * k) * pochhammer(Rational(n - k) + c, 2 * k) * Rational(4).pow(k), k);
    return out * (Rational(2).pow(2 * n) * pochhammer(c, 2 * n)).inverse();
}

UniPoly f_explicit(const Rational& c, int n)
{
    UniPoly out;
    for (int k = 0; k <= n; ++k)
        out += UniPoly::monomial(
            binomial(n + k + 1, 2 * k + 1) * pochhammer(Rational(n - k) + c, 2 * k + 1) * Rational(4).pow(k), k);
    return out * (Rational(2).pow(2 * n) * pochhammer(c, 2 * n + 1)).inverse();
}

EFLommelCheck ef_lommel_check(const Rational& c, int n)
{
    require_c(c);
    const auto h = lommel_rec(c, 2 * n + 1);
    const UniPoly E = family_poly_series(FamilySpec::e(c), n);
    const UniPoly F = family_poly_series(FamilySpec::f(c), n);
    EFLommelCheck out;
    out.lhs_e = E.substitute_square(Rational(-1));
    out.rhs_e = h[static_cast<std::size_t>(2 * n)] *
                (sign_pow(n) / (Rational(2).pow(2 * n) * pochhammer(c, 2 * n)));
    out.lhs_f = Z * F.substitute_square(Rational(-1));
    out.rhs_f = h[static_cast<std::size_t>(2 * n + 1)] *
                (sign_pow(n) / (Rational(2).pow(2 * n + 1) * pochhammer(c, 2 * n + 1)));
    out.e_equal = out.lhs_e == out.rhs_e;
    out.f_equal = out.lhs_f == out.rhs_f;
    out.e_explicit_equal = e_explicit(c, n) == E;
    out.f_explicit_equal = f_explicit(c, n) == F;
    return out;
}

std::vector<UniPoly> g_sequence(const Rational& c, int N)
{
    require_c(c);
    std::vector<UniPoly> G;
    for (int n = 0; n <= N; ++n) {
        const int m = n / 2;
        const Rational scale = sign_pow(m) * Rational(2).pow(n) * pochhammer(c, n);
        if (n % 2 == 0)
            G.push_back(scale * family_poly_series(FamilySpec::e(c), m).substitute_square(Rational(-1)));
        else
            G.push_back(scale * (Z * family_poly_series(FamilySpec::f(c), m).substitute_square(Rational(-1))));
    }
    const auto h = lommel_rec(c, N);
    for (int n = 0; n <= N; ++n)
        if (G[static_cast<std::size_t>(n)] != h[static_cast<std::size_t>(n)])
            throw Error(ErrorKind::IdentityFailure, "G_" + std::to_string(n) + " differs from h_" + std::to_string(n),
                        {n});
    for (int n = 1; n < N; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const UniPoly residual = G[i + 1] - (Rational(2) * (c + Rational(n)) * (Z * G[i]) - G[i - 1]);
        if (!residual.is_zero())
            throw Error(ErrorKind::IdentityFailure, "G recursion fails at n = " + std::to_string(n), {n});
    }
    return G;
}

} // namespace hypfam
