#include "hypfam/error.hpp"
#include "hypfam/families.hpp"

#include <doctest.h>

using namespace hypfam;

namespace {

const BiPoly U = BiPoly::u();
const BiPoly S = BiPoly::s();
const UniPoly Z{Rational(0), Rational(1)};

// Direct pFq coefficients prod (gamma)_k / (prod (delta)_k k!).
UniPoly pfq_oracle(const std::vector<Rational>& gammas, const std::vector<Rational>& deltas, int n)
{
    std::vector<Rational> c;
    for (int k = 0; k <= n; ++k) {
        Rational num(1);
        Rational den = pochhammer(Rational(1), k);
        for (const auto& g : gammas)
            num *= pochhammer(g, k);
        for (const auto& d : deltas)
            den *= pochhammer(d, k);
        c.push_back(num / den);
    }
    return UniPoly(c);
}

// M(z^k) as the P_0 coordinate of z^k in the basis P_0..P_k.
Rational moment_oracle(const std::vector<UniPoly>& P, int k)
{
    UniPoly rest = UniPoly::monomial(1, k);
    for (int j = k; j >= 1; --j)
        rest -= P[static_cast<std::size_t>(j)] * rest.coeff(j);
    return rest.coeff(0);
}

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::ZeroDenominator;
}

const std::vector<FamilySpec> kSpecs = {
    FamilySpec::jacobi(2, 1),        FamilySpec::jacobi(Rational(1, 3), Rational(1, 4)),
    FamilySpec::jacobi(0, 1),        FamilySpec::laguerre(Rational(5, 2)),
    FamilySpec::bessel(0),           FamilySpec::bessel(Rational(1, 2)),
    FamilySpec::e(Rational(7, 3)),   FamilySpec::f(Rational(5, 2)),
    FamilySpec::e(1, Rational(-2)),  FamilySpec::jacobi(Rational(3, 2), 2, Rational(5, 7)),
};

} // namespace

TEST_CASE("family_poly_series")
{
    CHECK(family_poly_series(FamilySpec::laguerre(1), 2) == UniPoly{Rational(2), Rational(-4), Rational(1)});
    CHECK(family_poly_series(FamilySpec::e(1), 1) == UniPoly{Rational(1, 8), Rational(1)});
    for (const Rational c : {Rational(1), Rational(3, 2), Rational(-1, 3)})
        CHECK(family_poly_series(FamilySpec::e(c), 1).coeff(0) == (Rational(4) * c * (c + Rational(1))).inverse());
    CHECK(family_poly_series(FamilySpec::jacobi(2, 1), 1) == UniPoly{Rational(-1, 3), Rational(1)});
    CHECK(family_poly_series(FamilySpec::f(1), 1) == UniPoly{Rational(1, 6), Rational(1)});
    CHECK(family_poly_series(FamilySpec::laguerre(1), 2, Normalization::Hyper) ==
          UniPoly{Rational(1), Rational(-2), Rational(1, 2)});
}

TEST_CASE("series matches a direct hypergeometric sum")
{
    for (const auto& spec : kSpecs) {
        CAPTURE(spec.describe());
        for (int n = 0; n <= 8; ++n) {
            const HyperParams hp = hyper_params(spec, n);
            UniPoly oracle = pfq_oracle(hp.gammas, hp.deltas, n);
            // P(rescale * z) made monic.
            std::vector<Rational> c;
            for (int k = 0; k <= n; ++k)
                c.push_back(oracle.coeff(k) * spec.rescale.pow(k));
            CHECK(family_poly_series(spec, n) == UniPoly(c).monic());
        }
    }
}

TEST_CASE("family_f")
{
    const Rational b(5, 2);
    CHECK(family_f(FamilySpec::laguerre(b)) == BiRat::reduce(S - U, (S + 1) * (S + b)));
    const Rational a(3);
    CHECK(family_f(FamilySpec::bessel(a)) == BiRat::reduce((S - U) * (S + U + a), S + 1));
    const Rational c(7, 3);
    CHECK(family_f(FamilySpec::e(c)) ==
          BiRat::reduce((S - U) * (S - U + 1 - c) * (S + U + 1) * (S + U + c), (S + 1) * (S + Rational(1, 2))));
}

TEST_CASE("coeffs_from_f")
{
    CHECK(coeffs_from_f(family_f(FamilySpec::laguerre(1)), 2) ==
          std::vector<Rational>{Rational(2), Rational(-4), Rational(1)});
    const Rational c(5, 3);
    const auto e1 = coeffs_from_f(family_f(FamilySpec::e(c)), 1);
    CHECK(e1 == std::vector<Rational>{(Rational(4) * c * (c + Rational(1))).inverse(), Rational(1)});
    CHECK(coeffs_from_f(family_f(FamilySpec::jacobi(2, 1)), 2) ==
          std::vector<Rational>{Rational(1, 10), Rational(-4, 5), Rational(1)});
    // f vanishes at (2, 1).
    CHECK(kind_of([] { coeffs_from_f(BiRat(S - 1), 2); }) == ErrorKind::RatioVanishes);
}

TEST_CASE("alpha_beta_closed")
{
    const Rational b(5, 2);
    const AlphaBeta lag = alpha_beta_closed(FamilySpec::laguerre(b));
    CHECK(lag.alpha == BiRat(Rational(2) * U + b));
    CHECK(lag.beta == BiRat(U * (U + b - 1)));

    const Rational a(3, 2);
    const AlphaBeta bes = alpha_beta_closed(FamilySpec::bessel(a));
    const BiPoly t = Rational(2) * U + a;
    CHECK(bes.beta == BiRat::reduce(-(U * (U + a - 1)), t * (t - 1) * (t - 1) * (t - 2)));

    const AlphaBeta jac = alpha_beta_closed(FamilySpec::jacobi(2, 1));
    CHECK(jac.alpha.eval(1, 0) == Rational(7, 15));
    CHECK(jac.beta.eval(1, 0) == Rational(1, 18));

    for (const auto& spec : kSpecs)
        CHECK(alpha_beta_closed(spec).alpha == alpha_beta_from_f(family_f(spec)).alpha);
}

TEST_CASE("recurrence_generate")
{
    const AlphaBeta lag = alpha_beta_closed(FamilySpec::laguerre(1));
    auto alpha = [&](int n) { return lag.alpha.eval(n, 0); };
    auto beta = [&](int n) { return lag.beta.eval(n, 0); };
    CHECK(recurrence_generate(alpha, beta, -1, 2).polys[2] == UniPoly{Rational(2), Rational(-4), Rational(1)});

    for (const Rational c : {Rational(3, 2), Rational(5, 2)}) {
        const AlphaBeta e = alpha_beta_closed(FamilySpec::e(c));
        auto ea = [&](int n) { return e.alpha.eval(n, 0); };
        auto eb = [&](int n) { return e.beta.eval(n, 0); };
        const Rational c0 = (Rational(4) * c * (c + Rational(1))).inverse();
        CHECK(recurrence_generate(ea, eb, c0, 8).polys == family_series_seq(FamilySpec::e(c), 8).polys);
        // With c0 = -alpha(0) the same recurrence gives F^(c-1).
        const Rational wrong = -e.alpha.eval(0, 0);
        CHECK(wrong != c0);
        CHECK(recurrence_generate(ea, eb, wrong, 8).polys ==
              family_series_seq(FamilySpec::f(c - Rational(1)), 8).polys);
    }
    CHECK(kind_of([] { recurrence_generate([](int) { return Rational(0); }, [](int) { return Rational(0); }, 0, 3); }) ==
          ErrorKind::BetaVanishes);
}

TEST_CASE("three generators agree")
{
    for (const auto& spec : kSpecs) {
        CAPTURE(spec.describe());
        const auto s = family_series_seq(spec, 12).polys;
        CHECK(family_ratio_seq(spec, 12).polys == s);
        CHECK(family_recurrence_seq(spec, 12).polys == s);
    }
}

TEST_CASE("actual_recurrence_coeffs")
{
    const auto bes = family_series_seq(FamilySpec::bessel(0), 2).polys;
    CHECK(bes[1] == UniPoly{Rational(-1), Rational(1)});
    CHECK(bes[2] == UniPoly{Rational(1, 6), Rational(-2, 3), Rational(1)});
    const auto [a1, b1] = actual_recurrence_coeffs(bes[0], bes[1], bes[2]);
    CHECK(a1 == Rational(-1, 3));
    CHECK(b1 == Rational(-1, 2));
    CHECK(alpha_beta_closed(FamilySpec::bessel(0)).beta.eval(1, 0) != b1);
    CHECK(beta1_exception(FamilySpec::bessel(0)));
    CHECK(beta1_exception(FamilySpec::jacobi(0, Rational(3, 2))));
    CHECK_FALSE(beta1_exception(FamilySpec::jacobi(1, Rational(3, 2))));

    const auto lag = family_series_seq(FamilySpec::laguerre(1), 2).polys;
    CHECK(actual_recurrence_coeffs(lag[0], lag[1], lag[2]) == std::pair{Rational(3), Rational(1)});
    CHECK(actual_recurrence_coeffs(UniPoly{1}, Z, UniPoly{Rational(1), Rational(0), Rational(1)}) ==
          std::pair{Rational(0), Rational(-1)});
    // z * z^2 - (z^3 + 1) = -1 is not a combination of z^2 and z.
    CHECK(kind_of([] { actual_recurrence_coeffs(Z, Z * Z, UniPoly{Rational(1), Rational(0), Rational(0), Rational(1)}); }) ==
          ErrorKind::NotThreeTerm);
    CHECK(kind_of([] { actual_recurrence_coeffs(UniPoly{1}, Z, Z); }) == ErrorKind::InvalidParams);
}

TEST_CASE("closed alpha and beta match the actual recurrence")
{
    for (const auto& spec : kSpecs) {
        CAPTURE(spec.describe());
        const auto P = family_series_seq(spec, 12).polys;
        const AlphaBeta ab = alpha_beta_closed(spec);
        for (int n = 1; n < 12; ++n) {
            const auto [a, b] = actual_recurrence_coeffs(P[n - 1], P[n], P[n + 1]);
            CHECK(ab.alpha.eval(n, 0) == a);
            if (!(n == 1 && beta1_exception(spec)))
                CHECK(ab.beta.eval(n, 0) == b);
        }
    }
}

TEST_CASE("moment_functional and gram_matrix")
{
    const FamilySpec lag1 = FamilySpec::laguerre(1);
    const RecurrenceCoeffs rc = family_recurrence_coeffs(lag1, 6);
    const auto mu = moment_functional(rc.alpha, rc.beta, rc.c0, 8);
    const auto P = family_series_seq(lag1, 8).polys;
    for (int k = 0; k <= 8; ++k) {
        CHECK(mu[k] == moment_oracle(P, k));
        CHECK(mu[k] == pochhammer(Rational(1), k));
    }
    CHECK(mu[1] == -rc.c0);

    const RecurrenceCoeffs r52 = family_recurrence_coeffs(FamilySpec::laguerre(Rational(5, 2)), 4);
    CHECK(moment_functional(r52.alpha, r52.beta, r52.c0, 2)[2] == Rational(35, 4));

    PolySeq L;
    L.polys = family_series_seq(lag1, 2).polys;
    const Matrix Q = gram_matrix(L, mu);
    CHECK(Q == Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 4}});

    const FamilySpec b0 = FamilySpec::bessel(0);
    PolySeq B;
    B.polys = family_series_seq(b0, 6).polys;
    std::vector<Rational> alpha(4);
    std::vector<Rational> beta(4);
    for (int n = 1; n < 4; ++n)
        std::tie(alpha[n], beta[n]) = actual_recurrence_coeffs(B.polys[n - 1], B.polys[n], B.polys[n + 1]);
    const auto mb = moment_functional(alpha, beta, B.polys[1].coeff(0), 6);
    for (int k = 0; k <= 6; ++k)
        CHECK(mb[k] == moment_oracle(B.polys, k));
    B.polys.resize(3);
    const Matrix QB = gram_matrix(B, mb);
    CHECK(QB[0][0] == Rational(1));
    CHECK(QB[1][1] == Rational(-1, 2));
    CHECK(QB[0][1] == Rational(0));
    CHECK(QB[1][2] == Rational(0));
    CHECK(kind_of([&] { gram_matrix(B, {Rational(1)}); }) == ErrorKind::InsufficientMoments);
}

TEST_CASE("pfq_ode_residual")
{
    const HyperParams e1 = hyper_params(FamilySpec::e(1), 1);
    CHECK(pfq_ode_residual(e1.gammas, e1.deltas, UniPoly{Rational(1), Rational(8)}).is_zero());
    for (int n = 0; n <= 6; ++n) {
        const FamilySpec f = FamilySpec::f(Rational(5, 2));
        const HyperParams hp = hyper_params(f, n);
        CHECK(pfq_ode_residual(hp.gammas, hp.deltas, family_poly_series(f, n)).is_zero());
        const FamilySpec l = FamilySpec::laguerre(Rational(3));
        const HyperParams hl = hyper_params(l, n);
        CHECK(pfq_ode_residual(hl.gammas, hl.deltas, family_poly_series(l, n)).is_zero());
    }
    CHECK_FALSE(pfq_ode_residual(e1.gammas, e1.deltas, UniPoly{Rational(1), Rational(7)}).is_zero());
}

TEST_CASE("parameter predicates")
{
    CHECK(is_quasi_valid(FamilySpec::bessel(0)));
    CHECK_FALSE(is_orthogonal(FamilySpec::bessel(0)));
    CHECK_FALSE(is_quasi_valid(FamilySpec::jacobi(0, 1)));
    CHECK_FALSE(definition_violation(FamilySpec::jacobi(0, 1)).has_value());
    CHECK(definition_violation(FamilySpec::f(0)).has_value());
    CHECK(definition_violation(FamilySpec::e(-2)).has_value());
    CHECK(is_orthogonal(FamilySpec::laguerre(Rational(1, 2))));
    CHECK_FALSE(is_orthogonal(FamilySpec::laguerre(Rational(-1, 2))));
    CHECK(kind_of([] { family_poly_series(FamilySpec::f(-1), 2); }) == ErrorKind::InvalidParams);
}
