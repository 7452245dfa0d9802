#include "hypfam/classify.hpp"
#include "hypfam/error.hpp"
#include "hypfam/gauge.hpp"

#include <doctest.h>

using namespace hypfam;

namespace {

const BiPoly U = BiPoly::u();
const BiPoly S = BiPoly::s();

UniPoly tp(const Rational& a)
{
    return UniPoly{a, Rational(1)};
}

// h(n, k) = c(n+1, k) / c(n, k) read off a generated sequence.
Rational h_from_seq(const PolySeq& P, int n, int k)
{
    return P.polys[n + 1].coeff(k) / P.polys[n].coeff(k);
}

} // namespace

TEST_CASE("apply_gauge")
{
    const PolySeq Q = family_series_seq(FamilySpec::jacobi(1, Rational(3, 2)), 6);
    CHECK(apply_gauge(BiPoly(1), Q).polys == Q.polys);

    // u + s vanishes at (0, 0), so only the degree-1 member is gauged.
    PolySeq L;
    L.polys = {family_poly_series(FamilySpec::laguerre(1), 1)};
    CHECK(apply_gauge(U + S, L).polys[0] == UniPoly{Rational(-1, 2), Rational(1)});
    CHECK_THROWS_AS(apply_gauge(U + S, family_series_seq(FamilySpec::laguerre(1), 1)), Error);
}

TEST_CASE("gauge_f and gauge_h")
{
    const FamilySpec spec = FamilySpec::jacobi(1, Rational(3, 2));
    const RationalFamily base = jacobi_type_family(spec);
    const BiPoly g = Rational(2) * U + S + Rational(3, 2);
    const PolySeq R = apply_gauge(g, family_series_seq(spec, 8));
    const BiRat f = gauge_f(base.f, g);
    const BiRat h = gauge_h(*base.h, g);
    for (int n = 1; n < 8; ++n)
        for (int k = 0; k < n; ++k)
            CHECK(R.polys[n].coeff(k + 1) / R.polys[n].coeff(k) == f.eval(n, k));
    for (int n = 0; n < 7; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(h_from_seq(R, n, k) == h.eval(n, k));
}

TEST_CASE("h_closed_form")
{
    const UniPoly T{Rational(0), Rational(1)};
    const Rational b(5, 2);
    // Monic Laguerre: c(n, k) = (-1)^(n-k) C(n, k) (k + b)_(n-k), so
    // c(n+1, k) / c(n, k) = -(n + 1)(n + b) / (n + 1 - k).
    CHECK(h_closed_form(T, UniPoly::constant(1), tp(1) * tp(b)) == BiRat::reduce((U + 1) * (U + b), S - U - 1));

    // Each table h reproduces c(n+1, k) / c(n, k) of the generated family.
    for (const FamilySpec& spec : {FamilySpec::bessel(Rational(3, 2)), FamilySpec::jacobi(2, 1), FamilySpec::e(Rational(7, 3)),
                                   FamilySpec::f(Rational(1, 2))}) {
        CAPTURE(spec.describe());
        const FamilyShape sh = family_shape(spec);
        const BiRat h = h_closed_form(sh.p, sh.q, sh.w);
        const PolySeq P = family_series_seq(spec, 8);
        for (int n = 0; n < 8; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(h_from_seq(P, n, k) == h.eval(n, k));
    }
}

TEST_CASE("r_poly")
{
    CHECK(r_poly(1) == tp(Rational(1, 2)));
    CHECK(r_poly(2) == tp(Rational(-1, 2)) * tp(Rational(1, 2)) * tp(Rational(3, 2)));
}

TEST_CASE("verify_rational_family on the table families")
{
    for (const FamilySpec& spec : {FamilySpec::jacobi(2, 1), FamilySpec::laguerre(Rational(5, 2), 3), FamilySpec::bessel(0),
                                   FamilySpec::bessel(2), FamilySpec::e(Rational(3, 2)), FamilySpec::f(1, Rational(-2))}) {
        CAPTURE(spec.describe());
        CHECK(verify_rational_family(jacobi_type_family(spec), 15).passed());
    }
}

TEST_CASE("a corrupted beta is detected")
{
    RationalFamily fam = jacobi_type_family(FamilySpec::jacobi(2, 1));
    fam.beta = fam.beta * BiRat(2);
    const VerifyReport rep = verify_rational_family(fam, 6);
    CHECK_FALSE(rep.passed());
    bool three_term_failed_at_1 = false;
    for (const auto& c : rep.checks)
        if (!c.passed && c.detail.find("n = 1") != std::string::npos)
            three_term_failed_at_1 = true;
    CHECK(three_term_failed_at_1);
}

TEST_CASE("P^{c,lambda}")
{
    for (const auto& [c, lambda] : {std::pair{Rational(2), Rational(1, 2)}, std::pair{Rational(3, 2), Rational(-3)}}) {
        const BuiltFamily b = family_p_c_lambda(c, lambda, 12);
        CHECK_FALSE(b.family.is_jacobi_type);
        CHECK(verify_rational_family(b.family, 12).passed());
        CHECK(family_p_c_lambda(c, 0, 12).seq.polys == family_series_seq(FamilySpec::f(c), 12).polys);
        CHECK(family_p_c_lambda(c, 1, 12).seq.polys == family_series_seq(FamilySpec::e(c + Rational(1)), 12).polys);
    }
    CHECK_THROWS_AS(family_p_c_lambda(-1, 1, 3), Error);
}

TEST_CASE("R^{l,lambda}")
{
    const Rational lambda(2);
    const BuiltFamily b = family_r_l_lambda(1, lambda, 8);
    CHECK(verify_rational_family(b.family, 8).passed());
    for (int n = 0; n <= 8; ++n) {
        const Rational ln = lambda * Rational(n);
        const HyperParams hp{{Rational(-n), Rational(n + 1), ln + (lambda + Rational(3)) / Rational(2)},
                             {Rational(3, 2), ln + (lambda + Rational(1)) / Rational(2)}};
        CHECK(truncated_series(hp, n).monic() == b.seq.polys[n]);
    }
    // lambda = 0 leaves the gauge s + 1/2, which turns Jacobi(1, 3/2) into Jacobi(1, 1/2).
    CHECK(family_r_l_lambda(1, 0, 8).seq.polys == family_series_seq(FamilySpec::jacobi(1, Rational(1, 2)), 8).polys);

    // For l = 2, lambda = 1 the gauge numerator factors as
    // (s + u + 1)(4s^2 - 4su + 2s + 4u^2 + 2u - 3).
    const BuiltFamily b2 = family_r_l_lambda(2, 1, 8);
    REQUIRE(b2.gauge.has_value());
    const BiPoly quad = Rational(4) * S * S - Rational(4) * S * U + Rational(2) * S + Rational(4) * U * U + Rational(2) * U - 3;
    CHECK(*b2.gauge == (S + U + 1) * quad);
    CHECK(*b2.gauge == (compose(r_poly(2), S) + compose(r_poly(2), U)).normalized());
    CHECK(verify_rational_family(b2.family, 8).passed());
    CHECK_THROWS_AS(family_r_l_lambda(1, -1, 3), Error);
}

TEST_CASE("shifted difference family")
{
    const BuiltFamily d1 = family_diffshift(1, 10);
    CHECK(verify_rational_family(d1.family, 10).passed());
    CHECK(classify_jacobi_type(d1.family.f.num(), d1.family.f.den()).spec == FamilySpec::jacobi(2, Rational(3, 2)));
    const BuiltFamily d2 = family_diffshift(2, 10);
    CHECK_FALSE(d2.family.is_jacobi_type);
    CHECK(verify_rational_family(d2.family, 10).passed());
}
