#include "hypfam/birat.hpp"
#include "hypfam/error.hpp"
#include "hypfam/parse.hpp"
#include "hypfam/separate.hpp"

#include <doctest.h>

using namespace hypfam;

namespace {

const BiPoly U = BiPoly::u();
const BiPoly S = BiPoly::s();

BiPoly P(const char* text)
{
    return parse_poly_expr(text);
}

// Restriction of x to the line u = a t + b, s = c t + d.
UniPoly on_line(const BiPoly& x, long a, long b, long c, long d)
{
    UniPoly out;
    for (const auto& [e, coef] : x.terms()) {
        UniPoly term = UniPoly::constant(coef);
        term = term * UniPoly{Rational(b), Rational(a)}.pow(e.first);
        term = term * UniPoly{Rational(d), Rational(c)}.pow(e.second);
        out += term;
    }
    return out;
}

// Coprime on generic lines: gcd of the restrictions is constant on at least
// one of a few fixed lines.
bool coprime_on_lines(const BiPoly& a, const BiPoly& b)
{
    const long lines[][4] = {{1, 3, 2, -5}, {3, -7, 5, 2}, {-2, 11, 7, 13}};
    for (const auto& l : lines)
        if (gcd(on_line(a, l[0], l[1], l[2], l[3]), on_line(b, l[0], l[1], l[2], l[3])).degree() == 0)
            return true;
    return false;
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

} // namespace

TEST_CASE("rational arithmetic and parsing")
{
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(4).to_string() == "4");
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(kind_of([] { Rational(1, 0); }) == ErrorKind::ZeroDenominator);
    CHECK(kind_of([] { Rational::parse("1/0"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("reduce cancels common factors")
{
    const BiRat r = BiRat::reduce((U - S) * (S + 1), (S + 1) * (S + 1));
    CHECK(r == BiRat::reduce(U - S, S + 1));
    CHECK(r.den() == S + 1);

    const BiRat same = BiRat::reduce(U - S, S + 1);
    CHECK(same.num() * (S + 1) == (U - S) * same.den());

    const BiPoly N = Rational(3) * (S - U) * (S + U + 2);
    const BiPoly D = (S + 1) * (S + 1);
    const BiRat x = BiRat::reduce(N, D);
    CHECK(x.num() * D == N * x.den());
    CHECK(x.den() == D);
    CHECK(coprime_on_lines(x.num(), x.den()));
}

TEST_CASE("reduce with a bivariate common factor")
{
    const BiPoly g = U * S + U - Rational(2) * S * S + 3;
    const BiPoly N = g * (U - S + 1);
    const BiPoly D = g * g * (S + Rational(1, 2));
    const BiRat x = BiRat::reduce(N, D);
    CHECK(x.num() * D == N * x.den());
    CHECK(coprime_on_lines(x.num(), x.den()));
    CHECK(x.den().total_degree() == 3);
    CHECK(kind_of([] { BiRat::reduce(U, BiPoly()); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("shift")
{
    CHECK(P("s^2").shift(Var::S, 1) == P("s^2+2*s+1"));
    CHECK(BiRat::reduce(U - S, S + 1).shift(Var::S, -1) == BiRat::reduce(U - S + 1, S));
    CHECK((U * S).shift(Var::U, 2) == U * S + Rational(2) * S);
}

TEST_CASE("eval")
{
    const BiRat x = BiRat::reduce(S - U, S + 1);
    CHECK(x.eval(1, 0) == Rational(-1));
    CHECK(kind_of([&] { x.eval(0, -1); }) == ErrorKind::PoleAtPoint);
    CHECK((U * S).eval(2, 3) == Rational(6));
    const BiRat y = BiRat::reduce(S - U, S + U);
    CHECK(kind_of([&] { y.eval(0, 0); }) == ErrorKind::IndeterminateAtPoint);
}

TEST_CASE("separate_sum_diff")
{
    auto sp = separate_sum_diff((S - U) * (S + U + 2));
    CHECK(sp.kappa == Rational(1));
    CHECK(sp.q == UniPoly{Rational(2), Rational(1)});
    CHECK(sp.p == UniPoly{Rational(0), Rational(1)});

    const Rational c(3);
    const BiPoly e = (S + U + 1) * (S + U + c) * (S - U) * (S - U + 1 - c);
    sp = separate_sum_diff(e);
    CHECK(sp.kappa == Rational(1));
    CHECK(sp.q == UniPoly{Rational(1), Rational(1)} * UniPoly{Rational(3), Rational(1)});
    CHECK(sp.p == UniPoly{Rational(0), Rational(1)} * UniPoly{Rational(-2), Rational(1)});
    CHECK(assemble_sum_diff(sp) == e);

    CHECK(kind_of([] { separate_sum_diff(S * S + U); }) == ErrorKind::NotSeparable);

    const BiPoly scaled = Rational(-5, 3) * (S + U - Rational(1, 2)).pow(2) * (S - U + 4);
    sp = separate_sum_diff(scaled);
    CHECK(sp.kappa == Rational(-5, 3));
    CHECK(assemble_sum_diff(sp) == scaled);
}

TEST_CASE("pochhammer_poly")
{
    CHECK(pochhammer_poly(Rational(1, 2), 1) == UniPoly{Rational(1, 2), Rational(1)});
    const UniPoly three = UniPoly{Rational(-1, 2), Rational(1)} * UniPoly{Rational(1, 2), Rational(1)} *
                          UniPoly{Rational(3, 2), Rational(1)};
    CHECK(pochhammer_poly(Rational(-1, 2), 3) == three);
    CHECK(pochhammer_poly(Rational(7), 0) == UniPoly::constant(1));
}

TEST_CASE("parse_poly_expr")
{
    CHECK(P("(s-u)*(s+u+2)") == S * S + Rational(2) * S - U * U - Rational(2) * U);
    CHECK(P("3/2*s + u^2") == U * U + Rational(3, 2) * S);
    CHECK(P("(s+1)*(s+1/2)") == S * S + Rational(3, 2) * S + Rational(1, 2));
    CHECK(P("-(u - 2)^3") == -(U - 2).pow(3));
    CHECK(P(" 2 * u *s ") == Rational(2) * U * S);
    for (const char* bad : {"", "s+", "(s", "s)", "x", "s^u", "1/0", "s^1001", "2 ^ -1", "u s", "(u+s)/2"}) {
        CAPTURE(bad);
        const ErrorKind k = kind_of([&] { parse_poly_expr(bad); });
        CHECK((k == ErrorKind::SyntaxError || k == ErrorKind::ZeroDenominator));
    }
    try {
        parse_poly_expr("s + * u");
    } catch (const Error& e) {
        REQUIRE(e.where().size() == 1);
        CHECK(e.where()[0] == 4);
    }
}

TEST_CASE("polynomial printing round-trips through the parser")
{
    const BiPoly x = Rational(-7, 3) * U.pow(3) * S + Rational(1, 2) * S * S - U + 5;
    CHECK(P(x.to_string().c_str()) == x);
}
