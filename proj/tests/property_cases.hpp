#ifndef HYPFAM_TESTS_PROPERTY_CASES_HPP
#define HYPFAM_TESTS_PROPERTY_CASES_HPP

#include "hypfam/birat.hpp"
#include "hypfam/error.hpp"
#include "hypfam/parse.hpp"
#include "hypfam/separate.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hypfam::props {

struct Outcome {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long span = 9)
    {
        return Rational(integer(-span, span), integer(1, 6));
    }

    Rational nonzero_rational()
    {
        Rational r;
        while (r.is_zero())
            r = rational();
        return r;
    }

    BiPoly poly(int max_deg, int max_terms)
    {
        BiPoly out;
        const int terms = static_cast<int>(integer(0, max_terms));
        for (int i = 0; i < terms; ++i) {
            const int du = static_cast<int>(integer(0, max_deg));
            const int ds = static_cast<int>(integer(0, max_deg - du));
            out += BiPoly::monomial(rational(), du, ds);
        }
        return out;
    }

    // Product of one to three low-degree factors, each nonconstant.
    BiPoly factor_product()
    {
        BiPoly out(nonzero_rational());
        const int n = static_cast<int>(integer(1, 3));
        for (int i = 0; i < n; ++i) {
            BiPoly f;
            while (f.total_degree() < 1)
                f = poly(2, 3);
            out = out * f;
        }
        return out;
    }

    UniPoly monic_uni(int max_deg)
    {
        const int d = static_cast<int>(integer(0, max_deg));
        std::vector<Rational> c;
        for (int i = 0; i < d; ++i)
            c.push_back(rational());
        c.push_back(Rational(1));
        return UniPoly(c);
    }

private:
    std::mt19937_64 rng_;
};

inline void record(Outcome& o, bool ok, const std::string& what)
{
    ++o.cases;
    if (!ok) {
        if (o.failures == 0)
            o.first_failure = what;
        ++o.failures;
    }
}

inline Outcome reduce_idempotence(Gen& g, int cases)
{
    Outcome o{"reduce idempotence"};
    for (int i = 0; i < cases; ++i) {
        const BiPoly common = g.integer(0, 1) ? g.factor_product() : BiPoly(g.nonzero_rational());
        const BiPoly N = g.poly(3, 4) * common;
        const BiPoly D = g.factor_product() * common;
        const std::string what = "(" + N.to_string() + ") / (" + D.to_string() + ")";
        try {
            const BiRat r = BiRat::reduce(N, D);
            const bool ok = BiRat::reduce(r.num(), r.den()) == r && r.num() * D == N * r.den() &&
                            r.den().total_degree() <= D.total_degree() &&
                            r.den().content() == Rational(1) && r.den().leading_term().second.sign() > 0;
            record(o, ok, what);
        } catch (const Error& e) {
            record(o, false, what + ": " + e.what());
        }
    }
    return o;
}

inline Outcome parser_round_trip(Gen& g, int cases)
{
    Outcome o{"parser round trip"};
    for (int i = 0; i < cases; ++i) {
        const BiPoly x = g.poly(6, 8);
        const std::string text = x.to_string();
        try {
            record(o, parse_poly_expr(text) == x, text);
        } catch (const Error& e) {
            record(o, false, text + ": " + e.what());
        }
    }
    return o;
}

inline Outcome separation_reconstruction(Gen& g, int cases)
{
    Outcome o{"separation reconstruction"};
    for (int i = 0; i < cases; ++i) {
        const SumDiffSplit in{g.nonzero_rational(), g.monic_uni(3), g.monic_uni(3)};
        const BiPoly x = assemble_sum_diff(in);
        try {
            const SumDiffSplit out = separate_sum_diff(x);
            record(o, assemble_sum_diff(out) == x && out.kappa == in.kappa && out.q == in.q && out.p == in.p,
                   x.to_string());
        } catch (const Error& e) {
            record(o, false, x.to_string() + ": " + e.what());
        }
    }
    return o;
}

inline std::vector<Outcome> run_exactalg(std::uint64_t seed, int cases)
{
    Gen g(seed);
    return {reduce_idempotence(g, cases), parser_round_trip(g, cases), separation_reconstruction(g, cases)};
}

} // namespace hypfam::props

#endif // HYPFAM_TESTS_PROPERTY_CASES_HPP
