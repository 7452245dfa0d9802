#include "hypfam/separate.hpp"

#include "hypfam/error.hpp"

#include <array>
#include <vector>

namespace hypfam {

namespace {

constexpr int kMaxProbes = 64;

// (1,0), (0,1), then pairs of consecutive primes (2,3), (5,7), (11,13), ...
std::vector<std::array<long, 2>> probe_points()
{
    std::vector<std::array<long, 2>> out = {{1, 0}, {0, 1}};
    std::vector<long> primes;
    for (long n = 2; static_cast<int>(out.size()) < kMaxProbes; ++n) {
        bool prime = true;
        for (long p : primes) {
            if (p * p > n)
                break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (!prime)
            continue;
        primes.push_back(n);
        if (primes.size() % 2 == 0)
            out.push_back({primes[primes.size() - 2], primes.back()});
    }
    return out;
}

} // namespace

SumDiffSplit separate_sum_diff(const BiPoly& x)
{
    if (x.is_zero())
        throw Error(ErrorKind::NotSeparable, "zero polynomial has no sum/difference split");
    // T(a, b) = x((a - b)/2, (a + b)/2), stored with a in the u slot and b in
    // the s slot.
    const Rational half(1, 2);
    const BiPoly a = BiPoly::u();
    const BiPoly b = BiPoly::s();
    const BiPoly t = x.substitute(half * (a - b), half * (a + b));

    for (const auto& [a0, b0] : probe_points()) {
        const Rational t00 = t.eval(a0, b0);
        if (t00.is_zero())
            continue;
        const UniPoly ta = t.eval_at(Var::S, b0); // T(a, b0)
        const UniPoly tb = t.eval_at(Var::U, a0); // T(a0, b)
        const BiPoly cross = BiPoly::from_uni(ta, Var::U) * BiPoly::from_uni(tb, Var::S);
        if (t * t00 != cross)
            throw Error(ErrorKind::NotSeparable,
                        "not of the form kappa*q(s+u)*p(s-u): " + x.to_string(), {a0, b0});
        SumDiffSplit out;
        out.q = ta.monic();
        out.p = tb.monic();
        out.kappa = t00 / (out.q.eval(Rational(a0)) * out.p.eval(Rational(b0)));
        return out;
    }
    throw Error(ErrorKind::ProbeFailure, "every probe point is a zero of " + x.to_string());
}

BiPoly assemble_sum_diff(const SumDiffSplit& split)
{
    const BiPoly plus = BiPoly::s() + BiPoly::u();
    const BiPoly minus = BiPoly::s() - BiPoly::u();
    return split.kappa * (compose(split.q, plus) * compose(split.p, minus));
}

} // namespace hypfam
