#include "hypfam/classify.hpp"

#include <set>

namespace hypfam {

namespace {

constexpr int kMaxSOnlyFactors = 4;

const UniPoly T{Rational(0), Rational(1)};

std::string factored(const UniPoly& p)
{
    UniPoly rest;
    const auto roots = p.rational_roots(&rest);
    std::string out;
    for (const auto& r : roots)
        out += "(t" + std::string(r.sign() > 0 ? " - " : " + ") + r.abs().to_string() + ")";
    if (rest.degree() >= 1)
        out += "(" + rest.to_string('t') + ")";
    if (out.empty())
        out = p.to_string('t');
    return out;
}

} // namespace

BiRat assemble_f(const Decomposition& d)
{
    const BiPoly U = BiPoly::u();
    const BiPoly S = BiPoly::s();
    const BiPoly num = d.kappa * (compose(d.q, S + U) * compose(d.p, S - U) * d.g.shift(Var::S, 1));
    const BiPoly den = BiPoly::from_uni(d.w, Var::S) * d.g;
    return BiRat::reduce(num, den);
}

ClassifyResult classify_jacobi_type(const BiPoly& N, const BiPoly& D)
{
    PartialDecomposition partial;
    partial.reduced = BiRat::reduce(N, D);
    const BiRat& f = partial.reduced;
    if (f.is_zero())
        throw ClassifyError(ErrorKind::NoMatch, "f is identically zero", partial);
    if (f.den().depends_on(Var::U))
        throw ClassifyError(ErrorKind::NotJacobiType,
                            "reduced denominator depends on u: " + f.den().to_string(), partial);

    const UniPoly den = f.den().to_uni(Var::S);
    const UniPoly w = den.monic();
    partial.w = w;
    const BiPoly numer = f.num() * den.lead().inverse();
    try {
        partial.split = separate_sum_diff(numer);
    } catch (const Error& e) {
        throw ClassifyError(ErrorKind::NotSeparable, "numerator " + numer.to_string() +
                                                         " is not kappa*q(s+u)*p(s-u)", partial);
    }
    const SumDiffSplit& sp = *partial.split;
    if (!sp.p.eval(Rational(0)).is_zero())
        throw ClassifyError(ErrorKind::MissingForcedFactor, "p(0) != 0 for p = " + factored(sp.p), partial);
    if (!w.eval(Rational(-1)).is_zero())
        throw ClassifyError(ErrorKind::MissingForcedFactor, "w(-1) != 0 for w = " + w.to_string('s'), partial);

    ClassifyResult out;
    out.decomposition = {sp.kappa, sp.p, sp.q, w, BiPoly(1)};
    // w = (s + 1) * rest
    const UniPoly w_rest = w.divmod(UniPoly::linear(1)).first;
    const UniPoly p_rest = sp.p.divmod(T).first;
    bool matched = false;
    if (sp.p == T) {
        if (w_rest.degree() == 1 && sp.q.degree() == 0) {
            out.spec = FamilySpec::laguerre(w_rest.coeff(0), sp.kappa);
            matched = true;
        } else if (w_rest.degree() == 1 && sp.q.degree() == 1) {
            out.spec = FamilySpec::jacobi(sp.q.coeff(0), w_rest.coeff(0), sp.kappa);
            matched = true;
        } else if (w_rest.degree() == 0 && sp.q.degree() == 1) {
            out.spec = FamilySpec::bessel(sp.q.coeff(0), sp.kappa);
            matched = true;
        }
    } else if (sp.p.degree() == 2 && sp.q.degree() == 2 && w.degree() == 2) {
        // p = t (t + 1 - c)
        const Rational c = Rational(1) - p_rest.coeff(0);
        const UniPoly one = UniPoly::linear(1);
        if (w_rest == UniPoly::linear(Rational(1, 2)) && sp.q == one * UniPoly::linear(c)) {
            out.spec = FamilySpec::e(c, sp.kappa);
            matched = true;
        } else if (w_rest == UniPoly::linear(Rational(3, 2)) &&
                   sp.q == UniPoly::linear(2) * UniPoly::linear(c + Rational(1))) {
            out.spec = FamilySpec::f(c, sp.kappa);
            matched = true;
        }
    }
    if (!matched)
        throw ClassifyError(ErrorKind::NoMatch,
                            "no Jacobi-type family has p = " + factored(sp.p) + ", q = " + factored(sp.q) +
                                ", w = " + w.to_string('s'),
                            partial);
    out.quasi_valid = is_quasi_valid(out.spec);
    out.orthogonal = is_orthogonal(out.spec);
    return out;
}

Decomposition decompose_rational_f(const BiRat& f)
{
    if (f.is_zero())
        throw Error(ErrorKind::NotRationalNormalForm, "f is identically zero");
    // den = lc * d_s(s) * d_u(u, s), d_s monic and d_u free of s-only factors.
    const auto [d_s, d_u] = content_wrt(f.den(), Var::U);
    UniPoly leftover;
    const auto roots = d_s.rational_roots(&leftover);
    std::vector<UniPoly> factors;
    for (const auto& r : roots)
        factors.push_back(UniPoly::linear(-r));
    if (leftover.degree() >= 1)
        factors.push_back(leftover);
    const int m = static_cast<int>(factors.size());
    if (m > kMaxSOnlyFactors)
        throw Error(ErrorKind::NotRationalNormalForm,
                    std::to_string(m) + " s-only denominator factors exceed the search bound of " +
                        std::to_string(kMaxSOnlyFactors));

    const BiPoly U = BiPoly::u();
    const BiPoly S = BiPoly::s();
    std::vector<Decomposition> found;
    std::set<std::string> seen;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        UniPoly in_g = UniPoly::constant(1);
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i))
                in_g = in_g * factors[static_cast<std::size_t>(i)];
        const BiPoly g = (d_u * BiPoly::from_uni(in_g, Var::S)).normalized();
        if (!seen.insert(g.to_string()).second)
            continue;
        const UniPoly w = d_s.divmod(in_g).first;
        // f * w * g / g(u, s+1) must be a polynomial kappa * q(s+u) * p(s-u).
        const BiRat x = f * BiRat(BiPoly::from_uni(w, Var::S)) * BiRat(g) / BiRat(g.shift(Var::S, 1));
        if (!x.den().is_constant())
            continue;
        const BiPoly xp = x.num() * x.den().leading_term().second.inverse();
        SumDiffSplit sp;
        try {
            sp = separate_sum_diff(xp);
        } catch (const Error&) {
            continue;
        }
        Decomposition d{sp.kappa, sp.p, sp.q, w, g};
        if (assemble_f(d) != f)
            continue;
        const BiPoly w_prev = BiPoly::from_uni(w, Var::S).shift(Var::S, -1);
        if (!gcd(g, w_prev).is_constant() || !gcd(g, compose(sp.q, S + U)).is_constant() ||
            !gcd(g, compose(sp.p, S - U)).is_constant())
            continue;
        found.push_back(std::move(d));
    }
    if (found.empty())
        throw Error(ErrorKind::NotRationalNormalForm, "no split of the denominator " + f.den().to_string() +
                                                          " gives kappa*q(s+u)*p(s-u)*g(u,s+1)/(w(s)*g)");
    if (found.size() > 1) {
        std::string gs;
        for (const auto& d : found)
            gs += (gs.empty() ? "" : ", ") + d.g.to_string();
        throw Error(ErrorKind::Ambiguous, "several normal forms fit, with g in {" + gs + "}");
    }
    return found.front();
}

} // namespace hypfam
