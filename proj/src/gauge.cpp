#include "hypfam/gauge.hpp"

#include "hypfam/error.hpp"

#include <algorithm>

namespace hypfam {

namespace {

const BiPoly U = BiPoly::u();
const BiPoly S = BiPoly::s();
const UniPoly Z{Rational(0), Rational(1)};

// x(u, u)
BiPoly diagonal(const BiPoly& x)
{
    return x.substitute(U, U);
}

BiPoly in_s(const UniPoly& p)
{
    return BiPoly::from_uni(p, Var::S);
}

BiPoly in_u(const UniPoly& p)
{
    return BiPoly::from_uni(p, Var::U);
}

std::string point(int n, int k)
{
    return "(" + std::to_string(n) + ", " + std::to_string(k) + ")";
}

Rational value_or_throw(const BiRat& x, int n, const char* what)
{
    try {
        return x.eval(Rational(n), Rational(0));
    } catch (const Error& e) {
        throw Error(ErrorKind::IdentityFailure, std::string(what) + " is singular at n = " + std::to_string(n), {n});
    }
}

Rational beta_at(const RationalFamily& fam, int n)
{
    if (auto it = fam.beta_overrides.find(n); it != fam.beta_overrides.end())
        return it->second;
    return value_or_throw(fam.beta, n, "beta");
}

PolySeq sequence_from_f(const BiRat& f, int N)
{
    PolySeq out;
    out.provenance = Provenance::RatioProduct;
    for (int n = 0; n <= N; ++n)
        out.polys.push_back(assemble(coeffs_from_f(f, n)));
    return out;
}

} // namespace

PolySeq apply_gauge(const BiPoly& g, const PolySeq& Q)
{
    PolySeq out;
    out.provenance = Provenance::Gauge;
    for (std::size_t idx = 0; idx < Q.polys.size(); ++idx) {
        const UniPoly& q = Q.polys[idx];
        const int n = q.degree();
        const Rational N(n);
        const Rational diag = g.eval(N, N);
        if (diag.is_zero())
            throw Error(ErrorKind::GaugeVanishesOnDiagonal, "g(" + std::to_string(n) + ", " + std::to_string(n) + ") = 0",
                        {n});
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            coeffs[static_cast<std::size_t>(k)] = g.eval(N, Rational(k)) * q.coeff(k) / (diag * q.lead());
        out.polys.emplace_back(std::move(coeffs));
    }
    return out;
}

BiRat gauge_f(const BiRat& f, const BiPoly& g)
{
    return f * BiRat::reduce(g.shift(Var::S, 1), g);
}

BiRat gauge_h(const BiRat& h, const BiPoly& g)
{
    const BiPoly d = diagonal(g);
    return h * BiRat::reduce(g.shift(Var::U, 1) * d, g * d.shift(Var::U, 1));
}

BiRat h_closed_form(const UniPoly& p, const UniPoly& q, const UniPoly& w, const Rational& kappa)
{
    const BiPoly num = in_u(w) * compose(q, U + S);
    const BiPoly den = kappa * (in_u(q.compose_affine(2, 0)) * in_u(q.compose_affine(2, 1)) *
                                compose(p, S - U - BiPoly(1)));
    const BiRat h = BiRat::reduce(num, den);
    const BiRat f = BiRat::reduce(kappa * (compose(q, S + U) * compose(p, S - U)), in_s(w));
    if (f.shift(Var::U, 1) / f != h.shift(Var::S, 1) / h)
        throw Error(ErrorKind::InvalidDecomposition, "f(u+1,s)/f(u,s) != h(u,s+1)/h(u,s) for h = " + h.to_string());
    return h;
}

RationalFamily jacobi_type_family(const FamilySpec& spec)
{
    const FamilyShape sh = family_shape(spec);
    const AlphaBeta ab = alpha_beta_closed(spec);
    RationalFamily fam;
    fam.label = spec.describe();
    fam.f = family_f(spec);
    fam.h = h_closed_form(sh.p, sh.q, sh.w, spec.rescale);
    fam.alpha = ab.alpha;
    fam.beta = ab.beta;
    fam.c0 = family_c0(spec);
    if (beta1_exception(spec))
        fam.beta_overrides[1] = family_recurrence_coeffs(spec, 2).beta[1];
    fam.is_jacobi_type = true;
    return fam;
}

UniPoly r_poly(int l)
{
    return pochhammer_poly(Rational(3, 2) - Rational(l), 2 * l - 1);
}

BuiltFamily family_r_l_lambda(int l, const Rational& lambda, int N)
{
    if (l < 1)
        throw Error(ErrorKind::InvalidParams, "l must be a positive integer");
    if (lambda == Rational(-1))
        throw Error(ErrorKind::InvalidParams, "lambda = -1 is degenerate; use the shifted-difference family");
    const FamilySpec base = FamilySpec::jacobi(1, Rational(l) + Rational(1, 2));
    const UniPoly r = r_poly(l);
    const BiPoly g = in_s(r) + lambda * in_u(r);
    const FamilyShape sh = family_shape(base);
    const AlphaBeta ab = alpha_beta_closed(base);

    BuiltFamily out;
    out.gauge = g.normalized();
    out.seq = apply_gauge(g, family_series_seq(base, N));
    RationalFamily& fam = out.family;
    fam.label = "r(l=" + std::to_string(l) + ", lambda=" + lambda.to_string() + ")";
    fam.f = gauge_f(family_f(base), g);
    fam.h = gauge_h(h_closed_form(sh.p, sh.q, sh.w), g);
    fam.alpha = ab.alpha;
    fam.beta = ab.beta;
    const Rational N1(1);
    fam.c0 = g.eval(N1, Rational(0)) * family_c0(base) / g.eval(N1, N1);
    fam.is_jacobi_type = !fam.f.den().depends_on(Var::U);
    return out;
}

BuiltFamily family_diffshift(int l, int N)
{
    if (l < 1)
        throw Error(ErrorKind::InvalidParams, "l must be a positive integer");
    const Rational b = Rational(l) + Rational(1, 2);
    const int top = std::max(N, 1) + 1;
    const PolySeq P = family_series_seq(FamilySpec::jacobi(1, b), top);
    const PolySeq Q = family_series_seq(FamilySpec::jacobi(1, Rational(3, 2) - Rational(l)), top);

    BuiltFamily out;
    out.seq.provenance = Provenance::DiffShift;
    for (int n = 0; n <= N; ++n) {
        const auto i = static_cast<std::size_t>(n) + 1;
        const UniPoly d = Q.polys[i] - P.polys[i];
        if (d.degree() != n)
            throw Error(ErrorKind::IdentityFailure, "Q_{n+1} - P_{n+1} does not have degree n", {n});
        out.seq.polys.push_back(d.monic());
    }

    const UniPoly r = r_poly(l);
    const BiPoly r_s = in_s(r);
    const BiPoly r_u1 = in_u(r.compose_affine(1, 1));
    const BiPoly num = (in_s(r.compose_affine(1, 1)) - r_u1) * (S - U - BiPoly(1)) * (S + U + BiPoly(2));
    const BiPoly den = (r_s - r_u1) * (S + BiPoly(1)) * (S + BiPoly(b));
    const BiRat f = BiRat::reduce(num, den);

    // The generated sequence must have exactly this ratio wherever f is finite.
    for (int n = 1; n <= N; ++n) {
        const UniPoly& R = out.seq.polys[static_cast<std::size_t>(n)];
        for (int k = 0; k < n; ++k) {
            Rational fk;
            try {
                fk = f.eval(Rational(n), Rational(k));
            } catch (const Error&) {
                continue;
            }
            if (R.coeff(k + 1) != fk * R.coeff(k))
                throw Error(ErrorKind::IdentityFailure, "coefficient ratio differs from f at " + point(n, k), {n, k});
        }
    }

    const FamilySpec j2 = FamilySpec::jacobi(2, b);
    const auto g = divide_exact(r_s - r_u1, S - U - BiPoly(1));
    if (!g)
        throw Error(ErrorKind::IdentityFailure, "r(s) - r(u+1) is not divisible by s - u - 1");
    if (gauge_f(family_f(j2), *g) != f)
        throw Error(ErrorKind::IdentityFailure, "f is not the gauge of jacobi(2, l + 1/2)");
    const FamilyShape sh = family_shape(j2);
    const AlphaBeta ab = alpha_beta_from_f(f);

    out.gauge = g->normalized();
    RationalFamily& fam = out.family;
    fam.label = "diffshift(l=" + std::to_string(l) + ")";
    fam.f = f;
    fam.h = gauge_h(h_closed_form(sh.p, sh.q, sh.w), *g);
    fam.alpha = ab.alpha;
    fam.beta = ab.beta;
    fam.c0 = (Q.polys[2] - P.polys[2]).monic().coeff(0);
    fam.is_jacobi_type = !f.den().depends_on(Var::U);
    return out;
}

BuiltFamily family_p_c_lambda(const Rational& c, const Rational& lambda, int N)
{
    if (is_nonpositive_integer(c))
        throw Error(ErrorKind::InvalidParams, "c must not be a non-positive integer, got " + c.to_string());
    const BiPoly one(1);
    const BiPoly g = (U + S + one) * (S - U - BiPoly(c)) - lambda * ((U + S + BiPoly(c + Rational(1))) * (S - U));
    const UniPoly p = Z * UniPoly::linear(-c);
    const UniPoly q = UniPoly::linear(1) * UniPoly::linear(c + Rational(1));
    const UniPoly w = UniPoly::linear(1) * UniPoly::linear(Rational(3, 2));

    const BiPoly gs1 = g.shift(Var::S, 1);
    const BiPoly gu1 = g.shift(Var::U, 1);
    const BiPoly gd = diagonal(g);
    const BiRat f = BiRat::reduce(compose(p, S - U) * compose(q, U + S) * gs1, in_s(w) * g);
    const BiRat h = BiRat::reduce(in_u(w) * compose(q, U + S) * gd * gu1,
                                  in_u(q.compose_affine(2, 0)) * in_u(q.compose_affine(2, 1)) *
                                      compose(p, S - U - one) * gd.shift(Var::U, 1) * g);
    const AlphaBeta ab = alpha_beta_closed(FamilySpec::f(c));

    BuiltFamily out;
    out.gauge = g.normalized();
    out.seq = sequence_from_f(f, N);
    RationalFamily& fam = out.family;
    fam.label = "p(c=" + c.to_string() + ", lambda=" + lambda.to_string() + ")";
    fam.f = f;
    fam.h = h;
    fam.alpha = ab.alpha;
    fam.beta = ab.beta;
    fam.c0 = coeffs_from_f(f, 1)[0];
    fam.is_jacobi_type = !f.den().depends_on(Var::U);
    return out;
}

bool VerifyReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

VerifyReport verify_rational_family(const RationalFamily& fam, int N)
{
    VerifyReport report;
    auto fail = [](CheckResult& c, const std::string& detail) {
        if (c.passed) {
            c.passed = false;
            c.detail = detail;
        }
    };

    if (fam.h) {
        const BiRat& h = *fam.h;
        CheckResult main{"f(u+1,s)/f = h(u,s+1)/h"};
        const BiRat lhs = fam.f.shift(Var::U, 1) / fam.f;
        const BiRat rhs = h.shift(Var::S, 1) / h;
        if (lhs != rhs)
            fail(main, "difference " + (lhs - rhs).to_string());
        report.checks.push_back(main);

        CheckResult tfh{"1/f(u,s-1) = h + alpha + beta/h(u-1,s)"};
        const BiRat l2 = fam.f.shift(Var::S, -1).inverse();
        const BiRat r2 = h + fam.alpha + fam.beta / h.shift(Var::U, -1);
        if (l2 != r2)
            fail(tfh, "difference " + (l2 - r2).to_string());
        report.checks.push_back(tfh);
    }

    CheckResult gen{"generation from f"};
    PolySeq seq;
    try {
        seq = sequence_from_f(fam.f, N);
    } catch (const Error& e) {
        fail(gen, e.what());
    }
    report.checks.push_back(gen);
    if (!gen.passed)
        return report;

    if (fam.h) {
        CheckResult hr{"c(n+1,k) = h(n,k) c(n,k)"};
        for (int n = 0; n < N; ++n) {
            const UniPoly& P = seq.polys[static_cast<std::size_t>(n)];
            const UniPoly& Pn = seq.polys[static_cast<std::size_t>(n) + 1];
            for (int k = 0; k <= n; ++k) {
                Rational hv;
                try {
                    hv = fam.h->eval(Rational(n), Rational(k));
                } catch (const Error&) {
                    hr.exceptional_points.emplace_back(n, k);
                    continue;
                }
                if (Pn.coeff(k) != hv * P.coeff(k))
                    fail(hr, "mismatch at " + point(n, k));
            }
        }
        report.checks.push_back(hr);
    }

    CheckResult p1{"P_1 = z + c0"};
    if (N >= 1 && seq.polys[1] != UniPoly{fam.c0, Rational(1)})
        fail(p1, "P_1 = " + seq.polys[1].to_string() + ", c0 = " + fam.c0.to_string());
    report.checks.push_back(p1);

    CheckResult three{"z P_n = P_{n+1} + alpha(n) P_n + beta(n) P_{n-1}"};
    for (int n = 1; n < N && three.passed; ++n) {
        const auto i = static_cast<std::size_t>(n);
        try {
            const UniPoly residual = Z * seq.polys[i] - seq.polys[i + 1] -
                                     value_or_throw(fam.alpha, n, "alpha") * seq.polys[i] -
                                     beta_at(fam, n) * seq.polys[i - 1];
            if (!residual.is_zero())
                fail(three, "n = " + std::to_string(n) + ", residual " + residual.to_string());
        } catch (const Error& e) {
            fail(three, e.what());
        }
    }
    report.checks.push_back(three);
    return report;
}

} // namespace hypfam
