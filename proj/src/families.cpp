#include "hypfam/families.hpp"

#include "hypfam/error.hpp"

#include <algorithm>

namespace hypfam {

namespace {

const BiPoly U = BiPoly::u();
const BiPoly S = BiPoly::s();

// k*u + c
BiPoly lin(long k, const Rational& c)
{
    return Rational(k) * U + BiPoly(c);
}

UniPoly t_plus(const Rational& c)
{
    return UniPoly::linear(c);
}

void require_defined(const FamilySpec& spec)
{
    if (auto why = definition_violation(spec))
        throw Error(ErrorKind::InvalidParams, *why);
}

std::string fmt(const Rational& r)
{
    return r.to_string();
}

} // namespace

std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::Jacobi: return "jacobi";
    case FamilyKind::Laguerre: return "laguerre";
    case FamilyKind::Bessel: return "bessel";
    case FamilyKind::E: return "e";
    case FamilyKind::F: return "f";
    }
    return "unknown";
}

std::optional<FamilyKind> family_kind_from_string(std::string_view name)
{
    for (auto k : {FamilyKind::Jacobi, FamilyKind::Laguerre, FamilyKind::Bessel, FamilyKind::E, FamilyKind::F})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::Series: return "series";
    case Provenance::RatioProduct: return "ratio";
    case Provenance::Recurrence: return "recurrence";
    case Provenance::Gauge: return "gauge";
    case Provenance::Lommel: return "lommel";
    case Provenance::DiffShift: return "diffshift";
    }
    return "unknown";
}

FamilySpec FamilySpec::jacobi(const Rational& a, const Rational& b, const Rational& rescale)
{
    return {FamilyKind::Jacobi, a, b, Rational(0), rescale};
}

FamilySpec FamilySpec::laguerre(const Rational& b, const Rational& rescale)
{
    return {FamilyKind::Laguerre, Rational(0), b, Rational(0), rescale};
}

FamilySpec FamilySpec::bessel(const Rational& a, const Rational& rescale)
{
    return {FamilyKind::Bessel, a, Rational(0), Rational(0), rescale};
}

FamilySpec FamilySpec::e(const Rational& c, const Rational& rescale)
{
    return {FamilyKind::E, Rational(0), Rational(0), c, rescale};
}

FamilySpec FamilySpec::f(const Rational& c, const Rational& rescale)
{
    return {FamilyKind::F, Rational(0), Rational(0), c, rescale};
}

FamilySpec FamilySpec::with_rescale(const Rational& r) const
{
    FamilySpec out = *this;
    out.rescale = r;
    return out;
}

std::string FamilySpec::describe() const
{
    std::string out(to_string(kind));
    out += "(";
    switch (kind) {
    case FamilyKind::Jacobi: out += "a=" + fmt(a) + ", b=" + fmt(b); break;
    case FamilyKind::Laguerre: out += "b=" + fmt(b); break;
    case FamilyKind::Bessel: out += "a=" + fmt(a); break;
    case FamilyKind::E:
    case FamilyKind::F: out += "c=" + fmt(c); break;
    }
    if (!rescale.is_one())
        out += ", rescale=" + fmt(rescale);
    return out + ")";
}

std::optional<std::string> definition_violation(const FamilySpec& spec)
{
    if (spec.rescale.is_zero())
        return "rescale must be nonzero";
    switch (spec.kind) {
    case FamilyKind::Jacobi:
        if (is_negative_integer(spec.a))
            return "jacobi requires a not a negative integer (a in Z<0 is excluded)";
        if (is_nonpositive_integer(spec.b))
            return "jacobi requires b not a non-positive integer (b in Z<=0 is excluded)";
        return std::nullopt;
    case FamilyKind::Laguerre:
        if (is_nonpositive_integer(spec.b))
            return "laguerre requires b not a non-positive integer (b in Z<=0 is excluded)";
        return std::nullopt;
    case FamilyKind::Bessel:
        if (is_negative_integer(spec.a))
            return "bessel requires a not a negative integer (a in Z<0 is excluded)";
        return std::nullopt;
    case FamilyKind::E:
        if (is_nonpositive_integer(spec.c))
            return "e requires c not a non-positive integer (c in Z<=0 is excluded)";
        return std::nullopt;
    case FamilyKind::F:
        if (is_nonpositive_integer(spec.c))
            return "f requires c not a non-positive integer (c in Z<=0 is excluded)";
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<std::string> quasi_violation(const FamilySpec& spec)
{
    if (auto why = definition_violation(spec))
        return why;
    if (spec.kind == FamilyKind::Jacobi && is_negative_integer(spec.a - spec.b))
        return "jacobi requires a - b not a negative integer (a - b in Z<0 is excluded)";
    return std::nullopt;
}

bool is_quasi_valid(const FamilySpec& spec)
{
    return !quasi_violation(spec).has_value();
}

bool is_orthogonal(const FamilySpec& spec)
{
    if (!is_quasi_valid(spec))
        return false;
    const Rational zero(0);
    switch (spec.kind) {
    case FamilyKind::Jacobi: return spec.a > spec.b - Rational(1) && spec.b > zero;
    case FamilyKind::Laguerre: return spec.b > zero;
    case FamilyKind::Bessel: return false;
    case FamilyKind::E: return spec.c > zero;
    case FamilyKind::F: return spec.c > Rational(-1) && !spec.c.is_zero();
    }
    return false;
}

HyperParams hyper_params(const FamilySpec& spec, int n)
{
    const Rational N(n);
    const Rational& a = spec.a;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    switch (spec.kind) {
    case FamilyKind::Jacobi: return {{-N, N + a}, {b}};
    case FamilyKind::Laguerre: return {{-N}, {b}};
    case FamilyKind::Bessel: return {{-N, N + a}, {}};
    case FamilyKind::E: return {{-N, Rational(1) - N - c, N + Rational(1), N + c}, {Rational(1, 2)}};
    case FamilyKind::F: return {{-N, Rational(1) - N - c, N + Rational(2), N + c + Rational(1)}, {Rational(3, 2)}};
    }
    return {};
}

UniPoly truncated_series(const HyperParams& hp, int n)
{
    std::vector<Rational> out{Rational(1)};
    Rational term(1);
    for (int k = 1; k <= n; ++k) {
        Rational num(1);
        Rational den(k);
        for (const auto& g : hp.gammas)
            num *= g + Rational(k - 1);
        for (const auto& d : hp.deltas)
            den *= d + Rational(k - 1);
        if (den.is_zero())
            throw Error(ErrorKind::InvalidParams, "lower parameter hits a non-positive integer", {k});
        term *= num / den;
        out.push_back(term);
    }
    return UniPoly(std::move(out));
}

UniPoly family_poly_series(const FamilySpec& spec, int n, Normalization norm)
{
    require_defined(spec);
    const UniPoly raw = truncated_series(hyper_params(spec, n), n);
    if (raw.degree() != n)
        throw Error(ErrorKind::LeadingZero, "series leading coefficient vanishes for " + spec.describe(), {n});
    const Rational lead = raw.lead();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        coeffs[static_cast<std::size_t>(k)] = raw.coeff(k) / lead * spec.rescale.pow(k - n);
    UniPoly monic(std::move(coeffs));
    if (norm == Normalization::Hyper)
        return monic * monic.coeff(0).inverse();
    return monic;
}

FamilyShape family_shape(const FamilySpec& spec)
{
    const UniPoly t{Rational(0), Rational(1)};
    const UniPoly one = UniPoly::constant(1);
    const Rational& a = spec.a;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    switch (spec.kind) {
    case FamilyKind::Jacobi: return {t, t_plus(a), t_plus(1) * t_plus(b)};
    case FamilyKind::Laguerre: return {t, one, t_plus(1) * t_plus(b)};
    case FamilyKind::Bessel: return {t, t_plus(a), t_plus(1)};
    case FamilyKind::E:
        return {t * t_plus(Rational(1) - c), t_plus(1) * t_plus(c), t_plus(1) * t_plus(Rational(1, 2))};
    case FamilyKind::F:
        return {t * t_plus(Rational(1) - c), t_plus(2) * t_plus(c + Rational(1)), t_plus(1) * t_plus(Rational(3, 2))};
    }
    return {};
}

BiRat family_f(const FamilySpec& spec)
{
    require_defined(spec);
    const FamilyShape sh = family_shape(spec);
    const BiPoly num = spec.rescale * (compose(sh.q, S + U) * compose(sh.p, S - U));
    return BiRat::reduce(num, BiPoly::from_uni(sh.w, Var::S));
}

std::vector<Rational> coeffs_from_f(const BiRat& f, int n)
{
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    out[static_cast<std::size_t>(n)] = Rational(1);
    for (int i = n - 1; i >= 0; --i) {
        Rational r;
        try {
            r = f.eval(Rational(n), Rational(i));
        } catch (const Error& e) {
            throw Error(ErrorKind::RatioPole, "f(" + std::to_string(n) + ", " + std::to_string(i) + ") is not finite",
                        {n, i});
        }
        if (r.is_zero())
            throw Error(ErrorKind::RatioVanishes, "f(" + std::to_string(n) + ", " + std::to_string(i) + ") = 0",
                        {n, i});
        out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i) + 1] / r;
    }
    return out;
}

UniPoly assemble(const std::vector<Rational>& coeffs)
{
    return UniPoly(coeffs);
}

AlphaBeta alpha_beta_from_f(const BiRat& f)
{
    // A(u) = f(u, u-1)^-1, B(u) = f(u, u-2)^-1 f(u, u-1)^-1
    const BiRat A = f.substitute(U, U - BiPoly(1)).inverse();
    const BiRat B = f.substitute(U, U - BiPoly(2)).inverse() * A;
    const BiRat A1 = A.shift(Var::U, 1);
    const BiRat B1 = B.shift(Var::U, 1);
    AlphaBeta out;
    out.alpha = A - A1;
    out.beta = B - B1 - A * A + A * A1;
    return out;
}

AlphaBeta alpha_beta_closed(const FamilySpec& spec)
{
    require_defined(spec);
    const Rational& a = spec.a;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    const Rational one(1);
    BiPoly an, ad, bn, bd;
    switch (spec.kind) {
    case FamilyKind::Jacobi:
        an = Rational(2) * U * U + Rational(2) * a * U + BiPoly(b * (a - one));
        ad = lin(2, a - one) * lin(2, a + one);
        bn = U * lin(1, a - one) * lin(1, b - one) * lin(1, a - b);
        bd = lin(2, a) * lin(2, a - one).pow(2) * lin(2, a - Rational(2));
        break;
    case FamilyKind::Laguerre:
        an = lin(2, b);
        ad = BiPoly(1);
        bn = U * lin(1, b - one);
        bd = BiPoly(1);
        break;
    case FamilyKind::Bessel:
        an = BiPoly(a - one);
        ad = lin(2, a - one) * lin(2, a + one);
        bn = -(U * lin(1, a - one));
        bd = lin(2, a) * lin(2, a - one).pow(2) * lin(2, a - Rational(2));
        break;
    case FamilyKind::E:
        an = BiPoly(-1);
        ad = Rational(2) * lin(2, c - one) * lin(2, c + one);
        bn = BiPoly(1);
        bd = Rational(16) * lin(2, c) * lin(2, c - one).pow(2) * lin(2, c - Rational(2));
        break;
    case FamilyKind::F:
        an = BiPoly(-1);
        ad = Rational(2) * lin(2, c) * lin(2, c + Rational(2));
        bn = BiPoly(1);
        bd = Rational(16) * lin(2, c + one) * lin(2, c).pow(2) * lin(2, c - one);
        break;
    }
    const Rational& r = spec.rescale;
    AlphaBeta out;
    out.alpha = BiRat::reduce(an, ad * r);
    out.beta = BiRat::reduce(bn, bd * (r * r));

    const AlphaBeta derived = alpha_beta_from_f(family_f(spec));
    if (derived.alpha != out.alpha)
        throw Error(ErrorKind::IdentityFailure, "tabulated alpha " + out.alpha.to_string() +
                                                    " differs from the value implied by f: " +
                                                    derived.alpha.to_string());
    if (derived.beta != out.beta)
        throw Error(ErrorKind::IdentityFailure, "tabulated beta " + out.beta.to_string() +
                                                    " differs from the value implied by f: " +
                                                    derived.beta.to_string());
    return out;
}

Rational family_c0(const FamilySpec& spec)
{
    require_defined(spec);
    const Rational& a = spec.a;
    const Rational& b = spec.b;
    const Rational& c = spec.c;
    const Rational one(1);
    Rational c0;
    switch (spec.kind) {
    case FamilyKind::Jacobi: c0 = -b / (a + one); break;
    case FamilyKind::Laguerre: c0 = -b; break;
    case FamilyKind::Bessel: c0 = -one / (a + one); break;
    case FamilyKind::E: c0 = one / (Rational(4) * c * (c + one)); break;
    case FamilyKind::F: c0 = one / (Rational(2) * c * (c + Rational(2))); break;
    }
    return c0 / spec.rescale;
}

bool beta1_exception(const FamilySpec& spec)
{
    return (spec.kind == FamilyKind::Jacobi || spec.kind == FamilyKind::Bessel) && spec.a.is_zero();
}

RecurrenceCoeffs family_recurrence_coeffs(const FamilySpec& spec, int N)
{
    const AlphaBeta ab = alpha_beta_closed(spec);
    RecurrenceCoeffs out;
    out.c0 = family_c0(spec);
    out.beta1_exception = beta1_exception(spec);
    out.alpha.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    out.beta.assign(static_cast<std::size_t>(N) + 1, Rational(0));
    out.alpha[0] = -out.c0;
    for (int n = 1; n <= N; ++n) {
        out.alpha[static_cast<std::size_t>(n)] = ab.alpha.eval(Rational(n), Rational(0));
        if (n == 1 && out.beta1_exception) {
            // The table value at n = 1 is wrong here; use the constant term of P_2.
            const auto c2 = coeffs_from_f(family_f(spec), 2);
            out.beta[1] = -c2[0] - out.alpha[1] * out.c0;
            continue;
        }
        out.beta[static_cast<std::size_t>(n)] = ab.beta.eval(Rational(n), Rational(0));
    }
    return out;
}

PolySeq recurrence_generate(const std::function<Rational(int)>& alpha, const std::function<Rational(int)>& beta,
                            const Rational& c0, int N, bool require_nonzero_beta)
{
    PolySeq out;
    out.provenance = Provenance::Recurrence;
    if (N < 0)
        return out;
    const UniPoly z{Rational(0), Rational(1)};
    out.polys.push_back(UniPoly::constant(1));
    if (N >= 1)
        out.polys.push_back(UniPoly{c0, Rational(1)});
    for (int n = 1; n < N; ++n) {
        const Rational bn = beta(n);
        if (require_nonzero_beta && bn.is_zero())
            throw Error(ErrorKind::BetaVanishes, "beta(" + std::to_string(n) + ") = 0", {n});
        const UniPoly& P = out.polys[static_cast<std::size_t>(n)];
        const UniPoly& Pprev = out.polys[static_cast<std::size_t>(n) - 1];
        out.polys.push_back(z * P - alpha(n) * P - bn * Pprev);
    }
    return out;
}

PolySeq family_series_seq(const FamilySpec& spec, int N)
{
    PolySeq out;
    out.provenance = Provenance::Series;
    for (int n = 0; n <= N; ++n)
        out.polys.push_back(family_poly_series(spec, n));
    return out;
}

PolySeq family_ratio_seq(const FamilySpec& spec, int N)
{
    const BiRat f = family_f(spec);
    PolySeq out;
    out.provenance = Provenance::RatioProduct;
    for (int n = 0; n <= N; ++n)
        out.polys.push_back(assemble(coeffs_from_f(f, n)));
    return out;
}

PolySeq family_recurrence_seq(const FamilySpec& spec, int N)
{
    const RecurrenceCoeffs rc = family_recurrence_coeffs(spec, std::max(N, 1));
    return recurrence_generate([&](int n) { return rc.alpha[static_cast<std::size_t>(n)]; },
                               [&](int n) { return rc.beta[static_cast<std::size_t>(n)]; }, rc.c0, N,
                               is_quasi_valid(spec));
}

std::pair<Rational, Rational> actual_recurrence_coeffs(const UniPoly& Pprev, const UniPoly& P, const UniPoly& Pnext)
{
    const int n = P.degree();
    if (n < 0 || Pnext.degree() != n + 1 || Pprev.degree() != n - 1 || !P.lead().is_one() ||
        !Pnext.lead().is_one() || (n >= 1 && !Pprev.lead().is_one()))
        throw Error(ErrorKind::InvalidParams, "expected monic polynomials of degrees n-1, n, n+1");
    const UniPoly z{Rational(0), Rational(1)};
    UniPoly r = z * P - Pnext;
    const Rational alpha = r.coeff(n);
    r -= alpha * P;
    const Rational beta = n >= 1 ? r.coeff(n - 1) : Rational(0);
    if (n >= 1)
        r -= beta * Pprev;
    if (!r.is_zero())
        throw Error(ErrorKind::NotThreeTerm, "residual " + r.to_string() + " is not zero", {n});
    return {alpha, beta};
}

std::vector<Rational> moment_functional(const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                                        const Rational& c0, int K)
{
    const int L = K / 2;
    if (K < 0 || static_cast<int>(alpha.size()) < L + 1 || static_cast<int>(beta.size()) < L + 1)
        throw Error(ErrorKind::InsufficientMoments, "recurrence coefficient lists too short for K = " +
                                                        std::to_string(K));
    auto a = [&](int i) { return i == 0 ? -c0 : alpha[static_cast<std::size_t>(i)]; };
    // v[i] is the P_i-coordinate of z^k; only i <= min(k, K - k) can still reach mu.
    std::vector<Rational> v{Rational(1)};
    std::vector<Rational> mu;
    mu.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        mu.push_back(v[0]);
        const int width = std::min(k + 1, K - k - 1);
        if (width < 0)
            break;
        std::vector<Rational> next(static_cast<std::size_t>(width) + 1);
        for (int i = 0; i <= width; ++i) {
            Rational x;
            if (i >= 1 && i - 1 < static_cast<int>(v.size()))
                x += v[static_cast<std::size_t>(i) - 1];
            if (i < static_cast<int>(v.size()))
                x += a(i) * v[static_cast<std::size_t>(i)];
            if (i + 1 < static_cast<int>(v.size()))
                x += beta[static_cast<std::size_t>(i) + 1] * v[static_cast<std::size_t>(i) + 1];
            next[static_cast<std::size_t>(i)] = x;
        }
        v = std::move(next);
    }
    return mu;
}

Matrix gram_matrix(const PolySeq& P, const std::vector<Rational>& mu)
{
    const std::size_t m = P.polys.size();
    int maxdeg = 0;
    for (const auto& p : P.polys)
        maxdeg = std::max(maxdeg, p.degree());
    if (static_cast<int>(mu.size()) < 2 * maxdeg + 1)
        throw Error(ErrorKind::InsufficientMoments, "need moments up to " + std::to_string(2 * maxdeg));
    Matrix Q(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Rational acc;
            const auto& pi = P.polys[i].coeffs();
            const auto& pj = P.polys[j].coeffs();
            for (std::size_t x = 0; x < pi.size(); ++x)
                for (std::size_t y = 0; y < pj.size(); ++y)
                    acc += pi[x] * pj[y] * mu[x + y];
            Q[i][j] = acc;
            Q[j][i] = acc;
        }
    return Q;
}

UniPoly pfq_ode_residual(const std::vector<Rational>& gammas, const std::vector<Rational>& deltas, const UniPoly& P)
{
    std::vector<Rational> out(static_cast<std::size_t>(std::max(P.degree() + 2, 0)));
    for (int k = 0; k <= P.degree() + 1; ++k) {
        Rational lower(k);
        for (const auto& d : deltas)
            lower *= Rational(k) + d - Rational(1);
        Rational upper(1);
        for (const auto& g : gammas)
            upper *= Rational(k - 1) + g;
        out[static_cast<std::size_t>(k)] = lower * P.coeff(k) - upper * P.coeff(k - 1);
    }
    return UniPoly(std::move(out));
}

} // namespace hypfam
