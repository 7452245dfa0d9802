#include "hypfam/cli.hpp"

#include "hypfam/bessel.hpp"
#include "hypfam/classify.hpp"
#include "hypfam/error.hpp"
#include "hypfam/families.hpp"
#include "hypfam/gauge.hpp"
#include "hypfam/lommel.hpp"
#include "hypfam/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace hypfam {

namespace {

using nlohmann::json;

constexpr int kMaxDegree = 400;
constexpr int kMaxZeros = 1000000;

// Thrown for user errors found after flag parsing.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json poly_record(int n, const UniPoly& P)
{
    json coeffs = json::array();
    for (int k = 0; k <= std::max(P.degree(), 0); ++k)
        coeffs.push_back(P.coeff(k).to_string());
    return {{"n", n}, {"coeffs", coeffs}};
}

json seq_records(const std::vector<UniPoly>& polys)
{
    json out = json::array();
    for (std::size_t n = 0; n < polys.size(); ++n)
        out.push_back(poly_record(static_cast<int>(n), polys[n]));
    return out;
}

json check_record(const std::string& name, bool passed, const std::string& detail = {})
{
    json out{{"name", name}, {"passed", passed}};
    if (!detail.empty())
        out["detail"] = detail;
    return out;
}

json check_record(const CheckResult& c)
{
    json out = check_record(c.name, c.passed, c.detail);
    if (!c.exceptional_points.empty()) {
        json pts = json::array();
        for (const auto& [n, k] : c.exceptional_points)
            pts.push_back({n, k});
        out["exceptional_points"] = pts;
    }
    return out;
}

Rational parse_rational_flag(const std::string& name, const std::string& text)
{
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw BadInput("--" + name + ": " + e.what());
    }
}

void check_range(const std::string& name, int value, int lo, int hi)
{
    if (value < lo || value > hi)
        throw BadInput("--" + name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                       std::to_string(value));
}

struct FamilyFlags {
    std::string family;
    std::optional<std::string> a;
    std::optional<std::string> b;
    std::optional<std::string> c;
    std::string rescale = "1";
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f, bool required)
{
    auto* opt = cmd->add_option("--family", f.family, "jacobi, laguerre, bessel, e or f");
    if (required)
        opt->required();
    cmd->add_option("--a", f.a, "parameter a as p/q");
    cmd->add_option("--b", f.b, "parameter b as p/q");
    cmd->add_option("--c", f.c, "parameter c as p/q");
}

FamilySpec spec_from_flags(const FamilyFlags& f)
{
    const auto kind = family_kind_from_string(f.family);
    if (!kind)
        throw BadInput("unknown family '" + f.family + "'");
    const bool want_a = *kind == FamilyKind::Jacobi || *kind == FamilyKind::Bessel;
    const bool want_b = *kind == FamilyKind::Jacobi || *kind == FamilyKind::Laguerre;
    const bool want_c = *kind == FamilyKind::E || *kind == FamilyKind::F;
    auto take = [&](const char* name, bool wanted, const std::optional<std::string>& v) {
        if (wanted && !v)
            throw BadInput(f.family + " needs --" + name);
        if (!wanted && v)
            throw BadInput(f.family + " takes no --" + name);
        return v ? parse_rational_flag(name, *v) : Rational(0);
    };
    FamilySpec spec;
    spec.kind = *kind;
    spec.a = take("a", want_a, f.a);
    spec.b = take("b", want_b, f.b);
    spec.c = take("c", want_c, f.c);
    spec.rescale = parse_rational_flag("rescale", f.rescale);
    if (auto why = definition_violation(spec))
        throw BadInput(*why);
    return spec;
}

json spec_json(const FamilySpec& spec)
{
    json params = json::object();
    switch (spec.kind) {
    case FamilyKind::Jacobi:
        params["a"] = spec.a.to_string();
        params["b"] = spec.b.to_string();
        break;
    case FamilyKind::Laguerre: params["b"] = spec.b.to_string(); break;
    case FamilyKind::Bessel: params["a"] = spec.a.to_string(); break;
    case FamilyKind::E:
    case FamilyKind::F: params["c"] = spec.c.to_string(); break;
    }
    return {{"family", std::string(to_string(spec.kind))}, {"params", params}, {"rescale", spec.rescale.to_string()}};
}

std::vector<UniPoly> normalized(std::vector<UniPoly> polys, Normalization norm)
{
    if (norm == Normalization::Hyper)
        for (auto& P : polys)
            P = P * P.coeff(0).inverse();
    return polys;
}

// ---------------------------------------------------------------- gen

struct GenFlags {
    FamilyFlags fam;
    int n = 0;
    std::string method = "series";
    std::string format = "json";
    std::string normalization = "monic";
};

int cmd_gen(const GenFlags& g, std::ostream& out)
{
    const FamilySpec spec = spec_from_flags(g.fam);
    check_range("n", g.n, 0, kMaxDegree);
    Normalization norm;
    if (g.normalization == "monic")
        norm = Normalization::Monic;
    else if (g.normalization == "hyper")
        norm = Normalization::Hyper;
    else
        throw BadInput("--normalization must be monic or hyper");
    if (g.format != "json" && g.format != "csv")
        throw BadInput("--format must be json or csv");

    std::vector<UniPoly> primary;
    json results = spec_json(spec);
    results["method"] = g.method;
    results["normalization"] = g.normalization;
    if (g.method == "series") {
        primary = family_series_seq(spec, g.n).polys;
    } else if (g.method == "ratio") {
        primary = family_ratio_seq(spec, g.n).polys;
    } else if (g.method == "recurrence") {
        primary = family_recurrence_seq(spec, g.n).polys;
    } else if (g.method == "all") {
        const auto s = family_series_seq(spec, g.n).polys;
        const auto r = family_ratio_seq(spec, g.n).polys;
        const auto t = family_recurrence_seq(spec, g.n).polys;
        json agreement = json::array();
        for (int n = 0; n <= g.n; ++n) {
            const auto i = static_cast<std::size_t>(n);
            agreement.push_back({{"n", n}, {"agreement", s[i] == r[i] && r[i] == t[i]}});
        }
        results["agreement"] = agreement;
        results["methods"] = {{"series", seq_records(normalized(s, norm))},
                              {"ratio", seq_records(normalized(r, norm))},
                              {"recurrence", seq_records(normalized(t, norm))}};
        primary = s;
    } else {
        throw BadInput("--method must be series, ratio, recurrence or all");
    }
    primary = normalized(std::move(primary), norm);

    if (g.format == "csv") {
        out << "family,n,k,value\n";
        const std::string label = spec.describe();
        for (std::size_t n = 0; n < primary.size(); ++n)
            for (int k = 0; k <= static_cast<int>(n); ++k)
                out << '"' << label << "\"," << n << ',' << k << ',' << primary[n].coeff(k).to_string() << '\n';
        return kExitOk;
    }
    results["polynomials"] = seq_records(primary);
    out << json{{"schema_version", "1"}, {"command", "gen"}, {"results", results}}.dump(2) << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- verify

json verify_family(const FamilySpec& spec, int N)
{
    json checks = json::array();
    const FamilySpec unscaled = spec.with_rescale(1);

    // Generate one degree past N so the recurrence is known through n = N.
    const int top = N + 1;
    const auto s = family_series_seq(spec, top).polys;
    const auto r = family_ratio_seq(spec, top).polys;
    const auto t = family_recurrence_seq(spec, top).polys;
    std::string first_diff;
    for (int n = 0; n <= N && first_diff.empty(); ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (!(s[i] == r[i] && r[i] == t[i]))
            first_diff = "generators disagree at n = " + std::to_string(n);
    }
    checks.push_back(check_record("triple_agreement", first_diff.empty(), first_diff));

    std::vector<Rational> alpha(static_cast<std::size_t>(top));
    std::vector<Rational> beta(static_cast<std::size_t>(top));
    for (int n = 1; n < top; ++n) {
        const auto i = static_cast<std::size_t>(n);
        std::tie(alpha[i], beta[i]) = actual_recurrence_coeffs(s[i - 1], s[i], s[i + 1]);
    }

    // Favard: the functional from the actual recurrence has a diagonal Gram
    // matrix with Q_ii = prod beta_j.
    {
        const Rational c0 = s[1].coeff(0);
        const auto mu = moment_functional(alpha, beta, c0, 2 * N);
        PolySeq P;
        P.polys.assign(s.begin(), s.begin() + N + 1);
        const Matrix Q = gram_matrix(P, mu);
        std::string detail;
        Rational prod(1);
        const bool orth = is_orthogonal(spec);
        for (int i = 0; i <= N && detail.empty(); ++i) {
            if (i >= 1)
                prod *= beta[static_cast<std::size_t>(i)];
            for (int j = 0; j <= N && detail.empty(); ++j) {
                const Rational& q = Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const std::string at = "Q(" + std::to_string(i) + "," + std::to_string(j) + ") = " + q.to_string();
                if (i != j && !q.is_zero())
                    detail = at;
                else if (i == j && q != prod)
                    detail = at + " differs from the beta product " + prod.to_string();
                else if (i == j && q.is_zero())
                    detail = at + ": the functional is degenerate";
                else if (i == j && orth && q.sign() <= 0)
                    detail = at + " is not positive";
            }
        }
        checks.push_back(check_record("gram_diagonal", detail.empty(), detail));
    }

    {
        const AlphaBeta closed = alpha_beta_closed(spec);
        const bool exception = beta1_exception(spec);
        std::string detail;
        for (int n = 1; n < top && detail.empty(); ++n) {
            const auto i = static_cast<std::size_t>(n);
            const Rational ca = closed.alpha.eval(Rational(n), Rational(0));
            const Rational cb = closed.beta.eval(Rational(n), Rational(0));
            if (ca != alpha[i])
                detail = "alpha(" + std::to_string(n) + "): closed " + ca.to_string() + ", actual " + alpha[i].to_string();
            else if (cb != beta[i] && !(n == 1 && exception))
                detail = "beta(" + std::to_string(n) + "): closed " + cb.to_string() + ", actual " + beta[i].to_string();
        }
        checks.push_back(check_record("alpha_beta_closed_form", detail.empty(), detail));
    }

    {
        std::string detail;
        for (int n = 0; n <= N && detail.empty(); ++n) {
            const HyperParams hp = hyper_params(unscaled, n);
            const UniPoly res = pfq_ode_residual(hp.gammas, hp.deltas, family_poly_series(unscaled, n));
            if (!res.is_zero())
                detail = "nonzero residual at n = " + std::to_string(n);
        }
        checks.push_back(check_record("ode_residual", detail.empty(), detail));
    }

    const VerifyReport rep = verify_rational_family(jacobi_type_family(spec), N);
    for (const auto& c : rep.checks)
        checks.push_back(check_record(c));

    json results = spec_json(spec);
    results["beta1_exception"] = beta1_exception(spec);
    results["quasi_valid"] = is_quasi_valid(spec);
    results["orthogonal"] = is_orthogonal(spec);
    results["checks"] = checks;
    return results;
}

json verify_pcl(const Rational& c, const Rational& lambda, int N)
{
    const BuiltFamily built = family_p_c_lambda(c, lambda, N);
    json checks = json::array();
    for (const auto& r : verify_rational_family(built.family, N).checks)
        checks.push_back(check_record(r));
    const auto at0 = family_p_c_lambda(c, 0, N).seq.polys;
    checks.push_back(check_record("lambda_0_is_f", at0 == family_series_seq(FamilySpec::f(c), N).polys));
    const Rational c1 = c + Rational(1);
    if (definition_violation(FamilySpec::e(c1))) {
        checks.push_back(check_record("lambda_1_is_e", false, "e(c + 1) is undefined"));
    } else {
        const auto at1 = family_p_c_lambda(c, 1, N).seq.polys;
        checks.push_back(check_record("lambda_1_is_e", at1 == family_series_seq(FamilySpec::e(c1), N).polys));
    }
    return {{"family", built.family.label},
            {"gauge", built.gauge ? built.gauge->to_string() : ""},
            {"f", built.family.f.to_string()},
            {"polynomials", seq_records(built.seq.polys)},
            {"checks", checks}};
}

json verify_rl(int l, const Rational& lambda, int N)
{
    const BuiltFamily built = family_r_l_lambda(l, lambda, N);
    json checks = json::array();
    for (const auto& r : verify_rational_family(built.family, N).checks)
        checks.push_back(check_record(r));
    if (l == 1) {
        // R^{1,lambda}_n = 3F2(-n, n+1, lambda n + (lambda+3)/2; 3/2, lambda n + (lambda+1)/2), made monic.
        std::string detail;
        for (int n = 0; n <= N && detail.empty(); ++n) {
            const Rational ln = lambda * Rational(n);
            const HyperParams hp{{Rational(-n), Rational(n + 1), ln + (lambda + Rational(3)) / Rational(2)},
                                 {Rational(3, 2), ln + (lambda + Rational(1)) / Rational(2)}};
            UniPoly series;
            try {
                series = truncated_series(hp, n);
            } catch (const Error& e) {
                detail = std::string("n = ") + std::to_string(n) + ": " + e.what();
                break;
            }
            if (series.degree() != n || series.monic() != built.seq.polys[static_cast<std::size_t>(n)])
                detail = "differs at n = " + std::to_string(n);
        }
        checks.push_back(check_record("hypergeometric_form", detail.empty(), detail));
    }
    const BuiltFamily ds = family_diffshift(l, N);
    for (auto r : verify_rational_family(ds.family, N).checks) {
        r.name = "diffshift: " + r.name;
        checks.push_back(check_record(r));
    }
    json out{{"family", built.family.label},
             {"gauge", built.gauge ? built.gauge->to_string() : ""},
             {"f", built.family.f.to_string()},
             {"polynomials", seq_records(built.seq.polys)},
             {"diffshift", {{"family", ds.family.label}, {"f", ds.family.f.to_string()}, {"polynomials", seq_records(ds.seq.polys)}}}};
    if (ds.family.is_jacobi_type) {
        const ClassifyResult cr = classify_jacobi_type(ds.family.f.num(), ds.family.f.den());
        out["diffshift"]["classification"] = spec_json(cr.spec);
        const FamilySpec expect = FamilySpec::jacobi(2, Rational(2 * l + 1, 2));
        checks.push_back(check_record("diffshift: classifies as " + expect.describe(), cr.spec == expect,
                                      cr.spec == expect ? "" : "got " + cr.spec.describe()));
    }
    out["checks"] = checks;
    return out;
}

json verify_lommel(const Rational& c, int N)
{
    json checks = json::array();
    const auto rec = lommel_rec(c, 2 * N + 1);
    std::string detail;
    for (int n = 0; n <= 2 * N + 1 && detail.empty(); ++n)
        if (rec[static_cast<std::size_t>(n)] != lommel_explicit(c, n))
            detail = "h_" + std::to_string(n) + " differs";
    checks.push_back(check_record("recursion_matches_explicit", detail.empty(), detail));
    detail.clear();
    for (int n = 0; n <= N && detail.empty(); ++n) {
        const EFLommelCheck r = ef_lommel_check(c, n);
        if (!r.all_equal())
            detail = "fails at n = " + std::to_string(n);
    }
    checks.push_back(check_record("e_f_lommel_identities", detail.empty(), detail));
    detail.clear();
    try {
        g_sequence(c, 2 * N + 1);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::IdentityFailure)
            throw;
        detail = e.what();
    }
    checks.push_back(check_record("g_sequence", detail.empty(), detail));
    return {{"c", c.to_string()}, {"lommel", seq_records(rec)}, {"checks", checks}};
}

bool all_passed(const json& results)
{
    return std::all_of(results["checks"].begin(), results["checks"].end(),
                       [](const json& c) { return c["passed"].get<bool>(); });
}

struct VerifyFlags {
    FamilyFlags fam;
    std::optional<std::string> preset;
    std::optional<std::string> lambda;
    std::optional<int> l;
    int max_n = 10;
};

int cmd_verify(const VerifyFlags& v, std::ostream& out, std::ostream& err)
{
    check_range("max-n", v.max_n, 0, kMaxDegree);
    json results;
    if (!v.preset) {
        if (v.fam.family.empty())
            throw BadInput("verify needs --family or --preset");
        if (v.lambda || v.l)
            throw BadInput("--lambda and --l belong to the presets");
        results = verify_family(spec_from_flags(v.fam), v.max_n);
    } else {
        if (!v.fam.family.empty() || v.fam.a || v.fam.b)
            throw BadInput("--preset takes no --family, --a or --b");
        auto need_c = [&] {
            if (!v.fam.c)
                throw BadInput("preset " + *v.preset + " needs --c");
            return parse_rational_flag("c", *v.fam.c);
        };
        auto need_lambda = [&] {
            if (!v.lambda)
                throw BadInput("preset " + *v.preset + " needs --lambda");
            return parse_rational_flag("lambda", *v.lambda);
        };
        if (*v.preset == "appendix-pcl") {
            if (v.l)
                throw BadInput("appendix-pcl takes no --l");
            results = verify_pcl(need_c(), need_lambda(), v.max_n);
        } else if (*v.preset == "appendix-rl") {
            if (!v.l)
                throw BadInput("appendix-rl needs --l");
            if (v.fam.c)
                throw BadInput("appendix-rl takes no --c");
            results = verify_rl(*v.l, need_lambda(), v.max_n);
        } else if (*v.preset == "lommel") {
            if (v.l || v.lambda)
                throw BadInput("lommel takes only --c and --max-n");
            results = verify_lommel(need_c(), v.max_n);
        } else {
            throw BadInput("unknown preset '" + *v.preset + "'");
        }
        results["preset"] = *v.preset;
    }
    const bool ok = all_passed(results);
    results["passed"] = ok;
    out << json{{"schema_version", "1"}, {"command", "verify"}, {"results", results}}.dump(2) << '\n';
    if (!ok) {
        for (const auto& c : results["checks"])
            if (!c["passed"].get<bool>())
                err << "check failed: " << c["name"].get<std::string>()
                    << (c.contains("detail") ? ": " + c["detail"].get<std::string>() : "") << '\n';
        return kExitCheckFailed;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- classify

json decomposition_json(const Decomposition& d)
{
    return {{"kappa", d.kappa.to_string()},
            {"p", poly_record(d.p.degree(), d.p)["coeffs"]},
            {"q", poly_record(d.q.degree(), d.q)["coeffs"]},
            {"w", poly_record(d.w.degree(), d.w)["coeffs"]},
            {"g", d.g.to_string()}};
}

json partial_json(const PartialDecomposition& p)
{
    json out{{"numerator", p.reduced.num().to_string()}, {"denominator", p.reduced.den().to_string()}};
    if (p.w)
        out["w"] = poly_record(p.w->degree(), *p.w)["coeffs"];
    if (p.split)
        out["split"] = {{"kappa", p.split->kappa.to_string()},
                        {"p", poly_record(p.split->p.degree(), p.split->p)["coeffs"]},
                        {"q", poly_record(p.split->q.degree(), p.split->q)["coeffs"]}};
    return out;
}

int cmd_classify(const std::string& num_text, const std::string& den_text, std::ostream& out, std::ostream& err)
{
    BiPoly N;
    BiPoly D;
    try {
        N = parse_poly_expr(num_text);
        D = parse_poly_expr(den_text);
    } catch (const Error& e) {
        throw BadInput(e.what());
    }
    if (D.is_zero())
        throw BadInput("denominator is zero");
    json results;
    int code = kExitOk;
    try {
        const ClassifyResult r = classify_jacobi_type(N, D);
        results = spec_json(r.spec);
        results["decomposition"] = decomposition_json(r.decomposition);
        results["quasi_valid"] = r.quasi_valid;
        results["orthogonal"] = r.orthogonal;
    } catch (const ClassifyError& e) {
        switch (e.kind()) {
        case ErrorKind::NotJacobiType: code = kExitNotJacobiType; break;
        case ErrorKind::NotSeparable: code = kExitNotSeparable; break;
        default: code = kExitNoMatch; break;
        }
        results = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"partial", partial_json(e.partial())}};
        if (e.kind() == ErrorKind::NotJacobiType) {
            try {
                results["rational_normal_form"] = decomposition_json(decompose_rational_f(e.partial().reduced));
            } catch (const Error&) {
            }
        }
        err << e.what() << '\n';
    }
    out << json{{"schema_version", "1"}, {"command", "classify"}, {"results", results}}.dump(2) << '\n';
    return code;
}

// ---------------------------------------------------------------- ortho

int cmd_ortho(const FamilyFlags& f, int max_n, int K, std::ostream& out)
{
    if (f.family != "e" && f.family != "f")
        throw BadInput("ortho supports --family e or f");
    if (!f.c || f.a || f.b)
        throw BadInput("ortho needs --c and no --a or --b");
    check_range("max-n", max_n, 0, 40);
    check_range("zeros", K, 1, kMaxZeros);
    const Rational c = parse_rational_flag("c", *f.c);
    const bool is_e = f.family == "e";
    if (is_e && c.sign() <= 0)
        throw BadInput("e orthogonality needs c > 0, got " + c.to_string());
    if (!is_e && (!(c > Rational(-1)) || c.is_zero()))
        throw BadInput("f orthogonality needs c > -1 and c != 0, got " + c.to_string());

    const std::vector<double> zeros = bessel_zeros((c - Rational(1)).to_double(), K);
    json grid = json::array();
    double tail = 0.0;
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_n; ++m) {
            const GramEntry g = is_e ? discrete_gram_E(c, n, m, zeros) : discrete_gram_F(c, n, m, zeros);
            tail = std::max(tail, g.tail_bound);
            grid.push_back({{"n", n}, {"m", m}, {"lhs", g.lhs}, {"rhs", g.rhs}, {"abs_err", g.abs_err()},
                            {"rel_err", g.rel_err()}, {"tail_bound", g.tail_bound}});
        }
    json results{{"family", f.family}, {"c", c.to_string()}, {"zeros", K}, {"tail_bound", tail}, {"entries", grid}};
    if (!is_e && c.sign() < 0)
        results["imaginary_zero"] = bessel_imaginary_zero((c - Rational(1)).to_double());
    out << json{{"schema_version", "1"}, {"command", "ortho"}, {"results", results}}.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact construction and checks of hypergeometric quasi-orthogonal families", "hypfam"};
    app.require_subcommand(1);

    GenFlags gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a family");
    add_family_flags(gen_cmd, gen.fam, true);
    gen_cmd->add_option("--rescale", gen.fam.rescale, "rescaling factor as p/q");
    gen_cmd->add_option("--n", gen.n, "maximum degree")->required();
    gen_cmd->add_option("--method", gen.method, "series, ratio, recurrence or all");
    gen_cmd->add_option("--format", gen.format, "json or csv");
    gen_cmd->add_option("--normalization", gen.normalization, "monic or hyper");

    VerifyFlags ver;
    auto* ver_cmd = app.add_subcommand("verify", "run the identity checks");
    add_family_flags(ver_cmd, ver.fam, false);
    ver_cmd->add_option("--rescale", ver.fam.rescale, "rescaling factor as p/q");
    ver_cmd->add_option("--preset", ver.preset, "appendix-pcl, appendix-rl or lommel");
    ver_cmd->add_option("--lambda", ver.lambda, "gauge parameter lambda as p/q");
    ver_cmd->add_option("--l", ver.l, "gauge degree parameter l");
    ver_cmd->add_option("--max-n", ver.max_n, "maximum degree");

    std::string numerator;
    std::string denominator;
    auto* cls_cmd = app.add_subcommand("classify", "identify the family of a coefficient ratio N/D");
    cls_cmd->add_option("--numerator", numerator, "N(u, s)")->required();
    cls_cmd->add_option("--denominator", denominator, "D(u, s)")->required();

    FamilyFlags orth;
    int orth_n = 2;
    int orth_k = 1000;
    auto* orth_cmd = app.add_subcommand("ortho", "discrete orthogonality over Bessel zeros");
    orth_cmd->add_option("--family", orth.family, "e or f")->required();
    orth_cmd->add_option("--c", orth.c, "parameter c as p/q");
    orth_cmd->add_option("--max-n", orth_n, "maximum degree");
    orth_cmd->add_option("--zeros", orth_k, "number of Bessel zeros");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitBadInput;
    }

    try {
        if (gen_cmd->parsed())
            return cmd_gen(gen, out);
        if (ver_cmd->parsed())
            return cmd_verify(ver, out, err);
        if (cls_cmd->parsed())
            return cmd_classify(numerator, denominator, out, err);
        return cmd_ortho(orth, orth_n, orth_k, out);
    } catch (const BadInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const Error& e) {
        const bool bad = e.kind() == ErrorKind::InvalidParams || e.kind() == ErrorKind::DomainError;
        err << e.what() << '\n';
        return bad ? kExitBadInput : kExitCheckFailed;
    }
}

} // namespace hypfam
