#include "hypfam/bipoly.hpp"

#include "hypfam/error.hpp"

#include <algorithm>
#include <sstream>

namespace hypfam {

namespace {

bool grlex_less(const BiPoly::Exponent& a, const BiPoly::Exponent& b)
{
    const int da = a.first + a.second;
    const int db = b.first + b.second;
    if (da != db)
        return da < db;
    return a.first < b.first;
}

// Polynomial in s with coefficients in Q[u], ascending in s, trimmed.
using SPoly = std::vector<UniPoly>;

void trim(SPoly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

SPoly times(const SPoly& p, const UniPoly& c, int shift)
{
    if (p.empty() || c.is_zero())
        return {};
    SPoly out(static_cast<std::size_t>(shift));
    for (const auto& x : p)
        out.push_back(x * c);
    trim(out);
    return out;
}

SPoly minus(SPoly a, const SPoly& b)
{
    if (b.size() > a.size())
        a.resize(b.size());
    for (std::size_t j = 0; j < b.size(); ++j)
        a[j] -= b[j];
    trim(a);
    return a;
}

UniPoly content(const SPoly& p)
{
    UniPoly g;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g.degree() == 0)
            break;
    }
    return g;
}

SPoly primitive(const SPoly& p)
{
    const UniPoly c = content(p);
    if (c.is_zero())
        return p;
    SPoly out;
    for (const auto& x : p)
        out.push_back(x.divmod(c).first);
    return out;
}

// Multiple of the pseudo-remainder of a by b, computed without division in Q[u].
SPoly pseudo_rem(SPoly a, const SPoly& b)
{
    const int db = static_cast<int>(b.size()) - 1;
    const UniPoly& lb = b.back();
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        const int e = static_cast<int>(a.size()) - 1 - db;
        const UniPoly la = a.back();
        a = minus(times(a, lb, 0), times(b, la, e));
    }
    return a;
}

} // namespace

BiPoly::BiPoly(const Rational& c)
{
    add_term({0, 0}, c);
}

BiPoly BiPoly::u()
{
    return monomial(1, 1, 0);
}

BiPoly BiPoly::s()
{
    return monomial(1, 0, 1);
}

BiPoly BiPoly::monomial(const Rational& c, int deg_u, int deg_s)
{
    BiPoly out;
    out.add_term({deg_u, deg_s}, c);
    return out;
}

BiPoly BiPoly::from_uni(const UniPoly& p, Var v)
{
    BiPoly out;
    for (int k = 0; k <= p.degree(); ++k)
        out.add_term(v == Var::U ? Exponent{k, 0} : Exponent{0, k}, p.coeff(k));
    return out;
}

void BiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool BiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

int BiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.first + e.second);
    return d;
}

int BiPoly::degree(Var v) const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, v == Var::U ? e.first : e.second);
    return d;
}

Rational BiPoly::coeff(int deg_u, int deg_s) const
{
    auto it = terms_.find({deg_u, deg_s});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<BiPoly::Exponent, Rational> BiPoly::leading_term() const
{
    if (terms_.empty())
        return {{0, 0}, Rational(0)};
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (grlex_less(best->first, it->first))
            best = it;
    return *best;
}

Rational BiPoly::content() const
{
    if (terms_.empty())
        return Rational(0);
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(num_gcd, den_lcm);
}

BiPoly BiPoly::normalized() const
{
    if (terms_.empty())
        return *this;
    Rational scale = content().inverse();
    if (leading_term().second.sign() < 0)
        scale = -scale;
    return *this * scale;
}

Rational BiPoly::eval(const Rational& u0, const Rational& s0) const
{
    Rational acc;
    for (const auto& [e, c] : terms_)
        acc += c * u0.pow(e.first) * s0.pow(e.second);
    return acc;
}

UniPoly BiPoly::eval_at(Var v, const Rational& value) const
{
    const int other = degree(v == Var::U ? Var::S : Var::U);
    std::vector<Rational> out(static_cast<std::size_t>(std::max(other, 0) + 1));
    for (const auto& [e, c] : terms_) {
        const int fixed = v == Var::U ? e.first : e.second;
        const int free = v == Var::U ? e.second : e.first;
        out[static_cast<std::size_t>(free)] += c * value.pow(fixed);
    }
    return UniPoly(std::move(out));
}

UniPoly BiPoly::to_uni(Var remaining) const
{
    return eval_at(remaining == Var::U ? Var::S : Var::U, Rational(0));
}

BiPoly BiPoly::substitute(const BiPoly& u_expr, const BiPoly& s_expr) const
{
    std::vector<BiPoly> upow{BiPoly(1)};
    std::vector<BiPoly> spow{BiPoly(1)};
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(upow.size()) <= e.first)
            upow.push_back(upow.back() * u_expr);
        while (static_cast<int>(spow.size()) <= e.second)
            spow.push_back(spow.back() * s_expr);
        out += c * (upow[static_cast<std::size_t>(e.first)] * spow[static_cast<std::size_t>(e.second)]);
    }
    return out;
}

BiPoly BiPoly::shift(Var v, const Rational& delta) const
{
    if (delta.is_zero())
        return *this;
    if (v == Var::U)
        return substitute(u() + BiPoly(delta), s());
    return substitute(u(), s() + BiPoly(delta));
}

BiPoly BiPoly::swapped() const
{
    BiPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(Exponent{e.second, e.first}, c);
    return out;
}

std::vector<UniPoly> BiPoly::coeffs_in_s() const
{
    const int ds = degree(Var::S);
    const int du = degree(Var::U);
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(ds + 1),
                                           std::vector<Rational>(static_cast<std::size_t>(du + 1)));
    for (const auto& [e, c] : terms_)
        raw[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(e.first)] = c;
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& r : raw)
        out.emplace_back(std::move(r));
    return out;
}

BiPoly BiPoly::from_coeffs_in_s(const std::vector<UniPoly>& cs)
{
    BiPoly out;
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (int i = 0; i <= cs[j].degree(); ++i)
            out.add_term({i, static_cast<int>(j)}, cs[j].coeff(i));
    return out;
}

std::string BiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const bool neg = c.sign() < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const Rational mag = c.abs();
        std::vector<std::string> factors;
        if (!mag.is_one() || (e.first == 0 && e.second == 0))
            factors.push_back(mag.to_string());
        if (e.first > 0)
            factors.push_back(e.first == 1 ? "u" : "u^" + std::to_string(e.first));
        if (e.second > 0)
            factors.push_back(e.second == 1 ? "s" : "s^" + std::to_string(e.second));
        for (std::size_t i = 0; i < factors.size(); ++i)
            os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

BiPoly BiPoly::operator-() const
{
    BiPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_)
        x *= c;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

BiPoly BiPoly::pow(int e) const
{
    BiPoly out(1);
    for (int i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

BiPoly compose(const UniPoly& p, const BiPoly& arg)
{
    BiPoly out;
    for (int k = p.degree(); k >= 0; --k)
        out = out * arg + BiPoly(p.coeff(k));
    return out;
}

std::pair<UniPoly, BiPoly> content_wrt(const BiPoly& x, Var v)
{
    if (x.is_zero())
        return {UniPoly(), BiPoly()};
    if (v == Var::U) {
        auto [c, rest] = content_wrt(x.swapped(), Var::S);
        return {c, rest.swapped()};
    }
    const SPoly p = x.coeffs_in_s();
    const UniPoly c = content(p);
    SPoly rest;
    for (const auto& k : p)
        rest.push_back(k.divmod(c).first);
    return {c, BiPoly::from_coeffs_in_s(rest)};
}

BiPoly gcd(const BiPoly& a, const BiPoly& b)
{
    if (a.is_zero())
        return b.normalized();
    if (b.is_zero())
        return a.normalized();
    SPoly pa = a.coeffs_in_s();
    SPoly pb = b.coeffs_in_s();
    trim(pa);
    trim(pb);
    const UniPoly cont = gcd(content(pa), content(pb));
    pa = primitive(pa);
    pb = primitive(pb);
    if (pa.size() < pb.size())
        std::swap(pa, pb);
    while (pb.size() > 1) {
        SPoly r = pseudo_rem(pa, pb);
        pa = std::move(pb);
        pb = r.empty() ? SPoly{} : primitive(r);
        if (pb.empty())
            break;
    }
    SPoly g;
    if (pb.empty())
        g = pa; // pa is the last nonzero remainder
    else
        g = SPoly{UniPoly::constant(1)}; // s-degree 0 remainder: coprime in s
    for (auto& x : g)
        x = x * cont;
    return BiPoly::from_coeffs_in_s(g).normalized();
}

std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b)
{
    if (b.is_zero())
        throw Error(ErrorKind::ZeroDenominator, "bivariate division by zero");
    SPoly r = a.coeffs_in_s();
    SPoly d = b.coeffs_in_s();
    trim(r);
    trim(d);
    const int dd = static_cast<int>(d.size()) - 1;
    SPoly quot(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= dd) {
        const int e = static_cast<int>(r.size()) - 1 - dd;
        auto [q, rem] = r.back().divmod(d.back());
        if (!rem.is_zero())
            return std::nullopt;
        quot[static_cast<std::size_t>(e)] = q;
        r = minus(r, times(d, q, e));
    }
    if (!r.empty())
        return std::nullopt;
    return BiPoly::from_coeffs_in_s(quot);
}

} // namespace hypfam
