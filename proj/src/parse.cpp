#include "hypfam/parse.hpp"

#include "hypfam/error.hpp"

#include <cctype>
#include <string>

namespace hypfam {

namespace {

constexpr int kMaxExponent = 1000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BiPoly run()
    {
        BiPoly out = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        std::string msg = what + " at offset " + std::to_string(pos_);
        if (pos_ < text_.size())
            msg += " ('" + std::string(1, text_[pos_]) + "')";
        else
            msg += " (end of input)";
        throw Error(ErrorKind::SyntaxError, msg, {static_cast<long>(pos_)});
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    BiPoly expr()
    {
        BiPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    BiPoly term()
    {
        const bool negate = accept('-');
        BiPoly acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return negate ? -acc : acc;
    }

    BiPoly factor()
    {
        BiPoly b = base();
        if (accept('^')) {
            const std::size_t at = pos_;
            const std::string e = digits();
            if (e.empty())
                fail("expected exponent");
            if (e.size() > 4 || std::stoi(e) > kMaxExponent) {
                pos_ = at;
                fail("exponent too large");
            }
            b = b.pow(std::stoi(e));
        }
        return b;
    }

    BiPoly base()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("expected operand");
        const char c = text_[pos_];
        if (c == 'u') {
            ++pos_;
            return BiPoly::u();
        }
        if (c == 's') {
            ++pos_;
            return BiPoly::s();
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const mpz_class num(digits(), 10);
            mpz_class den = 1;
            if (accept('/')) {
                const std::size_t at = pos_;
                const std::string d = digits();
                if (d.empty())
                    fail("expected denominator");
                den = mpz_class(d, 10);
                if (den == 0) {
                    pos_ = at;
                    skip_ws();
                    fail("zero denominator");
                }
            }
            return BiPoly(Rational(num, den));
        }
        fail("expected operand");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

BiPoly parse_poly_expr(std::string_view text)
{
    return Parser(text).run();
}

} // namespace hypfam
