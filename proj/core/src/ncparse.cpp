#include <cctype>

#include "jforge/errors.hpp"
#include "jforge/freealg.hpp"

namespace jforge {

namespace {

class NCParser {
public:
    explicit NCParser(std::string_view text) : text_(text) {}

    NCPoly parse() {
        NCPoly v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc scalar(const NCPoly& p, const char* what) {
        if (!p.is_scalar()) fail(std::string(what) + " must be a scalar");
        return p.coefficient(Word());
    }

    NCPoly expr() {
        NCPoly v = term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    NCPoly term() {
        NCPoly v = unary();
        while (true) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                RatFunc d = scalar(unary(), "divisor");
                if (d.is_zero()) fail("division by zero");
                v = v.scaled(d.inverse());
            } else {
                return v;
            }
        }
    }

    NCPoly unary() {
        if (eat('-')) return -unary();
        return power();
    }

    NCPoly power() {
        NCPoly base = atom();
        if (!eat('^')) return base;
        const bool negative = eat('-');
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected integer exponent");
        }
        int e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + (text_[pos_++] - '0');
            if (e > 64) fail("exponent too large");
        }
        if (negative) {
            RatFunc s = scalar(base, "base of a negative power");
            if (s.is_zero()) fail("division by zero");
            return NCPoly(s.pow(-e));
        }
        NCPoly out(1);
        for (int i = 0; i < e; ++i) out = out * base;
        return out;
    }

    NCPoly atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NCPoly v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '[') {
            ++pos_;
            NCPoly u = expr();
            if (!eat(',')) fail("expected ','");
            NCPoly v = expr();
            if (!eat(']')) fail("expected ']'");
            RatFunc q(1);
            if (pos_ < text_.size() && text_[pos_] == '_') {
                ++pos_;
                q = scalar(atom(), "bracket subscript");
            }
            return commutator(u, v, q);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return NCPoly(RatFunc(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (auto g = gen_from_name(name)) return NCPoly(*g);
            if (name == "delta") {
                return NCPoly(Word{Gen::a, Gen::d}) - NCPoly(Word{Gen::b, Gen::c}) -
                       NCPoly(Word{Gen::b, Gen::d}, RatFunc::param(params::n()));
            }
            return NCPoly(RatFunc::param(name));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text) { return NCParser(text).parse(); }

}  // namespace jforge
