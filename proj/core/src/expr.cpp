#include "jforge/expr.hpp"

#include <cctype>

#include "jforge/errors.hpp"

namespace jforge {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RatFunc parse() {
        RatFunc v = expr();
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

    RatFunc expr() {
        RatFunc v = term();
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RatFunc unary() {
        if (eat('-')) return -unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (!eat('^')) return base;
        bool negative = eat('-');
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected integer exponent");
        }
        long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + (text_[pos_++] - '0');
            if (e > 65535) fail("exponent too large");
        }
        if (negative && base.is_zero()) fail("division by zero");
        return base.pow(negative ? -static_cast<int>(e) : static_cast<int>(e));
    }

    RatFunc atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return RatFunc(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return RatFunc::param(text_.substr(start, pos_ - start));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string monomial_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < kMaxParams; ++i) {
        if (!m.exp[i]) continue;
        if (!out.empty()) out += '*';
        out += Param::from_index(i).name();
        if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
    }
    return out;
}

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        std::string term;
        if (t.mono.is_one()) {
            term = t.coeff.get_str();
        } else if (t.coeff == 1) {
            term = monomial_string(t.mono);
        } else if (t.coeff == -1) {
            term = "-" + monomial_string(t.mono);
        } else {
            term = t.coeff.get_str() + "*" + monomial_string(t.mono);
        }
        if (!out.empty() && term.front() != '-') out += '+';
        out += term;
    }
    return out;
}

std::string to_string(const RatFunc& f) {
    if (f.is_polynomial()) return to_string(f.num());
    std::string n = to_string(f.num());
    std::string d = to_string(f.den());
    if (f.num().size() > 1 || f.num().leading().coeff.get_den() != 1) n = "(" + n + ")";
    const bool bare_power = f.den().is_monomial() && f.den().leading().coeff == 1 &&
                            f.den().leading().mono.degree == f.den().leading().mono.exp[static_cast<std::size_t>(
                                                                  f.den().main_variable())];
    if (!bare_power) d = "(" + d + ")";
    return n + "/" + d;
}

std::string Poly::str() const { return to_string(*this); }
std::string RatFunc::str() const { return to_string(*this); }

}  // namespace jforge
