#include "jforge/ratfunc.hpp"

#include "jforge/errors.hpp"

namespace jforge {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return;
    if (den.is_constant()) {
        num_ = num.scaled(1 / den.leading().coeff);
        return;
    }
    Poly g = gcd(num, den);
    Poly n = g.is_constant() ? num : exact_div(num, g);
    Poly d = g.is_constant() ? den : exact_div(den, g);
    mpq_class lc = d.leading().coeff;
    num_ = n.scaled(1 / lc);
    den_ = d.scaled(1 / lc);
}

bool RatFunc::is_one() const noexcept {
    return den_.is_constant() && num_.is_constant() && !num_.is_zero() && num_.leading().coeff == 1;
}

mpq_class RatFunc::constant_value() const {
    if (!is_constant()) throw Error("not a constant: " + str());
    return num_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_constant() && b.den_.is_constant()) {
        RatFunc r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    if (g.is_constant()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly bd = exact_div(b.den_, g), ad = exact_div(a.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_constant() && b.den_.is_constant()) {
        RatFunc r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly n1 = g1.is_constant() ? a.num_ : exact_div(a.num_, g1);
    Poly d2 = g1.is_constant() ? b.den_ : exact_div(b.den_, g1);
    Poly n2 = g2.is_constant() ? b.num_ : exact_div(b.num_, g2);
    Poly d1 = g2.is_constant() ? a.den_ : exact_div(a.den_, g2);
    RatFunc r;
    Poly den = d1 * d2;
    mpq_class lc = den.leading().coeff;
    r.num_ = (n1 * n2).scaled(1 / lc);
    r.den_ = den.scaled(1 / lc);
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    RatFunc r;
    mpq_class lc = num_.leading().coeff;
    r.num_ = den_.scaled(1 / lc);
    r.den_ = num_.scaled(1 / lc);
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

RatFunc substitute(const Poly& p, const Bindings& bindings) {
    // powers are cached per parameter; terms are summed with a common denominator
    std::map<std::pair<std::size_t, unsigned>, RatFunc> cache;
    auto power_of = [&](std::size_t var, unsigned e) -> const RatFunc& {
        auto key = std::make_pair(var, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto b = bindings.find(Param::from_index(var));
        RatFunc base = b == bindings.end() ? RatFunc::param(Param::from_index(var)) : b->second;
        return cache.emplace(key, base.pow(static_cast<int>(e))).first->second;
    };
    RatFunc total;
    for (const auto& t : p.terms()) {
        RatFunc v(t.coeff);
        for (std::size_t i = 0; i < kMaxParams; ++i) {
            if (t.mono.exp[i]) v *= power_of(i, t.mono.exp[i]);
        }
        total += v;
    }
    return total;
}

RatFunc RatFunc::substitute(const Bindings& bindings) const {
    RatFunc n = jforge::substitute(num_, bindings);
    if (den_.is_constant()) return n;
    RatFunc d = jforge::substitute(den_, bindings);
    if (d.is_zero()) throw PoleError(0, "substitution", {den_.str()});
    return n / d;
}

mpq_class RatFunc::evaluate(const Point& point) const {
    mpq_class d = den_.evaluate(point);
    if (sgn(d) == 0) throw PoleError(0, "evaluation", {den_.str()});
    return num_.evaluate(point) / d;
}

}  // namespace jforge
