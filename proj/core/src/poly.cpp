#include "jforge/poly.hpp"

#include <algorithm>
#include <limits>

#include "jforge/errors.hpp"

namespace jforge {

Monomial Monomial::variable(Param v, unsigned power) {
    Monomial m;
    m.exp[v.index()] = static_cast<std::uint16_t>(power);
    m.degree = power;
    return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree > other.degree) return false;
    for (std::size_t i = 0; i < kMaxParams; ++i) {
        if (exp[i] > other.exp[i]) return false;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxParams; ++i) {
        unsigned e = unsigned(a.exp[i]) + b.exp[i];
        if (e > std::numeric_limits<std::uint16_t>::max()) throw Error("monomial exponent overflow");
        r.exp[i] = static_cast<std::uint16_t>(e);
    }
    r.degree = a.degree + b.degree;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxParams; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    r.degree = a.degree - b.degree;
    return r;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree != b.degree) return a.degree <=> b.degree;
    for (std::size_t i = 0; i < kMaxParams; ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
    }
    return std::strong_ordering::equal;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxParams; ++i) {
        r.exp[i] = std::min(a.exp[i], b.exp[i]);
        r.degree += r.exp[i];
    }
    return r;
}

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return compare(a.mono, b.mono) > 0; }

}  // namespace

Poly::Poly(long c) {
    if (c != 0) terms_.push_back({Monomial::one(), mpq_class(c)});
}

Poly::Poly(const mpq_class& c) {
    if (sgn(c) != 0) terms_.push_back({Monomial::one(), c});
}

Poly::Poly(const Monomial& m, const mpq_class& c) {
    if (sgn(c) != 0) terms_.push_back({m, c});
}

Poly Poly::variable(Param v) { return Poly(Monomial::variable(v), mpq_class(1)); }

mpq_class Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return terms_.empty() ? mpq_class(0) : terms_.front().coeff;
}

unsigned Poly::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, unsigned(t.mono.degree));
    return d;
}

unsigned Poly::degree_in(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, unsigned(t.mono.exp[var]));
    return d;
}

unsigned Poly::min_degree_in(std::size_t var) const noexcept {
    if (terms_.empty()) return 0;
    unsigned d = std::numeric_limits<unsigned>::max();
    for (const auto& t : terms_) d = std::min(d, unsigned(t.mono.exp[var]));
    return d;
}

std::uint32_t Poly::support() const noexcept {
    std::uint32_t mask = 0;
    for (const auto& t : terms_) {
        for (std::size_t i = 0; i < kMaxParams; ++i) {
            if (t.mono.exp[i]) mask |= (1u << i);
        }
    }
    return mask;
}

int Poly::main_variable() const noexcept {
    std::uint32_t mask = support();
    if (mask == 0) return -1;
    return 31 - __builtin_clz(mask);
}

Poly Poly::coefficient_in(std::size_t var, unsigned power) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.exp[var] != power) continue;
        Term c = t;
        c.mono.degree -= c.mono.exp[var];
        c.mono.exp[var] = 0;
        out.push_back(std::move(c));
    }
    // removing one variable can reorder terms of equal total degree
    return make_poly(std::move(out));
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
        } else {
            if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
    terms_ = std::move(merged);
}

Poly make_poly(std::vector<Poly::Term> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

// merge of two sorted term lists; sign = +1 or -1 applied to b
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    int sign) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && compare(a[i].mono, b[j].mono) > 0)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || compare(a[i].mono, b[j].mono) < 0) {
            out.push_back(b[j++]);
            if (sign < 0) out.back().coeff = -out.back().coeff;
        } else {
            mpq_class c = sign > 0 ? mpq_class(a[i].coeff + b[j].coeff) : mpq_class(a[i].coeff - b[j].coeff);
            if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
    terms_ = merge_terms(terms_, other.terms_, +1);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    terms_ = merge_terms(terms_, other.terms_, -1);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.terms_.front().coeff);
    if (b.is_constant()) return a.scaled(b.terms_.front().coeff);
    std::vector<Poly::Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
    }
    return make_poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly Poly::scaled(const mpq_class& c) const {
    if (sgn(c) == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::times(const Monomial& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

mpq_class Poly::evaluate(const std::map<std::size_t, mpq_class>& point) const {
    mpq_class total = 0;
    for (const auto& t : terms_) {
        mpq_class v = t.coeff;
        for (std::size_t i = 0; i < kMaxParams; ++i) {
            if (!t.mono.exp[i]) continue;
            auto it = point.find(i);
            if (it == point.end()) throw Error("no value for parameter " + Param::from_index(i).name());
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), it->second.get_num_mpz_t(), t.mono.exp[i]);
            mpz_pow_ui(den.get_mpz_t(), it->second.get_den_mpz_t(), t.mono.exp[i]);
            mpq_class pw(num, den);
            pw.canonicalize();
            v *= pw;
        }
        total += v;
    }
    return total;
}

Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_constant()) return a.scaled(1 / b.leading().coeff);
    std::vector<Poly::Term> quotient;
    Poly rem = a;
    const auto& lb = b.leading();
    while (!rem.is_zero()) {
        const auto& lr = rem.leading();
        if (!lb.mono.divides(lr.mono)) throw Error("inexact polynomial division");
        Poly::Term q{lr.mono / lb.mono, lr.coeff / lb.coeff};
        rem -= b.times(q.mono).scaled(q.coeff);
        quotient.push_back(std::move(q));
    }
    // quotient terms arrive in decreasing order already
    return make_poly(std::move(quotient));
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return a.scaled(1 / a.leading().coeff);
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
    const unsigned db = b.degree_in(var);
    const Poly lcb = b.coefficient_in(var, db);
    Poly r = a;
    while (!r.is_zero()) {
        const unsigned dr = r.degree_in(var);
        if (dr < db) break;
        Poly lcr = r.coefficient_in(var, dr);
        r = lcb * r - (lcr * b).times(Monomial::variable(Param::from_index(var), dr - db));
    }
    return r;
}

namespace {

Poly monomial_content(const Poly& a) {
    Monomial g = a.leading().mono;
    for (const auto& t : a.terms()) g = gcd(g, t.mono);
    return Poly(g, mpq_class(1));
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly primitive_part_in(const Poly& a, std::size_t var) { return exact_div(a, content_in(a, var)); }

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);
    if (a.is_monomial() || b.is_monomial()) {
        const Poly& mono = a.is_monomial() ? a : b;
        const Poly& other = a.is_monomial() ? b : a;
        Monomial g = mono.leading().mono;
        for (const auto& t : other.terms()) g = gcd(g, t.mono);
        return Poly(g, mpq_class(1));
    }
    if (a == b) return monic(a);

    // pull out the monomial contents first; keeps the PRS small
    Poly ma = monomial_content(a), mb = monomial_content(b);
    if (!ma.is_constant() || !mb.is_constant()) {
        Poly g = gcd_impl(ma, mb);
        return monic(g * gcd_impl(exact_div(a, ma), exact_div(b, mb)));
    }

    const std::uint32_t sa = a.support(), sb = b.support();
    const std::uint32_t both = sa | sb;
    const std::size_t var = 31 - __builtin_clz(both);
    const bool in_a = sa & (1u << var), in_b = sb & (1u << var);
    if (!in_a) return gcd_impl(a, content_in(b, var));
    if (!in_b) return gcd_impl(content_in(a, var), b);

    Poly ca = content_in(a, var), cb = content_in(b, var);
    Poly c = gcd_impl(ca, cb);
    Poly pa = exact_div(a, ca), pb = exact_div(b, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (true) {
        Poly r = pseudo_remainder(pa, pb, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            pb = Poly(1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part_in(r, var);
    }
    return monic(c * primitive_part_in(pb, var));
}

}  // namespace

Poly content_in(const Poly& a, std::size_t var) {
    if (a.is_zero()) return {};
    const unsigned d = a.degree_in(var);
    Poly g;
    for (unsigned i = 0; i <= d; ++i) {
        Poly c = a.coefficient_in(var, i);
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : gcd_impl(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

}  // namespace jforge
