#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "jforge/poly.hpp"

namespace jforge {

class RatFunc;
using Bindings = std::map<Param, RatFunc>;
using Point = std::map<std::size_t, mpq_class>;

/// Element of Q(params) in canonical form: numerator and denominator
/// coprime, denominator monic. Equality is therefore structural.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const mpq_class& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& num, const Poly& den);
    static RatFunc param(Param v) { return RatFunc(Poly::variable(v)); }
    static RatFunc param(std::string_view name) { return param(Param(name)); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept;
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    mpq_class constant_value() const;
    std::uint32_t support() const noexcept { return num_.support() | den_.support(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inverse() const;
    RatFunc pow(int e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Simultaneous substitution. Throws PoleError if the denominator
    /// vanishes identically under the bindings.
    RatFunc substitute(const Bindings& bindings) const;

    /// Throws PoleError at a zero of the denominator.
    mpq_class evaluate(const Point& point) const;

    /// Canonical text form, re-parseable by parse_ratfunc.
    std::string str() const;

private:
    Poly num_;
    Poly den_{1};
};

/// Polynomial substitution into a polynomial, result over a common denominator.
RatFunc substitute(const Poly& p, const Bindings& bindings);

}  // namespace jforge
