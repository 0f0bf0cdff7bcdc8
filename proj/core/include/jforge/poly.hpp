#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jforge/symbols.hpp"

namespace jforge {

/// Exponent vector over the interned parameters.
struct Monomial {
    std::array<std::uint16_t, kMaxParams> exp{};
    std::uint32_t degree = 0;

    static Monomial one() { return {}; }
    static Monomial variable(Param v, unsigned power = 1);

    bool is_one() const noexcept { return degree == 0; }
    unsigned operator[](std::size_t var) const noexcept { return exp[var]; }
    bool divides(const Monomial& other) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; caller guarantees b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree == b.degree && a.exp == b.exp;
    }
};

/// Graded lexicographic order, parameter index 0 most significant.
std::strong_ordering compare(const Monomial& a, const Monomial& b) noexcept;

Monomial gcd(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted in strictly decreasing monomial order with no
/// zero coefficients, so structural equality is mathematical equality.
class Poly {
public:
    struct Term {
        Monomial mono;
        mpq_class coeff;
    };

    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    Poly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    Poly(const Monomial& m, const mpq_class& c);
    static Poly variable(Param v);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
    }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    mpq_class constant_value() const;

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const Term& leading() const { return terms_.front(); }

    unsigned total_degree() const noexcept;
    unsigned degree_in(std::size_t var) const noexcept;
    unsigned min_degree_in(std::size_t var) const noexcept;
    /// Highest-index parameter that occurs, or -1 for constants.
    int main_variable() const noexcept;
    /// Bitmask of occurring parameters.
    std::uint32_t support() const noexcept;

    /// Coefficient of var^power, as a polynomial free of var.
    Poly coefficient_in(std::size_t var, unsigned power) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const mpq_class& c) const;
    Poly times(const Monomial& m) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept;

    /// Value at a point; parameters absent from `point` are an error.
    mpq_class evaluate(const std::map<std::size_t, mpq_class>& point) const;

    std::string str() const;

private:
    friend Poly make_poly(std::vector<Term> terms);
    void normalize();

    std::vector<Term> terms_;
};

/// Builds a polynomial from unsorted, possibly repeated terms.
Poly make_poly(std::vector<Poly::Term> terms);

/// Exact multivariate division; throws jforge::Error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Divides by the leading coefficient; zero stays zero.
Poly monic(const Poly& a);

/// Monic greatest common divisor over Q (recursive primitive PRS).
Poly gcd(const Poly& a, const Poly& b);

/// Content with respect to `var`: the gcd of the coefficients of var^i.
Poly content_in(const Poly& a, std::size_t var);

/// Pseudo-remainder of a by b viewed as polynomials in `var`.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

}  // namespace jforge
