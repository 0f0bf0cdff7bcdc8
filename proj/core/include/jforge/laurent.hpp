#pragma once

#include <optional>
#include <vector>

#include "jforge/ratfunc.hpp"

namespace jforge {

/// Truncated Laurent series in one parameter, coefficients free of it.
struct LaurentSeries {
    Param variable;
    int min_degree = 0;
    /// coefficients[i] multiplies variable^(min_degree + i).
    std::vector<RatFunc> coefficients;
    /// Highest exponent retained (inclusive).
    int truncation_order = 0;

    bool is_zero() const noexcept { return coefficients.empty(); }
    /// Zero outside the stored range.
    RatFunc coefficient(int exponent) const;
    /// Sum of the retained terms as a rational function.
    RatFunc truncated_sum() const;
    /// Pole order, 0 when min_degree >= 0.
    int pole_order() const noexcept { return is_zero() || min_degree >= 0 ? 0 : -min_degree; }
};

/// Expands f around var = 0. With no order given, keeps pole order + 4
/// terms past the constant one. Throws NotExpandable when the order is
/// below the leading exponent.
LaurentSeries laurent_expand(const RatFunc& f, Param var, std::optional<int> order = {});

/// Degree-zero coefficient; PoleError carrying the three lowest
/// coefficients when the series diverges.
RatFunc limit_at_zero(const LaurentSeries& series);

}  // namespace jforge
