#include "jforge/laurent.hpp"

#include <algorithm>

#include "jforge/errors.hpp"

namespace jforge {

RatFunc LaurentSeries::coefficient(int exponent) const {
    int i = exponent - min_degree;
    if (i < 0 || i >= static_cast<int>(coefficients.size())) return {};
    return coefficients[static_cast<std::size_t>(i)];
}

RatFunc LaurentSeries::truncated_sum() const {
    RatFunc total;
    RatFunc v = RatFunc::param(variable);
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i].is_zero()) continue;
        total += coefficients[i] * v.pow(min_degree + static_cast<int>(i));
    }
    return total;
}

namespace {

// coefficients of var^i for i = low..deg, as rational functions
std::vector<RatFunc> slices(const Poly& p, std::size_t var, unsigned& low) {
    low = p.min_degree_in(var);
    const unsigned high = p.degree_in(var);
    std::vector<RatFunc> out;
    for (unsigned i = low; i <= high; ++i) out.emplace_back(p.coefficient_in(var, i));
    return out;
}

}  // namespace

LaurentSeries laurent_expand(const RatFunc& f, Param var, std::optional<int> order) {
    LaurentSeries s;
    s.variable = var;
    if (f.is_zero()) {
        s.truncation_order = order.value_or(0);
        return s;
    }
    const std::size_t v = var.index();
    unsigned num_low = 0, den_low = 0;
    std::vector<RatFunc> a = slices(f.num(), v, num_low);
    std::vector<RatFunc> b = slices(f.den(), v, den_low);
    s.min_degree = static_cast<int>(num_low) - static_cast<int>(den_low);
    const int pole = s.min_degree < 0 ? -s.min_degree : 0;
    s.truncation_order = order.value_or(pole + 4);
    if (s.truncation_order < s.min_degree) {
        throw NotExpandable("truncation order " + std::to_string(s.truncation_order) +
                            " is below the leading exponent " + std::to_string(s.min_degree) + " in " +
                            var.name());
    }
    const std::size_t count = static_cast<std::size_t>(s.truncation_order - s.min_degree) + 1;
    const RatFunc b0_inv = b.front().inverse();
    s.coefficients.reserve(count);
    // power-series division a / b, b[0] != 0
    for (std::size_t i = 0; i < count; ++i) {
        RatFunc c = i < a.size() ? a[i] : RatFunc();
        for (std::size_t j = 1; j <= std::min(i, b.size() - 1); ++j) {
            if (!b[j].is_zero() && !s.coefficients[i - j].is_zero()) c -= b[j] * s.coefficients[i - j];
        }
        s.coefficients.push_back(c * b0_inv);
    }
    return s;
}

RatFunc limit_at_zero(const LaurentSeries& series) {
    if (series.is_zero()) return {};
    if (series.min_degree >= 0) return series.coefficient(0);
    std::vector<std::string> lowest;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, series.coefficients.size()); ++i) {
        lowest.push_back(series.coefficients[i].str());
    }
    throw PoleError(-series.min_degree, series.variable.name() + " -> 0", std::move(lowest));
}

}  // namespace jforge
