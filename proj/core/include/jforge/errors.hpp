#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by the zero rational function") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// A denominator vanished, either after substitution or as a negative
/// Laurent degree when a limit was requested.
class PoleError : public Error {
public:
    explicit PoleError(int order, std::string where = {}, std::vector<std::string> leading = {})
        : Error(make_message(order, where)), order_(order), where_(std::move(where)),
          leading_(std::move(leading)) {}

    int order() const noexcept { return order_; }
    const std::string& where() const noexcept { return where_; }
    /// Lowest Laurent coefficients of the divergent quantity, lowest first.
    const std::vector<std::string>& leading_terms() const noexcept { return leading_; }

private:
    static std::string make_message(int order, const std::string& where) {
        std::string m = "pole of order " + std::to_string(order);
        if (!where.empty()) m += " at " + where;
        return m;
    }
    int order_;
    std::string where_;
    std::vector<std::string> leading_;
};

class NotExpandable : public Error {
public:
    using Error::Error;
};

class UnboundParameter : public Error {
public:
    explicit UnboundParameter(const std::string& name)
        : Error("parameter '" + name + "' has no binding in the schedule"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular over the rational-function field") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class NonTerminating : public Error {
public:
    using Error::Error;
};

class OrientationFailure : public Error {
public:
    using Error::Error;
};

class MissingInverse : public Error {
public:
    using Error::Error;
};

class RuleConflict : public Error {
public:
    using Error::Error;
};

}  // namespace jforge
