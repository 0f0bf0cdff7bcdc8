#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace jforge {

/// Upper bound on distinct parameter symbols in one process.
inline constexpr std::size_t kMaxParams = 24;

/// A commuting deformation parameter. Symbols are interned process-wide;
/// the index doubles as the variable's position in monomial exponent vectors.
class Param {
public:
    constexpr Param() = default;

    /// Interns `name`, throws jforge::Error once kMaxParams symbols exist.
    explicit Param(std::string_view name);

    static Param from_index(std::size_t index);
    /// Returns true and sets `out` if `name` is already interned.
    static bool lookup(std::string_view name, Param& out);

    std::size_t index() const noexcept { return index_; }
    const std::string& name() const;

    friend bool operator==(Param a, Param b) noexcept { return a.index_ == b.index_; }
    friend auto operator<=>(Param a, Param b) noexcept { return a.index_ <=> b.index_; }

private:
    std::size_t index_ = 0;
};

/// The standard parameters, interned first in this fixed order so that
/// canonical printing does not depend on parse order.
namespace params {
Param r();
Param s();
Param p();
Param q();
Param h();
Param eta();
Param m();
Param n();
Param k();
/// The reserved limit variable.
Param eps();
}  // namespace params

}  // namespace jforge
