#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jforge/ratfunc.hpp"
#include "jforge/report.hpp"

namespace jforge {

/// Generators of the extended algebra. The enumerator value is the rank in
/// the fixed total order; words compare degree first, then lexicographically.
enum class Gen : std::uint8_t { f, finv, x, y, phi, theta, b, a, d, c, dinv, e, xi };

inline constexpr std::size_t kNumGens = 13;

std::string_view gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);
const std::array<Gen, kNumGens>& all_gens();
inline std::size_t rank(Gen g) { return static_cast<std::size_t>(g); }

/// Fixed-capacity word over Gen; the empty word is the unit.
class Word {
public:
    static constexpr std::size_t kCapacity = 23;

    Word() = default;
    Word(std::initializer_list<Gen> gens);
    explicit Word(Gen g) { push_back(g); }

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }
    Gen operator[](std::size_t i) const noexcept { return static_cast<Gen>(g_[i]); }
    const std::uint8_t* data() const noexcept { return g_.data(); }

    void push_back(Gen g);
    Word sub(std::size_t pos, std::size_t count) const;
    /// this[0,pos) + middle + this[pos+count, end)
    Word splice(std::size_t pos, std::size_t count, const Word& middle) const;
    bool contains(Gen g) const noexcept;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.len_ == b.len_ && std::memcmp(a.g_.data(), b.g_.data(), a.len_) == 0;
    }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
        if (a.len_ != b.len_) return a.len_ <=> b.len_;
        const int c = std::memcmp(a.g_.data(), b.g_.data(), a.len_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const;

private:
    std::uint8_t len_ = 0;
    std::array<std::uint8_t, kCapacity> g_{};
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Noncommutative polynomial over RatFunc. Terms are stored in increasing
/// word order with no zero coefficients.
class NCPoly {
public:
    using Terms = std::map<Word, RatFunc>;

    NCPoly() = default;
    NCPoly(const RatFunc& c);  // NOLINT(google-explicit-constructor)
    NCPoly(long c) : NCPoly(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
    NCPoly(Gen g);  // NOLINT(google-explicit-constructor)
    NCPoly(const Word& w, const RatFunc& c = RatFunc(1));

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_scalar() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
    /// Largest word with its coefficient.
    const std::pair<const Word, RatFunc>& leading() const { return *terms_.rbegin(); }
    RatFunc coefficient(const Word& w) const;
    bool mentions(Gen g) const noexcept;

    void add_term(const Word& w, const RatFunc& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly scaled(const RatFunc& c) const;
    friend bool operator==(const NCPoly& a, const NCPoly& b) noexcept { return a.terms_ == b.terms_; }

    NCPoly substitute(const Bindings& b) const;
    /// Keeps only the terms whose word satisfies pred.
    NCPoly filtered(const std::function<bool(const Word&)>& pred) const;

    std::string str() const;

private:
    Terms terms_;
};

/// uv - c*vu
NCPoly commutator(const NCPoly& u, const NCPoly& v, const RatFunc& c = RatFunc(1));

/// Element of the N-fold tensor power; multiplication is factorwise.
template <std::size_t N>
class Tensor {
public:
    using Key = std::array<Word, N>;
    using Terms = std::map<Key, RatFunc>;

    Tensor() = default;
    static Tensor unit() {
        Tensor t;
        t.add_term(Key{}, RatFunc(1));
        return t;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(const Key& k, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    Tensor scaled(const RatFunc& c) const {
        Tensor out;
        if (c.is_zero()) return out;
        for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
        return out;
    }
    friend Tensor operator*(const Tensor& a, const Tensor& b) {
        Tensor out;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                Key k;
                for (std::size_t i = 0; i < N; ++i) k[i] = ka[i] * kb[i];
                out.add_term(k, ca * cb);
            }
        }
        return out;
    }
    friend bool operator==(const Tensor& a, const Tensor& b) noexcept { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string factors;
            for (std::size_t i = 0; i < N; ++i) {
                if (i) factors += " (x) ";
                factors += it->first[i].empty() ? "1" : it->first[i].str();
            }
            NCPoly coeff(it->second);
            std::string c = coeff.str();
            if (!out.empty()) out += " + ";
            out += (it->second.is_one() ? std::string() : "(" + c + ")*") + "[" + factors + "]";
        }
        return out;
    }

private:
    Terms terms_;
};

using TensorElem = Tensor<2>;

/// Outer product p (x) q.
TensorElem tensor(const NCPoly& p, const NCPoly& q);
Tensor<3> tensor(const NCPoly& p, const NCPoly& q, const NCPoly& r);

struct RewriteRule {
    Word lhs;
    NCPoly rhs;
    /// Where the rule came from, e.g. the RTT entry or inverse definition.
    std::string provenance;
};

/// Oriented rewrite system over the fixed generator order.
class RewriteSystem {
public:
    static constexpr std::size_t kDefaultStepBound = 1'000'000;

    explicit RewriteSystem(unsigned max_degree = 8) : max_degree_(max_degree) { quad_.fill(-1); }

    /// Throws RuleConflict for a second rule with the same lhs and
    /// OrientationFailure unless lhs exceeds every rhs word.
    void add_rule(const Word& lhs, const NCPoly& rhs, std::string provenance = {});
    /// Orients p = 0 by its largest word after reduction; returns the new
    /// lhs, or nothing if p already reduces to 0.
    std::optional<Word> add_relation(const NCPoly& p, std::string provenance = {});

    const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
    const RewriteRule* find(const Word& lhs) const;
    unsigned max_degree() const noexcept { return max_degree_; }
    void set_max_degree(unsigned d) noexcept { max_degree_ = d; }
    /// 10^6 unless JFORGE_MAX_STEPS is set.
    static std::size_t step_bound();

    /// Leftmost redex (position, rule index), if any.
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;
    bool is_normal(const Word& w) const { return !find_redex(w); }

    /// Largest-word-first reduction with leftmost redexes. With an rng the
    /// redex is chosen at random among all occurrences instead.
    NCPoly normal_form(const NCPoly& p, std::mt19937_64* rng = nullptr) const;

    /// Same rules with coefficients specialized; rules whose rhs collapse
    /// are kept.
    RewriteSystem substituted(const Bindings& b) const;

private:
    void index_rule(std::size_t i);

    unsigned max_degree_;
    std::vector<RewriteRule> rules_;
    std::array<std::int32_t, kNumGens> unary_{-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1};
    std::array<std::int32_t, kNumGens * kNumGens> quad_{};
    std::unordered_map<Word, std::size_t, WordHash> longer_;
    std::vector<std::size_t> longer_lengths_;
};

NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs);
bool ideal_membership(const NCPoly& p, const RewriteSystem& rs);

/// Normal form of every tensor factor, memoized per word.
template <std::size_t N>
Tensor<N> tensor_normal_form(const Tensor<N>& t, const RewriteSystem& rs) {
    std::map<Word, NCPoly> cache;
    auto nf = [&](const Word& w) -> const NCPoly& {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        return cache.emplace(w, rs.normal_form(NCPoly(w))).first->second;
    };
    Tensor<N> out;
    for (const auto& [key, c] : t.terms()) {
        Tensor<N> prod;
        prod.add_term(typename Tensor<N>::Key{}, c);
        for (std::size_t i = 0; i < N; ++i) {
            Tensor<N> next;
            for (const auto& [k, v] : prod.terms()) {
                const auto reduced = nf(key[i]);
                for (const auto& [w, cw] : reduced.terms()) {
                    auto nk = k;
                    nk[i] = w;
                    next.add_term(nk, v * cw);
                }
            }
            prod = std::move(next);
        }
        out += prod;
    }
    return out;
}

/// Critical pairs (overlaps and inclusions) with overlap word length at
/// most max_deg; both reduction paths must reach the same normal form.
CheckReport confluence_check(const RewriteSystem& rs, unsigned max_deg, const std::string& name = "confluence");

/// Parses generator expressions: + - * / ^, parentheses, [u,v] and
/// [u,v]_c (= uv - c*vu), parameters and integers. "delta" expands to
/// a*d - b*c - n*b*d.
NCPoly parse_ncpoly(std::string_view text);

}  // namespace jforge
