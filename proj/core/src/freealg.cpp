#include "jforge/freealg.hpp"

#include <algorithm>
#include <cstdlib>

#include "jforge/errors.hpp"

namespace jforge {

namespace {

constexpr std::array<std::string_view, kNumGens> kGenNames{"f", "finv", "x", "y", "phi", "theta", "b",
                                                           "a", "d",    "c", "dinv", "e", "xi"};

}  // namespace

std::string_view gen_name(Gen g) { return kGenNames[rank(g)]; }

std::optional<Gen> gen_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumGens; ++i) {
        if (kGenNames[i] == name) return static_cast<Gen>(i);
    }
    return std::nullopt;
}

const std::array<Gen, kNumGens>& all_gens() {
    static const std::array<Gen, kNumGens> gens = [] {
        std::array<Gen, kNumGens> g{};
        for (std::size_t i = 0; i < kNumGens; ++i) g[i] = static_cast<Gen>(i);
        return g;
    }();
    return gens;
}

Word::Word(std::initializer_list<Gen> gens) {
    for (Gen g : gens) push_back(g);
}

void Word::push_back(Gen g) {
    if (len_ == kCapacity) throw DegreeOverflow("word longer than " + std::to_string(kCapacity) + " letters");
    g_[len_++] = static_cast<std::uint8_t>(g);
}

Word Word::sub(std::size_t pos, std::size_t count) const {
    Word w;
    std::memcpy(w.g_.data(), g_.data() + pos, count);
    w.len_ = static_cast<std::uint8_t>(count);
    return w;
}

Word Word::splice(std::size_t pos, std::size_t count, const Word& middle) const {
    const std::size_t total = len_ - count + middle.len_;
    if (total > kCapacity) throw DegreeOverflow("word longer than " + std::to_string(kCapacity) + " letters");
    Word w;
    std::memcpy(w.g_.data(), g_.data(), pos);
    std::memcpy(w.g_.data() + pos, middle.g_.data(), middle.len_);
    std::memcpy(w.g_.data() + pos + middle.len_, g_.data() + pos + count, len_ - pos - count);
    w.len_ = static_cast<std::uint8_t>(total);
    return w;
}

bool Word::contains(Gen g) const noexcept {
    return std::memchr(g_.data(), static_cast<int>(g), len_) != nullptr;
}

Word operator*(const Word& a, const Word& b) { return a.splice(a.len_, 0, b); }

std::string Word::str() const {
    if (len_ == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < len_;) {
        std::size_t j = i;
        while (j < len_ && g_[j] == g_[i]) ++j;
        if (!out.empty()) out += '*';
        out += gen_name((*this)[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = w.size() * 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < w.size(); ++i) h = (h ^ w.data()[i]) * 0x100000001b3ull;
    return h;
}

NCPoly::NCPoly(const RatFunc& c) {
    if (!c.is_zero()) terms_.emplace(Word(), c);
}

NCPoly::NCPoly(Gen g) { terms_.emplace(Word(g), RatFunc(1)); }

NCPoly::NCPoly(const Word& w, const RatFunc& c) {
    if (!c.is_zero()) terms_.emplace(w, c);
}

RatFunc NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RatFunc() : it->second;
}

bool NCPoly::mentions(Gen g) const noexcept {
    for (const auto& [w, c] : terms_) {
        if (w.contains(g)) return true;
    }
    return false;
}

void NCPoly::add_term(const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    }
    return out;
}

NCPoly NCPoly::scaled(const RatFunc& c) const {
    NCPoly out;
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
    return out;
}

NCPoly NCPoly::substitute(const Bindings& b) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) out.add_term(w, c.substitute(b));
    return out;
}

NCPoly NCPoly::filtered(const std::function<bool(const Word&)>& pred) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) {
        if (pred(w)) out.terms_.emplace(w, c);
    }
    return out;
}

namespace {

std::string coeff_prefix(const RatFunc& c, bool& negative) {
    negative = false;
    RatFunc v = c;
    if (v.num().leading().coeff < 0) {
        negative = true;
        v = -v;
    }
    if (v.is_one()) return {};
    std::string s = v.str();
    const bool simple = v.is_polynomial() && v.num().is_monomial() && v.num().leading().coeff.get_den() == 1;
    return simple ? s : "(" + s + ")";
}

}  // namespace

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        bool negative = false;
        std::string c = coeff_prefix(it->second, negative);
        std::string term;
        if (it->first.empty()) term = c.empty() ? "1" : c;
        else term = c.empty() ? it->first.str() : c + "*" + it->first.str();
        if (out.empty()) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
    }
    return out;
}

NCPoly commutator(const NCPoly& u, const NCPoly& v, const RatFunc& c) { return u * v - (v * u).scaled(c); }

TensorElem tensor(const NCPoly& p, const NCPoly& q) {
    TensorElem t;
    for (const auto& [wp, cp] : p.terms()) {
        for (const auto& [wq, cq] : q.terms()) t.add_term({wp, wq}, cp * cq);
    }
    return t;
}

Tensor<3> tensor(const NCPoly& p, const NCPoly& q, const NCPoly& r) {
    Tensor<3> t;
    for (const auto& [wp, cp] : p.terms()) {
        for (const auto& [wq, cq] : q.terms()) {
            for (const auto& [wr, cr] : r.terms()) t.add_term({wp, wq, wr}, cp * cq * cr);
        }
    }
    return t;
}

std::size_t RewriteSystem::step_bound() {
    if (const char* env = std::getenv("JFORGE_MAX_STEPS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultStepBound;
}

void RewriteSystem::add_rule(const Word& lhs, const NCPoly& rhs, std::string provenance) {
    if (lhs.empty()) throw OrientationFailure("rule with empty left-hand side");
    if (find(lhs)) throw RuleConflict("second rule for " + lhs.str());
    if (!rhs.is_zero() && !(rhs.leading().first < lhs)) {
        throw OrientationFailure("rule " + lhs.str() + " -> " + rhs.str() + " does not decrease the word order");
    }
    rules_.push_back({lhs, rhs, std::move(provenance)});
    index_rule(rules_.size() - 1);
}

void RewriteSystem::index_rule(std::size_t i) {
    const Word& lhs = rules_[i].lhs;
    if (lhs.size() == 1) {
        unary_[rank(lhs[0])] = static_cast<std::int32_t>(i);
    } else if (lhs.size() == 2) {
        quad_[rank(lhs[0]) * kNumGens + rank(lhs[1])] = static_cast<std::int32_t>(i);
    } else {
        longer_.emplace(lhs, i);
        if (std::find(longer_lengths_.begin(), longer_lengths_.end(), lhs.size()) == longer_lengths_.end()) {
            longer_lengths_.push_back(lhs.size());
            std::sort(longer_lengths_.begin(), longer_lengths_.end());
        }
    }
}

const RewriteRule* RewriteSystem::find(const Word& lhs) const {
    std::int32_t idx = -1;
    if (lhs.size() == 1) {
        idx = unary_[rank(lhs[0])];
    } else if (lhs.size() == 2) {
        idx = quad_[rank(lhs[0]) * kNumGens + rank(lhs[1])];
    } else {
        auto it = longer_.find(lhs);
        if (it != longer_.end()) idx = static_cast<std::int32_t>(it->second);
    }
    return idx < 0 ? nullptr : &rules_[static_cast<std::size_t>(idx)];
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(const Word& w) const {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t u = unary_[rank(w[i])];
        if (u >= 0) return std::make_pair(i, static_cast<std::size_t>(u));
        if (i + 1 < n) {
            const std::int32_t q = quad_[rank(w[i]) * kNumGens + rank(w[i + 1])];
            if (q >= 0) return std::make_pair(i, static_cast<std::size_t>(q));
        }
        for (std::size_t len : longer_lengths_) {
            if (i + len > n) break;
            auto it = longer_.find(w.sub(i, len));
            if (it != longer_.end()) return std::make_pair(i, it->second);
        }
    }
    return std::nullopt;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p, std::mt19937_64* rng) const {
    if (p.degree() > max_degree_) {
        throw DegreeOverflow("degree " + std::to_string(p.degree()) + " exceeds the bound " +
                             std::to_string(max_degree_));
    }
    const std::size_t bound = step_bound();
    NCPoly::Terms work(p.terms().begin(), p.terms().end());
    NCPoly result;
    std::size_t steps = 0;
    std::vector<std::pair<std::size_t, std::size_t>> all;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        const Word w = top->first;
        const RatFunc c = std::move(top->second);
        work.erase(top);

        std::optional<std::pair<std::size_t, std::size_t>> hit;
        if (rng) {
            all.clear();
            const std::size_t max_len = longer_lengths_.empty() ? 2 : std::max<std::size_t>(2, longer_lengths_.back());
            for (std::size_t i = 0; i < w.size(); ++i) {
                for (std::size_t len = 1; i + len <= w.size() && len <= max_len; ++len) {
                    if (const RewriteRule* r = find(w.sub(i, len))) {
                        all.emplace_back(i, static_cast<std::size_t>(r - rules_.data()));
                    }
                }
            }
            if (!all.empty()) hit = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(*rng)];
        } else {
            hit = find_redex(w);
        }
        if (!hit) {
            result.add_term(w, c);
            continue;
        }
        if (++steps > bound) {
            throw NonTerminating("rewriting exceeded " + std::to_string(bound) + " steps");
        }
        const RewriteRule& rule = rules_[hit->second];
        for (const auto& [u, v] : rule.rhs.terms()) {
            const Word nw = w.splice(hit->first, rule.lhs.size(), u);
            auto [it, inserted] = work.try_emplace(nw, c * v);
            if (!inserted) {
                it->second += c * v;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return result;
}

std::optional<Word> RewriteSystem::add_relation(const NCPoly& p, std::string provenance) {
    const NCPoly r = normal_form(p);
    if (r.is_zero()) return std::nullopt;
    const auto& [lead, c] = r.leading();
    const Word lhs = lead;
    NCPoly rhs = (NCPoly(lhs, c) - r).scaled(c.inverse());
    add_rule(lhs, rhs, std::move(provenance));
    return lhs;
}

RewriteSystem RewriteSystem::substituted(const Bindings& b) const {
    RewriteSystem out(max_degree_);
    for (const auto& r : rules_) out.add_rule(r.lhs, r.rhs.substitute(b), r.provenance);
    return out;
}

NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs) { return rs.normal_form(p); }

bool ideal_membership(const NCPoly& p, const RewriteSystem& rs) { return rs.normal_form(p).is_zero(); }

}  // namespace jforge
