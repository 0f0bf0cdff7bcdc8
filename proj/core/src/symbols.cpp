#include "jforge/symbols.hpp"

#include <deque>
#include <mutex>

#include "jforge/errors.hpp"

namespace jforge {
namespace {

class SymbolTable {
public:
    SymbolTable() {
        for (const char* name : {"r", "s", "p", "q", "h", "eta", "m", "n", "k", "eps"}) {
            intern(name);
        }
    }

    std::size_t intern(std::string_view name) {
        std::lock_guard lock(mutex_);
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) return i;
        }
        if (names_.size() >= kMaxParams) {
            throw Error("too many parameter symbols (limit " + std::to_string(kMaxParams) + ")");
        }
        names_.emplace_back(name);
        return names_.size() - 1;
    }

    bool find(std::string_view name, std::size_t& out) const {
        std::lock_guard lock(mutex_);
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) {
                out = i;
                return true;
            }
        }
        return false;
    }

    const std::string& name(std::size_t i) const {
        std::lock_guard lock(mutex_);
        if (i >= names_.size()) throw Error("unknown parameter index " + std::to_string(i));
        return names_[i];
    }

private:
    mutable std::mutex mutex_;
    // deque: references handed out by name() stay valid on growth
    std::deque<std::string> names_;
};

SymbolTable& table() {
    static SymbolTable instance;
    return instance;
}

}  // namespace

Param::Param(std::string_view name) : index_(table().intern(name)) {}

Param Param::from_index(std::size_t index) {
    Param p;
    table().name(index);
    p.index_ = index;
    return p;
}

bool Param::lookup(std::string_view name, Param& out) {
    std::size_t i = 0;
    if (!table().find(name, i)) return false;
    out.index_ = i;
    return true;
}

const std::string& Param::name() const { return table().name(index_); }

namespace params {
Param r() { return Param::from_index(0); }
Param s() { return Param::from_index(1); }
Param p() { return Param::from_index(2); }
Param q() { return Param::from_index(3); }
Param h() { return Param::from_index(4); }
Param eta() { return Param::from_index(5); }
Param m() { return Param::from_index(6); }
Param n() { return Param::from_index(7); }
Param k() { return Param::from_index(8); }
Param eps() { return Param::from_index(9); }
}  // namespace params

}  // namespace jforge
