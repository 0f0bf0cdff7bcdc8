#include "jforge/rmat.hpp"

#include <algorithm>
#include <map>

#include "jforge/errors.hpp"

namespace jforge {

std::string label_str(const Label& l) {
    std::string out = "(";
    for (int i : l) out += std::to_string(i);
    return out + ")";
}

std::vector<Label> gl2_basis() { return {{1, 1}, {1, 2}, {2, 1}, {2, 2}}; }

std::vector<Label> gl3_basis() {
    return {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
}

std::vector<Label> vector_basis(int n) {
    std::vector<Label> out;
    for (int i = 1; i <= n; ++i) out.push_back({i});
    return out;
}

std::vector<Label> lex_basis(int n, int length) {
    std::vector<Label> out{{}};
    for (int l = 0; l < length; ++l) {
        std::vector<Label> next;
        for (const auto& prefix : out) {
            for (int i = 1; i <= n; ++i) {
                Label x = prefix;
                x.push_back(i);
                next.push_back(std::move(x));
            }
        }
        out = std::move(next);
    }
    return out;
}

RMat::RMat(std::vector<Label> basis) : basis_(std::move(basis)), entries_(basis_.size() * basis_.size()) {}

RMat RMat::identity(std::vector<Label> basis) {
    RMat m(std::move(basis));
    for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = 1;
    return m;
}

std::size_t RMat::index_of(const Label& l) const {
    auto it = std::find(basis_.begin(), basis_.end(), l);
    if (it == basis_.end()) throw DimensionMismatch("label " + label_str(l) + " not in basis");
    return static_cast<std::size_t>(it - basis_.begin());
}

RMat RMat::reindexed(const std::vector<Label>& basis) const {
    if (basis.size() != size()) throw DimensionMismatch("reindex: basis sizes differ");
    std::vector<std::size_t> map;
    for (const auto& l : basis) map.push_back(index_of(l));
    RMat out(basis);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) out(i, j) = (*this)(map[i], map[j]);
    }
    return out;
}

RMat RMat::block(const std::vector<Label>& labels) const {
    std::vector<std::size_t> map;
    for (const auto& l : labels) map.push_back(index_of(l));
    RMat out(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < labels.size(); ++j) out(i, j) = (*this)(map[i], map[j]);
    }
    return out;
}

RMat RMat::with_basis(std::vector<Label> basis) const {
    if (basis.size() != size()) throw DimensionMismatch("relabel: basis sizes differ");
    RMat out = *this;
    out.basis_ = std::move(basis);
    return out;
}

RMat RMat::transpose() const {
    RMat out(basis_);
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) out(i, j) = (*this)(j, i);
    }
    return out;
}

RMat RMat::substitute(const Bindings& b) const {
    RMat out(basis_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].substitute(b);
    return out;
}

std::uint32_t RMat::support() const noexcept {
    std::uint32_t mask = 0;
    for (const auto& e : entries_) mask |= e.support();
    return mask;
}

bool RMat::is_identity() const noexcept {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            const RatFunc& e = (*this)(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    }
    return true;
}

RMat operator*(const RMat& a, const RMat& b) {
    if (a.size() != b.size()) throw DimensionMismatch("matrix product: sizes differ");
    const std::size_t n = a.size();
    RMat out(a.basis_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const RatFunc& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const RatFunc& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    }
    return out;
}

RMat operator+(const RMat& a, const RMat& b) {
    if (a.basis_ != b.basis_) throw DimensionMismatch("matrix sum: bases differ");
    RMat out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

RMat operator-(const RMat& a, const RMat& b) {
    if (a.basis_ != b.basis_) throw DimensionMismatch("matrix difference: bases differ");
    RMat out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
    return out;
}

RMat build_RQ2(const RatFunc& r, const RatFunc& s) {
    RMat m(gl2_basis());
    m.at({1, 1}, {1, 1}) = r;
    m.at({1, 2}, {1, 2}) = s;
    m.at({2, 1}, {2, 1}) = s.inverse();
    m.at({2, 2}, {2, 2}) = r;
    m.at({2, 1}, {1, 2}) = r - r.inverse();
    return m;
}

RMat build_RQ3(const RatFunc& r, const RatFunc& s, const RatFunc& p, const RatFunc& q) {
    RMat m(gl3_basis());
    const RatFunc lambda = r - r.inverse();
    m.at({1, 1}, {1, 1}) = r;
    m.at({1, 2}, {1, 2}) = p.inverse();
    m.at({1, 3}, {1, 3}) = q.inverse();
    m.at({2, 1}, {2, 1}) = p;
    m.at({3, 1}, {3, 1}) = q;
    m.at({2, 1}, {1, 2}) = lambda;
    m.at({3, 1}, {1, 3}) = lambda;
    const RMat inner = build_RQ2(r, s);
    const std::vector<Label> lower{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) m.at(lower[i], lower[j]) = inner(i, j);
    }
    return m;
}

RMat build_RJ2(const RatFunc& m, const RatFunc& n) {
    RMat r = RMat::identity(gl2_basis());
    r.at({1, 2}, {1, 1}) = m;
    r.at({2, 1}, {1, 1}) = -m;
    r.at({2, 2}, {1, 1}) = m * n;
    r.at({2, 2}, {1, 2}) = n;
    r.at({2, 2}, {2, 1}) = -n;
    return r;
}

RMat build_RJ3(const RatFunc& m, const RatFunc& n, const RatFunc& k, const RatFunc& p) {
    RMat r(gl3_basis());
    r.at({1, 1}, {1, 1}) = 1;
    // K^-1 on (12),(13)
    r.at({1, 2}, {1, 2}) = p.inverse();
    r.at({1, 3}, {1, 3}) = p.inverse();
    r.at({1, 3}, {1, 2}) = -k / (p * p);
    // K on (21),(31)
    r.at({2, 1}, {2, 1}) = p;
    r.at({3, 1}, {3, 1}) = p;
    r.at({3, 1}, {2, 1}) = k;
    const RMat inner = build_RJ2(m, n);
    const std::vector<Label> lower{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) r.at(lower[i], lower[j]) = inner(i, j);
    }
    return r;
}

RMat build_RQ2() { return build_RQ2(RatFunc::param(params::r()), RatFunc::param(params::s())); }
RMat build_RQ3() {
    return build_RQ3(RatFunc::param(params::r()), RatFunc::param(params::s()), RatFunc::param(params::p()),
                     RatFunc::param(params::q()));
}
RMat build_RJ2() { return build_RJ2(RatFunc::param(params::m()), RatFunc::param(params::n())); }
RMat build_RJ3() {
    return build_RJ3(RatFunc::param(params::m()), RatFunc::param(params::n()), RatFunc::param(params::k()),
                     RatFunc::param(params::p()));
}

RMat build_g(const RatFunc& eta) {
    RMat g = RMat::identity(vector_basis(2));
    g(1, 0) = eta;
    return g;
}

RMat build_G(const RatFunc& eta) {
    RMat g = RMat::identity(vector_basis(3));
    g(2, 1) = eta;
    return g;
}

RMat build_Gprime(const RatFunc& eta) {
    RMat g = RMat::identity(vector_basis(3));
    g(2, 0) = eta;
    return g;
}

RMat kron(const RMat& a, const RMat& b) {
    std::vector<Label> basis;
    for (const auto& x : a.basis()) {
        for (const auto& y : b.basis()) {
            Label l = x;
            l.insert(l.end(), y.begin(), y.end());
            basis.push_back(std::move(l));
        }
    }
    RMat out(std::move(basis));
    const std::size_t nb = b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            const RatFunc& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    if (!b(k, l).is_zero()) out(i * nb + k, j * nb + l) = x * b(k, l);
                }
            }
        }
    }
    return out;
}

RMat inverse(const RMat& a) {
    const std::size_t n = a.size();
    RMat work = a;
    RMat inv = RMat::identity(a.basis());
    for (std::size_t col = 0; col < n; ++col) {
        // prefer a constant pivot, it keeps the entries small
        std::size_t pivot = n;
        for (std::size_t row = col; row < n; ++row) {
            if (work(row, col).is_zero()) continue;
            if (pivot == n || (work(row, col).is_constant() && !work(pivot, col).is_constant())) pivot = row;
        }
        if (pivot == n) throw SingularMatrix();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const RatFunc scale = work(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!work(col, j).is_zero()) work(col, j) *= scale;
            if (!inv(col, j).is_zero()) inv(col, j) *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work(row, col).is_zero()) continue;
            const RatFunc factor = work(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!work(col, j).is_zero()) work(row, j) -= factor * work(col, j);
                if (!inv(col, j).is_zero()) inv(row, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

RMat conjugate(const RMat& r, const RMat& g) {
    const std::size_t d = g.size();
    if (d * d != r.size()) throw DimensionMismatch("conjugate: R is not on the tensor square of g's space");
    const RMat gi = inverse(g);
    const RMat left = kron(gi, gi).reindexed(r.basis());
    const RMat right = kron(g, g).reindexed(r.basis());
    return left * r * right;
}

namespace {

using SparseRow = std::map<std::size_t, RatFunc>;
using Sparse = std::vector<SparseRow>;

Sparse sparse_product(const Sparse& a, const Sparse& b) {
    Sparse out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (const auto& [k, x] : a[i]) {
            for (const auto& [j, y] : b[k]) out[i][j] += x * y;
        }
        std::erase_if(out[i], [](const auto& kv) { return kv.second.is_zero(); });
    }
    return out;
}

}  // namespace

CheckReport qybe_check(const RMat& r, const std::string& name) {
    CheckReport rep;
    rep.name = name;
    rep.anchor = "yang-baxter";
    ScopedTimer timer(rep.ms);
    std::size_t d = 0;
    while (d * d < r.size()) ++d;
    if (d * d != r.size() || d == 0) throw DimensionMismatch("qybe_check: dimension is not a perfect square");
    const int di = static_cast<int>(d);
    const RMat lex = r.reindexed(lex_basis(di, 2));
    const std::size_t n3 = d * d * d;
    auto idx = [d](std::size_t i, std::size_t j, std::size_t k) { return (i * d + j) * d + k; };
    Sparse r12(n3), r13(n3), r23(n3);
    for (std::size_t a = 0; a < d * d; ++a) {
        for (std::size_t b = 0; b < d * d; ++b) {
            const RatFunc& v = lex(a, b);
            if (v.is_zero()) continue;
            const std::size_t i = a / d, j = a % d, i2 = b / d, j2 = b % d;
            for (std::size_t k = 0; k < d; ++k) {
                r12[idx(i, j, k)][idx(i2, j2, k)] = v;
                r13[idx(i, k, j)][idx(i2, k, j2)] = v;
                r23[idx(k, i, j)][idx(k, i2, j2)] = v;
            }
        }
    }
    const Sparse lhs = sparse_product(sparse_product(r12, r13), r23);
    const Sparse rhs = sparse_product(sparse_product(r23, r13), r12);
    const std::vector<Label> cube = lex_basis(di, 3);
    for (std::size_t i = 0; i < n3; ++i) {
        SparseRow diff = lhs[i];
        for (const auto& [j, v] : rhs[i]) diff[j] -= v;
        for (const auto& [j, v] : diff) {
            if (!v.is_zero()) rep.fail(label_str(cube[i]) + "," + label_str(cube[j]) + ": " + v.str());
        }
    }
    if (rep.pass) rep.note("all " + std::to_string(n3 * n3) + " entries of R12R13R23 - R23R13R12 vanish");
    return rep;
}

CheckReport compare_matrices(const RMat& actual, const RMat& expected, const std::string& name) {
    CheckReport rep;
    rep.name = name;
    ScopedTimer timer(rep.ms);
    if (actual.size() != expected.size()) throw DimensionMismatch("compare: sizes differ");
    const RMat a = actual.basis() == expected.basis() ? actual : actual.reindexed(expected.basis());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (!(a(i, j) == expected(i, j))) {
                rep.fail(label_str(expected.basis()[i]) + "," + label_str(expected.basis()[j]) +
                         ": got " + a(i, j).str() + ", expected " + expected(i, j).str());
            }
        }
    }
    return rep;
}

}  // namespace jforge
