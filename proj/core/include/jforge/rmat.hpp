#pragma once

#include <string>
#include <vector>

#include "jforge/ratfunc.hpp"
#include "jforge/report.hpp"

namespace jforge {

/// Row/column label: a single index for plain matrices, an index pair
/// (ij) for operators on a tensor square.
using Label = std::vector<int>;

std::string label_str(const Label& l);

/// Basis (11),(12),(21),(22).
std::vector<Label> gl2_basis();
/// Basis (11),(12),(13),(21),(31),(22),(23),(32),(33): the two-dimensional
/// block (22),(23),(32),(33) is kept contiguous at the end.
std::vector<Label> gl3_basis();
/// Single-index basis (1),...,(n).
std::vector<Label> vector_basis(int n);
/// All index tuples of the given length in lexicographic order.
std::vector<Label> lex_basis(int n, int length);

/// Square matrix over RatFunc with explicit row/column labels.
class RMat {
public:
    RMat() = default;
    explicit RMat(std::vector<Label> basis);
    static RMat identity(std::vector<Label> basis);

    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<Label>& basis() const noexcept { return basis_; }
    std::size_t index_of(const Label& l) const;

    RatFunc& operator()(std::size_t i, std::size_t j) { return entries_[i * size() + j]; }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
    RatFunc& at(const Label& row, const Label& col) { return (*this)(index_of(row), index_of(col)); }
    const RatFunc& at(const Label& row, const Label& col) const { return (*this)(index_of(row), index_of(col)); }

    /// Same operator expressed in another ordering of the same labels.
    RMat reindexed(const std::vector<Label>& basis) const;
    /// Principal submatrix on the given labels.
    RMat block(const std::vector<Label>& labels) const;
    /// Same entries under new labels (positional).
    RMat with_basis(std::vector<Label> basis) const;
    RMat transpose() const;
    RMat substitute(const Bindings& b) const;
    std::uint32_t support() const noexcept;
    bool is_identity() const noexcept;

    friend RMat operator*(const RMat& a, const RMat& b);
    friend RMat operator+(const RMat& a, const RMat& b);
    friend RMat operator-(const RMat& a, const RMat& b);
    friend bool operator==(const RMat& a, const RMat& b) noexcept {
        return a.basis_ == b.basis_ && a.entries_ == b.entries_;
    }

private:
    std::vector<Label> basis_;
    std::vector<RatFunc> entries_;
};

RMat build_RQ2(const RatFunc& r, const RatFunc& s);
RMat build_RQ3(const RatFunc& r, const RatFunc& s, const RatFunc& p, const RatFunc& q);
RMat build_RJ2(const RatFunc& m, const RatFunc& n);
RMat build_RJ3(const RatFunc& m, const RatFunc& n, const RatFunc& k, const RatFunc& p);
/// The same constructors over the standard symbols.
RMat build_RQ2();
RMat build_RQ3();
RMat build_RJ2();
RMat build_RJ3();

/// [[1,0],[eta,1]]
RMat build_g(const RatFunc& eta);
/// block-diag(1, g(eta))
RMat build_G(const RatFunc& eta);
/// 3x3 identity with eta at row 3, column 1.
RMat build_Gprime(const RatFunc& eta);

/// Kronecker product; labels are concatenated, A's index major.
RMat kron(const RMat& a, const RMat& b);

/// Gauss-Jordan inverse; SingularMatrix when not invertible.
RMat inverse(const RMat& a);

/// (g^-1 (x) g^-1) R (g (x) g), reported in R's basis.
RMat conjugate(const RMat& r, const RMat& g);

/// R12 R13 R23 - R23 R13 R12 over the cube of the underlying space.
CheckReport qybe_check(const RMat& r, const std::string& name = "qybe");

/// Entrywise structural comparison listing mismatches.
CheckReport compare_matrices(const RMat& actual, const RMat& expected, const std::string& name);

}  // namespace jforge
