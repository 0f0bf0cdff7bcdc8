#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jforge/freealg.hpp"
#include "jforge/rmat.hpp"

namespace jforge {

/// How R acts in R T1 T2 = T2 T1 R: as printed, or transposed.
enum class Convention { plain, transposed };

std::string_view convention_name(Convention c);
std::optional<Convention> parse_convention(std::string_view s);

/// 3x3 generator matrix
///   f  theta phi
///   x  a     b
///   y  c     d
/// with blocks f, Theta = (theta, phi), X = (x, y)^T and T = [[a,b],[c,d]].
struct TLayout {
    std::array<std::array<Gen, 3>, 3> grid{{{Gen::f, Gen::theta, Gen::phi},
                                            {Gen::x, Gen::a, Gen::b},
                                            {Gen::y, Gen::c, Gen::d}}};

    static TLayout standard() { return {}; }
    /// 1-based indices.
    Gen at(int i, int j) const { return grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
    std::optional<std::pair<int, int>> position(Gen g) const;
    std::vector<Gen> generators() const;
    /// 2x2 labels for the T block, used with RMat bases.
    std::array<Gen, 2> theta() const { return {grid[0][1], grid[0][2]}; }
    std::array<Gen, 2> plane() const { return {grid[1][0], grid[2][0]}; }
};

/// a*d - b*c - n*b*d
NCPoly delta_poly(const RatFunc& n = RatFunc::param(params::n()));

struct RttEntry {
    Label row, col;
    NCPoly poly;
    std::string label() const { return label_str(row) + "," + label_str(col); }
};

/// All entries of R T1 T2 - T2 T1 R in R's basis order, zeros included.
std::vector<RttEntry> rtt_entries(const RMat& r, const TLayout& layout, Convention convention);

/// Reduced row echelon form with the largest word as pivot. Every pivot
/// must be a descending pair of letters (OrientationFailure otherwise).
/// Provenance lists the entries that were combined.
RewriteSystem derive_relation_table(const std::vector<RttEntry>& entries, unsigned max_degree = 8);

/// Linear span of polynomials, kept in echelon form with the smallest
/// word as pivot; an independent check on derive_relation_table.
class LinearSpan {
public:
    void add(const NCPoly& p);
    /// Remainder of p after elimination; zero iff p is in the span.
    NCPoly reduce(const NCPoly& p) const;
    bool contains(const NCPoly& p) const { return reduce(p).is_zero(); }
    std::size_t rank() const noexcept { return rows_.size(); }

private:
    std::vector<std::pair<Word, NCPoly>> rows_;  // pivot word, row with pivot coefficient 1
};

/// Entries reduce to 0 under the table, and every rule lies in the span
/// of the entries.
CheckReport check_containment(const std::vector<RttEntry>& entries, const RewriteSystem& table);

/// Solves sum_i x_i * basis[i] = target blockwise; nullopt if inconsistent.
std::optional<std::vector<RatFunc>> solve_linear(const std::vector<NCPoly>& target,
                                                 const std::vector<std::vector<NCPoly>>& basis);

/// A printed relation lhs = rhs with the group it belongs to.
struct PrintedRelation {
    std::string group;
    std::string lhs, rhs;
};

/// The 27 relations of the Jordanian GL(3) algebra in the bracket grammar.
const std::vector<PrintedRelation>& printed_relations();

/// Reduces lhs - rhs for each printed relation; on failure shows both
/// sides' normal forms. The specialization is applied to the relations.
CheckReport verify_printed_relations(const RewriteSystem& rs, const Bindings& specialization = {});

/// [delta,b] = 0; [delta,u] for u = a,c,d against their printed forms,
/// and whether delta commutes with the T block under this system.
CheckReport delta_centrality(const RewriteSystem& rs, const Bindings& specialization = {});

/// Every rule reads uv -> vu.
CheckReport check_commutative(const RewriteSystem& rs, const std::string& name);

/// Tries both conventions; returns the one whose table exists and reduces
/// every printed relation, with per-convention notes in the report.
struct ConventionChoice {
    std::optional<Convention> chosen;
    CheckReport report;
};
ConventionChoice resolve_convention(const RMat& r, const TLayout& layout);

}  // namespace jforge
