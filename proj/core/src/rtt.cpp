#include "jforge/rtt.hpp"

#include <algorithm>

#include "jforge/errors.hpp"

namespace jforge {

std::string_view convention_name(Convention c) { return c == Convention::plain ? "plain" : "transposed"; }

std::optional<Convention> parse_convention(std::string_view s) {
    if (s == "plain") return Convention::plain;
    if (s == "transposed") return Convention::transposed;
    return std::nullopt;
}

std::optional<std::pair<int, int>> TLayout::position(Gen g) const {
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (at(i, j) == g) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

std::vector<Gen> TLayout::generators() const {
    std::vector<Gen> out;
    for (const auto& row : grid) out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

NCPoly delta_poly(const RatFunc& n) {
    return NCPoly(Word{Gen::a, Gen::d}) - NCPoly(Word{Gen::b, Gen::c}) - NCPoly(Word{Gen::b, Gen::d}, n);
}

std::vector<RttEntry> rtt_entries(const RMat& r_in, const TLayout& layout, Convention convention) {
    const RMat r = convention == Convention::plain ? r_in : r_in.transpose();
    const auto& basis = r.basis();
    for (const auto& l : basis) {
        if (l.size() != 2) throw DimensionMismatch("rtt_entries: R must act on a tensor square");
    }
    std::vector<RttEntry> out;
    for (std::size_t row = 0; row < basis.size(); ++row) {
        const int i = basis[row][0], j = basis[row][1];
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const int a = basis[col][0], b = basis[col][1];
            NCPoly p;
            for (std::size_t mid = 0; mid < basis.size(); ++mid) {
                const int k = basis[mid][0], l = basis[mid][1];
                const RatFunc& left = r(row, mid);
                if (!left.is_zero()) p.add_term(Word{layout.at(k, a), layout.at(l, b)}, left);
                const RatFunc& right = r(mid, col);
                if (!right.is_zero()) p.add_term(Word{layout.at(j, l), layout.at(i, k)}, -right);
            }
            out.push_back({basis[row], basis[col], std::move(p)});
        }
    }
    return out;
}

namespace {

struct EchelonRow {
    NCPoly poly;
    std::vector<std::size_t> sources;
};

void merge_sources(std::vector<std::size_t>& into, const std::vector<std::size_t>& from) {
    std::vector<std::size_t> out;
    std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
    into = std::move(out);
}

void eliminate(EchelonRow& target, const EchelonRow& pivot, const Word& w) {
    const RatFunc c = target.poly.coefficient(w);
    if (c.is_zero()) return;
    target.poly -= pivot.poly.scaled(c);
    merge_sources(target.sources, pivot.sources);
}

}  // namespace

RewriteSystem derive_relation_table(const std::vector<RttEntry>& entries, unsigned max_degree) {
    std::vector<EchelonRow> rows;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!entries[i].poly.is_zero()) rows.push_back({entries[i].poly, {i}});
    }
    std::vector<std::pair<Word, EchelonRow>> pivots;
    while (true) {
        std::erase_if(rows, [](const EchelonRow& r) { return r.poly.is_zero(); });
        if (rows.empty()) break;
        auto best = std::max_element(rows.begin(), rows.end(), [](const EchelonRow& x, const EchelonRow& y) {
            return x.poly.leading().first < y.poly.leading().first;
        });
        EchelonRow pivot = std::move(*best);
        rows.erase(best);
        const Word w = pivot.poly.leading().first;
        pivot.poly = pivot.poly.scaled(pivot.poly.leading().second.inverse());
        for (auto& r : rows) eliminate(r, pivot, w);
        for (auto& [pw, r] : pivots) eliminate(r, pivot, w);
        pivots.emplace_back(w, std::move(pivot));
    }
    std::sort(pivots.begin(), pivots.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    RewriteSystem rs(max_degree);
    for (auto& [w, row] : pivots) {
        if (w.size() != 2 || !(rank(w[0]) > rank(w[1]))) {
            throw OrientationFailure("relation with leading word " + w.str() +
                                     " is not a descending pair under the generator order");
        }
        std::string prov = "RTT";
        for (std::size_t i = 0; i < row.sources.size(); ++i) {
            if (i == 4) {
                prov += " +" + std::to_string(row.sources.size() - 4) + " more";
                break;
            }
            prov += (i ? " + " : " ") + entries[row.sources[i]].label();
        }
        rs.add_rule(w, NCPoly(w) - row.poly, std::move(prov));
    }
    return rs;
}

void LinearSpan::add(const NCPoly& p) {
    NCPoly r = reduce(p);
    if (r.is_zero()) return;
    const auto& [w, c] = *r.terms().begin();
    const Word pivot = w;
    rows_.emplace_back(pivot, r.scaled(c.inverse()));
}

NCPoly LinearSpan::reduce(const NCPoly& p) const {
    NCPoly r = p;
    for (const auto& [w, row] : rows_) {
        const RatFunc c = r.coefficient(w);
        if (!c.is_zero()) r -= row.scaled(c);
    }
    return r;
}

CheckReport check_containment(const std::vector<RttEntry>& entries, const RewriteSystem& table) {
    CheckReport rep;
    rep.name = "relations:containment";
    rep.anchor = "rtt";
    ScopedTimer timer(rep.ms);
    LinearSpan span;
    std::size_t nonzero = 0;
    for (const auto& e : entries) {
        if (e.poly.is_zero()) continue;
        ++nonzero;
        span.add(e.poly);
        const NCPoly r = table.normal_form(e.poly);
        if (!r.is_zero()) rep.fail("entry " + e.label() + " leaves " + r.str());
    }
    for (const auto& rule : table.rules()) {
        const NCPoly r = span.reduce(NCPoly(rule.lhs) - rule.rhs);
        if (!r.is_zero()) rep.fail("rule " + rule.lhs.str() + " is outside the span of the entries: " + r.str());
    }
    if (span.rank() != table.rules().size()) {
        rep.fail("entry span has rank " + std::to_string(span.rank()) + " but the table has " +
                 std::to_string(table.rules().size()) + " rules");
    }
    rep.note(std::to_string(nonzero) + " nonzero entries reduce to 0; " + std::to_string(table.rules().size()) +
             " rules lie in their span (rank " + std::to_string(span.rank()) + ")");
    return rep;
}

std::optional<std::vector<RatFunc>> solve_linear(const std::vector<NCPoly>& target,
                                                 const std::vector<std::vector<NCPoly>>& basis) {
    const std::size_t n = basis.size();
    std::map<std::pair<std::size_t, Word>, std::size_t> row_of;
    auto row_index = [&](std::size_t block, const Word& w) {
        return row_of.try_emplace({block, w}, row_of.size()).first->second;
    };
    for (std::size_t blk = 0; blk < target.size(); ++blk) {
        for (const auto& [w, c] : target[blk].terms()) row_index(blk, w);
        for (const auto& v : basis) {
            for (const auto& [w, c] : v.at(blk).terms()) row_index(blk, w);
        }
    }
    std::vector<std::vector<RatFunc>> m(row_of.size(), std::vector<RatFunc>(n + 1));
    for (std::size_t blk = 0; blk < target.size(); ++blk) {
        for (const auto& [w, c] : target[blk].terms()) m[row_of.at({blk, w})][n] = c;
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [w, c] : basis[j][blk].terms()) m[row_of.at({blk, w})][j] = c;
        }
    }
    std::vector<std::size_t> pivot_col;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < n && prow < m.size(); ++col) {
        std::size_t r = prow;
        while (r < m.size() && m[r][col].is_zero()) ++r;
        if (r == m.size()) continue;
        std::swap(m[r], m[prow]);
        const RatFunc inv = m[prow][col].inverse();
        for (auto& v : m[prow]) {
            if (!v.is_zero()) v *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == prow || m[i][col].is_zero()) continue;
            const RatFunc f = m[i][col];
            for (std::size_t j = col; j <= n; ++j) {
                if (!m[prow][j].is_zero()) m[i][j] -= f * m[prow][j];
            }
        }
        pivot_col.push_back(col);
        ++prow;
    }
    for (std::size_t i = prow; i < m.size(); ++i) {
        if (!m[i][n].is_zero()) return std::nullopt;
    }
    std::vector<RatFunc> x(n);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][n];
    return x;
}

const std::vector<PrintedRelation>& printed_relations() {
    static const std::vector<PrintedRelation> rels{
        {"gl2-relations", "[a,b]", "n*b^2"},
        {"gl2-relations", "[a,c]", "m*(delta - a^2)"},
        {"gl2-relations", "[a,d]", "n*b*d - m*b*a"},
        {"gl2-relations", "[b,d]", "-m*b^2"},
        {"gl2-relations", "[b,c]", "-m*b*a - n*d*b"},
        {"gl2-relations", "[c,d]", "n*(d^2 - delta)"},
        {"delta-relations", "[delta,a]", "(m-n)*delta*b"},
        {"delta-relations", "[delta,b]", "0"},
        {"delta-relations", "[delta,c]", "(m-n)*(delta*d - a*delta)"},
        {"delta-relations", "[delta,d]", "(n-m)*delta*b"},
        {"f-relations", "[a,f]", "(k/p)*f*b"},
        {"f-relations", "[b,f]", "0"},
        {"f-relations", "[c,f]", "(k/p)*(f*d - a*f)"},
        {"f-relations", "[d,f]", "-(k/p)*b*f"},
        {"plane-cross-relations", "[a,x]_p", "k*x*b"},
        {"plane-cross-relations", "[b,x]_p", "0"},
        {"plane-cross-relations", "[c,x]_p", "k*x*d + m*a*x"},
        {"plane-cross-relations", "[d,x]_p", "m*b*x"},
        {"plane-cross-relations", "[a,y]_p", "k*y*b - m*a*x"},
        {"plane-cross-relations", "[b,y]_p", "-m*b*x"},
        {"plane-cross-relations", "[c,y]_p", "k*y*d + n*c*x - n*a*y - m*n*a*x"},
        {"plane-cross-relations", "[d,y]_p", "n*d*x - n*b*y - m*n*b*x"},
        {"plane-cross-relations", "delta*x", "p^2*x*delta"},
        {"plane-cross-relations", "delta*y", "p^2*y*delta + (n-m)*delta*x"},
        {"f-plane-relations", "[f,x]_p", "0"},
        {"f-plane-relations", "[f,y]_p", "-k*x*f"},
        {"plane-relation", "[x,y]", "-m*x^2"},
    };
    return rels;
}

CheckReport verify_printed_relations(const RewriteSystem& rs, const Bindings& specialization) {
    CheckReport rep;
    rep.name = "relations:printed";
    rep.anchor = "gl2-relations,delta-relations,f-relations,plane-cross-relations,f-plane-relations,plane-relation";
    ScopedTimer timer(rep.ms);
    std::size_t ok = 0;
    for (const auto& rel : printed_relations()) {
        const NCPoly lhs = parse_ncpoly(rel.lhs).substitute(specialization);
        const NCPoly rhs = parse_ncpoly(rel.rhs).substitute(specialization);
        const NCPoly residual = rs.normal_form(lhs - rhs);
        const std::string text = rel.lhs + " = " + rel.rhs;
        if (residual.is_zero()) {
            ++ok;
            rep.note("0  " + text + "  [" + rel.group + "]");
        } else {
            rep.fail("FAIL  " + text + "  [" + rel.group + "]  residual " + residual.str() + ";  lhs reduces to " +
                     rs.normal_form(lhs).str() + ", printed rhs reduces to " + rs.normal_form(rhs).str());
        }
    }
    rep.note(std::to_string(ok) + "/" + std::to_string(printed_relations().size()) +
             " printed relations reduce to 0");
    return rep;
}

CheckReport delta_centrality(const RewriteSystem& rs, const Bindings& specialization) {
    CheckReport rep;
    rep.name = "delta-centrality";
    rep.anchor = "delta-relations";
    ScopedTimer timer(rep.ms);
    const NCPoly delta = delta_poly().substitute(specialization);
    bool central = true;
    for (const auto& rel : printed_relations()) {
        if (rel.group != "delta-relations") continue;
        const NCPoly lhs = parse_ncpoly(rel.lhs).substitute(specialization);
        const NCPoly rhs = parse_ncpoly(rel.rhs).substitute(specialization);
        const NCPoly got = rs.normal_form(lhs);
        const NCPoly residual = got - rs.normal_form(rhs);
        if (!residual.is_zero()) rep.fail(rel.lhs + " = " + rel.rhs + " leaves " + residual.str());
        if (!got.is_zero()) {
            central = false;
            rep.note(rel.lhs + " = " + got.str());
        } else {
            rep.note(rel.lhs + " = 0");
        }
    }
    if (!rs.normal_form(commutator(delta, NCPoly(Gen::b))).is_zero()) rep.fail("[delta,b] does not vanish");
    rep.note(std::string("central: ") + (central ? "true" : "false"));
    return rep;
}

CheckReport check_commutative(const RewriteSystem& rs, const std::string& name) {
    CheckReport rep;
    rep.name = name;
    rep.anchor = "classical-limit";
    ScopedTimer timer(rep.ms);
    for (const auto& rule : rs.rules()) {
        const bool swap = rule.lhs.size() == 2 && rule.rhs == NCPoly(Word{rule.lhs[1], rule.lhs[0]});
        if (!swap) rep.fail(rule.lhs.str() + " -> " + rule.rhs.str());
    }
    rep.note(std::to_string(rs.rules().size()) + " rules checked");
    return rep;
}

ConventionChoice resolve_convention(const RMat& r, const TLayout& layout) {
    ConventionChoice out;
    out.report.name = "relations:convention";
    out.report.anchor = "rtt";
    ScopedTimer timer(out.report.ms);
    std::optional<std::size_t> best;
    bool tie = false;
    for (Convention c : {Convention::plain, Convention::transposed}) {
        const std::string name(convention_name(c));
        try {
            const RewriteSystem rs = derive_relation_table(rtt_entries(r, layout, c));
            const CheckReport rel = verify_printed_relations(rs);
            const std::size_t ok = static_cast<std::size_t>(
                std::count_if(rel.details.begin(), rel.details.end(), [](const std::string& d) { return d.rfind("0  ", 0) == 0; }));
            out.report.note(name + ": " + std::to_string(rs.rules().size()) + " rules, " + std::to_string(ok) + "/" +
                            std::to_string(printed_relations().size()) + " printed relations reduce");
            if (!best || ok > *best) {
                best = ok;
                out.chosen = c;
                tie = false;
            } else if (ok == *best) {
                tie = true;
            }
        } catch (const OrientationFailure& e) {
            out.report.note(name + ": no normal-ordering table (" + std::string(e.what()) + ")");
        }
    }
    if (!out.chosen || tie) {
        out.report.fail("no single convention is singled out");
        out.chosen.reset();
    } else {
        out.report.note("chosen: " + std::string(convention_name(*out.chosen)));
    }
    return out;
}

}  // namespace jforge
