#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <jforge/errors.hpp>
#include <jforge/expr.hpp>
#include <jforge/rtt.hpp>
#include <jforge/serialize.hpp>

#include "oracles.hpp"

using namespace jforge;

namespace {

NCPoly N(const char* s) { return parse_ncpoly(s); }

const std::vector<RttEntry>& entries() {
    static const auto e = rtt_entries(build_RJ3(), TLayout{}, Convention::plain);
    return e;
}

const RewriteSystem& table() {
    static const RewriteSystem rs = derive_relation_table(entries());
    return rs;
}

bool reduces(const char* lhs, const char* rhs) { return table().normal_form(N(lhs) - N(rhs)).is_zero(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Layout, Grid) {
    const TLayout t;
    EXPECT_EQ(t.at(1, 1), Gen::f);
    EXPECT_EQ(t.at(1, 2), Gen::theta);
    EXPECT_EQ(t.at(1, 3), Gen::phi);
    EXPECT_EQ(t.at(2, 1), Gen::x);
    EXPECT_EQ(t.at(3, 1), Gen::y);
    EXPECT_EQ(t.at(2, 2), Gen::a);
    EXPECT_EQ(t.at(3, 3), Gen::d);
    EXPECT_EQ(t.theta(), (std::array<Gen, 2>{Gen::theta, Gen::phi}));
    EXPECT_EQ(t.plane(), (std::array<Gen, 2>{Gen::x, Gen::y}));
    EXPECT_EQ(*t.position(Gen::c), std::make_pair(3, 2));
}

TEST(RttEntries, IdentityGivesCommutators) {
    const TLayout t;
    for (const auto& e : rtt_entries(RMat::identity(gl3_basis()), t, Convention::plain)) {
        const NCPoly expect = NCPoly(t.at(e.row[0], e.col[0])) * NCPoly(t.at(e.row[1], e.col[1])) -
                              NCPoly(t.at(e.row[1], e.col[1])) * NCPoly(t.at(e.row[0], e.col[0]));
        EXPECT_EQ(e.poly, expect) << e.label();
    }
}

TEST(RttEntries, MatchExplicitMatrixProducts) {
    for (const RMat& r : {build_RJ3(), build_RQ3()}) {
        const auto byhand = oracle::rtt_by_matrices(r, TLayout{});
        const auto plain = rtt_entries(r, TLayout{}, Convention::plain);
        ASSERT_EQ(plain.size(), 81u);
        for (const auto& e : plain) EXPECT_EQ(e.poly, byhand[r.index_of(e.row)][r.index_of(e.col)]) << e.label();
        const auto transposed = rtt_entries(r, TLayout{}, Convention::transposed);
        const auto byhand_t = oracle::rtt_by_matrices(r.transpose(), TLayout{});
        for (const auto& e : transposed) EXPECT_EQ(e.poly, byhand_t[r.index_of(e.row)][r.index_of(e.col)]);
    }
}

TEST(Table, PlaneRule) {
    const RewriteRule* rule = table().find(Word{Gen::y, Gen::x});
    ASSERT_NE(rule, nullptr);
    EXPECT_EQ(rule->rhs, N("x*y + m*x^2"));
}

TEST(Table, PrintedExamples) {
    EXPECT_TRUE(reduces("[a,b]", "n*b^2"));
    EXPECT_TRUE(reduces("[a,f]", "(k/p)*f*b"));
    EXPECT_TRUE(reduces("[f,x]_p", "0"));
    EXPECT_TRUE(reduces("[b,f]", "0"));
    EXPECT_TRUE(reduces("delta*x", "p^2*x*delta"));
    EXPECT_TRUE(reduces("[delta,a]", "(m-n)*delta*b"));
    EXPECT_TRUE(reduces("[x,y]", "-m*x^2"));
}

TEST(Table, FYRelationHasOppositeSign) {
    // the RTT entries force [f,y]_p = +k x f
    EXPECT_TRUE(reduces("[f,y]_p", "k*x*f"));
    EXPECT_FALSE(reduces("[f,y]_p", "-k*x*f"));
}

TEST(Table, ThetaRulesCarryProvenance) {
    int theta_rules = 0;
    for (const auto& r : table().rules()) {
        EXPECT_EQ(r.provenance.rfind("RTT ", 0), 0u) << r.lhs.str();
        theta_rules += r.lhs.contains(Gen::theta) || r.lhs.contains(Gen::phi);
    }
    EXPECT_EQ(table().rules().size(), 36u);
    EXPECT_GT(theta_rules, 0);
}

TEST(Table, TwoWayContainment) {
    EXPECT_TRUE(check_containment(entries(), table()).pass);
    const oracle::NaiveReducer naive(table());
    for (const auto& e : entries()) EXPECT_TRUE(naive.reduce(e.poly).is_zero()) << e.label();
}

TEST(Table, Confluent) { EXPECT_TRUE(confluence_check(table(), 3).pass); }

TEST(Table, MatchesFixture) {
    const RewriteSystem fx = table_from_json(slurp(JFORGE_FIXTURE_DIR "/relation_table.json"));
    ASSERT_EQ(fx.rules().size(), table().rules().size());
    for (std::size_t i = 0; i < fx.rules().size(); ++i) {
        EXPECT_EQ(fx.rules()[i].lhs, table().rules()[i].lhs);
        EXPECT_EQ(fx.rules()[i].rhs, table().rules()[i].rhs);
    }
}

TEST(PrintedRelations, AllButOneReduce) {
    EXPECT_EQ(printed_relations().size(), 27u);
    const CheckReport rep = verify_printed_relations(table());
    EXPECT_FALSE(rep.pass);
    int failing = 0;
    for (const auto& d : rep.details) {
        if (d.rfind("FAIL", 0) == 0) {
            ++failing;
            EXPECT_NE(d.find("[f,y]_p"), std::string::npos);
        }
    }
    EXPECT_EQ(failing, 1);
    EXPECT_EQ(rep.details.back(), "26/27 printed relations reduce to 0");
}

TEST(Convention, PlainIsChosen) {
    const ConventionChoice c = resolve_convention(build_RJ3(), TLayout{});
    ASSERT_TRUE(c.chosen);
    EXPECT_EQ(*c.chosen, Convention::plain);
    EXPECT_THROW(derive_relation_table(rtt_entries(build_RJ3(), TLayout{}, Convention::transposed)), OrientationFailure);
}

TEST(DeltaCentrality, Generic) {
    const CheckReport rep = delta_centrality(table());
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.details.back(), "central: false");
    EXPECT_TRUE(table().normal_form(commutator(delta_poly(), NCPoly(Gen::b))).is_zero());
    EXPECT_FALSE(table().normal_form(commutator(delta_poly(), NCPoly(Gen::a))).is_zero());
}

TEST(DeltaCentrality, EqualParameters) {
    const Bindings mn{{params::m(), RatFunc::param(params::n())}};
    const RewriteSystem rs = derive_relation_table(rtt_entries(build_RJ3().substitute(mn), TLayout{}, Convention::plain));
    const CheckReport rep = delta_centrality(rs, mn);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.details.back(), "central: true");
    // the generic right-hand sides vanish after m = n
    for (const char* rhs : {"(m-n)*delta*b", "(m-n)*(delta*d - a*delta)", "(n-m)*delta*b"}) {
        EXPECT_TRUE(N(rhs).substitute(mn).is_zero());
    }
}

TEST(ClassicalLimit, TableBecomesCommutative) {
    const Bindings cl{{params::m(), RatFunc(0)}, {params::n(), RatFunc(0)}, {params::k(), RatFunc(0)},
                      {params::p(), RatFunc(1)}};
    const RewriteSystem rs = derive_relation_table(rtt_entries(build_RJ3().substitute(cl), TLayout{}, Convention::plain));
    EXPECT_TRUE(check_commutative(rs, "classical").pass);
    const Bindings q{{params::r(), RatFunc(1)}, {params::s(), RatFunc(1)}, {params::p(), RatFunc(1)},
                     {params::q(), RatFunc(1)}};
    const RewriteSystem rq = derive_relation_table(rtt_entries(build_RQ3().substitute(q), TLayout{}, Convention::plain));
    EXPECT_TRUE(check_commutative(rq, "classical").pass);
    EXPECT_FALSE(check_commutative(table(), "deformed").pass);
}
