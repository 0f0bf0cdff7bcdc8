#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include <jforge/errors.hpp>
#include <jforge/expr.hpp>
#include <jforge/hopf.hpp>

#include "oracles.hpp"

using namespace jforge;

namespace {

NCPoly N(const char* s) { return parse_ncpoly(s); }

const RewriteSystem& table() {
    static const RewriteSystem rs = derive_relation_table(rtt_entries(build_RJ3(), TLayout{}, Convention::plain));
    return rs;
}
const ExtendedAlgebra& quotient() {
    static const ExtendedAlgebra alg = build_quotient_algebra(table());
    return alg;
}
const ExtendedAlgebra& full() {
    static const ExtendedAlgebra alg = build_full_algebra(table());
    return alg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Coproduct, PlaneCoordinate) {
    TensorElem expect;
    expect.add_term({Word(Gen::x), Word(Gen::f)}, RatFunc(1));
    expect.add_term({Word(Gen::a), Word(Gen::x)}, RatFunc(1));
    expect.add_term({Word(Gen::b), Word(Gen::y)}, RatFunc(1));
    EXPECT_EQ(quotient_project(coproduct(Gen::x)), expect);
    EXPECT_EQ(quotient_project(coproduct(Gen::f)), tensor(N("f"), N("f")));
    EXPECT_EQ(coproduct(Gen::x).size(), 3u);
}

TEST(Counit, Values) {
    EXPECT_TRUE(counit(Gen::a).is_one());
    EXPECT_TRUE(counit(Gen::b).is_zero());
    EXPECT_TRUE(counit(Gen::theta).is_zero());
    std::mt19937_64 rng(6);
    const auto gens = TLayout{}.generators();
    std::uniform_int_distribution<std::size_t> d(0, gens.size() - 1);
    for (int i = 0; i < 50; ++i) {
        const Gen u = gens[d(rng)], v = gens[d(rng)], w = gens[d(rng)];
        EXPECT_EQ(counit(NCPoly(Word{u, v, w})), counit(u) * counit(v) * counit(w));
    }
}

TEST(Bialgebra, RelationsAnnihilated) { EXPECT_TRUE(check_bialgebra(table()).pass); }

TEST(Bialgebra, BruteForceOnGL2Relation) {
    // expand by hand: Delta(u v) = sum over k, l of t_ik t_jl (x) t_kv t_lw
    const TLayout t;
    auto delta = [&](int i, int j, int u, int v) {
        TensorElem out;
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l)
                out.add_term({Word{t.at(i, k), t.at(j, l)}, Word{t.at(k, u), t.at(l, v)}}, RatFunc(1));
        return out;
    };
    // a = t22, b = t23
    const TensorElem rel = delta(2, 2, 2, 3) - delta(2, 2, 3, 2) - delta(2, 2, 3, 3).scaled(parse_ratfunc("n"));
    EXPECT_TRUE(tensor_normal_form(rel, table()).is_zero());
}

TEST(Bialgebra, CoassociativityOnX) {
    const TLayout t;
    Tensor<3> expect;
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) expect.add_term({Word(t.at(2, k)), Word(t.at(k, l)), Word(t.at(l, 1))}, RatFunc(1));
    EXPECT_EQ(coproduct_left(N("x")), expect);
    EXPECT_EQ(coproduct_right(N("x")), expect);
}

TEST(HopfIdeal, AllThreeProperties) {
    const CheckReport rep = hopf_ideal_check(full());
    EXPECT_TRUE(rep.pass);
    TensorElem dtheta;
    dtheta.add_term({Word(Gen::f), Word(Gen::theta)}, RatFunc(1));
    dtheta.add_term({Word(Gen::theta), Word(Gen::a)}, RatFunc(1));
    dtheta.add_term({Word(Gen::phi), Word(Gen::c)}, RatFunc(1));
    EXPECT_EQ(coproduct(Gen::theta), dtheta);
    const NCPoly at = full().core.normal_form(N("a*theta"));
    for (const auto& [w, c] : at.terms()) EXPECT_TRUE(in_theta_ideal(w));
}

TEST(Quotient, Projection) {
    EXPECT_TRUE(quotient_project(quotient_project(coproduct(Gen::theta))).is_zero());
    EXPECT_EQ(quotient_project(N("a*b - b*a - n*b^2")), N("a*b - b*a - n*b^2"));
    EXPECT_TRUE(quotient_project(N("theta*x + f*phi")).is_zero());
    const ExtendedAlgebra& q = quotient();
    EXPECT_TRUE(q.entry(1, 2).is_zero());
    EXPECT_TRUE(q.entry(1, 3).is_zero());
    EXPECT_EQ(q.entry(2, 1), N("x"));
    for (const auto& r : q.core.rules()) EXPECT_FALSE(r.lhs.contains(Gen::theta) || r.lhs.contains(Gen::phi));
}

TEST(Antipode, QuotientBlocks) {
    const ExtendedAlgebra& q = quotient();
    EXPECT_EQ(antipode(Gen::f, q), N("finv"));
    // S(x) = -(T^-1 X f^-1)_1
    const NCPoly expect = q.core.normal_form(-(q.t_inverse[0][0] * N("x") + q.t_inverse[0][1] * N("y")) * N("finv"));
    EXPECT_EQ(antipode(Gen::x, q), expect);
    EXPECT_EQ(antipode(Gen::a, q), q.t_inverse[0][0]);
}

TEST(Antipode, TInverseIsTwoSided) {
    const ExtendedAlgebra& q = quotient();
    const NCPoly T[2][2] = {{N("a"), N("b")}, {N("c"), N("d")}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            NCPoly left, right;
            for (int k = 0; k < 2; ++k) {
                left += q.t_inverse[i][k] * T[k][j];
                right += T[i][k] * q.t_inverse[k][j];
            }
            const NCPoly unit(i == j ? 1L : 0L);
            EXPECT_TRUE(q.extended.normal_form(left - unit).is_zero()) << i << j;
            EXPECT_TRUE(q.extended.normal_form(right - unit).is_zero()) << i << j;
        }
    }
    const auto fx = nlohmann::json::parse(slurp(JFORGE_FIXTURE_DIR "/t_inverse.json"));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(parse_ncpoly(fx["entries"][i][j].get<std::string>()), q.t_inverse[i][j]);
}

TEST(Antipode, AxiomInQuotient) { EXPECT_TRUE(check_antipode_axiom(quotient()).pass); }

TEST(Antipode, CounitCompatibility) {
    const ExtendedAlgebra& q = quotient();
    for (Gen g : TLayout{}.generators()) {
        if (g == Gen::theta || g == Gen::phi) continue;
        EXPECT_EQ(counit(antipode(NCPoly(g), q)), counit(g)) << gen_name(g);
    }
}

TEST(Antipode, AntiMultiplicative) {
    const ExtendedAlgebra& q = quotient();
    EXPECT_EQ(antipode(N("a*x"), q), antipode(N("x"), q) * antipode(N("a"), q));
}

TEST(Antipode, MissingInverse) {
    ExtendedAlgebra bare;
    bare.quotient = true;
    bare.core = project_quotient(table());
    EXPECT_THROW(antipode(Gen::a, bare), MissingInverse);
    EXPECT_THROW(antipode(Gen::xi, quotient()), MissingInverse);
}

TEST(Determinant, QuotientClaims) {
    const CheckReport rep = qdet_checks(quotient(), full());
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(quotient().determinant, quotient().core.normal_form(N("f*delta")));
    EXPECT_FALSE(quotient().core.normal_form(N("f*x - x*f")).is_zero());
    EXPECT_TRUE(counit(quotient().determinant).is_one());
}

TEST(Determinant, FullAlgebraInverse) {
    // e * (f - Theta T^-1 X) = 1 with D = e^-1 delta
    const ExtendedAlgebra& a = full();
    const NCPoly q = a.core.normal_form(a.determinant * N("dinv"));
    // delta dinv = 1 holds only once the contraction rule is adjoined
    // the extended system is not complete on theta/phi words carrying dinv, so compare mod theta, phi
    EXPECT_EQ(quotient_project(a.extended.normal_form(q * a.delta)), quotient_project(a.determinant));
    EXPECT_EQ(a.extended.normal_form(N("dinv") * a.delta).str(), "1");
    EXPECT_EQ(a.extended.normal_form(a.delta * N("dinv")).str(), "1");
    EXPECT_EQ(quotient_project(a.determinant), quotient().determinant);
}

TEST(Coaction, Braided) { EXPECT_TRUE(coaction_covariance(project_quotient(table())).pass); }

TEST(Coaction, DegenerateWhenMVanishes) {
    const Bindings m0{{params::m(), RatFunc(0)}};
    const RewriteSystem rs = derive_relation_table(rtt_entries(build_RJ3().substitute(m0), TLayout{}, Convention::plain));
    EXPECT_TRUE(coaction_covariance(project_quotient(rs), true, m0).pass);
}

TEST(Coaction, UnbraidedNegativeControl) {
    const CheckReport rep = coaction_covariance(project_quotient(table()), false);
    EXPECT_FALSE(rep.pass);
    const RewriteSystem naive = unbraided(project_quotient(table()));
    const RewriteRule* r = naive.find(Word{Gen::x, Gen::f});
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->rhs, N("f*x"));
}
