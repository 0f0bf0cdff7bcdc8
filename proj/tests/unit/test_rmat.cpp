#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <jforge/errors.hpp>
#include <jforge/expr.hpp>
#include <jforge/rmat.hpp>
#include <jforge/serialize.hpp>

#include "oracles.hpp"

using namespace jforge;

namespace {

RatFunc P(const char* s) { return parse_ratfunc(s); }
Label L(int a, int b) { return {a, b}; }

const std::vector<Param> kQParams{params::r(), params::s(), params::p(), params::q()};
const std::vector<Param> kJParams{params::m(), params::n(), params::k(), params::p()};

Bindings classical() {
    return {{params::r(), RatFunc(1)}, {params::s(), RatFunc(1)}, {params::p(), RatFunc(1)},
            {params::q(), RatFunc(1)}, {params::m(), RatFunc(0)}, {params::n(), RatFunc(0)},
            {params::k(), RatFunc(0)}};
}

RMat random_matrix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> d(-3, 3);
    RMat m(vector_basis(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = RatFunc(d(rng));
    }
    return m;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(RQ2, PrintedEntries) {
    const RMat r = build_RQ2();
    EXPECT_EQ(r.at(L(2, 1), L(1, 2)), P("r-1/r"));
    EXPECT_EQ(r.at(L(1, 1), L(1, 1)), P("r"));
    EXPECT_EQ(r.at(L(1, 2), L(1, 2)), P("s"));
    EXPECT_EQ(r.at(L(2, 1), L(2, 1)), P("1/s"));
    EXPECT_EQ(r.at(L(2, 2), L(2, 2)), P("r"));
    int nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) nonzero += !r(i, j).is_zero();
    EXPECT_EQ(nonzero, 5);
}

TEST(RQ3, BasisOrderAndCorner) {
    const RMat r = build_RQ3();
    EXPECT_EQ(r.basis(), gl3_basis());
    const std::vector<std::string> expected{"11", "12", "13", "21", "31", "22", "23", "32", "33"};
    for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(label_str(r.basis()[i]).substr(1, 2), expected[i]);
    EXPECT_EQ(r.at(L(1, 1), L(1, 1)), P("r"));
}

TEST(RQ3, InverseAndDiagonalBlocks) {
    const RMat r = build_RQ3();
    EXPECT_EQ(r.at(L(1, 2), L(1, 2)), P("1/p"));
    EXPECT_EQ(r.at(L(1, 3), L(1, 3)), P("1/q"));
    EXPECT_EQ(r.at(L(2, 1), L(2, 1)), P("p"));
    EXPECT_EQ(r.at(L(3, 1), L(3, 1)), P("q"));
}

TEST(RQ3, LambdaBlock) {
    const RMat r = build_RQ3();
    EXPECT_EQ(r.at(L(2, 1), L(1, 2)), P("r-1/r"));
    EXPECT_EQ(r.at(L(3, 1), L(1, 3)), P("r-1/r"));
    EXPECT_TRUE(r.at(L(2, 1), L(1, 3)).is_zero());
    EXPECT_TRUE(r.at(L(3, 1), L(1, 2)).is_zero());
}

TEST(RQ3, EmbedsRQ2) {
    const RMat sector = build_RQ3().block({L(2, 2), L(2, 3), L(3, 2), L(3, 3)}).with_basis(gl2_basis());
    EXPECT_EQ(sector, build_RQ2());
    const RMat jsector = build_RJ3().block({L(2, 2), L(2, 3), L(3, 2), L(3, 3)}).with_basis(gl2_basis());
    EXPECT_EQ(jsector, build_RJ2());
}

TEST(ContractionMatrices, Shapes) {
    EXPECT_TRUE(build_g(RatFunc(0)).is_identity());
    const RatFunc eta = RatFunc::param(params::eta());
    const RMat G = build_G(eta), Gp = build_Gprime(eta);
    EXPECT_TRUE(G(2, 0).is_zero());
    EXPECT_EQ(G(2, 1), eta);
    EXPECT_TRUE(G(2, 2).is_one());
    EXPECT_EQ(Gp(2, 0), eta);
    EXPECT_TRUE(Gp(2, 1).is_zero());
    EXPECT_TRUE(Gp(2, 2).is_one());
    const RMat g = build_g(eta);
    EXPECT_EQ(g(1, 0), eta);
    EXPECT_TRUE(g(0, 1).is_zero());
}

TEST(Kron, Identity) {
    EXPECT_TRUE(kron(RMat::identity(vector_basis(2)), RMat::identity(vector_basis(2))).is_identity());
}

TEST(Kron, EtaSquared) {
    const RatFunc eta = RatFunc::param(params::eta());
    const RMat gg = kron(build_g(eta), build_g(eta));
    EXPECT_EQ(gg.at(L(2, 2), L(1, 1)), eta * eta);
}

TEST(Kron, Associative) {
    std::mt19937_64 rng(1);
    const RMat a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2);
    const RMat left = kron(kron(a, b), c), right = kron(a, kron(b, c));
    ASSERT_EQ(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < left.size(); ++j) EXPECT_EQ(left(i, j), right(i, j));
}

TEST(Kron, MixedProduct) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 5; ++t) {
        const RMat a = random_matrix(rng, 2), b = random_matrix(rng, 3), c = random_matrix(rng, 2),
                   d = random_matrix(rng, 3);
        EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
    }
}

TEST(Conjugate, ByIdentity) {
    const RMat r = build_RQ3();
    EXPECT_EQ(conjugate(r, RMat::identity(vector_basis(3))), r);
}

TEST(Conjugate, GroupAction) {
    const RatFunc eta = RatFunc::param(params::eta());
    const RMat g = build_G(eta);
    const RMat r = build_RQ3();
    EXPECT_EQ(conjugate(conjugate(r, g), inverse(g)), r);
}

TEST(Conjugate, SingularMatrix) {
    RMat g(vector_basis(2));
    g(0, 0) = RatFunc(1);
    g(0, 1) = RatFunc(2);
    g(1, 0) = RatFunc(2);
    g(1, 1) = RatFunc(4);
    EXPECT_THROW(conjugate(build_RQ2(), g), SingularMatrix);
}

TEST(Conjugate, RQ2ByGMatchesBruteForceAndFixture) {
    const RatFunc eta = RatFunc::param(params::eta());
    const RMat r = build_RQ2();
    // (g^-1 (x) g^-1) R (g (x) g) with the tensor squares written out by hand
    const RatFunc gi[2][2] = {{RatFunc(1), RatFunc(0)}, {-eta, RatFunc(1)}};
    const RatFunc gm[2][2] = {{RatFunc(1), RatFunc(0)}, {eta, RatFunc(1)}};
    auto idx = [&](int a, int b) { return r.index_of({a + 1, b + 1}); };
    RMat expected(r.basis());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    RatFunc sum;
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l)
                            for (int u = 0; u < 2; ++u)
                                for (int v = 0; v < 2; ++v) {
                                    sum += gi[i][k] * gi[j][l] * r(idx(k, l), idx(u, v)) * gm[u][a] * gm[v][b];
                                }
                    expected(idx(i, j), idx(a, b)) = sum;
                }
    const RMat got = conjugate(r, build_g(eta));
    EXPECT_EQ(got, expected);
    EXPECT_EQ(got.at(L(1, 2), L(1, 1)), P("(s-r)*eta"));
    EXPECT_EQ(matrix_from_json(slurp(JFORGE_FIXTURE_DIR "/conjugated_rq2.json")), got);
}

TEST(RJ2, PrintedEntries) {
    const RMat r = build_RJ2();
    EXPECT_EQ(r.at(L(2, 2), L(1, 1)), P("m*n"));
    EXPECT_EQ(r.at(L(1, 2), L(1, 1)), P("m"));
    EXPECT_EQ(r.at(L(2, 1), L(1, 1)), P("-m"));
    EXPECT_EQ(r.at(L(2, 2), L(1, 2)), P("n"));
    EXPECT_EQ(r.at(L(2, 2), L(2, 1)), P("-n"));
    EXPECT_TRUE(build_RJ2(RatFunc(0), RatFunc(0)).is_identity());
}

TEST(RJ3, KBlocks) {
    const RMat r = build_RJ3();
    const std::array<std::array<RatFunc, 2>, 2> K{{{P("p"), RatFunc(0)}, {P("k"), P("p")}}};
    const auto Ki = oracle::inverse2(K);
    const std::array<Label, 2> inv{L(1, 2), L(1, 3)}, fwd{L(2, 1), L(3, 1)};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            EXPECT_EQ(r.at(inv[i], inv[j]), Ki[i][j]);
            EXPECT_EQ(r.at(fwd[i], fwd[j]), K[i][j]);
        }
    }
    EXPECT_EQ(Ki[1][0], P("-k/p^2"));
    EXPECT_TRUE(r.at(L(1, 1), L(1, 1)).is_one());
}

TEST(Qybe, Identity) { EXPECT_TRUE(qybe_check(RMat::identity(gl3_basis())).pass); }

TEST(Qybe, NotSquare) { EXPECT_THROW(qybe_check(RMat::identity(vector_basis(3))), DimensionMismatch); }

class QybeOracle : public ::testing::TestWithParam<int> {};

TEST_P(QybeOracle, SymbolicAgreesWithNumeric) {
    const RMat r = GetParam() == 0 ? build_RQ3() : GetParam() == 1 ? build_RJ3() : GetParam() == 2 ? build_RQ2() : build_RJ2();
    const auto& vars = GetParam() % 2 == 0 ? kQParams : kJParams;
    std::mt19937_64 rng(100 + GetParam());
    for (int i = 0; i < 20; ++i) EXPECT_TRUE(oracle::is_zero(oracle::qybe_defect(r, oracle::random_point(rng, vars))));
    EXPECT_TRUE(qybe_check(r).pass);
}

INSTANTIATE_TEST_SUITE_P(AllConstructors, QybeOracle, ::testing::Values(0, 1, 2, 3));

TEST(Qybe, PerturbedFails) {
    RMat r = build_RJ3();
    r.at(L(1, 2), L(2, 1)) = RatFunc(1);
    const CheckReport rep = qybe_check(r);
    EXPECT_FALSE(rep.pass);
    EXPECT_FALSE(rep.details.empty());
    std::mt19937_64 rng(9);
    EXPECT_FALSE(oracle::is_zero(oracle::qybe_defect(r, oracle::random_point(rng, kJParams))));
}

TEST(Qybe, ConjugationInvariance) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> d(-4, 4), nz(1, 3);
    for (int t = 0; t < 3; ++t) {
        RMat g(vector_basis(3));
        for (int i = 0; i < 3; ++i) {
            g(i, i) = RatFunc(nz(rng));
            for (int j = 0; j < i; ++j) g(i, j) = RatFunc(d(rng));
        }
        EXPECT_TRUE(qybe_check(conjugate(build_RJ3(), g)).pass);
        EXPECT_TRUE(qybe_check(conjugate(build_RQ3(), g)).pass);
    }
    RMat bad = build_RJ3();
    bad.at(L(1, 1), L(2, 2)) = RatFunc(1);
    RMat g = RMat::identity(vector_basis(3));
    g(2, 0) = RatFunc(2);
    EXPECT_EQ(qybe_check(bad).pass, qybe_check(conjugate(bad, g)).pass);
}

TEST(ClassicalLimit, AllConstructorsBecomeIdentity) {
    for (const RMat& r : {build_RQ2(), build_RQ3(), build_RJ2(), build_RJ3()}) {
        EXPECT_TRUE(r.substitute(classical()).is_identity());
    }
}
