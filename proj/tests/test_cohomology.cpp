#include "newstein/algebras.hpp"
#include "newstein/cohomology.hpp"

#include <gtest/gtest.h>

using namespace newstein;

namespace {

BettiOptions exact() { return {}; }

BettiOptions modular() {
    BettiOptions o;
    o.rank.method = RankMethod::Modular;
    return o;
}

}  // namespace

TEST(WedgeIndex, RankUnrankRoundTrip) {
    WedgeIndex w(7, 3);
    EXPECT_EQ(w.size(), 35);
    for (std::int64_t r = 0; r < w.size(); ++r) EXPECT_EQ(w.rank(w.unrank(r).data()), r);
    EXPECT_EQ(w.unrank(0), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(w.unrank(34), (std::vector<int>{4, 5, 6}));
    EXPECT_EQ(w.unrank(1), (std::vector<int>{0, 1, 3}));
}

TEST(Coboundary, AbelianIsZero) {
    LieAlgebra a = build_abelian(4);
    CochainComplex cx(a, CoefficientModule::trivial(a));
    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(cx.coboundary_matrix(k).is_zero());
    EXPECT_EQ(betti(a, CoefficientModule::trivial(a), 2).betti, 6);
}

TEST(Coboundary, HeisenbergByHand) {
    // h3 = span{p, q, z}, [p, q] = z. On trivial coefficients d(z*) = -(p^q)*,
    // with the convention (df)(x, y) = -f([x, y]).
    LieAlgebra h = build_heisenberg3();
    CochainComplex cx(h, CoefficientModule::trivial(h));
    SparseExactMatrix d1 = cx.coboundary_matrix(1);
    EXPECT_EQ(d1.rows(), 3);
    EXPECT_EQ(d1.cols(), 3);
    EXPECT_TRUE(d1.column(0).empty());
    EXPECT_TRUE(d1.column(1).empty());
    EXPECT_EQ(d1.column(2), (SparseVector{{0, Scalar(-1)}}));
    EXPECT_TRUE(cx.coboundary_matrix(2).is_zero());
}

TEST(Betti, HeisenbergTrivial) {
    LieAlgebra h = build_heisenberg3();
    auto triv = CoefficientModule::trivial(h);
    EXPECT_EQ(betti(h, triv, 0).betti, 1);
    EXPECT_EQ(betti(h, triv, 1).betti, 2);
    auto r2 = betti(h, triv, 2);
    EXPECT_EQ(r2.betti, 2);
    EXPECT_EQ(r2.dim_k, 3);
    EXPECT_EQ(r2.rank_prev, 1);
    EXPECT_EQ(r2.rank_k, 0);
    EXPECT_TRUE(r2.dd_zero_verified);
    EXPECT_EQ(betti(h, triv, 3).betti, 1);
}

TEST(Betti, Sl2AdjointVanishes) {
    LieAlgebra s = build_sl2();
    auto ad = CoefficientModule::adjoint(s);
    EXPECT_EQ(betti(s, ad, 0).betti, 0);
    EXPECT_EQ(betti(s, ad, 1).betti, 0);
    EXPECT_EQ(betti(s, ad, 2).betti, 0);
    EXPECT_EQ(betti(s, CoefficientModule::trivial(s), 3).betti, 1);
}

TEST(Betti, EulerCharacteristicVanishes) {
    for (const LieAlgebra& alg : {build_heisenberg3(), build_sl2(), build_abelian(2)}) {
        for (const auto& mod : {CoefficientModule::trivial(alg), CoefficientModule::adjoint(alg)}) {
            std::int64_t chi = 0;
            for (int k = 0; k <= alg.dimension(); ++k) chi += (k % 2 ? -1 : 1) * betti(alg, mod, k).betti;
            EXPECT_EQ(chi, 0) << alg.name();
        }
    }
}

TEST(Betti, GradedAndUngradedAgree) {
    LieAlgebra h = build_heisenberg3();
    auto ad = CoefficientModule::adjoint(h);
    BettiOptions flat;
    flat.use_grading = false;
    for (int k = 0; k <= 3; ++k) {
        EXPECT_EQ(betti(h, ad, k).betti, betti(h, ad, k, flat).betti);
        EXPECT_EQ(betti(h, ad, k).betti, betti(h, ad, k, modular()).betti);
    }
}

TEST(Betti, TrivialDegreeOneIsAbelianization) {
    LieAlgebra g2 = build_newstein2();
    auto r = betti(g2, CoefficientModule::trivial(g2), 1);
    // Compare with the codimension of the derived algebra.
    std::vector<SparseVector> derived;
    for (int i = 0; i < g2.dimension(); ++i)
        for (int j = i + 1; j < g2.dimension(); ++j) {
            auto v = g2.bracket_basis(i, j);
            if (!v.empty()) derived.push_back(v);
        }
    EXPECT_EQ(r.betti, g2.dimension() - static_cast<std::int64_t>(exact_rank(derived)));
}

TEST(Grading, DetectedGradingIsRespected) {
    LieAlgebra g = build_newstein();
    CochainComplex cx(g, CoefficientModule::adjoint(g));
    EXPECT_TRUE(cx.grading().is_compatible(g, cx.module()));
    EXPECT_GE(cx.grading().integer_rank(), 1u);
    EXPECT_TRUE(cx.grading_respected(0));
    EXPECT_TRUE(cx.grading_respected(1));
    EXPECT_GT(cx.blocks(1).size(), 1u);
}

TEST(Grading, IncompatibleGradingRejected) {
    LieAlgebra h = build_heisenberg3();
    auto triv = CoefficientModule::trivial(h);
    Grading bad = Grading::none(3, 1);
    for (auto& w : bad.algebra_weight) w = {1};
    bad.module_weight[0] = {0};
    EXPECT_FALSE(bad.is_compatible(h, triv));
    EXPECT_THROW(CochainComplex(h, triv, bad), std::invalid_argument);
}

TEST(Module, ExplicitModuleValidated) {
    LieAlgebra s = build_sl2();
    // Defining representation: e = [[0,1],[0,0]], f = [[0,0],[1,0]], h = diag(1,-1).
    std::vector<std::vector<SparseVector>> rho = {
        {{}, {{0, Scalar(1)}}},
        {{{1, Scalar(1)}}, {}},
        {{{0, Scalar(1)}}, {{1, Scalar(-1)}}},
    };
    auto m = CoefficientModule::explicit_module(s, rho);
    EXPECT_EQ(m.dim, 2);
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(betti(s, m, k).betti, 0);
    rho[2][1] = {{1, Scalar(1)}};
    EXPECT_THROW(CoefficientModule::explicit_module(s, rho), std::invalid_argument);
}

TEST(NewsteinCohomology, CenterIsDegreeZero) {
    LieAlgebra g = build_newstein();
    auto r = betti(g, CoefficientModule::adjoint(g), 0);
    EXPECT_EQ(r.betti, 1);
    EXPECT_TRUE(r.dd_zero_verified);
}

TEST(NewsteinCohomology, DegreeOneDdZero) {
    LieAlgebra g = build_newstein();
    CochainComplex cx(g, CoefficientModule::adjoint(g));
    EXPECT_TRUE(cx.dd_zero(0));
    EXPECT_TRUE(cx.dd_zero(1));
}
