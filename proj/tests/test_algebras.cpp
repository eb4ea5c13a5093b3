#include "newstein/algebras.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace newstein;
using Kind = BasisLabel::Kind;

namespace {

// Independent oracle: the defining matrices of the Lorentz and rotation
// generators, (M_{mu nu})^s_t = delta^s_mu g_{nu t} - delta^s_nu g_{mu t}.
using Mat4 = std::array<std::array<int, 5>, 5>;  // 1-based

Mat4 lorentz(int mu, int nu) {
    Mat4 m{};
    for (int s = 1; s <= 4; ++s)
        for (int t = 1; t <= 4; ++t) m[s][t] = (s == mu) * metric(nu, t) - (s == nu) * metric(mu, t);
    return m;
}

Mat4 rotation(int i, int j) {
    Mat4 m{};
    for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t) m[s][t] = (s == i) * (j == t) - (s == j) * (i == t);
    return m;
}

Mat4 commutator(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int s = 1; s <= 4; ++s)
        for (int t = 1; t <= 4; ++t)
            for (int u = 1; u <= 4; ++u) c[s][t] += a[s][u] * b[u][t] - b[s][u] * a[u][t];
    return c;
}

SparseVector single(int i, int c = 1) { return {{i, Scalar(c)}}; }

class NewsteinTest : public ::testing::Test {
protected:
    LieAlgebra g = build_newstein();
    NewsteinLayout lay;

    SparseVector br(int x, int y) const { return g.bracket_basis(x, y); }
    std::vector<int> ideal() const {
        std::vector<int> v;
        for (int i = lay.T(1); i < lay.J(1, 2); ++i) v.push_back(i);
        return v;
    }
};

}  // namespace

TEST_F(NewsteinTest, DimensionAndLabels) {
    EXPECT_EQ(g.dimension(), 51);
    EXPECT_EQ(g.label(lay.L(1, 4)).name(), "L14");
    EXPECT_EQ(g.label(lay.C(3, 4)).name(), "C34");
    EXPECT_EQ(g.label(lay.A(2, 3)).name(), "A2_3");
    EXPECT_EQ(g.label(lay.Q(3, 4)).name(), "Q3_4");
    EXPECT_EQ(g.label(lay.J(2, 3)).name(), "J23");
}

TEST_F(NewsteinTest, PrintedExamples) {
    EXPECT_EQ(br(lay.L(1, 2), lay.T(2)), single(lay.T(1)));
    EXPECT_EQ(br(lay.A(1, 2), lay.Q(1, 3)), single(lay.C(2, 3)));
    EXPECT_EQ(br(lay.J(1, 2), lay.A(1, 3)), single(lay.A(2, 3), -1));
    EXPECT_EQ(br(lay.L(1, 4), lay.C(4, 4)), single(lay.C(1, 4), -2));
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu) EXPECT_TRUE(br(lay.T(mu), lay.Tp(nu)).empty());
    EXPECT_TRUE(br(lay.A(1, 1), lay.Q(2, 2)).empty());
}

TEST_F(NewsteinTest, JacobiHolds) { EXPECT_TRUE(jacobi_check(g).empty()); }

TEST_F(NewsteinTest, LorentzBracketsMatchDefiningMatrices) {
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                for (int d = c + 1; d <= 4; ++d) {
                    Mat4 m = commutator(lorentz(a, b), lorentz(c, d));
                    // Read coordinates off the (mu, nu) entries, mu < nu.
                    SparseVector expect;
                    for (int mu = 1; mu <= 4; ++mu)
                        for (int nu = mu + 1; nu <= 4; ++nu)
                            if (m[mu][nu]) expect.emplace_back(lay.L(mu, nu), Scalar(m[mu][nu] * metric(nu, nu)));
                    normalize(expect);
                    EXPECT_EQ(br(lay.L(a, b), lay.L(c, d)), expect);
                }
}

TEST_F(NewsteinTest, VectorAndTensorActionsMatchDefiningMatrices) {
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) {
            Mat4 m = lorentz(a, b);
            for (int rho = 1; rho <= 4; ++rho) {
                auto column = [&](auto index) {
                    SparseVector v;
                    for (int s = 1; s <= 4; ++s)
                        if (m[s][rho]) v.emplace_back(index(s), Scalar(m[s][rho]));
                    normalize(v);
                    return v;
                };
                EXPECT_EQ(br(lay.L(a, b), lay.T(rho)), column([&](int s) { return lay.T(s); }));
                EXPECT_EQ(br(lay.L(a, b), lay.Tp(rho)), column([&](int s) { return lay.Tp(s); }));
                for (int i = 1; i <= 3; ++i) {
                    EXPECT_EQ(br(lay.L(a, b), lay.A(i, rho)), column([&](int s) { return lay.A(i, s); }));
                    EXPECT_EQ(br(lay.L(a, b), lay.Q(i, rho)), column([&](int s) { return lay.Q(i, s); }));
                }
                // C_{rho sigma} transforms as the symmetric product e_rho e_sigma.
                for (int sigma = rho; sigma <= 4; ++sigma) {
                    SparseVector v;
                    for (int s = 1; s <= 4; ++s) {
                        if (m[s][rho]) v.emplace_back(lay.C(s, sigma), Scalar(m[s][rho]));
                        if (m[s][sigma]) v.emplace_back(lay.C(rho, s), Scalar(m[s][sigma]));
                    }
                    normalize(v);
                    EXPECT_EQ(br(lay.L(a, b), lay.C(rho, sigma)), v);
                }
            }
        }
}

TEST_F(NewsteinTest, RotationBracketsMatchDefiningMatrices) {
    const std::array<std::pair<int, int>, 3> js = {{{1, 2}, {1, 3}, {2, 3}}};
    for (auto [i, j] : js) {
        Mat4 r = rotation(i, j);
        for (auto [k, l] : js) {
            Mat4 c = commutator(r, rotation(k, l));
            SparseVector expect;
            for (auto [p, q] : js)
                if (c[p][q]) expect.emplace_back(lay.J(p, q), Scalar(c[p][q]));
            normalize(expect);
            EXPECT_EQ(br(lay.J(i, j), lay.J(k, l)), expect);
        }
        for (int k = 1; k <= 3; ++k)
            for (int rho = 1; rho <= 4; ++rho) {
                SparseVector a, q;
                for (int s = 1; s <= 3; ++s)
                    if (r[s][k]) {
                        a.emplace_back(lay.A(s, rho), Scalar(r[s][k]));
                        q.emplace_back(lay.Q(s, rho), Scalar(r[s][k]));
                    }
                normalize(a);
                normalize(q);
                EXPECT_EQ(br(lay.J(i, j), lay.A(k, rho)), a);
                EXPECT_EQ(br(lay.J(i, j), lay.Q(k, rho)), q);
            }
    }
}

TEST_F(NewsteinTest, HeisenbergPart) {
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int mu = 1; mu <= 4; ++mu)
                for (int nu = 1; nu <= 4; ++nu) {
                    SparseVector expect = i == j ? single(lay.C(mu, nu)) : SparseVector{};
                    EXPECT_EQ(br(lay.A(i, mu), lay.Q(j, nu)), expect);
                    EXPECT_TRUE(br(lay.A(i, mu), lay.A(j, nu)).empty());
                    EXPECT_TRUE(br(lay.Q(i, mu), lay.Q(j, nu)).empty());
                }
}

TEST_F(NewsteinTest, IdealAndNilpotency) {
    const auto I = ideal();
    auto in_ideal = [&](const SparseVector& v) {
        for (const auto& [k, x] : v)
            if (k < lay.T(1) || k >= lay.J(1, 2)) return false;
        return true;
    };
    for (int x = 0; x < g.dimension(); ++x)
        for (int y : I) EXPECT_TRUE(in_ideal(br(x, y)));
    // span{A, Q, C} is nilpotent of class 2.
    for (int x = lay.C(1, 1); x < lay.J(1, 2); ++x)
        for (int y = lay.C(1, 1); y < lay.J(1, 2); ++y)
            for (const auto& [m, c] : br(x, y))
                for (int z = lay.C(1, 1); z < lay.J(1, 2); ++z) EXPECT_TRUE(br(m, z).empty());
}

TEST_F(NewsteinTest, LeviPartCommutes) {
    for (int a = 0; a < 6; ++a)
        for (int j = lay.J(1, 2); j < g.dimension(); ++j) EXPECT_TRUE(br(a, j).empty());
}

TEST(Newstein2, Construction) {
    LieAlgebra g2 = build_newstein2();
    NewsteinLayout lay{2};
    EXPECT_EQ(g2.dimension(), 41);
    EXPECT_TRUE(jacobi_check(g2).empty());
    EXPECT_TRUE(g2.bracket_basis(lay.A(1, 1), lay.Q(2, 2)).empty());
    EXPECT_EQ(g2.bracket_basis(lay.J(1, 2), lay.A(1, 3)), single(lay.A(2, 3), -1));
    EXPECT_EQ(g2.bracket_basis(lay.J(1, 2), lay.Q(2, 3)), single(lay.Q(1, 3)));
}

TEST(Extended, PrintedCases) {
    NewsteinLayout lay;
    const int k = lay.K();
    LieAlgebra e1 = build_extended(ExtensionClass{1});
    for (int x = 0; x < 51; ++x) EXPECT_TRUE(e1.bracket_basis(k, x).empty());
    LieAlgebra e7 = build_extended(ExtensionClass{7});
    EXPECT_EQ(e7.bracket_basis(k, lay.A(2, 3)), single(lay.Q(2, 3), -1));
    EXPECT_EQ(e7.bracket_basis(k, lay.Q(2, 3)), single(lay.A(2, 3)));
    EXPECT_TRUE(e7.bracket_basis(k, lay.C(1, 2)).empty());
}

TEST(Extended, AllCasesPassJacobi) {
    std::vector<ExtensionClass> classes;
    for (int c = 1; c <= 9; ++c) {
        ExtensionClass cls{c};
        cls.zeta2 = 2;
        cls.cos_phi = Scalar(3, 5);
        cls.sin_phi = Scalar(4, 5);
        classes.push_back(cls);
    }
    ExtensionClass minus8{8};
    minus8.jordan_sign = -1;
    classes.push_back(minus8);
    for (const auto& cls : classes) {
        LieAlgebra e = build_extended(cls);
        EXPECT_TRUE(jacobi_check(e).empty()) << cls.describe();
    }
}

TEST(Extended, PrintedCase8OnlyClosesAtTrivialAngle) {
    ExtensionClass printed{8};
    printed.printed_case8 = true;
    printed.cos_phi = Scalar(3, 5);
    printed.sin_phi = Scalar(4, 5);
    EXPECT_FALSE(jacobi_check(build_extended(printed)).empty());
    printed.cos_phi = 1;
    printed.sin_phi = 0;
    EXPECT_TRUE(jacobi_check(build_extended(printed)).empty());
}

TEST(Extended, KInvariants) {
    NewsteinLayout lay;
    ExtensionClass cls{9};
    cls.cos_phi = Scalar(5, 13);
    cls.sin_phi = Scalar(12, 13);
    LieAlgebra e = build_extended(cls);
    const int k = lay.K();
    for (int x = 0; x < 14; ++x) EXPECT_TRUE(e.bracket_basis(k, x).empty());
    for (int x = lay.J(1, 2); x < 51; ++x) EXPECT_TRUE(e.bracket_basis(k, x).empty());
    const auto m = cls.matrix();
    for (int i = 1; i <= 3; ++i)
        for (int rho = 1; rho <= 4; ++rho) {
            SparseVector a = {{lay.A(i, rho), m.beta}, {lay.Q(i, rho), m.gamma}};
            SparseVector q = {{lay.A(i, rho), m.beta_p}, {lay.Q(i, rho), m.gamma_p}};
            normalize(a);
            normalize(q);
            EXPECT_EQ(e.bracket_basis(k, lay.A(i, rho)), a);
            EXPECT_EQ(e.bracket_basis(k, lay.Q(i, rho)), q);
        }
    EXPECT_EQ(e.bracket_basis(k, lay.C(2, 3)), (SparseVector{{lay.C(2, 3), m.trace()}}));
}

TEST(Extended, InvalidParameters) {
    ExtensionClass c3{3};
    c3.zeta2 = 1;
    EXPECT_THROW(build_extended(c3), std::invalid_argument);
    ExtensionClass c4{4};
    c4.zeta2 = 0;
    EXPECT_THROW(build_extended(c4), std::invalid_argument);
    ExtensionClass c9{9};
    c9.cos_phi = 0;
    c9.sin_phi = 1;
    EXPECT_THROW(build_extended(c9), std::invalid_argument);
    EXPECT_THROW(build_extended(ExtensionClass{10}), std::invalid_argument);
}

TEST(BetaCocycle, ValuesIdentityAndInvariance) {
    LieAlgebra g = build_newstein();
    NewsteinLayout lay;
    CentralCocycle w = beta_cocycle(g);
    EXPECT_EQ(w.value(lay.T(1), lay.Tp(1)), 1);
    EXPECT_EQ(w.value(lay.T(4), lay.Tp(4)), -1);
    EXPECT_EQ(w.value(lay.Tp(4), lay.T(4)), 1);
    EXPECT_EQ(w.value(lay.T(1), lay.T(2)), 0);
    EXPECT_EQ(w.value(lay.T(1), lay.Tp(2)), 0);
    EXPECT_TRUE(w.violations().empty());
    for (int j = lay.J(1, 2); j < 51; ++j)
        for (int x = 0; x < 51; ++x)
            for (int y = 0; y < 51; ++y) {
                Scalar s = 0;
                for (const auto& [m, c] : g.bracket_basis(j, x)) s += c * w.value(m, y);
                for (const auto& [m, c] : g.bracket_basis(j, y)) s += c * w.value(x, m);
                EXPECT_EQ(s, 0);
            }
}
