#include "newstein/algebras.hpp"
#include "newstein/group_law.hpp"

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>

using namespace newstein;

namespace {

const Cplx I(0, 1);

Mat2c random_sl2c(std::mt19937& rng, double scale = 0.4) {
    std::normal_distribution<double> n(0, scale);
    Mat2c x;
    x << Cplx(n(rng), n(rng)), Cplx(n(rng), n(rng)), Cplx(n(rng), n(rng)), 0;
    x(1, 1) = -x(0, 0);
    return expm(x);
}

Mat2c random_su2(std::mt19937& rng) {
    std::normal_distribution<double> n(0, 1.5);
    Mat2c x = n(rng) * su2_generator(1, 2) + n(rng) * su2_generator(1, 3) + n(rng) * su2_generator(2, 3);
    return expm(x);
}

Vec4 on_shell(const Vec3& p, double m0) { return Vec4(p(0), p(1), p(2), std::sqrt(m0 * m0 + p.squaredNorm())); }

// (C(s, t) + C(-s, -t)) / (2 s t) for the group commutator C, which removes the cubic terms.
Eigen::VectorXd commutator_coordinates(const BasisLabel& x, const BasisLabel& y, double s) {
    auto comm = [&](double a, double b) {
        const auto gx = exp_basis(x, a), gy = exp_basis(y, b);
        const auto c = compose_extended(compose_extended(gx, gy),
                                        compose_extended(inverse_extended(gx), inverse_extended(gy)));
        return algebra_coordinates(c);
    };
    return (comm(s, s) + comm(-s, -s)) / (2 * s * s);
}

Eigen::VectorXd bracket_coordinates(const LieAlgebra& alg, int i, int j) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(NewsteinLayout{}.dimension() + 1);
    for (const auto& [k, c] : alg.bracket_basis(i, j)) v(k) = c.get_d();
    return v;
}

}  // namespace

TEST(Representations, VectorRepExample) {
    Mat2c l = Mat2c::Zero();
    l(0, 0) = std::sqrt(2.0);
    l(1, 1) = 1 / std::sqrt(2.0);
    const Vec4 x = vector_rep(l) * Vec4(0, 0, 0, 1);
    EXPECT_NEAR((x - Vec4(0, 0, 0.75, 1.25)).norm(), 0, 1e-14);
}

TEST(Representations, AreHomomorphisms) {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        const Mat2c a = random_sl2c(rng), b = random_sl2c(rng);
        EXPECT_LT((vector_rep(a * b) - vector_rep(a) * vector_rep(b)).norm(), 1e-9);
        EXPECT_LT((sym_rep(a * b) - sym_rep(a) * sym_rep(b)).norm(), 1e-8);
        const Mat4 g = metric_matrix(), v = vector_rep(a);
        EXPECT_LT((v.transpose() * g * v - g).norm(), 1e-9);
        const Mat2c r = random_su2(rng), s = random_su2(rng);
        EXPECT_LT((so3_rep(r * s) - so3_rep(r) * so3_rep(s)).norm(), 1e-12);
        for (int two_j = 0; two_j <= 4; ++two_j) {
            const auto d = spin_rep(r * s, two_j);
            EXPECT_LT((d - spin_rep(r, two_j) * spin_rep(s, two_j)).norm(), 1e-12);
            EXPECT_LT((d * d.adjoint() - Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1)).norm(), 1e-12);
        }
    }
}

TEST(Representations, NonUnimodularThrows) {
    EXPECT_THROW(vector_rep(2.0 * Mat2c::Identity()), std::invalid_argument);
}

TEST(Representations, SpinMatchesSo3AndGenerators) {
    std::mt19937 rng(12);
    const Mat2c r = random_su2(rng);
    EXPECT_LT((spin_rep(r, 1) - r).norm(), 1e-14);
    EXPECT_NEAR(spin_rep(r, 2).trace().real(), so3_rep(r).trace(), 1e-12);
    for (int two_j = 1; two_j <= 4; ++two_j) {
        const auto s = spin_generators(two_j);
        const double j = two_j / 2.0;
        Eigen::MatrixXcd cas = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
        EXPECT_LT((cas - j * (j + 1) * Eigen::MatrixXcd::Identity(two_j + 1, two_j + 1)).norm(), 1e-12);
        EXPECT_NEAR(s[2](0, 0).real(), j, 1e-14);
        EXPECT_LT((s[0] * s[1] - s[1] * s[0] - I * s[2]).norm(), 1e-12);
        const double theta = 0.7;
        Eigen::MatrixXcd ex = Eigen::MatrixXcd(-I * theta * s[1]).exp();
        Mat2c rot;
        rot << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
        EXPECT_LT((spin_rep(rot, two_j) - ex).norm(), 1e-12);
    }
}

TEST(Representations, GeneratorsCoverDefiningMatrices) {
    // d/ds vector_rep(exp(s X_{mu nu})) = M_{mu nu}.
    const double h = 1e-6;
    const Mat4& g = metric_matrix();
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu + 1; nu <= 4; ++nu) {
            Mat4 m = Mat4::Zero();
            for (int t = 0; t < 4; ++t) {
                m(mu - 1, t) += g(nu - 1, t);
                m(nu - 1, t) -= g(mu - 1, t);
            }
            const Mat2c x = sl2c_generator(mu, nu);
            const Mat4 d = (vector_rep(expm(h * x)) - vector_rep(expm(-h * x))) / (2 * h);
            EXPECT_LT((d - m).norm(), 1e-8) << mu << nu;
        }
}

TEST(GroupLaw, PairingExample) {
    GroupElement g1, g2;
    g1.a(0, 0) = 1;
    g2.q(0, 0) = 1;
    const GroupElement g = compose(g1, g2);
    EXPECT_DOUBLE_EQ(g.c(0, 0), 1);
    EXPECT_DOUBLE_EQ(g.c.cwiseAbs().sum(), 1);
    GroupElement h1, h2;
    h1.a(1, 0) = 1;
    h2.q(1, 2) = 1;
    EXPECT_DOUBLE_EQ(compose(h1, h2).c(0, 2), 1);
}

TEST(GroupLaw, SymmetricActionMatchesTensorAction) {
    std::mt19937 rng(13);
    GroupElement g1;
    g1.lambda = random_sl2c(rng);
    GroupElement g2 = random_group_element(rng);
    g2.a.setZero();
    g2.q.setZero();
    const Mat4 v = vector_rep(g1.lambda);
    Mat4 y = g2.c;
    y.diagonal() *= 2;
    Mat4 expect = v * y * v.transpose();
    expect.diagonal() /= 2;
    EXPECT_LT((compose(g1, g2).c - expect).norm(), 1e-10);
    // Same map on the ten coordinates.
    Eigen::Matrix<double, 10, 1> flat, img;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) flat(sym_index(mu, nu)) = g2.c(mu, nu);
    img = sym_rep(g1.lambda) * flat;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) EXPECT_NEAR(img(sym_index(mu, nu)), expect(mu, nu), 1e-10);
}

TEST(GroupLaw, Associative) {
    std::mt19937 rng(14);
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_group_element(rng), b = random_group_element(rng), c = random_group_element(rng);
        worst = std::max(worst, deviation(compose(compose(a, b), c), compose(a, compose(b, c))));
    }
    EXPECT_LE(worst, 1e-9);
}

TEST(GroupLaw, IdentityAndInverse) {
    std::mt19937 rng(15);
    for (int t = 0; t < 200; ++t) {
        const auto g = random_group_element(rng);
        EXPECT_LT(deviation(compose(g, inverse(g)), identity_element()), 1e-9);
        EXPECT_LT(deviation(compose(inverse(g), g), identity_element()), 1e-9);
        EXPECT_LT(deviation(compose(g, identity_element()), g), 1e-12);
    }
}

TEST(GroupLaw, DerivativeReproducesStructureConstants) {
    const LieAlgebra alg = build_newstein();
    double worst = 0;
    for (int i = 0; i < alg.dimension(); ++i)
        for (int j = i + 1; j < alg.dimension(); ++j) {
            const Eigen::VectorXd d = commutator_coordinates(alg.label(i), alg.label(j), 1e-3) - bracket_coordinates(alg, i, j);
            worst = std::max(worst, d.cwiseAbs().maxCoeff());
            if (d.cwiseAbs().maxCoeff() > 1e-5) ADD_FAILURE() << alg.label(i).name() << " " << alg.label(j).name() << " " << d.transpose();
        }
    EXPECT_LE(worst, 1e-5);
}

TEST(ExtendedGroupLaw, ZeroAngleIsBaseLawInSplitCoordinates) {
    std::mt19937 rng(16);
    for (int t = 0; t < 100; ++t) {
        const auto g1 = random_group_element(rng), g2 = random_group_element(rng);
        const auto e = compose_extended({0, to_split(g1)}, {0, to_split(g2)});
        EXPECT_LT(deviation(from_split(e.g), compose(g1, g2)), 1e-9);
        EXPECT_DOUBLE_EQ(e.k, 0);
    }
    // Literal coordinates differ whenever a_1 and q_2 pair nontrivially.
    GroupElement g1, g2;
    g1.a(0, 0) = 1;
    g2.q(0, 0) = 1;
    EXPECT_GT(deviation(compose_extended({0, g1}, {0, g2}).g, compose(g1, g2)), 0.5);
}

TEST(ExtendedGroupLaw, AssociativeWithInverse) {
    std::mt19937 rng(17);
    double worst = 0, inv = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_extended_element(rng), b = random_extended_element(rng), c = random_extended_element(rng);
        worst = std::max(worst, deviation(compose_extended(compose_extended(a, b), c),
                                          compose_extended(a, compose_extended(b, c))));
        inv = std::max(inv, deviation(compose_extended(a, inverse_extended(a)), ExtendedGroupElement{}));
    }
    EXPECT_LE(worst, 1e-9);
    EXPECT_LE(inv, 1e-9);
}

TEST(ExtendedGroupLaw, DerivativeReproducesCase7) {
    const LieAlgebra alg = build_extended(ExtensionClass{7});
    double worst = 0;
    for (int i = 0; i < alg.dimension(); ++i)
        for (int j = i + 1; j < alg.dimension(); ++j) {
            const Eigen::VectorXd d = commutator_coordinates(alg.label(i), alg.label(j), 1e-3) - bracket_coordinates(alg, i, j);
            worst = std::max(worst, d.cwiseAbs().maxCoeff());
        }
    EXPECT_LE(worst, 1e-5);
}

TEST(Sections, BoostExample) {
    const Mat2c a = boost_section(Vec4(0, 0, 0.75, 1.25), 1.0);
    Mat2c expect = Mat2c::Zero();
    expect(0, 0) = std::sqrt(2.0);
    expect(1, 1) = 1 / std::sqrt(2.0);
    EXPECT_LT((a - expect).norm(), 1e-14);
}

TEST(Sections, BoostMapsRestFrame) {
    std::mt19937 rng(18);
    std::normal_distribution<double> n(0, 2);
    const double m0 = 1.3;
    for (int t = 0; t < 50; ++t) {
        const Vec4 xi = on_shell(Vec3(n(rng), n(rng), n(rng)), m0);
        EXPECT_LT((vector_rep(boost_section(xi, m0)) * Vec4(0, 0, 0, m0) - xi).norm(), 1e-10);
    }
}

TEST(Sections, RotationExampleAndPole) {
    const double lam = 2.0;
    const Mat3 r = so3_rep(rotation_section(Vec3(lam, 0, 0), lam));
    const double c = std::cos(std::numbers::pi / 2), s = std::sin(std::numbers::pi / 2);
    Mat3 expect;
    expect << c, 0, s, 0, 1, 0, -s, 0, c;
    EXPECT_LT((r - expect).norm(), 1e-14);
    EXPECT_LT((rotation_section(Vec3(0, 0, lam), lam) - Mat2c::Identity()).norm(), 1e-15);
    std::mt19937 rng(19);
    std::normal_distribution<double> n(0, 1);
    for (int t = 0; t < 50; ++t) {
        const Vec3 eta = lam * Vec3(n(rng), n(rng), n(rng)).normalized();
        EXPECT_LT((so3_rep(rotation_section(eta, lam)) * Vec3(0, 0, lam) - eta).norm(), 1e-12);
    }
    EXPECT_THROW(rotation_section(Vec3(1e-8, 0, -lam), lam), SectionSingular);
    EXPECT_NO_THROW(rotation_section(Vec3(1e-4, 0, -lam), lam));
}

TEST(WignerPhase, DiagonalAtBasePoint) {
    const double theta = 0.9, m0 = 1.0, lam = 1.0;
    Mat2c l = Mat2c::Zero();
    l(0, 0) = std::exp(I * theta / 2.0);
    l(1, 1) = std::exp(-I * theta / 2.0);
    EXPECT_NEAR(wigner_phase(l, Vec4(0, 0, 0, m0), Vec3(0, 0, lam), m0), theta, 1e-12);
}

TEST(WignerPhase, RotationIsAboutThePole) {
    std::mt19937 rng(20);
    std::normal_distribution<double> n(0, 1);
    const double m0 = 1.0, lam = 1.5;
    for (int t = 0; t < 100; ++t) {
        const Mat2c l = random_sl2c(rng);
        const Vec4 xi = on_shell(Vec3(n(rng), n(rng), n(rng)), m0);
        const Vec3 eta = lam * Vec3(n(rng), n(rng), n(rng) + 2).normalized();
        const Mat2c w = wigner_rotation(l, xi, eta, m0);
        EXPECT_LT(std::abs(w(0, 1)) + std::abs(w(1, 0)), 1e-9);
        EXPECT_NEAR(std::abs(w(0, 0)), 1, 1e-9);
        const Vec3 ep = transport_eta(l, xi, eta, m0);
        EXPECT_NEAR(ep.norm(), lam, 1e-10);
    }
}
