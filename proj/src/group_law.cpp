#include "newstein/group_law.hpp"

#include "newstein/algebras.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace newstein {

namespace {

const std::array<Mat2c, 3>& pauli() {
    static const std::array<Mat2c, 3> s = [] {
        const Cplx i(0, 1);
        Mat2c s1, s2, s3;
        s1 << 0, 1, 1, 0;
        s2 << 0, -i, i, 0;
        s3 << 1, 0, 0, -1;
        return std::array<Mat2c, 3>{s1, s2, s3};
    }();
    return s;
}

// Diagonal doubled: coordinates -> tensor, and back.
Mat4 to_tensor(const Mat4& c) {
    Mat4 y = c;
    y.diagonal() *= 2;
    return y;
}
Mat4 from_tensor(const Mat4& y) {
    Mat4 c = y;
    c.diagonal() /= 2;
    return c;
}

void check_unimodular(const Mat2c& m, const char* what) {
    if (std::abs(m.determinant() - Cplx(1)) > 1e-8) throw std::invalid_argument(std::string(what) + " must have determinant 1");
}

double binom(int n, int k) {
    double r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

double factorial(int n) {
    double r = 1;
    for (int t = 2; t <= n; ++t) r *= t;
    return r;
}

Cplx ipow(Cplx z, int n) {
    Cplx r = 1;
    for (int t = 0; t < n; ++t) r *= z;
    return r;
}

// Pauli components z_k = tr(m sigma_k) / 2.
Eigen::Vector3cd pauli_components(const Mat2c& m) {
    Eigen::Vector3cd z;
    for (int k = 0; k < 3; ++k) z(k) = (m * pauli()[k]).trace() / 2.0;
    return z;
}

}  // namespace

const Mat4& metric_matrix() {
    static const Mat4 g = Vec4(1, 1, 1, -1).asDiagonal();
    return g;
}

Mat4 vector_rep(const Mat2c& lambda) {
    check_unimodular(lambda, "Lambda");
    Mat4 out;
    for (int col = 0; col < 4; ++col) {
        Mat2c x = col == 3 ? Mat2c(Mat2c::Identity()) : pauli()[col];
        Mat2c y = lambda * x * lambda.adjoint();
        for (int k = 0; k < 3; ++k) out(k, col) = ((y * pauli()[k]).trace() / 2.0).real();
        out(3, col) = (y.trace() / 2.0).real();
    }
    return out;
}

int sym_index(int mu, int nu) {
    if (mu > nu) std::swap(mu, nu);
    if (mu < 0 || nu > 3) throw std::out_of_range("sym_index");
    static const int start[4] = {0, 4, 7, 9};
    return start[mu] + (nu - mu);
}

Mat4 sym_action(const Mat2c& lambda, const Mat4& c) {
    const Mat4 v = vector_rep(lambda);
    return from_tensor(v * to_tensor(c) * v.transpose());
}

Mat10 sym_rep(const Mat2c& lambda) {
    const Mat4 v = vector_rep(lambda);
    Mat10 out;
    for (int r = 0; r < 4; ++r)
        for (int s = r; s < 4; ++s) {
            Mat4 c = Mat4::Zero();
            c(r, s) = c(s, r) = 1;
            const Mat4 img = from_tensor(v * to_tensor(c) * v.transpose());
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu; nu < 4; ++nu) out(sym_index(mu, nu), sym_index(r, s)) = img(mu, nu);
        }
    return out;
}

Mat3 so3_rep(const Mat2c& r) {
    check_unimodular(r, "R");
    Mat3 out;
    for (int k = 0; k < 3; ++k) {
        const Mat2c y = r * pauli()[k] * r.adjoint();
        for (int j = 0; j < 3; ++j) out(j, k) = ((y * pauli()[j]).trace() / 2.0).real();
    }
    return out;
}

// Spin j acts on degree-2j polynomials in (x, y) by p -> p(U^T (x, y)), with
// orthonormal basis x^a y^b / sqrt(a! b!), a = j + m; row/column index 2j - a.
Eigen::MatrixXcd spin_rep(const Mat2c& u, int two_j) {
    if (two_j < 0) throw std::invalid_argument("spin must be non-negative");
    const int n = two_j + 1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (int a = 0; a <= two_j; ++a) {
        const int b = two_j - a;
        const double norm = std::sqrt(factorial(a) * factorial(b));
        for (int p = 0; p <= a; ++p)
            for (int s = 0; s <= b; ++s) {
                const int ap = p + s;
                const Cplx coef = binom(a, p) * binom(b, s) * ipow(u(0, 0), p) * ipow(u(1, 0), a - p) *
                                  ipow(u(0, 1), s) * ipow(u(1, 1), b - s);
                out(two_j - ap, two_j - a) += coef * std::sqrt(factorial(ap) * factorial(two_j - ap)) / norm;
            }
    }
    return out;
}

Eigen::MatrixXcd spin_differential(const Mat2c& x, int two_j) {
    if (two_j < 0) throw std::invalid_argument("spin must be non-negative");
    const int n = two_j + 1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (int a = 0; a <= two_j; ++a) {
        const int b = two_j - a, col = two_j - a;
        out(col, col) += double(a) * x(0, 0) + double(b) * x(1, 1);
        if (a > 0) out(col + 1, col) += x(1, 0) * std::sqrt(double(a) * (b + 1));
        if (b > 0) out(col - 1, col) += x(0, 1) * std::sqrt(double(b) * (a + 1));
    }
    return out;
}

std::array<Eigen::MatrixXcd, 3> spin_generators(int two_j) {
    std::array<Eigen::MatrixXcd, 3> s;
    for (int l = 0; l < 3; ++l) s[l] = spin_differential(pauli()[l] / 2.0, two_j);
    return s;
}

Mat4 beta(const Mat34& a, const Mat34& q) {
    const Mat4 x = a.transpose() * q;  // x(mu, nu) = sum_i a^{i mu} q^{i nu}
    return from_tensor(x + x.transpose());
}

Mat34 act(const Mat2c& lambda, const Mat2c& r, const Mat34& x) {
    return so3_rep(r) * x * vector_rep(lambda).transpose();
}

GroupElement identity_element() { return {}; }

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    const Mat4 v = vector_rep(g1.lambda);
    GroupElement g;
    g.t = g1.t + v * g2.t;
    g.tp = g1.tp + v * g2.tp;
    g.c = g1.c + sym_action(g1.lambda, g2.c) + beta(g1.a, act(g1.lambda, g1.r, g2.q));
    g.a = g1.a + act(g1.lambda, g1.r, g2.a);
    g.q = g1.q + act(g1.lambda, g1.r, g2.q);
    g.lambda = g1.lambda * g2.lambda;
    g.r = g1.r * g2.r;
    return g;
}

GroupElement inverse(const GroupElement& g) {
    GroupElement h;
    h.lambda = g.lambda.inverse();
    h.r = g.r.inverse();
    const Mat4 vi = vector_rep(h.lambda);
    h.t = -vi * g.t;
    h.tp = -vi * g.tp;
    h.a = -act(h.lambda, h.r, g.a);
    h.q = -act(h.lambda, h.r, g.q);
    // c enters the product linearly through S(Lambda).
    h.c = -sym_action(h.lambda, compose(g, h).c);
    return h;
}

double deviation(const GroupElement& x, const GroupElement& y) {
    double d = 0;
    d = std::max(d, (x.t - y.t).cwiseAbs().maxCoeff());
    d = std::max(d, (x.tp - y.tp).cwiseAbs().maxCoeff());
    d = std::max(d, (x.c - y.c).cwiseAbs().maxCoeff());
    d = std::max(d, (x.a - y.a).cwiseAbs().maxCoeff());
    d = std::max(d, (x.q - y.q).cwiseAbs().maxCoeff());
    d = std::max(d, (x.lambda - y.lambda).cwiseAbs().maxCoeff());
    d = std::max(d, (x.r - y.r).cwiseAbs().maxCoeff());
    return d;
}

GroupElement to_split(const GroupElement& g) {
    GroupElement h = g;
    h.c = g.c - beta(g.a, g.q);
    return h;
}

GroupElement from_split(const GroupElement& g) {
    GroupElement h = g;
    h.c = g.c + beta(g.a, g.q);
    return h;
}

ExtendedGroupElement compose_extended(const ExtendedGroupElement& x1, const ExtendedGroupElement& x2) {
    const GroupElement &g1 = x1.g, &g2 = x2.g;
    const double ck = std::cos(x2.k), sk = std::sin(x2.k);
    const Mat4 v = vector_rep(g1.lambda);
    const Mat34 a2 = act(g1.lambda, g1.r, g2.a), q2 = act(g1.lambda, g1.r, g2.q);
    ExtendedGroupElement out;
    out.k = x1.k + x2.k;
    GroupElement& g = out.g;
    g.t = g1.t + v * g2.t;
    g.tp = g1.tp + v * g2.tp;
    g.c = g1.c + sym_action(g1.lambda, g2.c) + sk * sk * beta(g1.a, g1.q) -
          0.25 * std::sin(2 * x2.k) * (beta(g1.a, g1.a) - beta(g1.q, g1.q)) - beta(g1.q * ck + g1.a * sk, a2);
    g.a = g1.a * ck - g1.q * sk + a2;
    g.q = g1.q * ck + g1.a * sk + q2;
    g.lambda = g1.lambda * g2.lambda;
    g.r = g1.r * g2.r;
    return out;
}

ExtendedGroupElement inverse_extended(const ExtendedGroupElement& x) {
    const GroupElement& g = x.g;
    const double ck = std::cos(x.k), sk = std::sin(x.k);
    ExtendedGroupElement out;
    out.k = -x.k;
    GroupElement& h = out.g;
    h.lambda = g.lambda.inverse();
    h.r = g.r.inverse();
    const Mat4 vi = vector_rep(h.lambda);
    h.t = -vi * g.t;
    h.tp = -vi * g.tp;
    h.a = -act(h.lambda, h.r, g.a * ck + g.q * sk);
    h.q = -act(h.lambda, h.r, g.q * ck - g.a * sk);
    h.c = -sym_action(h.lambda, compose_extended(x, out).g.c);
    return out;
}

double deviation(const ExtendedGroupElement& x, const ExtendedGroupElement& y) {
    return std::max(std::abs(x.k - y.k), deviation(x.g, y.g));
}

Mat2c expm(const Mat2c& x) { return x.exp(); }

Mat2c sl2c_generator(int mu, int nu) {
    if (mu == nu || mu < 1 || nu < 1 || mu > 4 || nu > 4) throw std::invalid_argument("bad Lorentz index pair");
    if (mu > nu) return -sl2c_generator(nu, mu);
    const Cplx i(0, 1);
    const auto& s = pauli();
    if (nu == 4) return -0.5 * s[mu - 1];
    if (mu == 1 && nu == 2) return 0.5 * i * s[2];
    if (mu == 1 && nu == 3) return -0.5 * i * s[1];
    return 0.5 * i * s[0];
}

Mat2c su2_generator(int i, int j) {
    if (i > 3 || j > 3) throw std::invalid_argument("bad rotation index pair");
    return sl2c_generator(i, j);
}

ExtendedGroupElement exp_basis(const BasisLabel& l, double s) {
    using Kind = BasisLabel::Kind;
    ExtendedGroupElement x;
    GroupElement& g = x.g;
    switch (l.kind) {
        case Kind::L: g.lambda = expm(s * sl2c_generator(l.i, l.j)); break;
        case Kind::T: g.t(l.i - 1) = s; break;
        case Kind::Tp: g.tp(l.i - 1) = s; break;
        case Kind::C: g.c(l.i - 1, l.j - 1) = g.c(l.j - 1, l.i - 1) = s; break;
        case Kind::A: g.a(l.i - 1, l.j - 1) = s; break;
        case Kind::Q: g.q(l.i - 1, l.j - 1) = s; break;
        case Kind::J:
            if (l.i == 0) throw std::invalid_argument("the group law covers three internal dimensions");
            g.r = expm(s * su2_generator(l.i, l.j));
            break;
        case Kind::K: x.k = s; break;
        default: throw std::invalid_argument("no one-parameter subgroup for " + l.name());
    }
    return x;
}

Eigen::VectorXd algebra_coordinates(const ExtendedGroupElement& x) {
    const NewsteinLayout lay;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(lay.dimension() + 1);
    const GroupElement& g = x.g;
    for (int mu = 1; mu <= 4; ++mu) {
        v(lay.T(mu)) = g.t(mu - 1);
        v(lay.Tp(mu)) = g.tp(mu - 1);
        for (int nu = mu; nu <= 4; ++nu) v(lay.C(mu, nu)) = g.c(mu - 1, nu - 1);
        for (int i = 1; i <= 3; ++i) {
            v(lay.A(i, mu)) = g.a(i - 1, mu - 1);
            v(lay.Q(i, mu)) = g.q(i - 1, mu - 1);
        }
    }
    // (M - M^-1) / 2 = log M up to third order.
    const Eigen::Vector3cd z = pauli_components((g.lambda - g.lambda.inverse()) / 2.0);
    v(lay.L(1, 2)) = 2 * z(2).imag();
    v(lay.L(1, 3)) = -2 * z(1).imag();
    v(lay.L(2, 3)) = 2 * z(0).imag();
    for (int k = 1; k <= 3; ++k) v(lay.L(k, 4)) = -2 * z(k - 1).real();
    const Eigen::Vector3cd w = pauli_components((g.r - g.r.inverse()) / 2.0);
    v(lay.J(1, 2)) = 2 * w(2).imag();
    v(lay.J(1, 3)) = -2 * w(1).imag();
    v(lay.J(2, 3)) = 2 * w(0).imag();
    v(lay.K()) = x.k;
    return v;
}

GroupElement random_group_element(std::mt19937& rng, double scale, double boost_scale) {
    std::normal_distribution<double> n(0, scale), b(0, boost_scale), r(0, 1.5);
    GroupElement g;
    g.t = Vec4::NullaryExpr([&] { return n(rng); });
    g.tp = Vec4::NullaryExpr([&] { return n(rng); });
    const Mat4 c = Mat4::NullaryExpr([&] { return n(rng); });
    g.c = (c + c.transpose()) / 2;
    g.a = Mat34::NullaryExpr([&] { return n(rng); });
    g.q = Mat34::NullaryExpr([&] { return n(rng); });
    Mat2c x;
    x << Cplx(b(rng), b(rng)), Cplx(b(rng), b(rng)), Cplx(b(rng), b(rng)), 0;
    x(1, 1) = -x(0, 0);
    g.lambda = expm(x);
    g.r = expm(r(rng) * su2_generator(1, 2) + r(rng) * su2_generator(1, 3) + r(rng) * su2_generator(2, 3));
    return g;
}

ExtendedGroupElement random_extended_element(std::mt19937& rng, double scale, double boost_scale) {
    std::uniform_real_distribution<double> k(-3, 3);
    const double angle = k(rng);
    return {angle, random_group_element(rng, scale, boost_scale)};
}

double structure_constant_defect(const LieAlgebra& alg, double s) {
    if (alg.dimension() != 51 && alg.dimension() != 52)
        throw std::invalid_argument("the group law covers the 51-dim algebra and its case (7) extension");
    auto comm = [&](const BasisLabel& x, const BasisLabel& y, double a) {
        const auto gx = exp_basis(x, a), gy = exp_basis(y, a);
        return algebra_coordinates(
            compose_extended(compose_extended(gx, gy), compose_extended(inverse_extended(gx), inverse_extended(gy))));
    };
    double worst = 0;
    for (int i = 0; i < alg.dimension(); ++i)
        for (int j = i + 1; j < alg.dimension(); ++j) {
            Eigen::VectorXd d = (comm(alg.label(i), alg.label(j), s) + comm(alg.label(i), alg.label(j), -s)) / (2 * s * s);
            for (const auto& [k, c] : alg.bracket_basis(i, j)) d(k) -= c.get_d();
            worst = std::max(worst, d.cwiseAbs().maxCoeff());
        }
    return worst;
}

Mat2c boost_section(const Vec4& xi, double m0) {
    if (m0 <= 0) throw std::invalid_argument("m0 must be positive");
    if (m0 + xi(3) <= 0) throw SectionSingular("boost section needs m0 + xi^4 > 0");
    Mat2c a = (m0 + xi(3)) * Mat2c::Identity();
    for (int k = 0; k < 3; ++k) a += xi(k) * pauli()[k];
    return a / std::sqrt(2 * m0 * (m0 + xi(3)));
}

Mat2c rotation_section(const Vec3& eta, double lambda) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    const double r = eta.norm();
    if (r == 0) throw SectionSingular("rotation section needs eta != 0");
    const Vec3 n = eta / r;
    // Rotation by theta about e3 x n; cos(theta/2) = sqrt((1 + n3) / 2).
    const double ch = std::sqrt(std::max(0.0, (1 + n(2)) / 2));
    if (ch < 5e-7) throw SectionSingular("rotation section is singular at the antipode of the pole");
    const Cplx i(0, 1);
    // sin(theta/2) * axis = (-n2, n1, 0) / (2 cos(theta/2)).
    return ch * Mat2c::Identity() - i * ((-n(1) * pauli()[0] + n(0) * pauli()[1]) / (2 * ch));
}

namespace {

Mat2c little_group_element(const Mat2c& lambda, const Vec4& xi, double m0) {
    const Mat2c li = lambda.inverse();
    const Vec4 back = vector_rep(li) * xi;
    return boost_section(back, m0).inverse() * li * boost_section(xi, m0);
}

}  // namespace

Vec3 transport_eta(const Mat2c& lambda, const Vec4& xi, const Vec3& eta, double m0) {
    return so3_rep(little_group_element(lambda, xi, m0)) * eta;
}

Mat2c wigner_rotation(const Mat2c& lambda, const Vec4& xi, const Vec3& eta, double m0) {
    const Mat2c u = little_group_element(lambda, xi, m0);
    const double lam = eta.norm();
    const Vec3 eta_p = so3_rep(u) * eta;
    return rotation_section(eta, lam).inverse() * u.inverse() * rotation_section(eta_p, lam);
}

double wigner_phase(const Mat2c& lambda, const Vec4& xi, const Vec3& eta, double m0) {
    return 2 * std::arg(wigner_rotation(lambda, xi, eta, m0)(0, 0));
}

}  // namespace newstein
