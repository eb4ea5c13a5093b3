#pragma once

#include "newstein/lie_algebra.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <random>
#include <string>

namespace newstein {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat34 = Eigen::Matrix<double, 3, 4>;
using Mat10 = Eigen::Matrix<double, 10, 10>;
using Mat2c = Eigen::Matrix2cd;
using Cplx = std::complex<double>;

// Metric g = diag(1, 1, 1, -1), 0-based.
const Mat4& metric_matrix();

// c is stored as a symmetric 4x4 array of coordinates c^{mu nu} on the basis
// C_{mu nu} (mu <= nu). The Lorentz tensor it represents is Y = c with the
// diagonal doubled, so that sum_{mu<=nu} c^{mu nu} P_mu P_nu = 1/2 Y^{mu nu} P_mu P_nu.
struct GroupElement {
    Vec4 t = Vec4::Zero();
    Vec4 tp = Vec4::Zero();
    Mat4 c = Mat4::Zero();
    Mat34 a = Mat34::Zero();  // a(i, mu) = a^{i mu}
    Mat34 q = Mat34::Zero();
    Mat2c lambda = Mat2c::Identity();
    Mat2c r = Mat2c::Identity();
};

struct ExtendedGroupElement {
    double k = 0;
    GroupElement g;
};

// X = x^4 + x.sigma; Lambda acts by X -> Lambda X Lambda^dagger.
Mat4 vector_rep(const Mat2c& lambda);
// S(Lambda) on the ten coordinates c^{mu nu}, mu <= nu, in the order of sym_index.
Mat10 sym_rep(const Mat2c& lambda);
int sym_index(int mu, int nu);  // 0-based mu, nu
Mat4 sym_action(const Mat2c& lambda, const Mat4& c);
// R sigma_k R^dagger = sum_j D(1)_{jk} sigma_j.
Mat3 so3_rep(const Mat2c& r);
// Spin-j matrices on the basis m = j, j-1, .., -j; two_j = 2j.
Eigen::MatrixXcd spin_rep(const Mat2c& r, int two_j);
// S^l with spin_rep(exp(-i theta sigma_l / 2)) = exp(-i theta S^l).
std::array<Eigen::MatrixXcd, 3> spin_generators(int two_j);
// Differential of spin_rep at the identity, for any 2x2 complex X.
Eigen::MatrixXcd spin_differential(const Mat2c& x, int two_j);

// beta^{mu nu}(a, q) = theta^{mu nu} delta_ij (a^{i mu} q^{j nu} + a^{i nu} q^{j mu}).
Mat4 beta(const Mat34& a, const Mat34& q);
// (Lambda (x) R) x, i.e. x^{i mu} -> R^i_j Lambda^mu_nu x^{j nu}.
Mat34 act(const Mat2c& lambda, const Mat2c& r, const Mat34& x);

GroupElement identity_element();
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);
double deviation(const GroupElement& x, const GroupElement& y);

// The extended law is written in split coordinates, where the c entry is
// that of h in g = h k with h = (t, t', c_h, a) and k = (q, Lambda, R):
// c_h = c - beta(a, q).
GroupElement to_split(const GroupElement& g);
GroupElement from_split(const GroupElement& g);

ExtendedGroupElement compose_extended(const ExtendedGroupElement& g1, const ExtendedGroupElement& g2);
ExtendedGroupElement inverse_extended(const ExtendedGroupElement& g);
double deviation(const ExtendedGroupElement& x, const ExtendedGroupElement& y);

// Generators of the covering groups: exp(s X_{mu nu}) covers exp(s M_{mu nu}) with
// (M_{mu nu})^s_t = delta^s_mu g_{nu t} - delta^s_nu g_{mu t}; 1-based indices.
Mat2c sl2c_generator(int mu, int nu);
Mat2c su2_generator(int i, int j);
Mat2c expm(const Mat2c& x);

// One-parameter subgroup exp(s e) for a basis label of the 51-dim algebra, and K.
ExtendedGroupElement exp_basis(const BasisLabel& label, double s);
// First-order coordinates of an element close to the identity, in the basis
// order of the 51-dim algebra followed by K.
Eigen::VectorXd algebra_coordinates(const ExtendedGroupElement& g);

// Random element: Gaussian coordinates, Lambda = exp of a Gaussian sl(2, C) matrix
// with entries of scale boost_scale, R = exp of a Gaussian su(2) matrix.
GroupElement random_group_element(std::mt19937& rng, double scale = 1.0, double boost_scale = 0.4);
ExtendedGroupElement random_extended_element(std::mt19937& rng, double scale = 1.0, double boost_scale = 0.4);

// Largest deviation between (C(s, s) + C(-s, -s)) / (2 s^2), C the group commutator of
// exp(s e_i) and exp(s e_j), and the bracket [e_i, e_j], over all basis pairs. The algebra
// is the 51-dim one or its case (7) extension.
double structure_constant_defect(const LieAlgebra& alg, double s = 1e-3);

// Sections and the little-group phase.
Mat2c boost_section(const Vec4& xi, double m0);
Mat2c rotation_section(const Vec3& eta, double lambda);
// eta' = D(1)(A^-1_{Lambda^-1 xi} Lambda^-1 A_xi) eta.
Vec3 transport_eta(const Mat2c& lambda, const Vec4& xi, const Vec3& eta, double m0);
// W = R_eta^-1 A_xi^-1 Lambda A_{Lambda^-1 xi} R_eta', diagonal with entries e^{+-i phi/2}.
Mat2c wigner_rotation(const Mat2c& lambda, const Vec4& xi, const Vec3& eta, double m0);
double wigner_phase(const Mat2c& lambda, const Vec4& xi, const Vec3& eta, double m0);

class SectionSingular : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace newstein
