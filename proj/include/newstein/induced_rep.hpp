#pragma once

#include "newstein/group_law.hpp"
#include "newstein/oscillator.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace newstein {

// A point (xi, eta, z) of the orbit: xi on the mass shell, |eta| = lambda.
struct SamplePoint {
    Vec4 xi = Vec4(0, 0, 0, 1);
    Vec3 eta = Vec3(0, 0, 1);
    Vec3 z = Vec3::Zero();
};

SamplePoint base_point(const RepParams& p);
// Random point with eta kept away from the antipode of the pole (eta^3 > -0.8 lambda).
SamplePoint random_sample_point(std::mt19937& rng, const RepParams& p);
bool on_orbit(const SamplePoint& x, const RepParams& p, double tol = 1e-9);

// p = A_xi R_eta p0 with p0 = (0, 0, lambda, lambda).
Vec4 orbit_momentum(const Vec4& xi, const Vec3& eta, const RepParams& p);
// g_{mu nu} p^mu p^nu for that p.
double free_mass_check(const Vec4& xi, const Vec3& eta, const RepParams& p);

using StateFunction = std::function<Eigen::VectorXcd(const SamplePoint&)>;

// (U(g)F)(xi, eta, z) = exp i{<p,t> + <xi,t'> + <b,a>_1 + <D,c>_2 + s phi} D(j)(R) F(Lambda^-1 xi, eta', R^-1(z - xi_nu q^nu)).
// The phase uses the split coordinate c - beta(a, q) of g.
StateFunction iur_apply(const GroupElement& g, StateFunction f, const RepParams& p);
std::vector<Eigen::VectorXcd> iur_apply(const GroupElement& g, const StateFunction& f,
                                        const std::vector<SamplePoint>& points, const RepParams& p);

// Smooth test function with analytic gradient in the ten coordinates
// (xi^1..xi^4, eta^1..eta^3, z^1..z^3); one component per spin state.
struct TestFunction {
    std::vector<Eigen::Matrix<double, 10, 1>> wave;  // per component
    std::vector<std::complex<double>> amplitude;
    double width = 8;

    Eigen::VectorXcd value(const SamplePoint& x) const;
    Eigen::MatrixXcd gradient(const SamplePoint& x) const;  // components x 10
    StateFunction function() const;
};
std::vector<TestFunction> random_test_functions(std::mt19937& rng, const RepParams& p, int count);

// First-order operator Op = multiplier + spin + sum_k field_k d/dx_k; the algebra acts by i Op.
struct GeneratorField {
    std::complex<double> multiplier = 0;
    Eigen::Matrix<std::complex<double>, 10, 1> field = Eigen::Matrix<std::complex<double>, 10, 1>::Zero();
    Eigen::MatrixXcd spin;  // empty when absent
};

Eigen::VectorXcd apply_generator(const GeneratorField& g, const TestFunction& f, const SamplePoint& x);

// The printed list of infinitesimal generators (with k = lambda), implemented literally.
// Throws SectionSingular near eta^3 = -lambda.
GeneratorField printed_generator(const BasisLabel& x, const SamplePoint& at, const RepParams& p);
// The printed list after the corrections adopted by generator_oracle.
GeneratorField corrected_generator(const BasisLabel& x, const SamplePoint& at, const RepParams& p);
// Coefficients recovered from d/ds U(exp(s X)) on coordinate test functions.
GeneratorField rederived_generator(const BasisLabel& x, const SamplePoint& at, const RepParams& p);

// d/ds|0 U(exp(s X)) F at a point, fourth-order central difference.
Eigen::VectorXcd derivative_of_action(const BasisLabel& x, const StateFunction& f, const SamplePoint& at,
                                      const RepParams& p, double h = 1e-3);

struct GeneratorDiscrepancy {
    std::string label;
    double printed_deviation = 0;
    double corrected_deviation = 0;
    bool flagged = false;       // printed form fails, corrected form passes
    bool consistent = false;    // printed or corrected form passes
    std::string correction;     // description of the adopted correction
    GeneratorField rederived;   // at the reference point
    GeneratorField printed;     // at the reference point
};

struct GeneratorReport {
    std::vector<GeneratorDiscrepancy> rows;
    SamplePoint reference;
    double tolerance = 1e-5;
    bool all_consistent() const;
};

GeneratorReport generator_oracle(const RepParams& p, unsigned seed = 7, int points = 10, int functions = 3);

// Max relative deviation of U(g1) U(g2) F from U(g1 g2) F.
double homomorphism_deviation(const GroupElement& g1, const GroupElement& g2, const StateFunction& f,
                              const std::vector<SamplePoint>& points, const RepParams& p);

// Basis labels of the 51-dim algebra in layout order.
std::vector<BasisLabel> group_generator_labels();

}  // namespace newstein
