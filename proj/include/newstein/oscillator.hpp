#pragma once

#include "newstein/lie_algebra.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <map>
#include <vector>

namespace newstein {

struct RepParams {
    double m0 = 1;
    double alpha = 1;
    double lambda = 1;
    double ell = 0;
    int two_s = 0;
    int two_j = 0;

    void validate() const;  // throws std::invalid_argument
};

// States (n1, n2, n3) with n1 + n2 + n3 <= cutoff, in lexicographic order.
class FockBasis {
public:
    explicit FockBasis(int cutoff);
    int cutoff() const { return cutoff_; }
    int size() const { return static_cast<int>(states_.size()); }
    const std::array<int, 3>& state(int i) const { return states_.at(i); }
    int degree(int i) const;
    // -1 when the state is outside the truncation.
    int index(const std::array<int, 3>& n) const;
    // Total degree <= cutoff - 2.
    bool interior(int i) const { return degree(i) <= cutoff_ - 2; }
    std::vector<int> interior_indices() const;

private:
    int cutoff_;
    std::vector<std::array<int, 3>> states_;
    std::map<std::array<int, 3>, int> index_;
};

struct OscillatorOperator {
    Eigen::MatrixXcd matrix;
    bool hermitian = false;
    bool exact_on_interior = true;
};

// Dimensionless variables u = (sqrt(alpha) / m0) z, in which the oscillator reads 1/2 (-Delta_u + u^2).
struct Ladder {
    std::array<Eigen::MatrixXcd, 3> lower;     // a_j
    std::array<Eigen::MatrixXcd, 3> position;  // u^j = (a_j + a_j^dagger) / sqrt 2
    std::array<Eigen::MatrixXcd, 3> momentum;  // -i d/du^j = -i (a_j - a_j^dagger) / sqrt 2
};
Ladder ladder_matrices(const FockBasis& basis);

// Conversion factors: z = z_scale * u, -i d/dz = p_scale * (-i d/du).
double z_scale(const RepParams& p);
double p_scale(const RepParams& p);

// Largest entry of the block of m between interior states.
double interior_norm(const Eigen::MatrixXcd& m, const FockBasis& basis);

// Multiplication and differentiation operators Op(X) at fixed xi for X in {Tp, C, A, Q};
// the algebra is represented by rho(X) = i Op(X). xi_mu = g_{mu nu} xi^nu.
OscillatorOperator internal_generator(const BasisLabel& x, const Eigen::Vector4d& xi, const RepParams& p,
                                      const FockBasis& basis);

// 1/2 (-(m0^2/alpha) Delta + (alpha/m0^2) z^2 + ell), assembled from ladder products.
OscillatorOperator hamiltonian_K(const RepParams& p, const FockBasis& basis);
// The same without ell; W(k) = exp(i k oscillator_part).
OscillatorOperator oscillator_part(const RepParams& p, const FockBasis& basis);
// -g^{mu nu} delta^{ij} Op(Q_{i mu}) Op(Q_{j nu}) and the same with A.
OscillatorOperator casimir_MN(const RepParams& p, const Eigen::Vector4d& xi, const FockBasis& basis);
OscillatorOperator casimir_MA(const RepParams& p, const Eigen::Vector4d& xi, const FockBasis& basis);
// -m0^2 Delta and (alpha^2/m0^2) z^2 from the closed-form second-order ladder expressions.
OscillatorOperator laplacian_reference(const RepParams& p, const FockBasis& basis);
OscillatorOperator z2_reference(const RepParams& p, const FockBasis& basis);

OscillatorOperator W_operator(double k, const RepParams& p, const FockBasis& basis);

struct SpectrumLevel {
    double eigenvalue = 0;
    int multiplicity = 0;
    bool interior = true;  // every eigenvector supported on degree <= cutoff - 2
};
// Eigenvalues of hamiltonian_K grouped within tol.
std::vector<SpectrumLevel> spectrum(const RepParams& p, const FockBasis& basis, double tol = 1e-9);

using WaveFunction = Eigen::VectorXcd;
// exp(-i tau H) psi by spectral decomposition of hamiltonian_K.
WaveFunction evolve(const WaveFunction& psi, double tau, const RepParams& p, const FockBasis& basis);
WaveFunction ground_state(const FockBasis& basis);

}  // namespace newstein
