#include "newstein/oscillator.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace newstein {

namespace {

using Mat = Eigen::MatrixXcd;
const std::complex<double> I(0, 1);

double lowered(const Eigen::Vector4d& xi, int mu) { return mu == 4 ? -xi(3) : xi(mu - 1); }

// Spectral decompositions of the oscillator part, keyed by (m0, alpha, cutoff).
struct Spectral {
    Eigen::VectorXd values;
    Mat vectors;
};

const Spectral& spectral(const RepParams& p, const FockBasis& basis, bool with_ell) {
    static std::mutex mu;
    static std::map<std::tuple<double, double, double, int>, Spectral> cache;
    const double ell = with_ell ? p.ell : 0.0;
    const auto key = std::make_tuple(p.m0, p.alpha, ell, basis.cutoff());
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        RepParams q = p;
        q.ell = ell;
        Eigen::SelfAdjointEigenSolver<Mat> es(hamiltonian_K(q, basis).matrix);
        it = cache.emplace(key, Spectral{es.eigenvalues(), es.eigenvectors()}).first;
    }
    return it->second;
}

// Closed-form second-order term: sum_j (2 n_j + 1 + sign (a_j^2 + a_j^dagger^2)) / 2.
Mat quadratic_closed_form(const FockBasis& basis, double sign) {
    const int n = basis.size();
    Mat m = Mat::Zero(n, n);
    for (int c = 0; c < n; ++c) {
        const auto s = basis.state(c);
        for (int j = 0; j < 3; ++j) {
            m(c, c) += (2.0 * s[j] + 1) / 2;
            auto up = s, down = s;
            up[j] += 2;
            down[j] -= 2;
            if (int r = basis.index(up); r >= 0) m(r, c) += sign * std::sqrt((s[j] + 1.0) * (s[j] + 2)) / 2;
            if (s[j] >= 2) m(basis.index(down), c) += sign * std::sqrt(double(s[j]) * (s[j] - 1)) / 2;
        }
    }
    return m;
}

}  // namespace

void RepParams::validate() const {
    if (!(m0 > 0)) throw std::invalid_argument("m0 must be positive");
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
    if (two_j < 0) throw std::invalid_argument("j must be non-negative");
}

FockBasis::FockBasis(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
    for (int a = 0; a <= cutoff; ++a)
        for (int b = 0; a + b <= cutoff; ++b)
            for (int c = 0; a + b + c <= cutoff; ++c) {
                index_[{a, b, c}] = static_cast<int>(states_.size());
                states_.push_back({a, b, c});
            }
}

int FockBasis::degree(int i) const {
    const auto& s = states_.at(i);
    return s[0] + s[1] + s[2];
}

int FockBasis::index(const std::array<int, 3>& n) const {
    auto it = index_.find(n);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> FockBasis::interior_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (interior(i)) out.push_back(i);
    return out;
}

Ladder ladder_matrices(const FockBasis& basis) {
    const int n = basis.size();
    Ladder l;
    for (int j = 0; j < 3; ++j) {
        Mat a = Mat::Zero(n, n);
        for (int c = 0; c < n; ++c) {
            auto s = basis.state(c);
            if (s[j] == 0) continue;
            const double amp = std::sqrt(double(s[j]));
            s[j] -= 1;
            a(basis.index(s), c) = amp;
        }
        l.lower[j] = a;
        l.position[j] = (a + a.adjoint()) / std::sqrt(2.0);
        l.momentum[j] = -I * (a - a.adjoint()) / std::sqrt(2.0);
    }
    return l;
}

double z_scale(const RepParams& p) { return p.m0 / std::sqrt(p.alpha); }
double p_scale(const RepParams& p) { return std::sqrt(p.alpha) / p.m0; }

double interior_norm(const Mat& m, const FockBasis& basis) {
    const auto idx = basis.interior_indices();
    double worst = 0;
    for (int r : idx)
        for (int c : idx) worst = std::max(worst, std::abs(m(r, c)));
    return worst;
}

OscillatorOperator internal_generator(const BasisLabel& x, const Eigen::Vector4d& xi, const RepParams& p,
                                      const FockBasis& basis) {
    using Kind = BasisLabel::Kind;
    const int n = basis.size();
    OscillatorOperator op;
    op.hermitian = true;
    const double k = p.alpha / (p.m0 * p.m0);
    switch (x.kind) {
        case Kind::Tp: op.matrix = lowered(xi, x.i) * Mat::Identity(n, n); break;
        case Kind::C: op.matrix = k * lowered(xi, x.i) * lowered(xi, x.j) * Mat::Identity(n, n); break;
        case Kind::A: {
            // (alpha/m0^2) z^j xi_mu
            const Ladder l = ladder_matrices(basis);
            op.matrix = k * z_scale(p) * lowered(xi, x.j) * l.position.at(x.i - 1);
            break;
        }
        case Kind::Q: {
            // i d/dz^j xi_mu = -(-i d/dz^j) xi_mu
            const Ladder l = ladder_matrices(basis);
            op.matrix = -p_scale(p) * lowered(xi, x.j) * l.momentum.at(x.i - 1);
            break;
        }
        default: throw std::invalid_argument(x.name() + " is not an internal-sector generator");
    }
    return op;
}

OscillatorOperator oscillator_part(const RepParams& p, const FockBasis& basis) {
    const Ladder l = ladder_matrices(basis);
    const int n = basis.size();
    Mat laplace = Mat::Zero(n, n), z2 = Mat::Zero(n, n);
    for (int j = 0; j < 3; ++j) {
        const Mat dz = p_scale(p) * l.momentum[j];  // -i d/dz
        const Mat z = z_scale(p) * l.position[j];
        laplace -= dz * dz;  // Delta = -(-i d/dz)^2
        z2 += z * z;
    }
    const double r = p.m0 * p.m0 / p.alpha;
    OscillatorOperator op;
    op.matrix = 0.5 * (-r * laplace + z2 / r);
    op.matrix = (op.matrix + op.matrix.adjoint()).eval() / 2.0;
    op.hermitian = true;
    return op;
}

OscillatorOperator hamiltonian_K(const RepParams& p, const FockBasis& basis) {
    p.validate();
    OscillatorOperator op = oscillator_part(p, basis);
    op.matrix += 0.5 * p.ell * Mat::Identity(basis.size(), basis.size());
    return op;
}

OscillatorOperator casimir_MN(const RepParams& p, const Eigen::Vector4d& xi, const FockBasis& basis) {
    const int n = basis.size();
    OscillatorOperator op;
    op.matrix = Mat::Zero(n, n);
    op.hermitian = true;
    for (int i = 1; i <= 3; ++i)
        for (int mu = 1; mu <= 4; ++mu) {
            const double ginv = mu == 4 ? -1 : 1;
            const Mat q = internal_generator(BasisLabel::make(BasisLabel::Kind::Q, i, mu), xi, p, basis).matrix;
            op.matrix -= ginv * q * q;
        }
    return op;
}

OscillatorOperator casimir_MA(const RepParams& p, const Eigen::Vector4d& xi, const FockBasis& basis) {
    const int n = basis.size();
    OscillatorOperator op;
    op.matrix = Mat::Zero(n, n);
    op.hermitian = true;
    for (int i = 1; i <= 3; ++i)
        for (int mu = 1; mu <= 4; ++mu) {
            const double ginv = mu == 4 ? -1 : 1;
            const Mat a = internal_generator(BasisLabel::make(BasisLabel::Kind::A, i, mu), xi, p, basis).matrix;
            op.matrix -= ginv * a * a;
        }
    return op;
}

OscillatorOperator laplacian_reference(const RepParams& p, const FockBasis& basis) {
    // -m0^2 Delta_z = alpha (-Delta_u)
    return {p.alpha * quadratic_closed_form(basis, -1), true, true};
}

OscillatorOperator z2_reference(const RepParams& p, const FockBasis& basis) {
    // (alpha^2/m0^2) z^2 = alpha u^2
    return {p.alpha * quadratic_closed_form(basis, 1), true, true};
}

OscillatorOperator W_operator(double k, const RepParams& p, const FockBasis& basis) {
    const Spectral& s = spectral(p, basis, false);
    const Eigen::VectorXcd phase = (I * k * s.values.cast<std::complex<double>>()).array().exp();
    OscillatorOperator op;
    op.matrix = s.vectors * phase.asDiagonal() * s.vectors.adjoint();
    return op;
}

std::vector<SpectrumLevel> spectrum(const RepParams& p, const FockBasis& basis, double tol) {
    const Spectral& s = spectral(p, basis, true);
    std::vector<SpectrumLevel> out;
    for (int i = 0; i < s.values.size(); ++i) {
        double outside = 0;
        for (int r = 0; r < basis.size(); ++r)
            if (!basis.interior(r)) outside += std::norm(s.vectors(r, i));
        const bool in = outside < 1e-12;
        if (!out.empty() && std::abs(s.values(i) - out.back().eigenvalue) <= tol) {
            ++out.back().multiplicity;
            out.back().interior = out.back().interior && in;
        } else {
            out.push_back({s.values(i), 1, in});
        }
    }
    return out;
}

WaveFunction evolve(const WaveFunction& psi, double tau, const RepParams& p, const FockBasis& basis) {
    if (psi.size() != basis.size()) throw std::invalid_argument("state size does not match the basis");
    const Spectral& s = spectral(p, basis, true);
    const Eigen::VectorXcd phase = (-I * tau * s.values.cast<std::complex<double>>()).array().exp();
    return s.vectors * (phase.asDiagonal() * (s.vectors.adjoint() * psi));
}

WaveFunction ground_state(const FockBasis& basis) {
    WaveFunction v = WaveFunction::Zero(basis.size());
    v(basis.index({0, 0, 0})) = 1;
    return v;
}

}  // namespace newstein
