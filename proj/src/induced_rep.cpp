#include "newstein/induced_rep.hpp"

#include "newstein/algebras.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace newstein {

namespace {

using Cplx = std::complex<double>;
using Vec10 = Eigen::Matrix<double, 10, 1>;
using CVec10 = Eigen::Matrix<Cplx, 10, 1>;
const Cplx I(0, 1);

double lowered(const Vec4& v, int mu) { return mu == 4 ? -v(3) : v(mu - 1); }

Vec10 coordinates(const SamplePoint& x) {
    Vec10 c;
    c << x.xi, x.eta, x.z;
    return c;
}

// Coordinate slots.
constexpr int XI = 0, ETA = 4, Z = 7;

double spin_value(const RepParams& p) { return p.two_s / 2.0; }

}  // namespace

SamplePoint base_point(const RepParams& p) {
    SamplePoint x;
    x.xi = Vec4(0, 0, 0, p.m0);
    x.eta = Vec3(0, 0, p.lambda);
    return x;
}

SamplePoint random_sample_point(std::mt19937& rng, const RepParams& p) {
    std::normal_distribution<double> n(0, 0.6);
    SamplePoint x;
    const Vec3 v(n(rng), n(rng), n(rng));
    x.xi = Vec4(v(0), v(1), v(2), std::sqrt(p.m0 * p.m0 + v.squaredNorm()));
    Vec3 e;
    do {
        e = Vec3(n(rng), n(rng), n(rng)).normalized();
    } while (e(2) < -0.8);
    x.eta = p.lambda * e;
    x.z = Vec3(n(rng), n(rng), n(rng));
    return x;
}

bool on_orbit(const SamplePoint& x, const RepParams& p, double tol) {
    const double shell = x.xi.head<3>().squaredNorm() - x.xi(3) * x.xi(3) + p.m0 * p.m0;
    return std::abs(shell) <= tol * std::max(1.0, x.xi(3) * x.xi(3)) && x.xi(3) > 0 &&
           std::abs(x.eta.norm() - p.lambda) <= tol * p.lambda;
}

Vec4 orbit_momentum(const Vec4& xi, const Vec3& eta, const RepParams& p) {
    const Vec3 e = so3_rep(rotation_section(eta, p.lambda)) * Vec3(0, 0, p.lambda);
    return vector_rep(boost_section(xi, p.m0)) * Vec4(e(0), e(1), e(2), p.lambda);
}

double free_mass_check(const Vec4& xi, const Vec3& eta, const RepParams& p) {
    const Vec4 q = orbit_momentum(xi, eta, p);
    return q.dot(metric_matrix() * q);
}

StateFunction iur_apply(const GroupElement& g, StateFunction f, const RepParams& p) {
    p.validate();
    const GroupElement h = to_split(g);
    const Mat2c lambda_inv = g.lambda.inverse();
    const Mat4 back = vector_rep(lambda_inv);
    const Mat3 r_inv = so3_rep(g.r).transpose();
    const Eigen::MatrixXcd spin = spin_rep(g.r, p.two_j);
    const double k = p.alpha / (p.m0 * p.m0);
    return [=](const SamplePoint& x) -> Eigen::VectorXcd {
        const Mat4& gm = metric_matrix();
        const Vec4 mom = orbit_momentum(x.xi, x.eta, p);
        double phase = mom.dot(gm * h.t) + x.xi.dot(gm * h.tp);
        const Vec4 xi_low = gm * x.xi;
        phase += k * x.z.dot(h.a * xi_low);
        double pair = 0;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu; nu < 4; ++nu) pair += xi_low(mu) * xi_low(nu) * h.c(mu, nu);
        phase += k * pair;
        const Mat2c w = wigner_rotation(g.lambda, x.xi, x.eta, p.m0);
        const Cplx unit = w(0, 0) / std::abs(w(0, 0));
        Cplx spin_phase = 1;
        for (int t = 0; t < std::abs(p.two_s); ++t) spin_phase *= p.two_s > 0 ? unit : std::conj(unit);
        SamplePoint y;
        y.xi = back * x.xi;
        y.eta = transport_eta(g.lambda, x.xi, x.eta, p.m0);
        y.z = r_inv * (x.z - h.q * xi_low);
        return std::exp(I * phase) * spin_phase * (spin * f(y));
    };
}

std::vector<Eigen::VectorXcd> iur_apply(const GroupElement& g, const StateFunction& f,
                                        const std::vector<SamplePoint>& points, const RepParams& p) {
    const StateFunction u = iur_apply(g, f, p);
    std::vector<Eigen::VectorXcd> out;
    out.reserve(points.size());
    for (const auto& x : points) out.push_back(u(x));
    return out;
}

Eigen::VectorXcd TestFunction::value(const SamplePoint& x) const {
    const Vec10 c = coordinates(x);
    const double damp = std::exp(-x.z.squaredNorm() / width);
    Eigen::VectorXcd v(wave.size());
    for (std::size_t m = 0; m < wave.size(); ++m) v(m) = amplitude[m] * std::exp(I * wave[m].dot(c)) * damp;
    return v;
}

Eigen::MatrixXcd TestFunction::gradient(const SamplePoint& x) const {
    const Eigen::VectorXcd v = value(x);
    Eigen::MatrixXcd g(wave.size(), 10);
    for (std::size_t m = 0; m < wave.size(); ++m) {
        CVec10 d = I * wave[m].cast<Cplx>();
        for (int k = 0; k < 3; ++k) d(Z + k) -= 2 * x.z(k) / width;
        g.row(m) = (d * v(m)).transpose();
    }
    return g;
}

StateFunction TestFunction::function() const {
    TestFunction copy = *this;
    return [copy](const SamplePoint& x) { return copy.value(x); };
}

std::vector<TestFunction> random_test_functions(std::mt19937& rng, const RepParams& p, int count) {
    std::normal_distribution<double> n(0, 0.7);
    std::vector<TestFunction> out;
    for (int t = 0; t < count; ++t) {
        TestFunction f;
        for (int m = 0; m <= p.two_j; ++m) {
            f.wave.push_back(Vec10::NullaryExpr([&] { return n(rng); }));
            f.amplitude.push_back(Cplx(n(rng), n(rng)) + 1.0);
        }
        out.push_back(f);
    }
    return out;
}

Eigen::VectorXcd apply_generator(const GeneratorField& g, const TestFunction& f, const SamplePoint& x) {
    const Eigen::VectorXcd v = f.value(x);
    Eigen::VectorXcd out = g.multiplier * v + f.gradient(x) * g.field;
    if (g.spin.size() > 0) out += g.spin * v;
    return out;
}

namespace {

void check_chart(const SamplePoint& at, const RepParams& p) {
    if (p.lambda + at.eta(2) < 1e-6 * p.lambda) throw SectionSingular("generator chart is singular at eta^3 = -lambda");
}

// (v ^ d/dv)^l in slot offset: l = 1: v2 d3 - v3 d2, l = 2: v3 d1 - v1 d3, l = 3: v1 d2 - v2 d1.
void add_wedge(CVec10& f, int offset, const Eigen::Vector3d& v, int l, Cplx c) {
    const int a = l % 3, b = (l + 1) % 3;  // (l = 1) -> (1, 2) 0-based -> v2 d3 - v3 d2
    f(offset + b) += c * v(a);
    f(offset + a) -= c * v(b);
}

// Rotation generators in the printed cyclic labelling (23, 31, 12) -> l = 1, 2, 3.
int cyclic_axis(int i, int j, int& sign) {
    if (i == 2 && j == 3) return sign = 1, 1;
    if (i == 1 && j == 3) return sign = -1, 2;  // L13 = -L31
    if (i == 1 && j == 2) return sign = 1, 3;
    throw std::invalid_argument("not a rotation pair");
}

GeneratorField generator(const BasisLabel& x, const SamplePoint& at, const RepParams& p, bool corrected) {
    using Kind = BasisLabel::Kind;
    check_chart(at, p);
    GeneratorField g;
    const double k = p.lambda, s = spin_value(p), m0 = p.m0;
    const Vec4& xi = at.xi;
    const Vec3& eta = at.eta;
    const double kk = k + eta(2), mm = m0 + xi(3);
    const double ka = p.alpha / (m0 * m0);
    const Eigen::Vector3d xiv = xi.head<3>();
    switch (x.kind) {
        case Kind::Tp: g.multiplier = lowered(xi, x.i); break;
        case Kind::T: g.multiplier = lowered(orbit_momentum(xi, eta, p), x.i); break;
        case Kind::C: g.multiplier = ka * lowered(xi, x.i) * lowered(xi, x.j); break;
        case Kind::A: g.multiplier = ka * at.z(x.i - 1) * lowered(xi, x.j); break;
        case Kind::Q: g.field(Z + x.i - 1) = I * lowered(xi, x.j); break;
        case Kind::J: {
            int sign = 1;
            const int l = cyclic_axis(x.i, x.j, sign);
            g.spin = double(sign) * spin_generators(p.two_j)[l - 1];
            // Printed: S + i (z ^ d/dz); the orbital sign is reversed under the correction.
            add_wedge(g.field, Z, at.z, l, double(sign) * (corrected ? -I : I));
            break;
        }
        case Kind::L: {
            const double orbital = corrected ? -1.0 : 1.0;
            if (x.j <= 3) {
                int sign = 1;
                const int l = cyclic_axis(x.i, x.j, sign);
                const double mult = l == 1 ? s * eta(0) / kk : l == 2 ? s * eta(1) / kk : s;
                g.multiplier = sign * mult;
                add_wedge(g.field, XI, xiv, l, double(sign) * orbital * I);
                add_wedge(g.field, ETA, eta, l, double(sign) * orbital * I);
                break;
            }
            CVec10 f = CVec10::Zero();
            switch (x.i) {
                case 1:
                    g.multiplier = s * (eta(1) * xi(2) - xi(1) * kk) / (kk * mm);
                    f(ETA + 0) = (xi(2) * eta(2) + xi(1) * eta(1)) / mm;
                    f(ETA + 1) = -eta(0) * xi(1) / mm;
                    f(ETA + 2) = -eta(0) * xi(2) / mm;
                    f(XI + 0) = xi(3);
                    f(XI + 3) = xi(0);
                    f *= I;
                    break;
                case 2:
                    g.multiplier = s * (-eta(0) * xi(2) + xi(0) * kk) / (kk * mm);
                    if (corrected) {
                        f(ETA + 0) = -xi(0) * eta(1) / mm;
                        f(ETA + 1) = (xi(0) * eta(0) + xi(2) * eta(2)) / mm;
                    } else {
                        f(ETA + 0) = -(xi(0) * eta(1) + xi(0) * eta(1)) / mm;
                        f(ETA + 1) = (eta(0) + xi(0) + xi(2) * eta(2)) / mm;
                    }
                    f(ETA + 2) = -eta(1) * xi(2) / mm;
                    f(XI + 1) = xi(3);
                    f(XI + 3) = xi(1);
                    if (corrected) f *= I;  // the printed braces carry no i
                    break;
                case 3:
                    g.multiplier = s * (eta(0) * xi(1) - xi(0) * eta(1)) / (kk * mm);
                    f(ETA + 0) = -eta(2) * xi(0) / mm;
                    f(ETA + 1) = -eta(2) * xi(1) / mm;
                    f(ETA + 2) = (eta(0) * xi(0) + eta(1) * xi(1)) / mm;
                    f(XI + 2) = xi(3);
                    f(XI + 3) = xi(2);
                    f *= I;
                    break;
            }
            g.field = orbital * f;
            break;
        }
        default: throw std::invalid_argument("no generator formula for " + x.name());
    }
    return g;
}

}  // namespace

GeneratorField printed_generator(const BasisLabel& x, const SamplePoint& at, const RepParams& p) {
    return generator(x, at, p, false);
}

GeneratorField corrected_generator(const BasisLabel& x, const SamplePoint& at, const RepParams& p) {
    return generator(x, at, p, true);
}

Eigen::VectorXcd derivative_of_action(const BasisLabel& x, const StateFunction& f, const SamplePoint& at,
                                      const RepParams& p, double h) {
    auto u = [&](double s) { return iur_apply(exp_basis(x, s).g, f, p)(at); };
    return (-u(2 * h) + 8.0 * u(h) - 8.0 * u(-h) + u(-2 * h)) / (12 * h);
}

GeneratorField rederived_generator(const BasisLabel& x, const SamplePoint& at, const RepParams& p) {
    RepParams scalar = p;
    scalar.two_j = 0;
    GeneratorField g;
    const StateFunction one = [](const SamplePoint&) { return Eigen::VectorXcd::Ones(1); };
    g.multiplier = -I * derivative_of_action(x, one, at, scalar)(0);
    const Vec10 c0 = coordinates(at);
    for (int k = 0; k < 10; ++k) {
        // Coordinate function, shifted so that it vanishes at the point.
        const StateFunction coord = [k, c0](const SamplePoint& y) {
            return Eigen::VectorXcd::Constant(1, coordinates(y)(k) - c0(k));
        };
        g.field(k) = -I * derivative_of_action(x, coord, at, scalar)(0);
    }
    if (p.two_j > 0) {
        const int n = p.two_j + 1;
        g.spin = Eigen::MatrixXcd::Zero(n, n);
        for (int m = 0; m < n; ++m) {
            const StateFunction e = [m, n](const SamplePoint&) {
                Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
                v(m) = 1;
                return v;
            };
            g.spin.col(m) = -I * derivative_of_action(x, e, at, p);
            g.spin(m, m) -= g.multiplier;
        }
    }
    return g;
}

double homomorphism_deviation(const GroupElement& g1, const GroupElement& g2, const StateFunction& f,
                              const std::vector<SamplePoint>& points, const RepParams& p) {
    const StateFunction lhs = iur_apply(g1, iur_apply(g2, f, p), p);
    const StateFunction rhs = iur_apply(compose(g1, g2), f, p);
    double worst = 0;
    for (const auto& x : points) {
        const Eigen::VectorXcd a = lhs(x), b = rhs(x);
        worst = std::max(worst, (a - b).cwiseAbs().maxCoeff() / std::max(1e-300, b.cwiseAbs().maxCoeff()));
    }
    return worst;
}

std::vector<BasisLabel> group_generator_labels() { return newstein_labels(3); }

bool GeneratorReport::all_consistent() const {
    for (const auto& r : rows)
        if (!r.consistent) return false;
    return true;
}

GeneratorReport generator_oracle(const RepParams& p, unsigned seed, int points, int functions) {
    p.validate();
    std::mt19937 rng(seed);
    std::vector<SamplePoint> pts;
    for (int t = 0; t < points; ++t) pts.push_back(random_sample_point(rng, p));
    const auto tests = random_test_functions(rng, p, functions);
    GeneratorReport rep;
    rep.reference = pts.front();
    for (const auto& label : group_generator_labels()) {
        GeneratorDiscrepancy row;
        row.label = label.name();
        for (const auto& x : pts)
            for (const auto& f : tests) {
                const Eigen::VectorXcd truth = derivative_of_action(label, f.function(), x, p);
                const double scale = std::max(1.0, truth.cwiseAbs().maxCoeff());
                const Eigen::VectorXcd printed = I * apply_generator(printed_generator(label, x, p), f, x);
                const Eigen::VectorXcd fixed = I * apply_generator(corrected_generator(label, x, p), f, x);
                row.printed_deviation = std::max(row.printed_deviation, (truth - printed).cwiseAbs().maxCoeff() / scale);
                row.corrected_deviation = std::max(row.corrected_deviation, (truth - fixed).cwiseAbs().maxCoeff() / scale);
            }
        const bool printed_ok = row.printed_deviation <= rep.tolerance;
        const bool fixed_ok = row.corrected_deviation <= rep.tolerance;
        row.consistent = printed_ok || fixed_ok;
        row.flagged = !printed_ok && fixed_ok;
        if (row.flagged) {
            if (label.kind == BasisLabel::Kind::L && label.i == 2 && label.j == 4)
                row.correction = "eta-coefficients -xi1 eta2 and (xi1 eta1 + xi3 eta3), braces multiplied by -i";
            else
                row.correction = "orbital part with opposite sign";
        }
        row.printed = printed_generator(label, rep.reference, p);
        row.rederived = rederived_generator(label, rep.reference, p);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace newstein
