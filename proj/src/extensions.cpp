#include "newstein/extensions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace newstein {

ExtensionMatrix to_matrix(const ExactExtensionMatrix& m) {
    ExtensionMatrix out;
    out << m.beta.get_d(), m.beta_p.get_d(), m.gamma.get_d(), m.gamma_p.get_d();
    return out;
}

SparseExactMatrix derivation_from_matrix(const LieAlgebra& g, const ExactExtensionMatrix& m) {
    if (g.dimension() != 51 && g.dimension() != 41)
        throw std::invalid_argument("derivations are defined on the 51- or 41-dimensional algebra");
    NewsteinLayout lay{g.dimension() == 51 ? 3 : 2};
    SparseExactMatrix d(g.dimension(), g.dimension());
    auto put = [&](int col, SparseVector v) {
        normalize(v);
        d.set_column(col, v);
    };
    for (int i = 1; i <= lay.internal; ++i)
        for (int rho = 1; rho <= 4; ++rho) {
            const int a = lay.A(i, rho), q = lay.Q(i, rho);
            put(a, {{a, m.beta}, {q, m.gamma}});
            put(q, {{a, m.beta_p}, {q, m.gamma_p}});
        }
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu; nu <= 4; ++nu) put(lay.C(mu, nu), {{lay.C(mu, nu), m.trace()}});
    return d;
}

std::vector<std::pair<int, int>> leibniz_violations(const LieAlgebra& g, const SparseExactMatrix& d) {
    const int n = g.dimension();
    if (d.rows() != n || d.cols() != n) throw std::invalid_argument("map does not match the algebra");
    auto br = [&](const SparseVector& x, int j, bool left) {
        SparseVector out;
        for (const auto& [i, c] : x)
            for (const auto& [k, v] : left ? g.bracket_basis(i, j) : g.bracket_basis(j, i)) out.emplace_back(k, c * v);
        normalize(out);
        return out;
    };
    std::vector<std::pair<int, int>> bad;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVector lhs = d.apply(g.bracket_basis(i, j));
            SparseVector rhs = br(d.column(i), j, true);
            axpy(rhs, 1, br(d.column(j), i, false));
            if (lhs != rhs) bad.emplace_back(i, j);
        }
    return bad;
}

std::string jordan_name(JordanType t) {
    switch (t) {
        case JordanType::Zero: return "zero";
        case JordanType::Nilpotent: return "nilpotent";
        case JordanType::Scalar: return "scalar";
        case JordanType::RealDistinct: return "real-distinct";
        case JordanType::Defective: return "defective";
        case JordanType::Complex: return "complex";
    }
    return "?";
}

namespace {

// Shared tail of both classifiers: given the discrete decision and the
// scale-free quantities, fill parameters and the canonical matrix.
//   t = tr / sqrt|det| (det != 0).
void finish(Classification& c, double t) {
    ExtensionMatrix& m = c.canonical;
    m.setZero();
    switch (c.case_id) {
        case 1: break;
        case 2: m << 1, 0, 0, -1; break;
        case 3: {
            const double z = (t + std::copysign(std::sqrt(t * t + 4), t)) / 2;
            c.zeta2 = z;
            m << z, 0, 0, -1 / z;
            break;
        }
        case 4: {
            const double disc = std::max(t * t - 4, 0.0);
            const double z = (t + std::copysign(std::sqrt(disc), t)) / 2;
            c.zeta2 = z;
            m << z, 0, 0, 1 / z;
            break;
        }
        case 5:
            c.zeta2 = c.sign_tr;
            m << c.sign_tr, 0, 0, 0;
            break;
        case 6: m << 0, 0, -1, 0; break;
        case 7: m << 0, 1, -1, 0; break;
        case 8:
            c.jordan_sign = c.sign_tr;
            c.printed_match = false;
            m << c.sign_tr, 0, -1, c.sign_tr;
            break;
        case 9: {
            const double cp = t / 2;
            c.phi = std::acos(cp);
            const double sp = std::sqrt(std::max(1 - cp * cp, 0.0));
            m << cp, sp, -sp, cp;
            break;
        }
    }
}

int decide(Classification& c, int sd, int st, int sdisc, bool zero, bool scalar) {
    c.sign_det = sd;
    c.sign_tr = st;
    if (zero) {
        c.jordan = JordanType::Zero;
        return 1;
    }
    if (sd == 0) {
        c.jordan = st == 0 ? JordanType::Nilpotent : JordanType::RealDistinct;
        return st == 0 ? 6 : 5;
    }
    if (sd < 0) {
        c.jordan = JordanType::RealDistinct;
        return st == 0 ? 2 : 3;
    }
    if (st == 0) {
        c.jordan = JordanType::Complex;
        return 7;
    }
    if (sdisc > 0) {
        c.jordan = JordanType::RealDistinct;
        return 4;
    }
    if (sdisc == 0) {
        c.jordan = scalar ? JordanType::Scalar : JordanType::Defective;
        return scalar ? 4 : 8;
    }
    c.jordan = JordanType::Complex;
    return 9;
}

}  // namespace

Classification classify(const ExactExtensionMatrix& l) {
    Classification c;
    c.exact = true;
    const Scalar tr = l.trace(), det = l.det();
    const Scalar disc = tr * tr - 4 * det;
    const bool zero = l.beta == 0 && l.beta_p == 0 && l.gamma == 0 && l.gamma_p == 0;
    const bool scalar = l.beta_p == 0 && l.gamma == 0 && l.beta == l.gamma_p;
    c.case_id = decide(c, sgn(det), sgn(tr), sgn(disc), zero, scalar);
    double t = 0;
    if (sgn(det) != 0) {
        c.exact_ratio = Scalar(tr * tr / det);
        c.ratio = c.exact_ratio->get_d();
        c.rescale = std::sqrt(std::abs(det.get_d()));
        t = c.sign_tr * std::sqrt(std::abs(c.ratio));
    } else if (sgn(tr) != 0) {
        c.rescale = std::abs(tr.get_d());
    }
    finish(c, t);
    return c;
}

Classification classify(const ExtensionMatrix& l, double tol) {
    Classification c;
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    const double tr = l.trace(), det = l.determinant();
    const double disc = tr * tr - 4 * det;
    auto sign = [](double x, double eps) { return x > eps ? 1 : (x < -eps ? -1 : 0); };
    const int sd = sign(det, tol * scale * scale);
    const int st = sign(tr, tol * scale);
    const int sdisc = sign(disc, tol * scale * scale);
    const bool zero = l.cwiseAbs().maxCoeff() <= tol;
    const bool scalar = std::abs(l(0, 1)) <= tol * scale && std::abs(l(1, 0)) <= tol * scale &&
                        std::abs(l(0, 0) - l(1, 1)) <= tol * scale;
    c.case_id = decide(c, sd, st, sdisc, zero, scalar);
    double t = 0;
    if (sd != 0) {
        c.ratio = tr * tr / det;
        c.rescale = std::sqrt(std::abs(det));
        t = st == 0 ? 0 : st * std::sqrt(std::abs(c.ratio));
    } else if (st != 0) {
        c.rescale = std::abs(tr);
    }
    finish(c, t);
    return c;
}

std::string Classification::describe() const {
    std::ostringstream os;
    os << "case " << case_id << " (" << jordan_name(jordan) << ")";
    if (zeta2) os << " zeta^2=" << *zeta2;
    if (phi) os << " phi=" << *phi;
    if (case_id == 8) os << " sign=" << jordan_sign;
    return os.str();
}

std::optional<ExtensionClass> Classification::to_class() const {
    ExtensionClass cls{case_id};
    if (case_id == 8) {
        cls.jordan_sign = jordan_sign;
        return cls;
    }
    if (case_id == 5) {
        cls.zeta2 = sign_tr;
        return cls;
    }
    if (case_id == 3 || case_id == 4 || case_id == 9) {
        if (!exact_ratio) return std::nullopt;
        // Rational parameters exist when t = tr / sqrt|det| is rational, i.e.
        // |ratio| is a rational square; zeta^2 then needs a rational root too.
        const Scalar r = abs(*exact_ratio);
        mpz_class n = r.get_num(), d = r.get_den(), sn, sd;
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
        mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
        const Scalar t = Scalar(sn, sd) * sign_tr;
        if (case_id == 9) {
            // cos phi = t / 2 rational; sin phi must be rational as well.
            const Scalar cp = t / 2;
            const Scalar s2 = 1 - cp * cp;
            mpz_class a = s2.get_num(), b = s2.get_den(), ra, rb;
            if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return std::nullopt;
            mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
            mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
            cls.cos_phi = cp;
            cls.sin_phi = Scalar(ra, rb);
            cls.sin_phi.canonicalize();
            return cls;
        }
        // zeta^2 solves x^2 - t x -+ 1 = 0: discriminant t^2 + 4 (case 3) or t^2 - 4 (case 4).
        const Scalar disc = t * t + (case_id == 3 ? 4 : -4);
        mpz_class a = disc.get_num(), b = disc.get_den(), ra, rb;
        if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return std::nullopt;
        mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
        mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
        Scalar root(ra, rb);
        root.canonicalize();
        cls.zeta2 = (t + (sign_tr >= 0 ? root : Scalar(-root))) / 2;
        return cls;
    }
    return cls;
}

bool equivalent(const ExactExtensionMatrix& a, const ExactExtensionMatrix& b) {
    const Classification x = classify(a), y = classify(b);
    return x.case_id == y.case_id && x.sign_tr == y.sign_tr && x.sign_det == y.sign_det &&
           x.exact_ratio == y.exact_ratio;
}

bool equivalent(const ExtensionMatrix& a, const ExtensionMatrix& b, double tol) {
    const Classification x = classify(a, tol), y = classify(b, tol);
    if (x.case_id != y.case_id || x.sign_tr != y.sign_tr || x.sign_det != y.sign_det) return false;
    return std::abs(x.ratio - y.ratio) <= 1e3 * tol * (1 + std::abs(x.ratio));
}

ExtensionMatrix similarity_witness(const ExtensionMatrix& l, const Classification& c) {
    const ExtensionMatrix n = l / c.rescale;
    const ExtensionMatrix& m = c.canonical;
    if (c.jordan == JordanType::Zero || c.jordan == JordanType::Scalar) return ExtensionMatrix::Identity();
    // Basis (v, N v) turns N into its companion matrix; pick the best-conditioned v.
    auto cyclic = [](const ExtensionMatrix& x) {
        const Eigen::Vector2d candidates[] = {{1, 0}, {0, 1}, {1, 1}};
        ExtensionMatrix best = ExtensionMatrix::Zero();
        for (const auto& v : candidates) {
            ExtensionMatrix p;
            p.col(0) = v;
            p.col(1) = x * v;
            if (std::abs(p.determinant()) > std::abs(best.determinant())) best = p;
        }
        return best;
    };
    return cyclic(n) * cyclic(m).inverse();
}

}  // namespace newstein
