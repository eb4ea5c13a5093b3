#include "newstein/algebras.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace newstein {

using Kind = BasisLabel::Kind;

int NewsteinLayout::L(int mu, int nu) const {
    static const int table[5][5] = {{-1, -1, -1, -1, -1},
                                    {-1, -1, 0, 1, 2},
                                    {-1, -1, -1, 3, 4},
                                    {-1, -1, -1, -1, 5},
                                    {-1, -1, -1, -1, -1}};
    if (mu < 1 || nu > 4 || mu >= nu) throw std::out_of_range("L index");
    return table[mu][nu];
}

int NewsteinLayout::C(int mu, int nu) const {
    if (mu > nu) std::swap(mu, nu);
    if (mu < 1 || nu > 4) throw std::out_of_range("C index");
    static const int start[5] = {0, 0, 4, 7, 9};
    return 14 + start[mu] + (nu - mu);
}

int NewsteinLayout::J(int i, int j) const {
    const int base = 24 + 8 * internal;
    if (internal == 2) {
        if (i != 1 || j != 2) throw std::out_of_range("J index");
        return base;
    }
    if (i == 1 && j == 2) return base;
    if (i == 1 && j == 3) return base + 1;
    if (i == 2 && j == 3) return base + 2;
    throw std::out_of_range("J index");
}

std::vector<BasisLabel> newstein_labels(int internal) {
    std::vector<BasisLabel> out;
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu + 1; nu <= 4; ++nu) out.push_back(BasisLabel::make(Kind::L, mu, nu));
    for (int mu = 1; mu <= 4; ++mu) out.push_back(BasisLabel::make(Kind::T, mu));
    for (int mu = 1; mu <= 4; ++mu) out.push_back(BasisLabel::make(Kind::Tp, mu));
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu; nu <= 4; ++nu) out.push_back(BasisLabel::make(Kind::C, mu, nu));
    for (int i = 1; i <= internal; ++i)
        for (int mu = 1; mu <= 4; ++mu) out.push_back(BasisLabel::make(Kind::A, i, mu));
    for (int i = 1; i <= internal; ++i)
        for (int mu = 1; mu <= 4; ++mu) out.push_back(BasisLabel::make(Kind::Q, i, mu));
    if (internal == 2) {
        out.push_back(BasisLabel::make(Kind::J));
    } else {
        out.push_back(BasisLabel::make(Kind::J, 1, 2));
        out.push_back(BasisLabel::make(Kind::J, 1, 3));
        out.push_back(BasisLabel::make(Kind::J, 2, 3));
    }
    return out;
}

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

// Bracket terms as (basis index, coefficient).
using Terms = std::vector<std::pair<int, int>>;

struct Builder {
    NewsteinLayout lay;

    void L(Terms& t, int mu, int nu, int c) const {
        if (c == 0 || mu == nu) return;
        if (mu < nu)
            t.emplace_back(lay.L(mu, nu), c);
        else
            t.emplace_back(lay.L(nu, mu), -c);
    }
    void C(Terms& t, int mu, int nu, int c) const {
        if (c != 0) t.emplace_back(lay.C(mu, nu), c);
    }
    void J(Terms& t, int i, int j, int c) const {
        if (c == 0 || i == j) return;
        if (i < j)
            t.emplace_back(lay.J(i, j), c);
        else
            t.emplace_back(lay.J(j, i), -c);
    }
    // Four-vector generators: T, Tp carry (mu) in l.i; A, Q carry (i, mu).
    void X(Terms& t, const BasisLabel& like, int mu, int c) const {
        if (c == 0) return;
        switch (like.kind) {
            case Kind::T: t.emplace_back(lay.T(mu), c); break;
            case Kind::Tp: t.emplace_back(lay.Tp(mu), c); break;
            case Kind::A: t.emplace_back(lay.A(like.i, mu), c); break;
            case Kind::Q: t.emplace_back(lay.Q(like.i, mu), c); break;
            default: throw std::logic_error("not a four-vector generator");
        }
    }
    static int vector_index(const BasisLabel& l) { return (l.kind == Kind::T || l.kind == Kind::Tp) ? l.i : l.j; }

    // Internal rotation (i, j); a single planar J acts as (1, 2).
    static std::pair<int, int> rotation(const BasisLabel& l) { return l.i == 0 ? std::pair{1, 2} : std::pair{l.i, l.j}; }

    std::optional<Terms> formula(const BasisLabel& x, const BasisLabel& y) const {
        Terms t;
        if (x.kind == Kind::L && y.kind == Kind::L) {
            const int mu = x.i, nu = x.j, rho = y.i, sigma = y.j;
            L(t, nu, sigma, -metric(mu, rho));
            L(t, mu, rho, -metric(nu, sigma));
            L(t, nu, rho, metric(mu, sigma));
            L(t, mu, sigma, metric(nu, rho));
            return t;
        }
        if (x.kind == Kind::L &&
            (y.kind == Kind::T || y.kind == Kind::Tp || y.kind == Kind::A || y.kind == Kind::Q)) {
            const int mu = x.i, nu = x.j, rho = vector_index(y);
            X(t, y, mu, metric(nu, rho));
            X(t, y, nu, -metric(mu, rho));
            return t;
        }
        if (x.kind == Kind::L && y.kind == Kind::C) {
            const int mu = x.i, nu = x.j, rho = y.i, sigma = y.j;
            C(t, nu, sigma, -metric(mu, rho));
            C(t, nu, rho, -metric(mu, sigma));
            C(t, mu, rho, metric(nu, sigma));
            C(t, mu, sigma, metric(nu, rho));
            return t;
        }
        if (x.kind == Kind::A && y.kind == Kind::Q) {
            if (x.i == y.i) C(t, x.j, y.j, 1);
            return t;
        }
        if (x.kind == Kind::J && y.kind == Kind::J) {
            auto [i, j] = rotation(x);
            auto [k, l] = rotation(y);
            J(t, j, l, -delta(i, k));
            J(t, i, k, -delta(j, l));
            J(t, j, k, delta(i, l));
            J(t, i, l, delta(j, k));
            return t;
        }
        if (x.kind == Kind::J && (y.kind == Kind::A || y.kind == Kind::Q)) {
            auto [i, j] = rotation(x);
            const int k = y.i, rho = y.j;
            auto push = [&](int internal_index, int c) {
                if (c == 0) return;
                t.emplace_back(y.kind == Kind::A ? lay.A(internal_index, rho) : lay.Q(internal_index, rho), c);
            };
            push(i, delta(j, k));
            push(j, -delta(i, k));
            return t;
        }
        return std::nullopt;
    }
};

void add_term(StructureConstants& sc, int x, int y, int z, const Scalar& c) {
    if (x == y || sgn(c) == 0) return;
    if (x < y)
        sc[{x, y}].emplace_back(z, c);
    else
        sc[{y, x}].emplace_back(z, -c);
}

LieAlgebra build_variant(int internal, const std::string& name) {
    Builder b{NewsteinLayout{internal}};
    const auto labels = newstein_labels(internal);
    const int n = static_cast<int>(labels.size());
    StructureConstants sc;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (auto f = b.formula(labels[x], labels[y])) {
                for (auto [z, c] : *f) add_term(sc, x, y, z, c);
            } else if (auto g = b.formula(labels[y], labels[x])) {
                for (auto [z, c] : *g) add_term(sc, x, y, z, -c);
            }
        }
    return LieAlgebra(name, labels, std::move(sc));
}

}  // namespace

LieAlgebra build_newstein() { return build_variant(3, "newstein"); }

LieAlgebra build_newstein2() { return build_variant(2, "newstein2"); }

LieAlgebra build_abelian(int n) {
    std::vector<BasisLabel> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(BasisLabel::other("x" + std::to_string(i)));
    return LieAlgebra("abelian" + std::to_string(n), labels, {});
}

LieAlgebra build_heisenberg3() {
    StructureConstants sc;
    sc[{0, 1}] = {{2, Scalar(1)}};
    return LieAlgebra("h3", {BasisLabel::other("p"), BasisLabel::other("q"), BasisLabel::other("z")}, sc);
}

LieAlgebra build_sl2() {
    // Basis order e, f, h.
    StructureConstants sc;
    sc[{0, 1}] = {{2, Scalar(1)}};
    sc[{0, 2}] = {{0, Scalar(-2)}};
    sc[{1, 2}] = {{1, Scalar(2)}};
    return LieAlgebra("sl2", {BasisLabel::other("e"), BasisLabel::other("f"), BasisLabel::other("h")}, sc);
}

ExactExtensionMatrix ExtensionClass::matrix() const {
    switch (case_id) {
        case 1: return {0, 0, 0, 0};
        case 2: return {1, 0, 0, -1};
        case 3: return {zeta2, 0, 0, -1 / zeta2};
        case 4: return {zeta2, 0, 0, 1 / zeta2};
        case 5: return {zeta2, 0, 0, 0};
        case 6: return {0, 0, -1, 0};
        case 7: return {0, 1, -1, 0};
        case 8:
            if (printed_case8) return {cos_phi, 0, -sin_phi, 1};
            return {Scalar(jordan_sign), 0, -1, Scalar(jordan_sign)};
        case 9: return {cos_phi, sin_phi, -sin_phi, cos_phi};
    }
    throw std::invalid_argument("case id must be in 1..9");
}

Scalar ExtensionClass::c_eigenvalue() const {
    switch (case_id) {
        case 1:
        case 2:
        case 6:
        case 7: return 0;
        case 3: return zeta2 - 1 / zeta2;
        case 4: return zeta2 + 1 / zeta2;
        case 5: return zeta2;
        case 8: return printed_case8 ? Scalar(2) : Scalar(2 * jordan_sign);
        case 9: return 2 * cos_phi;
    }
    throw std::invalid_argument("case id must be in 1..9");
}

void ExtensionClass::validate() const {
    if (case_id < 1 || case_id > 9) throw std::invalid_argument("case id must be in 1..9");
    if (case_id == 3 && (zeta2 == 0 || zeta2 == 1)) throw std::invalid_argument("case 3 excludes zeta^2 in {0, 1}");
    if ((case_id == 4 || case_id == 5) && zeta2 == 0) throw std::invalid_argument("cases 4 and 5 need zeta != 0");
    const bool uses_phi = case_id == 9 || (case_id == 8 && printed_case8);
    if (uses_phi && cos_phi * cos_phi + sin_phi * sin_phi != 1)
        throw std::invalid_argument("(cos phi, sin phi) must lie on the unit circle");
    if (case_id == 9 && cos_phi == 0) throw std::invalid_argument("case 9 excludes phi = (k + 1/2) pi");
    if (case_id == 8 && !printed_case8 && jordan_sign != 1 && jordan_sign != -1)
        throw std::invalid_argument("case 8 Jordan sign must be +1 or -1");
}

std::string ExtensionClass::describe() const {
    std::ostringstream os;
    os << "case " << case_id;
    if (case_id >= 3 && case_id <= 5) os << " zeta^2=" << to_string(zeta2);
    if (case_id == 9 || (case_id == 8 && printed_case8))
        os << " cos=" << to_string(cos_phi) << " sin=" << to_string(sin_phi);
    if (case_id == 8) os << (printed_case8 ? " (printed)" : " (jordan sign " + std::to_string(jordan_sign) + ")");
    return os.str();
}

ExtensionClass representative_class(int case_id) {
    ExtensionClass cls{case_id};
    if (case_id == 3 || case_id == 4) cls.zeta2 = 2;
    if (case_id == 9) {
        cls.cos_phi = Scalar(3, 5);
        cls.sin_phi = Scalar(4, 5);
    }
    cls.validate();
    return cls;
}

std::vector<ExtensionClass> representative_classes() {
    std::vector<ExtensionClass> out;
    for (int c = 1; c <= 9; ++c) out.push_back(representative_class(c));
    ExtensionClass minus8{8};
    minus8.jordan_sign = -1;
    out.push_back(minus8);
    ExtensionClass minus5{5};
    minus5.zeta2 = -1;
    out.push_back(minus5);
    ExtensionClass negative3{3};
    negative3.zeta2 = Scalar(-3, 2);
    out.push_back(negative3);
    return out;
}

LieAlgebra build_extension_from_matrix(const LieAlgebra& g, const ExactExtensionMatrix& m, const Scalar& c,
                                       const std::string& name) {
    if (g.dimension() != 51 && g.dimension() != 41)
        throw std::invalid_argument("extensions are defined over the 51- or 41-dimensional algebra");
    NewsteinLayout lay{g.dimension() == 51 ? 3 : 2};
    auto labels = g.labels();
    labels.push_back(BasisLabel::make(Kind::K));
    StructureConstants sc = g.constants();
    const int k = lay.K();
    for (int i = 1; i <= lay.internal; ++i)
        for (int rho = 1; rho <= 4; ++rho) {
            const int a = lay.A(i, rho), q = lay.Q(i, rho);
            add_term(sc, k, a, a, m.beta);
            add_term(sc, k, a, q, m.gamma);
            add_term(sc, k, q, a, m.beta_p);
            add_term(sc, k, q, q, m.gamma_p);
        }
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = mu; nu <= 4; ++nu) add_term(sc, k, lay.C(mu, nu), lay.C(mu, nu), c);
    return LieAlgebra(name, std::move(labels), std::move(sc));
}

LieAlgebra build_extended(const ExtensionClass& cls) {
    cls.validate();
    return build_extension_from_matrix(build_newstein(), cls.matrix(), cls.c_eigenvalue(),
                                       "newstein-ext:" + std::to_string(cls.case_id));
}

Scalar CentralCocycle::value(int i, int j) const {
    if (i == j) return 0;
    if (i < j) {
        auto it = omega.find({i, j});
        return it == omega.end() ? Scalar(0) : it->second;
    }
    return -value(j, i);
}

std::vector<std::array<int, 3>> CentralCocycle::violations() const {
    const int n = algebra.dimension();
    std::vector<std::array<int, 3>> out;
    auto term = [&](int x, int y, int z) {
        Scalar s = 0;
        for (const auto& [m, c] : algebra.bracket_basis(x, y)) s += c * value(m, z);
        return s;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (term(i, j, k) + term(j, k, i) + term(k, i, j) != 0) out.push_back({i, j, k});
    return out;
}

CentralCocycle beta_cocycle(const LieAlgebra& g) {
    NewsteinLayout lay{g.dimension() == 41 || g.dimension() == 42 ? 2 : 3};
    CentralCocycle w{g, {}};
    for (int mu = 1; mu <= 4; ++mu) w.omega[{lay.T(mu), lay.Tp(mu)}] = metric(mu, mu);
    return w;
}

}  // namespace newstein
