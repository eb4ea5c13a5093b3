#pragma once

#include "newstein/lie_algebra.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace newstein {

// Diagonal metric (+,+,+,-); indices 1..4.
inline int metric(int mu, int nu) { return mu != nu ? 0 : (mu == 4 ? -1 : 1); }

// Basis positions for the 51-dim algebra (internal = 3) and its 41-dim
// variant (internal = 2). Order: L, T, Tp, C, A, Q, J, then K if present.
struct NewsteinLayout {
    int internal = 3;

    int count_J() const { return internal == 3 ? 3 : 1; }
    int dimension() const { return 24 + 8 * internal + count_J(); }
    int L(int mu, int nu) const;  // mu < nu
    int T(int mu) const { return 5 + mu; }
    int Tp(int mu) const { return 9 + mu; }
    int C(int mu, int nu) const;  // symmetric in (mu, nu)
    int A(int i, int mu) const { return 24 + 4 * (i - 1) + (mu - 1); }
    int Q(int i, int mu) const { return 24 + 4 * internal + 4 * (i - 1) + (mu - 1); }
    int J(int i, int j) const;  // i < j; internal == 2 takes (1, 2)
    int K() const { return dimension(); }
};

std::vector<BasisLabel> newstein_labels(int internal);

LieAlgebra build_newstein();
LieAlgebra build_newstein2();

// Small reference algebras.
LieAlgebra build_abelian(int n);
LieAlgebra build_heisenberg3();  // [p, q] = z
LieAlgebra build_sl2();          // [h, e] = 2e, [h, f] = -2f, [e, f] = h

// Matrix of ad(K) on one (A, Q) plane, columns are the images of A and Q:
//   [K, A] = beta A + gamma Q,  [K, Q] = beta' A + gamma' Q.
struct ExactExtensionMatrix {
    Scalar beta, beta_p, gamma, gamma_p;
    Scalar trace() const { return beta + gamma_p; }
    Scalar det() const { return beta * gamma_p - beta_p * gamma; }
};

// One of the nine printed canonical extensions.
//   zeta2: cases 3, 4, 5.   (cos_phi, sin_phi): cases 8 (printed form) and 9.
//   Case 8 defaults to the Jordan-block form [K, A] = s A - Q, [K, Q] = s Q,
//   [K, C] = 2 s C with s = jordan_sign; printed_case8 selects the literal
//   printed brackets instead.
struct ExtensionClass {
    int case_id = 1;
    Scalar zeta2 = 1;
    Scalar cos_phi = 1;
    Scalar sin_phi = 0;
    int jordan_sign = 1;
    bool printed_case8 = false;

    ExactExtensionMatrix matrix() const;
    // Eigenvalue of ad(K) on the C block as printed.
    Scalar c_eigenvalue() const;
    // Throws std::invalid_argument for excluded parameters.
    void validate() const;
    std::string describe() const;
};

// Representative of each case with admissible sample parameters.
ExtensionClass representative_class(int case_id);
// One representative per case plus sign variants (case 8 with sign -1,
// case 5 with zeta^2 = -1, case 3 with negative zeta^2).
std::vector<ExtensionClass> representative_classes();

// Adds K with [K, A], [K, Q] from L and [K, C] = c C; K commutes with L, T, Tp, J.
LieAlgebra build_extension_from_matrix(const LieAlgebra& g, const ExactExtensionMatrix& m, const Scalar& c,
                                       const std::string& name);
LieAlgebra build_extended(const ExtensionClass& cls);

// Antisymmetric bilinear form on an algebra, stored for i < j.
struct CentralCocycle {
    LieAlgebra algebra;
    std::map<std::pair<int, int>, Scalar> omega;

    Scalar value(int i, int j) const;
    // Triples i < j < k where the cocycle identity fails.
    std::vector<std::array<int, 3>> violations() const;
};

// omega(T_mu, Tp_nu) = g_{mu nu}.
CentralCocycle beta_cocycle(const LieAlgebra& g);

}  // namespace newstein
