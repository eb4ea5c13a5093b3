#pragma once

#include "newstein/algebras.hpp"
#include "newstein/sparse.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace newstein {

// ad(K) restricted to one (A, Q) plane, laid out as [[beta, beta'], [gamma, gamma']]
// so that column 0 is the image of A and column 1 the image of Q.
using ExtensionMatrix = Eigen::Matrix2d;

ExtensionMatrix to_matrix(const ExactExtensionMatrix& m);

// Phi with Phi(A) = beta A + gamma Q, Phi(Q) = beta' A + gamma' Q, Phi(C) = (beta + gamma') C,
// zero on L, T, T' and J. Columns are images of basis vectors.
SparseExactMatrix derivation_from_matrix(const LieAlgebra& g, const ExactExtensionMatrix& m);

// Basis pairs (i < j) where D[e_i, e_j] != [D e_i, e_j] + [e_i, D e_j].
std::vector<std::pair<int, int>> leibniz_violations(const LieAlgebra& g, const SparseExactMatrix& d);

enum class JordanType { Zero, Nilpotent, Scalar, RealDistinct, Defective, Complex };
std::string jordan_name(JordanType t);

// Normal form of L under similarity and positive rescaling of K.
//   det != 0: divide by sqrt|det|; det == 0, tr != 0: divide by |tr|.
// Decision table (after rescaling):
//   L = 0                                   case 1
//   det = 0, tr = 0                         case 6 (nilpotent)
//   det = 0, tr != 0                        case 5, zeta^2 = sign(tr)
//   det < 0, tr = 0                         case 2
//   det < 0, tr != 0                        case 3, |zeta^2| > 1
//   det > 0, tr = 0                         case 7
//   det > 0, tr^2 > 4 det or L scalar       case 4, |zeta^2| >= 1
//   det > 0, tr^2 = 4 det, L not scalar     case 8 (Jordan block, sign of tr)
//   det > 0, 0 < tr^2 < 4 det               case 9, phi in (0, pi), phi != pi/2
struct Classification {
    int case_id = 1;
    JordanType jordan = JordanType::Zero;
    bool exact = false;         // decided with rational arithmetic
    double rescale = 1;         // L / rescale is similar to `canonical`
    std::optional<double> zeta2;
    std::optional<double> phi;
    int jordan_sign = 0;        // case 8 only
    bool printed_match = true;  // false when no printed case has this Jordan type
    // Invariants under similarity and positive scaling.
    int sign_det = 0, sign_tr = 0;
    double ratio = 0;                  // tr^2 / det when det != 0
    std::optional<Scalar> exact_ratio;
    ExtensionMatrix canonical = ExtensionMatrix::Zero();

    std::string describe() const;
    // Exact canonical class when every parameter is rational.
    std::optional<ExtensionClass> to_class() const;
};

Classification classify(const ExactExtensionMatrix& l);
Classification classify(const ExtensionMatrix& l, double tol = 1e-10);

bool equivalent(const ExactExtensionMatrix& a, const ExactExtensionMatrix& b);
bool equivalent(const ExtensionMatrix& a, const ExtensionMatrix& b, double tol = 1e-10);

// P with P^-1 (L / rescale) P = canonical, built from cyclic vectors.
ExtensionMatrix similarity_witness(const ExtensionMatrix& l, const Classification& c);

}  // namespace newstein
