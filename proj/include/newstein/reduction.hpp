#pragma once

#include "newstein/cohomology.hpp"

#include <map>
#include <string>
#include <vector>

namespace newstein {

// Which part of the algebra must annihilate an invariant cochain.
//   Levi: the complement of the ideal (for the 51-dim algebra, span{L, J}).
//   Full: every basis element, including the ideal itself.
enum class Invariance { Levi, Full };

std::string invariance_name(Invariance inv);

struct InvariantCochainSpace {
    int degree = 0;
    Invariance invariance = Invariance::Levi;
    bool cocycles_only = false;
    std::int64_t ambient_dim = 0;
    std::vector<SparseVector> basis;  // coordinates on C^k(ideal, algebra)
    std::size_t dimension() const { return basis.size(); }
};

// Subalgebra spanned by the listed basis elements (sorted, closed under the bracket).
LieAlgebra subalgebra(const LieAlgebra& alg, const std::vector<int>& indices, const std::string& name);

// Cochains on an ideal I with values in the adjoint module of the whole
// algebra, C^k(I, g), together with the action of g on them:
//   (X.f)(y_1..y_k) = [X, f(y_1..y_k)] - sum_t f(y_1..[X, y_t]..y_k).
// When g / I is semisimple and acts through the complement,
//   H^k(g, g) = H^k(I, g)^(g/I) = Z^k_inv / d(C^(k-1)_inv).
class IdealReduction {
public:
    IdealReduction(LieAlgebra alg, std::vector<int> ideal);
    // Ideal span{T, T', C, A, Q} of the 51- or 41-dim algebra.
    static IdealReduction newstein(const LieAlgebra& alg);

    const LieAlgebra& algebra() const { return alg_; }
    const std::vector<int>& ideal() const { return ideal_; }
    const std::vector<int>& complement() const { return complement_; }
    const CochainComplex& complex() const { return cx_; }

    // X.f for the basis cochain with the given column id; X is an algebra index.
    SparseVector act(int x, int k, std::int64_t column) const;

    InvariantCochainSpace invariant_cochains(int k, Invariance inv = Invariance::Levi) const;
    InvariantCochainSpace invariant_cocycles(int k, Invariance inv = Invariance::Levi) const;
    // dim d(C^(k-1)_inv), the invariant coboundaries in degree k.
    std::int64_t invariant_coboundary_dim(int k, Invariance inv = Invariance::Levi) const;
    // Basis of d(C^(k-1)_inv).
    std::vector<SparseVector> invariant_coboundaries(int k, Invariance inv = Invariance::Levi) const;
    CohomologyReport cohomology(int k, Invariance inv = Invariance::Levi) const;

    // Cochain builders in algebra indices. one_cochain: f(e_a) for a in the
    // ideal. two_cochain: f(e_a, e_b) listed once per unordered pair.
    SparseVector one_cochain(const std::map<int, SparseVector>& values) const;
    SparseVector two_cochain(const std::vector<std::tuple<int, int, SparseVector>>& values) const;

private:
    LieAlgebra alg_;
    std::vector<int> ideal_, complement_;
    std::vector<int> local_;  // algebra index -> position in the ideal, or -1
    CochainComplex cx_;
    // pre_[x][b] = (a, c) with c the coefficient of e_b in [e_x, e_a]; a, b are ideal positions.
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> pre_;
    std::vector<WedgeIndex> wedges_;
    std::vector<int> acting(Invariance inv) const;
    InvariantCochainSpace solve(int k, Invariance inv, bool cocycles) const;
};

// Named cochains on the ideal of the 51-dim algebra (or the 41-dim variant).
// The central element is c = g^{mu nu} C_{mu nu}.
SparseVector newstein_central(const LieAlgebra& alg);

// The six invariant derivation parameters, in order alpha, alpha', beta, beta', gamma, gamma':
//   f(T) = alpha T, f(T') = alpha' T', f(A) = beta A + gamma Q, f(Q) = beta' A + gamma' Q,
//   f(C) = (beta + gamma') C.
std::vector<SparseVector> derivation_family(const IdealReduction& red);
// f(T_mu) = T'_mu and f(T'_mu) = T_mu: invariant derivations that mix the two translations.
std::vector<SparseVector> translation_mixing_derivations(const IdealReduction& red);
// g(A_{i mu}, Q_{j nu}) = delta_ij C_{mu nu} and delta_ij g_{mu nu} c.
std::vector<SparseVector> heisenberg_coboundary_family(const IdealReduction& red);
// f(T_mu, T'_nu) = C_{mu nu} and g_{mu nu} c: invariant 2-cocycles that are not coboundaries.
std::vector<SparseVector> translation_cocycles(const IdealReduction& red);

// Same two cocycles as cochains on the whole algebra, C^2(g, g).
std::vector<SparseVector> translation_cocycles_on_algebra(const CochainComplex& cx);

// Rank of `vs` inside span(space) and whether every vector lies in it.
struct SpanComparison {
    std::size_t family_rank = 0;
    std::size_t space_dim = 0;
    bool contained = false;
};
SpanComparison compare_span(const std::vector<SparseVector>& family, const std::vector<SparseVector>& space);

}  // namespace newstein
