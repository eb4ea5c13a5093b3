#pragma once

#include "newstein/sparse.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace newstein {

// Basis label. Index meaning per kind:
//   L: (mu, nu) with mu < nu     T, Tp: (mu)       C: (mu, nu) with mu <= nu
//   A, Q: (i, mu)                J: (i, j) with i < j (a single J has no indices)
//   K: none                      Other: free-form name
struct BasisLabel {
    enum class Kind { L, T, Tp, C, A, Q, J, K, Other };
    Kind kind = Kind::Other;
    int i = 0;
    int j = 0;
    std::string text;

    static BasisLabel make(Kind k, int i = 0, int j = 0);
    static BasisLabel other(std::string name);

    // Canonical names: L12, T3, Tp4, C44, A2_3, Q1_4, J12 (or J), K; Other keeps its text.
    std::string name() const;
    static BasisLabel parse(const std::string& name);

    bool operator==(const BasisLabel& o) const = default;
};

class MismatchedAlgebra : public std::invalid_argument {
public:
    MismatchedAlgebra() : std::invalid_argument("elements belong to different algebras") {}
};

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(std::uint64_t algebra_id, int dim, SparseVector coeffs = {});

    std::uint64_t algebra_id() const { return algebra_id_; }
    int dimension() const { return dim_; }
    const SparseVector& coeffs() const { return coeffs_; }
    Scalar operator[](int i) const { return coefficient(coeffs_, i); }
    bool is_zero() const { return coeffs_.empty(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    friend AlgebraElement operator*(const Scalar& a, const AlgebraElement& x);
    bool operator==(const AlgebraElement& o) const;

private:
    std::uint64_t algebra_id_ = 0;
    int dim_ = 0;
    SparseVector coeffs_;
};

// Structure constants keyed by (i, j), i < j.
using StructureConstants = std::map<std::pair<int, int>, SparseVector>;

// Immutable finite-dimensional Lie algebra over Q. Copies share the same data
// and identity.
class LieAlgebra {
public:
    // Throws std::invalid_argument on i >= j keys, out-of-range indices, or
    // duplicate labels. Jacobi is not checked here.
    LieAlgebra(std::string name, std::vector<BasisLabel> labels, StructureConstants constants);

    const std::string& name() const { return d_->name; }
    int dimension() const { return static_cast<int>(d_->labels.size()); }
    const std::vector<BasisLabel>& labels() const { return d_->labels; }
    const BasisLabel& label(int i) const { return d_->labels.at(i); }
    int index_of(const BasisLabel& l) const;
    int index_of(const std::string& name) const;
    const StructureConstants& constants() const { return d_->constants; }
    std::uint64_t id() const { return d_->id; }

    // [e_i, e_j] for any i, j.
    SparseVector bracket_basis(int i, int j) const;
    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

    AlgebraElement zero() const { return AlgebraElement(id(), dimension()); }
    AlgebraElement basis(int i) const;
    AlgebraElement basis(const std::string& name) const { return basis(index_of(name)); }
    AlgebraElement element(SparseVector coeffs) const;

private:
    struct Data {
        std::string name;
        std::vector<BasisLabel> labels;
        StructureConstants constants;
        std::vector<const SparseVector*> table;  // dim*dim, i < j entries only
        std::map<std::string, int> by_name;
        std::uint64_t id;
    };
    std::shared_ptr<const Data> d_;
};

struct JacobiViolation {
    int i, j, k;
    SparseVector residual;
};

// Checks all unordered triples i <= j <= k. workers = 0 picks the
// NEWSTEIN_WORKERS environment variable, falling back to 1.
std::vector<JacobiViolation> jacobi_check(const LieAlgebra& alg, int workers = 0);

// Matrix of ad(x) = [x, .]; column m holds [x, e_m].
SparseExactMatrix adjoint(const LieAlgebra& alg, const AlgebraElement& x);

// Basis of {y : [g, y] = 0 for every g}.
std::vector<AlgebraElement> centralizer(const LieAlgebra& alg, const std::vector<AlgebraElement>& generators);

// Worker count from NEWSTEIN_WORKERS, default 1.
int default_workers();

}  // namespace newstein
