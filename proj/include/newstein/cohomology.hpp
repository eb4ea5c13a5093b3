#pragma once

#include "newstein/exact_linalg.hpp"
#include "newstein/lie_algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace newstein {

// A representation of an algebra: action[x][m] is the image of the module
// basis vector e_m under the action of the algebra basis element e_x.
struct CoefficientModule {
    enum class Kind { Trivial, Adjoint, Explicit };
    Kind kind = Kind::Trivial;
    int dim = 1;
    std::vector<std::vector<SparseVector>> action;

    static CoefficientModule trivial(const LieAlgebra& alg);
    static CoefficientModule adjoint(const LieAlgebra& alg);
    // Validates rho([x, y]) = rho(x) rho(y) - rho(y) rho(x) exactly; throws std::invalid_argument.
    static CoefficientModule explicit_module(const LieAlgebra& alg, std::vector<std::vector<SparseVector>> action);

    std::string kind_name() const;
};

// Integer and Z/2 weights of the algebra and module basis such that every
// structure constant and every module matrix entry is homogeneous. Cochains
// then split into blocks that the differential preserves.
struct Grading {
    std::vector<std::vector<long>> algebra_weight;
    std::vector<std::uint64_t> algebra_parity;
    std::vector<std::vector<long>> module_weight;
    std::vector<std::uint64_t> module_parity;

    struct Key {
        std::vector<long> weight;
        std::uint64_t parity = 0;
        auto operator<=>(const Key&) const = default;
    };

    static Grading none(int algebra_dim, int module_dim);
    // Solves the homogeneity constraints over Q and over GF(2).
    static Grading detect(const LieAlgebra& alg, const CoefficientModule& module);
    // Checks every constraint; false if some bracket or matrix entry is not homogeneous.
    bool is_compatible(const LieAlgebra& alg, const CoefficientModule& module) const;
    std::size_t integer_rank() const { return algebra_weight.empty() ? 0 : algebra_weight[0].size(); }
};

// Lexicographic ranking of k-subsets of {0..n-1}.
class WedgeIndex {
public:
    WedgeIndex(int n, int k);
    int n() const { return n_; }
    int k() const { return k_; }
    std::int64_t size() const { return size_; }
    std::int64_t rank(const int* subset) const;
    std::vector<int> unrank(std::int64_t r) const;

private:
    int n_, k_;
    std::int64_t size_;
    std::vector<std::vector<std::int64_t>> prefix_;  // prefix_[t][v]
};

std::int64_t binomial(int n, int k);

enum class RankMethod { Exact, Modular };

struct RankResult {
    std::int64_t rank = 0;
    RankMethod method = RankMethod::Exact;
    std::vector<std::uint64_t> primes;      // primes actually used
    std::vector<std::uint64_t> replaced;    // primes dropped because they divided a denominator
};

class RankDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RankOptions {
    RankMethod method = RankMethod::Exact;
    int prime_count = 3;
    int workers = 0;  // per-prime parallelism; 0 reads NEWSTEIN_WORKERS
};

// Rank of a family of vectors split into blocks with disjoint supports.
RankResult block_rank(const std::vector<std::vector<SparseVector>>& blocks, const RankOptions& opt);

// Chevalley–Eilenberg complex C^k = Hom(wedge^k g, M), basis (I, m) with
// column id rank(I) * dim M + m.
//   (df)(x_0..x_k) = sum_i (-1)^i x_i . f(..^x_i..) + sum_{i<j} (-1)^{i+j} f([x_i, x_j], ..^x_i..^x_j..)
class CochainComplex {
public:
    CochainComplex(LieAlgebra alg, CoefficientModule module, std::optional<Grading> grading = std::nullopt,
                   bool use_grading = true);

    const LieAlgebra& algebra() const { return alg_; }
    const CoefficientModule& module() const { return module_; }
    const Grading& grading() const { return grading_; }

    std::int64_t dim(int k) const;
    // d applied to the basis cochain with the given column id.
    SparseVector coboundary_column(int k, std::int64_t column) const;
    SparseVector apply(int k, const SparseVector& cochain) const;
    SparseExactMatrix coboundary_matrix(int k) const;

    Grading::Key grade(int k, std::int64_t column) const;
    // Column ids of C^k grouped by grade (a single block when grading is off).
    std::vector<std::vector<std::int64_t>> blocks(int k) const;

    RankResult rank(int k, const RankOptions& opt) const;
    // d_{k+1} d_k = 0 on every basis cochain of C^k.
    bool dd_zero(int k) const;
    // Whether a k-cochain is a coboundary d_{k-1}(g), solved one grade at a time (exact).
    bool is_coboundary(int k, const SparseVector& cochain) const;
    // Every image entry of d_k has the grade of its column.
    bool grading_respected(int k) const;

private:
    LieAlgebra alg_;
    CoefficientModule module_;
    Grading grading_;
    bool use_grading_;
    // into_[c] = (a, b, coefficient of e_c in [e_a, e_b]) for a < b.
    std::vector<std::vector<std::tuple<int, int, Scalar>>> into_;
    mutable std::map<int, WedgeIndex> wedge_;
    const WedgeIndex& wedge(int k) const;
};

struct CohomologyReport {
    std::string algebra;
    std::string module;
    int degree = 0;
    std::int64_t dim_prev = 0, dim_k = 0, dim_next = 0;
    std::int64_t rank_prev = 0, rank_k = 0;
    std::int64_t betti = 0;
    RankResult method;
    bool dd_zero_verified = false;
    std::string route = "direct";
    std::string note;
};

struct BettiOptions {
    RankOptions rank;
    bool use_grading = true;
    bool verify_dd = true;
};

CohomologyReport betti(const LieAlgebra& alg, const CoefficientModule& module, int k, const BettiOptions& opt = {});

std::string method_name(const RankResult& r);

}  // namespace newstein
