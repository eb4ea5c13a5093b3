#pragma once

#include "newstein/sparse.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace newstein {

// Incremental fraction-free elimination over Z. Vectors are scaled to primitive
// integer vectors on entry; pivots are kept in echelon form keyed by their
// leading index.
class ExactEliminator {
public:
    // Returns true if v was independent of everything added so far.
    bool add(const SparseVector& v);
    std::size_t rank() const { return pivots_.size(); }
    bool in_span(const SparseVector& v) const;

private:
    using IntVector = std::vector<std::pair<int, mpz_class>>;
    IntVector reduce(IntVector v) const;
    std::unordered_map<int, IntVector> pivots_;
};

class PrimeDividesDenominator : public std::runtime_error {
public:
    explicit PrimeDividesDenominator(std::uint64_t p);
    std::uint64_t prime;
};

// Same elimination with coefficients reduced mod a prime p < 2^31.
class ModularEliminator {
public:
    explicit ModularEliminator(std::uint64_t p);
    bool add(const SparseVector& v);  // throws PrimeDividesDenominator
    std::size_t rank() const { return pivots_.size(); }
    std::uint64_t prime() const { return p_; }

private:
    using ModVector = std::vector<std::pair<int, std::uint32_t>>;
    std::uint64_t p_;
    std::unordered_map<int, ModVector> pivots_;
};

std::size_t exact_rank(const std::vector<SparseVector>& vectors);
std::size_t modular_rank(const std::vector<SparseVector>& vectors, std::uint64_t p);

// Primes just below 2^31, all > 2^20. The first ones are used by default;
// later ones replace a prime that divides a denominator.
const std::vector<std::uint64_t>& default_primes();

// Basis of {x in Q^n : <e, x> = 0 for every equation e}, one vector per free
// column, in increasing order of the free column.
std::vector<SparseVector> null_space(const std::vector<SparseVector>& equations, int n);

}  // namespace newstein
