#include "newstein/reduction.hpp"

#include "newstein/algebras.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace newstein {

std::string invariance_name(Invariance inv) { return inv == Invariance::Levi ? "levi" : "full"; }

LieAlgebra subalgebra(const LieAlgebra& alg, const std::vector<int>& indices, const std::string& name) {
    if (!std::is_sorted(indices.begin(), indices.end()) ||
        std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw std::invalid_argument("subalgebra indices must be sorted and distinct");
    std::vector<int> local(alg.dimension(), -1);
    std::vector<BasisLabel> labels;
    for (std::size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] < 0 || indices[t] >= alg.dimension()) throw std::invalid_argument("index out of range");
        local[indices[t]] = static_cast<int>(t);
        labels.push_back(alg.label(indices[t]));
    }
    StructureConstants sc;
    for (const auto& [key, v] : alg.constants()) {
        if (local[key.first] < 0 || local[key.second] < 0) continue;
        SparseVector w;
        for (const auto& [k, c] : v) {
            if (local[k] < 0) throw std::invalid_argument("indices do not span a subalgebra");
            w.emplace_back(local[k], c);
        }
        normalize(w);
        sc.emplace(std::make_pair(local[key.first], local[key.second]), std::move(w));
    }
    return LieAlgebra(name, std::move(labels), std::move(sc));
}

namespace {

CochainComplex ideal_complex(const LieAlgebra& alg, const std::vector<int>& ideal) {
    LieAlgebra sub = subalgebra(alg, ideal, alg.name() + "|ideal");
    std::vector<std::vector<SparseVector>> action;
    for (int x : ideal) {
        std::vector<SparseVector> cols(alg.dimension());
        for (int m = 0; m < alg.dimension(); ++m) cols[m] = alg.bracket_basis(x, m);
        action.push_back(std::move(cols));
    }
    CoefficientModule mod = CoefficientModule::explicit_module(sub, std::move(action));
    // Restrict a grading of the whole algebra so the complement acts homogeneously.
    const Grading whole = Grading::detect(alg, CoefficientModule::adjoint(alg));
    Grading g = Grading::none(sub.dimension(), alg.dimension());
    for (std::size_t t = 0; t < ideal.size(); ++t) {
        g.algebra_weight[t] = whole.algebra_weight[ideal[t]];
        g.algebra_parity[t] = whole.algebra_parity[ideal[t]];
    }
    g.module_weight = whole.module_weight;
    g.module_parity = whole.module_parity;
    return CochainComplex(std::move(sub), std::move(mod), g);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

IdealReduction::IdealReduction(LieAlgebra alg, std::vector<int> ideal)
    : alg_(std::move(alg)), ideal_(std::move(ideal)), cx_(ideal_complex(alg_, ideal_)) {
    local_.assign(alg_.dimension(), -1);
    for (std::size_t t = 0; t < ideal_.size(); ++t) local_[ideal_[t]] = static_cast<int>(t);
    for (int x = 0; x < alg_.dimension(); ++x) {
        if (local_[x] < 0) complement_.push_back(x);
        for (int y : ideal_)
            for (const auto& [k, c] : alg_.bracket_basis(x, y))
                if (local_[k] < 0) throw std::invalid_argument("indices do not span an ideal");
    }
    pre_.assign(alg_.dimension(), std::vector<std::vector<std::pair<int, Scalar>>>(ideal_.size()));
    for (int x = 0; x < alg_.dimension(); ++x)
        for (std::size_t a = 0; a < ideal_.size(); ++a)
            for (const auto& [b, c] : alg_.bracket_basis(x, ideal_[a]))
                pre_[x][local_[b]].emplace_back(static_cast<int>(a), c);
    for (int k = 0; k <= 4; ++k) wedges_.emplace_back(static_cast<int>(ideal_.size()), k);
}

IdealReduction IdealReduction::newstein(const LieAlgebra& alg) {
    NewsteinLayout lay{alg.dimension() == 41 ? 2 : 3};
    if (alg.dimension() != lay.dimension()) throw std::invalid_argument("not a New-Stein algebra");
    std::vector<int> ideal;
    for (int i = lay.T(1); i < lay.J(1, 2); ++i) ideal.push_back(i);
    return IdealReduction(alg, ideal);
}

SparseVector IdealReduction::act(int x, int k, std::int64_t column) const {
    const int M = alg_.dimension();
    const WedgeIndex& w = wedges_.at(k);
    const std::vector<int> I = w.unrank(column / M);
    const int m = static_cast<int>(column % M);
    const std::int64_t base = column - m;
    SparseVector out;
    for (const auto& [r, c] : alg_.bracket_basis(x, m)) out.emplace_back(static_cast<int>(base + r), c);
    std::vector<int> J;
    for (int s = 0; s < k; ++s) {
        for (const auto& [a, c] : pre_[x][I[s]]) {
            if (a != I[s] && std::binary_search(I.begin(), I.end(), a)) continue;
            // Replace I[s] by a and sort; `below` is the new position of a.
            J.clear();
            for (int t = 0; t < k; ++t)
                if (t != s) J.push_back(I[t]);
            const int below = static_cast<int>(std::lower_bound(J.begin(), J.end(), a) - J.begin());
            J.insert(J.begin() + below, a);
            const bool neg = std::abs(below - s) % 2 == 1;
            const std::int64_t row = w.rank(J.data()) * M + m;
            out.emplace_back(static_cast<int>(row), neg ? Scalar(c) : Scalar(-c));
        }
    }
    normalize(out);
    return out;
}

std::vector<int> IdealReduction::acting(Invariance inv) const {
    if (inv == Invariance::Levi) return complement_;
    std::vector<int> all(alg_.dimension());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

InvariantCochainSpace IdealReduction::solve(int k, Invariance inv, bool cocycles) const {
    if (k < 0 || k >= static_cast<int>(wedges_.size()) - 1) throw std::invalid_argument("degree out of range");
    InvariantCochainSpace out;
    out.degree = k;
    out.invariance = inv;
    out.cocycles_only = cocycles;
    out.ambient_dim = cx_.dim(k);

    // Blocks that some acting element links are solved together.
    const auto blocks = cx_.blocks(k);
    std::map<Grading::Key, int> key_of;
    std::vector<Grading::Key> keys;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        keys.push_back(cx_.grade(k, blocks[b].front()));
        key_of.emplace(keys.back(), static_cast<int>(b));
    }
    const Grading whole = Grading::detect(alg_, CoefficientModule::adjoint(alg_));
    UnionFind uf(static_cast<int>(blocks.size()));
    const std::vector<int> xs = acting(inv);
    for (int x : xs) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            Grading::Key shifted = keys[b];
            for (std::size_t t = 0; t < shifted.weight.size(); ++t) shifted.weight[t] += whole.algebra_weight[x][t];
            shifted.parity ^= whole.algebra_parity[x];
            auto it = key_of.find(shifted);
            if (it != key_of.end()) uf.unite(static_cast<int>(b), it->second);
        }
    }
    std::map<int, std::vector<std::int64_t>> components;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto& cols = components[uf.find(static_cast<int>(b))];
        cols.insert(cols.end(), blocks[b].begin(), blocks[b].end());
    }

    for (auto& [root, cols] : components) {
        std::sort(cols.begin(), cols.end());
        // Equation rows keyed by (acting element or -1 for d, target coordinate).
        std::map<std::pair<int, std::int64_t>, SparseVector> rows;
        for (std::size_t l = 0; l < cols.size(); ++l) {
            for (int x : xs)
                for (const auto& [t, c] : act(x, k, cols[l])) rows[{x, t}].emplace_back(static_cast<int>(l), c);
            if (cocycles)
                for (const auto& [t, c] : cx_.coboundary_column(k, cols[l]))
                    rows[{-1, t}].emplace_back(static_cast<int>(l), c);
        }
        std::vector<SparseVector> eqs;
        eqs.reserve(rows.size());
        for (auto& [key, r] : rows) eqs.push_back(std::move(r));
        for (auto& v : null_space(eqs, static_cast<int>(cols.size()))) {
            SparseVector global;
            for (const auto& [l, c] : v) global.emplace_back(static_cast<int>(cols[l]), c);
            normalize(global);
            out.basis.push_back(std::move(global));
        }
    }
    std::sort(out.basis.begin(), out.basis.end());
    return out;
}

InvariantCochainSpace IdealReduction::invariant_cochains(int k, Invariance inv) const { return solve(k, inv, false); }

InvariantCochainSpace IdealReduction::invariant_cocycles(int k, Invariance inv) const { return solve(k, inv, true); }

std::vector<SparseVector> IdealReduction::invariant_coboundaries(int k, Invariance inv) const {
    std::vector<SparseVector> out;
    if (k <= 0) return out;
    ExactEliminator e;
    for (const auto& v : invariant_cochains(k - 1, inv).basis) {
        SparseVector image = cx_.apply(k - 1, v);
        if (e.add(image)) out.push_back(std::move(image));
    }
    return out;
}

std::int64_t IdealReduction::invariant_coboundary_dim(int k, Invariance inv) const {
    return static_cast<std::int64_t>(invariant_coboundaries(k, inv).size());
}

CohomologyReport IdealReduction::cohomology(int k, Invariance inv) const {
    CohomologyReport rep;
    rep.algebra = alg_.name();
    rep.module = "adjoint";
    rep.degree = k;
    const auto cochains = invariant_cochains(k, inv);
    const auto cocycles = invariant_cocycles(k, inv);
    rep.dim_prev = k > 0 ? static_cast<std::int64_t>(invariant_cochains(k - 1, inv).dimension()) : 0;
    rep.dim_k = static_cast<std::int64_t>(cochains.dimension());
    rep.dim_next = cx_.dim(k + 1);
    rep.rank_prev = invariant_coboundary_dim(k, inv);
    rep.rank_k = rep.dim_k - static_cast<std::int64_t>(cocycles.dimension());
    rep.betti = static_cast<std::int64_t>(cocycles.dimension()) - rep.rank_prev;
    rep.method.method = RankMethod::Exact;
    rep.dd_zero_verified = k == 0 ? cx_.dd_zero(0) : cx_.dd_zero(k - 1);
    rep.route = "invariant-reduction(" + invariance_name(inv) + ")";
    rep.note = "dimensions are of invariant cochains on the ideal; dim_next is the ambient cochain dimension";
    return rep;
}

SparseVector IdealReduction::one_cochain(const std::map<int, SparseVector>& values) const {
    const int M = alg_.dimension();
    SparseVector out;
    for (const auto& [a, v] : values) {
        if (a < 0 || a >= M || local_[a] < 0) throw std::invalid_argument("argument is not in the ideal");
        for (const auto& [m, c] : v) out.emplace_back(local_[a] * M + m, c);
    }
    normalize(out);
    return out;
}

SparseVector IdealReduction::two_cochain(const std::vector<std::tuple<int, int, SparseVector>>& values) const {
    const int M = alg_.dimension();
    SparseVector out;
    for (const auto& [a, b, v] : values) {
        if (a < 0 || b < 0 || a >= M || b >= M || local_[a] < 0 || local_[b] < 0)
            throw std::invalid_argument("argument is not in the ideal");
        if (a == b) throw std::invalid_argument("alternating cochain needs distinct arguments");
        int s[2] = {local_[a], local_[b]};
        const bool swap = s[0] > s[1];
        if (swap) std::swap(s[0], s[1]);
        const std::int64_t base = wedges_[2].rank(s) * M;
        for (const auto& [m, c] : v) out.emplace_back(static_cast<int>(base + m), swap ? Scalar(-c) : c);
    }
    normalize(out);
    return out;
}

}  // namespace newstein

namespace newstein {

namespace {

NewsteinLayout layout_of(const LieAlgebra& alg) { return NewsteinLayout{alg.dimension() == 41 ? 2 : 3}; }

SparseVector one(int i, const Scalar& c = 1) { return {{i, c}}; }

}  // namespace

SparseVector newstein_central(const LieAlgebra& alg) {
    const NewsteinLayout lay = layout_of(alg);
    SparseVector c;
    for (int mu = 1; mu <= 4; ++mu) c.emplace_back(lay.C(mu, mu), Scalar(metric(mu, mu)));
    normalize(c);
    return c;
}

std::vector<SparseVector> derivation_family(const IdealReduction& red) {
    const NewsteinLayout lay = layout_of(red.algebra());
    const int n = lay.internal;
    auto build = [&](int slot) {
        std::map<int, SparseVector> f;
        for (int mu = 1; mu <= 4; ++mu) {
            if (slot == 0) f[lay.T(mu)] = one(lay.T(mu));
            if (slot == 1) f[lay.Tp(mu)] = one(lay.Tp(mu));
            for (int i = 1; i <= n; ++i) {
                if (slot == 2) f[lay.A(i, mu)] = one(lay.A(i, mu));   // beta
                if (slot == 3) f[lay.Q(i, mu)] = one(lay.A(i, mu));   // beta'
                if (slot == 4) f[lay.A(i, mu)] = one(lay.Q(i, mu));   // gamma
                if (slot == 5) f[lay.Q(i, mu)] = one(lay.Q(i, mu));   // gamma'
            }
            if (slot == 2 || slot == 5)
                for (int nu = mu; nu <= 4; ++nu) f[lay.C(mu, nu)] = one(lay.C(mu, nu));
        }
        return red.one_cochain(f);
    };
    std::vector<SparseVector> out;
    for (int slot = 0; slot < 6; ++slot) out.push_back(build(slot));
    return out;
}

std::vector<SparseVector> translation_mixing_derivations(const IdealReduction& red) {
    const NewsteinLayout lay = layout_of(red.algebra());
    std::map<int, SparseVector> up, down;
    for (int mu = 1; mu <= 4; ++mu) {
        up[lay.T(mu)] = one(lay.Tp(mu));
        down[lay.Tp(mu)] = one(lay.T(mu));
    }
    return {red.one_cochain(up), red.one_cochain(down)};
}

std::vector<SparseVector> heisenberg_coboundary_family(const IdealReduction& red) {
    const NewsteinLayout lay = layout_of(red.algebra());
    const SparseVector c = newstein_central(red.algebra());
    std::vector<std::tuple<int, int, SparseVector>> plain, trace;
    for (int i = 1; i <= lay.internal; ++i)
        for (int mu = 1; mu <= 4; ++mu)
            for (int nu = 1; nu <= 4; ++nu) {
                plain.emplace_back(lay.A(i, mu), lay.Q(i, nu), one(lay.C(mu, nu)));
                if (mu == nu) {
                    SparseVector v = c;
                    for (auto& [k, x] : v) x *= metric(mu, nu);
                    trace.emplace_back(lay.A(i, mu), lay.Q(i, nu), v);
                }
            }
    return {red.two_cochain(plain), red.two_cochain(trace)};
}

namespace {

std::vector<std::vector<std::tuple<int, int, SparseVector>>> translation_cocycle_values(const LieAlgebra& alg) {
    const NewsteinLayout lay = layout_of(alg);
    const SparseVector c = newstein_central(alg);
    std::vector<std::tuple<int, int, SparseVector>> sym, trace;
    for (int mu = 1; mu <= 4; ++mu)
        for (int nu = 1; nu <= 4; ++nu) {
            sym.emplace_back(lay.T(mu), lay.Tp(nu), one(lay.C(mu, nu)));
            if (mu == nu) {
                SparseVector v = c;
                for (auto& [k, x] : v) x *= metric(mu, nu);
                trace.emplace_back(lay.T(mu), lay.Tp(nu), v);
            }
        }
    return {sym, trace};
}

}  // namespace

std::vector<SparseVector> translation_cocycles(const IdealReduction& red) {
    std::vector<SparseVector> out;
    for (const auto& values : translation_cocycle_values(red.algebra())) out.push_back(red.two_cochain(values));
    return out;
}

std::vector<SparseVector> translation_cocycles_on_algebra(const CochainComplex& cx) {
    const int n = cx.algebra().dimension();
    const int M = cx.module().dim;
    WedgeIndex w(n, 2);
    std::vector<SparseVector> out;
    for (const auto& values : translation_cocycle_values(cx.algebra())) {
        SparseVector f;
        for (const auto& [a, b, v] : values) {
            const int s[2] = {a, b};  // T precedes T' in the basis order
            for (const auto& [m, x] : v) f.emplace_back(static_cast<int>(w.rank(s) * M + m), x);
        }
        normalize(f);
        out.push_back(std::move(f));
    }
    return out;
}

SpanComparison compare_span(const std::vector<SparseVector>& family, const std::vector<SparseVector>& space) {
    SpanComparison out;
    ExactEliminator fam, sp;
    for (const auto& v : family) fam.add(v);
    for (const auto& v : space) sp.add(v);
    out.family_rank = fam.rank();
    out.space_dim = sp.rank();
    out.contained = std::all_of(family.begin(), family.end(), [&](const SparseVector& v) { return sp.in_span(v); });
    return out;
}

}  // namespace newstein
