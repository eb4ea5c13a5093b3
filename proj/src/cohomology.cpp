#include "newstein/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <future>
#include <numeric>
#include <sstream>

namespace newstein {

// ---------------------------------------------------------------- modules

CoefficientModule CoefficientModule::trivial(const LieAlgebra& alg) {
    CoefficientModule m;
    m.kind = Kind::Trivial;
    m.dim = 1;
    m.action.assign(alg.dimension(), std::vector<SparseVector>(1));
    return m;
}

CoefficientModule CoefficientModule::adjoint(const LieAlgebra& alg) {
    const int n = alg.dimension();
    CoefficientModule m;
    m.kind = Kind::Adjoint;
    m.dim = n;
    m.action.assign(n, std::vector<SparseVector>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) m.action[x][y] = alg.bracket_basis(x, y);
    return m;
}

CoefficientModule CoefficientModule::explicit_module(const LieAlgebra& alg,
                                                     std::vector<std::vector<SparseVector>> action) {
    const int n = alg.dimension();
    if (static_cast<int>(action.size()) != n) throw std::invalid_argument("module needs one matrix per basis element");
    const int dim = action.empty() ? 0 : static_cast<int>(action[0].size());
    if (dim <= 0) throw std::invalid_argument("module dimension must be positive");
    for (auto& mats : action) {
        if (static_cast<int>(mats.size()) != dim) throw std::invalid_argument("module matrices differ in size");
        for (auto& col : mats) {
            normalize(col);
            for (const auto& [r, x] : col)
                if (r < 0 || r >= dim) throw std::invalid_argument("module matrix entry out of range");
        }
    }
    auto apply = [&](int x, const SparseVector& v) {
        SparseVector out;
        for (const auto& [m, a] : v)
            for (const auto& [r, b] : action[x][m]) out.emplace_back(r, a * b);
        normalize(out);
        return out;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const SparseVector br = alg.bracket_basis(x, y);
            for (int m = 0; m < dim; ++m) {
                SparseVector lhs;
                for (const auto& [z, c] : br) axpy(lhs, c, action[z][m]);
                SparseVector rhs = apply(x, action[y][m]);
                axpy(rhs, -1, apply(y, action[x][m]));
                if (lhs != rhs) throw std::invalid_argument("module matrices do not form a representation");
            }
        }
    CoefficientModule out;
    out.kind = Kind::Explicit;
    out.dim = dim;
    out.action = std::move(action);
    return out;
}

std::string CoefficientModule::kind_name() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::Adjoint: return "adjoint";
        case Kind::Explicit: return "explicit";
    }
    return "?";
}

// ---------------------------------------------------------------- grading

namespace {

struct Constraint {
    int out, a, b;  // weight[out] = weight[a] + weight[b]
};

std::vector<Constraint> grading_constraints(const LieAlgebra& alg, const CoefficientModule& module) {
    const int n = alg.dimension();
    std::vector<Constraint> cs;
    for (const auto& [key, v] : alg.constants())
        for (const auto& [k, c] : v) cs.push_back({k, key.first, key.second});
    for (int x = 0; x < n; ++x)
        for (int m = 0; m < module.dim; ++m)
            for (const auto& [r, c] : module.action[x][m]) cs.push_back({n + r, x, n + m});
    std::sort(cs.begin(), cs.end(), [](const Constraint& p, const Constraint& q) {
        return std::tie(p.out, p.a, p.b) < std::tie(q.out, q.a, q.b);
    });
    cs.erase(std::unique(cs.begin(), cs.end(),
                         [](const Constraint& p, const Constraint& q) {
                             return p.out == q.out && p.a == q.a && p.b == q.b;
                         }),
             cs.end());
    return cs;
}

// Null space over GF(2) of rows given as bitsets over `vars` unknowns.
std::vector<std::vector<bool>> gf2_null_space(std::vector<std::vector<bool>> rows, int vars) {
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < vars && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c]) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && rows[i][c])
                for (int j = 0; j < vars; ++j) rows[i][j] = rows[i][j] != rows[r][j];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(vars, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<bool>> basis;
    for (int f = 0; f < vars; ++f) {
        if (is_pivot[f]) continue;
        std::vector<bool> x(vars, false);
        x[f] = true;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            if (rows[i][f]) x[pivot_col[i]] = true;
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace

Grading Grading::none(int algebra_dim, int module_dim) {
    Grading g;
    g.algebra_weight.assign(algebra_dim, {});
    g.algebra_parity.assign(algebra_dim, 0);
    g.module_weight.assign(module_dim, {});
    g.module_parity.assign(module_dim, 0);
    return g;
}

Grading Grading::detect(const LieAlgebra& alg, const CoefficientModule& module) {
    const int n = alg.dimension();
    const int vars = n + module.dim;
    const auto cs = grading_constraints(alg, module);

    std::vector<SparseVector> eqs;
    for (const auto& c : cs) {
        SparseVector e = {{c.out, Scalar(1)}, {c.a, Scalar(-1)}, {c.b, Scalar(-1)}};
        normalize(e);
        eqs.push_back(std::move(e));
    }
    Grading g = none(n, module.dim);
    for (auto& v : null_space(eqs, vars)) {
        mpz_class l = 1;
        for (const auto& [i, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<long> w(vars, 0);
        for (const auto& [i, x] : v) {
            mpq_class y = x * l;
            w[i] = y.get_num().get_si();
        }
        for (int b = 0; b < n; ++b) g.algebra_weight[b].push_back(w[b]);
        for (int m = 0; m < module.dim; ++m) g.module_weight[m].push_back(w[n + m]);
    }

    std::vector<std::vector<bool>> rows;
    for (const auto& c : cs) {
        std::vector<bool> row(vars, false);
        row[c.out] = !row[c.out];
        row[c.a] = !row[c.a];
        row[c.b] = !row[c.b];
        if (std::any_of(row.begin(), row.end(), [](bool b) { return b; })) rows.push_back(std::move(row));
    }
    auto z2 = gf2_null_space(std::move(rows), vars);
    if (z2.size() > 64) z2.resize(64);
    for (std::size_t bit = 0; bit < z2.size(); ++bit) {
        for (int b = 0; b < n; ++b)
            if (z2[bit][b]) g.algebra_parity[b] |= 1ULL << bit;
        for (int m = 0; m < module.dim; ++m)
            if (z2[bit][n + m]) g.module_parity[m] |= 1ULL << bit;
    }
    return g;
}

bool Grading::is_compatible(const LieAlgebra& alg, const CoefficientModule& module) const {
    const int n = alg.dimension();
    auto weight = [&](int v) -> const std::vector<long>& { return v < n ? algebra_weight[v] : module_weight[v - n]; };
    auto parity = [&](int v) { return v < n ? algebra_parity[v] : module_parity[v - n]; };
    for (const auto& c : grading_constraints(alg, module)) {
        const auto& wo = weight(c.out);
        const auto& wa = weight(c.a);
        const auto& wb = weight(c.b);
        for (std::size_t t = 0; t < wo.size(); ++t)
            if (wo[t] != wa[t] + wb[t]) return false;
        if (parity(c.out) != (parity(c.a) ^ parity(c.b))) return false;
    }
    return true;
}

// ---------------------------------------------------------------- wedges

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

WedgeIndex::WedgeIndex(int n, int k) : n_(n), k_(k), size_(binomial(n, k)) {
    prefix_.assign(k, std::vector<std::int64_t>(n + 1, 0));
    for (int t = 0; t < k; ++t)
        for (int v = 0; v < n; ++v) prefix_[t][v + 1] = prefix_[t][v] + binomial(n - 1 - v, k - 1 - t);
}

std::int64_t WedgeIndex::rank(const int* s) const {
    std::int64_t r = 0;
    int prev = -1;
    for (int t = 0; t < k_; ++t) {
        r += prefix_[t][s[t]] - prefix_[t][prev + 1];
        prev = s[t];
    }
    return r;
}

std::vector<int> WedgeIndex::unrank(std::int64_t r) const {
    std::vector<int> s(k_);
    int v = 0;
    for (int t = 0; t < k_; ++t) {
        while (true) {
            const std::int64_t c = binomial(n_ - 1 - v, k_ - 1 - t);
            if (r < c) break;
            r -= c;
            ++v;
        }
        s[t] = v++;
    }
    return s;
}

// ---------------------------------------------------------------- rank

namespace {

std::int64_t modular_block_rank(const std::vector<SparseVector>& vs, std::uint64_t p) {
    ModularEliminator e(p);
    for (const auto& v : vs) e.add(v);
    return static_cast<std::int64_t>(e.rank());
}

struct BlockRanker {
    RankOptions opt;
    RankResult result;
    std::vector<std::uint64_t> primes;
    std::size_t next_spare = 0;

    explicit BlockRanker(const RankOptions& o) : opt(o) {
        result.method = o.method;
        if (o.method == RankMethod::Modular) {
            if (o.prime_count < 3) throw std::invalid_argument("modular rank needs at least 3 primes");
            const auto& all = default_primes();
            if (o.prime_count > static_cast<int>(all.size())) throw std::invalid_argument("too many primes requested");
            primes.assign(all.begin(), all.begin() + o.prime_count);
            next_spare = o.prime_count;
        }
    }

    void add_block(const std::vector<SparseVector>& vs) {
        if (opt.method == RankMethod::Exact) {
            ExactEliminator e;
            for (const auto& v : vs) e.add(v);
            result.rank += static_cast<std::int64_t>(e.rank());
            return;
        }
        const int workers = opt.workers > 0 ? opt.workers : default_workers();
        std::vector<std::int64_t> ranks(primes.size(), -1);
        while (true) {
            std::vector<std::size_t> failed;
            if (workers > 1) {
                std::vector<std::future<std::int64_t>> fs;
                for (std::size_t i = 0; i < primes.size(); ++i)
                    fs.push_back(std::async(std::launch::async, modular_block_rank, std::cref(vs), primes[i]));
                for (std::size_t i = 0; i < fs.size(); ++i) {
                    try {
                        ranks[i] = fs[i].get();
                    } catch (const PrimeDividesDenominator&) {
                        failed.push_back(i);
                    }
                }
            } else {
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    try {
                        ranks[i] = modular_block_rank(vs, primes[i]);
                    } catch (const PrimeDividesDenominator&) {
                        failed.push_back(i);
                    }
                }
            }
            if (failed.empty()) break;
            for (std::size_t i : failed) {
                if (next_spare >= default_primes().size()) throw std::runtime_error("ran out of replacement primes");
                result.replaced.push_back(primes[i]);
                primes[i] = default_primes()[next_spare++];
            }
        }
        for (std::size_t i = 1; i < ranks.size(); ++i)
            if (ranks[i] != ranks[0]) {
                std::ostringstream os;
                os << "modular ranks disagree: " << ranks[0] << " mod " << primes[0] << " vs " << ranks[i] << " mod "
                   << primes[i];
                throw RankDisagreement(os.str());
            }
        result.rank += ranks[0];
    }

    RankResult finish() {
        result.primes = primes;
        return result;
    }
};

}  // namespace

RankResult block_rank(const std::vector<std::vector<SparseVector>>& blocks, const RankOptions& opt) {
    BlockRanker r(opt);
    for (const auto& b : blocks) r.add_block(b);
    return r.finish();
}

std::string method_name(const RankResult& r) {
    if (r.method == RankMethod::Exact) return "exact";
    std::ostringstream os;
    os << "modular(";
    for (std::size_t i = 0; i < r.primes.size(); ++i) os << (i ? "," : "") << r.primes[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- complex

CochainComplex::CochainComplex(LieAlgebra alg, CoefficientModule module, std::optional<Grading> grading,
                               bool use_grading)
    : alg_(std::move(alg)), module_(std::move(module)), use_grading_(use_grading) {
    const int n = alg_.dimension();
    if (static_cast<int>(module_.action.size()) != n) throw std::invalid_argument("module does not match algebra");
    if (!use_grading)
        grading_ = Grading::none(n, module_.dim);
    else if (grading)
        grading_ = *grading;
    else
        grading_ = Grading::detect(alg_, module_);
    if (use_grading_ && !grading_.is_compatible(alg_, module_))
        throw std::invalid_argument("grading is not compatible with the algebra and module");
    into_.assign(n, {});
    for (const auto& [key, v] : alg_.constants())
        for (const auto& [c, x] : v) into_[c].emplace_back(key.first, key.second, x);
}

const WedgeIndex& CochainComplex::wedge(int k) const {
    auto it = wedge_.find(k);
    if (it == wedge_.end()) it = wedge_.emplace(k, WedgeIndex(alg_.dimension(), k)).first;
    return it->second;
}

std::int64_t CochainComplex::dim(int k) const {
    if (k < 0) return 0;
    return binomial(alg_.dimension(), k) * module_.dim;
}

SparseVector CochainComplex::coboundary_column(int k, std::int64_t column) const {
    const int n = alg_.dimension();
    const int M = module_.dim;
    const WedgeIndex& src = wedge(k);
    const WedgeIndex& dst = wedge(k + 1);
    const std::vector<int> I = src.unrank(column / M);
    const int m = static_cast<int>(column % M);
    SparseVector out;
    std::vector<int> J(k + 1);

    // x_j . f(I) for j not in I.
    for (int j = 0; j < n; ++j) {
        if (std::binary_search(I.begin(), I.end(), j)) continue;
        int pos = 0;
        for (int t = 0, u = 0; t <= k; ++t) {
            if (u < k && I[u] < j)
                J[t] = I[u++];
            else if (t == u) {
                J[t] = j;
                pos = t;
            } else
                J[t] = I[u++];
        }
        const std::int64_t base = dst.rank(J.data()) * M;
        const bool neg = pos % 2 == 1;
        for (const auto& [r, c] : module_.action[j][m])
            out.emplace_back(static_cast<int>(base + r), neg ? Scalar(-c) : c);
    }

    // f([x_a, x_b], rest) with [x_a, x_b] having a component on I[p].
    std::vector<int> rest(k > 0 ? k - 1 : 0);
    for (int p = 0; p < k; ++p) {
        for (int t = 0, u = 0; t < k; ++t)
            if (t != p) rest[u++] = I[t];
        for (const auto& [a, b, c] : into_[I[p]]) {
            if (std::binary_search(rest.begin(), rest.end(), a) || std::binary_search(rest.begin(), rest.end(), b))
                continue;
            // Merge rest with {a, b}.
            int ia = -1, ib = -1;
            for (int t = 0, u = 0, placed = 0; t <= k; ++t) {
                const int next_rest = u < k - 1 ? rest[u] : n;
                const int next_new = placed == 0 ? a : (placed == 1 ? b : n);
                if (next_new < next_rest) {
                    J[t] = next_new;
                    (placed == 0 ? ia : ib) = t;
                    ++placed;
                } else {
                    J[t] = next_rest;
                    ++u;
                }
            }
            const bool neg = (ia + ib + p) % 2 == 1;
            const std::int64_t row = dst.rank(J.data()) * M + m;
            out.emplace_back(static_cast<int>(row), neg ? Scalar(-c) : c);
        }
    }
    normalize(out);
    return out;
}

SparseVector CochainComplex::apply(int k, const SparseVector& cochain) const {
    SparseVector out;
    for (const auto& [col, a] : cochain)
        for (auto& [r, x] : coboundary_column(k, col)) out.emplace_back(r, a * x);
    normalize(out);
    return out;
}

SparseExactMatrix CochainComplex::coboundary_matrix(int k) const {
    const std::int64_t rows = dim(k + 1), cols = dim(k);
    if (rows > std::numeric_limits<int>::max() || cols > 5'000'000)
        throw std::invalid_argument("coboundary matrix too large to materialize; use rank()");
    SparseExactMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (std::int64_t c = 0; c < cols; ++c) m.set_column(static_cast<int>(c), coboundary_column(k, c));
    return m;
}

Grading::Key CochainComplex::grade(int k, std::int64_t column) const {
    const int M = module_.dim;
    const auto I = wedge(k).unrank(column / M);
    const int m = static_cast<int>(column % M);
    Grading::Key key;
    key.weight = grading_.module_weight[m];
    key.parity = grading_.module_parity[m];
    for (int i : I) {
        for (std::size_t t = 0; t < key.weight.size(); ++t) key.weight[t] -= grading_.algebra_weight[i][t];
        key.parity ^= grading_.algebra_parity[i];
    }
    return key;
}

std::vector<std::vector<std::int64_t>> CochainComplex::blocks(int k) const {
    std::map<Grading::Key, std::vector<std::int64_t>> by;
    const std::int64_t d = dim(k);
    for (std::int64_t c = 0; c < d; ++c) by[use_grading_ ? grade(k, c) : Grading::Key{}].push_back(c);
    std::vector<std::vector<std::int64_t>> out;
    for (auto& [key, cols] : by) out.push_back(std::move(cols));
    return out;
}

RankResult CochainComplex::rank(int k, const RankOptions& opt) const {
    BlockRanker r(opt);
    if (k < 0) return r.finish();
    for (const auto& block : blocks(k)) {
        std::vector<SparseVector> images;
        images.reserve(block.size());
        for (auto c : block) images.push_back(coboundary_column(k, c));
        r.add_block(images);
    }
    return r.finish();
}

bool CochainComplex::dd_zero(int k) const {
    for (std::int64_t c = 0; c < dim(k); ++c)
        if (!apply(k + 1, coboundary_column(k, c)).empty()) return false;
    return true;
}

bool CochainComplex::is_coboundary(int k, const SparseVector& cochain) const {
    if (cochain.empty()) return true;
    if (k == 0) return false;
    std::map<Grading::Key, SparseVector> parts;
    for (const auto& [c, x] : cochain) parts[use_grading_ ? grade(k, c) : Grading::Key{}].emplace_back(c, x);
    for (const auto& [key, part] : parts) {
        ExactEliminator e;
        for (std::int64_t c = 0; c < dim(k - 1); ++c)
            if (!use_grading_ || grade(k - 1, c) == key) e.add(coboundary_column(k - 1, c));
        if (!e.in_span(part)) return false;
    }
    return true;
}

bool CochainComplex::grading_respected(int k) const {
    for (std::int64_t c = 0; c < dim(k); ++c) {
        const auto g = grade(k, c);
        for (const auto& [r, x] : coboundary_column(k, c))
            if (grade(k + 1, r) != g) return false;
    }
    return true;
}

CohomologyReport betti(const LieAlgebra& alg, const CoefficientModule& module, int k, const BettiOptions& opt) {
    if (k < 0) throw std::invalid_argument("degree must be non-negative");
    CochainComplex cx(alg, module, std::nullopt, opt.use_grading);
    CohomologyReport rep;
    rep.algebra = alg.name();
    rep.module = module.kind_name();
    rep.degree = k;
    rep.dim_prev = cx.dim(k - 1);
    rep.dim_k = cx.dim(k);
    rep.dim_next = cx.dim(k + 1);
    RankResult prev = cx.rank(k - 1, opt.rank);
    RankResult cur = cx.rank(k, opt.rank);
    rep.rank_prev = prev.rank;
    rep.rank_k = cur.rank;
    rep.betti = rep.dim_k - rep.rank_k - rep.rank_prev;
    cur.replaced.insert(cur.replaced.end(), prev.replaced.begin(), prev.replaced.end());
    rep.method = cur;
    if (opt.verify_dd) rep.dd_zero_verified = k == 0 ? cx.dd_zero(0) : cx.dd_zero(k - 1);
    if (rep.method.method == RankMethod::Modular)
        rep.note = "modular ranks are lower bounds on the rational rank; unanimous agreement across primes makes the "
                   "betti number a high-confidence upper bound, not a proof";
    return rep;
}

}  // namespace newstein
