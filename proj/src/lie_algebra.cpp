#include "newstein/lie_algebra.hpp"

#include "newstein/exact_linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <regex>
#include <thread>
#include <tuple>

namespace newstein {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

}  // namespace

BasisLabel BasisLabel::make(Kind k, int i, int j) {
    BasisLabel l;
    l.kind = k;
    l.i = i;
    l.j = j;
    return l;
}

BasisLabel BasisLabel::other(std::string name) {
    BasisLabel l;
    l.kind = Kind::Other;
    l.text = std::move(name);
    return l;
}

std::string BasisLabel::name() const {
    auto s = [](int x) { return std::to_string(x); };
    switch (kind) {
        case Kind::L: return "L" + s(i) + s(j);
        case Kind::T: return "T" + s(i);
        case Kind::Tp: return "Tp" + s(i);
        case Kind::C: return "C" + s(i) + s(j);
        case Kind::A: return "A" + s(i) + "_" + s(j);
        case Kind::Q: return "Q" + s(i) + "_" + s(j);
        case Kind::J: return i == 0 ? "J" : "J" + s(i) + s(j);
        case Kind::K: return "K";
        case Kind::Other: return text;
    }
    return text;
}

BasisLabel BasisLabel::parse(const std::string& name) {
    static const std::regex two(R"(^(L|C|J)([1-4])([1-4])$)");
    static const std::regex one(R"(^(T|Tp)([1-4])$)");
    static const std::regex pair(R"(^(A|Q)([1-3])_([1-4])$)");
    std::smatch m;
    if (std::regex_match(name, m, two)) {
        Kind k = m[1] == "L" ? Kind::L : m[1] == "C" ? Kind::C : Kind::J;
        return make(k, std::stoi(m[2]), std::stoi(m[3]));
    }
    if (std::regex_match(name, m, one)) return make(m[1] == "T" ? Kind::T : Kind::Tp, std::stoi(m[2]));
    if (std::regex_match(name, m, pair))
        return make(m[1] == "A" ? Kind::A : Kind::Q, std::stoi(m[2]), std::stoi(m[3]));
    if (name == "J") return make(Kind::J);
    if (name == "K") return make(Kind::K);
    return other(name);
}

AlgebraElement::AlgebraElement(std::uint64_t algebra_id, int dim, SparseVector coeffs)
    : algebra_id_(algebra_id), dim_(dim), coeffs_(std::move(coeffs)) {
    normalize(coeffs_);
    for (const auto& [i, x] : coeffs_)
        if (i < 0 || i >= dim_) throw std::out_of_range("coefficient index outside the basis");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (o.algebra_id_ != algebra_id_) throw MismatchedAlgebra();
    AlgebraElement r = *this;
    axpy(r.coeffs_, 1, o.coeffs_);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    if (o.algebra_id_ != algebra_id_) throw MismatchedAlgebra();
    AlgebraElement r = *this;
    axpy(r.coeffs_, -1, o.coeffs_);
    return r;
}

AlgebraElement AlgebraElement::operator-() const { return Scalar(-1) * *this; }

AlgebraElement operator*(const Scalar& a, const AlgebraElement& x) {
    AlgebraElement r(x.algebra_id_, x.dim_);
    axpy(r.coeffs_, a, x.coeffs_);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return algebra_id_ == o.algebra_id_ && coeffs_ == o.coeffs_;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<BasisLabel> labels, StructureConstants constants) {
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->labels = std::move(labels);
    const int n = static_cast<int>(d->labels.size());
    if (n <= 0) throw std::invalid_argument("algebra must have positive dimension");
    for (int i = 0; i < n; ++i) {
        if (!d->by_name.emplace(d->labels[i].name(), i).second)
            throw std::invalid_argument("duplicate label " + d->labels[i].name());
    }
    for (auto it = constants.begin(); it != constants.end();) {
        auto [i, j] = it->first;
        if (i < 0 || j >= n || i >= j) throw std::invalid_argument("structure constant key must satisfy 0 <= i < j < dim");
        normalize(it->second);
        for (const auto& [k, x] : it->second)
            if (k < 0 || k >= n) throw std::invalid_argument("structure constant term outside the basis");
        if (it->second.empty())
            it = constants.erase(it);
        else
            ++it;
    }
    d->constants = std::move(constants);
    d->table.assign(static_cast<std::size_t>(n) * n, nullptr);
    for (const auto& [key, v] : d->constants) d->table[key.first * n + key.second] = &v;
    d->id = next_algebra_id++;
    d_ = std::move(d);
}

int LieAlgebra::index_of(const BasisLabel& l) const { return index_of(l.name()); }

int LieAlgebra::index_of(const std::string& name) const {
    auto it = d_->by_name.find(name);
    if (it == d_->by_name.end()) throw std::out_of_range("no basis element named " + name);
    return it->second;
}

SparseVector LieAlgebra::bracket_basis(int i, int j) const {
    const int n = dimension();
    if (i == j) return {};
    if (i < j) {
        const SparseVector* v = d_->table[i * n + j];
        return v ? *v : SparseVector{};
    }
    const SparseVector* v = d_->table[j * n + i];
    if (!v) return {};
    SparseVector r = *v;
    for (auto& e : r) e.second = -e.second;
    return r;
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    if (x.algebra_id() != id() || y.algebra_id() != id()) throw MismatchedAlgebra();
    SparseVector out;
    for (const auto& [i, a] : x.coeffs())
        for (const auto& [j, b] : y.coeffs()) {
            if (i == j) continue;
            Scalar ab = a * b;
            for (const auto& [k, c] : bracket_basis(i, j)) out.emplace_back(k, ab * c);
        }
    return AlgebraElement(id(), dimension(), std::move(out));
}

AlgebraElement LieAlgebra::basis(int i) const {
    if (i < 0 || i >= dimension()) throw std::out_of_range("basis index");
    return AlgebraElement(id(), dimension(), {{i, Scalar(1)}});
}

AlgebraElement LieAlgebra::element(SparseVector coeffs) const {
    return AlgebraElement(id(), dimension(), std::move(coeffs));
}

int default_workers() {
    if (const char* s = std::getenv("NEWSTEIN_WORKERS")) {
        int w = std::atoi(s);
        if (w > 0) return w;
    }
    return 1;
}

namespace {

// [[e_i, e_j], e_k] accumulated into out with factor +1.
void add_double_bracket(const LieAlgebra& alg, int i, int j, int k, SparseVector& out) {
    for (const auto& [m, c] : alg.bracket_basis(i, j))
        for (const auto& [r, d] : alg.bracket_basis(m, k)) out.emplace_back(r, c * d);
}

}  // namespace

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& alg, int workers) {
    if (workers <= 0) workers = default_workers();
    const int n = alg.dimension();
    std::vector<std::vector<JacobiViolation>> found(workers);
    auto run = [&](int w) {
        // Strided over i so the partition does not affect the result set.
        for (int i = w; i < n; i += workers)
            for (int j = i; j < n; ++j)
                for (int k = j; k < n; ++k) {
                    SparseVector s;
                    add_double_bracket(alg, i, j, k, s);
                    add_double_bracket(alg, j, k, i, s);
                    add_double_bracket(alg, k, i, j, s);
                    normalize(s);
                    if (!s.empty()) found[w].push_back({i, j, k, std::move(s)});
                }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    std::vector<JacobiViolation> all;
    for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    return all;
}

SparseExactMatrix adjoint(const LieAlgebra& alg, const AlgebraElement& x) {
    if (x.algebra_id() != alg.id()) throw MismatchedAlgebra();
    const int n = alg.dimension();
    SparseExactMatrix m(n, n);
    for (int c = 0; c < n; ++c) m.set_column(c, alg.bracket(x, alg.basis(c)).coeffs());
    return m;
}

std::vector<AlgebraElement> centralizer(const LieAlgebra& alg, const std::vector<AlgebraElement>& generators) {
    const int n = alg.dimension();
    std::vector<SparseVector> equations;
    for (const auto& g : generators) {
        // Row r of ad(g): sum over m of ad(g)[r][m] y_m = 0.
        SparseExactMatrix t = adjoint(alg, g).transpose();
        for (int r = 0; r < n; ++r)
            if (!t.column(r).empty()) equations.push_back(t.column(r));
    }
    std::vector<AlgebraElement> out;
    for (auto& v : null_space(equations, n)) out.push_back(alg.element(std::move(v)));
    return out;
}

}  // namespace newstein
