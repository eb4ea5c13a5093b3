#include "newstein/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace newstein {

namespace {

using IntVector = std::vector<std::pair<int, mpz_class>>;

IntVector to_primitive(const SparseVector& v) {
    mpz_class l = 1;
    for (const auto& [i, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    mpz_class g = 0;
    for (const auto& [i, x] : v) {
        mpz_class n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        out.emplace_back(i, std::move(n));
    }
    if (g > 1)
        for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    return out;
}

void make_primitive(IntVector& v) {
    mpz_class g = 0;
    for (const auto& e : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// a*v - b*w, with v[0] and w[0] cancelling by construction.
IntVector combine(const mpz_class& a, const IntVector& v, const mpz_class& b, const IntVector& w) {
    IntVector out;
    out.reserve(v.size() + w.size());
    auto iv = v.begin();
    auto iw = w.begin();
    while (iv != v.end() || iw != w.end()) {
        if (iw == w.end() || (iv != v.end() && iv->first < iw->first)) {
            out.emplace_back(iv->first, a * iv->second);
            ++iv;
        } else if (iv == v.end() || iw->first < iv->first) {
            out.emplace_back(iw->first, -b * iw->second);
            ++iw;
        } else {
            mpz_class s = a * iv->second - b * iw->second;
            if (s != 0) out.emplace_back(iv->first, std::move(s));
            ++iv;
            ++iw;
        }
    }
    return out;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

}  // namespace

IntVector ExactEliminator::reduce(IntVector v) const {
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) break;
        const IntVector& p = it->second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), v.front().second.get_mpz_t());
        mpz_class a = p.front().second / g;
        mpz_class b = v.front().second / g;
        v = combine(a, v, b, p);
        make_primitive(v);
    }
    return v;
}

bool ExactEliminator::add(const SparseVector& v) {
    IntVector r = reduce(to_primitive(v));
    if (r.empty()) return false;
    const int lead = r.front().first;
    pivots_.emplace(lead, std::move(r));
    return true;
}

bool ExactEliminator::in_span(const SparseVector& v) const { return reduce(to_primitive(v)).empty(); }

PrimeDividesDenominator::PrimeDividesDenominator(std::uint64_t p)
    : std::runtime_error("prime " + std::to_string(p) + " divides a denominator"), prime(p) {}

ModularEliminator::ModularEliminator(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (1ULL << 31)) throw std::invalid_argument("modulus must be an odd prime below 2^31");
}

bool ModularEliminator::add(const SparseVector& in) {
    ModVector v;
    v.reserve(in.size());
    for (const auto& [i, x] : in) {
        mpz_class den = x.get_den();
        mpz_class num = x.get_num();
        const std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p_);
        if (d == 0) throw PrimeDividesDenominator(p_);
        const std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p_);
        const std::uint64_t val = n * mod_inv(d, p_) % p_;
        if (val) v.emplace_back(i, static_cast<std::uint32_t>(val));
    }
    ModVector scratch;
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) break;
        const ModVector& p = it->second;  // leading entry is 1
        const std::uint64_t f = v.front().second;
        scratch.clear();
        scratch.reserve(v.size() + p.size());
        auto iv = v.begin() + 1;
        auto ip = p.begin() + 1;
        while (iv != v.end() || ip != p.end()) {
            if (ip == p.end() || (iv != v.end() && iv->first < ip->first)) {
                scratch.push_back(*iv++);
            } else {
                const std::uint64_t sub = f * ip->second % p_;
                if (iv == v.end() || ip->first < iv->first) {
                    scratch.emplace_back(ip->first, static_cast<std::uint32_t>((p_ - sub) % p_));
                    ++ip;
                } else {
                    const std::uint64_t s = (iv->second + p_ - sub) % p_;
                    if (s) scratch.emplace_back(iv->first, static_cast<std::uint32_t>(s));
                    ++iv;
                    ++ip;
                }
            }
        }
        std::swap(v, scratch);
    }
    if (v.empty()) return false;
    const std::uint64_t inv = mod_inv(v.front().second, p_);
    for (auto& e : v) e.second = static_cast<std::uint32_t>(e.second * inv % p_);
    const int lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
}

std::size_t exact_rank(const std::vector<SparseVector>& vectors) {
    ExactEliminator e;
    for (const auto& v : vectors) e.add(v);
    return e.rank();
}

std::size_t modular_rank(const std::vector<SparseVector>& vectors, std::uint64_t p) {
    ModularEliminator e(p);
    for (const auto& v : vectors) e.add(v);
    return e.rank();
}

const std::vector<std::uint64_t>& default_primes() {
    static const std::vector<std::uint64_t> primes = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                                      2147483579ULL, 2147483563ULL, 2147483549ULL};
    return primes;
}

std::vector<SparseVector> null_space(const std::vector<SparseVector>& equations, int n) {
    // Echelon form with unit leading entries, keyed by leading column.
    std::map<int, SparseVector> rows;
    for (const auto& e : equations) {
        SparseVector v = e;
        while (!v.empty()) {
            auto it = rows.find(v.front().first);
            if (it == rows.end()) break;
            Scalar f = v.front().second;
            axpy(v, -f, it->second);
        }
        if (v.empty()) continue;
        Scalar inv = 1 / v.front().second;
        for (auto& [i, x] : v) x *= inv;
        rows.emplace(v.front().first, std::move(v));
    }
    // Back substitution, largest pivot first, so each row is fully reduced.
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        // Rows with a larger pivot are already reduced, so subtracting them
        // cannot reintroduce another pivot column.
        SparseVector& r = it->second;
        std::vector<std::pair<int, Scalar>> hits;
        for (std::size_t k = 1; k < r.size(); ++k)
            if (rows.count(r[k].first)) hits.push_back(r[k]);
        for (const auto& [c, f] : hits) axpy(r, -f, rows.at(c));
    }
    std::vector<SparseVector> basis;
    for (int f = 0; f < n; ++f) {
        if (rows.count(f)) continue;
        SparseVector x{{f, Scalar(1)}};
        for (const auto& [p, r] : rows) {
            Scalar c = coefficient(r, f);
            if (sgn(c) != 0) x.emplace_back(p, -c);
        }
        normalize(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace newstein
