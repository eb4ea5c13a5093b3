#include "newstein/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace newstein {

void normalize(SparseVector& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    out.reserve(v.size());
    for (auto& [i, x] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += x;
        else
            out.emplace_back(i, std::move(x));
    }
    std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
    v = std::move(out);
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
    if (sgn(a) == 0 || x.empty()) return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(std::move(*iy++));
        } else if (iy == y.end() || ix->first < iy->first) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else {
            Scalar s = iy->second + a * ix->second;
            if (sgn(s) != 0) out.emplace_back(iy->first, std::move(s));
            ++iy;
            ++ix;
        }
    }
    y = std::move(out);
}

Scalar coefficient(const SparseVector& v, int index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != v.end() && it->first == index) return it->second;
    return 0;
}

SparseExactMatrix::SparseExactMatrix(int rows, int cols) : rows_(rows), columns_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

std::size_t SparseExactMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void SparseExactMatrix::set_column(int c, SparseVector v) {
    if (c < 0 || c >= cols()) throw std::out_of_range("column index");
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].first < 0 || v[k].first >= rows_) throw std::out_of_range("row index");
        if (sgn(v[k].second) == 0) throw std::invalid_argument("explicit zero");
        if (k > 0 && v[k - 1].first >= v[k].first) throw std::invalid_argument("unsorted column");
    }
    columns_[c] = std::move(v);
}

Scalar SparseExactMatrix::entry(int r, int c) const { return coefficient(columns_.at(c), r); }

SparseVector SparseExactMatrix::apply(const SparseVector& x) const {
    SparseVector y;
    for (const auto& [c, a] : x) {
        for (const auto& [r, m] : columns_.at(c)) y.emplace_back(r, a * m);
    }
    normalize(y);
    return y;
}

SparseExactMatrix SparseExactMatrix::operator*(const SparseExactMatrix& other) const {
    if (cols() != other.rows()) throw std::invalid_argument("dimension mismatch in product");
    SparseExactMatrix out(rows_, other.cols());
    for (int c = 0; c < other.cols(); ++c) out.columns_[c] = apply(other.columns_[c]);
    return out;
}

SparseExactMatrix SparseExactMatrix::transpose() const {
    SparseExactMatrix out(cols(), rows_);
    for (int c = 0; c < cols(); ++c)
        for (const auto& [r, x] : columns_[c]) out.columns_[r].emplace_back(c, x);
    return out;
}

bool SparseExactMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

}  // namespace newstein
