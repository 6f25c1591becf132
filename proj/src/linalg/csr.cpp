#include "helm/csr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "helm/kernels.hpp"

namespace helm::linalg {

CsrMatrix CooBuilder::finalize() const {
    std::vector<Entry> e = entries_;
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    std::vector<std::int64_t> row_ptr(rows_ + 1, 0);
    std::vector<std::int32_t> col;
    std::vector<cplx> val;
    col.reserve(e.size());
    val.reserve(e.size());
    std::size_t p = 0;
    while (p < e.size()) {
        std::size_t q = p;
        cplx s{};
        while (q < e.size() && e[q].i == e[p].i && e[q].j == e[p].j) s += e[q++].v;
        if (s != cplx{}) {
            col.push_back(e[p].j);
            val.push_back(s);
            ++row_ptr[e[p].i + 1];
        }
        p = q;
    }
    for (std::size_t r = 0; r < rows_; ++r) row_ptr[r + 1] += row_ptr[r];
    return CsrMatrix(rows_, cols_, std::move(row_ptr), std::move(col), std::move(val));
}

CsrMatrix::CsrMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_ptr,
                     std::vector<std::int32_t> col, std::vector<cplx> val)
    : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)), col_(std::move(col)),
      val_(std::move(val)) {
    if (row_ptr_.size() != rows_ + 1) throw std::invalid_argument("CsrMatrix: bad row_ptr");
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::int64_t q = row_ptr_[r] + 1; q < row_ptr_[r + 1]; ++q)
            if (col_[q - 1] >= col_[q])
                throw std::invalid_argument("CsrMatrix: column indices not increasing");
}

void CsrMatrix::matvec(const cplx* x, cplx* y) const {
    kernels::csr_matvec(rows_, row_ptr_.data(), col_.data(), val_.data(), x, y);
}

std::vector<cplx> CsrMatrix::matvec(const std::vector<cplx>& x) const {
    std::vector<cplx> y(rows_);
    matvec(x.data(), y.data());
    return y;
}

DenseMatrix CsrMatrix::to_dense() const {
    DenseMatrix d(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::int64_t q = row_ptr_[r]; q < row_ptr_[r + 1]; ++q) d(r, col_[q]) = val_[q];
    return d;
}

cplx CsrMatrix::at(std::size_t i, std::size_t j) const {
    auto lo = col_.begin() + row_ptr_[i];
    auto hi = col_.begin() + row_ptr_[i + 1];
    auto it = std::lower_bound(lo, hi, static_cast<std::int32_t>(j));
    if (it != hi && *it == static_cast<std::int32_t>(j)) return val_[it - col_.begin()];
    return {};
}

double CsrMatrix::row_norm(std::size_t i) const {
    double s = 0.0;
    for (std::int64_t q = row_ptr_[i]; q < row_ptr_[i + 1]; ++q) s += std::norm(val_[q]);
    return std::sqrt(s);
}

std::size_t CsrMatrix::bandwidth() const {
    std::size_t b = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::int64_t q = row_ptr_[r]; q < row_ptr_[r + 1]; ++q) {
            std::size_t d = static_cast<std::size_t>(
                std::abs(static_cast<std::int64_t>(r) - col_[q]));
            b = std::max(b, d);
        }
    return b;
}

bool CsrMatrix::identical(const CsrMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && row_ptr_ == o.row_ptr_ && col_ == o.col_ &&
           std::equal(val_.begin(), val_.end(), o.val_.begin(), o.val_.end(),
                      [](cplx a, cplx b) {
                          return a.real() == b.real() && a.imag() == b.imag();
                      });
}

bool CsrMatrix::is_structurally_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::int64_t q = row_ptr_[r]; q < row_ptr_[r + 1]; ++q) {
            cplx v = at(col_[q], r);
            if (std::abs(v - val_[q]) > 1e-14 * (std::abs(v) + std::abs(val_[q]) + 1e-300))
                return false;
        }
    return true;
}

CsrMatrix CsrMatrix::permute_symmetric(const std::vector<std::int32_t>& perm) const {
    if (perm.size() != rows_ || rows_ != cols_)
        throw std::invalid_argument("permute_symmetric: bad permutation");
    std::vector<std::int32_t> inv(rows_);
    for (std::size_t i = 0; i < rows_; ++i) inv[perm[i]] = static_cast<std::int32_t>(i);
    CooBuilder b(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::int64_t q = row_ptr_[r]; q < row_ptr_[r + 1]; ++q)
            b.add(inv[r], inv[col_[q]], val_[q]);
    return b.finalize();
}

std::vector<cplx> CsrMatrix::lower_band(std::size_t kl) const {
    std::vector<cplx> band((kl + 1) * rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::int64_t q = row_ptr_[r]; q < row_ptr_[r + 1]; ++q) {
            std::int64_t j = col_[q];
            if (j > static_cast<std::int64_t>(r)) continue;
            std::size_t off = r - j;
            if (off > kl) throw std::invalid_argument("lower_band: entry outside band");
            band[j * (kl + 1) + off] = val_[q];
        }
    return band;
}

std::vector<cplx> CsrMatrix::full_band(std::size_t kl, std::size_t ku) const {
    const std::size_t ldab = 2 * kl + ku + 1;
    std::vector<cplx> ab(ldab * rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::int64_t q = row_ptr_[r]; q < row_ptr_[r + 1]; ++q) {
            std::int64_t j = col_[q];
            std::int64_t d = static_cast<std::int64_t>(r) - j;
            if (d > static_cast<std::int64_t>(kl) || -d > static_cast<std::int64_t>(ku))
                throw std::invalid_argument("full_band: entry outside band");
            ab[j * ldab + (kl + ku + d)] = val_[q];
        }
    return ab;
}

std::vector<std::int32_t> rcm_ordering(const CsrMatrix& a) {
    const std::size_t n = a.rows();
    // Symmetrized adjacency (without self loops).
    std::vector<std::vector<std::int32_t>> adj(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::int64_t q = a.row_ptr()[r]; q < a.row_ptr()[r + 1]; ++q) {
            std::int32_t c = a.col()[q];
            if (c == static_cast<std::int32_t>(r)) continue;
            adj[r].push_back(c);
            adj[c].push_back(static_cast<std::int32_t>(r));
        }
    std::vector<std::int32_t> degree(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& v = adj[i];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        degree[i] = static_cast<std::int32_t>(v.size());
    }

    std::vector<char> visited(n, 0);
    std::vector<std::int32_t> order;
    order.reserve(n);

    auto bfs_from = [&](std::int32_t start, std::vector<std::int32_t>& out) {
        std::queue<std::int32_t> q;
        q.push(start);
        visited[start] = 1;
        std::int32_t last = start;
        while (!q.empty()) {
            std::int32_t u = q.front();
            q.pop();
            out.push_back(u);
            last = u;
            std::vector<std::int32_t> nb;
            for (std::int32_t v : adj[u])
                if (!visited[v]) nb.push_back(v);
            std::sort(nb.begin(), nb.end(), [&](std::int32_t x, std::int32_t y) {
                return degree[x] != degree[y] ? degree[x] < degree[y] : x < y;
            });
            for (std::int32_t v : nb) {
                visited[v] = 1;
                q.push(v);
            }
        }
        return last;
    };

    for (std::size_t seed = 0; seed < n; ++seed) {
        if (visited[seed]) continue;
        // Pick a pseudo-peripheral start: min degree in the component, then
        // one BFS hop to the farthest node.
        std::vector<std::int32_t> comp;
        std::int32_t far = bfs_from(static_cast<std::int32_t>(seed), comp);
        for (std::int32_t v : comp) visited[v] = 0;
        std::vector<std::int32_t> ordered;
        bfs_from(far, ordered);
        order.insert(order.end(), ordered.begin(), ordered.end());
    }
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace helm::linalg
